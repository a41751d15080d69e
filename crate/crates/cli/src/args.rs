use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "gtrep", about = "Exact Gelfand-Tsetlin computations for GL(n)", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Compute GT coefficients through the determinantal model.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Worker threads for grid runs (0 = all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// JSON-lines file of requests; each object mirrors the flags.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List G(λ) in descending lexicographic order.
    Patterns {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Keep only patterns of this weight.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Compare |G(λ)| with the Weyl dimension formula.
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Matrix of E_{i,j} on V_λ.
    Action {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    /// Inject ξ_M from V_μ into V_λ, or restrict with --restrict.
    Branch {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        pattern: String,
        #[arg(long)]
        restrict: bool,
    },
    /// Cartan injector images V_{λ+λ′} → V_λ ⊗ V_λ′.
    TensorCartan {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda_prime: String,
        /// Only the image of this pattern of λ+λ′.
        #[arg(long, allow_hyphen_values = true)]
        pattern: Option<String>,
        /// Also check the table against the tensor-product action.
        #[arg(long)]
        verify: bool,
    },
    /// Invariant pairing of two basis vectors.
    Pair {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        /// Pair V_λ with V_μ through the branching pairing instead of V_λ^∨.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        shift: i64,
    },
    /// Extract c^(m) and compare with its closed form.
    CoefcVerify(CoefcArgs),
    /// Critical m for a weight pair at every place.
    Critical {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = 1)]
        places: usize,
    },
    /// Gamma shifts of the archimedean Rankin-Selberg factor.
    Lfactor {
        #[arg(long, allow_hyphen_values = true)]
        d: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, allow_hyphen_values = true)]
        dprime: String,
        #[arg(long, allow_hyphen_values = true)]
        nuprime: String,
    },
    /// p-adic valuations of r(M) and of all E_{i,j} entries.
    PCheck {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Args)]
pub struct CoefcArgs {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub w: i64,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub wprime: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub m: i64,
    /// Run the full verification grid instead of one tuple.
    #[arg(long, conflicts_with_all = ["lambda", "mu"])]
    pub grid: bool,
    /// Record wall-clock time (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}
