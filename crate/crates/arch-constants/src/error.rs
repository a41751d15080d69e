use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArchError {
    #[error("m = {m} is not critical: {reason}")]
    NotCritical { m: i64, reason: String },
    #[error("internal consistency failure: {0}")]
    Proportionality(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("Γ_C is evaluated only at positive half-integers, got {0}")]
    GammaArgument(String),
    #[error(transparent)]
    Core(#[from] gt_core::GtError),
    #[error(transparent)]
    Branch(#[from] branch_tensor::BranchError),
    #[error(transparent)]
    Pairing(#[from] pairings::PairingError),
    #[error(transparent)]
    Wedge(#[from] wedge::WedgeError),
}

impl ArchError {
    pub fn code(&self) -> &'static str {
        match self {
            ArchError::NotCritical { .. } => "E_NOT_CRITICAL",
            ArchError::Proportionality(_) => "E_INTERNAL",
            ArchError::LengthMismatch { .. } => "E_LENGTH",
            ArchError::GammaArgument(_) => "E_GAMMA_ARG",
            ArchError::Core(e) => e.code(),
            ArchError::Branch(e) => e.code(),
            ArchError::Pairing(e) => e.code(),
            ArchError::Wedge(e) => e.code(),
        }
    }
}
