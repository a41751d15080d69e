//! Pre-classes, the pairing `Ψ^{(m)}`, extraction of `c^{(m)}`, and the
//! explicit archimedean constants and Γ-factor data.

pub mod constants;
pub mod error;
pub mod exec;
pub mod gamma;
pub mod preclass;
pub mod psi;
pub mod scalar;

pub use constants::{archzeta_constant, b, coefc_closed_form, global_constant_c, whittaker_prefactor, GlobalConstant};
pub use error::ArchError;
pub use exec::Exec;
pub use gamma::{eval_gamma_c, gamma_n_factor, l_factor_arch, GammaProduct};
pub use preclass::{pre_class, pre_class_with, weight_d, PreClass, Quad};
pub use psi::{closed_form, critical_tuples, extract_cm, invariant_line, proportionality, psi_from_tables, psi_pairing, wedge_reduction, Tuple};
pub use scalar::{Epsilon, GaussianRational, SymbolicValue};
