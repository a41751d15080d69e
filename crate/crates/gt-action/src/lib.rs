//! `𝔤𝔩_n` acting on the rational Gel'fand–Tsetlin basis `{ξ_M}` of `V_λ`.

pub mod error;
pub mod group;
pub mod matrix;
pub mod molev;
pub mod pcheck;

pub use error::ActionError;
pub use group::{act_diagonal, act_longest, act_permutation, act_simple_reflection, exp_nilpotent};
pub use gt_core::RepVector;
pub use matrix::{act, basis, matrix_e, power_e_formula, ActionMatrix};
pub use molev::{apply_dminus_rep, apply_dplus_rep, RepModule};
pub use pcheck::{p_integral_check, EntryValuation, PIntegralReport};
