//! Polynomial model of `V_λ` inside `ℚ[z, (det z)^{-1}]` with `R(g)f(z) = f(zg)`.

pub mod basis;
pub mod error;
pub mod generators;
pub mod linalg;
pub mod matrices;
pub mod poly;

pub use basis::{coords_in_xi, xi_polynomial, xi_table};
pub use error::DetError;
pub use generators::{generator_f, h_gamma, h_lambda, h_lambda_mu, ExponentFamily};
pub use poly::{det_minor, PolyModule, PolyVector};
