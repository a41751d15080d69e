//! Closed-form archimedean constants.

use crate::scalar::{Epsilon, GaussianRational, SymbolicValue};
use gt_core::rational::{int, pow_i, sign_pow};
use gt_core::Rational;
use serde::Serialize;

/// `b_n = n(n−1)/2`.
pub fn b(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `2^{−n(n−1)} (√−1)^{−b_{n−1}} (ε√−1)^{b_n(w−w′)} (−1)^{(m+1)b_n}`.
pub fn archzeta_constant(n: usize, w: i64, wp: i64, m: i64, eps: Epsilon) -> GaussianRational {
    let scale = pow_i(&int(2), -(2 * b(n))) * sign_pow((m + 1) * b(n));
    let i_part = GaussianRational::eps_i_pow(Epsilon::Plus, -b(n.saturating_sub(1)));
    let e_part = GaussianRational::eps_i_pow(eps, b(n) * (w - wp));
    (i_part * e_part).scaled(&scale)
}

/// The global constant divided by the central-character value `ω(δ)`, which
/// is not computed here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalConstant {
    /// `D_F^{n(n−1)m/2}`.
    pub discriminant_part: SymbolicValue,
    /// The per-place factor raised to the number of infinite places.
    pub archimedean_part: GaussianRational,
    pub excludes_central_character: bool,
}

/// `D_F^{n(n−1)m/2} ∏_v archzeta_constant(n, w, w′, m, ε)` over `places`
/// infinite places. The exponent `n(n−1)m/2` is always an integer.
pub fn global_constant_c(
    places: u32,
    n: usize,
    w: i64,
    wp: i64,
    m: i64,
    eps: Epsilon,
    disc: u64,
) -> GlobalConstant {
    let e = b(n) * m;
    let discriminant_part = SymbolicValue::rational(pow_i(&Rational::from_integer(disc.into()), e));
    GlobalConstant {
        discriminant_part,
        archimedean_part: archzeta_constant(n, w, wp, m, eps).pow(places),
        excludes_central_character: true,
    }
}

/// `(−1)^{Σ(i−1)d^dom_i} (ε√−1)^{Σ(i−1)d_i}` with `d^dom` the decreasing rearrangement.
pub fn whittaker_prefactor(d: &[i64], eps: Epsilon) -> GaussianRational {
    let mut dom = d.to_vec();
    dom.sort_unstable_by(|a, b| b.cmp(a));
    let weighted = |v: &[i64]| v.iter().enumerate().map(|(i, &x)| i as i64 * x).sum::<i64>();
    GaussianRational::eps_i_pow(eps, weighted(d)).scaled(&sign_pow(weighted(&dom)))
}

/// `(−1)^{(n−1)w′ + (m+1)b_n + ℓ(μ)}`.
pub fn coefc_closed_form(n: usize, wp: i64, m: i64, mu_total: i64) -> Rational {
    sign_pow((n as i64 - 1) * wp + (m + 1) * b(n) + mu_total)
}
