//! Invariant pairings `V_λ × V_{λ^∨} → 𝒜`, the conjugation `V_λ → V_{λ^∨}`,
//! determinant shifts and the invariant element of `V_d ⊗ V_{d^∨}`.

use branch_tensor::TensorVector;
use gt_core::rational::sign_pow;
use gt_core::{enumerate_patterns, interlaces, GTPattern, GtError, Rational, RepVector, Weight};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("weights V{left:?} and V{right:?} are not dual")]
    WeightMismatch { left: Vec<i64>, right: Vec<i64> },
    #[error("{mu:?} does not interlace {lambda:?}")]
    NotInterlacing { lambda: Vec<i64>, mu: Vec<i64> },
    #[error(transparent)]
    Core(#[from] GtError),
}

impl PairingError {
    pub fn code(&self) -> &'static str {
        match self {
            PairingError::WeightMismatch { .. } => "E_WEIGHT_MISMATCH",
            PairingError::NotInterlacing { .. } => "E_INTERLACE",
            PairingError::Core(e) => e.code(),
        }
    }
}

fn mismatch(a: &Weight, b: &Weight) -> PairingError {
    PairingError::WeightMismatch {
        left: a.0.clone(),
        right: b.0.clone(),
    }
}

/// `⟨ξ_M, ξ_N⟩_λ` for basis vectors: `(−1)^{q(M)} r(M)` if `M = N^∨`.
pub fn pair_basis(m: &GTPattern, n: &GTPattern) -> Rational {
    if m.dual() == *n {
        sign_pow(m.q()) * m.r()
    } else {
        Rational::zero()
    }
}

/// `⟨v, w⟩_λ` for `v ∈ V_λ`, `w ∈ V_{λ^∨}`.
pub fn pair_lambda(lambda: &Weight, v: &RepVector, w: &RepVector) -> Result<Rational, PairingError> {
    if v.lambda != *lambda {
        return Err(mismatch(lambda, &v.lambda));
    }
    if w.lambda != lambda.dual() {
        return Err(mismatch(lambda, &w.lambda));
    }
    let mut acc = Rational::zero();
    for (m, c) in &v.coords {
        if let Some(d) = w.coords.get(&m.dual()) {
            acc += sign_pow(m.q()) * m.r() * c * d;
        }
    }
    Ok(acc)
}

/// `⟨v, w⟩^{(l)}_{λ,μ}` for `v ∈ V_λ`, `w ∈ V_μ`, `μ − l ⪯ λ^∨`:
/// `ξ_M` pairs with `ξ_N` iff `M̂ = N^∨ + l`.
pub fn pair_lambda_mu(
    lambda: &Weight,
    mu: &Weight,
    l: i64,
    v: &RepVector,
    w: &RepVector,
) -> Result<Rational, PairingError> {
    if !interlaces(&lambda.dual(), &mu.shift(-l))? {
        return Err(PairingError::NotInterlacing {
            lambda: lambda.dual().0,
            mu: mu.shift(-l).0,
        });
    }
    if v.lambda != *lambda {
        return Err(mismatch(lambda, &v.lambda));
    }
    if w.lambda != *mu {
        return Err(mismatch(mu, &w.lambda));
    }
    let mut acc = Rational::zero();
    for (m, c) in &v.coords {
        let target = m.hat().dual().shift(l);
        if let Some(d) = w.coords.get(&target) {
            acc += sign_pow(m.q()) * m.r() * c * d;
        }
    }
    Ok(acc)
}

/// `ξ_M ↦ (−1)^{q(M)} ξ_{M^∨}`.
pub fn conj_map(lambda: &Weight, v: &RepVector) -> Result<RepVector, PairingError> {
    if v.lambda != *lambda {
        return Err(mismatch(lambda, &v.lambda));
    }
    let mut out = RepVector::zero(&lambda.dual());
    for (m, c) in &v.coords {
        out.add_term(m.dual(), sign_pow(m.q()) * c);
    }
    Ok(out)
}

/// `ξ_M ↦ ξ_{M−l}` from `V_λ` to `V_{λ−l}`.
pub fn det_shift(lambda: &Weight, l: i64, v: &RepVector) -> Result<RepVector, PairingError> {
    if v.lambda != *lambda {
        return Err(mismatch(lambda, &v.lambda));
    }
    Ok(RepVector::from_coords(
        &lambda.shift(-l),
        v.coords.iter().map(|(m, c)| (m.shift(-l), c.clone())),
    ))
}

/// `[id_{V_d}] = Σ_M (−1)^{q(M)} r(M)⁻¹ ξ_M ⊗ ξ_{M^∨}`.
pub fn id_element(d: &Weight) -> Result<TensorVector, PairingError> {
    let mut t = TensorVector::zero(d, &d.dual());
    for m in enumerate_patterns(d)? {
        let c = sign_pow(m.q()) / m.r();
        t.add_term(m.clone(), m.dual(), c);
    }
    Ok(t)
}

/// `v ↦ Σ ⟨v, y⟩_d x` for `t = Σ x ⊗ y ∈ V_d ⊗ V_{d^∨}`.
pub fn contract_second(d: &Weight, t: &TensorVector, v: &RepVector) -> Result<RepVector, PairingError> {
    if t.lambdas != (d.clone(), d.dual()) {
        return Err(mismatch(&t.lambdas.0, &t.lambdas.1));
    }
    let mut out = RepVector::zero(d);
    for ((x, y), c) in &t.coords {
        let p = pair_lambda(d, v, &RepVector::basis(y))?;
        out.add_term(x.clone(), p * c);
    }
    Ok(out)
}
