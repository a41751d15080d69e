//! Γ-factor data as multisets of shifts, and exact values of `Γ_C`.

use crate::error::ArchError;
use crate::scalar::SymbolicValue;
use gt_core::rational::{factorial, fmt_rational, frac, int, pow_i};
use gt_core::Rational;
use num_traits::Signed;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// `∏_k Γ(s + α_k)` stored as the multiset `{α_k}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GammaProduct {
    pub shifts: BTreeMap<Rational, usize>,
}

impl GammaProduct {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn push(&mut self, alpha: Rational) {
        *self.shifts.entry(alpha).or_insert(0) += 1;
    }

    /// Number of Γ factors, counted with multiplicity.
    pub fn len(&self) -> usize {
        self.shifts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.shifts.is_empty()
    }

    /// Multiset union.
    pub fn product(&self, other: &GammaProduct) -> GammaProduct {
        let mut out = self.clone();
        for (a, k) in &other.shifts {
            *out.shifts.entry(a.clone()).or_insert(0) += k;
        }
        out
    }

    /// Shifts in increasing order, repeated by multiplicity.
    pub fn to_vec(&self) -> Vec<Rational> {
        self.shifts
            .iter()
            .flat_map(|(a, &k)| std::iter::repeat(a.clone()).take(k))
            .collect()
    }
}

impl FromIterator<Rational> for GammaProduct {
    fn from_iter<I: IntoIterator<Item = Rational>>(it: I) -> Self {
        let mut g = GammaProduct::empty();
        for a in it {
            g.push(a);
        }
        g
    }
}

impl Serialize for GammaProduct {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.to_vec().iter().map(fmt_rational).collect();
        v.serialize(s)
    }
}

fn half_abs(x: i64) -> Rational {
    frac(x.abs(), 2)
}

/// `Γ_n(ν; d) = ∏_{i<j} Γ(ν_i − ν_j + 1 + |d_i − d_j|/2)`, as shifts at `s = 0`.
pub fn gamma_n_factor(nu: &[Rational], d: &[i64]) -> Result<GammaProduct, ArchError> {
    if nu.len() != d.len() {
        return Err(ArchError::LengthMismatch { expected: nu.len(), got: d.len() });
    }
    let n = nu.len();
    let mut g = GammaProduct::empty();
    for i in 0..n {
        for j in i + 1..n {
            g.push(&nu[i] - &nu[j] + int(1) + half_abs(d[i] - d[j]));
        }
    }
    Ok(g)
}

/// Shifts `ν_i + ν′_j + |d_i + d′_j|/2` of the local Rankin–Selberg factor.
pub fn l_factor_arch(
    d: &[i64],
    nu: &[Rational],
    dp: &[i64],
    nup: &[Rational],
) -> Result<GammaProduct, ArchError> {
    if nu.len() != d.len() {
        return Err(ArchError::LengthMismatch { expected: d.len(), got: nu.len() });
    }
    if nup.len() != dp.len() {
        return Err(ArchError::LengthMismatch { expected: dp.len(), got: nup.len() });
    }
    if !d.is_empty() && dp.len() + 1 != d.len() {
        return Err(ArchError::LengthMismatch { expected: d.len() - 1, got: dp.len() });
    }
    let mut g = GammaProduct::empty();
    for i in 0..d.len() {
        for j in 0..dp.len() {
            g.push(&nu[i] + &nup[j] + half_abs(d[i] + dp[j]));
        }
    }
    Ok(g)
}

/// `Γ_C(s) = 2(2π)^{−s} Γ(s)` at a positive half-integer.
pub fn eval_gamma_c(arg: &Rational) -> Result<SymbolicValue, ArchError> {
    let twice = arg * int(2);
    if !arg.is_positive() || !twice.is_integer() {
        return Err(ArchError::GammaArgument(fmt_rational(arg)));
    }
    let two = int(2);
    if arg.is_integer() {
        // 2^{1−k} (k−1)! π^{−k}
        let k: i64 = arg.to_integer().try_into().expect("argument fits in i64");
        Ok(SymbolicValue {
            rational: pow_i(&two, 1 - k) * Rational::from_integer(factorial(k - 1)),
            pi_power: -k,
            sqrt2: false,
        })
    } else {
        // s = k + 1/2: Γ(s) = (2k)! √π / (4^k k!), so Γ_C(s) = 2^{1/2−k} (2k)!/(4^k k!) π^{−k}
        let k: i64 = ((arg - frac(1, 2)).to_integer()).try_into().expect("argument fits in i64");
        let gamma = Rational::new(factorial(2 * k), factorial(k)) / pow_i(&int(4), k);
        Ok(SymbolicValue {
            rational: pow_i(&two, -k) * gamma,
            pi_power: -k,
            sqrt2: true,
        })
    }
}
