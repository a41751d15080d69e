use crate::error::ActionError;
use crate::matrix::{basis, matrix_e};
use gt_core::rational::{is_prime, p_valuation};
use gt_core::{GTPattern, Weight};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryValuation {
    pub i: usize,
    pub j: usize,
    pub from: GTPattern,
    pub to: GTPattern,
    pub valuation: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PIntegralReport {
    pub lambda: Weight,
    pub p: u64,
    /// `λ₁ − λₙ + n − 2`.
    pub bound: i64,
    pub above_bound: bool,
    pub r_valuations: Vec<(GTPattern, i64)>,
    pub entry_valuations: Vec<EntryValuation>,
    /// Every `r(M)` is a `p`-adic unit and every matrix entry is `p`-integral.
    pub self_dual_at_p: bool,
}

impl PIntegralReport {
    /// Above the bound the lattice must be self-dual.
    pub fn consistent(&self) -> bool {
        !self.above_bound || self.self_dual_at_p
    }
}

pub fn p_integral_check(lambda: &Weight, p: u64) -> Result<PIntegralReport, ActionError> {
    if !is_prime(p) {
        return Err(ActionError::NotPrime(p));
    }
    let n = lambda.len();
    let pats = basis(lambda)?;
    let r_valuations: Vec<(GTPattern, i64)> = pats
        .iter()
        .map(|m| (m.clone(), p_valuation(&m.r(), p).expect("r(M) is nonzero")))
        .collect();
    let mut entry_valuations = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for (from, to, c) in matrix_e(lambda, i, j)?.triplets() {
                entry_valuations.push(EntryValuation {
                    i,
                    j,
                    from: from.clone(),
                    to: to.clone(),
                    valuation: p_valuation(c, p).expect("stored entries are nonzero"),
                });
            }
        }
    }
    let self_dual_at_p = r_valuations.iter().all(|(_, v)| *v == 0)
        && entry_valuations.iter().all(|e| e.valuation >= 0);
    let bound = if n == 0 { 0 } else { lambda.spread() + n as i64 - 2 };
    Ok(PIntegralReport {
        lambda: lambda.clone(),
        p,
        bound,
        above_bound: p as i64 > bound,
        r_valuations,
        entry_valuations,
        self_dual_at_p,
    })
}
