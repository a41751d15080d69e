use crate::error::GtError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An integral weight `(λ₁,…,λₙ)`. Dominance is only enforced by
/// [`Weight::dominant`]; weights of patterns need not be dominant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight(entries)
    }

    /// Checked constructor for contexts that require `λ₁ ≥ … ≥ λₙ`.
    pub fn dominant(entries: Vec<i64>) -> Result<Self, GtError> {
        let w = Weight(entries);
        if w.is_dominant() {
            Ok(w)
        } else {
            Err(GtError::InvalidWeight(w.0))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// 1-based access.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    /// `λ^∨ = (−λₙ,…,−λ₁)`.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// `λ + l` with `l` added to every entry.
    pub fn shift(&self, l: i64) -> Weight {
        Weight(self.0.iter().map(|x| x + l).collect())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.len(), other.len());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|x| k * x).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// `ℓ(λ) = Σ λᵢ`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `(γₙ,…,γ₁)`.
    pub fn reversed(&self) -> Weight {
        Weight(self.0.iter().rev().copied().collect())
    }

    /// `λ₁ − λₙ` (zero for empty or length-one weights).
    pub fn spread(&self) -> i64 {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        }
    }

    /// Twice the half-sum of positive roots, `(n−1, n−3, …, 1−n)`.
    pub fn two_rho(n: usize) -> Weight {
        Weight((1..=n as i64).map(|i| n as i64 + 1 - 2 * i).collect())
    }

    /// Sorted non-increasingly.
    pub fn sorted_desc(&self) -> Weight {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Weight(v)
    }

    pub fn parse(s: &str) -> Result<Weight, GtError> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() {
            return Ok(Weight(vec![]));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| GtError::Parse(format!("bad weight entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `λ ⪰ μ`: `λ₁ ≥ μ₁ ≥ λ₂ ≥ … ≥ μ_{n−1} ≥ λₙ`.
pub fn interlaces(lambda: &Weight, mu: &Weight) -> Result<bool, GtError> {
    if mu.len() + 1 != lambda.len() {
        return Err(GtError::LengthMismatch {
            expected: lambda.len().saturating_sub(1),
            got: mu.len(),
        });
    }
    Ok((0..mu.len()).all(|i| lambda.0[i] >= mu.0[i] && mu.0[i] >= lambda.0[i + 1]))
}

/// `∏_{i<j} (λᵢ − λⱼ + j − i)/(j − i)`.
pub fn weyl_dim(lambda: &Weight) -> u128 {
    let n = lambda.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (lambda.0[i] - lambda.0[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}
