use crate::error::GtError;
use crate::weight::Weight;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A weight per complex embedding, embeddings coming in conjugate pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingWeightFamily {
    weights: BTreeMap<String, Weight>,
    conj: BTreeMap<String, String>,
}

impl EmbeddingWeightFamily {
    /// `pairs` lists `(σ, λ_σ, σ̄, λ_σ̄)` once per conjugate pair.
    pub fn new(pairs: Vec<(String, Weight, String, Weight)>) -> Result<Self, GtError> {
        let mut weights = BTreeMap::new();
        let mut conj = BTreeMap::new();
        for (s, ws, t, wt) in pairs {
            if s == t || weights.contains_key(&s) || weights.contains_key(&t) {
                return Err(GtError::LabelMismatch);
            }
            weights.insert(s.clone(), ws);
            weights.insert(t.clone(), wt);
            conj.insert(s.clone(), t.clone());
            conj.insert(t, s);
        }
        let n = weights.values().next().map(|w| w.len());
        for w in weights.values() {
            if Some(w.len()) != n {
                return Err(GtError::LengthMismatch {
                    expected: n.unwrap_or(0),
                    got: w.len(),
                });
            }
            if !w.is_dominant() {
                return Err(GtError::InvalidWeight(w.0.clone()));
            }
        }
        Ok(EmbeddingWeightFamily { weights, conj })
    }

    /// Same weight at `places` conjugate pairs, labelled `v1, v1*, v2, …`.
    pub fn uniform(places: usize, lambda: &Weight) -> Result<Self, GtError> {
        EmbeddingWeightFamily::new(
            (1..=places)
                .map(|k| (format!("v{k}"), lambda.clone(), format!("v{k}*"), lambda.clone()))
                .collect(),
        )
    }

    pub fn labels(&self) -> impl Iterator<Item = &String> {
        self.weights.keys()
    }

    pub fn weight(&self, label: &str) -> Option<&Weight> {
        self.weights.get(label)
    }

    pub fn conjugate(&self, label: &str) -> Option<&str> {
        self.conj.get(label).map(String::as_str)
    }

    /// The `w` with `λ_σ − λ_σ̄^∨ = (w,…,w)` for every `σ`.
    pub fn purity_weight(&self) -> Option<i64> {
        let mut found = None;
        for (s, ws) in &self.weights {
            let wt = &self.weights[&self.conj[s]];
            let diff = ws.sub(&wt.dual());
            let w = *diff.0.first()?;
            if diff.0.iter().any(|&x| x != w) || found.is_some_and(|f| f != w) {
                return None;
            }
            found = Some(w);
        }
        found
    }
}

/// All `m` with `λ_σ^∨ ⪰ μ_σ + m` at every label, as an inclusive interval.
pub fn critical_points(
    lambda: &EmbeddingWeightFamily,
    mu: &EmbeddingWeightFamily,
) -> Result<Option<(i64, i64)>, GtError> {
    if !lambda.labels().eq(mu.labels()) {
        return Err(GtError::LabelMismatch);
    }
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for (s, l) in &lambda.weights {
        let m = &mu.weights[s];
        if m.len() + 1 != l.len() {
            return Err(GtError::LengthMismatch {
                expected: l.len() - 1,
                got: m.len(),
            });
        }
        let (a, b) = single_critical_range(l, m);
        lo = lo.max(a);
        hi = hi.min(b);
    }
    Ok((lo <= hi).then_some((lo, hi)))
}

/// Bounds on `m` for a single pair `λ^∨ ⪰ μ + m`; empty when `lo > hi`.
pub fn single_critical_range(lambda: &Weight, mu: &Weight) -> (i64, i64) {
    let d = lambda.dual();
    let mut lo = i64::MIN;
    let mut hi = i64::MAX;
    for i in 0..mu.len() {
        hi = hi.min(d.0[i] - mu.0[i]);
        lo = lo.max(d.0[i + 1] - mu.0[i]);
    }
    (lo, hi)
}
