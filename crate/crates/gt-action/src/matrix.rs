use crate::error::ActionError;
use gt_core::rational::{factorial, fmt_rational, int, rational_sqrt};
use gt_core::{enumerate_patterns, GTPattern, Rational, RepVector, Weight};
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// Matrix of `τ_λ(E_{i,j})` in the ξ-basis. `rows[M]` is the image of `ξ_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    pub lambda: Weight,
    pub rows: BTreeMap<GTPattern, BTreeMap<GTPattern, Rational>>,
}

impl ActionMatrix {
    fn empty(lambda: &Weight) -> Self {
        ActionMatrix {
            lambda: lambda.clone(),
            rows: BTreeMap::new(),
        }
    }

    fn push(&mut self, from: &GTPattern, to: GTPattern, c: Rational) {
        if c.is_zero() {
            return;
        }
        let row = self.rows.entry(from.clone()).or_default();
        let e = row.entry(to).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            row.retain(|_, x| !x.is_zero());
            if row.is_empty() {
                self.rows.remove(from);
            }
        }
    }

    /// Coefficient of `ξ_to` in the image of `ξ_from`.
    pub fn entry(&self, from: &GTPattern, to: &GTPattern) -> Rational {
        self.rows
            .get(from)
            .and_then(|r| r.get(to))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn apply(&self, v: &RepVector) -> RepVector {
        let mut out = RepVector::zero(&self.lambda);
        for (m, c) in &v.coords {
            if let Some(row) = self.rows.get(m) {
                for (t, x) in row {
                    out.add_term(t.clone(), c * x);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ActionMatrix) -> ActionMatrix {
        let mut out = ActionMatrix::empty(&self.lambda);
        for (m, row) in &other.rows {
            for (mid, c) in row {
                if let Some(r2) = self.rows.get(mid) {
                    for (t, x) in r2 {
                        out.push(m, t.clone(), c * x);
                    }
                }
            }
        }
        out
    }

    /// `self − other`.
    pub fn sub(&self, other: &ActionMatrix) -> ActionMatrix {
        let mut out = self.clone();
        for (m, row) in &other.rows {
            for (t, x) in row {
                out.push(m, t.clone(), -x.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Nonzero entries as `(from, to, coeff)`.
    pub fn triplets(&self) -> impl Iterator<Item = (&GTPattern, &GTPattern, &Rational)> {
        self.rows
            .iter()
            .flat_map(|(f, row)| row.iter().map(move |(t, c)| (f, t, c)))
    }
}

#[derive(Serialize)]
struct Triplet<'a> {
    from: &'a GTPattern,
    to: &'a GTPattern,
    coeff: String,
}

impl Serialize for ActionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(None)?;
        for (from, to, c) in self.triplets() {
            seq.serialize_element(&Triplet {
                from,
                to,
                coeff: fmt_rational(c),
            })?;
        }
        seq.end()
    }
}

static BASES: Lazy<RwLock<HashMap<Weight, Arc<Vec<GTPattern>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

type Key = (Weight, usize, usize);
static MATRICES: Lazy<RwLock<HashMap<Key, Arc<ActionMatrix>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `G(λ)` in descending lex order, shared.
pub fn basis(lambda: &Weight) -> Result<Arc<Vec<GTPattern>>, ActionError> {
    if let Some(b) = BASES.read().unwrap().get(lambda) {
        return Ok(b.clone());
    }
    let b = Arc::new(enumerate_patterns(lambda)?);
    BASES
        .write()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(b.clone());
    Ok(b)
}

/// Squared ζ-coefficient of the simple raising step at `(i, j)`.
fn a_squared(m: &GTPattern, i: usize, j: usize) -> Rational {
    let (i, j) = (i as i64, j as i64);
    let e = |a: i64, b: i64| m.m(a as usize, b as usize);
    let mij = e(i, j);
    let mut num = int(1);
    for h in 1..=j + 1 {
        num *= int(e(h, j + 1) - mij - h + i);
    }
    for h in 1..j {
        num *= int(e(h, j - 1) - mij - h + i - 1);
    }
    let mut den = int(1);
    for h in (1..=j).filter(|&h| h != i) {
        den *= int((e(h, j) - mij - h + i) * (e(h, j) - mij - h + i - 1));
    }
    (num / den).abs()
}

fn positive_sqrt(x: &Rational, what: &str) -> Rational {
    rational_sqrt(x).unwrap_or_else(|| panic!("{what}: {} is not a rational square", fmt_rational(x)))
}

fn simple_raising(lambda: &Weight, j: usize) -> Result<ActionMatrix, ActionError> {
    let mut out = ActionMatrix::empty(lambda);
    for m in basis(lambda)?.iter() {
        for i in 1..=j {
            let Some(t) = m.bump(i, j, 1) else { continue };
            let sq = a_squared(m, i, j) * m.r() / t.r();
            out.push(m, t, positive_sqrt(&sq, "raising coefficient"));
        }
    }
    Ok(out)
}

fn simple_lowering(lambda: &Weight, j: usize) -> Result<ActionMatrix, ActionError> {
    let mut out = ActionMatrix::empty(lambda);
    for m in basis(lambda)?.iter() {
        let d = m.dual();
        for i in 1..=j {
            let Some(t) = m.bump(j + 1 - i, j, -1) else { continue };
            let sq = a_squared(&d, i, j) * m.r() / t.r();
            out.push(m, t, positive_sqrt(&sq, "lowering coefficient"));
        }
    }
    Ok(out)
}

fn diagonal(lambda: &Weight, k: usize) -> Result<ActionMatrix, ActionError> {
    let mut out = ActionMatrix::empty(lambda);
    for m in basis(lambda)?.iter() {
        out.push(m, m.clone(), int(m.weight().at(k)));
    }
    Ok(out)
}

fn build(lambda: &Weight, i: usize, j: usize) -> Result<ActionMatrix, ActionError> {
    if i == j {
        diagonal(lambda, i)
    } else if j == i + 1 {
        simple_raising(lambda, i)
    } else if i == j + 1 {
        simple_lowering(lambda, j)
    } else if i < j {
        // E_{i,j} = [E_{i,j−1}, E_{j−1,j}]
        let a = matrix_e(lambda, i, j - 1)?;
        let b = matrix_e(lambda, j - 1, j)?;
        Ok(a.compose(&b).sub(&b.compose(&a)))
    } else {
        // E_{i,j} = [E_{i,i−1}, E_{i−1,j}]
        let a = matrix_e(lambda, i, i - 1)?;
        let b = matrix_e(lambda, i - 1, j)?;
        Ok(a.compose(&b).sub(&b.compose(&a)))
    }
}

/// Exact matrix of `τ_λ(E_{i,j})`, memoized per `(λ, i, j)`.
pub fn matrix_e(lambda: &Weight, i: usize, j: usize) -> Result<Arc<ActionMatrix>, ActionError> {
    let n = lambda.len();
    if i == 0 || j == 0 || i > n || j > n {
        return Err(ActionError::IndexOutOfRange { i, j, n });
    }
    if !lambda.is_dominant() {
        return Err(gt_core::GtError::InvalidWeight(lambda.0.clone()).into());
    }
    let key = (lambda.clone(), i, j);
    if let Some(m) = MATRICES.read().unwrap().get(&key) {
        return Ok(m.clone());
    }
    let m = Arc::new(build(lambda, i, j)?);
    MATRICES.write().unwrap().entry(key).or_insert(m.clone());
    Ok(m)
}

/// `τ_λ(E_{i,j}) v`.
pub fn act(lambda: &Weight, i: usize, j: usize, v: &RepVector) -> Result<RepVector, ActionError> {
    if v.lambda != *lambda {
        return Err(ActionError::WrongModule {
            expected: lambda.0.clone(),
            got: v.lambda.0.clone(),
        });
    }
    Ok(matrix_e(lambda, i, j)?.apply(v))
}

fn fact(k: i64) -> Rational {
    assert!(k >= 0, "negative factorial argument {k}");
    Rational::from_integer(factorial(k))
}

/// `S°(λ′,λ)` for rows of equal length.
fn s_zero(lp: &[i64], l: &[i64]) -> Rational {
    let n = l.len();
    let mut x = Rational::one();
    for i in 0..n {
        for j in i..n {
            x *= fact(lp[i] - l[j] - i as i64 + j as i64);
        }
        for j in i..n.saturating_sub(1) {
            x /= fact(l[i] - lp[j + 1] - i as i64 + j as i64);
        }
    }
    x
}

/// `S⁺(λ,μ)` for a row `λ` over a row `μ` one shorter.
fn s_plus(l: &[i64], mu: &[i64]) -> Rational {
    let n = l.len();
    let mut x = Rational::one();
    for i in 0..n {
        for j in i..n.saturating_sub(1) {
            let d = j as i64 - i as i64;
            x *= fact(l[i] - mu[j] + d);
            x /= fact(mu[i] - l[j + 1] + d);
        }
    }
    x
}

fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![k]];
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `τ_λ((E_{j,j+1})^k) ξ_M` from the closed-form expansion over compositions of `k`.
pub fn power_e_formula(
    lambda: &Weight,
    j: usize,
    k: usize,
    m: &GTPattern,
) -> Result<RepVector, ActionError> {
    let n = lambda.len();
    if j == 0 || j >= n {
        return Err(ActionError::IndexOutOfRange { i: j, j: j + 1, n });
    }
    if m.top() != *lambda || !m.is_valid() {
        return Err(gt_core::GtError::InvalidPattern(format!("{m} is not in G{lambda}")).into());
    }
    let row = m.row(j).to_vec();
    let above = m.row(j + 1).to_vec();
    let below = if j > 1 { m.row(j - 1).to_vec() } else { Vec::new() };
    let kf = fact(k as i64);
    let mut out = RepVector::zero(lambda);
    for beta in compositions(k, j) {
        let start = n * (n + 1) / 2 - j * (j + 1) / 2;
        let mut entries = m.flat().to_vec();
        for (i, &b) in beta.iter().enumerate() {
            entries[start + i] += b as i64;
        }
        let t = GTPattern::from_flat(n, entries);
        if !t.is_valid() {
            continue;
        }
        let new_row: Vec<i64> = row.iter().zip(&beta).map(|(a, &b)| a + b as i64).collect();
        let mut sq = s_zero(&new_row, &new_row) * s_zero(&row, &row) / (s_zero(&new_row, &row).pow(2));
        sq *= s_plus(&above, &row) / s_plus(&above, &new_row);
        if j > 1 {
            sq *= s_plus(&new_row, &below) / s_plus(&row, &below);
        }
        sq *= &kf * &kf * m.r() / t.r();
        out.add_term(t, positive_sqrt(&sq, "power-formula coefficient"));
    }
    Ok(out)
}
