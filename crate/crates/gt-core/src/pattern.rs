use crate::error::GtError;
use crate::rational::{factorial, Rational};
use crate::weight::Weight;
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// Gel'fand–Tsetlin pattern of size `n`.
///
/// Entries are stored flat, top row `m^{(n)}` first, down to `m^{(1)}`.
/// Indices are 1-based as `m(i, j)` with `1 ≤ i ≤ j ≤ n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GTPattern {
    n: usize,
    entries: Vec<i64>,
}

fn row_offset(n: usize, j: usize) -> usize {
    n * (n + 1) / 2 - j * (j + 1) / 2
}

impl GTPattern {
    /// Builds a pattern from rows listed top to bottom, checking interlacing.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self, GtError> {
        let n = rows.len();
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n - k {
                return Err(GtError::InvalidPattern(format!(
                    "row {} has length {}, expected {}",
                    k + 1,
                    row.len(),
                    n - k
                )));
            }
        }
        let p = GTPattern {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        if !p.is_valid() {
            return Err(GtError::InvalidPattern(p.to_string()));
        }
        Ok(p)
    }

    /// Unchecked constructor from the flat top-down layout.
    pub fn from_flat(n: usize, entries: Vec<i64>) -> Self {
        debug_assert_eq!(entries.len(), n * (n + 1) / 2);
        GTPattern { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn flat(&self) -> &[i64] {
        &self.entries
    }

    /// Row `m^{(j)}`, length `j`.
    pub fn row(&self, j: usize) -> &[i64] {
        let o = row_offset(self.n, j);
        &self.entries[o..o + j]
    }

    pub fn m(&self, i: usize, j: usize) -> i64 {
        self.entries[row_offset(self.n, j) + i - 1]
    }

    fn m_mut(&mut self, i: usize, j: usize) -> &mut i64 {
        &mut self.entries[row_offset(self.n, j) + i - 1]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n).rev().map(|j| self.row(j).to_vec()).collect()
    }

    pub fn is_valid(&self) -> bool {
        for j in 2..=self.n {
            for i in 1..j {
                if !(self.m(i, j) >= self.m(i, j - 1) && self.m(i, j - 1) >= self.m(i + 1, j)) {
                    return false;
                }
            }
        }
        true
    }

    /// The top row `λ`.
    pub fn top(&self) -> Weight {
        Weight(self.row(self.n).to_vec())
    }

    /// `γ^M`.
    pub fn weight(&self) -> Weight {
        let mut sums = vec![0i64; self.n + 1];
        for (j, s) in sums.iter_mut().enumerate().skip(1) {
            *s = self.row(j).iter().sum();
        }
        Weight((1..=self.n).map(|j| sums[j] - sums[j - 1]).collect())
    }

    /// Sum of all entries below the top row.
    pub fn q(&self) -> i64 {
        self.entries[self.n..].iter().sum()
    }

    /// `r(M)`, a positive rational.
    pub fn r(&self) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let m = |i, j| self.m(i, j);
        for k in 2..=self.n {
            for j in 1..k {
                for i in 1..=j {
                    let s = j as i64 - i as i64;
                    num *= factorial(m(i, k) - m(j, k - 1) + s);
                    num *= factorial(m(i, k - 1) - m(j + 1, k) + s);
                    den *= factorial(m(i, k - 1) - m(j, k - 1) + s);
                    den *= factorial(m(i, k) - m(j + 1, k) + s);
                }
            }
        }
        Rational::new(num, den)
    }

    /// Normalisation of the lowering operator `𝒟⁻_M`.
    pub fn r1(&self) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let m = |i, j| self.m(i, j);
        for k in 2..=self.n {
            for j in 1..k {
                for i in 1..=j {
                    let s = j as i64 - i as i64;
                    num *= factorial(m(i, k) - m(j + 1, k) + s);
                    den *= factorial(m(i, k - 1) - m(j + 1, k) + s);
                }
            }
        }
        Rational::new(num, den)
    }

    /// Normalisation of the raising operator `𝒟⁺_M`.
    pub fn r2(&self) -> Rational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let m = |i, j| self.m(i, j);
        for k in 2..=self.n {
            for j in 1..k {
                for i in 1..=j {
                    let s = j as i64 - i as i64;
                    num *= factorial(m(i, k) - m(j, k - 1) + s);
                    den *= factorial(m(i, k) - m(j, k) + s);
                }
            }
        }
        Rational::new(num, den)
    }

    /// `M^∨` with `(M^∨)_{i,j} = −m_{j+1−i,j}`.
    pub fn dual(&self) -> GTPattern {
        let mut out = self.clone();
        for j in 1..=self.n {
            for i in 1..=j {
                *out.m_mut(i, j) = -self.m(j + 1 - i, j);
            }
        }
        out
    }

    /// `M + l`.
    pub fn shift(&self, l: i64) -> GTPattern {
        GTPattern {
            n: self.n,
            entries: self.entries.iter().map(|x| x + l).collect(),
        }
    }

    /// `M̂`: the pattern of size `n−1` obtained by deleting the top row.
    pub fn hat(&self) -> GTPattern {
        assert!(self.n >= 1);
        GTPattern {
            n: self.n - 1,
            entries: self.entries[self.n..].to_vec(),
        }
    }

    /// `M[λ]`: `λ` placed on top. The caller must ensure `M`'s top interlaces `λ`.
    pub fn stack(&self, lambda: &Weight) -> Result<GTPattern, GtError> {
        if lambda.len() != self.n + 1 {
            return Err(GtError::LengthMismatch {
                expected: self.n + 1,
                got: lambda.len(),
            });
        }
        let mut entries = lambda.0.clone();
        entries.extend_from_slice(&self.entries);
        let p = GTPattern {
            n: self.n + 1,
            entries,
        };
        if !p.is_valid() {
            return Err(GtError::NotInterlacing {
                lambda: lambda.0.clone(),
                mu: self.top().0,
            });
        }
        Ok(p)
    }

    /// `M + Δ_{i,j}·delta`, if that is still a pattern with the same top row.
    pub fn bump(&self, i: usize, j: usize, delta: i64) -> Option<GTPattern> {
        if j >= self.n || i == 0 || i > j {
            return None;
        }
        let mut p = self.clone();
        *p.m_mut(i, j) += delta;
        let ok = {
            let v = p.m(i, j);
            v <= p.m(i, j + 1)
                && v >= p.m(i + 1, j + 1)
                && (j == 1 || i == j || v >= p.m(i, j - 1))
                && (j == 1 || i == 1 || v <= p.m(i - 1, j - 1))
        };
        ok.then_some(p)
    }

    /// `H(γ)`: row `j` is `{γ₁,…,γ_j}` sorted non-increasingly.
    pub fn extremal(gamma: &Weight) -> GTPattern {
        let n = gamma.len();
        let mut entries = Vec::with_capacity(n * (n + 1) / 2);
        for j in (1..=n).rev() {
            let mut row = gamma.0[..j].to_vec();
            row.sort_unstable_by(|a, b| b.cmp(a));
            entries.extend(row);
        }
        GTPattern { n, entries }
    }

    /// `H(γ)` after checking that `γ` rearranges `λ`.
    pub fn extremal_checked(lambda: &Weight, gamma: &Weight) -> Result<GTPattern, GtError> {
        if lambda.sorted_desc() != gamma.sorted_desc() || !lambda.is_dominant() {
            return Err(GtError::InvalidExtremal {
                lambda: lambda.0.clone(),
                gamma: gamma.0.clone(),
            });
        }
        Ok(GTPattern::extremal(gamma))
    }

    pub fn parse(s: &str) -> Result<GTPattern, GtError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let rows = s
            .split(';')
            .map(|r| Weight::parse(r).map(|w| w.0))
            .collect::<Result<Vec<_>, _>>()?;
        GTPattern::from_rows(rows)
    }
}

impl Ord for GTPattern {
    /// Lexicographic order: bottom row first, left to right within a row.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for j in 1..=self.n {
                let c = self.row(j).cmp(other.row(j));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for GTPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.n)
            .rev()
            .map(|j| {
                self.row(j)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}

impl fmt::Debug for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GTPattern {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GTPattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        GTPattern::from_rows(rows).map_err(serde::de::Error::custom)
    }
}
