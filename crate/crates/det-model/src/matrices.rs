//! Small exact matrices used to probe the group action.

use gt_core::rational::int;
use gt_core::Rational;
use num_traits::{One, Zero};

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|r| (0..n).map(|c| if r == c { Rational::one() } else { Rational::zero() }).collect())
        .collect()
}

pub fn diagonal(a: &[Rational]) -> Matrix {
    let mut m = identity(a.len());
    for (k, x) in a.iter().enumerate() {
        m[k][k] = x.clone();
    }
    m
}

/// `u_σ`, with `1` at `(σ(i), i)`; `sigma[i-1] = σ(i)`.
pub fn permutation(sigma: &[usize]) -> Matrix {
    let n = sigma.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, &s) in sigma.iter().enumerate() {
        m[s - 1][i] = Rational::one();
    }
    m
}

/// `1 + t·E_{i,j}`, `i ≠ j`, 1-based.
pub fn unipotent(n: usize, i: usize, j: usize, t: i64) -> Matrix {
    let mut m = identity(n);
    m[i - 1][j - 1] += int(t);
    m
}

/// The anti-diagonal `w_n`.
pub fn longest(n: usize) -> Matrix {
    permutation(&(1..=n).rev().collect::<Vec<_>>())
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|r| {
            (0..m)
                .map(|c| (0..k).fold(Rational::zero(), |acc, t| acc + &a[r][t] * &b[t][c]))
                .collect()
        })
        .collect()
}
