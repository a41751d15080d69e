//! Fraction-free (Bareiss) elimination for overdetermined consistent systems.

use gt_core::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveError {
    Inconsistent,
    RankDeficient,
}

/// Solves `A x = b` over the integers' fraction field. `a` is row-major with
/// `cols` columns; every row must have length `cols`.
pub fn solve_fraction_free(
    mut a: Vec<Vec<BigInt>>,
    mut b: Vec<BigInt>,
    cols: usize,
) -> Result<Vec<Rational>, SolveError> {
    let rows = a.len();
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        row.push(std::mem::take(rhs));
    }
    let mut prev = BigInt::one();
    let mut pivots = Vec::with_capacity(cols);
    let mut r = 0;
    for k in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][k].is_zero()) else {
            return Err(SolveError::RankDeficient);
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in k + 1..=cols {
                let v = &a[r][k] * &a[i][j] - &a[i][k] * &a[r][j];
                let (q, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[r][k].clone();
        pivots.push(r);
        r += 1;
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) {
        return Err(SolveError::Inconsistent);
    }
    let mut x = vec![Rational::zero(); cols];
    for k in (0..cols).rev() {
        let row = &a[pivots[k]];
        let mut acc = Rational::from_integer(row[cols].clone());
        for j in k + 1..cols {
            if !row[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[k] = acc / Rational::from_integer(row[k].clone());
    }
    Ok(x)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
        .abs()
}
