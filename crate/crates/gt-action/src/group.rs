//! Torus and Weyl-group elements acting through exponentials of nilpotent generators.

use crate::error::ActionError;
use crate::matrix::matrix_e;
use gt_core::rational::{int, pow_i};
use gt_core::{Rational, RepVector, Weight};
use num_traits::One;

/// `exp(t·τ_λ(E_{i,j})) v` for `i ≠ j`; the series terminates on `V_λ`.
pub fn exp_nilpotent(
    lambda: &Weight,
    i: usize,
    j: usize,
    t: &Rational,
    v: &RepVector,
) -> Result<RepVector, ActionError> {
    assert_ne!(i, j, "diagonal generators are not nilpotent");
    let e = matrix_e(lambda, i, j)?;
    let mut out = v.clone();
    let mut term = v.clone();
    let mut k = 0i64;
    loop {
        k += 1;
        term = e.apply(&term).scaled(&(t / int(k)));
        if term.is_zero() {
            return Ok(out);
        }
        out.add_scaled(&term, &Rational::one());
    }
}

/// `diag(a₁,…,aₙ)` acting by `∏ a_k^{γ_k}` on each weight space.
pub fn act_diagonal(a: &[Rational], v: &RepVector) -> RepVector {
    let mut out = RepVector::zero(&v.lambda);
    for (m, c) in &v.coords {
        let s: Rational = m
            .weight()
            .0
            .iter()
            .zip(a)
            .map(|(&g, x)| pow_i(x, g))
            .product();
        out.add_term(m.clone(), c * s);
    }
    out
}

/// `u_{s_i} = exp(E_{i,i+1}) exp(−E_{i+1,i}) exp(E_{i,i+1}) · diag(…,−1,…)`, `−1` in slot `i`.
pub fn act_simple_reflection(lambda: &Weight, i: usize, v: &RepVector) -> Result<RepVector, ActionError> {
    let n = lambda.len();
    if i == 0 || i >= n {
        return Err(ActionError::IndexOutOfRange { i, j: i + 1, n });
    }
    let mut d = vec![Rational::one(); n];
    d[i - 1] = -Rational::one();
    let one = Rational::one();
    let x = act_diagonal(&d, v);
    let x = exp_nilpotent(lambda, i, i + 1, &one, &x)?;
    let x = exp_nilpotent(lambda, i + 1, i, &-one.clone(), &x)?;
    exp_nilpotent(lambda, i, i + 1, &one, &x)
}

/// Word `s_{a₁}⋯s_{a_k}` with `σ = s_{a₁}⋯s_{a_k}`, `sigma[i−1] = σ(i)`.
pub fn reduced_word(sigma: &[usize]) -> Vec<usize> {
    let mut arr = sigma.to_vec();
    let mut swaps = Vec::new();
    // Right multiplication by s_a swaps positions a, a+1 of the one-line form.
    loop {
        let Some(a) = (0..arr.len().saturating_sub(1)).find(|&a| arr[a] > arr[a + 1]) else {
            break;
        };
        arr.swap(a, a + 1);
        swaps.push(a + 1);
    }
    swaps.reverse();
    swaps
}

/// `τ_λ(u_σ) v` where `u_σ e_i = e_{σ(i)}`.
pub fn act_permutation(lambda: &Weight, sigma: &[usize], v: &RepVector) -> Result<RepVector, ActionError> {
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    if sigma.len() != lambda.len() || sorted.iter().enumerate().any(|(k, &s)| s != k + 1) {
        return Err(gt_core::GtError::InvalidWeight(sigma.iter().map(|&s| s as i64).collect()).into());
    }
    let mut x = v.clone();
    for &a in reduced_word(sigma).iter().rev() {
        if x.is_zero() {
            break;
        }
        x = act_simple_reflection(lambda, a, &x)?;
    }
    Ok(x)
}

/// `τ_λ(w_n) v` for the antidiagonal permutation matrix.
pub fn act_longest(lambda: &Weight, v: &RepVector) -> Result<RepVector, ActionError> {
    let n = lambda.len();
    let sigma: Vec<usize> = (1..=n).rev().collect();
    act_permutation(lambda, &sigma, v)
}
