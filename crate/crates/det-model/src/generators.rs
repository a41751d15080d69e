use crate::error::DetError;
use crate::poly::{det_minor, PolyVector};
use gt_core::Weight;
use std::collections::BTreeMap;

/// `l = (l_I)`, keyed by sorted 1-based column sets. Absent sets have exponent 0.
pub type ExponentFamily = BTreeMap<Vec<usize>, i64>;

/// Checks `l ∈ ℒ(λ)`.
pub fn check_family(lambda: &Weight, l: &ExponentFamily) -> Result<(), DetError> {
    let n = lambda.len();
    let full: Vec<usize> = (1..=n).collect();
    let mut sums = vec![0i64; n + 1];
    for (set, &e) in l {
        let sorted = set.windows(2).all(|p| p[0] < p[1]);
        if set.is_empty() || !sorted || set.iter().any(|&c| c == 0 || c > n) {
            return Err(DetError::InvalidExponent(format!("bad index set {set:?}")));
        }
        if *set != full && e < 0 {
            return Err(DetError::InvalidExponent(format!("negative exponent at {set:?}")));
        }
        sums[set.len()] += e;
    }
    if n > 0 && sums[n] != lambda.at(n) {
        return Err(DetError::InvalidExponent(format!(
            "full determinant exponent must be {}",
            lambda.at(n)
        )));
    }
    for k in 1..n {
        if sums[k] != lambda.at(k) - lambda.at(k + 1) {
            return Err(DetError::InvalidExponent(format!(
                "size-{k} exponents sum to {}, expected {}",
                sums[k],
                lambda.at(k) - lambda.at(k + 1)
            )));
        }
    }
    Ok(())
}

/// `f_l(z) = ∏ det_I(z)^{l_I}`, the full determinant kept as `det_offset`.
pub fn generator_f(lambda: &Weight, l: &ExponentFamily) -> Result<PolyVector, DetError> {
    check_family(lambda, l)?;
    let n = lambda.len();
    let mut p = PolyVector::one(n);
    for (set, &e) in l {
        if set.len() == n || e == 0 {
            continue;
        }
        p = p.mul(&det_minor(n, set).pow(e as u32));
    }
    p.det_offset = if n > 0 { lambda.at(n) } else { 0 };
    Ok(p)
}

fn full_set(l: &mut ExponentFamily, lambda: &Weight) {
    let n = lambda.len();
    if n > 0 {
        l.insert((1..=n).collect(), lambda.at(n));
    }
}

fn bump(l: &mut ExponentFamily, set: Vec<usize>, e: i64) {
    if e != 0 {
        *l.entry(set).or_insert(0) += e;
    }
}

/// `h(λ)`: exponent `λ_k − λ_{k+1}` on `{1,…,k}`.
pub fn h_lambda(lambda: &Weight) -> ExponentFamily {
    let mut l = ExponentFamily::new();
    for k in 1..lambda.len() {
        bump(&mut l, (1..=k).collect(), lambda.at(k) - lambda.at(k + 1));
    }
    full_set(&mut l, lambda);
    l
}

/// `h(γ)` for a rearrangement `γ = σλ`: exponent `λ_k − λ_{k+1}` on `σ{1,…,k}`.
pub fn h_gamma(gamma: &Weight) -> ExponentFamily {
    let lambda = gamma.sorted_desc();
    let mut order: Vec<usize> = (1..=gamma.len()).collect();
    order.sort_by(|&a, &b| gamma.at(b).cmp(&gamma.at(a)).then(a.cmp(&b)));
    let mut l = ExponentFamily::new();
    for k in 1..gamma.len() {
        let mut set = order[..k].to_vec();
        set.sort_unstable();
        bump(&mut l, set, lambda.at(k) - lambda.at(k + 1));
    }
    full_set(&mut l, &lambda);
    l
}

/// `h(λ,μ)`, the generator equal to `ξ_{H(μ)[λ]}`.
pub fn h_lambda_mu(lambda: &Weight, mu: &Weight) -> ExponentFamily {
    let n = lambda.len();
    let mut l = ExponentFamily::new();
    for k in 1..n {
        let mut with_n: Vec<usize> = (1..k).collect();
        with_n.push(n);
        bump(&mut l, with_n, lambda.at(k) - mu.at(k));
        bump(&mut l, (1..=k).collect(), mu.at(k) - lambda.at(k + 1));
    }
    full_set(&mut l, lambda);
    l
}

/// `σ(l)` with `σ(l)_I = l_{σ^{-1}(I)}`; `sigma[i-1] = σ(i)`.
pub fn permute_family(l: &ExponentFamily, sigma: &[usize]) -> ExponentFamily {
    l.iter()
        .map(|(set, &e)| {
            let mut img: Vec<usize> = set.iter().map(|&i| sigma[i - 1]).collect();
            img.sort_unstable();
            (img, e)
        })
        .collect()
}

/// `m(l,σ) = Σ_I l_I · #{(i,j) ∈ I² : i<j, σ(i)>σ(j)}`.
pub fn inversion_count(l: &ExponentFamily, sigma: &[usize]) -> i64 {
    l.iter()
        .map(|(set, &e)| {
            let mut inv = 0i64;
            for a in 0..set.len() {
                for b in a + 1..set.len() {
                    if sigma[set[a] - 1] > sigma[set[b] - 1] {
                        inv += 1;
                    }
                }
            }
            inv * e
        })
        .sum()
}
