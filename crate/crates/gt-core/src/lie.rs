//! A minimal interface for `𝔤𝔩_n`-modules and the Molev raising/lowering
//! operators written as explicit elements of the enveloping algebra.

use crate::pattern::GTPattern;
use crate::rational::{int, Rational};
use crate::weight::Weight;

/// A module over `𝔤𝔩_n` with exact rational scalars.
pub trait LieModule {
    type Vector: Clone;

    fn rank(&self) -> usize;
    fn zero(&self) -> Self::Vector;
    fn is_zero(&self, v: &Self::Vector) -> bool;
    fn add_assign(&self, acc: &mut Self::Vector, v: &Self::Vector);
    fn scale(&self, v: &Self::Vector, c: &Rational) -> Self::Vector;
    /// Action of `E_{i,j}`, 1-based.
    fn act(&self, i: usize, j: usize, v: &Self::Vector) -> Self::Vector;
    /// Decomposition into weight-homogeneous pieces.
    fn weight_components(&self, v: &Self::Vector) -> Vec<(Weight, Self::Vector)>;
}

/// `coeff · E_{g₁} ⋯ E_{g_r} · ∏ (E_{a,a} − E_{k,k} + s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UeTerm {
    pub coeff: i64,
    /// Generators in written order; the last one acts first.
    pub gens: Vec<(usize, usize)>,
    /// `(a, k, s)` for the factor `E_{a,a} − E_{k,k} + s`.
    pub cartan: Vec<(usize, usize, i64)>,
}

impl UeTerm {
    fn cartan_value(&self, gamma: &Weight) -> i64 {
        self.cartan
            .iter()
            .map(|&(a, k, s)| gamma.at(a) - gamma.at(k) + s)
            .product::<i64>()
            * self.coeff
    }
}

fn subsets(range: std::ops::RangeInclusive<usize>) -> Vec<Vec<usize>> {
    let items: Vec<usize> = range.collect();
    (0..1u64 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Raising operator `D_{i,j}`, `i < j`, including the `(−1)^{i−1}` normalisation.
pub fn raising_terms(i: usize, j: usize) -> Vec<UeTerm> {
    assert!(1 <= i && i < j);
    let coeff = if (i - 1) % 2 == 0 { 1 } else { -1 };
    let mut out = Vec::new();
    for mut chain in subsets(1..=i - 1) {
        chain.sort_unstable_by(|a, b| b.cmp(a));
        let mut gens = Vec::new();
        let mut prev = i;
        for &c in &chain {
            gens.push((prev, c));
            prev = c;
        }
        gens.push((prev, j));
        let cartan = (1..i)
            .filter(|k| !chain.contains(k))
            .map(|k| (i, k, k as i64 - i as i64))
            .collect();
        out.push(UeTerm { coeff, gens, cartan });
    }
    out
}

/// Lowering operator `D_{j,i}`, `i < j`.
pub fn lowering_terms(j: usize, i: usize) -> Vec<UeTerm> {
    assert!(1 <= i && i < j);
    let mut out = Vec::new();
    for chain in subsets(i + 1..=j - 1) {
        let mut gens = Vec::new();
        let mut prev = i;
        for &c in &chain {
            gens.push((c, prev));
            prev = c;
        }
        gens.push((j, prev));
        let cartan = (i + 1..j)
            .filter(|k| !chain.contains(k))
            .map(|k| (i, k, k as i64 - i as i64))
            .collect();
        out.push(UeTerm {
            coeff: 1,
            gens,
            cartan,
        });
    }
    out
}

/// Apply a sum of enveloping-algebra terms.
pub fn apply_terms<L: LieModule>(module: &L, terms: &[UeTerm], v: &L::Vector) -> L::Vector {
    let comps = module.weight_components(v);
    let mut acc = module.zero();
    for term in terms {
        for (gamma, comp) in &comps {
            let c = term.cartan_value(gamma);
            if c == 0 {
                continue;
            }
            let mut x = module.scale(comp, &int(c));
            for &(a, b) in term.gens.iter().rev() {
                if module.is_zero(&x) {
                    break;
                }
                x = module.act(a, b, &x);
            }
            module.add_assign(&mut acc, &x);
        }
    }
    acc
}

fn apply_power<L: LieModule>(module: &L, terms: &[UeTerm], e: i64, v: L::Vector) -> L::Vector {
    let mut x = v;
    for _ in 0..e {
        if module.is_zero(&x) {
            break;
        }
        x = apply_terms(module, terms, &x);
    }
    x
}

/// `𝒟⁻_{M,k} v`; depends only on rows `k` and `k − 1` of `M`.
pub fn apply_dminus_level<L: LieModule>(
    module: &L,
    pattern: &GTPattern,
    k: usize,
    v: L::Vector,
) -> L::Vector {
    let mut x = v;
    for i in (1..k).rev() {
        let e = pattern.m(i, k) - pattern.m(i, k - 1);
        if e > 0 {
            x = apply_power(module, &lowering_terms(k, i), e, x);
        }
    }
    x
}

/// `𝒟⁻_M v = 𝒟⁻_{M,2} ⋯ 𝒟⁻_{M,n} v`.
pub fn apply_dminus<L: LieModule>(module: &L, pattern: &GTPattern, v: &L::Vector) -> L::Vector {
    let mut x = v.clone();
    for k in (2..=pattern.n()).rev() {
        x = apply_dminus_level(module, pattern, k, x);
    }
    x
}

/// `𝒟⁺_M v = 𝒟⁺_{M,n} ⋯ 𝒟⁺_{M,2} v`.
pub fn apply_dplus<L: LieModule>(module: &L, pattern: &GTPattern, v: &L::Vector) -> L::Vector {
    let n = pattern.n();
    let mut x = v.clone();
    for k in 2..=n {
        for i in (1..k).rev() {
            let e = pattern.m(i, k) - pattern.m(i, k - 1);
            if e > 0 {
                x = apply_power(module, &raising_terms(i, k), e, x);
            }
        }
    }
    x
}

/// Evaluate a word `E_{g₁}⋯E_{g_r}` (last acts first).
pub fn apply_word<L: LieModule>(module: &L, gens: &[(usize, usize)], v: &L::Vector) -> L::Vector {
    let mut x = v.clone();
    for &(a, b) in gens.iter().rev() {
        x = module.act(a, b, &x);
    }
    x
}

/// `[E_{i,j}, E_{k,l}]` evaluated as a module map, for commutator checks.
pub fn commutator<L: LieModule>(
    module: &L,
    (i, j): (usize, usize),
    (k, l): (usize, usize),
    v: &L::Vector,
) -> L::Vector {
    let mut a = module.act(i, j, &module.act(k, l, v));
    let b = module.act(k, l, &module.act(i, j, v));
    module.add_assign(&mut a, &module.scale(&b, &-int(1)));
    a
}
