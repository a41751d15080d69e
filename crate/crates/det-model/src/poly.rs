use crate::error::DetError;
use gt_core::lie::LieModule;
use gt_core::rational::{fmt_rational, int, pow_i, Rational};
use gt_core::Weight;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

/// Exponents of `z_{r,c}` stored row-major, `n²` entries.
pub type Monomial = Vec<u32>;

/// `(det z)^{det_offset} · Σ coeff · z^e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyVector {
    pub n: usize,
    pub det_offset: i64,
    pub terms: BTreeMap<Monomial, Rational>,
}

impl PolyVector {
    pub fn zero(n: usize, det_offset: i64) -> Self {
        PolyVector {
            n,
            det_offset,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        let mut p = PolyVector::zero(n, 0);
        p.terms.insert(vec![0; n * n], Rational::one());
        p
    }

    /// The variable `z_{r,c}`, 1-based.
    pub fn var(n: usize, r: usize, c: usize) -> Self {
        let mut e = vec![0; n * n];
        e[(r - 1) * n + (c - 1)] = 1;
        let mut p = PolyVector::zero(n, 0);
        p.terms.insert(e, Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`; both sides must carry the same determinant power.
    pub fn add_scaled(&mut self, other: &PolyVector, c: &Rational) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.is_zero() {
            self.det_offset = other.det_offset;
        }
        assert_eq!(self.det_offset, other.det_offset, "determinant powers differ");
        for (e, x) in &other.terms {
            self.add_term(e.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> PolyVector {
        let mut p = PolyVector::zero(self.n, self.det_offset);
        if !c.is_zero() {
            p.terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        }
        p
    }

    pub fn mul(&self, other: &PolyVector) -> PolyVector {
        assert_eq!(self.n, other.n);
        let mut p = PolyVector::zero(self.n, self.det_offset + other.det_offset);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> PolyVector {
        let mut acc = PolyVector::one(self.n);
        acc.det_offset = 0;
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Column degrees of a monomial plus the determinant power: its weight.
    pub fn monomial_weight(&self, e: &Monomial) -> Weight {
        let n = self.n;
        Weight(
            (0..n)
                .map(|c| (0..n).map(|r| e[r * n + c] as i64).sum::<i64>() + self.det_offset)
                .collect(),
        )
    }

    /// `E_{i,j}` acting as `Σ_r z_{r,i} ∂/∂z_{r,j}` plus `δ_{ij}·det_offset`.
    pub fn act_elementary(&self, i: usize, j: usize) -> Result<PolyVector, DetError> {
        let n = self.n;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(DetError::IndexOutOfRange { i, j, n });
        }
        let (i, j) = (i - 1, j - 1);
        let mut out = PolyVector::zero(n, self.det_offset);
        for (e, c) in &self.terms {
            for r in 0..n {
                let d = e[r * n + j];
                if d == 0 {
                    continue;
                }
                let mut f = e.clone();
                f[r * n + j] -= 1;
                f[r * n + i] += 1;
                out.add_term(f, c * int(d as i64));
            }
        }
        if i == j && self.det_offset != 0 {
            out.add_scaled(self, &int(self.det_offset));
        }
        Ok(out)
    }

    /// `f(z) ↦ f(zg)`, folding `det(g)^{det_offset}` into the coefficients.
    pub fn act_group(&self, g: &[Vec<Rational>]) -> Result<PolyVector, DetError> {
        let n = self.n;
        if g.len() != n || g.iter().any(|r| r.len() != n) {
            return Err(DetError::BadMatrix(n));
        }
        let dg = determinant(g);
        if dg.is_zero() {
            return Err(DetError::Singular);
        }
        // z_{r,c} ↦ Σ_k z_{r,k} g_{k,c}
        let images: Vec<Vec<PolyVector>> = (1..=n)
            .map(|r| {
                (1..=n)
                    .map(|c| {
                        let mut p = PolyVector::zero(n, 0);
                        for k in 1..=n {
                            p.add_scaled(&PolyVector::var(n, r, k), &g[k - 1][c - 1]);
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        let mut out = PolyVector::zero(n, 0);
        let mut powers: BTreeMap<(usize, u32), PolyVector> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut t = PolyVector::one(n);
            for (idx, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let p = powers
                    .entry((idx, d))
                    .or_insert_with(|| images[idx / n][idx % n].pow(d));
                t = t.mul(p);
            }
            out.add_scaled(&t, c);
        }
        out.det_offset = self.det_offset;
        Ok(out.scaled(&pow_i(&dg, self.det_offset)))
    }

    /// Multiply out `det(z)^{k}`, `k ≥ 0`, into the polynomial part.
    pub fn lower_offset(&self, k: i64) -> PolyVector {
        assert!(k >= 0);
        let det = det_minor(self.n, &(1..=self.n).collect::<Vec<_>>());
        let mut p = self.mul(&det.pow(k as u32));
        p.det_offset = self.det_offset - k;
        p
    }

    /// Weight-homogeneous pieces.
    pub fn weight_components(&self) -> Vec<(Weight, PolyVector)> {
        let mut by: BTreeMap<Weight, PolyVector> = BTreeMap::new();
        for (e, c) in &self.terms {
            by.entry(self.monomial_weight(e))
                .or_insert_with(|| PolyVector::zero(self.n, self.det_offset))
                .add_term(e.clone(), c.clone());
        }
        by.into_iter().collect()
    }
}

/// `det_{{1..k}, I}(z)` for a sorted 1-based column set `I`.
pub fn det_minor(n: usize, cols: &[usize]) -> PolyVector {
    let k = cols.len();
    let mut out = PolyVector::zero(n, 0);
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0u32; n * n];
        for (r, &p) in perm.iter().enumerate() {
            e[r * n + cols[p] - 1] += 1;
        }
        out.add_term(e, int(perm_sign(&perm)));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Exact determinant by Gaussian elimination over the rationals.
pub fn determinant(g: &[Vec<Rational>]) -> Rational {
    let n = g.len();
    let mut a: Vec<Vec<Rational>> = g.to_vec();
    let mut det = Rational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            det = -det;
        }
        det *= &a[k][k];
        for r in k + 1..n {
            if a[r][k].is_zero() {
                continue;
            }
            let f = &a[r][k] / &a[k][k];
            for c in k..n {
                let t = &f * &a[k][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// The polynomial model viewed as a `𝔤𝔩_n`-module.
#[derive(Debug, Clone, Copy)]
pub struct PolyModule {
    pub n: usize,
}

impl LieModule for PolyModule {
    type Vector = PolyVector;

    fn rank(&self) -> usize {
        self.n
    }

    fn zero(&self) -> PolyVector {
        PolyVector::zero(self.n, 0)
    }

    fn is_zero(&self, v: &PolyVector) -> bool {
        v.is_zero()
    }

    fn add_assign(&self, acc: &mut PolyVector, v: &PolyVector) {
        acc.add_scaled(v, &Rational::one());
    }

    fn scale(&self, v: &PolyVector, c: &Rational) -> PolyVector {
        v.scaled(c)
    }

    fn act(&self, i: usize, j: usize, v: &PolyVector) -> PolyVector {
        v.act_elementary(i, j).expect("generator index in range")
    }

    fn weight_components(&self, v: &PolyVector) -> Vec<(Weight, PolyVector)> {
        v.weight_components()
    }
}

#[derive(Serialize)]
struct Term {
    exponents: Vec<Vec<u32>>,
    coeff: String,
}

impl Serialize for PolyVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(e, c)| Term {
                exponents: e.chunks(self.n.max(1)).map(<[u32]>::to_vec).collect(),
                coeff: fmt_rational(c),
            })
            .collect();
        let mut st = s.serialize_struct("PolyVector", 2)?;
        st.serialize_field("det_offset", &self.det_offset)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
