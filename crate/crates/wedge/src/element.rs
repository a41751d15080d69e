use gt_core::rational::fmt_rational;
use gt_core::{Rational, Weight};
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A dual basis vector `E^∨_{i,j}` of `𝔭_n`, 1-based. Tuple order is row-major.
pub type Index = (usize, usize);

/// Homogeneous element of `Λ^k 𝔭_n^∨`, each monomial stored with strictly
/// increasing indices.
#[derive(Clone, PartialEq, Eq)]
pub struct WedgeElement {
    pub n: usize,
    pub degree: usize,
    pub coords: BTreeMap<Vec<Index>, Rational>,
}

/// Sorts `idx` in place and returns the permutation sign, or `None` on a repeat.
fn sort_sign(idx: &mut [Index]) -> Option<bool> {
    let mut neg = false;
    for a in 1..idx.len() {
        let mut b = a;
        while b > 0 && idx[b - 1] > idx[b] {
            idx.swap(b - 1, b);
            neg = !neg;
            b -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(neg)
    }
}

impl WedgeElement {
    pub fn zero(n: usize, degree: usize) -> Self {
        WedgeElement {
            n,
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// The scalar `c` in degree 0.
    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut w = WedgeElement::zero(n, 0);
        w.add_term(Vec::new(), c);
        w
    }

    /// `c · X₁ ∧ ⋯ ∧ X_k` for indices in the given (arbitrary) order.
    pub fn from_ordered(n: usize, indices: &[Index], c: Rational) -> Self {
        assert!(
            indices.iter().all(|&(i, j)| 1 <= i && i <= n && 1 <= j && j <= n),
            "index out of range for n = {n}"
        );
        let mut w = WedgeElement::zero(n, indices.len());
        w.add_ordered(indices.to_vec(), c);
        w
    }

    fn add_ordered(&mut self, mut idx: Vec<Index>, c: Rational) {
        match sort_sign(&mut idx) {
            None => {}
            Some(neg) => self.add_term(idx, if neg { -c } else { c }),
        }
    }

    /// Adds `c` to an already sorted monomial.
    pub fn add_term(&mut self, idx: Vec<Index>, c: Rational) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(idx.len(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.coords.entry(idx) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &WedgeElement, c: &Rational) {
        assert_eq!((self.n, self.degree), (other.n, other.degree));
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.coords {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> WedgeElement {
        let mut w = WedgeElement::zero(self.n, self.degree);
        w.add_scaled(self, c);
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// Coefficient of the monomial `X₁ ∧ ⋯ ∧ X_k` written in the given order.
    pub fn coefficient(&self, indices: &[Index]) -> Rational {
        let mut idx = indices.to_vec();
        match sort_sign(&mut idx) {
            None => Rational::zero(),
            Some(neg) => {
                let c = self.coords.get(&idx).cloned().unwrap_or_else(Rational::zero);
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn wedge(&self, other: &WedgeElement) -> WedgeElement {
        assert_eq!(self.n, other.n);
        let mut w = WedgeElement::zero(self.n, self.degree + other.degree);
        for (a, x) in &self.coords {
            for (b, y) in &other.coords {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                w.add_ordered(idx, x * y);
            }
        }
        w
    }

    /// Replace each monomial by a sum over single-slot substitutions (a derivation).
    pub(crate) fn derive(&self, f: impl Fn(Index) -> Vec<(Index, Rational)>) -> WedgeElement {
        let mut w = WedgeElement::zero(self.n, self.degree);
        for (m, c) in &self.coords {
            for p in 0..m.len() {
                for (img, s) in f(m[p]) {
                    let mut idx = m.clone();
                    idx[p] = img;
                    w.add_ordered(idx, c * s);
                }
            }
        }
        w
    }

    /// Apply an index substitution to every slot at once.
    pub(crate) fn map_indices(&self, n: usize, f: impl Fn(Index) -> Option<Index>) -> WedgeElement {
        let mut w = WedgeElement::zero(n, self.degree);
        for (m, c) in &self.coords {
            let img: Option<Vec<Index>> = m.iter().map(|&x| f(x)).collect();
            if let Some(idx) = img {
                w.add_ordered(idx, c.clone());
            }
        }
        w
    }

    /// Weight of a monomial under `ad^∨(E_{k,k})`: `E^∨_{i,j}` has weight `e_j − e_i`.
    pub fn monomial_weight(n: usize, idx: &[Index]) -> Weight {
        let mut g = vec![0i64; n];
        for &(i, j) in idx {
            g[j - 1] += 1;
            g[i - 1] -= 1;
        }
        Weight(g)
    }

    pub fn weight_components(&self) -> Vec<(Weight, WedgeElement)> {
        let mut by: BTreeMap<Weight, WedgeElement> = BTreeMap::new();
        for (m, c) in &self.coords {
            by.entry(Self::monomial_weight(self.n, m))
                .or_insert_with(|| WedgeElement::zero(self.n, self.degree))
                .coords
                .insert(m.clone(), c.clone());
        }
        by.into_iter().collect()
    }

    pub fn unit(n: usize) -> WedgeElement {
        WedgeElement::scalar(n, Rational::one())
    }
}

impl fmt::Debug for WedgeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ^{}(p{})[", self.degree, self.n)?;
        for (k, (m, c)) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_rational(c))?;
            for (i, j) in m {
                write!(f, "·E{i}{j}")?;
            }
        }
        write!(f, "]")
    }
}

#[derive(Serialize)]
struct Term<'a> {
    indices: Vec<[usize; 2]>,
    coeff: &'a str,
}

impl Serialize for WedgeElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for (m, c) in &self.coords {
            let coeff = fmt_rational(c);
            seq.serialize_element(&Term {
                indices: m.iter().map(|&(i, j)| [i, j]).collect(),
                coeff: &coeff,
            })?;
        }
        seq.end()
    }
}
