use crate::element::{Index, WedgeElement};
use gt_core::lie::{apply_dminus_level, LieModule};
use gt_core::rational::int;
use gt_core::{enumerate_patterns, GTPattern, Rational, RepVector, Weight};
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WedgeError {
    #[error("expected degree {expected} over n = {n}, got degree {got}")]
    DegreeMismatch { n: usize, expected: usize, got: usize },
    #[error("rank {0} is too small")]
    RankTooSmall(usize),
    #[error("vector lives in V{got:?}, expected V{expected:?}")]
    WrongModule { expected: Vec<i64>, got: Vec<i64> },
}

impl WedgeError {
    pub fn code(&self) -> &'static str {
        match self {
            WedgeError::DegreeMismatch { .. } => "E_DEGREE",
            WedgeError::RankTooSmall(_) => "E_RANK",
            WedgeError::WrongModule { .. } => "E_WRONG_MODULE",
        }
    }
}

/// `b_n = n(n−1)/2`.
pub fn b(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Derivation extending `E^∨_{i,j} ↦ δ_{j,b} E^∨_{i,a} − δ_{i,a} E^∨_{b,j}`.
pub fn ad_dual(a: usize, bb: usize, w: &WedgeElement) -> WedgeElement {
    assert!(1 <= a && a <= w.n && 1 <= bb && bb <= w.n, "generator out of range");
    w.derive(|(i, j)| {
        let mut out = Vec::new();
        if j == bb {
            out.push(((i, a), Rational::one()));
        }
        if i == a {
            out.push(((bb, j), -Rational::one()));
        }
        out
    })
}

/// `Ad^∨(w_n)`: `E^∨_{i,j} ↦ E^∨_{j,i}`.
pub fn ad_dual_wn(w: &WedgeElement) -> WedgeElement {
    w.map_indices(w.n, |(i, j)| Some((j, i)))
}

/// Dual adjoint action of the longest Weyl element:
/// `E^∨_{i,j} ↦ E^∨_{n+1−i,n+1−j}`. Unlike [`ad_dual_wn`] this intertwines
/// `ad^∨(E_{a,b})` with `ad^∨(E_{n+1−a,n+1−b})`.
pub fn ad_dual_weyl(w: &WedgeElement) -> WedgeElement {
    let n = w.n;
    w.map_indices(n, |(i, j)| Some((n + 1 - i, n + 1 - j)))
}

/// `E^∨_{2,1} ∧ E^∨_{3,1} ∧ E^∨_{3,2} ∧ ⋯ ∧ E^∨_{n,n−1}`.
pub fn highest_wedge(n: usize) -> WedgeElement {
    let idx: Vec<Index> = (2..=n).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    WedgeElement::from_ordered(n, &idx, Rational::one())
}

/// `E^∨_{1,2} ∧ E^∨_{1,3} ∧ E^∨_{2,3} ∧ E^∨_{1,4} ∧ ⋯ ∧ E^∨_{n−1,n}`.
pub fn upper_wedge(n: usize) -> WedgeElement {
    let idx: Vec<Index> = (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
    WedgeElement::from_ordered(n, &idx, Rational::one())
}

/// Ordered top form: lower triangle with diagonal by rows, then the upper
/// triangle by columns.
pub fn top_form(n: usize) -> WedgeElement {
    let mut idx: Vec<Index> = (1..=n).flat_map(|i| (1..=i).map(move |j| (i, j))).collect();
    idx.extend((2..=n).flat_map(|j| (1..j).map(move |i| (i, j))));
    WedgeElement::from_ordered(n, &idx, Rational::one())
}

/// `ι^∨_n`: drop every monomial containing an index `n`.
pub fn restrict_iota(w: &WedgeElement) -> Result<WedgeElement, WedgeError> {
    if w.n < 2 {
        return Err(WedgeError::RankTooSmall(w.n));
    }
    let m = w.n - 1;
    Ok(w.map_indices(m, |(i, j)| (i <= m && j <= m).then_some((i, j))))
}

/// `ι^∨_n(ω) ∧ ω′ = s_n(ω, ω′) · top_form(n−1)`.
pub fn s_pairing(w: &WedgeElement, wp: &WedgeElement) -> Result<Rational, WedgeError> {
    let n = w.n;
    if n < 2 || wp.n != n - 1 {
        return Err(WedgeError::RankTooSmall(n));
    }
    if w.degree != b(n) {
        return Err(WedgeError::DegreeMismatch { n, expected: b(n), got: w.degree });
    }
    if wp.degree != b(n - 1) {
        return Err(WedgeError::DegreeMismatch { n: n - 1, expected: b(n - 1), got: wp.degree });
    }
    let prod = restrict_iota(w)?.wedge(wp);
    let top = top_form(n - 1);
    let (key, unit) = top.coords.iter().next().expect("top form is nonzero");
    Ok(prod.coords.get(key).cloned().unwrap_or_else(Rational::zero) / unit)
}

/// `Λ 𝔭_n^∨` in a fixed degree as a module under `ad^∨`.
#[derive(Debug, Clone)]
pub struct WedgeModule {
    pub n: usize,
    pub degree: usize,
}

impl LieModule for WedgeModule {
    type Vector = WedgeElement;

    fn rank(&self) -> usize {
        self.n
    }

    fn zero(&self) -> WedgeElement {
        WedgeElement::zero(self.n, self.degree)
    }

    fn is_zero(&self, v: &WedgeElement) -> bool {
        v.is_zero()
    }

    fn add_assign(&self, acc: &mut WedgeElement, v: &WedgeElement) {
        acc.add_scaled(v, &Rational::one());
    }

    fn scale(&self, v: &WedgeElement, c: &Rational) -> WedgeElement {
        v.scaled(c)
    }

    fn act(&self, i: usize, j: usize, v: &WedgeElement) -> WedgeElement {
        ad_dual(i, j, v)
    }

    fn weight_components(&self, v: &WedgeElement) -> Vec<(Weight, WedgeElement)> {
        v.weight_components()
    }
}

static IMAGES: Lazy<RwLock<HashMap<usize, Arc<BTreeMap<GTPattern, WedgeElement>>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn build_images(n: usize) -> BTreeMap<GTPattern, WedgeElement> {
    let module = WedgeModule { n, degree: b(n) };
    let top = highest_wedge(n);
    let mut memo: HashMap<Vec<i64>, WedgeElement> = HashMap::new();
    let mut out = BTreeMap::new();
    for m in enumerate_patterns(&Weight::two_rho(n)).expect("2ρ is dominant") {
        let mut x = top.clone();
        for k in (2..=n).rev() {
            let len = n * (n + 1) / 2 - (k - 1) * (k - 2) / 2;
            let key = m.flat()[..len].to_vec();
            if let Some(y) = memo.get(&key) {
                x = y.clone();
                continue;
            }
            x = apply_dminus_level(&module, &m, k, x);
            memo.insert(key, x.clone());
        }
        let r1 = m.r1();
        out.insert(m, x.scaled(&r1.recip()));
    }
    out
}

/// Images of the basis `ξ_M` of `V_{2ρ_n}` in `Λ^{b_n} 𝔭_n^∨`, shared.
pub fn inject_2rho_table(n: usize) -> Arc<BTreeMap<GTPattern, WedgeElement>> {
    if let Some(t) = IMAGES.read().unwrap().get(&n) {
        return t.clone();
    }
    let t = Arc::new(build_images(n));
    IMAGES.write().unwrap().entry(n).or_insert(t.clone());
    t
}

/// `V_{2ρ_n} → Λ^{b_n} 𝔭_n^∨`, `ξ_{H(2ρ_n)} ↦ highest_wedge(n)`.
pub fn inject_2rho(n: usize, v: &RepVector) -> Result<WedgeElement, WedgeError> {
    let tr = Weight::two_rho(n);
    if v.lambda != tr {
        return Err(WedgeError::WrongModule { expected: tr.0, got: v.lambda.0.clone() });
    }
    let t = inject_2rho_table(n);
    let mut out = WedgeElement::zero(n, b(n));
    for (m, c) in &v.coords {
        out.add_scaled(&t[m], c);
    }
    Ok(out)
}

/// `s_n(ad^∨((E_{n,n−1})^{n−1} ⋯ E_{2,1}) highest_wedge(n), inject_2rho(ξ_{H(−2ρ_{n−1})}))`.
pub fn s_chain(n: usize) -> Result<Rational, WedgeError> {
    if n < 2 {
        return Err(WedgeError::RankTooSmall(n));
    }
    let low = GTPattern::extremal(&Weight::two_rho(n - 1).neg());
    let wp = inject_2rho(n - 1, &RepVector::basis(&low))?;
    s_chain_against(n, &wp)
}

/// The lowered highest wedge of [`s_chain`] paired against an arbitrary `ω′`.
pub fn s_chain_against(n: usize, wp: &WedgeElement) -> Result<Rational, WedgeError> {
    if n < 2 {
        return Err(WedgeError::RankTooSmall(n));
    }
    let mut x = highest_wedge(n);
    for k in 1..n {
        for _ in 0..k {
            x = ad_dual(k + 1, k, &x);
        }
    }
    s_pairing(&x, wp)
}

/// `(−1)^{b_n − n(n−1)(n−2)/6} (n−1)! (n−2)! ⋯ 1!`.
pub fn s_chain_closed_form(n: usize) -> Rational {
    let e = b(n) as i64 - (n * n.saturating_sub(1) * n.saturating_sub(2) / 6) as i64;
    let mut v = int(1);
    for k in 1..n as i64 {
        v *= Rational::from_integer(gt_core::rational::factorial(k));
    }
    if e.rem_euclid(2) == 1 {
        -v
    } else {
        v
    }
}
