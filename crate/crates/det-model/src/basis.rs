use crate::error::DetError;
use crate::generators::{generator_f, h_lambda};
use crate::linalg::{common_denominator, solve_fraction_free, SolveError};
use crate::poly::{det_minor, PolyModule, PolyVector};
use gt_core::lie::apply_dminus;
use gt_core::{enumerate_patterns, GTPattern, Rational, RepVector, Weight};
use num_bigint::BigInt;
use num_traits::Zero;
use once_cell::sync::Lazy;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// ξ-polynomials of `V_λ` for a weight with `λₙ = 0`, grouped by weight.
#[derive(Debug)]
pub struct XiTable {
    pub lambda: Weight,
    pub polys: BTreeMap<GTPattern, PolyVector>,
    pub by_weight: BTreeMap<Weight, Vec<GTPattern>>,
}

static TABLES: Lazy<RwLock<HashMap<Weight, Arc<XiTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn normalise(lambda: &Weight) -> (Weight, i64) {
    let s = lambda.0.last().copied().unwrap_or(0);
    (lambda.shift(-s), s)
}

fn build_table(lambda: &Weight) -> Result<XiTable, DetError> {
    let n = lambda.len();
    let module = PolyModule { n };
    let top = generator_f(lambda, &h_lambda(lambda))?;
    let mut polys = BTreeMap::new();
    let mut by_weight: BTreeMap<Weight, Vec<GTPattern>> = BTreeMap::new();
    for m in enumerate_patterns(lambda)? {
        let p = apply_dminus(&module, &m, &top).scaled(&m.r1().recip());
        by_weight.entry(m.weight()).or_default().push(m.clone());
        polys.insert(m, p);
    }
    Ok(XiTable {
        lambda: lambda.clone(),
        polys,
        by_weight,
    })
}

/// Table for `λ − λₙ`, computed once per weight and shared.
pub fn xi_table(lambda: &Weight) -> Result<Arc<XiTable>, DetError> {
    if !lambda.is_dominant() {
        return Err(gt_core::GtError::InvalidWeight(lambda.0.clone()).into());
    }
    let (base, _) = normalise(lambda);
    if let Some(t) = TABLES.read().unwrap().get(&base) {
        return Ok(t.clone());
    }
    let t = Arc::new(build_table(&base)?);
    TABLES.write().unwrap().entry(base).or_insert(t.clone());
    Ok(t)
}

/// `ξ_M = r₁(M)⁻¹ 𝒟⁻_M f_{h(λ)}` as a polynomial with `det_offset = λₙ`.
pub fn xi_polynomial(lambda: &Weight, m: &GTPattern) -> Result<PolyVector, DetError> {
    if m.top() != *lambda || !m.is_valid() {
        return Err(gt_core::GtError::InvalidPattern(format!("{m} is not in G{lambda}")).into());
    }
    let (_, s) = normalise(lambda);
    let t = xi_table(lambda)?;
    let mut p = t.polys[&m.shift(-s)].clone();
    p.det_offset = s;
    Ok(p)
}

/// Coordinates of `v` in the ξ-basis of `V_λ`.
pub fn coords_in_xi(lambda: &Weight, v: &PolyVector) -> Result<RepVector, DetError> {
    let (_, s) = normalise(lambda);
    let mut out = RepVector::zero(lambda);
    if v.is_zero() {
        return Ok(out);
    }
    if v.n != lambda.len() {
        return Err(DetError::NotInModule);
    }
    // Bring `v` and the basis to a common determinant power, then drop it.
    let (mut w, expand) = if v.det_offset >= s {
        (v.lower_offset(v.det_offset - s), 0)
    } else {
        (v.clone(), (s - v.det_offset) as u32)
    };
    w.det_offset = 0;
    let t = xi_table(lambda)?;
    let det = det_minor(lambda.len(), &(1..=lambda.len()).collect::<Vec<_>>()).pow(expand);
    for (gamma, comp) in w.weight_components() {
        let base = gamma.shift(-(expand as i64));
        let Some(pats) = t.by_weight.get(&base) else {
            return Err(DetError::NotInModule);
        };
        let cols: Vec<PolyVector> = pats
            .iter()
            .map(|m| if expand == 0 { t.polys[m].clone() } else { t.polys[m].mul(&det) })
            .collect();
        let x = solve_component(&cols, &comp)?;
        for (m, c) in pats.iter().zip(x) {
            out.add_term(m.shift(s), c);
        }
    }
    Ok(out)
}

fn solve_component(cols: &[PolyVector], target: &PolyVector) -> Result<Vec<Rational>, DetError> {
    let mut monos: BTreeMap<&Vec<u32>, usize> = BTreeMap::new();
    for p in cols.iter().chain(std::iter::once(target)) {
        for e in p.terms.keys() {
            let k = monos.len();
            monos.entry(e).or_insert(k);
        }
    }
    // Re-number rows in monomial order.
    for (k, v) in monos.values_mut().enumerate() {
        *v = k;
    }
    let scale: Vec<BigInt> = cols
        .iter()
        .map(|p| common_denominator(p.terms.values()))
        .collect();
    let bscale = common_denominator(target.terms.values());
    let mut a = vec![vec![BigInt::zero(); cols.len()]; monos.len()];
    let mut b = vec![BigInt::zero(); monos.len()];
    for (j, p) in cols.iter().enumerate() {
        for (e, c) in &p.terms {
            a[monos[e]][j] = (c * Rational::from_integer(scale[j].clone())).to_integer();
        }
    }
    for (e, c) in &target.terms {
        b[monos[e]] = (c * Rational::from_integer(bscale.clone())).to_integer();
    }
    let y = solve_fraction_free(a, b, cols.len()).map_err(|e| match e {
        SolveError::Inconsistent => DetError::NotInModule,
        SolveError::RankDeficient => panic!("ξ-polynomials of one weight are dependent"),
    })?;
    Ok(y
        .into_iter()
        .zip(scale)
        .map(|(yj, sj)| yj * Rational::from_integer(sj) / Rational::from_integer(bscale.clone()))
        .collect())
}
