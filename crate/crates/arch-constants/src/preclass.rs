use crate::error::ArchError;
use crate::exec::{map_reduce, Exec};
use branch_tensor::cartan_table;
use gt_core::rational::{fmt_rational, sign_pow};
use gt_core::{enumerate_patterns, GTPattern, Rational, Weight};
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

/// Index `(M, N, P, Q) ∈ G(d) × G(2ρ_n) × G(λ^∨) × G(λ − w)`.
pub type Quad = (GTPattern, GTPattern, GTPattern, GTPattern);

/// The coefficient table of the pre-class for `(λ, w)`, `d = 2λ + 2ρ_n − w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreClass {
    pub lambda: Weight,
    pub w: i64,
    pub d: Weight,
    pub coeffs: BTreeMap<Quad, Rational>,
}

impl PreClass {
    pub fn coefficient(&self, m: &GTPattern, n: &GTPattern, p: &GTPattern, q: &GTPattern) -> Rational {
        self.coeffs
            .get(&(m.clone(), n.clone(), p.clone(), q.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// `d = 2λ + 2ρ_n − w`.
pub fn weight_d(lambda: &Weight, w: i64) -> Weight {
    lambda.scale(2).add(&Weight::two_rho(lambda.len())).shift(-w)
}

fn merge(mut a: BTreeMap<Quad, Rational>, b: BTreeMap<Quad, Rational>) -> BTreeMap<Quad, Rational> {
    for (k, v) in b {
        add(&mut a, k, v);
    }
    a
}

pub(crate) fn add<K: Ord>(acc: &mut BTreeMap<K, Rational>, k: K, v: Rational) {
    match acc.entry(k) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += v;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(x) => {
            if !v.is_zero() {
                x.insert(v);
            }
        }
    }
}

/// `c(M,N,P,Q) = (−1)^{q(M)+q(Q)} r(M)^{−1} Σ_T c^{N,T}_{M^∨} c^{P,Q^∨}_T`.
pub fn pre_class(lambda: &Weight, w: i64) -> Result<PreClass, ArchError> {
    pre_class_with(lambda, w, Exec::Sequential)
}

pub fn pre_class_with(lambda: &Weight, w: i64, exec: Exec) -> Result<PreClass, ArchError> {
    if !lambda.is_dominant() {
        return Err(gt_core::GtError::InvalidWeight(lambda.0.clone()).into());
    }
    let n = lambda.len();
    let d = weight_d(lambda, w);
    let ld = lambda.dual();
    let t_weight = ld.scale(2).shift(w);
    let outer = cartan_table(&Weight::two_rho(n), &t_weight)?;
    let inner = cartan_table(&ld, &ld.shift(w))?;
    let ms = enumerate_patterns(&d)?;
    let coeffs = map_reduce(
        exec,
        &ms,
        BTreeMap::new,
        |acc, m| {
            let scale = sign_pow(m.q()) / m.r();
            for ((nn, t), c1) in &outer.images[&m.dual()].coords {
                for ((p, qd), c2) in &inner.images[t].coords {
                    let q = qd.dual();
                    let v = sign_pow(q.q()) * &scale * c1 * c2;
                    add(acc, (m.clone(), nn.clone(), p.clone(), q), v);
                }
            }
        },
        merge,
    );
    Ok(PreClass { lambda: lambda.clone(), w, d, coeffs })
}

#[derive(Serialize)]
struct Row<'a> {
    m: &'a GTPattern,
    n: &'a GTPattern,
    p: &'a GTPattern,
    q: &'a GTPattern,
    coeff: String,
}

impl Serialize for PreClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Row> = self
            .coeffs
            .iter()
            .rev()
            .map(|((m, n, p, q), c)| Row { m, n, p, q, coeff: fmt_rational(c) })
            .collect();
        let mut st = s.serialize_struct("PreClass", 4)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("w", &self.w)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("coeffs", &rows)?;
        st.end()
    }
}
