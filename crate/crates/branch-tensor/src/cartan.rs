use crate::error::BranchError;
use crate::tensor::{TensorModule, TensorVector};
use det_model::{coords_in_xi, xi_polynomial, PolyVector};
use gt_core::lie::apply_dminus_level;
use gt_core::rational::fmt_rational;
use gt_core::{enumerate_patterns, GTPattern, Rational, RepVector, Weight};
use once_cell::sync::Lazy;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

/// Images `I(ξ_{M″})` of the Cartan injector `V_{λ+λ′} → V_λ ⊗ V_λ′`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanTable {
    pub lambda: Weight,
    pub lambda_p: Weight,
    pub images: BTreeMap<GTPattern, TensorVector>,
}

impl CartanTable {
    /// `c^{M,M′}_{M″}`.
    pub fn coefficient(&self, m: &GTPattern, mp: &GTPattern, mpp: &GTPattern) -> Rational {
        self.images
            .get(mpp)
            .map(|t| t.get(m, mp))
            .unwrap_or_else(|| Rational::from_integer(0.into()))
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    left: &'a GTPattern,
    right: &'a GTPattern,
    coeff: String,
}

impl Serialize for CartanTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.images.len()))?;
        for (mpp, t) in self.images.iter().rev() {
            let entries: Vec<Entry> = t
                .coords
                .iter()
                .rev()
                .map(|((left, right), c)| Entry {
                    left,
                    right,
                    coeff: fmt_rational(c),
                })
                .collect();
            map.serialize_entry(&mpp.to_string(), &entries)?;
        }
        map.end()
    }
}

type Key = (Weight, Weight);
static TABLES: Lazy<RwLock<HashMap<Key, Arc<CartanTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

fn check_pair(lambda: &Weight, lambda_p: &Weight) -> Result<(), BranchError> {
    if lambda.len() != lambda_p.len() {
        return Err(BranchError::RankMismatch(lambda.0.clone(), lambda_p.0.clone()));
    }
    for w in [lambda, lambda_p] {
        if !w.is_dominant() {
            return Err(gt_core::GtError::InvalidWeight(w.0.clone()).into());
        }
    }
    Ok(())
}

fn build(lambda: &Weight, lambda_p: &Weight) -> Result<CartanTable, BranchError> {
    let n = lambda.len();
    let module = TensorModule {
        lambda: lambda.clone(),
        lambda_p: lambda_p.clone(),
    };
    let top = TensorVector::basis(&GTPattern::extremal(lambda), &GTPattern::extremal(lambda_p));
    let total = lambda.add(lambda_p);
    // 𝒟⁻_{M,k} depends on rows k, k−1 only, so partial products are shared
    // between patterns agreeing on their upper rows.
    let mut memo: HashMap<Vec<i64>, TensorVector> = HashMap::new();
    let mut images = BTreeMap::new();
    for mpp in enumerate_patterns(&total)? {
        let mut x = top.clone();
        for k in (2..=n).rev() {
            let len = n * (n + 1) / 2 - (k - 1) * (k - 2) / 2;
            let key = mpp.flat()[..len].to_vec();
            if let Some(y) = memo.get(&key) {
                x = y.clone();
                continue;
            }
            x = apply_dminus_level(&module, &mpp, k, x);
            memo.insert(key, x.clone());
        }
        images.insert(mpp.clone(), x.scaled(&mpp.r1().recip()));
    }
    Ok(CartanTable {
        lambda: lambda.clone(),
        lambda_p: lambda_p.clone(),
        images,
    })
}

/// Injector table for `(λ, λ′)`, computed once and shared.
pub fn cartan_table(lambda: &Weight, lambda_p: &Weight) -> Result<Arc<CartanTable>, BranchError> {
    check_pair(lambda, lambda_p)?;
    let key = (lambda.clone(), lambda_p.clone());
    if let Some(t) = TABLES.read().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let t = Arc::new(build(lambda, lambda_p)?);
    TABLES.write().unwrap().entry(key).or_insert(t.clone());
    Ok(t)
}

/// `I^{λ,λ′}_{λ+λ′}(v)`.
pub fn cartan_inject(lambda: &Weight, lambda_p: &Weight, v: &RepVector) -> Result<TensorVector, BranchError> {
    check_pair(lambda, lambda_p)?;
    let total = lambda.add(lambda_p);
    if v.lambda != total {
        return Err(BranchError::WrongModule {
            expected: total.0,
            got: v.lambda.0.clone(),
        });
    }
    let t = cartan_table(lambda, lambda_p)?;
    let mut out = TensorVector::zero(lambda, lambda_p);
    for (m, c) in &v.coords {
        out.add_scaled(&t.images[m], c);
    }
    Ok(out)
}

/// `R^{λ,λ′}_{λ+λ′}(t)`: multiply ξ-polynomials and re-expand.
pub fn cartan_project(lambda: &Weight, lambda_p: &Weight, t: &TensorVector) -> Result<RepVector, BranchError> {
    check_pair(lambda, lambda_p)?;
    if t.lambdas != (lambda.clone(), lambda_p.clone()) {
        return Err(BranchError::WrongModule {
            expected: lambda.0.iter().chain(&lambda_p.0).copied().collect(),
            got: t.lambdas.0 .0.iter().chain(&t.lambdas.1 .0).copied().collect(),
        });
    }
    let total = lambda.add(lambda_p);
    if t.is_zero() {
        return Ok(RepVector::zero(&total));
    }
    let n = lambda.len();
    // Group by left factor: Σ_M ξ_M · (Σ_{M′} c ξ_{M′}).
    let mut by_left: BTreeMap<&GTPattern, Vec<(&GTPattern, &Rational)>> = BTreeMap::new();
    for ((m, mp), c) in &t.coords {
        by_left.entry(m).or_default().push((mp, c));
    }
    let mut acc = PolyVector::zero(n, lambda.at(n) + lambda_p.at(n));
    for (m, rights) in by_left {
        let mut right = PolyVector::zero(n, lambda_p.at(n));
        for (mp, c) in rights {
            right.add_scaled(&xi_polynomial(lambda_p, mp)?, c);
        }
        acc.add_scaled(&xi_polynomial(lambda, m)?.mul(&right), &Rational::from_integer(1.into()));
    }
    coords_in_xi(&total, &acc).map_err(|e| match e {
        det_model::DetError::NotInModule => panic!("product of ξ-polynomials left V_{{λ+λ′}}"),
        e => e.into(),
    })
}

/// Checks `R ∘ I = id` on every basis vector of `V_{λ+λ′}` through the determinantal model.
pub fn verify_cartan_table(lambda: &Weight, lambda_p: &Weight) -> Result<bool, BranchError> {
    let t = cartan_table(lambda, lambda_p)?;
    for (m, img) in &t.images {
        if cartan_project(lambda, lambda_p, img)? != RepVector::basis(m) {
            return Ok(false);
        }
    }
    Ok(true)
}
