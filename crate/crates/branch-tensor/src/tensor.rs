use gt_action::matrix_e;
use gt_core::lie::LieModule;
use gt_core::rational::fmt_rational;
use gt_core::{GTPattern, Rational, RepVector, Weight};
use gt_core::rational::int;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// An element of `V_λ ⊗ V_λ′` in the basis `ξ_M ⊗ ξ_{M′}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    pub lambdas: (Weight, Weight),
    pub coords: BTreeMap<(GTPattern, GTPattern), Rational>,
}

impl TensorVector {
    pub fn zero(lambda: &Weight, lambda_p: &Weight) -> Self {
        TensorVector {
            lambdas: (lambda.clone(), lambda_p.clone()),
            coords: BTreeMap::new(),
        }
    }

    pub fn basis(m: &GTPattern, mp: &GTPattern) -> Self {
        let mut t = TensorVector::zero(&m.top(), &mp.top());
        t.add_term(m.clone(), mp.clone(), int(1));
        t
    }

    /// `v ⊗ w`.
    pub fn product(v: &RepVector, w: &RepVector) -> Self {
        let mut t = TensorVector::zero(&v.lambda, &w.lambda);
        for (m, a) in &v.coords {
            for (mp, b) in &w.coords {
                t.add_term(m.clone(), mp.clone(), a * b);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, m: &GTPattern, mp: &GTPattern) -> Rational {
        self.coords
            .get(&(m.clone(), mp.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: GTPattern, mp: GTPattern, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.coords.entry((m, mp)) {
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

    pub fn add_scaled(&mut self, other: &TensorVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for ((m, mp), x) in &other.coords {
            self.add_term(m.clone(), mp.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> TensorVector {
        let mut t = TensorVector::zero(&self.lambdas.0, &self.lambdas.1);
        t.add_scaled(self, c);
        t
    }

    /// Pieces of constant total weight `γ^M + γ^{M′}`.
    pub fn weight_components(&self) -> Vec<(Weight, TensorVector)> {
        let mut by: BTreeMap<Weight, TensorVector> = BTreeMap::new();
        for ((m, mp), c) in &self.coords {
            by.entry(m.weight().add(&mp.weight()))
                .or_insert_with(|| TensorVector::zero(&self.lambdas.0, &self.lambdas.1))
                .coords
                .insert((m.clone(), mp.clone()), c.clone());
        }
        by.into_iter().collect()
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}⊗V{}[", self.lambdas.0, self.lambdas.1)?;
        for (i, ((m, mp), c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}⊗{}", fmt_rational(c), m, mp)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize)]
struct Coord<'a> {
    left: &'a GTPattern,
    right: &'a GTPattern,
    coeff: String,
}

impl Serialize for TensorVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coords: Vec<Coord> = self
            .coords
            .iter()
            .rev()
            .map(|((left, right), c)| Coord {
                left,
                right,
                coeff: fmt_rational(c),
            })
            .collect();
        let mut st = s.serialize_struct("TensorVector", 2)?;
        st.serialize_field("lambdas", &[&self.lambdas.0, &self.lambdas.1])?;
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}

/// `V_λ ⊗ V_λ′` with `E ↦ E ⊗ 1 + 1 ⊗ E`.
#[derive(Debug, Clone)]
pub struct TensorModule {
    pub lambda: Weight,
    pub lambda_p: Weight,
}

impl LieModule for TensorModule {
    type Vector = TensorVector;

    fn rank(&self) -> usize {
        self.lambda.len()
    }

    fn zero(&self) -> TensorVector {
        TensorVector::zero(&self.lambda, &self.lambda_p)
    }

    fn is_zero(&self, v: &TensorVector) -> bool {
        v.is_zero()
    }

    fn add_assign(&self, acc: &mut TensorVector, v: &TensorVector) {
        acc.add_scaled(v, &int(1));
    }

    fn scale(&self, v: &TensorVector, c: &Rational) -> TensorVector {
        v.scaled(c)
    }

    fn act(&self, i: usize, j: usize, v: &TensorVector) -> TensorVector {
        let a = matrix_e(&self.lambda, i, j).expect("index within rank");
        let b = matrix_e(&self.lambda_p, i, j).expect("index within rank");
        let mut out = self.zero();
        for ((m, mp), c) in &v.coords {
            if let Some(row) = a.rows.get(m) {
                for (t, x) in row {
                    out.add_term(t.clone(), mp.clone(), c * x);
                }
            }
            if let Some(row) = b.rows.get(mp) {
                for (t, x) in row {
                    out.add_term(m.clone(), t.clone(), c * x);
                }
            }
        }
        out
    }

    fn weight_components(&self, v: &TensorVector) -> Vec<(Weight, TensorVector)> {
        v.weight_components()
    }
}
