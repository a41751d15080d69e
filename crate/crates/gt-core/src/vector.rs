use crate::pattern::GTPattern;
use crate::rational::{fmt_rational, Rational};
use crate::weight::Weight;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// A vector of `V_λ` in ξ-coordinates. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct RepVector {
    pub lambda: Weight,
    pub coords: BTreeMap<GTPattern, Rational>,
}

impl RepVector {
    pub fn zero(lambda: &Weight) -> Self {
        RepVector {
            lambda: lambda.clone(),
            coords: BTreeMap::new(),
        }
    }

    /// `ξ_M` inside `V_{top(M)}`.
    pub fn basis(m: &GTPattern) -> Self {
        let mut v = RepVector::zero(&m.top());
        v.coords.insert(m.clone(), Rational::one());
        v
    }

    pub fn from_coords(lambda: &Weight, coords: impl IntoIterator<Item = (GTPattern, Rational)>) -> Self {
        let mut v = RepVector::zero(lambda);
        for (m, c) in coords {
            v.add_term(m, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn get(&self, m: &GTPattern) -> Rational {
        self.coords.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: GTPattern, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.coords.entry(m) {
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

    pub fn add_scaled(&mut self, other: &RepVector, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.coords {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> RepVector {
        if c.is_zero() {
            return RepVector::zero(&self.lambda);
        }
        RepVector {
            lambda: self.lambda.clone(),
            coords: self.coords.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Pieces of constant weight, in increasing weight order.
    pub fn weight_components(&self) -> Vec<(Weight, RepVector)> {
        let mut by: BTreeMap<Weight, RepVector> = BTreeMap::new();
        for (m, c) in &self.coords {
            by.entry(m.weight())
                .or_insert_with(|| RepVector::zero(&self.lambda))
                .coords
                .insert(m.clone(), c.clone());
        }
        by.into_iter().collect()
    }
}

impl fmt::Debug for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}[", self.lambda)?;
        for (i, (m, c)) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{}", fmt_rational(c), m)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize)]
struct Coord<'a> {
    pattern: &'a GTPattern,
    coeff: String,
}

impl Serialize for RepVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coords: Vec<Coord> = self
            .coords
            .iter()
            .rev()
            .map(|(m, c)| Coord {
                pattern: m,
                coeff: fmt_rational(c),
            })
            .collect();
        let mut st = s.serialize_struct("RepVector", 2)?;
        st.serialize_field("lambda", &self.lambda)?;
        st.serialize_field("coords", &coords)?;
        st.end()
    }
}
