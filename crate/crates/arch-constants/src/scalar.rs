//! Exact scalars: Gaussian rationals and `ℚ·π^k·√2^{0|1}`.

use gt_core::rational::{fmt_rational, int};
use gt_core::Rational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// The sign `ε ∈ {±}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Epsilon {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Epsilon {
    pub fn flip(self) -> Epsilon {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        GaussianRational { re: &self.re * c, im: &self.im * c }
    }

    /// `(ε√−1)^k` for any integer `k`.
    pub fn eps_i_pow(eps: Epsilon, k: i64) -> Self {
        let unit = match k.rem_euclid(4) {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::real(-Rational::one()),
            _ => -Self::i(),
        };
        // (εi)^k = ε^k i^k
        if eps == Epsilon::Minus && k.rem_euclid(2) == 1 {
            -unit
        } else {
            unit
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: GaussianRational) -> GaussianRational {
        &self * &o
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &fmt_rational(&self.re))?;
        st.serialize_field("im", &fmt_rational(&self.im))?;
        st.end()
    }
}

/// `rational · π^{pi_power} · (√2 if sqrt2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicValue {
    pub rational: Rational,
    pub pi_power: i64,
    pub sqrt2: bool,
}

impl SymbolicValue {
    pub fn rational(q: Rational) -> Self {
        SymbolicValue { rational: q, pi_power: 0, sqrt2: false }
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Mul for &SymbolicValue {
    type Output = SymbolicValue;
    fn mul(self, o: &SymbolicValue) -> SymbolicValue {
        let mut rational = &self.rational * &o.rational;
        if self.sqrt2 && o.sqrt2 {
            rational *= int(2);
        }
        SymbolicValue {
            rational,
            pi_power: self.pi_power + o.pi_power,
            sqrt2: self.sqrt2 ^ o.sqrt2,
        }
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", fmt_rational(&self.rational))?;
        if self.pi_power != 0 {
            write!(f, "*pi^{}", self.pi_power)?;
        }
        if self.sqrt2 {
            write!(f, "*sqrt2")?;
        }
        Ok(())
    }
}

impl Serialize for SymbolicValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SymbolicValue", 3)?;
        st.serialize_field("rational", &fmt_rational(&self.rational))?;
        st.serialize_field("pi_power", &self.pi_power)?;
        st.serialize_field("sqrt2", &self.sqrt2)?;
        st.end()
    }
}
