//! Exact rationals over 64-bit integers.
//!
//! Every arithmetic operator is checked: an overflow panics with the operands
//! in the message instead of wrapping. Values met in root-system work (root
//! coordinates, heights, Gram entries) are small, so this never triggers for
//! valid input of rank ≤ 64.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational with zero denominator: {numer}/0");
        Rational(Ratio::new(numer, denom))
    }

    pub fn from_int(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_int(value)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident, $sym:literal) => {
        impl $trait for Rational {
            type Output = Rational;

            fn $method(self, rhs: Rational) -> Rational {
                match self.0.$checked(&rhs.0) {
                    Some(value) => Rational(value),
                    None => panic!(
                        "rational overflow evaluating {} {} {} with 64-bit numerator/denominator",
                        self, $sym, rhs
                    ),
                }
            }
        }

        impl $trait<i64> for Rational {
            type Output = Rational;

            fn $method(self, rhs: i64) -> Rational {
                self.$method(Rational::from_int(rhs))
            }
        }
    };
}

checked_binop!(Add, add, checked_add, "+");
checked_binop!(Sub, sub, checked_sub, "-");
checked_binop!(Mul, mul, checked_mul, "*");

impl Div for Rational {
    type Output = Rational;

    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero: {self} / 0");
        match self.0.checked_div(&rhs.0) {
            Some(value) => Rational(value),
            None => panic!(
                "rational overflow evaluating {self} / {rhs} with 64-bit numerator/denominator"
            ),
        }
    }
}

impl Div<i64> for Rational {
    type Output = Rational;

    fn div(self, rhs: i64) -> Rational {
        self / Rational::from_int(rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;

    fn neg(self) -> Rational {
        Rational::ZERO - self
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = *self + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = *self - rhs;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::ZERO, |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let numer: i64 = numer.parse().map_err(|_| err())?;
        let denom: i64 = denom.parse().map_err(|_| err())?;
        if denom == 0 {
            return Err(err());
        }
        Ok(Rational::new(numer, denom))
    }
}

// Serialized as a string ("3", "-1/2") so JSON never loses exactness.
impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Converts an integer vector to rationals.
pub fn to_rational_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_int(x)).collect()
}

/// Returns the vector as integers if every entry is integral.
pub fn to_integer_vec(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter().map(Rational::to_integer).collect()
}

/// Formats a rational vector as `[a, b, c]`.
pub fn format_vec(v: &[Rational]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}
