use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Rational64;

use crate::cusps::UnimodularMatrix;
use crate::error::{Error, Result};

/// A column vector `[r1, r2]` of rationals indexing Siegel and Fricke functions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RationalVector {
    pub r1: Rational64,
    pub r2: Rational64,
}

impl RationalVector {
    pub fn new(r1: Rational64, r2: Rational64) -> Self {
        RationalVector { r1, r2 }
    }

    /// `[a/n, b/n]`
    pub fn with_denominator(a: i64, b: i64, n: i64) -> Self {
        RationalVector::new(Rational64::new(a, n), Rational64::new(b, n))
    }

    pub fn is_integral(&self) -> bool {
        self.r1.is_integer() && self.r2.is_integer()
    }

    /// Least common denominator of the two entries.
    pub fn denominator(&self) -> i64 {
        self.r1.denom().lcm(self.r2.denom())
    }

    /// True if `n * self` is integral.
    pub fn lies_in_level(&self, n: i64) -> bool {
        n % self.denominator() == 0
    }

    pub fn neg(&self) -> Self {
        RationalVector::new(-self.r1, -self.r2)
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalVector::new(self.r1 + other.r1, self.r2 + other.r2)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RationalVector::new(self.r1 - other.r1, self.r2 - other.r2)
    }

    pub fn scale(&self, k: Rational64) -> Self {
        RationalVector::new(self.r1 * k, self.r2 * k)
    }

    /// Representative with both entries in `[0, 1)`.
    pub fn reduced(&self) -> Self {
        let frac = |x: Rational64| x - x.floor();
        RationalVector::new(frac(self.r1), frac(self.r2))
    }

    /// `self ≡ other (mod Z^2)`
    pub fn congruent(&self, other: &Self) -> bool {
        self.sub(other).is_integral()
    }

    /// `self ≡ ±other (mod Z^2)`
    pub fn congruent_up_to_sign(&self, other: &Self) -> bool {
        self.congruent(other) || self.congruent(&other.neg())
    }

    /// The transpose of `g` applied to `self`, without reduction mod Z^2.
    pub fn transform(&self, g: &UnimodularMatrix) -> Self {
        let (a, b, c, d) = (
            Rational64::from_integer(g.a),
            Rational64::from_integer(g.b),
            Rational64::from_integer(g.c),
            Rational64::from_integer(g.d),
        );
        RationalVector::new(a * self.r1 + c * self.r2, b * self.r1 + d * self.r2)
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.r1, self.r2)
    }
}

impl FromStr for RationalVector {
    type Err = Error;

    /// Accepts `a/b,c/d`, optionally wrapped in brackets.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts: Vec<&str> = t.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected two entries in {:?}", s)));
        }
        let parse = |p: &str| {
            Rational64::from_str(p)
                .map_err(|_| Error::Parse(format!("bad rational {:?} in {:?}", p, s)))
        };
        Ok(RationalVector::new(parse(parts[0])?, parse(parts[1])?))
    }
}
