//! Exact rational, polynomial and cyclotomic arithmetic.

pub mod cyclotomic;
pub mod int;
pub mod poly;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
pub use poly::{Rational, RationalPolynomial};

use num_rational::Rational64;

/// Convert a small rational to an arbitrary-precision one.
pub fn big(r: Rational64) -> Rational {
    Rational::new((*r.numer()).into(), (*r.denom()).into())
}
