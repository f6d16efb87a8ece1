//! Exact q-expansions of Siegel functions, Fricke functions and Weierstrass
//! units over cyclotomic fields, cusp values of modular units for the genus
//! zero groups Gamma_1(N), and explicit generators of the rings of weakly
//! holomorphic modular functions with rational Fourier coefficients.

pub mod arith;
pub mod cusps;
pub mod error;
pub mod generators;
mod memo;
pub mod modfunc;
pub mod qseries;
#[cfg(test)]
mod testutil;

pub use arith::{CyclotomicNumber, Rational, RationalPolynomial};
pub use cusps::{Cusp, UnimodularMatrix};
pub use error::{Error, Result};
pub use generators::{ExpressionResult, Variant};
pub use modfunc::{RationalVector, SiegelProduct};
pub use qseries::{PointValue, PuiseuxSeries};
