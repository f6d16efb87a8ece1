//! Floating-point evaluation used as an independent check on exact series.

use num_complex::Complex64;

use crate::arith::CyclotomicNumber;
use crate::qseries::PuiseuxSeries;

pub fn complex(c: &CyclotomicNumber) -> Complex64 {
    let (re, im) = c.to_complex();
    Complex64::new(re, im)
}

/// `e^(2 pi i tau x)`
pub fn q_power(tau: Complex64, x: f64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * tau * x).exp()
}

/// Sum of the known terms at `tau`, times `(2 pi)^(w/2)`.
pub fn eval(s: &PuiseuxSeries, tau: Complex64) -> Complex64 {
    let m = s.ramification() as f64;
    let w = (2.0 * std::f64::consts::PI)
        .sqrt()
        .powi(s.two_pi_halfweight());
    s.terms()
        .map(|(k, c)| complex(c) * q_power(tau, k as f64 / m))
        .sum::<Complex64>()
        * w
}

pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}
