use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Signed;

use crate::arith::CyclotomicNumber;
use crate::cusps::UnimodularMatrix;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::qseries::PuiseuxSeries;

use super::RationalVector;

/// B_2(x) = x^2 - x + 1/6
pub fn bernoulli2(x: Rational64) -> Rational64 {
    x * x - x + Rational64::new(1, 6)
}

/// `e^(2 pi i x)` as an exact root of unity.
pub(crate) fn exp_2pi_i(x: Rational64) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(*x.denom() as u64, *x.numer())
}

static SIEGEL: Memo<(RationalVector, i64), PuiseuxSeries> = Memo::new();

/// Product expansion of the Siegel function `g_r` to relative precision
/// `prec` (powers of q past the valuation).
pub fn siegel(r: &RationalVector, prec: i64) -> Result<PuiseuxSeries> {
    if r.is_integral() {
        return Err(Error::Precondition(format!(
            "Siegel function needs r outside Z^2, got {}",
            r
        )));
    }
    if prec < 1 {
        return Err(Error::Precondition(format!("precision {} < 1", prec)));
    }
    SIEGEL.get_or_try((*r, prec), || expand_siegel(r, prec))
}

fn expand_siegel(r: &RationalVector, prec: i64) -> Result<PuiseuxSeries> {
    let d1 = *r.r1.denom();
    let m = (2 * d1 * d1).lcm(&12) as u64;
    let window = prec * d1;
    let zeta = exp_2pi_i(r.r2);
    let zeta_inv = exp_2pi_i(-r.r2);

    let mut unit = PuiseuxSeries::new(d1 as u64, [(0, CyclotomicNumber::one())], Some(window), 0);
    let mut constant = exp_2pi_i(r.r2 * (r.r1 - 1) / 2).neg();
    let mut valuation = bernoulli2(r.r1) / 2;

    let key = |e: Rational64| (e * d1).to_integer();
    let mut factors = vec![(key(r.r1), zeta.clone())];
    let reach = prec + r.r1.abs().ceil().to_integer() + 1;
    for n in 1..=reach {
        let n = Rational64::from_integer(n);
        factors.push((key(n + r.r1), zeta.clone()));
        factors.push((key(n - r.r1), zeta_inv.clone()));
    }

    // each factor is 1 - c q^(k/d1)
    for (k, c) in factors {
        if k > 0 {
            if k < window {
                unit.mul_one_minus(&c, k);
            }
        } else if k == 0 {
            let v = CyclotomicNumber::one().sub(&c);
            if v.is_zero() {
                return Err(Error::Invariant(format!("vanishing factor in g_{}", r)));
            }
            constant = constant.mul(&v);
        } else {
            // 1 - c q^e = -c q^e (1 - c^-1 q^-e)
            constant = constant.mul(&c.neg());
            valuation += Rational64::new(k, d1);
            if -k < window {
                unit.mul_one_minus(&c.inverse()?, -k);
            }
        }
    }
    let shift = (valuation * m as i64).to_integer();
    Ok(unit
        .scale(&constant)
        .to_ramification(m)?
        .shift(shift)
        .normalized())
}

/// A finite product `prod g_r^m(r)` of Siegel functions at level N.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SiegelProduct {
    level: u64,
    factors: Vec<(RationalVector, i64)>,
}

impl SiegelProduct {
    /// Collects repeated vectors and drops zero exponents. Every vector must
    /// lie in `(1/N) Z^2 \ Z^2`.
    pub fn new(
        level: u64,
        factors: impl IntoIterator<Item = (RationalVector, i64)>,
    ) -> Result<Self> {
        if level == 0 {
            return Err(Error::Precondition("level must be positive".into()));
        }
        let mut merged: Vec<(RationalVector, i64)> = Vec::new();
        for (r, e) in factors {
            if r.is_integral() {
                return Err(Error::Precondition(format!("{} lies in Z^2", r)));
            }
            if !r.lies_in_level(level as i64) {
                return Err(Error::Precondition(format!(
                    "{} is not in (1/{})Z^2",
                    r, level
                )));
            }
            match merged.iter_mut().find(|(s, _)| *s == r) {
                Some((_, f)) => *f += e,
                None => merged.push((r, e)),
            }
        }
        merged.retain(|&(_, e)| e != 0);
        Ok(SiegelProduct {
            level,
            factors: merged,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn factors(&self) -> &[(RationalVector, i64)] {
        &self.factors
    }

    pub fn exponent_sum(&self) -> i64 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    /// The same product regarded at another level.
    pub fn with_level(&self, level: u64) -> Result<Self> {
        SiegelProduct::new(level, self.factors.iter().copied())
    }
}

impl fmt::Display for SiegelProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(r, e)| {
                if *e == 1 {
                    format!("g{}", r)
                } else {
                    format!("g{}^{}", r, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Expansion of a Siegel product to relative precision `prec`.
pub fn siegel_product_expand(p: &SiegelProduct, prec: i64) -> Result<PuiseuxSeries> {
    let mut acc = PuiseuxSeries::one();
    for (r, e) in p.factors() {
        acc = acc.mul(&siegel(r, prec)?.pow(*e)?);
    }
    Ok(acc)
}

/// Outcome of the level-N modularity test with the failing congruences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub level: u64,
    pub holds: bool,
    pub failures: Vec<String>,
}

/// Sufficient congruence conditions for a Siegel product to be modular of
/// level N.
pub fn modularity_criterion(p: &SiegelProduct) -> CriterionReport {
    let n = p.level() as i64;
    let (mut s11, mut s22, mut s12, mut s) = (0i64, 0i64, 0i64, 0i64);
    for (r, m) in p.factors() {
        let a = (r.r1 * n).to_integer();
        let b = (r.r2 * n).to_integer();
        s11 += m * a * a;
        s22 += m * b * b;
        s12 += m * a * b;
        s += m;
    }
    let quad = n.gcd(&2) * n;
    let weight = s * n.gcd(&12);
    let mut failures = Vec::new();
    if s11.rem_euclid(quad) != 0 {
        failures.push(format!("sum m(r)(N r1)^2 = {} is not 0 mod {}", s11, quad));
    }
    if s22.rem_euclid(quad) != 0 {
        failures.push(format!("sum m(r)(N r2)^2 = {} is not 0 mod {}", s22, quad));
    }
    if s12.rem_euclid(n) != 0 {
        failures.push(format!("sum m(r)(N r1)(N r2) = {} is not 0 mod {}", s12, n));
    }
    if weight.rem_euclid(12) != 0 {
        failures.push(format!(
            "sum m(r) * gcd(12, N) = {} is not 0 mod 12",
            weight
        ));
    }
    CriterionReport {
        level: p.level(),
        holds: failures.is_empty(),
        failures,
    }
}

/// Replace every vector r by the transpose of `g` applied to r. Valid as a
/// composition law when the exponents sum to 0 mod 12.
pub fn transform_siegel_product(p: &SiegelProduct, g: &UnimodularMatrix) -> Result<SiegelProduct> {
    if p.exponent_sum().rem_euclid(12) != 0 {
        return Err(Error::Precondition(format!(
            "exponent sum {} is not divisible by 12",
            p.exponent_sum()
        )));
    }
    SiegelProduct::new(
        p.level(),
        p.factors().iter().map(|(r, e)| (r.transform(g), *e)),
    )
}
