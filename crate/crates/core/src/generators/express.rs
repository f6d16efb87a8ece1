use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;

use crate::arith::{CyclotomicNumber, Rational, RationalPolynomial};
use crate::cusps::{equivalent_under_gamma1, equivalent_under_gamma_upper1, Cusp};
use crate::error::{Error, Result};
use crate::qseries::PuiseuxSeries;

use super::{cusp_value_set, hauptmodul_series, minpoly_set, Variant};

/// Pole orders at the finite cusps, in the local uniformizer.
pub type PoleProfile = HashMap<Cusp, u32>;

/// `h = P(g) / prod f(g)^k` with P, f over Q and g the hauptmodul.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpressionResult {
    pub level: u64,
    pub variant: Variant,
    pub numerator: RationalPolynomial,
    pub denominators: Vec<(RationalPolynomial, u32)>,
}

impl ExpressionResult {
    /// Re-expand against a series for the hauptmodul.
    pub fn evaluate(&self, g: &PuiseuxSeries) -> Result<PuiseuxSeries> {
        let mut out = eval_poly(&self.numerator, g);
        for (f, k) in &self.denominators {
            out = out.div(&eval_poly(f, g).pow(*k as i64)?)?;
        }
        Ok(out)
    }

    /// The numerator and denominator as single polynomials.
    pub fn as_fraction(&self) -> (RationalPolynomial, RationalPolynomial) {
        let den = self
            .denominators
            .iter()
            .fold(RationalPolynomial::one(), |acc, (f, k)| acc.mul(&f.pow(*k)));
        (self.numerator.clone(), den)
    }

    /// Same rational function in g.
    pub fn same_function(&self, other: &Self) -> bool {
        let (p1, q1) = self.as_fraction();
        let (p2, q2) = other.as_fraction();
        p1.mul(&q2) == p2.mul(&q1)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let poly = |p: &RationalPolynomial| -> Vec<String> {
            p.coefficients().iter().map(|c| c.to_string()).collect()
        };
        serde_json::json!({
            "level": self.level,
            "variant": self.variant.to_string(),
            "numerator": poly(&self.numerator),
            "denominators": self
                .denominators
                .iter()
                .map(|(f, k)| serde_json::json!({ "poly": poly(f), "power": k }))
                .collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

fn in_g(p: &RationalPolynomial) -> String {
    p.to_string().replace('x', "g")
}

impl fmt::Display for ExpressionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", in_g(&self.numerator))?;
        if self.denominators.is_empty() {
            return Ok(());
        }
        let parts: Vec<String> = self
            .denominators
            .iter()
            .map(|(p, k)| match k {
                1 => format!("({})", in_g(p)),
                _ => format!("({})^{}", in_g(p), k),
            })
            .collect();
        write!(f, " / {}", parts.join(" * "))
    }
}

pub(crate) fn eval_poly(p: &RationalPolynomial, g: &PuiseuxSeries) -> PuiseuxSeries {
    // Horner
    let mut acc = PuiseuxSeries::exact_zero();
    for c in p.coefficients().iter().rev() {
        acc = acc
            .mul(g)
            .add(&PuiseuxSeries::constant(CyclotomicNumber::from_rational(
                c.clone(),
            )))
            .expect("weight zero");
    }
    acc
}

/// Every finite cusp of the chosen curve with pole order `k`.
pub fn uniform_pole_profile(n: u64, variant: Variant, k: u32) -> PoleProfile {
    variant
        .cusps(n)
        .into_iter()
        .filter(|s| *s != Cusp::Infinity)
        .map(|s| (s, k))
        .collect()
}

/// Write `h` as a polynomial in g and the inverses `1/f(g)`, where f runs
/// over the minimal polynomials of the cusp values. The pole profile bounds
/// the pole order of `h` at each finite cusp; poles at i∞ are unrestricted.
pub fn express_in_generators(
    h: &PuiseuxSeries,
    n: u64,
    variant: Variant,
    pole_profile: &PoleProfile,
) -> Result<ExpressionResult> {
    if h.two_pi_halfweight() != 0 {
        return Err(Error::Precondition("h must have weight zero".into()));
    }
    let values = cusp_value_set(n)?;
    let minpolys = minpoly_set(n)?;

    // value of g at each cusp of the profile
    let mut orders = vec![0u32; minpolys.len()];
    for (s, &k) in pole_profile {
        if k == 0 {
            continue;
        }
        let upper = match variant {
            Variant::GammaUpper1 => *s,
            Variant::Gamma1 => s.scale(n as i64),
        };
        let at_infinity = match variant {
            Variant::GammaUpper1 => equivalent_under_gamma_upper1(s, &Cusp::Infinity, n),
            Variant::Gamma1 => equivalent_under_gamma1(s, &Cusp::Infinity, n),
        };
        if at_infinity {
            continue;
        }
        let v = values
            .value_at(&upper)
            .ok_or_else(|| Error::Precondition(format!("{} is not a cusp of level {}", s, n)))?;
        let i = minpolys
            .iter()
            .position(|f| CyclotomicNumber::eval_polynomial(f, v).is_zero())
            .ok_or_else(|| Error::Invariant(format!("no minimal polynomial vanishes at {}", v)))?;
        orders[i] = orders[i].max(k);
    }
    let mut denominators: Vec<(RationalPolynomial, u32)> = minpolys
        .into_iter()
        .zip(orders)
        .filter(|&(_, k)| k > 0)
        .collect();

    let rel = h
        .relative_precision_q()
        .map_or(60, |p| p.ceil().to_integer().max(1));
    let g = hauptmodul_series(n, variant, rel + 1)?;
    let ram = match variant {
        Variant::GammaUpper1 => n as i64,
        Variant::Gamma1 => 1,
    };

    let mut big_h = h.clone();
    for (f, k) in &denominators {
        big_h = big_h.mul(&eval_poly(f, &g).pow(*k as i64)?);
    }
    if big_h
        .precision_q()
        .is_some_and(|p| p <= Rational64::from_integer(0))
    {
        return Err(Error::InsufficientPrecision(format!(
            "h cleared of its finite poles is known only to O(q^{})",
            big_h.precision_q().unwrap()
        )));
    }

    // peel off the polar part at i∞
    let mut numerator = RationalPolynomial::zero();
    loop {
        if big_h.is_zero_to_precision() {
            break;
        }
        let v = big_h.valuation_q().expect("nonzero");
        if v > Rational64::from_integer(0) {
            return Err(Error::NotInRing(format!(
                "residual of order {} after removing the polar part",
                v
            )));
        }
        let scaled = -v * ram;
        if !scaled.is_integer() {
            return Err(Error::NotInRing(format!(
                "valuation {} is not a multiple of 1/{}",
                v, ram
            )));
        }
        let i = scaled.to_integer() as usize;
        let c: Rational = big_h
            .leading_coefficient()
            .expect("nonzero")
            .to_rational()
            .ok_or_else(|| Error::NotInRing(format!("irrational coefficient at q^{}", v)))?;
        let term = RationalPolynomial::monomial(c, i);
        big_h = big_h.sub(&eval_poly(&term, &g))?;
        numerator = numerator.add(&term);
    }

    // cancel common factors
    for (f, k) in denominators.iter_mut() {
        while *k > 0 && !numerator.is_zero() {
            let (q, r) = numerator.div_rem(f)?;
            if !r.is_zero() {
                break;
            }
            numerator = q;
            *k -= 1;
        }
    }
    denominators.retain(|&(_, k)| k > 0);
    if numerator.is_zero() {
        denominators.clear();
    }

    let out = ExpressionResult {
        level: n,
        variant,
        numerator,
        denominators,
    };
    if !out.evaluate(&g)?.agrees_with(h)? {
        return Err(Error::Invariant(format!(
            "re-expansion of {} disagrees with h",
            out
        )));
    }
    Ok(out)
}
