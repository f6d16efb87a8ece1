use std::collections::BTreeMap;

use num_rational::Rational64;

use crate::arith::int::divisor_sigma;
use crate::arith::{big, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::qseries::PuiseuxSeries;

use super::eisenstein::{delta, eta, g2, g3};
use super::siegel::{exp_2pi_i, siegel};
use super::RationalVector;

const FRICKE_CONSTANT: i64 = 31104; // 2^7 3^5

fn check_vector(r: &RationalVector) -> Result<()> {
    if r.is_integral() {
        return Err(Error::Precondition(format!("{} lies in Z^2", r)));
    }
    Ok(())
}

/// Fourier development of `p(r1 tau + r2; [tau, 1])` in q, known mod `q^prec`.
pub fn wp_expansion(r: &RationalVector, prec: i64) -> Result<PuiseuxSeries> {
    check_vector(r)?;
    if prec < 1 {
        return Err(Error::Precondition(format!("precision {} < 1", prec)));
    }
    let d = *r.r1.denom();
    let window = prec * d;
    let mut terms: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
    let mut add = |k: i64, c: CyclotomicNumber| {
        let e = terms.entry(k).or_insert_with(CyclotomicNumber::zero);
        *e = e.add(&c);
    };
    add(
        0,
        CyclotomicNumber::from_rational(big(Rational64::new(1, 12))),
    );

    // sum over n of x/(1-x)^2 with x = zeta q^(n + r1)
    let lo = (-r.r1).floor().to_integer() - prec - 1;
    let hi = (-r.r1).ceil().to_integer() + prec + 1;
    for n in lo..=hi {
        let k = ((r.r1 + n) * d).to_integer();
        if k == 0 {
            let z = exp_2pi_i(r.r2);
            let w = CyclotomicNumber::one().sub(&z);
            add(0, z.div(&w.mul(&w))?);
            continue;
        }
        let (step, sign) = if k > 0 { (k, 1) } else { (-k, -1) };
        let mut j = 1;
        while j * step < window {
            let z = exp_2pi_i(r.r2 * (sign * j));
            add(j * step, z.scale_int(j));
            j += 1;
        }
    }
    for n in 1..prec {
        add(
            n * d,
            CyclotomicNumber::from_integer(-2 * divisor_sigma(n as u64, 1) as i64),
        );
    }
    // (2 pi i)^2 = -(2 pi)^2
    Ok(PuiseuxSeries::new(d as u64, terms, Some(window), 4).neg())
}

static FRICKE: Memo<(RationalVector, i64), PuiseuxSeries> = Memo::new();

/// `f_r = -2^7 3^5 (g_2 g_3 / Delta) p(r1 tau + r2)` to relative precision `prec`.
pub fn fricke(r: &RationalVector, prec: i64) -> Result<PuiseuxSeries> {
    check_vector(r)?;
    if prec < 1 {
        return Err(Error::Precondition(format!("precision {} < 1", prec)));
    }
    FRICKE.get_or_try((*r, prec), || {
        let wp = wp_expansion(r, prec)?;
        let f = g2(prec)?
            .mul(&g3(prec)?)
            .div(&delta(prec)?)?
            .mul(&wp)
            .scale_int(-FRICKE_CONSTANT);
        if f.two_pi_halfweight() != 0 {
            return Err(Error::Invariant(format!(
                "f_{} has weight {}/2 in 2 pi",
                r,
                f.two_pi_halfweight()
            )));
        }
        Ok(f)
    })
}

/// `2^7 3^5 g_2 g_3 eta^4 / Delta * g_{r+s} g_{r-s} / (g_r^2 g_s^2)`
pub fn fricke_difference_siegel(
    r: &RationalVector,
    s: &RationalVector,
    prec: i64,
) -> Result<PuiseuxSeries> {
    let front = g2(prec)?
        .mul(&g3(prec)?)
        .mul(&eta(prec)?.pow(4)?)
        .div(&delta(prec)?)?
        .scale_int(FRICKE_CONSTANT);
    let num = siegel(&r.add(s), prec)?.mul(&siegel(&r.sub(s), prec)?);
    let den = siegel(r, prec)?.mul(&siegel(s, prec)?).pow(2)?;
    Ok(front.mul(&num).div(&den)?)
}

fn check_pair(r: &RationalVector, s: &RationalVector) -> Result<()> {
    check_vector(r)?;
    check_vector(s)?;
    if r.congruent_up_to_sign(s) {
        return Err(Error::Precondition(format!(
            "{} and {} agree up to sign mod Z^2",
            r, s
        )));
    }
    Ok(())
}

/// Compare `f_r - f_s` with its Siegel product form modulo `q^prec`.
pub fn verify_fricke_siegel(r: &RationalVector, s: &RationalVector, prec: i64) -> Result<bool> {
    check_pair(r, s)?;
    let target = Rational64::from_integer(prec);
    let mut work = prec.max(1) + 1;
    for _ in 0..4 {
        let lhs = fricke(r, work)?.sub(&fricke(s, work)?)?;
        let rhs = fricke_difference_siegel(r, s, work)?;
        let diff = lhs.sub(&rhs)?;
        if diff.precision_q().map_or(true, |p| p >= target) {
            return Ok(diff.truncate_q(target).is_zero_to_precision());
        }
        work += prec;
    }
    Err(Error::InsufficientPrecision(format!(
        "could not reach O(q^{}) for r = {}, s = {}",
        prec, r, s
    )))
}

/// Run `f` at growing working precision until the result carries `prec`
/// powers of q past its valuation.
pub(crate) fn with_relative_precision(
    prec: i64,
    mut f: impl FnMut(i64) -> Result<PuiseuxSeries>,
) -> Result<PuiseuxSeries> {
    let target = Rational64::from_integer(prec);
    let mut work = prec + 2;
    for _ in 0..4 {
        let s = f(work)?;
        match s.relative_precision_q() {
            Some(p) if p < target => work += prec + 2,
            _ => return Ok(s.truncate_relative(prec)),
        }
    }
    Err(Error::InsufficientPrecision(format!(
        "relative precision {} not reached",
        prec
    )))
}

/// `(f_r - f_s) / (f_r' - f_s')` together with its Siegel product form;
/// the two are required to agree.
pub fn fricke_quotient(
    (r, s): (&RationalVector, &RationalVector),
    (r2, s2): (&RationalVector, &RationalVector),
    prec: i64,
) -> Result<PuiseuxSeries> {
    check_pair(r, s)?;
    check_pair(r2, s2)?;
    let q = with_relative_precision(prec, |w| {
        let num = fricke(r, w)?.sub(&fricke(s, w)?)?;
        let den = fricke(r2, w)?.sub(&fricke(s2, w)?)?;
        num.div(&den)
    })?;
    let siegel_form = with_relative_precision(prec, |w| {
        let a = siegel(&r.add(s), w)?
            .mul(&siegel(&r.sub(s), w)?)
            .div(&siegel(r, w)?.mul(&siegel(s, w)?).pow(2)?)?;
        let b = siegel(r2, w)?
            .mul(&siegel(s2, w)?)
            .pow(2)?
            .div(&siegel(&r2.add(s2), w)?.mul(&siegel(&r2.sub(s2), w)?))?;
        Ok(a.mul(&b))
    })?;
    if !q.agrees_with(&siegel_form)? {
        return Err(Error::Invariant(
            "Fricke quotient disagrees with its Siegel product form".into(),
        ));
    }
    Ok(q)
}

/// The Weierstrass unit `(f_[1/N,0] - f_[1/m,0]) / (f_[2/m,0] - f_[1/m,0])`.
pub fn weierstrass_unit(m: i64, n: i64, prec: i64) -> Result<PuiseuxSeries> {
    if m <= 3 || n <= m || n % m != 0 {
        return Err(Error::Precondition(format!(
            "need m > 3 and N a proper multiple of m, got m = {}, N = {}",
            m, n
        )));
    }
    let v = |a, d| RationalVector::with_denominator(a, 0, d);
    let u = fricke_quotient((&v(1, n), &v(1, m)), (&v(2, m), &v(1, m)), prec)?;
    if !u.is_rational() {
        return Err(Error::Invariant(format!(
            "Weierstrass unit for m = {}, N = {} has irrational coefficients",
            m, n
        )));
    }
    Ok(u)
}
