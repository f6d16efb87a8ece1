//! Level one forms. All powers of 2 pi are kept in the grading.

use crate::arith::int::divisor_sigma;
use crate::arith::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::qseries::PuiseuxSeries;

fn check(prec: i64) -> Result<()> {
    if prec < 1 {
        return Err(Error::Precondition(format!("precision {} < 1", prec)));
    }
    Ok(())
}

fn from_integers(coeffs: impl IntoIterator<Item = (i64, i64)>, prec: i64) -> PuiseuxSeries {
    PuiseuxSeries::new(
        1,
        coeffs
            .into_iter()
            .map(|(k, c)| (k, CyclotomicNumber::from_integer(c))),
        Some(prec),
        0,
    )
}

fn eisenstein(c: i64, k: u32, prec: i64) -> PuiseuxSeries {
    let tail = (1..prec).map(|n| (n, c * divisor_sigma(n as u64, k) as i64));
    from_integers(std::iter::once((0, 1)).chain(tail), prec)
}

/// E_4 = 1 + 240 sum sigma_3(n) q^n
pub fn e4(prec: i64) -> Result<PuiseuxSeries> {
    check(prec)?;
    Ok(eisenstein(240, 3, prec))
}

/// E_6 = 1 - 504 sum sigma_5(n) q^n
pub fn e6(prec: i64) -> Result<PuiseuxSeries> {
    check(prec)?;
    Ok(eisenstein(-504, 5, prec))
}

static EULER: Memo<i64, PuiseuxSeries> = Memo::new();
static DELTA: Memo<i64, PuiseuxSeries> = Memo::new();

/// prod_{n >= 1} (1 - q^n)
fn euler_product(prec: i64) -> Result<PuiseuxSeries> {
    EULER.get_or_try(prec, || {
        let mut p = PuiseuxSeries::new(1, [(0, CyclotomicNumber::one())], Some(prec), 0);
        let one = CyclotomicNumber::one();
        for n in 1..prec {
            p.mul_one_minus(&one, n);
        }
        Ok(p)
    })
}

/// eta = sqrt(2 pi) zeta_8 q^(1/24) prod (1 - q^n)
pub fn eta(prec: i64) -> Result<PuiseuxSeries> {
    check(prec)?;
    let z8 = CyclotomicNumber::root_of_unity(8, 1);
    Ok(euler_product(prec)?
        .scale(&z8)
        .to_ramification(24)?
        .shift(1)
        .with_two_pi_halfweight(1))
}

/// Delta = (2 pi)^12 q prod (1 - q^n)^24
pub fn delta(prec: i64) -> Result<PuiseuxSeries> {
    check(prec)?;
    DELTA.get_or_try(prec, || {
        Ok(euler_product(prec)?
            .pow(24)?
            .shift(1)
            .with_two_pi_halfweight(24))
    })
}

/// g_2 = (2 pi)^4 E_4 / 12
pub fn g2(prec: i64) -> Result<PuiseuxSeries> {
    let c = CyclotomicNumber::from_integer(12).inverse()?;
    Ok(e4(prec)?.scale(&c).with_two_pi_halfweight(8))
}

/// g_3 = (2 pi)^6 E_6 / 216
pub fn g3(prec: i64) -> Result<PuiseuxSeries> {
    let c = CyclotomicNumber::from_integer(216).inverse()?;
    Ok(e6(prec)?.scale(&c).with_two_pi_halfweight(12))
}

/// j = 1728 g_2^3 / Delta
pub fn j_invariant(prec: i64) -> Result<PuiseuxSeries> {
    let num = g2(prec)?.pow(3)?.scale_int(1728);
    let j = num.div(&delta(prec)?)?;
    debug_assert_eq!(j.two_pi_halfweight(), 0);
    Ok(j)
}
