use num_integer::Integer;
use num_rational::Rational64;

use crate::arith::int::gcd;
use crate::error::{Error, Result};
use crate::modfunc::{fricke_quotient, siegel_product_expand, RationalVector, SiegelProduct};
use crate::qseries::PuiseuxSeries;

use super::tables::{FAMILY_LEVELS, HAUPTMODUL};

fn check_family(n: u64, m: u64) -> Result<()> {
    if !FAMILY_LEVELS.contains(&m) {
        return Err(Error::UnsupportedLevel(m as u32));
    }
    if n % m != 0 {
        return Err(Error::Precondition(format!("{} does not divide {}", m, n)));
    }
    Ok(())
}

fn primitive_of_level(r: &RationalVector, n: u64) -> bool {
    let n = n as i64;
    r.lies_in_level(n) && {
        let a = (r.r1 * n).to_integer();
        let b = (r.r2 * n).to_integer();
        gcd(gcd(a, b), n) == 1
    }
}

/// The pair `(g_r, f_r)` of the Fricke family of level N built from the
/// level m hauptmodul and Weierstrass unit, for r of exact order N.
pub fn fricke_family_component(
    n: u64,
    m: u64,
    r: &RationalVector,
    prec: i64,
) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    check_family(n, m)?;
    if !primitive_of_level(r, n) {
        return Err(Error::Precondition(format!(
            "{} does not have exact order {}",
            r, n
        )));
    }
    let (_, data) = HAUPTMODUL
        .iter()
        .find(|(l, _)| *l == m)
        .expect("family level");
    let k = (n / m) as i64;
    let p = SiegelProduct::new(
        m,
        data.iter()
            .map(|&(a, e)| (r.scale(Rational64::from_integer(a * k)), e)),
    )?;
    let g = siegel_product_expand(&p, prec)?;
    let f = if n == m {
        PuiseuxSeries::exact_zero()
    } else {
        let s = r.scale(Rational64::from_integer(k));
        let t = r.scale(Rational64::from_integer(2 * k));
        fricke_quotient((r, &s), (&t, &s), prec)?
    };
    Ok((g, f))
}

/// Whether `sigma_d` on coefficients agrees with `r -> (r1, d r2)` on both
/// members of the family at `r = [1/N, 0]`.
pub fn family_equivariance_check(n: u64, m: u64, d: i64, prec: i64) -> Result<bool> {
    check_family(n, m)?;
    if gcd(d, n as i64) != 1 {
        return Err(Error::NotCoprime { d, n });
    }
    let r = RationalVector::with_denominator(1, 0, n as i64);
    let (g, f) = fricke_family_component(n, m, &r, prec)?;
    let conductor = g.coefficient_conductor().lcm(&f.coefficient_conductor());
    // lift d to a unit modulo the full coefficient field
    let mut lift = d.rem_euclid(n as i64);
    while gcd(lift, conductor as i64) != 1 {
        lift += n as i64;
    }
    let image = RationalVector::new(r.r1, r.r2 * lift);
    let (g2, f2) = fricke_family_component(n, m, &image, prec)?;
    Ok(g.coefficients_galois(lift)?.agrees_with(&g2)?
        && f.coefficients_galois(lift)?.agrees_with(&f2)?)
}

/// Representatives `[a/N, b/N]` with `a = 1`, `b = 0 mod m`, primitive mod N,
/// taken up to sign mod Z^2.
pub fn weierstrass_conjugate_vectors(m: u64, n: u64) -> Result<Vec<RationalVector>> {
    check_family(n, m)?;
    let (m, n) = (m as i64, n as i64);
    let mut out: Vec<RationalVector> = Vec::new();
    for a in (1..n).step_by(m as usize) {
        for b in (0..n).step_by(m as usize) {
            if gcd(gcd(a, b), n) != 1 {
                continue;
            }
            let v = RationalVector::with_denominator(a, b, n);
            if !out.iter().any(|w| w.congruent_up_to_sign(&v)) {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// `[Gamma_1(m) : Gamma_1(N)]`, from the index formula.
pub fn weierstrass_degree(m: u64, n: u64) -> u64 {
    fn index(n: u64) -> Rational64 {
        let mut x = Rational64::from_integer((n * n) as i64);
        for p in 2..=n {
            if n % p == 0 && (2..p).all(|q| p % q != 0) {
                x *= Rational64::new((p * p - 1) as i64, (p * p) as i64);
            }
        }
        x
    }
    (index(n) / index(m)).to_integer() as u64
}

/// `prod_{i<j} (f_vi - f_vj)^2 / (f_[2/m,0] - f_[1/m,0])^(d(d-1))` over the
/// conjugate vectors; a modular unit of level m with rational coefficients.
pub fn vandermonde_unit(m: u64, n: u64, prec: i64) -> Result<PuiseuxSeries> {
    let vs = weierstrass_conjugate_vectors(m, n)?;
    let one = RationalVector::with_denominator(1, 0, m as i64);
    let two = RationalVector::with_denominator(2, 0, m as i64);
    let mut acc = PuiseuxSeries::one();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let q = fricke_quotient((&vs[i], &vs[j]), (&two, &one), prec)?;
            acc = acc.mul(&q.mul(&q));
        }
    }
    let acc = acc.truncate_relative(prec);
    if !acc.is_rational() {
        return Err(Error::Invariant(format!(
            "Vandermonde unit for m = {}, N = {} has irrational coefficients",
            m, n
        )));
    }
    Ok(acc)
}
