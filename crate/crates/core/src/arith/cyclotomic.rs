//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! An element of Q(zeta_n) is stored in the power basis
//! `1, zeta_n, ..., zeta_n^(phi(n)-1)` modulo the n-th cyclotomic polynomial,
//! as an integer coordinate vector over a common positive denominator.
//! With a fixed conductor the representation is unique, so equality and
//! rationality are coordinate checks. Elements of different conductors are
//! combined by embedding both into Q(zeta_lcm).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::int::{gcd, lcm, modulo, totient, units_mod};
use super::poly::{Rational, RationalPolynomial};
use crate::error::{Error, Result};

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = exact_divide_monic(&poly, &phi_d);
        }
    }
    let poly = Arc::new(poly);
    cyclotomic_cache()
        .write()
        .unwrap()
        .insert(n, Arc::clone(&poly));
    poly
}

fn exact_divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(c.checked_mul(d).expect("cyclotomic coefficient overflow"))
                    .expect("cyclotomic coefficient overflow");
            }
        }
    }
    debug_assert!(rem[..dd].iter().all(|&r| r == 0));
    quot
}

/// Reduce an integer polynomial in zeta_n (arbitrary length) to the power basis.
fn reduce(n: u64, mut v: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    let n = n as usize;
    if v.len() > n {
        // zeta^n = 1
        for i in n..v.len() {
            let c = std::mem::take(&mut v[i]);
            v[i % n] += c;
        }
        v.truncate(n);
    }
    for i in (deg..v.len()).rev() {
        if v[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut v[i]);
        for (j, &p) in phi[..deg].iter().enumerate() {
            if p != 0 {
                v[i - deg + j] -= &c * p;
            }
        }
    }
    v.resize(deg, BigInt::zero());
    v
}

/// An exact element of a cyclotomic field.
#[derive(Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn from_parts(conductor: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len() as u64, totient(conductor));
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                g = g.gcd(c);
            }
            if !g.is_one() {
                for c in num.iter_mut() {
                    *c /= &g;
                }
                den /= &g;
            }
        }
        let mut conductor = conductor;
        if conductor > 1 && num[1..].iter().all(Zero::is_zero) {
            num.truncate(1);
            conductor = 1;
        }
        if conductor == 2 {
            conductor = 1;
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        }
        CyclotomicNumber {
            conductor,
            num,
            den,
        }
    }

    /// Build from rational power-basis coordinates at the given conductor.
    pub fn from_coords(conductor: u64, coords: &[Rational]) -> Result<Self> {
        if conductor == 0 {
            return Err(Error::Precondition("conductor must be positive".into()));
        }
        let phi = totient(conductor) as usize;
        if coords.len() != phi {
            return Err(Error::Precondition(format!(
                "expected {} coordinates for conductor {}, got {}",
                phi,
                conductor,
                coords.len()
            )));
        }
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coords
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_parts(conductor, num, den))
    }

    pub fn from_rational(r: Rational) -> Self {
        let (n, d) = r.into();
        Self::from_parts(1, vec![n], d)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_parts(1, vec![BigInt::from(n)], BigInt::one())
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// zeta_n^k, stored at the smallest conductor that contains it.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let k = modulo(k, n as i64);
        let g = gcd(k, n as i64) as u64;
        let (n, k) = (n / g, k / g as i64);
        if n % 4 == 2 {
            // zeta_{2m} = -zeta_m^((m+1)/2) for odd m
            let m = n / 2;
            let e = k * ((m as i64 + 1) / 2);
            let base = Self::root_of_unity(m, e);
            return if k % 2 == 1 { base.neg() } else { base };
        }
        let mut v = vec![BigInt::zero(); k as usize + 1];
        v[k as usize] = BigInt::one();
        Self::from_parts(n, reduce(n, v), BigInt::one())
    }

    /// Sum of `coeff * zeta_n^k` over the given pairs.
    pub fn from_root_sum(n: u64, terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(c, k)| {
            acc.add(&Self::root_of_unity(n, k).scale_int(c))
        })
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coordinates at the current conductor.
    pub fn coords(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.is_rational() && self.num[0] == self.den
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Represent the same value in Q(zeta_target).
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target == 0 || target % self.conductor != 0 {
            return Err(Error::ConductorMismatch {
                from: self.conductor,
                to: target,
            });
        }
        Ok(self.embed_unchecked(target))
    }

    fn embed_unchecked(&self, target: u64) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut v = vec![BigInt::zero(); (self.num.len() - 1) * step + 1];
        for (i, c) in self.num.iter().enumerate() {
            v[i * step] = c.clone();
        }
        let phi = totient(target) as usize;
        if v.len() < phi {
            v.resize(phi, BigInt::zero());
        }
        // from_parts would collapse rationals back to conductor 1
        let num = reduce(target, v);
        CyclotomicNumber {
            conductor: target,
            num,
            den: self.den.clone(),
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let n = lcm(self.conductor, other.conductor);
        (self.embed_unchecked(n), other.embed_unchecked(n))
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.conductor != other.conductor {
            if other.conductor == 1 {
                return self.add_rational_parts(&other.num[0], &other.den);
            }
            if self.conductor == 1 {
                return other.add_rational_parts(&self.num[0], &self.den);
            }
            let (a, b) = self.common(other);
            return a.add(&b);
        }
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| a + b)
                .collect();
            return Self::from_parts(self.conductor, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::from_parts(self.conductor, num, &self.den * &other.den)
    }

    fn add_rational_parts(&self, n: &BigInt, d: &BigInt) -> Self {
        let mut num: Vec<BigInt> = self.num.iter().map(|c| c * d).collect();
        num[0] += n * &self.den;
        Self::from_parts(self.conductor, num, &self.den * d)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        Self::from_parts(
            self.conductor,
            self.num.iter().map(|a| a * &c).collect(),
            self.den.clone(),
        )
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Self::from_parts(
            self.conductor,
            self.num.iter().map(|a| a * c.numer()).collect(),
            &self.den * c.denom(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.conductor == 1 {
            return other.scale_parts(&self.num[0], &self.den);
        }
        if other.conductor == 1 {
            return self.scale_parts(&other.num[0], &other.den);
        }
        if self.conductor != other.conductor {
            let (a, b) = self.common(other);
            return a.mul(&b);
        }
        let mut v = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_parts(
            self.conductor,
            reduce(self.conductor, v),
            &self.den * &other.den,
        )
    }

    fn scale_parts(&self, n: &BigInt, d: &BigInt) -> Self {
        Self::from_parts(
            self.conductor,
            self.num.iter().map(|a| a * n).collect(),
            &self.den * d,
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_parts(
                1,
                vec![self.den.clone()],
                self.num[0].clone(),
            ));
        }
        let modulus = RationalPolynomial::from_integers(&cyclotomic_polynomial(self.conductor));
        let a = RationalPolynomial::new(self.coords());
        let (g, s, _) = a.extended_gcd(&modulus);
        if g != RationalPolynomial::one() {
            return Err(Error::Invariant(
                "element not invertible modulo the cyclotomic polynomial".into(),
            ));
        }
        let phi = self.num.len();
        let mut coords = s.coefficients().to_vec();
        coords.resize(phi, Rational::zero());
        Self::from_coords(self.conductor, &coords)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// The automorphism sigma_d: zeta_n -> zeta_n^d.
    pub fn galois(&self, d: i64) -> Result<Self> {
        let n = self.conductor;
        if gcd(d, n as i64) != 1 {
            return Err(Error::NotCoprime { d, n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut v = vec![BigInt::zero(); n as usize];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                v[modulo(d * k as i64, n as i64) as usize] += c;
            }
        }
        Ok(Self::from_parts(n, reduce(n, v), self.den.clone()))
    }

    /// Distinct Galois conjugates, in order of the first d producing them.
    pub fn conjugates(&self) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::new();
        for d in units_mod(self.conductor) {
            let c = self.galois(d as i64).expect("unit is coprime");
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Minimal polynomial over Q, as the product of (x - c') over the
    /// distinct conjugates c'.
    pub fn minimal_polynomial(&self) -> Result<RationalPolynomial> {
        // coefficients lowest degree first
        let mut acc: Vec<CyclotomicNumber> = vec![Self::one()];
        for c in self.conjugates() {
            let minus_c = c.neg();
            let mut next = vec![Self::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = next[i + 1].add(a);
                next[i] = next[i].add(&a.mul(&minus_c));
            }
            acc = next;
        }
        let coeffs = acc
            .iter()
            .map(|c| {
                c.to_rational().ok_or_else(|| {
                    Error::Invariant(format!(
                        "conjugate product has irrational coefficient {}",
                        c
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RationalPolynomial::new(coeffs))
    }

    pub fn eval_polynomial(p: &RationalPolynomial, x: &Self) -> Self {
        let mut acc = Self::zero();
        for c in p.coefficients().iter().rev() {
            acc = acc.mul(x).add(&Self::from_rational(c.clone()));
        }
        acc
    }

    /// Multiplicative order if this is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u64> {
        let bound = lcm(2, self.conductor);
        (1..=bound)
            .filter(|k| bound % k == 0)
            .find(|&k| self.pow(k as i64).is_ok_and(|p| p.is_one()))
    }

    /// Floating-point value under zeta_n -> exp(2 pi i / n). Debug aid only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let t = 2.0 * std::f64::consts::PI * k as f64 / n;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = self.common(other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber({})", self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let n = self.conductor;
        let denom = if self.den.is_one() {
            String::new()
        } else {
            format!("/{}", self.den)
        };
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{}{}", abs, denom)?,
                _ => {
                    if !abs.is_one() || !denom.is_empty() {
                        write!(f, "{}{}*", abs, denom)?;
                    }
                    if k == 1 {
                        write!(f, "z{}", n)?;
                    } else {
                        write!(f, "z{}^{}", n, k)?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
