//! Truncated Laurent series in fractional powers of q with cyclotomic
//! coefficients.
//!
//! A [`PuiseuxSeries`] with ramification `M` stores the coefficient of
//! `q^(k/M)` under the key `k`. The series is known modulo `q^(P/M)` where
//! `P` is its precision (`None` marks an exact finite Laurent polynomial).
//! A global factor `(2 pi)^(w/2)` is carried symbolically in
//! `two_pi_halfweight` so that weight bookkeeping is exact.

mod json;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};

pub use json::SeriesJson;

/// Value of a weight-0 series at q = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointValue {
    ZeroAtInfinity,
    Finite(CyclotomicNumber),
    /// Pole of the given order, in units of q.
    Pole(Rational64),
}

impl PointValue {
    /// The value as a field element; `None` for a pole.
    pub fn value(&self) -> Option<CyclotomicNumber> {
        match self {
            PointValue::ZeroAtInfinity => Some(CyclotomicNumber::zero()),
            PointValue::Finite(c) => Some(c.clone()),
            PointValue::Pole(_) => None,
        }
    }
}

/// Equality compares normalized representations, so the same data at
/// different ramifications compares equal.
#[derive(Clone)]
pub struct PuiseuxSeries {
    ramification: u64,
    terms: BTreeMap<i64, CyclotomicNumber>,
    precision: Option<i64>,
    two_pi_halfweight: i32,
}

fn min_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (None, p) | (p, None) => p,
        (Some(x), Some(y)) => Some(x.min(y)),
    }
}

impl PuiseuxSeries {
    /// Build a series, dropping zero coefficients and terms outside the
    /// known window.
    pub fn new(
        ramification: u64,
        terms: impl IntoIterator<Item = (i64, CyclotomicNumber)>,
        precision: Option<i64>,
        two_pi_halfweight: i32,
    ) -> Self {
        assert!(ramification >= 1, "ramification must be positive");
        let terms = terms
            .into_iter()
            .filter(|(k, c)| !c.is_zero() && precision.map_or(true, |p| *k < p))
            .fold(BTreeMap::new(), |mut acc, (k, c)| {
                let e: &mut CyclotomicNumber = acc.entry(k).or_insert_with(CyclotomicNumber::zero);
                *e = e.add(&c);
                acc
            });
        let mut s = PuiseuxSeries {
            ramification,
            terms,
            precision,
            two_pi_halfweight,
        };
        s.drop_zeros();
        s
    }

    fn drop_zeros(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn exact_zero() -> Self {
        Self::new(1, [], None, 0)
    }

    pub fn one() -> Self {
        Self::constant(CyclotomicNumber::one())
    }

    pub fn constant(c: CyclotomicNumber) -> Self {
        Self::new(1, [(0, c)], None, 0)
    }

    /// The exact monomial `c * q^(k/M)`.
    pub fn monomial(c: CyclotomicNumber, k: i64, ramification: u64) -> Self {
        Self::new(ramification, [(k, c)], None, 0)
    }

    /// `0 + O(q^(p/M))`.
    pub fn zero_to(ramification: u64, precision: i64) -> Self {
        Self::new(ramification, [], Some(precision), 0)
    }

    pub fn ramification(&self) -> u64 {
        self.ramification
    }

    /// Precision numerator `P` (series known mod `q^(P/M)`); `None` if exact.
    pub fn precision(&self) -> Option<i64> {
        self.precision
    }

    pub fn precision_q(&self) -> Option<Rational64> {
        self.precision
            .map(|p| Rational64::new(p, self.ramification as i64))
    }

    pub fn two_pi_halfweight(&self) -> i32 {
        self.two_pi_halfweight
    }

    pub fn with_two_pi_halfweight(mut self, w: i32) -> Self {
        self.two_pi_halfweight = w;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CyclotomicNumber)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^e`; zero if absent. Errors outside the known window.
    pub fn coefficient(&self, e: Rational64) -> Result<CyclotomicNumber> {
        let scaled = e * Rational64::from_integer(self.ramification as i64);
        if let Some(p) = self.precision_q() {
            if e >= p {
                return Err(Error::InsufficientPrecision(format!(
                    "coefficient of q^{} requested, series known mod q^{}",
                    e, p
                )));
            }
        }
        if !scaled.is_integer() {
            return Ok(CyclotomicNumber::zero());
        }
        Ok(self
            .terms
            .get(&scaled.to_integer())
            .cloned()
            .unwrap_or_else(CyclotomicNumber::zero))
    }

    /// Smallest stored key.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn valuation_q(&self) -> Option<Rational64> {
        self.valuation()
            .map(|v| Rational64::new(v, self.ramification as i64))
    }

    pub fn leading_coefficient(&self) -> Option<&CyclotomicNumber> {
        self.terms.values().next()
    }

    /// Number of q-units known past the leading term.
    pub fn relative_precision_q(&self) -> Option<Rational64> {
        match (self.precision, self.valuation()) {
            (None, _) => None,
            (Some(p), Some(v)) => Some(Rational64::new(p - v, self.ramification as i64)),
            (Some(_), None) => Some(Rational64::zero()),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    /// No nonzero term inside the known window.
    pub fn is_zero_to_precision(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.values().all(CyclotomicNumber::is_rational)
    }

    pub fn coefficient_conductor(&self) -> u64 {
        self.terms
            .values()
            .fold(1, |acc, c| acc.lcm(&c.conductor()))
    }

    /// Re-express with ramification `m`, which must be a multiple of the current one.
    pub fn to_ramification(&self, m: u64) -> Result<Self> {
        if m == 0 || m % self.ramification != 0 {
            return Err(Error::Precondition(format!(
                "ramification {} is not a multiple of {}",
                m, self.ramification
            )));
        }
        let f = (m / self.ramification) as i64;
        Ok(PuiseuxSeries {
            ramification: m,
            terms: self.terms.iter().map(|(k, c)| (k * f, c.clone())).collect(),
            precision: self.precision.map(|p| p * f),
            two_pi_halfweight: self.two_pi_halfweight,
        })
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.ramification.lcm(&other.ramification);
        (
            self.to_ramification(m).expect("lcm is a multiple"),
            other.to_ramification(m).expect("lcm is a multiple"),
        )
    }

    /// Smallest ramification that represents the same data.
    pub fn normalized(&self) -> Self {
        let mut g = self.ramification as i64;
        for k in self.terms.keys() {
            g = g.gcd(k);
        }
        if let Some(p) = self.precision {
            g = g.gcd(&p);
        }
        if g <= 1 {
            return self.clone();
        }
        PuiseuxSeries {
            ramification: self.ramification / g as u64,
            terms: self.terms.iter().map(|(k, c)| (k / g, c.clone())).collect(),
            precision: self.precision.map(|p| p / g),
            two_pi_halfweight: self.two_pi_halfweight,
        }
    }

    /// Discard everything from `q^(p/M)` on.
    pub fn truncate(&self, p: i64) -> Self {
        let p = self.precision.map_or(p, |q| q.min(p));
        Self::new(
            self.ramification,
            self.terms.iter().map(|(&k, c)| (k, c.clone())),
            Some(p),
            self.two_pi_halfweight,
        )
    }

    /// Discard everything from `q^e` on.
    pub fn truncate_q(&self, e: Rational64) -> Self {
        let scaled = e * Rational64::from_integer(self.ramification as i64);
        self.truncate(scaled.ceil().to_integer())
    }

    /// Keep `rel` whole powers of q past the valuation.
    pub fn truncate_relative(&self, rel: i64) -> Self {
        match self.valuation() {
            Some(v) => self.truncate(v + rel * self.ramification as i64),
            None => self.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self.terms.iter().map(|(&k, c)| (k, c.neg())).collect(),
            precision: self.precision,
            two_pi_halfweight: self.two_pi_halfweight,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.two_pi_halfweight != other.two_pi_halfweight {
            return Err(Error::GradingMismatch {
                left: self.two_pi_halfweight,
                right: other.two_pi_halfweight,
            });
        }
        let (mut a, b) = self.common(other);
        let p = min_prec(a.precision, b.precision);
        for (k, c) in b.terms {
            let e = a.terms.entry(k).or_insert_with(CyclotomicNumber::zero);
            *e = e.add(&c);
        }
        if let Some(p) = p {
            a.terms.retain(|&k, _| k < p);
        }
        a.precision = p;
        a.drop_zeros();
        Ok(a)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        if c.is_zero() {
            return Self::exact_zero().with_two_pi_halfweight(self.two_pi_halfweight);
        }
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self.terms.iter().map(|(&k, a)| (k, a.mul(c))).collect(),
            precision: self.precision,
            two_pi_halfweight: self.two_pi_halfweight,
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&CyclotomicNumber::from_integer(c))
    }

    /// Multiply by `q^(k/M)` (in this series' ramification).
    pub fn shift(&self, k: i64) -> Self {
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
            precision: self.precision.map(|p| p + k),
            two_pi_halfweight: self.two_pi_halfweight,
        }
    }

    /// Lower bound for the valuation: the leading key, or the precision for
    /// a series that is zero to precision.
    fn order_bound(&self) -> Option<i64> {
        self.valuation().or(self.precision)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let w = self.two_pi_halfweight + other.two_pi_halfweight;
        let exact_zero = |s: &Self| s.is_exact() && s.terms.is_empty();
        if exact_zero(self) || exact_zero(other) {
            return Self::exact_zero().with_two_pi_halfweight(w);
        }
        let (a, b) = self.common(other);
        let (va, vb) = (a.order_bound().unwrap(), b.order_bound().unwrap());
        let p = match (a.precision, b.precision) {
            (None, None) => None,
            (Some(pa), None) => Some(pa + vb),
            (None, Some(pb)) => Some(pb + va),
            (Some(pa), Some(pb)) => Some((pa + vb).min(pb + va)),
        };
        let mut out: BTreeMap<i64, CyclotomicNumber> = BTreeMap::new();
        for (&ka, ca) in &a.terms {
            for (&kb, cb) in &b.terms {
                let k = ka + kb;
                if p.is_some_and(|p| k >= p) {
                    break;
                }
                let prod = ca.mul(cb);
                match out.get_mut(&k) {
                    Some(e) => *e = e.add(&prod),
                    None => {
                        out.insert(k, prod);
                    }
                }
            }
        }
        let mut s = PuiseuxSeries {
            ramification: a.ramification,
            terms: out,
            precision: p,
            two_pi_halfweight: w,
        };
        s.drop_zeros();
        s
    }

    /// Multiply in place by the binomial `1 - c q^(k/M)` (k > 0).
    pub(crate) fn mul_one_minus(&mut self, c: &CyclotomicNumber, k: i64) {
        debug_assert!(k > 0);
        let shifted: Vec<(i64, CyclotomicNumber)> = self
            .terms
            .iter()
            .map(|(&e, a)| (e + k, a.mul(c)))
            .filter(|(e, _)| self.precision.map_or(true, |p| *e < p))
            .collect();
        for (e, v) in shifted {
            let entry = self.terms.entry(e).or_insert_with(CyclotomicNumber::zero);
            *entry = entry.sub(&v);
        }
        self.drop_zeros();
    }

    /// Multiplicative inverse to the relative precision of `self`.
    pub fn invert(&self) -> Result<Self> {
        let (v, lead) = match self.terms.iter().next() {
            None => return Err(Error::DivisionByZero),
            Some((&v, c)) => (v, c.clone()),
        };
        let lead_inv = lead.inverse()?;
        let w = -self.two_pi_halfweight;
        let p =
            match self.precision {
                None if self.terms.len() == 1 => {
                    return Ok(Self::new(self.ramification, [(-v, lead_inv)], None, w));
                }
                None => return Err(Error::Precondition(
                    "an exact series with several terms has no finite inverse; truncate it first"
                        .into(),
                )),
                Some(p) => p,
            };
        let rel = p - v;
        let step = self
            .terms
            .keys()
            .skip(1)
            .fold(0i64, |g, &k| g.gcd(&(k - v)));
        let step = if step == 0 { rel } else { step };
        let n = ((rel + step - 1) / step) as usize;
        let mut a: Vec<(usize, CyclotomicNumber)> = Vec::new();
        for (&k, c) in self.terms.iter().skip(1) {
            let j = ((k - v) / step) as usize;
            if j < n {
                a.push((j, c.clone()));
            }
        }
        let mut b: Vec<CyclotomicNumber> = Vec::with_capacity(n);
        b.push(lead_inv.clone());
        for i in 1..n {
            let mut acc = CyclotomicNumber::zero();
            for (j, aj) in &a {
                if *j > i {
                    break;
                }
                let bij = &b[i - j];
                if !bij.is_zero() {
                    acc = acc.add(&aj.mul(bij));
                }
            }
            b.push(acc.mul(&lead_inv).neg());
        }
        Ok(Self::new(
            self.ramification,
            b.into_iter()
                .enumerate()
                .map(|(i, c)| (-v + i as i64 * step, c)),
            Some(p - 2 * v),
            w,
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.invert()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.invert()?.pow(-e);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Substitute tau -> k*tau, i.e. q -> q^k.
    pub fn tau_times(&self, k: u64) -> Self {
        let k = k as i64;
        PuiseuxSeries {
            ramification: self.ramification,
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e * k, c.clone()))
                .collect(),
            precision: self.precision.map(|p| p * k),
            two_pi_halfweight: self.two_pi_halfweight,
        }
        .normalized()
    }

    /// Substitute tau -> tau/k, i.e. q -> q^(1/k).
    pub fn tau_over(&self, k: u64) -> Self {
        PuiseuxSeries {
            ramification: self.ramification * k,
            terms: self.terms.clone(),
            precision: self.precision,
            two_pi_halfweight: self.two_pi_halfweight,
        }
        .normalized()
    }

    /// Apply sigma_d to every coefficient.
    pub fn coefficients_galois(&self, d: i64) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(&k, c)| Ok((k, c.galois(d)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(PuiseuxSeries {
            ramification: self.ramification,
            terms,
            precision: self.precision,
            two_pi_halfweight: self.two_pi_halfweight,
        })
    }

    /// Behaviour at q = 0 of a weight-0 series.
    pub fn constant_term_or_order(&self) -> Result<PointValue> {
        if self.two_pi_halfweight != 0 {
            return Err(Error::GradingMismatch {
                left: self.two_pi_halfweight,
                right: 0,
            });
        }
        match self.valuation() {
            Some(v) if v < 0 => Ok(PointValue::Pole(Rational64::new(
                -v,
                self.ramification as i64,
            ))),
            Some(0) => Ok(PointValue::Finite(self.terms[&0].clone())),
            Some(_) => Ok(PointValue::ZeroAtInfinity),
            None => match self.precision {
                Some(p) if p <= 0 => Err(Error::InsufficientPrecision(format!(
                    "series is only known mod q^{}",
                    Rational64::new(p, self.ramification as i64)
                ))),
                _ => Ok(PointValue::ZeroAtInfinity),
            },
        }
    }

    /// True when `self - other` vanishes in the common window.
    pub fn agrees_with(&self, other: &Self) -> Result<bool> {
        Ok(self.sub(other)?.terms.is_empty())
    }
}

impl PartialEq for PuiseuxSeries {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.normalized(), other.normalized());
        a.ramification == b.ramification
            && a.precision == b.precision
            && a.two_pi_halfweight == b.two_pi_halfweight
            && a.terms == b.terms
    }
}

impl Eq for PuiseuxSeries {}

fn fmt_exponent(k: i64, m: u64) -> String {
    let e = Rational64::new(k, m as i64);
    if e.is_integer() && e >= Rational64::from_integer(0) {
        e.to_integer().to_string()
    } else if e.is_integer() {
        format!("({})", e.to_integer())
    } else {
        format!("({}/{})", e.numer(), e.denom())
    }
}

fn fmt_power(k: i64, m: u64) -> String {
    if k == m as i64 {
        "q".into()
    } else {
        format!("q^{}", fmt_exponent(k, m))
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.two_pi_halfweight != 0 {
            write!(f, "(2pi)^({}/2) * (", self.two_pi_halfweight)?;
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            // rational coefficients carry their sign into the separator
            let (negative, body) = match c.to_rational() {
                Some(r) if r < Rational::zero() => (true, (-r).to_string()),
                Some(r) => (false, r.to_string()),
                None => (false, format!("({})", c)),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if k == 0 {
                write!(f, "{}", body)?;
            } else if body == "1" {
                write!(f, "{}", fmt_power(k, self.ramification))?;
            } else {
                write!(f, "{}*{}", body, fmt_power(k, self.ramification))?;
            }
        }
        match self.precision {
            Some(p) => {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "O({})", fmt_power(p, self.ramification))?;
            }
            None if first => write!(f, "0")?,
            None => {}
        }
        if self.two_pi_halfweight != 0 {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxSeries[M={}]({})", self.ramification, self)
    }
}
