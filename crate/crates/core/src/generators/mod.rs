//! Hauptmoduln of X_1(N) and X^1(N), their values at cusps, the resulting
//! generators of the rings of weakly holomorphic functions with rational
//! coefficients, and Fricke families.

mod express;
mod family;
mod tables;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;

use crate::arith::int::units_mod;
use crate::arith::{CyclotomicNumber, RationalPolynomial};
use crate::cusps::{cusp_list_gamma1, cusp_list_gamma_upper1, cusp_value, Cusp};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::modfunc::{
    modularity_criterion, siegel_product_expand, CriterionReport, RationalVector, SiegelProduct,
};
use crate::qseries::{PointValue, PuiseuxSeries};

pub use express::{express_in_generators, uniform_pole_profile, ExpressionResult, PoleProfile};
pub use family::{
    family_equivariance_check, fricke_family_component, vandermonde_unit,
    weierstrass_conjugate_vectors, weierstrass_degree,
};
pub use tables::{FAMILY_LEVELS, LEVELS};

/// Which of the two conjugate groups a hauptmodul is taken for.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    /// `g_{1,N}(tau)` on X_1(N), integral exponents.
    Gamma1,
    /// `g^1_N(tau) = g_{1,N}(tau/N)` on X^1(N), exponents in (1/N)Z.
    GammaUpper1,
}

impl Variant {
    pub fn cusps(&self, n: u64) -> Vec<Cusp> {
        match self {
            Variant::Gamma1 => cusp_list_gamma1(n),
            Variant::GammaUpper1 => cusp_list_gamma_upper1(n),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Gamma1 => write!(f, "gamma1"),
            Variant::GammaUpper1 => write!(f, "gamma-upper1"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gamma1" | "lower" => Ok(Variant::Gamma1),
            "gamma-upper1" | "upper" => Ok(Variant::GammaUpper1),
            _ => Err(Error::Parse(format!("unknown variant {:?}", s))),
        }
    }
}

/// The Siegel product data of the hauptmodul of level N.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HauptmodulData {
    pub level: u64,
    pub factors: Vec<(RationalVector, i64)>,
}

impl HauptmodulData {
    pub fn for_level(n: u64) -> Result<Self> {
        let (_, data) = tables::HAUPTMODUL
            .iter()
            .find(|(m, _)| *m == n)
            .ok_or(Error::UnsupportedLevel(n as u32))?;
        Ok(HauptmodulData {
            level: n,
            factors: data
                .iter()
                .map(|&(a, m)| (RationalVector::with_denominator(a, 0, n as i64), m))
                .collect(),
        })
    }

    /// `g^1_N` as a Siegel product of level N.
    pub fn product(&self) -> SiegelProduct {
        SiegelProduct::new(self.level, self.factors.iter().copied()).expect("table data")
    }

    /// The congruence test at level N and at level N^2.
    pub fn criteria(&self) -> Result<[CriterionReport; 2]> {
        let p = self.product();
        let q = p.with_level(self.level * self.level)?;
        Ok([modularity_criterion(&p), modularity_criterion(&q)])
    }
}

static HAUPTMODUL: Memo<(u64, Variant, i64), PuiseuxSeries> = Memo::new();

/// q-expansion of the hauptmodul to relative precision `prec`.
pub fn hauptmodul_series(n: u64, variant: Variant, prec: i64) -> Result<PuiseuxSeries> {
    let data = HauptmodulData::for_level(n)?;
    if prec < 1 {
        return Err(Error::Precondition(format!("precision {} < 1", prec)));
    }
    HAUPTMODUL.get_or_try((n, variant, prec), || {
        let p = data.product();
        let s = match variant {
            Variant::GammaUpper1 => siegel_product_expand(&p, prec)?,
            Variant::Gamma1 => {
                let inner = (prec + n as i64 - 1) / n as i64;
                siegel_product_expand(&p, inner)?
                    .tau_times(n)
                    .truncate_relative(prec)
            }
        };
        if !s.is_rational() {
            return Err(Error::Invariant(format!(
                "hauptmodul of level {} has irrational coefficients",
                n
            )));
        }
        Ok(s.normalized())
    })
}

/// Values of `g^1_N` at the finite cusps of X^1(N).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspValueSet {
    pub level: u64,
    pub values: Vec<(Cusp, CyclotomicNumber)>,
}

impl CuspValueSet {
    pub fn values(&self) -> impl Iterator<Item = &CyclotomicNumber> {
        self.values.iter().map(|(_, v)| v)
    }

    pub fn contains(&self, c: &CyclotomicNumber) -> bool {
        self.values().any(|v| v == c)
    }

    /// The value at a cusp of X^1(N), matched up to equivalence.
    pub fn value_at(&self, s: &Cusp) -> Option<&CyclotomicNumber> {
        self.values
            .iter()
            .find(|(t, _)| crate::cusps::equivalent_under_gamma_upper1(s, t, self.level))
            .map(|(_, v)| v)
    }
}

static VALUES: Memo<u64, CuspValueSet> = Memo::new();

/// The set C_N, paired with the cusps of X^1(N) other than i∞.
pub fn cusp_value_set(n: u64) -> Result<CuspValueSet> {
    let p = HauptmodulData::for_level(n)?.product();
    VALUES.get_or_try(n, || {
        let mut values = Vec::new();
        for s in cusp_list_gamma_upper1(n) {
            if s == Cusp::Infinity {
                continue;
            }
            let v = match cusp_value(&p, &s, 2)? {
                PointValue::Pole(o) => {
                    return Err(Error::Invariant(format!(
                        "hauptmodul of level {} has a pole of order {} at {}",
                        n, o, s
                    )))
                }
                other => other.value().expect("finite"),
            };
            values.push((s, v));
        }
        Ok(CuspValueSet { level: n, values })
    })
}

/// Distinct minimal polynomials of the elements of C_N, by degree.
pub fn minpoly_set(n: u64) -> Result<Vec<RationalPolynomial>> {
    let set = cusp_value_set(n)?;
    let mut out: Vec<RationalPolynomial> = Vec::new();
    for v in set.values() {
        let f = v.minimal_polynomial()?;
        if !out.contains(&f) {
            out.push(f);
        }
    }
    let terms = |p: &RationalPolynomial| p.coefficients().iter().filter(|c| !c.is_zero()).count();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| terms(a).cmp(&terms(b)))
            .then_with(|| a.coefficients().cmp(b.coefficients()))
    });
    Ok(out)
}

/// Stability of the value set under every sigma_d.
pub fn galois_closure_check(s: &CuspValueSet) -> bool {
    let n = s.values().fold(1u64, |acc, v| acc.lcm(&v.conductor()));
    units_mod(n).into_iter().all(|d| {
        s.values()
            .all(|v| v.galois(d as i64).map_or(false, |w| s.contains(&w)))
    })
}

/// Everything the generator statements attach to a level.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub level: u64,
    pub hauptmodul: HauptmodulData,
    pub minpolys: Vec<RationalPolynomial>,
    /// `(m, N)` for the Weierstrass unit `f^1_{m,N}` when some m < N divides N.
    pub weierstrass_component: Option<(u64, u64)>,
}

pub fn generator_set(n: u64) -> Result<GeneratorSet> {
    Ok(GeneratorSet {
        level: n,
        hauptmodul: HauptmodulData::for_level(n)?,
        minpolys: minpoly_set(n)?,
        weierstrass_component: FAMILY_LEVELS
            .iter()
            .find(|&&m| m < n && n % m == 0)
            .map(|&m| (m, n)),
    })
}

#[cfg(test)]
mod tests;
