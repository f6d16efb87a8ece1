//! JSON shape shared by the library and the command-line tool:
//!
//! ```json
//! {
//!   "ramification": 5,
//!   "two_pi_halfweight": 0,
//!   "precision": 295,
//!   "terms": [[-1, 1, ["1"]], [0, 1, ["-5"]], [3, 5, ["0", "1/2", "0", "0"]]]
//! }
//! ```
//!
//! Each term is `[k, conductor, coords]` for the coefficient of `q^(k/M)`,
//! with power-basis coordinates written as exact rational strings.
//! `precision` is `null` for an exact series.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PuiseuxSeries;
use crate::arith::{CyclotomicNumber, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub ramification: u64,
    pub two_pi_halfweight: i32,
    pub precision: Option<i64>,
    pub terms: Vec<(i64, u64, Vec<String>)>,
}

pub(crate) fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational {:?}", s)))
}

impl CyclotomicNumber {
    /// `(conductor, coords)` with coordinates as exact strings.
    pub fn to_json_parts(&self) -> (u64, Vec<String>) {
        (
            self.conductor(),
            self.coords().iter().map(rational_to_string).collect(),
        )
    }

    pub fn from_json_parts(conductor: u64, coords: &[String]) -> Result<Self> {
        let coords = coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        CyclotomicNumber::from_coords(conductor, &coords)
    }
}

impl From<&PuiseuxSeries> for SeriesJson {
    fn from(s: &PuiseuxSeries) -> Self {
        SeriesJson {
            ramification: s.ramification(),
            two_pi_halfweight: s.two_pi_halfweight(),
            precision: s.precision(),
            terms: s
                .terms()
                .map(|(k, c)| {
                    let (n, coords) = c.to_json_parts();
                    (k, n, coords)
                })
                .collect(),
        }
    }
}

impl TryFrom<&SeriesJson> for PuiseuxSeries {
    type Error = Error;

    fn try_from(j: &SeriesJson) -> Result<Self> {
        if j.ramification == 0 {
            return Err(Error::Parse("ramification must be positive".into()));
        }
        let terms = j
            .terms
            .iter()
            .map(|(k, n, coords)| Ok((*k, CyclotomicNumber::from_json_parts(*n, coords)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PuiseuxSeries::new(
            j.ramification,
            terms,
            j.precision,
            j.two_pi_halfweight,
        ))
    }
}

impl PuiseuxSeries {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeriesJson::from(self)).expect("series serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let j: SeriesJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        PuiseuxSeries::try_from(&j)
    }
}
