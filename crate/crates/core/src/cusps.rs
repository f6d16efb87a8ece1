//! SL_2(Z) matrices, cusps of Gamma_1(N) and Gamma^1(N), and values of
//! Siegel products at cusps.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::arith::int::{mod_inverse, modulo};
use crate::error::{Error, Result};
use crate::modfunc::{siegel_product_expand, transform_siegel_product, SiegelProduct};
use crate::qseries::PointValue;

/// `[[a, b], [c, d]]` with determinant 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct UnimodularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMatrix {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Precondition(format!(
                "[[{}, {}], [{}, {}]] has determinant {}",
                a,
                b,
                c,
                d,
                a * d - b * c
            )));
        }
        Ok(UnimodularMatrix { a, b, c, d })
    }

    pub fn identity() -> Self {
        UnimodularMatrix {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        }
    }

    /// `[[1, n], [0, 1]]`
    pub fn translation(n: i64) -> Self {
        UnimodularMatrix {
            a: 1,
            b: n,
            c: 0,
            d: 1,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        UnimodularMatrix {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Self {
        UnimodularMatrix {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn neg(&self) -> Self {
        UnimodularMatrix {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }

    /// Moebius action on a cusp.
    pub fn apply(&self, s: &Cusp) -> Cusp {
        let (x, y) = s.coords();
        Cusp::from_pair(self.a * x + self.b * y, self.c * x + self.d * y)
    }

    /// Membership in Gamma_1(N): c = 0 and a = d = 1 mod N.
    pub fn in_gamma1(&self, n: i64) -> bool {
        modulo(self.c, n) == 0
            && modulo(self.a, n) == modulo(1, n)
            && modulo(self.d, n) == modulo(1, n)
    }
}

impl fmt::Display for UnimodularMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A point of P^1(Q); finite cusps are reduced with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Cusp {
    Infinity,
    Finite { num: i64, den: i64 },
}

impl Cusp {
    /// The cusp `a/c`.
    pub fn new(a: i64, c: i64) -> Result<Self> {
        if c == 0 {
            return Err(Error::Precondition("cusp denominator is zero".into()));
        }
        Ok(Cusp::from_pair(a, c))
    }

    pub fn integer(a: i64) -> Self {
        Cusp::Finite { num: a, den: 1 }
    }

    /// The point `[x : y]`.
    fn from_pair(x: i64, y: i64) -> Self {
        if y == 0 {
            return Cusp::Infinity;
        }
        let g = x.gcd(&y);
        let s = if y < 0 { -1 } else { 1 };
        Cusp::Finite {
            num: s * x / g,
            den: s * y / g,
        }
    }

    /// Coprime coordinates, `(1, 0)` for infinity.
    pub fn coords(&self) -> (i64, i64) {
        match *self {
            Cusp::Infinity => (1, 0),
            Cusp::Finite { num, den } => (num, den),
        }
    }

    /// The image under `z -> k z`.
    pub fn scale(&self, k: i64) -> Self {
        let (x, y) = self.coords();
        Cusp::from_pair(k * x, y)
    }

    /// The image under `z -> z / k`.
    pub fn unscale(&self, k: i64) -> Self {
        let (x, y) = self.coords();
        Cusp::from_pair(x, k * y)
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Cusp::Infinity => write!(f, "oo"),
            Cusp::Finite { num, den: 1 } => write!(f, "{}", num),
            Cusp::Finite { num, den } => write!(f, "{}/{}", num, den),
        }
    }
}

impl FromStr for Cusp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if matches!(t, "oo" | "inf" | "infinity" | "i∞" | "∞") {
            return Ok(Cusp::Infinity);
        }
        let bad = || Error::Parse(format!("bad cusp {:?}", s));
        match t.split_once('/') {
            Some((a, c)) => {
                let a: i64 = a.trim().parse().map_err(|_| bad())?;
                let c: i64 = c.trim().parse().map_err(|_| bad())?;
                Cusp::new(a, c).map_err(|_| bad())
            }
            None => Ok(Cusp::integer(t.parse().map_err(|_| bad())?)),
        }
    }
}

/// A matrix sending i∞ to `s`.
pub fn matrix_for_cusp(s: &Cusp) -> UnimodularMatrix {
    match *s {
        Cusp::Infinity => UnimodularMatrix::identity(),
        Cusp::Finite { num: a, den: c } => {
            let d = mod_inverse(a, c).expect("reduced cusp");
            UnimodularMatrix {
                a,
                b: (a * d - 1) / c,
                c,
                d,
            }
        }
    }
}

/// Gamma_1(N)-equivalence of cusps.
pub fn equivalent_under_gamma1(s: &Cusp, t: &Cusp, n: u64) -> bool {
    let n = n as i64;
    let (a, c) = s.coords();
    let (a2, c2) = t.coords();
    let g = c.gcd(&n);
    [1, -1]
        .iter()
        .any(|e| modulo(c2 - e * c, n) == 0 && modulo(a2 - e * a, g) == 0)
}

/// Gamma^1(N)-equivalence, through `z -> z/N` onto Gamma_1(N).
pub fn equivalent_under_gamma_upper1(s: &Cusp, t: &Cusp, n: u64) -> bool {
    let k = n as i64;
    equivalent_under_gamma1(&s.unscale(k), &t.unscale(k), n)
}

/// Inequivalent cusps of X_1(N): finite cusps in order of increasing
/// denominator and numerator, then i∞.
pub fn cusp_list_gamma1(n: u64) -> Vec<Cusp> {
    let mut found = vec![Cusp::Infinity];
    for c in 1..=n as i64 {
        for a in 0..c {
            if a.gcd(&c) != 1 {
                continue;
            }
            let s = Cusp::Finite { num: a, den: c };
            if !found.iter().any(|t| equivalent_under_gamma1(&s, t, n)) {
                found.push(s);
            }
        }
    }
    found.rotate_left(1);
    found
}

/// Inequivalent cusps of X^1(N), the image of the X_1(N) list under `z -> N z`.
pub fn cusp_list_gamma_upper1(n: u64) -> Vec<Cusp> {
    cusp_list_gamma1(n)
        .iter()
        .map(|s| s.scale(n as i64))
        .collect()
}

/// Value at `s` of a Siegel product whose exponents sum to 0 mod 12.
pub fn cusp_value(p: &SiegelProduct, s: &Cusp, prec: i64) -> Result<PointValue> {
    cusp_value_via(p, &matrix_for_cusp(s), prec)
}

/// Value at `g(i∞)`, computed through the given matrix.
pub fn cusp_value_via(p: &SiegelProduct, g: &UnimodularMatrix, prec: i64) -> Result<PointValue> {
    let t = transform_siegel_product(p, g)?;
    let attempt = |w| siegel_product_expand(&t, w).and_then(|s| s.constant_term_or_order());
    match attempt(prec.max(1)) {
        Err(e) if e.is_precision() => attempt(2 * prec.max(1)),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::CyclotomicNumber;
    use crate::modfunc::RationalVector;

    fn c(s: &str) -> Cusp {
        s.parse().unwrap()
    }

    fn cusps(list: &[&str]) -> Vec<Cusp> {
        list.iter().map(|s| c(s)).collect()
    }

    /// Search for an element of Gamma_1(N) carrying s to t.
    fn equivalent_by_search(s: &Cusp, t: &Cusp, n: i64) -> bool {
        let (ms, mt) = (matrix_for_cusp(s), matrix_for_cusp(t));
        (0..n).any(|k| {
            [1, -1].iter().any(|&e| {
                let u = UnimodularMatrix {
                    a: e,
                    b: k,
                    c: 0,
                    d: e,
                };
                mt.mul(&u).mul(&ms.inverse()).in_gamma1(n)
            })
        })
    }

    #[test]
    fn matrices_for_cusps() {
        assert_eq!(
            matrix_for_cusp(&c("5/2")),
            UnimodularMatrix::new(5, 2, 2, 1).unwrap()
        );
        assert_eq!(
            matrix_for_cusp(&Cusp::Infinity),
            UnimodularMatrix::identity()
        );
        assert_eq!(
            matrix_for_cusp(&c("0")),
            UnimodularMatrix::new(0, -1, 1, 0).unwrap()
        );
        for s in ["3/8", "-2/7", "4", "5/12", "0"] {
            let g = matrix_for_cusp(&c(s));
            assert_eq!(g.a * g.d - g.b * g.c, 1);
            assert_eq!(g.apply(&Cusp::Infinity), c(s));
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(c("4/2"), Cusp::integer(2));
        assert_eq!(c("3/-6"), Cusp::Finite { num: -1, den: 2 });
        assert_eq!(c("oo"), Cusp::Infinity);
        assert_eq!(c("i∞"), Cusp::Infinity);
        assert_eq!(c("-5/10").to_string(), "-1/2");
        assert_eq!(Cusp::Infinity.to_string(), "oo");
        assert!("1/0".parse::<Cusp>().is_err());
        assert!("x".parse::<Cusp>().is_err());
        assert!(UnimodularMatrix::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent_under_gamma1(&Cusp::Infinity, &Cusp::Infinity, 7));
        assert!(!equivalent_under_gamma1(&c("0"), &c("2/5"), 5));
        assert!(!equivalent_under_gamma1(&c("1/2"), &c("3/8"), 8));
        assert!(equivalent_under_gamma1(&c("1/3"), &c("1/2"), 5));
        assert!(equivalent_under_gamma1(&c("1/5"), &Cusp::Infinity, 5));
        assert!(equivalent_under_gamma_upper1(&c("5/2"), &c("5/3"), 5));
        assert!(!equivalent_under_gamma_upper1(&c("5/2"), &c("2"), 5));
    }

    #[test]
    fn criterion_matches_matrix_search() {
        for n in 1..=12i64 {
            let mut grid = vec![Cusp::Infinity];
            for den in 1..=2 * n {
                for num in -n..=n {
                    if num.gcd(&den) == 1 {
                        grid.push(Cusp::Finite { num, den });
                    }
                }
            }
            for s in &grid {
                for t in &grid {
                    assert_eq!(
                        equivalent_under_gamma1(s, t, n as u64),
                        equivalent_by_search(s, t, n),
                        "{} ~ {} at level {}",
                        s,
                        t,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn small_lists() {
        assert_eq!(cusp_list_gamma1(4), cusps(&["0", "1/2", "oo"]));
        assert_eq!(cusp_list_gamma_upper1(4), cusps(&["0", "2", "oo"]));
        assert_eq!(cusp_list_gamma1(1), cusps(&["oo"]));
        assert_eq!(cusp_list_gamma_upper1(1), cusps(&["oo"]));
    }

    #[test]
    fn lists_are_complete_and_irredundant() {
        for n in (1..=10).chain([12]) {
            let list = cusp_list_gamma1(n);
            for (i, s) in list.iter().enumerate() {
                for t in &list[i + 1..] {
                    assert!(!equivalent_under_gamma1(s, t, n));
                }
            }
            let n = n as i64;
            for den in 1..=n {
                for num in -n..=n {
                    if num.gcd(&den) != 1 {
                        continue;
                    }
                    let s = Cusp::Finite { num, den };
                    let hits = list
                        .iter()
                        .filter(|t| equivalent_under_gamma1(&s, t, n as u64))
                        .count();
                    assert_eq!(hits, 1, "{} at level {}", s, n);
                }
            }
        }
    }

    fn g5() -> SiegelProduct {
        let v = |a| RationalVector::with_denominator(a, 0, 5);
        SiegelProduct::new(5, [(v(2), 5), (v(1), -5)]).unwrap()
    }

    #[test]
    fn worked_example_value() {
        let z = |k| CyclotomicNumber::root_of_unity(5, k);
        let expected = CyclotomicNumber::from_integer(-2)
            .sub(&z(1).add(&z(-1)).scale_int(10))
            .sub(&z(2).add(&z(-2)).scale_int(5));
        assert_eq!(
            cusp_value(&g5(), &c("5/2"), 2).unwrap(),
            PointValue::Finite(expected)
        );
        assert!(matches!(
            cusp_value(&g5(), &Cusp::Infinity, 2).unwrap(),
            PointValue::Pole(_)
        ));
    }

    #[test]
    fn level_four_value_at_zero() {
        let v = |a| RationalVector::with_denominator(a, 0, 4);
        let g4 = SiegelProduct::new(4, [(v(2), 8), (v(1), -8)]).unwrap();
        assert_eq!(
            cusp_value(&g4, &c("0"), 2).unwrap(),
            PointValue::Finite(CyclotomicNumber::from_integer(16))
        );
        assert_eq!(
            cusp_value(&g4, &c("2"), 2).unwrap(),
            PointValue::ZeroAtInfinity
        );
    }

    #[test]
    fn value_independent_of_matrix() {
        for s in ["5/2", "0", "2"] {
            let g = matrix_for_cusp(&c(s));
            let base = cusp_value_via(&g5(), &g, 2).unwrap();
            for n in [1, 2] {
                let other = g.mul(&UnimodularMatrix::translation(n));
                assert_eq!(cusp_value_via(&g5(), &other, 2).unwrap(), base);
            }
        }
    }

    fn arb_cusp() -> impl Strategy<Value = Cusp> {
        prop_oneof![
            1 => Just(Cusp::Infinity),
            8 => (-30i64..30, 1i64..30).prop_map(|(a, c)| Cusp::new(a, c).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn equivalence_relation(s in arb_cusp(), t in arb_cusp(), u in arb_cusp(), n in 1u64..=12) {
            prop_assert!(equivalent_under_gamma1(&s, &s, n));
            prop_assert_eq!(equivalent_under_gamma1(&s, &t, n), equivalent_under_gamma1(&t, &s, n));
            if equivalent_under_gamma1(&s, &t, n) && equivalent_under_gamma1(&t, &u, n) {
                prop_assert!(equivalent_under_gamma1(&s, &u, n));
            }
        }

        #[test]
        fn matrices_move_infinity(s in arb_cusp()) {
            let g = matrix_for_cusp(&s);
            prop_assert_eq!(g.apply(&Cusp::Infinity), s);
            prop_assert_eq!(g.mul(&g.inverse()), UnimodularMatrix::identity());
        }
    }
}
