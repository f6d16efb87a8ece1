use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::express::eval_poly;
use super::*;
use crate::arith::{big, Rational};
use crate::cusps::cusp_value;

fn int(n: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(n)
}

#[test]
fn table_products_satisfy_the_criterion() {
    for n in LEVELS {
        let data = HauptmodulData::for_level(n).unwrap();
        for report in data.criteria().unwrap() {
            assert!(
                report.holds,
                "level {}: {:?}",
                report.level, report.failures
            );
        }
    }
}

#[test]
fn unknown_level_is_rejected() {
    assert_eq!(
        HauptmodulData::for_level(11),
        Err(Error::UnsupportedLevel(11))
    );
    assert!(hauptmodul_series(13, Variant::Gamma1, 5).is_err());
}

#[test]
fn hauptmodul_shape() {
    for n in LEVELS {
        let up = hauptmodul_series(n, Variant::GammaUpper1, 10).unwrap();
        assert_eq!(up.valuation_q(), Some(Rational64::new(-1, n as i64)));
        assert!(up.leading_coefficient().unwrap().is_one(), "level {}", n);
        let low = hauptmodul_series(n, Variant::Gamma1, 10).unwrap();
        assert_eq!(low.valuation_q(), Some(Rational64::from_integer(-1)));
        assert!(low.is_rational());
        assert!(low.agrees_with(&up.tau_times(n)).unwrap());
    }
}

#[test]
fn gamma1_four_against_eta_quotient() {
    // eta(2 tau)^24 / (eta(tau)^8 eta(4 tau)^16)
    let prec = 15;
    let euler = |k: i64| {
        let mut s = PuiseuxSeries::new(1, [(0, int(1))], Some(prec + 2), 0);
        for n in 1..=prec + 2 {
            s.mul_one_minus(&int(1), n * k);
        }
        s
    };
    let q = euler(2)
        .pow(24)
        .unwrap()
        .div(&euler(1).pow(8).unwrap().mul(&euler(4).pow(16).unwrap()))
        .unwrap()
        .shift(-1);
    let g = hauptmodul_series(4, Variant::Gamma1, prec).unwrap();
    assert!(g.agrees_with(&q).unwrap());
}

#[test]
fn small_value_sets() {
    let four = cusp_value_set(4).unwrap();
    let vals: Vec<_> = four.values().cloned().collect();
    assert_eq!(vals, vec![int(16), int(0)]);
    let six: Vec<_> = cusp_value_set(6).unwrap().values().cloned().collect();
    assert_eq!(six, vec![int(8), int(-1), int(0)]);
}

#[test]
fn value_lookup_respects_equivalence() {
    let s = cusp_value_set(5).unwrap();
    let p = HauptmodulData::for_level(5).unwrap().product();
    // 5/2 and 5/2 + 5 are the same cusp of X^1(5)
    let shifted: Cusp = "15/2".parse().unwrap();
    let direct = cusp_value(&p, &shifted, 2).unwrap().value().unwrap();
    assert_eq!(s.value_at(&shifted), Some(&direct));
}

#[test]
fn minpolys_for_five_and_nine() {
    let p = |c: &[i64]| RationalPolynomial::from_integers(c);
    assert_eq!(minpoly_set(5).unwrap(), vec![p(&[0, 1]), p(&[-1, -11, 1])]);
    assert_eq!(
        minpoly_set(9).unwrap(),
        vec![p(&[0, 1]), p(&[-1, 1]), p(&[1, -1, 1]), p(&[1, 3, -6, 1])]
    );
}

#[test]
fn value_sets_are_galois_stable() {
    for n in LEVELS {
        assert!(
            galois_closure_check(&cusp_value_set(n).unwrap()),
            "level {}",
            n
        );
    }
}

#[test]
fn closure_check_small_sets() {
    let lone = CuspValueSet {
        level: 5,
        values: vec![(Cusp::integer(0), CyclotomicNumber::root_of_unity(5, 1))],
    };
    assert!(!galois_closure_check(&lone));
    assert!(galois_closure_check(&cusp_value_set(2).unwrap()));
}

#[test]
fn every_minpoly_root_is_a_cusp_value() {
    for n in LEVELS {
        let set = cusp_value_set(n).unwrap();
        for f in minpoly_set(n).unwrap() {
            let roots = set
                .values()
                .filter(|v| CyclotomicNumber::eval_polynomial(&f, v).is_zero())
                .count();
            assert_eq!(Some(roots), f.degree(), "level {}: {}", n, f);
        }
    }
}

#[test]
fn gamma1_five_and_six() {
    let g5 = hauptmodul_series(5, Variant::Gamma1, 10).unwrap();
    assert_eq!(g5.valuation_q(), Some(Rational64::from_integer(-1)));
    assert_eq!(g5.ramification(), 1);
    let g6 = hauptmodul_series(6, Variant::Gamma1, 30).unwrap();
    assert!(g6.is_rational());
    assert_eq!(g6.precision_q(), Some(Rational64::from_integer(29)));
    assert_eq!(
        hauptmodul_series(5, Variant::GammaUpper1, 10)
            .unwrap()
            .ramification(),
        5
    );
}

#[test]
fn closure_check_detects_a_missing_conjugate() {
    let mut s = cusp_value_set(5).unwrap();
    s.values.remove(0);
    assert!(!galois_closure_check(&s));
}

#[test]
fn generator_sets() {
    assert_eq!(
        generator_set(8).unwrap().weierstrass_component,
        Some((4, 8))
    );
    assert_eq!(
        generator_set(12).unwrap().weierstrass_component,
        Some((4, 12))
    );
    assert_eq!(
        generator_set(10).unwrap().weierstrass_component,
        Some((5, 10))
    );
    assert_eq!(generator_set(7).unwrap().weierstrass_component, None);
    assert_eq!(generator_set(9).unwrap().minpolys.len(), 4);
}

fn build(
    n: u64,
    variant: Variant,
    num: &RationalPolynomial,
    dens: &[(RationalPolynomial, u32)],
    prec: i64,
) -> PuiseuxSeries {
    let g = hauptmodul_series(n, variant, prec).unwrap();
    let mut h = eval_poly(num, &g);
    for (f, k) in dens {
        h = h.div(&eval_poly(f, &g).pow(*k as i64).unwrap()).unwrap();
    }
    h
}

/// Pole profile putting order k_f at every cusp whose value is a root of f.
fn profile_for(n: u64, variant: Variant, dens: &[(RationalPolynomial, u32)]) -> PoleProfile {
    let values = cusp_value_set(n).unwrap();
    let mut out = PoleProfile::new();
    for s in variant.cusps(n) {
        if s == Cusp::Infinity {
            continue;
        }
        let up = match variant {
            Variant::GammaUpper1 => s,
            Variant::Gamma1 => s.scale(n as i64),
        };
        let v = values.value_at(&up).unwrap();
        let k = dens
            .iter()
            .filter(|(f, _)| CyclotomicNumber::eval_polynomial(f, v).is_zero())
            .map(|&(_, k)| k)
            .max()
            .unwrap_or(0);
        out.insert(s, k);
    }
    out
}

#[test]
fn express_the_hauptmodul_itself() {
    for variant in [Variant::Gamma1, Variant::GammaUpper1] {
        let g = hauptmodul_series(5, variant, 10).unwrap();
        let e = express_in_generators(&g, 5, variant, &PoleProfile::new()).unwrap();
        assert_eq!(e.numerator, RationalPolynomial::x());
        assert!(e.denominators.is_empty());
        assert_eq!(e.to_string(), "g");
    }
}

#[test]
fn express_polynomial_and_simple_pole() {
    let num = RationalPolynomial::from_integers(&[3, 0, 1]);
    let h = build(6, Variant::Gamma1, &num, &[], 10);
    let e = express_in_generators(&h, 6, Variant::Gamma1, &PoleProfile::new()).unwrap();
    assert_eq!(e.numerator, num);
    assert!(e.denominators.is_empty());

    let f = RationalPolynomial::from_integers(&[-16, 1]);
    let h = build(
        4,
        Variant::GammaUpper1,
        &RationalPolynomial::one(),
        &[(f.clone(), 1)],
        10,
    );
    let profile = uniform_pole_profile(4, Variant::GammaUpper1, 1);
    let e = express_in_generators(&h, 4, Variant::GammaUpper1, &profile).unwrap();
    assert_eq!(e.numerator, RationalPolynomial::one());
    assert_eq!(e.denominators, vec![(f, 1)]);
}

#[test]
fn express_with_a_finite_pole() {
    let f = RationalPolynomial::from_integers(&[-16, 1]);
    let num = RationalPolynomial::from_integers(&[3, 0, 1]);
    let h = build(4, Variant::Gamma1, &num, &[(f.clone(), 2)], 20);
    let profile = profile_for(4, Variant::Gamma1, &[(f.clone(), 2)]);
    let e = express_in_generators(&h, 4, Variant::Gamma1, &profile).unwrap();
    assert_eq!(e.numerator, num);
    assert_eq!(e.denominators, vec![(f, 2)]);
    assert_eq!(e.to_string(), "g^2 + 3 / (g - 16)^2");
    assert_eq!(e.to_json()["denominators"][0]["power"], 2);
}

#[test]
fn common_factors_cancel() {
    // (g - 16) / (g - 16)^2 with a generous profile reduces to 1/(g - 16)
    let f = RationalPolynomial::from_integers(&[-16, 1]);
    let h = build(4, Variant::GammaUpper1, &f, &[(f.clone(), 2)], 20);
    let profile = uniform_pole_profile(4, Variant::GammaUpper1, 2);
    let e = express_in_generators(&h, 4, Variant::GammaUpper1, &profile).unwrap();
    assert_eq!(e.numerator, RationalPolynomial::one());
    assert_eq!(e.denominators, vec![(f, 1)]);
}

#[test]
fn pole_missing_from_profile_is_not_in_ring() {
    let g = hauptmodul_series(5, Variant::Gamma1, 20).unwrap();
    let h = g.invert().unwrap();
    let err = express_in_generators(&h, 5, Variant::Gamma1, &PoleProfile::new()).unwrap_err();
    assert!(matches!(err, Error::NotInRing(_)), "{:?}", err);
}

#[test]
fn short_input_is_a_precision_error() {
    let f = RationalPolynomial::from_integers(&[-1, -11, 1]);
    let h = build(
        5,
        Variant::Gamma1,
        &RationalPolynomial::one(),
        &[(f.clone(), 3)],
        20,
    )
    .truncate_q(Rational64::from_integer(5));
    let profile = profile_for(5, Variant::Gamma1, &[(f, 3)]);
    let err = express_in_generators(&h, 5, Variant::Gamma1, &profile).unwrap_err();
    assert!(err.is_precision(), "{:?}", err);
}

#[test]
fn random_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4u64, 5, 6] {
        let minpolys = minpoly_set(n).unwrap();
        for case in 0..12 {
            let variant = if case % 2 == 0 {
                Variant::Gamma1
            } else {
                Variant::GammaUpper1
            };
            let deg = rng.gen_range(0..=3);
            let coeffs: Vec<Rational> = (0..=deg)
                .map(|_| big(Rational64::new(rng.gen_range(-9..=9), rng.gen_range(1..=3))))
                .collect();
            let mut num = RationalPolynomial::new(coeffs);
            if num.is_zero() {
                num = RationalPolynomial::one();
            }
            let dens: Vec<_> = minpolys
                .iter()
                .map(|f| (f.clone(), rng.gen_range(0..=2u32)))
                .filter(|&(_, k)| k > 0)
                .collect();
            let h = build(n, variant, &num, &dens, 24);
            let profile = profile_for(n, variant, &dens);
            let e = express_in_generators(&h, n, variant, &profile).unwrap();
            let expected = ExpressionResult {
                level: n,
                variant,
                numerator: num,
                denominators: dens,
            };
            assert!(
                e.same_function(&expected),
                "level {}: {} vs {}",
                n,
                e,
                expected
            );
        }
    }
}

#[test]
fn family_at_its_own_level() {
    let r = RationalVector::with_denominator(1, 0, 5);
    let (g, f) = fricke_family_component(5, 5, &r, 8).unwrap();
    assert!(f.is_exact() && f.is_zero_to_precision());
    let h = hauptmodul_series(5, Variant::GammaUpper1, 8).unwrap();
    assert!(g.agrees_with(&h).unwrap());
}

#[test]
fn family_recovers_weierstrass_unit_ten() {
    let r = RationalVector::with_denominator(1, 0, 10);
    let (_, f) = fricke_family_component(10, 5, &r, 6).unwrap();
    let w = crate::modfunc::weierstrass_unit(5, 10, 6).unwrap();
    assert!(f.agrees_with(&w).unwrap());
}

#[test]
fn family_recovers_weierstrass_unit() {
    let r = RationalVector::with_denominator(1, 0, 8);
    let (_, f) = fricke_family_component(8, 4, &r, 8).unwrap();
    let w = crate::modfunc::weierstrass_unit(4, 8, 8).unwrap();
    assert!(f.agrees_with(&w).unwrap());
}

#[test]
fn family_preconditions() {
    let r = RationalVector::with_denominator(2, 0, 8);
    assert!(matches!(
        fricke_family_component(8, 4, &r, 5),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        fricke_family_component(10, 4, &RationalVector::with_denominator(1, 0, 10), 5),
        Err(Error::Precondition(_))
    ));
    assert!(matches!(
        family_equivariance_check(8, 4, 2, 5),
        Err(Error::NotCoprime { d: 2, n: 8 })
    ));
}

#[test]
fn family_is_galois_equivariant() {
    assert!(family_equivariance_check(8, 4, 3, 6).unwrap());
    assert!(family_equivariance_check(5, 5, 2, 6).unwrap());
    assert!(family_equivariance_check(10, 5, 3, 5).unwrap());
}

#[test]
fn conjugate_vectors_and_degree() {
    let vs = weierstrass_conjugate_vectors(4, 8).unwrap();
    let expect: Vec<_> = [(1, 0), (1, 4), (5, 0), (5, 4)]
        .iter()
        .map(|&(a, b)| RationalVector::with_denominator(a, b, 8))
        .collect();
    assert_eq!(vs, expect);
    assert_eq!(weierstrass_degree(4, 8), 4);
    assert_eq!(weierstrass_degree(5, 10), 3);
    assert_eq!(weierstrass_conjugate_vectors(5, 10).unwrap().len(), 3);
}

#[test]
fn vandermonde_four_eight() {
    let t = vandermonde_unit(4, 8, 6).unwrap();
    assert!(t.is_rational());
    assert!(!t.leading_coefficient().unwrap().is_zero());
}
