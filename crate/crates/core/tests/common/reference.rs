//! Published tables: cusp values, cusp representatives and the
//! denominator polynomials of the generator rings.

use modunits::{Cusp, CyclotomicNumber, RationalPolynomial};

/// `c + sum a (zeta_n^k + zeta_n^-k)` over the given `(a, k)`.
fn trace_sum(c: i64, n: u64, parts: &[(i64, i64)]) -> CyclotomicNumber {
    let mut terms = Vec::new();
    for &(a, k) in parts {
        terms.push((a, k));
        terms.push((a, -k));
    }
    CyclotomicNumber::from_integer(c).add(&CyclotomicNumber::from_root_sum(n, &terms))
}

fn zeta(n: u64, k: i64) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(n, k)
}

fn int(n: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(n)
}

/// Values at the cusps of X^1(N) other than i∞, in the listed cusp order.
pub fn cusp_values(n: u64) -> Vec<CyclotomicNumber> {
    match n {
        2 | 3 => vec![int(0)],
        4 => vec![int(16), int(0)],
        5 => vec![
            trace_sum(-2, 5, &[(-5, 1), (-10, 2)]),
            trace_sum(-2, 5, &[(-10, 1), (-5, 2)]),
            int(0),
        ],
        6 => vec![int(8), int(-1), int(0)],
        7 => vec![
            trace_sum(4, 7, &[(3, 1), (1, 2)]),
            trace_sum(4, 7, &[(1, 1), (3, 3)]),
            trace_sum(4, 7, &[(3, 2), (1, 3)]),
            int(1),
            int(0),
        ],
        8 => vec![
            trace_sum(3, 8, &[(2, 1)]),
            int(-1),
            trace_sum(3, 8, &[(-2, 1)]),
            int(1),
            int(0),
        ],
        9 => vec![
            trace_sum(2, 9, &[(2, 1), (1, 2)]),
            trace_sum(2, 9, &[(1, 1), (2, 4)]),
            zeta(3, 1).neg(),
            zeta(3, 2).neg(),
            trace_sum(2, 9, &[(2, 2), (1, 4)]),
            int(1),
            int(0),
        ],
        10 => vec![
            trace_sum(2, 10, &[(1, 1)]).add(&trace_sum(0, 5, &[(1, 1)])),
            trace_sum(0, 5, &[(1, 2)]),
            trace_sum(2, 10, &[(1, 3)]).add(&trace_sum(0, 5, &[(1, 2)])),
            trace_sum(0, 5, &[(1, 1)]),
            int(1),
            int(-1),
            int(0),
        ],
        12 => vec![
            trace_sum(1, 12, &[(1, 1)]).add(&trace_sum(0, 6, &[(1, 1)])),
            int(-1),
            zeta(4, 1).neg(),
            zeta(4, 1),
            zeta(3, 1).neg(),
            zeta(3, 2).neg(),
            trace_sum(1, 12, &[(-1, 1)]).add(&trace_sum(0, 3, &[(-1, 1)])),
            int(1),
            int(0),
        ],
        _ => panic!("no table row for level {}", n),
    }
}

fn cusp(s: &str) -> Cusp {
    s.parse().unwrap()
}

/// Inequivalent cusps of X_1(N) and of X^1(N).
pub fn cusp_lists(n: u64) -> (Vec<Cusp>, Vec<Cusp>) {
    let (lower, upper): (&[&str], &[&str]) = match n {
        1 => (&["oo"], &["oo"]),
        2 | 3 => (&["0", "oo"], &["0", "oo"]),
        4 => (&["0", "1/2", "oo"], &["0", "2", "oo"]),
        5 => (&["0", "1/2", "2/5", "oo"], &["0", "5/2", "2", "oo"]),
        6 => (&["0", "1/2", "1/3", "oo"], &["0", "3", "2", "oo"]),
        7 => (
            &["0", "1/2", "1/3", "2/7", "3/7", "oo"],
            &["0", "7/2", "7/3", "2", "3", "oo"],
        ),
        8 => (
            &["0", "1/2", "1/3", "1/4", "3/8", "oo"],
            &["0", "4", "8/3", "2", "3", "oo"],
        ),
        9 => (
            &["0", "1/2", "1/3", "2/3", "1/4", "2/9", "4/9", "oo"],
            &["0", "9/2", "3", "6", "9/4", "2", "4", "oo"],
        ),
        10 => (
            &["0", "1/2", "1/3", "1/4", "1/5", "2/5", "3/10", "oo"],
            &["0", "5", "10/3", "5/2", "2", "4", "3", "oo"],
        ),
        12 => (
            &[
                "0", "1/2", "1/3", "2/3", "1/4", "3/4", "1/5", "1/6", "5/12", "oo",
            ],
            &["0", "6", "4", "8", "3", "9", "12/5", "2", "5", "oo"],
        ),
        _ => panic!("no table row for level {}", n),
    };
    (
        lower.iter().map(|s| cusp(s)).collect(),
        upper.iter().map(|s| cusp(s)).collect(),
    )
}

/// Denominator polynomials of the generator rings, lowest degree first.
pub fn minpolys(n: u64) -> Vec<RationalPolynomial> {
    let rows: &[&[i64]] = match n {
        2 | 3 => &[&[0, 1]],
        4 => &[&[0, 1], &[-16, 1]],
        5 => &[&[0, 1], &[-1, -11, 1]],
        6 => &[&[0, 1], &[-8, 1], &[1, 1]],
        7 => &[&[0, 1], &[-1, 1], &[1, 5, -8, 1]],
        8 => &[&[0, 1], &[1, 1], &[-1, 1], &[1, -6, 1]],
        9 => &[&[0, 1], &[-1, 1], &[1, -1, 1], &[1, 3, -6, 1]],
        10 => &[&[0, 1], &[1, 1], &[-1, 1], &[-1, 1, 1], &[-1, -4, 1]],
        12 => &[
            &[0, 1],
            &[1, 1],
            &[-1, 1],
            &[1, 0, 1],
            &[1, -1, 1],
            &[1, -4, 1],
        ],
        _ => panic!("no table row for level {}", n),
    };
    rows.iter()
        .map(|c| RationalPolynomial::from_integers(c))
        .collect()
}
