//! Hauptmodul data for the genus zero levels.
//!
//! Each entry lists `(a, m)` for the factor `g_[a/N, 0]^m`; the product is
//! the hauptmodul of X^1(N) in tau, and of X_1(N) after tau -> N tau.

pub const LEVELS: [u64; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12];

pub(crate) const HAUPTMODUL: [(u64, &[(i64, i64)]); 10] = [
    (2, &[(1, 12)]),
    (3, &[(1, 12)]),
    (4, &[(2, 8), (1, -8)]),
    (5, &[(2, 5), (1, -5)]),
    (6, &[(3, 3), (1, -3)]),
    (7, &[(2, 2), (3, 1), (1, -3)]),
    (8, &[(3, 2), (1, -2)]),
    (9, &[(2, 1), (4, 1), (1, -2)]),
    (10, &[(3, 1), (4, 1), (1, -1), (2, -1)]),
    (12, &[(5, 1), (1, -1)]),
];

/// Levels m for which a Fricke family and a Weierstrass unit are available.
pub const FAMILY_LEVELS: [u64; 5] = [4, 5, 6, 7, 9];
