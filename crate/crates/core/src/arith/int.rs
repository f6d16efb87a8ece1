//! Small-integer number theory used for conductors, levels and matrices.

use num_integer::Integer;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Least nonnegative residue.
pub fn modulo(a: i64, n: i64) -> i64 {
    a.rem_euclid(n)
}

/// Inverse of `a` modulo `n`, if it exists (result in `0..n`).
pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    if n == 1 {
        return Some(0);
    }
    let e = Integer::extended_gcd(&modulo(a, n), &n);
    if e.gcd != 1 {
        return None;
    }
    Some(modulo(e.x, n))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// Units of `Z/nZ` as representatives in `1..n` (just `[1]` for n = 1).
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![1];
    }
    (1..n).filter(|&d| gcd(d as i64, n as i64) == 1).collect()
}

/// sigma_k(n) = sum of d^k over divisors d of n.
pub fn divisor_sigma(n: u64, k: u32) -> u128 {
    let mut total: u128 = 0;
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += (d as u128).pow(k);
            let e = n / d;
            if e != d {
                total += (e as u128).pow(k);
            }
        }
        d += 1;
    }
    total
}
