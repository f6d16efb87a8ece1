#![allow(dead_code)]

pub mod reference;

use modunits::CyclotomicNumber;

/// Equality of two lists as multisets.
pub fn same_elements<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len()
        && a.iter()
            .all(|x| a.iter().filter(|y| *y == x).count() == b.iter().filter(|y| *y == x).count())
}

pub fn int(n: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(n)
}
