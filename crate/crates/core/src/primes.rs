//! Integer utilities: primality by trial division, prime neighbors, coprimality.

use crate::error::{Error, Result};

/// Tests whether `n` is prime by deterministic trial division up to sqrt(n).
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut i = 5;
    while i * i <= n {
        if n.is_multiple_of(i) || n.is_multiple_of(i + 2) {
            return false;
        }
        i += 6;
    }
    true
}

/// Greatest prime `p <= n`. Errors for `n < 2` since no such prime exists.
pub fn largest_prime_leq(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::NoPrimeExists(n));
    }
    let mut p = n;
    while !is_prime(p) {
        p -= 1;
    }
    Ok(p)
}

/// Least prime `p >= n`. Always succeeds for `n >= 2`; values below 2 map to 2.
pub fn smallest_prime_geq(n: usize) -> usize {
    let mut p = n.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

/// True iff gcd(a, b) = 1.
pub fn is_coprime(a: usize, b: usize) -> bool {
    gcd(a, b) == 1
}
