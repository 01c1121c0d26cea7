use crate::error::{Error, Result};

/// Deterministic Miller-Rabin with the first 13 primes as witnesses is
/// correct for everything below this bound (Sorenson & Webster), which
/// comfortably covers interval scans around 10¹⁵-scale cubes.
pub const PRIMALITY_CEILING: u128 = 3_317_044_064_679_887_385_961_981;

pub const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

const WITNESSES_32: [u64; 4] = [2, 3, 5, 7]; // n < 3_215_031_751
const WITNESSES_48: [u64; 7] = [2, 3, 5, 7, 11, 13, 17]; // n < 341_550_071_728_321
const WITNESSES_FULL: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

#[inline]
fn mulmod(a: u128, b: u128, n: u128) -> u128 {
    if n <= u64::MAX as u128 {
        // operands fit in 64 bits, the product fits in 128
        (a * b) % n
    } else {
        // n < 2^82 (ceiling is ~3.3e24), so doubling stays inside u128
        let mut acc = 0u128;
        let mut a = a % n;
        let mut b = b;
        while b > 0 {
            if b & 1 == 1 {
                acc += a;
                if acc >= n {
                    acc -= n;
                }
            }
            a <<= 1;
            if a >= n {
                a -= n;
            }
            b >>= 1;
        }
        acc
    }
}

fn powmod(mut base: u128, mut exp: u128, n: u128) -> u128 {
    let mut acc = 1u128;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, n);
        }
        base = mulmod(base, base, n);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u128, witness: u64) -> bool {
    let w = witness as u128 % n;
    if w == 0 {
        return true;
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    let mut x = powmod(w, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test, valid up to [`PRIMALITY_CEILING`].
pub fn is_prime(n: u128) -> Result<bool> {
    if n > PRIMALITY_CEILING {
        return Err(Error::CeilingExceeded {
            value: n as f64,
            ceiling: PRIMALITY_CEILING as f64,
        });
    }
    if n < 2 {
        return Ok(false);
    }
    for &p in &SMALL_PRIMES {
        let p = p as u128;
        if n == p {
            return Ok(true);
        }
        if n % p == 0 {
            return Ok(false);
        }
    }
    let witnesses: &[u64] = if n < 3_215_031_751 {
        &WITNESSES_32
    } else if n < 341_550_071_728_321 {
        &WITNESSES_48
    } else {
        &WITNESSES_FULL
    };
    Ok(witnesses.iter().all(|&w| strong_probable_prime(n, w)))
}
