use crate::error::{Error, Result};

/// Sieve bounds. `ceiling` caps every ψ/θ evaluation (memory stays bounded
/// regardless because segments are streamed); `segment_len` is the number
/// of integers per segment.
#[derive(Clone, Copy, Debug)]
pub struct SieveConfig {
    pub ceiling: u64,
    pub segment_len: usize,
}

pub const DEFAULT_SIEVE_CEILING: u64 = 1_000_000_000;

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            ceiling: DEFAULT_SIEVE_CEILING,
            segment_len: 1 << 20,
        }
    }
}

/// A fully sieved interval: every prime in [lo, hi], none omitted.
#[derive(Clone, Debug)]
pub struct PrimeRange {
    pub lo: u64,
    pub hi: u64,
    pub primes: Vec<u64>,
}

pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).map_or(true, |sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= n) {
        r += 1;
    }
    r
}

/// Plain odd-only sieve; used for base primes up to √ceiling (~32k by
/// default) and for small direct queries.
pub fn simple_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return vec![];
    }
    let n = limit as usize;
    let mut composite = vec![false; n / 2 + 1]; // index i <-> odd 2i+1
    let mut primes = vec![2u64];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= n {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j <= n / 2 {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    primes.extend(
        (1..=(n - 1) / 2)
            .filter(|&i| !composite[i])
            .map(|i| (2 * i + 1) as u64),
    );
    primes
}

/// Stream every prime in [lo, hi] (ascending) through `f`, one segment at
/// a time. Deterministic and sequential: callers fold with compensated
/// sums and get bitwise-reproducible results.
pub fn for_each_prime_in(lo: u64, hi: u64, segment_len: usize, mut f: impl FnMut(u64)) {
    if hi < 2 || hi < lo {
        return;
    }
    let lo = lo.max(2);
    if lo <= 2 {
        f(2);
    }
    let base = simple_sieve(isqrt(hi)); // includes 2; odd marking skips it
    let seg = segment_len.max(1 << 10) as u64;
    let mut words: Vec<u64> = Vec::new();

    // work over odd numbers only
    let mut seg_lo = lo.max(3) | 1;
    while seg_lo <= hi {
        let seg_hi = seg_lo.saturating_add(seg - 1).min(hi);
        let n_odds = ((seg_hi - seg_lo) / 2 + 1) as usize;
        words.clear();
        words.resize(n_odds.div_ceil(64), 0);

        for &p in base.iter().skip(1) {
            if p * p > seg_hi {
                break;
            }
            // first odd multiple of p inside the segment, at least p*p
            let mut start = p * p;
            if start < seg_lo {
                start = seg_lo.div_ceil(p) * p;
                if start % 2 == 0 {
                    start += p;
                }
            }
            let mut j = start;
            while j <= seg_hi {
                let bit = ((j - seg_lo) / 2) as usize;
                words[bit / 64] |= 1 << (bit % 64);
                j += 2 * p;
            }
        }

        for i in 0..n_odds {
            if words[i / 64] & (1 << (i % 64)) == 0 {
                let n = seg_lo + 2 * i as u64;
                if n > 2 {
                    f(n);
                }
            }
        }
        seg_lo = seg_hi + if seg_hi % 2 == 0 { 1 } else { 2 };
    }
}

pub fn primes_in_range(lo: u64, hi: u64, config: &SieveConfig) -> Result<PrimeRange> {
    if hi > config.ceiling {
        return Err(Error::CeilingExceeded {
            value: hi as f64,
            ceiling: config.ceiling as f64,
        });
    }
    let mut primes = Vec::new();
    for_each_prime_in(lo, hi, config.segment_len, |p| primes.push(p));
    Ok(PrimeRange { lo, hi, primes })
}
