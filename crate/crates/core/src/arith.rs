//! Λ, ψ, θ and empirical prime-in-interval scanning.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::primality::{is_prime, PRIMALITY_CEILING};
use crate::sieve::{for_each_prime_in, isqrt, simple_sieve, SieveConfig};

/// ψ−θ bracket constants (Dusart): for x ≥ 121,
/// 0.9999·√x < ψ(x)−θ(x) < 1.00007·√x + 1.78·x^(1/3).
pub const GAP_LOWER_SQRT: f64 = 0.9999;
pub const GAP_UPPER_SQRT: f64 = 1.00007;
pub const GAP_UPPER_CBRT: f64 = 1.78;

#[derive(Clone, Copy, Debug)]
pub struct ChebyshevEval {
    pub x: f64,
    pub psi: f64,
    pub theta: f64,
    /// residual magnitude of the compensated sums; a bound on how far the
    /// reported values sit from the exact sum of f64 logarithms
    pub sum_err: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GapStatus {
    Found,
    Exhausted,
}

/// Outcome of one prime-in-interval search over (x, x+h].
#[derive(Clone, Copy, Debug)]
pub struct GapCertificate {
    pub x: f64,
    pub h: f64,
    pub witness: Option<u128>,
    pub status: GapStatus,
}

/// Λ(n): log p when n = p^m, else 0. The branch is decided with exact
/// integer arithmetic — a perfect-power test via integer k-th roots and a
/// deterministic primality check — never floating-point roots.
pub fn von_mangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let prime = |a: u64| is_prime(a as u128).expect("u64 is below the primality ceiling");
    // largest r with n = a^r; n is a prime power iff that base a is prime
    for r in (2..=63).rev() {
        if let Some(a) = exact_root(n, r) {
            return if prime(a) { (a as f64).ln() } else { 0.0 };
        }
    }
    if prime(n) {
        (n as f64).ln()
    } else {
        0.0
    }
}

/// Floor of n^(1/r) in pure integer arithmetic.
pub fn iroot(n: u128, r: u32) -> u128 {
    assert!(r >= 1, "iroot needs r >= 1");
    if n < 2 || r == 1 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut lo = 1u128;
    let mut hi = 1u128 << (bits / r + 1);
    // invariant: lo^r <= n < hi^r
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if pow_leq(mid, r, n) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// a^r <= n, overflow-safe.
fn pow_leq(a: u128, r: u32, n: u128) -> bool {
    let mut acc = 1u128;
    for _ in 0..r {
        acc = match acc.checked_mul(a) {
            Some(v) if v <= n => v,
            _ => return false,
        };
    }
    true
}

/// Some(a) iff n = a^r with a >= 2.
fn exact_root(n: u64, r: u32) -> Option<u64> {
    let a = iroot(n as u128, r);
    if a >= 2 && pow_eq(a, r, n as u128) {
        Some(a as u64)
    } else {
        None
    }
}

fn pow_eq(a: u128, r: u32, n: u128) -> bool {
    let mut acc = 1u128;
    for _ in 0..r {
        acc = match acc.checked_mul(a) {
            Some(v) if v <= n => v,
            _ => return false,
        };
    }
    acc == n
}

/// One streaming pass: θ accumulates log p for all p ≤ x, ψ additionally
/// picks up log p for every proper power p^r ≤ x (those only need p ≤ √x).
pub fn chebyshev_eval_with(x: f64, config: &SieveConfig) -> Result<ChebyshevEval> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x = {x} must be >= 0")));
    }
    if x > config.ceiling as f64 {
        return Err(Error::CeilingExceeded {
            value: x,
            ceiling: config.ceiling as f64,
        });
    }
    let n = x.floor() as u64;
    let root = isqrt(n);
    let mut th = KahanSum::new();
    let mut powers = KahanSum::new();
    for_each_prime_in(2, n, config.segment_len, |p| {
        let lp = (p as f64).ln();
        th.add(lp);
        if p <= root {
            let mut pk = (p as u128) * (p as u128);
            while pk <= n as u128 {
                powers.add(lp);
                pk *= p as u128;
            }
        }
    });
    let theta = th.total();
    Ok(ChebyshevEval {
        x,
        psi: theta + powers.total(),
        theta,
        sum_err: th.compensation() + powers.compensation(),
    })
}

pub fn chebyshev_eval(x: f64) -> Result<ChebyshevEval> {
    chebyshev_eval_with(x, &SieveConfig::default())
}

pub fn psi(x: f64) -> Result<f64> {
    Ok(chebyshev_eval(x)?.psi)
}

pub fn theta(x: f64) -> Result<f64> {
    Ok(chebyshev_eval(x)?.theta)
}

/// ψ(x)−θ(x) without sieving to x: only primes up to √x contribute.
pub fn psi_theta_gap_with(x: f64, config: &SieveConfig) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x = {x} must be >= 0")));
    }
    if x > config.ceiling as f64 {
        return Err(Error::CeilingExceeded {
            value: x,
            ceiling: config.ceiling as f64,
        });
    }
    let n = x.floor() as u64;
    let mut gap = KahanSum::new();
    for p in simple_sieve(isqrt(n)) {
        let lp = (p as f64).ln();
        let mut pk = (p as u128) * (p as u128);
        while pk <= n as u128 {
            gap.add(lp);
            pk *= p as u128;
        }
    }
    Ok(gap.total())
}

/// Evaluate the ψ−θ bracket at x ≥ 121:
/// returns (gap, gap > 0.9999·√x, gap < 1.00007·√x + 1.78·x^(1/3)).
pub fn psi_theta_gap_check(x: f64) -> Result<(f64, bool, bool)> {
    psi_theta_gap_check_with(x, &SieveConfig::default())
}

pub fn psi_theta_gap_check_with(x: f64, config: &SieveConfig) -> Result<(f64, bool, bool)> {
    if !(x >= 121.0) {
        return Err(Error::domain(format!("x = {x} is below 121")));
    }
    let gap = psi_theta_gap_with(x, config)?;
    let lower_ok = gap > GAP_LOWER_SQRT * x.sqrt();
    let upper_ok = gap < GAP_UPPER_SQRT * x.sqrt() + GAP_UPPER_CBRT * x.cbrt();
    Ok((gap, lower_ok, upper_ok))
}

pub fn first_prime_in(lo: u128, hi: u128) -> Result<Option<u128>> {
    let lo = lo.max(2);
    if lo > hi {
        return Ok(None);
    }
    if lo == 2 {
        return Ok(Some(2));
    }
    let mut n = lo | 1; // first odd >= lo; skipped evens exceed 2
    while n <= hi {
        if is_prime(n)? {
            return Ok(Some(n));
        }
        n += 2;
    }
    Ok(None)
}

/// Smallest prime in (x, x+h], decided deterministically.
pub fn prime_in_interval(x: f64, h: f64) -> Result<GapCertificate> {
    if !(x >= 2.0) || !(h > 0.0) {
        return Err(Error::domain(format!("need x >= 2 and h > 0, got ({x}, {h})")));
    }
    if x + h > PRIMALITY_CEILING as f64 {
        return Err(Error::CeilingExceeded {
            value: x + h,
            ceiling: PRIMALITY_CEILING as f64,
        });
    }
    let lo = x.floor() as u128 + 1; // first integer strictly above x
    let hi = (x + h).floor() as u128;
    let witness = first_prime_in(lo, hi)?;
    Ok(GapCertificate {
        x,
        h,
        witness,
        status: if witness.is_some() {
            GapStatus::Found
        } else {
            GapStatus::Exhausted
        },
    })
}

/// One certificate per n in [n_lo, n_hi] for the interval (n^m, (n+1)^m].
/// m = 3 is the consecutive-cubes case.
pub fn power_gap_scan(n_lo: u64, n_hi: u64, m: u32) -> Result<Vec<GapCertificate>> {
    if n_lo < 1 || n_hi < n_lo || m < 1 {
        return Err(Error::domain(format!(
            "need 1 <= n_lo <= n_hi and m >= 1, got ({n_lo}, {n_hi}, {m})"
        )));
    }
    let mut out = Vec::with_capacity((n_hi - n_lo + 1) as usize);
    for n in n_lo..=n_hi {
        let lo = checked_power(n, m)?;
        let hi = checked_power(n + 1, m)?;
        let witness = first_prime_in(lo + 1, hi)?;
        out.push(GapCertificate {
            x: lo as f64,
            h: (hi - lo) as f64,
            witness,
            status: if witness.is_some() {
                GapStatus::Found
            } else {
                GapStatus::Exhausted
            },
        });
    }
    Ok(out)
}

/// Scan over consecutive cubes; see [`power_gap_scan`].
pub fn cube_gap_scan(n_lo: u64, n_hi: u64) -> Result<Vec<GapCertificate>> {
    power_gap_scan(n_lo, n_hi, 3)
}

pub(crate) fn checked_power(n: u64, m: u32) -> Result<u128> {
    match (n as u128).checked_pow(m) {
        Some(v) if v <= PRIMALITY_CEILING => Ok(v),
        _ => Err(Error::CeilingExceeded {
            value: (n as f64).powi(m as i32),
            ceiling: PRIMALITY_CEILING as f64,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn von_mangoldt_definition_cases() {
        assert_eq!(von_mangoldt(1), 0.0);
        assert_eq!(von_mangoldt(8), 2.0f64.ln());
        assert_eq!(von_mangoldt(6), 0.0);
        assert_eq!(von_mangoldt(7), 7.0f64.ln());
        assert_eq!(von_mangoldt(36), 0.0); // 6^2, perfect power of a composite
        assert_eq!(von_mangoldt(1024), 2.0f64.ln());
        assert_eq!(von_mangoldt(7u64.pow(21)), 7.0f64.ln());
    }

    #[test]
    fn von_mangoldt_stable_over_powers() {
        for p in simple_sieve(1000) {
            let mut m = 1u32;
            while let Some(n) = (p as u128).checked_pow(m).filter(|&n| n <= u64::MAX as u128) {
                assert_eq!(von_mangoldt(n as u64), von_mangoldt(p), "p={p} m={m}");
                m += 1;
            }
        }
    }

    #[test]
    fn iroot_exact_and_floor() {
        assert_eq!(iroot(121, 2), 11);
        assert_eq!(iroot(120, 2), 10);
        assert_eq!(iroot(1, 5), 1);
        assert_eq!(iroot(u128::MAX, 1), u128::MAX);
        for n in 1u128..500 {
            for r in 1..12 {
                let a = iroot(n, r);
                assert!(pow_leq(a, r, n) && !pow_leq(a + 1, r, n), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn psi_theta_small_closed_forms() {
        // psi(10) = log 2520 (Λ over 2,3,4,5,7,8,9); theta(10) = log 210
        let ev = chebyshev_eval(10.0).unwrap();
        assert!((ev.psi - 2520.0f64.ln()).abs() < 1e-12);
        assert!((ev.theta - 210.0f64.ln()).abs() < 1e-12);
        assert_eq!(chebyshev_eval(1.0).unwrap().psi, 0.0);
        assert!((theta(2.0).unwrap() - 2.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn psi_matches_naive_lambda_sum() {
        for x in [100u64, 1000, 10_000] {
            let naive: KahanSum = (2..=x).map(von_mangoldt).collect();
            let got = psi(x as f64).unwrap();
            assert!(
                (got - naive.total()).abs() < 1e-9,
                "x={x}: {got} vs {}",
                naive.total()
            );
        }
    }

    #[test]
    fn gap_fast_path_matches_direct_difference() {
        for x in [121.0, 1000.0, 99_991.5] {
            let ev = chebyshev_eval(x).unwrap();
            let gap = psi_theta_gap_with(x, &SieveConfig::default()).unwrap();
            assert!((gap - (ev.psi - ev.theta)).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn gap_check_at_121() {
        // prime powers p^r <= 121, r >= 2: 4,8,16,32,64; 9,27,81; 25; 49; 121
        let exact = 5.0 * 2.0f64.ln() + 3.0 * 3.0f64.ln() + 5.0f64.ln() + 7.0f64.ln()
            + 11.0f64.ln();
        let (gap, lower_ok, upper_ok) = psi_theta_gap_check(121.0).unwrap();
        assert!((gap - exact).abs() < 1e-12);
        assert!(lower_ok && upper_ok);
        assert!(psi_theta_gap_check(120.9).is_err());
    }

    #[test]
    fn interval_scan_examples() {
        let c = prime_in_interval(8.0, 19.0).unwrap();
        assert_eq!(c.witness, Some(11));
        // 3 * 24^(2/3) ~ 24.96: first prime above 24 is 29
        let c = prime_in_interval(24.0, 3.0 * 24.0f64.powf(2.0 / 3.0)).unwrap();
        assert_eq!(c.witness, Some(29));
        let c = prime_in_interval(1.0e15, 3.0 * 1.0e10).unwrap();
        assert_eq!(c.status, GapStatus::Found);
        assert_eq!(c.witness, Some(1_000_000_000_000_037)); // next prime after 10^15
    }

    #[test]
    fn first_prime_even_start_does_not_skip() {
        // regression: an even lo used to step 28 -> 30 -> 31, missing 29
        assert_eq!(first_prime_in(28, 64).unwrap(), Some(29));
        let c = prime_in_interval(27.0, 37.0).unwrap();
        assert_eq!(c.witness, Some(29));
        assert_eq!(cube_gap_scan(3, 3).unwrap()[0].witness, Some(29)); // (27, 64]
    }

    #[test]
    fn first_prime_matches_linear_scan() {
        for lo in 0u128..200 {
            let hi = lo + 40;
            let naive = (lo.max(2)..=hi).find(|&n| is_prime(n).unwrap());
            assert_eq!(first_prime_in(lo, hi).unwrap(), naive, "lo={lo}");
        }
        assert_eq!(first_prime_in(2, 2).unwrap(), Some(2));
        assert_eq!(first_prime_in(0, 1).unwrap(), None);
        assert_eq!(first_prime_in(90, 96).unwrap(), None);
    }

    #[test]
    fn interval_scan_exhausted_and_errors() {
        let c = prime_in_interval(24.0, 4.0).unwrap(); // 25..28: no primes
        assert_eq!(c.status, GapStatus::Exhausted);
        assert!(c.witness.is_none());
        assert!(prime_in_interval(1.0, 5.0).is_err());
        assert!(prime_in_interval(4e24, 1e23).is_err()); // beyond ceiling
    }

    #[test]
    fn cube_scan_first_decade() {
        let certs = cube_gap_scan(1, 10).unwrap();
        assert_eq!(certs.len(), 10);
        assert!(certs.iter().all(|c| c.status == GapStatus::Found));
        assert_eq!(certs[0].witness, Some(2)); // (1, 8]
        assert_eq!(certs[1].witness, Some(11)); // (8, 27]
    }

    #[test]
    fn power_scan_overflow() {
        assert!(matches!(
            power_gap_scan(2, 2, 1000),
            Err(Error::CeilingExceeded { .. })
        ));
    }

    #[test]
    fn psi_ceiling() {
        assert!(matches!(
            psi(2.0e9),
            Err(Error::CeilingExceeded { .. })
        ));
    }
}
