//! Closed-form analytic bounds, parameterized by the constants that the
//! sensitivity analysis varies (A, c_ford, L).

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::arith::{GAP_LOWER_SQRT, GAP_UPPER_CBRT, GAP_UPPER_SQRT};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
#[allow(non_snake_case)]
pub struct BoundParams {
    /// zero-density leading constant
    pub A: f64,
    /// zero-free-region constant
    pub c_ford: f64,
    /// zero-density log exponent appears as (log T)^(L−2σ)
    pub L: f64,
    pub dusart_lo: f64,
    pub dusart_hi1: f64,
    pub dusart_hi2: f64,
    /// Ramaré–Saouter Δ: every interval (x, x(1+Δ⁻¹)] below their bound
    /// contains a prime
    pub delta_rs: f64,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams {
            A: 9.7,
            c_ford: 57.54,
            L: 5.0,
            dusart_lo: GAP_LOWER_SQRT,
            dusart_hi1: GAP_UPPER_SQRT,
            dusart_hi2: GAP_UPPER_CBRT,
            delta_rs: 28_314_000.0,
        }
    }
}

impl BoundParams {
    pub fn validate(&self) -> Result<()> {
        let all = [
            self.A,
            self.c_ford,
            self.L,
            self.dusart_lo,
            self.dusart_hi1,
            self.dusart_hi2,
            self.delta_rs,
        ];
        if all.iter().any(|v| !(*v > 0.0)) {
            return Err(Error::domain("all bound parameters must be positive"));
        }
        if self.L < 2.0 {
            return Err(Error::domain(format!("L = {} must be >= 2", self.L)));
        }
        Ok(())
    }
}

/// N(T) < T·log T/(2π) for T > 15.
pub fn n_upper(t: f64) -> Result<f64> {
    if !(t > 15.0) {
        return Err(Error::domain(format!("T = {t} must be > 15")));
    }
    Ok(t * t.ln() / TAU)
}

/// Zero-density bound A·(3T)^{8(1−σ)/3}·(log T)^{L−2σ} + 103·log²T
/// for T ≥ 2000, σ ≥ 0.52.
pub fn density_bound(sigma: f64, t: f64, params: &BoundParams) -> Result<f64> {
    params.validate()?;
    if !(t >= 2000.0) || !(sigma >= 0.52) {
        return Err(Error::domain(format!(
            "density bound needs T >= 2000 and sigma >= 0.52, got ({sigma}, {t})"
        )));
    }
    let lt = t.ln();
    Ok(params.A * (3.0 * t).powf(8.0 * (1.0 - sigma) / 3.0) * lt.powf(params.L - 2.0 * sigma)
        + 103.0 * lt * lt)
}

/// Zero-free width ν(T) = 1/(c·(log T)^{2/3}·(log log T)^{1/3}), T ≥ 3.
pub fn zero_free_nu(t: f64, params: &BoundParams) -> Result<f64> {
    if !(t >= 3.0) {
        return Err(Error::domain(format!("T = {t} must be >= 3")));
    }
    zero_free_nu_from_log(t.ln(), params)
}

/// Same, taking log T directly — callers near the threshold scale have
/// T far beyond f64 range.
pub fn zero_free_nu_from_log(log_t: f64, params: &BoundParams) -> Result<f64> {
    params.validate()?;
    if !(log_t >= 3.0f64.ln()) {
        return Err(Error::domain(format!("log T = {log_t} must be >= log 3")));
    }
    Ok(1.0 / (params.c_ford * log_t.powf(2.0 / 3.0) * log_t.ln().cbrt()))
}

/// |ζ′/ζ(s)| < 9 + log|s| on the far left half-plane (Re s ≤ −1, s kept
/// away from the trivial zeros by the caller's contour).
pub fn zetaprime_over_zeta_left_bound(s: Complex64) -> Result<f64> {
    if !(s.re <= -1.0) {
        return Err(Error::domain(format!("Re s = {} must be <= -1", s.re)));
    }
    Ok(9.0 + s.norm().ln())
}

/// |ζ′/ζ| < log²t + 20·log t at the shifted ordinate, t > 50.
pub fn zetaprime_over_zeta_strip_bound(t: f64) -> Result<f64> {
    if !(t > 50.0) {
        return Err(Error::domain(format!("t = {t} must be > 50")));
    }
    let lt = t.ln();
    Ok(lt * lt + 20.0 * lt)
}

/// Bound log²t + log t on the local zero sum at the shifted ordinate, t > 50.
pub fn choicet_bound(t: f64) -> Result<f64> {
    if !(t > 50.0) {
        return Err(Error::domain(format!("t = {t} must be > 50")));
    }
    let lt = t.ln();
    Ok(lt * lt + lt)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn n_upper_values() {
        assert!(rel(n_upper(100.0).unwrap(), 73.293559887942774) < 1e-13);
        assert!(rel(n_upper(1000.0).unwrap(), 1099.4033983191416) < 1e-13);
        assert!(n_upper(std::f64::consts::E).is_err());
        assert!(n_upper(15.0).is_err());
    }

    #[test]
    fn density_values_and_monotonicity() {
        let p = BoundParams::default();
        let d1 = density_bound(1.0, 2000.0, &p).unwrap();
        assert!(rel(d1, 10210.277223110573) < 1e-13);
        // at sigma = 1 the (3T) power vanishes
        let lt = 2000.0f64.ln();
        assert!(rel(d1, 9.7 * lt.powi(3) + 103.0 * lt * lt) < 1e-14);

        let d052 = density_bound(0.52, 2000.0, &p).unwrap();
        assert!(rel(d052, 2046598392.3712622) < 1e-12);

        let mut prev = f64::INFINITY;
        for i in 0..=48 {
            let sigma = 0.52 + i as f64 * 0.01;
            let d = density_bound(sigma, 5000.0, &p).unwrap();
            assert!(d <= prev, "not nonincreasing at sigma={sigma}");
            prev = d;
        }
        assert!(density_bound(0.5, 2000.0, &p).is_err());
        assert!(density_bound(1.0, 1999.0, &p).is_err());
    }

    #[test]
    fn nu_values_and_scaling() {
        let p = BoundParams::default();
        assert!(rel(zero_free_nu(3.0, &p).unwrap(), 0.03589364677125071) < 1e-13);
        let ee = std::f64::consts::E.exp();
        assert!(rel(zero_free_nu(ee, &p).unwrap(), 0.0089227862188493574) < 1e-13);
        assert!(rel(zero_free_nu(1e6, &p).unwrap(), 0.0021879232373306926) < 1e-13);
        assert!(zero_free_nu(1e6, &p).unwrap() < zero_free_nu(1e3, &p).unwrap());
        assert!(zero_free_nu(2.9, &p).is_err());

        let doubled = BoundParams {
            c_ford: 2.0 * p.c_ford,
            ..p
        };
        for t in [3.0, 100.0, 1e8] {
            let full = zero_free_nu(t, &p).unwrap();
            let half = zero_free_nu(t, &doubled).unwrap();
            assert!(rel(2.0 * half, full) < 1e-15, "t={t}");
        }
    }

    #[test]
    fn zetaprime_bounds() {
        assert_eq!(
            zetaprime_over_zeta_left_bound(Complex64::new(-1.0, 0.0)).unwrap(),
            9.0
        );
        let e2 = std::f64::consts::E * std::f64::consts::E;
        assert!(rel(
            zetaprime_over_zeta_left_bound(Complex64::new(-e2, 0.0)).unwrap(),
            11.0
        ) < 1e-14);
        assert!(rel(
            zetaprime_over_zeta_left_bound(Complex64::new(-4.0, 3.0)).unwrap(),
            10.6094379124341
        ) < 1e-13);
        assert!(zetaprime_over_zeta_left_bound(Complex64::new(-0.5, 3.0)).is_err());

        assert!(rel(zetaprime_over_zeta_strip_bound(51.0).unwrap(), 94.09576546063456) < 1e-13);
        let e10 = 10.0f64.exp();
        assert!(rel(zetaprime_over_zeta_strip_bound(e10).unwrap(), 300.0) < 1e-13);
        assert!(zetaprime_over_zeta_strip_bound(50.0).is_err());

        assert!(rel(choicet_bound(1e4).unwrap(), 94.040710139630551) < 1e-13);
        assert!(rel(choicet_bound(e10).unwrap(), 110.0) < 1e-13);
        assert!(choicet_bound(49.0).is_err());
    }

    #[test]
    fn params_validation() {
        let p = BoundParams::default();
        assert!(p.validate().is_ok());
        assert!(BoundParams { A: 0.0, ..p }.validate().is_err());
        assert!(BoundParams { L: 1.5, ..p }.validate().is_err());
        assert!(BoundParams { delta_rs: -1.0, ..p }.validate().is_err());
    }
}
