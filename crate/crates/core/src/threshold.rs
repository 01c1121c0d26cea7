//! The threshold program: T(x) relation, zero-sum bound, inequality margins,
//! joint-threshold solving, k-optimization, and the derived tables.
//!
//! Everything works in y = log x; x itself is never materialized.

use astro_float::{BigFloat, Consts, RoundingMode};

use crate::arith::{GAP_LOWER_SQRT, GAP_UPPER_CBRT, GAP_UPPER_SQRT};
use crate::bounds::{zero_free_nu_from_log, BoundParams};
use crate::error::{Error, Result};

/// the slack constant 10⁻³ folded into both inequalities' right sides
pub const EPS_SLACK: f64 = 1e-3;

/// anchor row used by the unconditional m-power bound
pub const MPOWER_ANCHOR_M: f64 = 1000.0;
pub const MPOWER_ANCHOR_LOGLOG: f64 = 19.807;

const LN_Y_LO: f64 = 2.0; // bracket e² …
const LN_Y_HI: f64 = 46.051701859880914; // … 10²⁰ for threshold roots

#[derive(Clone, Copy, Debug)]
pub struct ThresholdProblem {
    pub m: u32,
    pub k: f64,
    pub params: BoundParams,
    pub eps: f64,
}

impl ThresholdProblem {
    pub fn new(m: u32, k: f64, params: BoundParams) -> Result<Self> {
        if m < 3 {
            return Err(Error::domain(format!("m = {m} must be >= 3")));
        }
        if !(k > 2.0 / 3.0) || !(k < 1.0) {
            return Err(Error::domain(format!("k = {k} outside (2/3, 1)")));
        }
        params.validate()?;
        Ok(ThresholdProblem {
            m,
            k,
            params,
            eps: EPS_SLACK,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ThresholdSolution {
    /// threshold in y = log x
    pub y0: f64,
    pub k_used: f64,
    /// log(y0/m)
    pub loglog_n0: f64,
    pub ineq1_margin_at_y0: f64,
    pub ineq2_margin_at_y0: f64,
}

/// Log-space form of the T(x) relation:
/// (8/3)·log(3T) + 2·log log T = x_log − x_log^k, solved for log T.
pub fn solve_t_log(x_log: f64, k: f64) -> Result<f64> {
    if !(x_log > 0.0) {
        return Err(Error::domain(format!("x_log = {x_log} must be > 0")));
    }
    if !(k > 2.0 / 3.0) || !(k < 1.0) {
        return Err(Error::domain(format!("k = {k} outside (2/3, 1)")));
    }
    let rhs = x_log - x_log.powf(k);
    let floor = 8.0 / 3.0 * 3.0f64.ln();
    if rhs <= floor {
        return Err(Error::NoSolution(format!(
            "right side {rhs} <= (8/3)·log 3; T would not exceed 1"
        )));
    }
    let lhs = |t_log: f64| 8.0 / 3.0 * (3.0f64.ln() + t_log) + 2.0 * t_log.ln();
    let mut lo = 1e-9;
    let mut hi = 1.0;
    while lhs(hi) < rhs {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if lhs(mid) < rhs {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// The T(x) height itself; overflows to ∞ once log T exceeds f64 range —
/// callers at threshold scale should stay in [`solve_t_log`].
#[allow(non_snake_case)]
pub fn solve_T(x_log: f64, k: f64) -> Result<f64> {
    Ok(solve_t_log(x_log, k)?.exp())
}

/// The two terms bounding h⁻¹·(zero sum), both returned as logs:
/// term1 = log[ y^{1/4}·e^{−(3/8)y^k} / (3^{3/4}·8^{1/4}·π) ],
/// term2 = log[ (27A/256)·y^{L−1−k}·e^{−(4/(3^{2/3}c))·y^{k−2/3}/(log y)^{1/3}} ]
/// with y = x_log.
pub fn zero_sum_bound(x_log: f64, k: f64, params: &BoundParams) -> Result<(f64, f64)> {
    params.validate()?;
    if !(x_log > std::f64::consts::E) {
        return Err(Error::domain(format!("x_log = {x_log} must exceed e")));
    }
    if !(k > 2.0 / 3.0) || !(k < 1.0) {
        return Err(Error::domain(format!("k = {k} outside (2/3, 1)")));
    }
    let ly = x_log.ln();
    let term1 = 0.25 * ly - 0.375 * x_log.powf(k)
        - (3.0f64.powf(0.75) * 8.0f64.powf(0.25) * std::f64::consts::PI).ln();
    let term2 = (27.0 * params.A / 256.0).ln() + (params.L - 1.0 - k) * ly
        - decay_coeff(params) * x_log.powf(k - 2.0 / 3.0) / ly.cbrt();
    Ok((term1, term2))
}

/// 4/(3^{2/3}·c), the decay constant inequality (1) hinges on.
fn decay_coeff(params: &BoundParams) -> f64 {
    4.0 / (3.0f64.powf(2.0 / 3.0) * params.c_ford)
}

/// Numerical form of the "clear from the dominant terms" negativity claim:
/// returns (lhs_log, rhs_log, lhs_log < rhs_log) where
/// lhs = (27A/256)·y^{L−1−k}·e^{−(3/8)y^k} and
/// rhs = (927A/32)·y²·(e^{−ν(T)·y} − e^{−(3/8)y}), T = T(x).
pub fn dominance_check(x_log: f64, k: f64, params: &BoundParams) -> Result<(f64, f64, bool)> {
    params.validate()?;
    if !(x_log > std::f64::consts::E) {
        return Err(Error::domain(format!("x_log = {x_log} must exceed e")));
    }
    let ly = x_log.ln();
    let lhs = (27.0 * params.A / 256.0).ln() + (params.L - 1.0 - k) * ly
        - 0.375 * x_log.powf(k);
    let t_log = solve_t_log(x_log, k)?;
    let nu = zero_free_nu_from_log(t_log, params)?;
    // log(e^{−νy} − e^{−(3/8)y}) = −νy + log(1 − e^{−(3/8−ν)y}); ν < 3/8 throughout
    let gap = (0.375 - nu) * x_log;
    let rhs = (927.0 * params.A / 32.0).ln() + 2.0 * ly - nu * x_log
        + (-(-gap).exp()).ln_1p();
    Ok((lhs, rhs, lhs < rhs))
}

/// Inequality (1) residual at y: LHS − log(½(1−eps)); negative ⇔ satisfied.
pub fn ineq1_margin(y: f64, problem: &ThresholdProblem) -> Result<f64> {
    if !(y > std::f64::consts::E) {
        return Err(Error::domain(format!("y = {y} must exceed e")));
    }
    let p = &problem.params;
    let lhs = (27.0 * p.A / 256.0).ln() + (p.L - 1.0 - problem.k) * y.ln()
        - decay_coeff(p) * y.powf(problem.k - 2.0 / 3.0) / y.ln().cbrt();
    Ok(lhs - (0.5 * (1.0 - problem.eps)).ln())
}

/// Inequality (2) residual at y, general m:
/// (11/4)·log y + (3/8)·y^k − (3/8 − 1/m)·y − log((m/12)(1−eps));
/// negative ⇔ satisfied. The two big terms cancel to ~10⁻³ relative near the
/// root, so this path works at 128-bit precision.
pub fn ineq2_margin(y: f64, problem: &ThresholdProblem) -> Result<f64> {
    if !(y > std::f64::consts::E) {
        return Err(Error::domain(format!("y = {y} must exceed e")));
    }
    const P: usize = 128;
    const RM: RoundingMode = RoundingMode::ToEven;
    let mut cc = Consts::new().expect("constants cache");
    let yb = BigFloat::from_f64(y, P);
    let ln_y = yb.ln(P, RM, &mut cc);
    let t_log = ln_y.mul(&BigFloat::from_f64(2.75, P), P, RM);
    let t_pow = yb
        .pow(&BigFloat::from_f64(problem.k, P), P, RM, &mut cc)
        .mul(&BigFloat::from_f64(0.375, P), P, RM);
    let coeff = BigFloat::from_f64(0.375, P).sub(
        &BigFloat::from_u8(1, P).div(&BigFloat::from_u32(problem.m, P), P, RM),
        P,
        RM,
    );
    let t_lin = coeff.mul(&yb, P, RM);
    let rhs = BigFloat::from_u32(problem.m, P)
        .div(&BigFloat::from_u8(12, P), P, RM)
        .mul(&BigFloat::from_f64(1.0 - problem.eps, P), P, RM)
        .ln(P, RM, &mut cc);
    let margin = t_log.add(&t_pow, P, RM).sub(&t_lin, P, RM).sub(&rhs, P, RM);
    let s = format!("{margin}");
    s.parse()
        .map_err(|e| Error::domain(format!("margin conversion failed: {e} ({s})")))
}

/// Plain-f64 evaluation of the same margin; exists to demonstrate how much
/// cancellation the default path absorbs.
pub fn ineq2_margin_f64(y: f64, problem: &ThresholdProblem) -> Result<f64> {
    if !(y > std::f64::consts::E) {
        return Err(Error::domain(format!("y = {y} must exceed e")));
    }
    let m = problem.m as f64;
    Ok(2.75 * y.ln() + 0.375 * y.powf(problem.k) - (0.375 - 1.0 / m) * y
        - (m / 12.0 * (1.0 - problem.eps)).ln())
}

#[derive(Clone, Copy, Debug)]
pub struct GOverHSource {
    /// the constant 2 of the g/h display
    pub constant: f64,
    pub delta: f64,
    /// 1/(1−Δ⁻¹), the x+h → x shrink factor
    pub shrink: f64,
    /// shrink < 2·(8/3)^{3/4}·(3/8)^{3/4} = 2
    pub consistent: bool,
}

/// Where the g/h display's constant 2 comes from: the Δ-interval shrink.
pub fn g_over_h_margin_source(params: &BoundParams) -> GOverHSource {
    let shrink = 1.0 / (1.0 - 1.0 / params.delta_rs);
    GOverHSource {
        constant: 2.0,
        delta: params.delta_rs,
        shrink,
        consistent: shrink < 2.0,
    }
}

/// E(x, h, k = 2/3)/h with h = m·x^{1−1/m}, evaluated in log-space:
/// E = −h·(log x)^{1/4}·e^{−(3/8)·(log x)^{2/3}}/(6^{3/4}π)
///     − 1.00007·(x+h)^{1/2} − 1.78·(x+h)^{1/3} + 0.9999·x^{1/2}.
pub fn error_term_margin(x_log: f64, m: u32) -> Result<f64> {
    if !(x_log >= 60.0) {
        return Err(Error::domain(format!("x_log = {x_log} must be >= 60")));
    }
    if m < 1 {
        return Err(Error::domain("m must be >= 1"));
    }
    let mf = m as f64;
    let h_log = mf.ln() + (1.0 - 1.0 / mf) * x_log;
    let xh_log = x_log + (h_log - x_log).exp().ln_1p(); // log(x+h)
    let t1 = -x_log.powf(0.25) * (-0.375 * x_log.powf(2.0 / 3.0)).exp()
        / (6.0f64.powf(0.75) * std::f64::consts::PI);
    let t2 = -GAP_UPPER_SQRT * (0.5 * xh_log - h_log).exp();
    let t3 = -GAP_UPPER_CBRT * (xh_log / 3.0 - h_log).exp();
    let t4 = GAP_LOWER_SQRT * (0.5 * x_log - h_log).exp();
    Ok(t1 + t2 + t3 + t4)
}

fn bisect_root<F: Fn(f64) -> Result<f64>>(
    margin: F,
    label: &str,
) -> Result<f64> {
    const SAMPLES: usize = 512;
    let at = |ln_y: f64| -> Result<f64> { margin(ln_y.exp()) };
    if !(at(LN_Y_HI)? < 0.0) {
        return Err(Error::NoThreshold(format!(
            "{label} has no sign change over y in (e^2, 1e20)"
        )));
    }
    // a large negative constant term can pull the margin below zero at the
    // bottom of the range before its main rise; the threshold is the final
    // descent through zero, so bracket the first positive sample from the top
    let step = (LN_Y_HI - LN_Y_LO) / SAMPLES as f64;
    let mut hi = LN_Y_HI;
    let mut lo = loop {
        let x = hi - step;
        if x <= LN_Y_LO {
            if at(LN_Y_LO)? > 0.0 {
                break LN_Y_LO;
            }
            // holds on the whole range: the other inequality's root governs
            return Ok(LN_Y_LO.exp());
        }
        if at(x)? > 0.0 {
            break x;
        }
        hi = x;
    };
    // 70 halvings put log y at ~1e-13
    for _ in 0..70 {
        let mid = 0.5 * (lo + hi);
        if at(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi)).exp())
}

/// Smallest y beyond which inequalities (1) and (2) both hold:
/// max of the two roots, with the margins re-evaluated there.
pub fn solve_threshold(problem: &ThresholdProblem) -> Result<ThresholdSolution> {
    let r1 = bisect_root(|y| ineq1_margin(y, problem), "inequality (1)")?;
    let r2 = bisect_root(|y| ineq2_margin(y, problem), "inequality (2)")?;
    let y0 = r1.max(r2);
    Ok(ThresholdSolution {
        y0,
        k_used: problem.k,
        loglog_n0: y0.ln() - (problem.m as f64).ln(),
        ineq1_margin_at_y0: ineq1_margin(y0, problem)?,
        ineq2_margin_at_y0: ineq2_margin(y0, problem)?,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    /// evenly spaced k samples used to bracket the minimum
    pub coarse_points: usize,
    /// final golden-section interval width in k
    pub k_tol: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            coarse_points: 33,
            k_tol: 1e-9,
        }
    }
}

/// Minimize the joint threshold over k ∈ (2/3 + 10⁻⁴, 1 − 10⁻⁴):
/// coarse scan, then golden-section; ties break toward smaller k.
pub fn optimize_k(
    m: u32,
    params: &BoundParams,
    grid: &GridSpec,
) -> Result<(f64, ThresholdSolution)> {
    let k_lo = 2.0 / 3.0 + 1e-4;
    let k_hi = 1.0 - 1e-4;
    let n = grid.coarse_points.max(3);
    let objective = |k: f64| -> f64 {
        match ThresholdProblem::new(m, k, *params).and_then(|p| solve_threshold(&p)) {
            Ok(sol) => sol.y0.ln(),
            Err(_) => f64::INFINITY,
        }
    };
    let step = (k_hi - k_lo) / (n - 1) as f64;
    let mut best = (f64::INFINITY, 0usize);
    for i in 0..n {
        let v = objective(k_lo + i as f64 * step);
        if v < best.0 {
            best = (v, i);
        }
    }
    if best.0.is_infinite() {
        return Err(Error::NoThreshold(format!(
            "no k in the grid admits a threshold for m = {m}"
        )));
    }
    let mut a = k_lo + best.1.saturating_sub(1) as f64 * step;
    let mut b = (k_lo + (best.1 + 1) as f64 * step).min(k_hi);
    // golden-section with left bias on equal values (tie toward smaller k)
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    while b - a > grid.k_tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = objective(x2);
        }
    }
    let k_best = if f1 <= f2 { x1 } else { x2 };
    let problem = ThresholdProblem::new(m, k_best, *params)?;
    Ok((k_best, solve_threshold(&problem)?))
}

/// One optimized row per L: the (4−k) coefficient of inequality (1)
/// becomes (L−1−k).
pub fn l_sensitivity_table(
    params: &BoundParams,
    l_values: &[f64],
) -> Result<Vec<(f64, f64, ThresholdSolution)>> {
    let mut rows = Vec::with_capacity(l_values.len());
    for &l in l_values {
        let p = BoundParams { L: l, ..*params };
        let (k_best, sol) = optimize_k(3, &p, &GridSpec::default())?;
        rows.push((l, k_best, sol));
    }
    Ok(rows)
}

/// Unconditional m: the smallest power for which the threshold result covers
/// all n, found where exp(C/m) meets the n/log²n < 111·m³ regime,
/// C = anchor_m·exp(anchor_loglog). Solves C/m = log(111·C²·m) by bisection.
pub fn mpower_from_anchor(anchor_m: f64, anchor_loglog: f64) -> Result<f64> {
    if !(anchor_m > 0.0) || !anchor_loglog.is_finite() {
        return Err(Error::domain("anchor must be positive and finite"));
    }
    let c = anchor_m * anchor_loglog.exp();
    let diff = |m: f64| c / m - (111.0 * c * c * m).ln();
    let (mut lo, mut hi) = (1e6, 1e12);
    if !(diff(lo) > 0.0) || !(diff(hi) < 0.0) {
        return Err(Error::NoSolution(
            "anchor admits no crossover in (1e6, 1e12)".into(),
        ));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if diff(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub fn mpower_unconditional() -> f64 {
    mpower_from_anchor(MPOWER_ANCHOR_M, MPOWER_ANCHOR_LOGLOG)
        .expect("the fixed anchor always admits a crossover")
}

/// Consistency of the crossover: at the returned m, n = exp(C/m) gives
/// (n/log²n, 111·m³) — the pair the bisection equates.
pub fn mpower_substitution_check(m: f64) -> (f64, f64) {
    let c = MPOWER_ANCHOR_M * MPOWER_ANCHOR_LOGLOG.exp();
    let n_log = c / m;
    (n_log.exp() / (n_log * n_log), 111.0 * m * m * m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn cube_problem(k: f64) -> ThresholdProblem {
        ThresholdProblem::new(3, k, BoundParams::default()).unwrap()
    }

    #[test]
    fn problem_validation() {
        assert!(ThresholdProblem::new(2, 0.9, BoundParams::default()).is_err());
        assert!(ThresholdProblem::new(3, 2.0 / 3.0, BoundParams::default()).is_err());
        assert!(ThresholdProblem::new(3, 1.0, BoundParams::default()).is_err());
        assert_eq!(cube_problem(0.9359).eps, 1e-3);
    }

    #[test]
    fn t_relation() {
        let t = solve_T(60.0, 0.9359).unwrap();
        assert!(rel(t, 24.989575850556798) < 1e-9);
        assert!(rel(solve_t_log(60.0, 0.9359).unwrap(), 3.2184587719359872) < 1e-9);
        assert!(solve_T(80.0, 0.9359).unwrap() > t);
        assert!(matches!(solve_T(1.0, 0.9), Err(Error::NoSolution(_))));
    }

    #[test]
    fn zero_sum_bound_terms() {
        let p = BoundParams::default();
        let (t1, t2) = zero_sum_bound(8e14, 0.9359, &p).unwrap();
        assert!(rel(t1, -33253180257878.52) < 1e-12);
        assert!((t2 - (-0.65542665423603971)).abs() < 1e-9);

        let doubled = BoundParams { A: 2.0 * p.A, ..p };
        let (_, t2d) = zero_sum_bound(8e14, 0.9359, &doubled).unwrap();
        assert!((t2d - t2 - 2.0f64.ln()).abs() < 1e-12);
        assert!(zero_sum_bound(2.0, 0.9, &p).is_err());
    }

    #[test]
    fn dominance_holds_far_out() {
        let p = BoundParams::default();
        for (x_log, lhs_want, rhs_want) in [
            (60.0, -4.7379855072210788, 13.37292728872728),
            (1e3, -219.65263086904844, 19.052915987115577),
            (1e6, -154636.61377804117, 31.205544636650773),
        ] {
            let (lhs, rhs, ok) = dominance_check(x_log, 0.9359, &p).unwrap();
            assert!(ok, "x_log={x_log}");
            assert!((lhs - lhs_want).abs() < 1e-6 * lhs_want.abs(), "x_log={x_log}");
            assert!((rhs - rhs_want).abs() < 1e-6 * rhs_want.abs(), "x_log={x_log}");
        }
    }

    #[test]
    fn ineq1_values_and_direction() {
        let pr = cube_problem(0.9359);
        let m = ineq1_margin(8e14, &pr).unwrap();
        assert!((m - 0.038721026657489137).abs() < 1e-9);
        assert!(ineq1_margin(1e10, &pr).unwrap() > 0.0);
        assert!(ineq1_margin(1e15, &pr).unwrap() < 0.0);

        // smaller c strengthens the decay term: margins drop pointwise
        let halved = ThresholdProblem {
            params: BoundParams {
                c_ford: pr.params.c_ford / 2.0,
                ..pr.params
            },
            ..pr
        };
        for y in [1e10, 8e14, 1e16] {
            assert!(ineq1_margin(y, &halved).unwrap() < ineq1_margin(y, &pr).unwrap());
        }
    }

    #[test]
    fn ineq2_values_and_precision_guard() {
        let pr = cube_problem(0.9359);
        let hi = ineq2_margin(8e14, &pr).unwrap();
        assert!((hi - (-80153075352.970127)).abs() < 1.0);
        let lo = ineq2_margin_f64(8e14, &pr).unwrap();
        assert!(rel(lo, hi) < 1e-6); // cancellation is controlled
        // m = 3 reduces the linear coefficient to 1/24
        assert!((0.375_f64 - 1.0 / 3.0 - 1.0 / 24.0).abs() < 1e-16);
    }

    #[test]
    fn g_over_h_source() {
        let s = g_over_h_margin_source(&BoundParams::default());
        assert_eq!(s.constant, 2.0);
        assert!(rel(s.shrink - 1.0, 3.531821838377546e-8) < 1e-9);
        assert!(s.consistent);
        let wide = g_over_h_margin_source(&BoundParams {
            delta_rs: 2.0,
            ..BoundParams::default()
        });
        assert!((wide.shrink - 2.0).abs() < 1e-15);
        assert!(!wide.consistent);
    }

    #[test]
    fn error_term_values() {
        let m60 = error_term_margin(60.0, 3).unwrap();
        assert!(rel(m60, -0.00073747457618248184) < 1e-10);
        assert!(m60.abs() < 1e-3);
        let m120 = error_term_margin(120.0, 3).unwrap();
        assert!(rel(m120, -2.9980015702051949e-5) < 1e-10);
        assert!(m120.abs() < m60.abs());
        assert!(error_term_margin(59.0, 3).is_err());
    }

    #[test]
    fn threshold_at_reported_k() {
        let sol = solve_threshold(&cube_problem(0.9359)).unwrap();
        assert!(rel(sol.y0.ln(), 34.31721943) < 1e-7);
        assert!(rel(sol.loglog_n0, 33.2186071) < 1e-7);
        assert!((sol.loglog_n0 + 3.0f64.ln() - sol.y0.ln()).abs() < 1e-12);
        // margins at the joint threshold: both satisfied, the binding one ~ 0
        assert!(sol.ineq1_margin_at_y0 <= 1e-6);
        assert!(sol.ineq2_margin_at_y0 <= 1e-3 * sol.y0);
    }

    #[test]
    fn threshold_roots_are_genuine_sign_changes() {
        let pr = cube_problem(0.9359);
        let r1 = bisect_root(|y| ineq1_margin(y, &pr), "ineq1").unwrap();
        assert!(ineq1_margin(r1 * (1.0 + 1e-3), &pr).unwrap() < 0.0);
        assert!(ineq1_margin(r1 * (1.0 - 1e-3), &pr).unwrap() > 0.0);
        let r2 = bisect_root(|y| ineq2_margin(y, &pr), "ineq2").unwrap();
        assert!(ineq2_margin(r2 * (1.0 + 1e-3), &pr).unwrap() < 0.0);
        assert!(ineq2_margin(r2 * (1.0 - 1e-3), &pr).unwrap() > 0.0);
    }

    #[test]
    fn no_threshold_near_k_boundary() {
        let pr = cube_problem(0.67);
        assert!(matches!(
            solve_threshold(&pr),
            Err(Error::NoThreshold(_))
        ));
    }

    #[test]
    fn cube_optimum() {
        let (k, sol) = optimize_k(3, &BoundParams::default(), &GridSpec::default()).unwrap();
        assert!((k - 0.93595711).abs() < 1e-5);
        assert!((sol.y0.ln() - 34.30864144).abs() < 1e-5);
        assert!((sol.loglog_n0 - 33.2100292).abs() < 1e-5);
    }

    #[test]
    fn small_density_constant_still_solves() {
        // regression: with A = 1e-4 the first inequality's margin starts
        // negative near y = e^2 before its main rise; the root finder must
        // bracket the final descent, not give up at the bottom of the range
        let params = BoundParams {
            A: 1e-4,
            ..BoundParams::default()
        };
        let (k, sol) = optimize_k(3, &params, &GridSpec::default()).unwrap();
        assert!((k - 0.935213359136).abs() < 1e-5);
        assert!((sol.loglog_n0 - 32.8161662883).abs() < 1e-5);
    }

    #[test]
    fn vanishing_density_constant_defers_to_second_inequality() {
        // A so small that inequality (1) holds on the whole search range:
        // the reported threshold is then inequality (2)'s root alone
        let params = BoundParams {
            A: 1e-40,
            ..BoundParams::default()
        };
        let pr = ThresholdProblem::new(3, 0.9359, params).unwrap();
        let sol = solve_threshold(&pr).unwrap();
        let default_sol = solve_threshold(&cube_problem(0.9359)).unwrap();
        assert!(sol.y0 < default_sol.y0);
        assert!(sol.ineq2_margin_at_y0.abs() < 1.0); // root of (2), not (1)
        assert!(ineq1_margin(sol.y0, &pr).unwrap() < 0.0);
    }

    #[test]
    fn mpower_values() {
        let m = mpower_unconditional();
        assert!(rel(m, 4971169787.258956) < 1e-9);
        let (lhs, rhs) = mpower_substitution_check(m);
        assert!(rel(lhs, rhs) < 1e-6);
        // doubling C through the anchor strictly raises the crossover
        let bigger = mpower_from_anchor(2.0 * MPOWER_ANCHOR_M, MPOWER_ANCHOR_LOGLOG).unwrap();
        assert!(bigger > m);
    }
}
