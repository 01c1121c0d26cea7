//! Randomized invariants over the numeric kernels: order relations, scaling
//! laws, permutation stability, and cross-checks between independent paths
//! to the same quantity.

use std::path::PathBuf;
use std::sync::OnceLock;

use proptest::prelude::*;

use gaplab_core::threshold::{
    ineq1_margin, ineq2_margin, ineq2_margin_f64, solve_t_log, solve_threshold, ThresholdProblem,
};
use gaplab_core::zeros::{count_zeros, load_zeros_from_path, window_count_check, ZeroTable};
use gaplab_core::{
    big_sum_bound, chebyshev_eval, density_bound, error_budget, first_prime_in, is_prime, n_upper,
    psi, theta, truncated_psi, von_mangoldt, zero_free_nu, zero_free_nu_from_log, BoundParams,
    KahanSum,
};

fn table() -> &'static ZeroTable {
    static TABLE: OnceLock<ZeroTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/zeros_100k.txt");
        load_zeros_from_path(&path).expect("zero table ships with the repo")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn psi_dominates_theta_and_both_step_at_integers(x in 2.0f64..1e6) {
        let ev = chebyshev_eval(x).unwrap();
        prop_assert!(ev.theta >= 0.0);
        prop_assert!(ev.psi >= ev.theta);
        let at_floor = chebyshev_eval(x.floor()).unwrap();
        prop_assert_eq!(ev.psi, at_floor.psi);
        prop_assert_eq!(ev.theta, at_floor.theta);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn psi_is_the_sum_of_theta_over_integer_roots(x in 4.0f64..1e6) {
        let mut total = 0.0;
        let mut r = 1;
        loop {
            let root = x.powf(1.0 / r as f64);
            if root < 2.0 {
                break;
            }
            total += theta(root).unwrap();
            r += 1;
        }
        let direct = psi(x).unwrap();
        prop_assert!((total / direct - 1.0).abs() < 1e-9, "{total} vs {direct}");
    }

    #[test]
    fn psi_matches_naive_summation(x in 2u64..100_000) {
        let naive: KahanSum = (2..=x).map(von_mangoldt).collect();
        let direct = psi(x as f64).unwrap();
        prop_assert!((direct - naive.total()).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn zero_count_monotone_in_height(a in 15.0f64..74920.0, b in 15.0f64..74920.0) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let tab = table();
        prop_assert!(count_zeros(tab, lo).unwrap() <= count_zeros(tab, hi).unwrap());
    }

    #[test]
    fn window_check_matches_two_sided_count(t in 52u32..74919) {
        let tab = table();
        let t = t as f64;
        let (count, _, _) = window_count_check(tab, t).unwrap();
        let two_sided =
            count_zeros(tab, t + 1.0).unwrap() - count_zeros(tab, t - 1.0).unwrap();
        prop_assert_eq!(count, two_sided);
    }

    #[test]
    fn density_bound_shrinks_toward_the_edge(
        s1 in 0.52f64..0.999,
        s2 in 0.52f64..0.999,
        t in 100.0f64..1e6,
    ) {
        let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
        let p = BoundParams::default();
        prop_assert!(density_bound(hi, t, &p).unwrap() <= density_bound(lo, t, &p).unwrap());
    }

    #[test]
    fn zero_free_width_scales_inversely_with_its_constant(log_t in 5.0f64..1e6) {
        let p = BoundParams::default();
        let doubled = BoundParams { c_ford: 2.0 * p.c_ford, ..p };
        let nu = zero_free_nu_from_log(log_t, &p).unwrap();
        let nu2 = zero_free_nu_from_log(log_t, &doubled).unwrap();
        prop_assert!(nu > 0.0 && nu < 0.5);
        prop_assert!((nu2 * 2.0 / nu - 1.0).abs() < 1e-12);
    }

    #[test]
    fn count_bound_monotone(a in 16.0f64..1e8, b in 16.0f64..1e8) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(n_upper(lo).unwrap() <= n_upper(hi).unwrap());
    }

    #[test]
    fn kahan_total_is_permutation_stable(values in prop::collection::vec(
        (-40i32..40, -1.0f64..1.0).prop_map(|(e, m)| m * 2.0f64.powi(e)),
        1..400,
    )) {
        let forward: KahanSum = values.iter().copied().collect();
        let backward: KahanSum = values.iter().rev().copied().collect();
        let scale: f64 = values.iter().map(|v| v.abs()).sum();
        prop_assert!((forward.total() - backward.total()).abs() <= 1e-12 * scale.max(1.0));
    }

    #[test]
    fn first_prime_matches_linear_scan_randomized(lo in 2u64..1_000_000, span in 0u64..600) {
        let (lo, hi) = (lo as u128, (lo + span) as u128);
        let naive = (lo..=hi).find(|&n| is_prime(n).unwrap());
        prop_assert_eq!(first_prime_in(lo, hi).unwrap(), naive);
    }

    #[test]
    fn big_sum_corrected_reading_dominates_verbatim(
        alpha in 1.01f64..1.99,
        log_x in 2.0f64..300.0,
    ) {
        let x = log_x.exp();
        let corrected = big_sum_bound(alpha, x, true).unwrap();
        let verbatim = big_sum_bound(alpha, x, false).unwrap();
        prop_assert!(verbatim.ratio > 0.0);
        prop_assert!(corrected.ratio > verbatim.ratio);
        prop_assert_eq!(corrected.in_lemma_domain, log_x > 60.0);
    }

    #[test]
    fn truncation_height_solution_plugs_back_in(
        x_log in 30.0f64..1e15,
        k in 0.67f64..0.999,
    ) {
        let rhs = x_log - x_log.powf(k);
        prop_assume!(rhs > 8.0 / 3.0 * 3.0f64.ln() + 1e-6);
        let t_log = solve_t_log(x_log, k).unwrap();
        let lhs = 8.0 / 3.0 * (3.0f64.ln() + t_log) + 2.0 * t_log.ln();
        prop_assert!((lhs / rhs - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn threshold_root_is_a_root_and_inequalities_hold_there(
        k in 0.70f64..0.99,
        m in 3u32..8,
    ) {
        let pr = ThresholdProblem::new(m, k, BoundParams::default()).unwrap();
        let Ok(sol) = solve_threshold(&pr) else {
            return Ok(()); // no threshold at this k: legitimate outcome
        };
        prop_assert!(sol.y0 > 2.0f64.exp() && sol.y0 <= 1e20);
        // the binding inequality's margin vanishes at y0, the other is
        // satisfied (non-positive up to bisection slack at y0's scale)
        prop_assert!(sol.ineq1_margin_at_y0 < 1e-6);
        prop_assert!(sol.ineq2_margin_at_y0 < 1e-9 * sol.y0);
        let binding1 = sol.ineq1_margin_at_y0.abs() < 1e-6;
        let binding2 = sol.ineq2_margin_at_y0.abs() < 1e-9 * sol.y0;
        prop_assert!(binding1 || binding2);
        prop_assert!((sol.loglog_n0 - (sol.y0 / m as f64).ln()).abs() < 1e-12);
        prop_assert!((sol.k_used - k).abs() == 0.0);
    }
}

/// Numerically observed directions: shrinking either constant weakens the
/// decay obstruction, so the threshold can only move down.
#[test]
fn threshold_monotone_in_the_bound_constants() {
    let base = BoundParams::default();
    let mut last = f64::NEG_INFINITY;
    for mult in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let p = BoundParams {
            c_ford: base.c_ford * mult,
            ..base
        };
        let pr = ThresholdProblem::new(3, 0.9359, p).unwrap();
        let y0 = solve_threshold(&pr).unwrap().y0;
        assert!(y0 >= last, "c multiplier {mult}: {y0} < {last}");
        last = y0;
    }
    let mut last = f64::NEG_INFINITY;
    for a in [1e-6, 1e-4, 1e-2, 1.0, 9.7, 100.0] {
        let pr = ThresholdProblem::new(3, 0.9359, BoundParams { A: a, ..base }).unwrap();
        let y0 = solve_threshold(&pr).unwrap().y0;
        assert!(y0 >= last, "A = {a}: {y0} < {last}");
        last = y0;
    }
}

/// At fixed k the second inequality relaxes as m grows while the first
/// ignores m entirely, so y0 can't increase and loglog strictly falls.
#[test]
fn threshold_loglog_strictly_decreasing_in_m_at_fixed_k() {
    let mut last_y0 = f64::INFINITY;
    let mut last_ll = f64::INFINITY;
    for m in [3u32, 4, 5, 6, 8, 12, 20, 50] {
        let pr = ThresholdProblem::new(m, 0.93, BoundParams::default()).unwrap();
        let sol = solve_threshold(&pr).unwrap();
        assert!(sol.y0 <= last_y0, "m={m}");
        assert!(sol.loglog_n0 < last_ll, "m={m}");
        last_y0 = sol.y0;
        last_ll = sol.loglog_n0;
    }
}

/// The 128-bit path and the plain-f64 path agree to the f64 path's honest
/// precision across the whole bracket, including near the cube root where
/// the margin is a small difference of ~1e14-scale terms.
#[test]
fn second_inequality_margins_agree_between_precisions() {
    for &m in &[3u32, 7] {
        for &k in &[0.70f64, 0.9359, 0.99] {
            let pr = ThresholdProblem::new(m, k, BoundParams::default()).unwrap();
            for &y in &[1e3, 1e5, 1e8, 1e12, 8e14, 1e17, 1e20] {
                let exact = ineq2_margin(y, &pr).unwrap();
                let fast = ineq2_margin_f64(y, &pr).unwrap();
                let tol = 1e-5 * exact.abs().max(1e-6 * y);
                assert!(
                    (exact - fast).abs() <= tol,
                    "m={m} k={k} y={y}: {exact} vs {fast}"
                );
            }
        }
    }
}

/// The zero-free width stays inside the critical strip's half: ν(γ) < ½ at
/// every tabulated ordinate (the region never excludes a critical-line zero).
#[test]
fn zero_free_width_below_half_at_every_ordinate() {
    let p = BoundParams::default();
    for &gamma in table().ordinates() {
        let nu = zero_free_nu(gamma, &p).unwrap();
        assert!(nu > 0.0 && nu < 0.5, "gamma={gamma}: nu={nu}");
    }
}

/// The itemized truncation budget stays under its headline bound at the
/// midpoint height T = x/2 as well as the grid the acceptance drive uses.
#[test]
fn error_budget_under_bound_at_half_x() {
    for x_log in [60.0f64, 80.0, 100.0] {
        let x = x_log.exp();
        let b = error_budget(x, x / 2.0).unwrap();
        assert!(b.ratio < 1.0, "x_log={x_log}: ratio={}", b.ratio);
    }
}

/// The deviation bound claim extends to the top of the tested range,
/// x = 10⁸ + ½, an order past the values the acceptance drive sweeps.
#[test]
fn truncated_formula_within_bound_at_1e8() {
    let tab = table();
    let x = 1e8 + 0.5;
    let psi_x = psi(x).unwrap();
    for t in [1e4, tab.height() - 1e-3] {
        let ef = truncated_psi(x, t, tab).unwrap();
        let dev = (ef.psi_estimate - psi_x).abs();
        assert!(dev < ef.error_bound, "T={t}: {dev} vs {}", ef.error_bound);
    }
}

/// Each inequality's own root is a genuine sign change: positive a hair
/// below, negative a hair above. The default problem pins inequality (1)'s
/// root at y0; a vanishing density constant isolates inequality (2)'s.
#[test]
fn roots_are_genuine_sign_changes() {
    let pr = ThresholdProblem::new(3, 0.9359, BoundParams::default()).unwrap();
    let y1 = solve_threshold(&pr).unwrap().y0;
    assert!(ineq1_margin(y1 * 0.999, &pr).unwrap() > 0.0);
    assert!(ineq1_margin(y1 * 1.001, &pr).unwrap() < 0.0);

    let faded = ThresholdProblem::new(
        3,
        0.9359,
        BoundParams {
            A: 1e-40,
            ..BoundParams::default()
        },
    )
    .unwrap();
    let y2 = solve_threshold(&faded).unwrap().y0;
    assert!(ineq2_margin(y2 * 0.999, &faded).unwrap() > 0.0);
    assert!(ineq2_margin(y2 * 1.001, &faded).unwrap() < 0.0);
}

/// Inequality margins decrease where the thresholds live: once negative at
/// some y past the root, they stay negative through the top of the range.
#[test]
fn margins_stay_negative_beyond_the_root() {
    let pr = ThresholdProblem::new(3, 0.9359, BoundParams::default()).unwrap();
    let y0 = solve_threshold(&pr).unwrap().y0;
    for mult in [1.001, 1.01, 1.5, 10.0, 1e3] {
        let y = y0 * mult;
        if y > 1e20 {
            break;
        }
        assert!(ineq1_margin(y, &pr).unwrap() < 0.0, "mult={mult}");
        assert!(ineq2_margin(y, &pr).unwrap() < 0.0, "mult={mult}");
    }
}
