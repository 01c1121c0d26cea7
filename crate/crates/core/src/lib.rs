//! Numerical laboratory for prime gaps between consecutive m-th powers:
//! Chebyshev sums over sieved primes, zero tables with counting bounds,
//! a truncated explicit formula with audited error budget, and the
//! threshold program that turns zero-density estimates into explicit
//! cube-gap (and general m-power) statements.

pub mod arith;
pub mod bounds;
pub mod error;
pub mod explicit;
pub mod kahan;
pub mod logspace;
pub mod primality;
pub mod sieve;
pub mod threshold;
pub mod zeros;

pub use num_complex::Complex64;

pub use arith::{
    chebyshev_eval, chebyshev_eval_with, cube_gap_scan, first_prime_in, power_gap_scan,
    prime_in_interval, psi, psi_theta_gap_check, psi_theta_gap_check_with, psi_theta_gap_with,
    theta, von_mangoldt, ChebyshevEval, GapCertificate, GapStatus,
};
pub use bounds::{
    choicet_bound, density_bound, n_upper, zero_free_nu, zero_free_nu_from_log,
    zetaprime_over_zeta_left_bound, zetaprime_over_zeta_strip_bound, BoundParams,
};
pub use error::{Error, Result};
pub use explicit::{
    big_sum_bound, error_budget, pair_term, trivial_terms, truncated_psi,
    untruncated_convergence, BigSumBound, ErrorBudget, ExplicitFormulaResult,
};
pub use kahan::KahanSum;
pub use primality::{is_prime, PRIMALITY_CEILING};
pub use sieve::{for_each_prime_in, primes_in_range, simple_sieve, SieveConfig};
pub use threshold::{
    dominance_check, error_term_margin, g_over_h_margin_source, ineq1_margin, ineq2_margin,
    ineq2_margin_f64, l_sensitivity_table, mpower_from_anchor, mpower_substitution_check,
    mpower_unconditional, optimize_k, solve_t_log, solve_threshold, solve_T, zero_sum_bound,
    GOverHSource, GridSpec, ThresholdProblem, ThresholdSolution, EPS_SLACK,
};
pub use zeros::{count_zeros, load_zeros, load_zeros_from_path, window_count_check, ZeroTable};
