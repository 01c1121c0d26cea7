//! Truncated/untruncated explicit-formula evaluation over a zero table,
//! the itemized truncation error budget, and the big-sum bound.

use std::f64::consts::{E, PI, TAU};

use num_complex::Complex64;

use crate::arith;
use crate::error::{Error, Result};
use crate::kahan::KahanSum;
use crate::zeros::ZeroTable;

pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Minimum separation demanded between the truncation height and any
/// ordinate; arbitrary but fixed.
pub const NEAR_ZERO_EPS: f64 = 1e-6;

#[derive(Clone, Copy, Debug)]
pub struct ExplicitFormulaResult {
    pub x: f64,
    pub t: f64,
    pub main_term: f64,
    /// Σ_{0<γ<T} 2·Re(x^ρ/ρ), real by conjugate pairing
    pub zero_sum: f64,
    /// −log 2π − ½·log(1−x⁻²)
    pub trivial_terms: f64,
    pub psi_estimate: f64,
    /// 2x·log²x/T
    pub error_bound: f64,
}

/// One conjugate pair's contribution 2·Re(x^ρ/ρ) at ρ = ½ + iγ:
/// 2√x·(½·cos(γ·log x) + γ·sin(γ·log x))/(¼ + γ²).
///
/// Phase γ·log x is carried in plain f64: fine for x ≤ 1e9, γ ≤ 1e5
/// (argument ≤ 2×10⁶, phase error ~1e-9 rad).
pub fn pair_term(x: f64, gamma: f64) -> f64 {
    let phi = gamma * x.ln();
    let (s, c) = phi.sin_cos();
    2.0 * x.sqrt() * (0.5 * c + gamma * s) / (0.25 + gamma * gamma)
}

/// Same pair contribution straight from complex arithmetic; exists to
/// cross-check the closed form.
pub fn pair_term_complex(x: f64, gamma: f64) -> f64 {
    let rho = Complex64::new(0.5, gamma);
    2.0 * ((rho * x.ln()).exp() / rho).re
}

pub fn trivial_terms(x: f64) -> f64 {
    -TAU.ln() - 0.5 * (-1.0 / (x * x)).ln_1p()
}

/// ψ(x) ≈ x − Σ_{0<γ<T} x^ρ/ρ-pairs − log 2π − ½log(1−x⁻²), with the
/// stated O*(2x log²x/T) bound attached.
pub fn truncated_psi(x: f64, t: f64, table: &ZeroTable) -> Result<ExplicitFormulaResult> {
    if !(x > 1.0) {
        return Err(Error::domain(format!("x = {x} must be > 1")));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!("T = {t} must be positive")));
    }
    if !table.anchored_at_zero() {
        return Err(Error::NotAnchored);
    }
    if t > table.height() {
        return Err(Error::HeightExceeded {
            t,
            height: table.height(),
        });
    }
    let g = table.ordinates();
    let cut = g.partition_point(|&v| v < t);
    for &near in g[cut.saturating_sub(1)..(cut + 1).min(g.len())].iter() {
        if (t - near).abs() < NEAR_ZERO_EPS {
            return Err(Error::NearZeroOrdinate { t, gamma: near });
        }
    }
    let mut sum = KahanSum::new();
    for &gamma in &g[..cut] {
        sum.add(pair_term(x, gamma));
    }
    let zero_sum = sum.total();
    let lx = x.ln();
    let trivial = trivial_terms(x);
    Ok(ExplicitFormulaResult {
        x,
        t,
        main_term: x,
        zero_sum,
        trivial_terms: trivial,
        psi_estimate: x - zero_sum + trivial,
        error_bound: 2.0 * x * lx * lx / t,
    })
}

/// Deviation |psi_estimate − ψ(x)| for each T in an ascending grid;
/// exhibits the convergence of the untruncated formula.
pub fn untruncated_convergence(
    x: f64,
    table: &ZeroTable,
    t_grid: &[f64],
) -> Result<Vec<(f64, f64)>> {
    if !(x >= 2.5) || x.fract() != 0.5 {
        return Err(Error::domain(format!(
            "x = {x} must be half an odd integer >= 2.5"
        )));
    }
    if t_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("T grid must be strictly ascending"));
    }
    let psi_x = arith::psi(x)?;
    t_grid
        .iter()
        .map(|&t| {
            let r = truncated_psi(x, t, table)?;
            Ok((t, (r.psi_estimate - psi_x).abs()))
        })
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct BigSumBound {
    pub alpha: f64,
    pub x: f64,
    /// the exponent shift c = 1 + 1/log x
    pub c: f64,
    pub s1_s5: f64,
    pub s3: f64,
    pub s2: f64,
    pub s4: f64,
    pub total: f64,
    /// total/(x·log²x), computed with x factored out of every term
    pub ratio: f64,
    /// the bound's own claim needs x > e⁶⁰; smaller x still evaluates
    pub in_lemma_domain: bool,
}

/// Bound on Σ Λ(n)·(weights) split into S₁+S₅, S₃, S₂, S₄.
///
/// The printed S₄ lacks the factor of x (and α^c) present in its S₂ twin;
/// `corrected_s4 = true` replaces the leading 2/(3−α) with x·α^c, which is
/// the reading consistent with a total ∝ x·log²x. Both variants are exposed.
pub fn big_sum_bound(alpha: f64, x: f64, corrected_s4: bool) -> Result<BigSumBound> {
    if !(alpha > 1.0) || !(alpha < 2.0) {
        return Err(Error::domain(format!("alpha = {alpha} outside (1, 2)")));
    }
    if !(x > E) {
        return Err(Error::domain(format!("x = {x} must exceed e")));
    }
    let lx = x.ln();
    let c = 1.0 + 1.0 / lx;
    let ac = (c * alpha.ln()).exp(); // α^c

    // per-x factors: term_i = x · f_i keeps everything finite for huge x
    let f15 = E * lx / alpha.ln();
    let f3 = 5.0 * lx;
    let tail2 = lx + (1.0 - 1.0 / alpha).ln() + EULER_GAMMA + (1.0 / x) / (1.0 - 1.0 / alpha);
    let f2 = ac * lx * tail2;
    let tail4 = lx + (alpha - 1.0).ln() + EULER_GAMMA + (1.0 / x) / (alpha - 1.0);
    let log_alpha_x = alpha.ln() + lx;

    let (s4, ratio_s4) = if corrected_s4 {
        let f4 = ac * log_alpha_x * tail4;
        (f4 * x, f4 / (lx * lx))
    } else {
        // verbatim form has no factor of x at all
        let v = 2.0 * log_alpha_x / (3.0 - alpha) * tail4;
        (v, v / x / (lx * lx))
    };

    let ratio = (f15 + f3 + f2) / (lx * lx) + ratio_s4;
    Ok(BigSumBound {
        alpha,
        x,
        c,
        s1_s5: f15 * x,
        s3: f3 * x,
        s2: f2 * x,
        s4,
        total: (f15 + f3 + f2) * x + s4,
        ratio,
        in_lemma_domain: lx > 60.0,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct ErrorBudget {
    pub x: f64,
    pub t: f64,
    /// even integer nearest x (the left contour abscissa)
    pub u: f64,
    /// 2.8·x·log²x/(πT)
    pub perron_term: f64,
    pub i3: f64,
    /// 2x·log T/(T−1)
    pub zero_window: f64,
    pub i5: f64,
    pub i6: f64,
    pub i7: f64,
    pub i8: f64,
    /// log 2π
    pub trivial_const: f64,
    /// ½·log(1−x⁻²) ≤ 0
    pub log_term: f64,
    pub total: f64,
    /// total/(2x·log²x/T), accumulated term-by-term in log-space
    pub ratio: f64,
}

/// Itemized truncation error: total = log 2π + |½log(1−x⁻²)|
/// + 2·(zero_window + |I₅| + |I₆| + |I₇| + |I₈|) + |I₃| + 2.8x·log²x/(πT).
pub fn error_budget(x: f64, t: f64) -> Result<ErrorBudget> {
    if !(t > 50.0) || !(t < x) {
        return Err(Error::domain(format!(
            "need 50 < T < x, got (x, T) = ({x}, {t})"
        )));
    }
    let lx = x.ln();
    let lt = t.ln();
    let u = (x / 2.0).round() * 2.0; // above 2^53 every f64 is an even integer
    let hyp_t = u.hypot(t).ln(); // log √(U²+T²)
    let hyp_t1 = u.hypot(t + 1.0).ln();

    // x^{-U} factors vanish beyond f64 range; their log-space exponents stay exact
    let i3_ln = (18.0 + 2.0 * hyp_t).ln() - TAU.ln() - u * lx;
    let i5_ln = (18.0 + 2.0 * hyp_t1).ln() - TAU.ln() - u * lx - lt;
    let i3 = i3_ln.exp();
    let i5 = i5_ln.exp();

    let zero_window = 2.0 * x * lt / (t - 1.0);
    let i6 = (9.0 + hyp_t1) / (TAU * x * (t - 1.0));
    let lt1 = (t + 1.0).ln();
    let i7 = E / (TAU * (t - 1.0)) * (lt1 * lt1 + lt1);
    let i8 = E * x * lx / (PI * (t - 1.0));
    let perron_term = 2.8 * x * lx * lx / (PI * t);
    let trivial_const = TAU.ln();
    let log_term = 0.5 * (-1.0 / (x * x)).ln_1p();

    let total = trivial_const
        + log_term.abs()
        + 2.0 * (zero_window + i5 + i6 + i7 + i8)
        + i3
        + perron_term;

    // denominator 2x·log²x/T in logs
    let d = 2.0f64.ln() + lx + 2.0 * lx.ln() - lt;
    let zero_window_ln = 2.0f64.ln() + lx + lt.ln() - (t - 1.0).ln();
    let i6_ln = (9.0 + hyp_t1).ln() - TAU.ln() - lx - (t - 1.0).ln();
    let i7_ln = 1.0 - TAU.ln() - (t - 1.0).ln() + (lt1 * lt1 + lt1).ln();
    let i8_ln = 1.0 + lx + lx.ln() - PI.ln() - (t - 1.0).ln();
    let perron_ln = 2.8f64.ln() + lx + 2.0 * lx.ln() - PI.ln() - lt;
    let log_term_ln = if log_term == 0.0 {
        -2.0 * lx - 2.0f64.ln() // underflowed; exact series head −x⁻²/2
    } else {
        log_term.abs().ln()
    };
    let q = |term_ln: f64| (term_ln - d).exp();
    let ratio = q(trivial_const.ln())
        + q(log_term_ln)
        + 2.0 * (q(zero_window_ln) + q(i5_ln) + q(i6_ln) + q(i7_ln) + q(i8_ln))
        + q(i3_ln)
        + q(perron_ln);

    Ok(ErrorBudget {
        x,
        t,
        u,
        perron_term,
        i3,
        zero_window,
        i5,
        i6,
        i7,
        i8,
        trivial_const,
        log_term,
        total,
        ratio,
    })
}
