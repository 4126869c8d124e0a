//! Closed-form saddle-point estimates for `B_{n,S}` and related ratios.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::BlockSizeSet;

use super::logspace::LogValue;
use super::saddle::{eta_roots, lambert_w};
use super::series::{alpha_eval, beta_eval, exp_tail, log_factorial};

/// Constants `delta1 < eta1 < eta2 < delta2`: the estimate is uniform over
/// sets `S` avoiding `[delta1 r, delta2 r]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapConstants {
    delta1: f64,
    delta2: f64,
}

impl GapConstants {
    pub fn new(delta1: f64, delta2: f64) -> Result<Self> {
        let eta = eta_roots();
        if !(delta1 > 0.0 && delta1 < eta.eta1 && delta2 > eta.eta2 && delta2.is_finite()) {
            return Err(Error::GapConstants {
                delta1,
                delta2,
                eta1: eta.eta1,
                eta2: eta.eta2,
            });
        }
        Ok(Self { delta1, delta2 })
    }

    pub fn delta1(&self) -> f64 {
        self.delta1
    }

    pub fn delta2(&self) -> f64 {
        self.delta2
    }
}

impl Default for GapConstants {
    fn default() -> Self {
        Self {
            delta1: 0.18,
            delta2: 2.16,
        }
    }
}

/// Whether `S` has no element in `[delta1 r(n), delta2 r(n)]`.
pub fn admissible(forbidden: &BlockSizeSet, n: u64, delta1: f64, delta2: f64) -> Result<bool> {
    let gap = GapConstants::new(delta1, delta2)?;
    let r = lambert_w(n)?.r;
    Ok(forbidden
        .first_in_range(gap.delta1 * r, gap.delta2 * r)
        .is_none())
}

/// Like [`admissible`], but names the offending element on failure.
pub fn check_admissible(forbidden: &BlockSizeSet, n: u64, gap: GapConstants) -> Result<()> {
    let r = lambert_w(n)?.r;
    let (lo, hi) = (gap.delta1 * r, gap.delta2 * r);
    match forbidden.first_in_range(lo, hi) {
        None => Ok(()),
        Some(element) => Err(Error::Inadmissible { n, element, lo, hi }),
    }
}

/// Log of the main term
/// `n! exp(e^r - 1 - alpha(r)) / (r^n sqrt(2 pi r (r+1) e^r))`,
/// without the admissibility check. `e^r` is always taken as `n / r`.
pub fn main_term_log(n: u64, forbidden: &BlockSizeSet) -> Result<LogValue> {
    let sp = lambert_w(n)?;
    let r = sp.r;
    let nf = n as f64;
    let alpha = alpha_eval(forbidden, r, 0)?;
    let exp_r = sp.exp_r();
    let ln = log_factorial(n as usize).ln() + (exp_r - 1.0 - alpha)
        - nf * r.ln()
        - 0.5 * (2.0 * PI * r * (r + 1.0) * exp_r).ln();
    Ok(LogValue(ln))
}

/// The saddle-point estimate of `ln B_{n,S}`; refuses sets that meet the gap.
pub fn saddle_log_estimate(
    n: u64,
    forbidden: &BlockSizeSet,
    gap: GapConstants,
) -> Result<LogValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("estimate needs n >= 1".into()));
    }
    check_admissible(forbidden, n, gap)?;
    main_term_log(n, forbidden)
}

/// Main terms of the proportion estimates at `n`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioEstimates {
    /// `exp(-alpha(r))`, approximating `B_{n,S} / B_n`.
    pub main: f64,
    /// `alpha'(r)^2 e^{-r}`, the relative error scale.
    pub error_term: f64,
    /// `r / n`, approximating the proportions of 1-rough and impractical partitions.
    pub singleton_main: f64,
    /// `1 - r / n`, approximating the proportion of practical partitions.
    pub practical_main: f64,
}

/// Proportion estimates. Admissibility is the caller's business: the
/// proportions are routinely evaluated for fixed small `S` at moderate `n`,
/// before the gap condition kicks in.
pub fn ratio_estimates(n: u64, forbidden: &BlockSizeSet) -> Result<RatioEstimates> {
    let sp = lambert_w(n)?;
    let r = sp.r;
    let alpha = alpha_eval(forbidden, r, 0)?;
    let alpha_prime = alpha_eval(forbidden, r, 1)?;
    let singleton_main = sp.exp_neg_r();
    Ok(RatioEstimates {
        main: (-alpha).exp(),
        error_term: alpha_prime * alpha_prime * singleton_main,
        singleton_main,
        practical_main: 1.0 - singleton_main,
    })
}

/// `(e r / m)^{2m-2} / e^r` for `S` with maximum `m`.
///
/// An error scale, not an error: the implied constant is unknown. It is
/// only meaningful while `m <= delta1 r`, which is not enforced here.
pub fn small_set_error_scale(n: u64, m: usize) -> Result<f64> {
    if m == 0 {
        return Err(Error::InvalidArgument("need max(S) = m >= 1".into()));
    }
    let r = lambert_w(n)?.r;
    let mf = m as f64;
    Ok(((2.0 * mf - 2.0) * (1.0 + r.ln() - mf.ln()) - r).exp())
}

/// Log of the upper bound `B_{n,m} <= n! exp(e^r - beta_m(r)) / r^n`.
pub fn rough_count_bound_log(n: u64, m: usize) -> Result<LogValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("bound needs n >= 1".into()));
    }
    let sp = lambert_w(n)?;
    let r = sp.r;
    // Past the peak of r^j/j! the tail is summed directly; before it the
    // difference n/r - beta_m(r) is well conditioned.
    let tail = if m as f64 > r {
        exp_tail(m, r)
    } else {
        sp.exp_r() - beta_eval(m, r)
    };
    Ok(LogValue(
        log_factorial(n as usize).ln() + tail - n as f64 * r.ln(),
    ))
}
