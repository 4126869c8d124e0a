//! The `estimate` report.

use std::fmt::Write as _;

use blockfree_core::asymptotics::{
    alpha_eval, check_admissible, main_term_log, ratio_estimates, small_set_error_scale,
};
use blockfree_core::{lambert_w, BlockSizeSet, GapConstants, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub n: u64,
    pub set: String,
    pub r: f64,
    pub residual: f64,
    pub exp_neg_r: f64,
    pub alpha: f64,
    pub alpha_prime: f64,
    pub delta1: f64,
    pub delta2: f64,
    pub admissible: bool,
    /// `ln` of the main term for `B_{n,S}`.
    pub log_estimate: f64,
    /// `exp(-alpha(r))`, the estimate of `B_{n,S} / B_n`.
    pub ratio_estimate: f64,
    /// `alpha'(r)^2 e^{-r}`.
    pub error_term: f64,
    /// `(e r / m)^{2m-2} / e^r` with `m = max S`; absent for the empty set.
    pub small_set_error: Option<f64>,
    pub singleton_ratio: f64,
    pub practical_ratio: f64,
}

impl EstimateReport {
    pub fn build(n: u64, forbidden: &BlockSizeSet, gap: GapConstants) -> Result<Self> {
        let sp = lambert_w(n)?;
        let admissible = check_admissible(forbidden, n, gap).is_ok();
        let ratios = ratio_estimates(n, forbidden)?;
        let small_set_error = match forbidden.max() {
            Some(m) => Some(small_set_error_scale(n, m)?).filter(|v| v.is_finite()),
            None => None,
        };
        Ok(Self {
            n,
            set: forbidden.to_string(),
            r: sp.r,
            residual: sp.residual,
            exp_neg_r: sp.exp_neg_r(),
            alpha: alpha_eval(forbidden, sp.r, 0)?,
            alpha_prime: alpha_eval(forbidden, sp.r, 1)?,
            delta1: gap.delta1(),
            delta2: gap.delta2(),
            admissible,
            log_estimate: main_term_log(n, forbidden)?.ln(),
            ratio_estimate: ratios.main,
            error_term: ratios.error_term,
            small_set_error,
            singleton_ratio: ratios.singleton_main,
            practical_ratio: ratios.practical_main,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n                {}", self.n);
        let _ = writeln!(s, "S                {}", self.set);
        let _ = writeln!(s, "r                {:.12}", self.r);
        let _ = writeln!(s, "r e^r - n        {:e}", self.residual);
        let _ = writeln!(s, "exp(-r)          {:.6}", self.exp_neg_r);
        let _ = writeln!(s, "alpha(r)         {:.12}", self.alpha);
        let _ = writeln!(s, "alpha'(r)        {:.12}", self.alpha_prime);
        let _ = writeln!(
            s,
            "admissible       {} (gap [{:.6}, {:.6}])",
            self.admissible,
            self.delta1 * self.r,
            self.delta2 * self.r
        );
        let _ = writeln!(s, "ln estimate      {:.12}", self.log_estimate);
        let _ = writeln!(s, "ratio estimate   {:.3e}", self.ratio_estimate);
        let _ = writeln!(s, "error term       {:.4}", self.error_term);
        if let Some(e) = self.small_set_error {
            let _ = writeln!(s, "small-set scale  {e:.4e}");
        }
        let _ = writeln!(s, "r/n              {:.6}", self.singleton_ratio);
        let _ = writeln!(s, "1 - r/n          {:.6}", self.practical_ratio);
        s
    }
}
