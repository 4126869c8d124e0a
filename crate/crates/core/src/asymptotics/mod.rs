//! Numerical evaluation of the saddle-point estimates.
//!
//! Anything that can overflow an `f64` is carried as a [`LogValue`], and
//! `e^r` is always replaced by `n / r`.

pub mod egf;
pub mod estimates;
pub mod logspace;
pub mod saddle;
pub mod series;

pub use egf::{count_from_coefficient, egf_coefficients, scale_by_factorial, EGF_CAP};
pub use estimates::{
    admissible, check_admissible, main_term_log, ratio_estimates, rough_count_bound_log,
    saddle_log_estimate, small_set_error_scale, GapConstants, RatioEstimates,
};
pub use logspace::{log_of_bigcount, LogValue};
pub use saddle::{eta_defect, eta_roots, lambert_w, lambert_w_expansion, EtaRoots, SaddlePoint};
pub use series::{alpha_eval, beta_eval, exp_tail, log_factorial, CompensatedSum};
