//! The saddle point `r(n)`, solution of `r e^r = n`, and the gap constants.

use std::sync::OnceLock;

use crate::error::{Error, Result};

const NEWTON_MAX_ITER: usize = 50;
const NEWTON_REL_TOL: f64 = 1e-13;

/// `r > 0` with `r e^r = n`, plus the residual `r e^r - n` at the returned `r`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SaddlePoint {
    pub n: u64,
    pub r: f64,
    pub residual: f64,
}

impl SaddlePoint {
    /// `e^{-r}`, evaluated as `r / n`.
    pub fn exp_neg_r(&self) -> f64 {
        self.r / self.n as f64
    }

    /// `e^r`, evaluated as `n / r`.
    pub fn exp_r(&self) -> f64 {
        self.n as f64 / self.r
    }
}

fn residual(r: f64, n: f64) -> f64 {
    r * r.exp() - n
}

/// Principal branch of the Lambert W function at a positive integer.
///
/// Newton's method from `max(ln n - ln ln n, 0.5)` (or `0.5` for `n < 3`),
/// falling back to bisection on a bracketing interval when Newton stalls.
pub fn lambert_w(n: u64) -> Result<SaddlePoint> {
    if n == 0 {
        return Err(Error::InvalidArgument("lambert_w needs n >= 1".into()));
    }
    let nf = n as f64;
    let tol = nf * NEWTON_REL_TOL;
    let ln_n = nf.ln();
    let mut r = if n >= 3 {
        (ln_n - ln_n.ln()).max(0.5)
    } else {
        0.5
    };
    for _ in 0..NEWTON_MAX_ITER {
        let f = residual(r, nf);
        if f.abs() <= tol {
            return Ok(SaddlePoint { n, r, residual: f });
        }
        r -= f / (r.exp() * (1.0 + r));
        if !r.is_finite() || r <= 0.0 {
            break;
        }
    }
    log::debug!("newton stalled for n = {n}; bisecting");
    bisect_lambert(n)
}

fn bisect_lambert(n: u64) -> Result<SaddlePoint> {
    let nf = n as f64;
    let ln_n = nf.ln();
    let mut lo = if n >= 3 {
        (ln_n - 2.0 * ln_n.ln()).max(0.1)
    } else {
        0.0
    };
    let mut hi = ln_n + 1.0;
    if residual(lo, nf) > 0.0 || residual(hi, nf) < 0.0 {
        return Err(Error::NonConvergence(format!("no bracket for r e^r = {n}")));
    }
    let mut best = (f64::INFINITY, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = residual(mid, nf);
        if f.abs() < best.0 {
            best = (f.abs(), mid);
        }
        if f < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r = best.1;
    let f = residual(r, nf);
    if f.abs() <= nf * NEWTON_REL_TOL {
        Ok(SaddlePoint { n, r, residual: f })
    } else {
        Err(Error::NonConvergence(format!(
            "r e^r = {n}: best residual {f:e} after bisection"
        )))
    }
}

/// `ln n - ln ln n + ln ln n / ln n`, with error `O((ln ln n / ln n)^2)`.
pub fn lambert_w_expansion(n: u64) -> Result<f64> {
    if n < 16 {
        return Err(Error::InvalidArgument(
            "the asymptotic expansion is only offered for n >= 16".into(),
        ));
    }
    let l1 = (n as f64).ln();
    let l2 = l1.ln();
    Ok(l1 - l2 + l2 / l1)
}

/// The two positive roots of `eta (1 - ln eta) = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EtaRoots {
    pub eta1: f64,
    pub eta2: f64,
}

/// `eta (1 - ln eta) - 1/2`.
pub fn eta_defect(eta: f64) -> f64 {
    eta * (1.0 - eta.ln()) - 0.5
}

/// Roots of [`eta_defect`]: one in `(0, 1)`, one in `(1, 3)`.
pub fn eta_roots() -> EtaRoots {
    static ROOTS: OnceLock<EtaRoots> = OnceLock::new();
    *ROOTS.get_or_init(|| EtaRoots {
        eta1: bisect_then_polish(1e-9, 1.0),
        eta2: bisect_then_polish(1.0, 3.0),
    })
}

/// Bisection down to adjacent floats, then one Newton step (`g' = -ln eta`).
fn bisect_then_polish(mut lo: f64, mut hi: f64) -> f64 {
    let rising = eta_defect(lo) < 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (eta_defect(mid) < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = if eta_defect(lo).abs() <= eta_defect(hi).abs() {
        lo
    } else {
        hi
    };
    let polished = x + eta_defect(x) / x.ln();
    if eta_defect(polished).abs() < eta_defect(x).abs() {
        polished
    } else {
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_values_of_exp_neg_r() {
        let r4 = lambert_w(4).unwrap();
        assert_eq!(format!("{:.6}", r4.exp_neg_r()), "0.300542");
        assert_eq!(
            format!("{:.6}", lambert_w(16).unwrap().exp_neg_r()),
            "0.128325"
        );
    }

    #[test]
    fn small_arguments() {
        // Omega constant.
        let w1 = lambert_w(1).unwrap();
        assert!((w1.r - 0.567_143_290_409_783_8).abs() < 1e-14);
        assert!(lambert_w(2).unwrap().r > w1.r);
        assert!(lambert_w(0).is_err());
    }

    #[test]
    fn identity_holds_across_scales() {
        for n in [
            1u64,
            2,
            3,
            7,
            100,
            12_345,
            1 << 20,
            999_999_937,
            u32::MAX as u64,
            1 << 50,
        ] {
            let s = lambert_w(n).unwrap();
            let nf = n as f64;
            assert!(s.residual.abs() <= nf * 1e-12, "n = {n}");
            assert!(
                ((-s.r).exp() - s.r / nf).abs() <= 1e-12 * s.r / nf,
                "n = {n}"
            );
            assert!(s.r > 0.0);
        }
    }

    #[test]
    fn bisection_fallback_agrees() {
        for n in [1u64, 2, 3, 50, 1 << 30] {
            let a = lambert_w(n).unwrap().r;
            let b = bisect_lambert(n).unwrap().r;
            assert!((a - b).abs() <= 1e-12 * a, "n = {n}: {a} vs {b}");
        }
    }

    #[test]
    fn expansion_accuracy() {
        let err = |n: u64| (lambert_w_expansion(n).unwrap() - lambert_w(n).unwrap().r).abs();
        let scale = |n: u64| {
            let l = (n as f64).ln();
            (l.ln() / l).powi(2)
        };
        assert!(err(1 << 10) < 0.02);
        assert!(err(1 << 20) < err(1 << 10));
        assert!(err(1 << 20) / scale(1 << 20) < 2.0 * err(1 << 10) / scale(1 << 10));
        assert!(lambert_w_expansion(16).unwrap().is_finite());
        assert!(lambert_w_expansion(15).is_err());
    }

    #[test]
    fn eta_constants() {
        let EtaRoots { eta1, eta2 } = eta_roots();
        assert_eq!(format!("{eta1:.7}"), "0.1866823");
        assert_eq!(format!("{eta2:.7}"), "2.1555352");
        assert!(eta_defect(eta1).abs() <= 1e-12);
        assert!(eta_defect(eta2).abs() <= 1e-12);
        assert!(0.0 < eta1 && eta1 < 1.0 && 1.0 < eta2);
    }
}
