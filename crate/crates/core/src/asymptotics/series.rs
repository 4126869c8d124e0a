//! Power series in the saddle point: `alpha_S`, `beta_m`, and `ln n!`.

use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::BlockSizeSet;

use super::logspace::LogValue;

/// Largest log-magnitude of a single series term before we refuse.
pub const TERM_LOG_LIMIT: f64 = 700.0;

/// Neumaier's compensated sum.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn ln_factorial_table() -> &'static RwLock<Vec<f64>> {
    static TABLE: OnceLock<RwLock<Vec<f64>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![0.0]))
}

/// `ln(n!)` as the running sum of `ln k`, cached process-wide.
pub fn log_factorial(n: usize) -> LogValue {
    if let Some(&v) = ln_factorial_table().read().unwrap().get(n) {
        return LogValue(v);
    }
    let mut table = ln_factorial_table().write().unwrap();
    while table.len() <= n {
        let k = table.len();
        let next = table[k - 1] + (k as f64).ln();
        table.push(next);
    }
    LogValue(table[n])
}

/// `d^order/dr^order alpha_S(r)`, where `alpha_S(z) = sum_{k in S} z^k / k!`.
///
/// Terms are accumulated in ascending `k`; once past `2r` they shrink at
/// least geometrically and the sum stops when they no longer register.
pub fn alpha_eval(forbidden: &BlockSizeSet, r: f64, order: u32) -> Result<f64> {
    if order > 2 {
        return Err(Error::InvalidArgument(format!(
            "alpha derivatives are provided up to order 2, got {order}"
        )));
    }
    if r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "alpha needs r > 0, got {r}"
        )));
    }
    let ln_r = r.ln();
    let mut acc = CompensatedSum::default();
    for k in forbidden.iter() {
        let Some(j) = k.checked_sub(order as usize) else {
            continue;
        };
        let log_term = j as f64 * ln_r - log_factorial(j).ln();
        if log_term > TERM_LOG_LIMIT {
            return Err(Error::AlphaOverflow { k, log_term });
        }
        let term = log_term.exp();
        acc.add(term);
        if j as f64 > 2.0 * r && term <= f64::EPSILON * acc.value() {
            break;
        }
    }
    Ok(acc.value())
}

/// `beta_m(r) = sum_{j=0}^{m} r^j / j!`.
pub fn beta_eval(m: usize, r: f64) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut term = 1.0;
    acc.add(term);
    for j in 1..=m {
        term *= r / j as f64;
        acc.add(term);
        if j as f64 > 2.0 * r && term <= f64::EPSILON * acc.value() {
            break;
        }
    }
    acc.value()
}

/// `e^r - beta_m(r) = sum_{j > m} r^j / j!`, summed directly.
pub fn exp_tail(m: usize, r: f64) -> f64 {
    let mut acc = CompensatedSum::default();
    let mut term = ((m + 1) as f64 * r.ln() - log_factorial(m + 1).ln()).exp();
    let mut j = m + 1;
    loop {
        acc.add(term);
        j += 1;
        term *= r / j as f64;
        if (j as f64 > 2.0 * r && term <= f64::EPSILON * acc.value()) || term == 0.0 {
            break;
        }
    }
    acc.value()
}
