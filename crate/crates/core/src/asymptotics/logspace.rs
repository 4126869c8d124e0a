//! Natural logarithms of quantities too large for an `f64`.

use std::ops::{Add, Div, Mul, Sub};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// `ln x` of a positive quantity `x`. Products and quotients of the
/// represented quantities map to sums and differences of logs.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LogValue(pub f64);

impl LogValue {
    pub const ONE: LogValue = LogValue(0.0);

    pub fn ln(self) -> f64 {
        self.0
    }

    /// The represented quantity; overflows to infinity past ~1.8e308.
    pub fn value(self) -> f64 {
        self.0.exp()
    }

    /// `self / other - 1`, accurate when the ratio is close to one.
    pub fn relative_error_to(self, other: LogValue) -> f64 {
        (self.0 - other.0).exp_m1()
    }
}

impl Mul for LogValue {
    type Output = LogValue;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        LogValue(self.0 + rhs.0)
    }
}

impl Div for LogValue {
    type Output = LogValue;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        LogValue(self.0 - rhs.0)
    }
}

/// Shifts the log by a plain real, i.e. multiplies the quantity by `e^x`.
impl Add<f64> for LogValue {
    type Output = LogValue;
    fn add(self, rhs: f64) -> Self {
        LogValue(self.0 + rhs)
    }
}

impl Sub<f64> for LogValue {
    type Output = LogValue;
    fn sub(self, rhs: f64) -> Self {
        LogValue(self.0 - rhs)
    }
}

/// `ln x` from the bit length and the leading 64 bits of `x >= 1`.
pub fn log_of_bigcount(x: &BigUint) -> Result<LogValue> {
    let bits = x.bits();
    if bits == 0 {
        return Err(Error::InvalidArgument("logarithm of zero count".into()));
    }
    if bits <= 64 {
        return Ok(LogValue((x.to_u64().unwrap() as f64).ln()));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap() as f64;
    Ok(LogValue(top.ln() + shift as f64 * std::f64::consts::LN_2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::bell;
    use num_traits::{One, Pow};

    #[test]
    fn exact_powers_and_one() {
        assert_eq!(log_of_bigcount(&BigUint::one()).unwrap(), LogValue(0.0));
        let p = BigUint::from(2u32).pow(100u32);
        let got = log_of_bigcount(&p).unwrap().ln();
        assert!((got - 100.0 * std::f64::consts::LN_2).abs() <= 1e-12);
        assert!(log_of_bigcount(&BigUint::default()).is_err());
    }

    #[test]
    fn bell_fifty_by_decimal_scaling() {
        // Independent route: divide by a power of ten so 17 digits remain.
        let b = bell(50);
        let digits = b.to_string().len() as u32;
        let k = digits - 17;
        let head = (&b / BigUint::from(10u32).pow(k)).to_u64().unwrap() as f64;
        let expected = head.ln() + k as f64 * std::f64::consts::LN_10;
        let got = log_of_bigcount(&b).unwrap().ln();
        assert!(
            (got - expected).abs() <= 1e-14 * expected,
            "{got} vs {expected}"
        );
    }

    #[test]
    fn small_values_exact() {
        for v in [2u64, 3, 15, 4_213_597, u64::MAX] {
            let got = log_of_bigcount(&BigUint::from(v)).unwrap().ln();
            assert!((got - (v as f64).ln()).abs() <= 1e-15 * got.abs().max(1.0));
        }
    }

    #[test]
    fn arithmetic() {
        let a = LogValue(3.0);
        let b = LogValue(1.0);
        assert_eq!((a * b).ln(), 4.0);
        assert_eq!((a / b).ln(), 2.0);
        assert!((LogValue(1e-10).relative_error_to(LogValue::ONE) - 1e-10).abs() < 1e-20);
    }
}
