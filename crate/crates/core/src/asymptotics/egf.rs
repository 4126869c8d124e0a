//! Taylor coefficients of `exp(e^z - 1 - alpha_S(z))` in exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::{BigCount, BlockSizeSet};

/// Largest degree handled by [`egf_coefficients`].
pub const EGF_CAP: usize = 60;

/// Coefficients `g_0..=g_{n_max}` of `G(z) = exp(E(z))` with
/// `E(z) = sum_{k >= 1, k not in S} z^k / k!`.
///
/// From `G' = E' G`: `n g_n = sum_{k=1}^{n} k e_k g_{n-k}`.
pub fn egf_coefficients(n_max: usize, forbidden: &BlockSizeSet) -> Result<Vec<BigRational>> {
    if n_max > EGF_CAP {
        return Err(Error::InvalidArgument(format!(
            "egf coefficients are capped at degree {EGF_CAP}, got {n_max}"
        )));
    }
    // k e_k = 1 / (k-1)! for allowed k, else 0.
    let mut inv_fact = BigRational::one();
    let mut weights = vec![BigRational::zero()];
    for k in 1..=n_max {
        if k > 1 {
            inv_fact /= BigRational::from_integer(BigInt::from(k - 1));
        }
        weights.push(if forbidden.contains(k) {
            BigRational::zero()
        } else {
            inv_fact.clone()
        });
    }
    let mut g = vec![BigRational::one()];
    for n in 1..=n_max {
        let mut acc = BigRational::zero();
        for k in 1..=n {
            if !weights[k].is_zero() && !g[n - k].is_zero() {
                acc += &weights[k] * &g[n - k];
            }
        }
        g.push(acc / BigRational::from_integer(BigInt::from(n)));
    }
    Ok(g)
}

/// `n! g_n`, which must be an integer when `g_n` is an egf coefficient of a count.
pub fn scale_by_factorial(n: usize, coefficient: &BigRational) -> BigRational {
    let f: BigUint = (1..=n).map(BigUint::from).product();
    coefficient * BigRational::from_integer(BigInt::from(f))
}

/// `n! g_n` as a count, or `None` if it is not a nonnegative integer.
pub fn count_from_coefficient(n: usize, coefficient: &BigRational) -> Option<BigCount> {
    let scaled = scale_by_factorial(n, coefficient);
    if scaled.is_integer() {
        scaled.to_integer().to_biguint()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::count_avoiding_sequence;

    #[test]
    fn bell_three() {
        let g = egf_coefficients(3, &BlockSizeSet::empty()).unwrap();
        assert_eq!(g[0], BigRational::one());
        assert_eq!(g[3], BigRational::new(BigInt::from(5), BigInt::from(6)));
    }

    #[test]
    fn constant_term_is_one() {
        for s in ["empty", "1", "1..5", "2,3"] {
            let g = egf_coefficients(5, &s.parse().unwrap()).unwrap();
            assert!(g[0].is_one());
        }
    }

    #[test]
    fn matches_recurrence_for_rough_pairs() {
        let s = BlockSizeSet::interval(2);
        let g = egf_coefficients(30, &s).unwrap();
        let counts = count_avoiding_sequence(30, &s);
        for n in 0..=30 {
            let scaled = scale_by_factorial(n, &g[n]);
            assert!(scaled.is_integer());
            assert_eq!(
                scaled,
                BigRational::from_integer(BigInt::from(counts[n].clone()))
            );
        }
    }

    #[test]
    fn non_integers_rejected() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(count_from_coefficient(1, &half), None);
        assert_eq!(count_from_coefficient(2, &half), Some(BigUint::from(1u32)));
    }

    #[test]
    fn cap_enforced() {
        assert!(egf_coefficients(61, &BlockSizeSet::empty()).is_err());
        assert_eq!(
            egf_coefficients(60, &BlockSizeSet::empty()).unwrap().len(),
            61
        );
    }
}
