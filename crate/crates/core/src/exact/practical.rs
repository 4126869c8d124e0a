//! Practical and impractical set partitions.
//!
//! A partition of an `n`-set is practical when unions of its blocks reach
//! every size `1..=n`. Grouping the smallest blocks into the longest prefix
//! that is itself practical (say of total size `k`) leaves a `(k+1)`-rough
//! partition of the remaining `n - k` elements, so
//! `B_n = sum_k C(n,k) P_k B_{n-k,k+1}`, which is solved here for `P_n`.

use num_bigint::BigUint;
use num_traits::{CheckedSub, One, Zero};

use super::binomial::PascalRow;
use super::rough::RoughTable;
use crate::error::{Error, Result};
use crate::BigCount;

/// `P_n` and `I_n = B_n - P_n` for `0 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PracticalCounts {
    pub practical: Vec<BigCount>,
    pub impractical: Vec<BigCount>,
}

impl PracticalCounts {
    pub fn n_max(&self) -> usize {
        self.practical.len() - 1
    }
}

/// Computes `P_n` and `I_n` from a rough table covering `n_max`.
///
/// `I_n` is produced twice, once as `B_n - P_n` and once from the sum that
/// starts at the 1-rough term `B_{n,1}`; any disagreement is an error.
pub fn practical_counts_from(table: &RoughTable, n_max: usize) -> Result<PracticalCounts> {
    if n_max > table.n_max() {
        return Err(Error::InvalidArgument(format!(
            "rough table covers n <= {}, asked for {n_max}",
            table.n_max()
        )));
    }
    let mut practical = vec![BigUint::one()];
    let mut impractical = vec![BigUint::zero()];
    let mut pascal = PascalRow::new();
    for n in 1..=n_max {
        pascal.advance();
        let binom = pascal.as_slice();
        let bell = table.bell(n);

        let mut non_practical_part = BigUint::zero();
        for (k, p) in practical.iter().enumerate() {
            let rough = table.get(n - k, k + 1);
            if !rough.is_zero() {
                non_practical_part += &binom[k] * p * rough;
            }
        }
        let p_n = bell
            .checked_sub(&non_practical_part)
            .ok_or(Error::ImpracticalMismatch { n })?;
        let by_difference = bell - &p_n;

        let mut by_sum = table.get(n, 1).clone();
        for k in 1..=(n.saturating_sub(2) / 2) {
            by_sum += &binom[k] * &practical[k] * table.get(n - k, k + 1);
        }
        if by_sum != by_difference {
            return Err(Error::ImpracticalMismatch { n });
        }
        practical.push(p_n);
        impractical.push(by_difference);
    }
    Ok(PracticalCounts {
        practical,
        impractical,
    })
}

/// Convenience wrapper that builds the rough table itself (no cache).
pub fn practical_counts(n_max: usize) -> Result<PracticalCounts> {
    practical_counts_from(&RoughTable::compute(n_max), n_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        let pc = practical_counts(0).unwrap();
        assert_eq!(pc.practical, vec![BigUint::one()]);
        assert_eq!(pc.impractical, vec![BigUint::zero()]);
    }

    #[test]
    fn four_elements() {
        // Of the 15 partitions of a 4-set, the impractical ones are {4} (1),
        // {2,2} (3) and {1,3} (4).
        let pc = practical_counts(4).unwrap();
        assert_eq!(pc.impractical[4], BigUint::from(8u32));
        assert_eq!(pc.practical[4], BigUint::from(7u32));
        assert_eq!(pc.practical[1], BigUint::one());
        assert_eq!(pc.impractical[1], BigUint::zero());
        // {2}
        assert_eq!(pc.impractical[2], BigUint::one());
    }

    #[test]
    fn sums_to_bell_and_dominates_rough() {
        let t = RoughTable::compute(60);
        let pc = practical_counts_from(&t, 60).unwrap();
        for n in 0..=60 {
            assert_eq!(&pc.practical[n] + &pc.impractical[n], *t.bell(n));
            if n >= 1 {
                assert!(pc.impractical[n] >= *t.get(n, 1));
            }
        }
    }

    #[test]
    fn resubstituted_identity() {
        let t = RoughTable::compute(45);
        let pc = practical_counts_from(&t, 45).unwrap();
        let mut row = PascalRow::new();
        for n in 0..=45 {
            let total: BigUint = (0..=n)
                .map(|k| &row[k] * &pc.practical[k] * t.get(n - k, k + 1))
                .sum();
            assert_eq!(&total, t.bell(n), "n = {n}");
            row.advance();
        }
    }

    #[test]
    fn rejects_short_table() {
        let t = RoughTable::compute(5);
        assert!(practical_counts_from(&t, 6).is_err());
    }
}
