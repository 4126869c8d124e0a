//! Counting partitions that avoid a set of block sizes.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::binomial::PascalRow;
use crate::{BigCount, BlockSizeSet};

/// `B_{k,S}` for every `0 <= k <= n_max`.
///
/// Conditions on the block containing the first element: if it has size
/// `n - k` (not in `S`), the other `k` elements can be chosen in `C(n-1, k)`
/// ways and partitioned in `B_{k,S}` ways.
pub fn count_avoiding_sequence(n_max: usize, forbidden: &BlockSizeSet) -> Vec<BigCount> {
    let mut counts: Vec<BigCount> = Vec::with_capacity(n_max + 1);
    counts.push(BigUint::one());
    let mut row = PascalRow::new();
    for n in 1..=n_max {
        // row holds C(n-1, .)
        let mut total = BigUint::zero();
        for (k, prev) in counts.iter().enumerate() {
            if !forbidden.contains(n - k) && !prev.is_zero() {
                total += &row[k] * prev;
            }
        }
        counts.push(total);
        row.advance();
    }
    counts
}

/// `B_{n,S}`: partitions of an `n`-set with no block size in `S`.
/// `B_{0,S} = 1` for every `S`.
pub fn count_avoiding(n: usize, forbidden: &BlockSizeSet) -> BigCount {
    count_avoiding_sequence(n, forbidden)
        .pop()
        .expect("sequence always holds n_max + 1 terms")
}

/// The Bell number `B_n`.
pub fn bell(n: usize) -> BigCount {
    count_avoiding(n, &BlockSizeSet::empty())
}

/// Bell numbers `B_0..=B_{n_max}`.
pub fn bell_sequence(n_max: usize) -> Vec<BigCount> {
    count_avoiding_sequence(n_max, &BlockSizeSet::empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(xs: &[u64]) -> BlockSizeSet {
        BlockSizeSet::from_sizes(xs.iter().copied()).unwrap()
    }

    #[test]
    fn bell_small() {
        let known = [
            1u32, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597,
        ];
        let seq = bell_sequence(12);
        for (n, &b) in known.iter().enumerate() {
            assert_eq!(seq[n], BigUint::from(b), "B_{n}");
            assert_eq!(bell(n), BigUint::from(b));
        }
    }

    #[test]
    fn rough_three() {
        assert_eq!(count_avoiding(3, &set(&[1])), BigUint::one());
        assert_eq!(
            count_avoiding(3, &BlockSizeSet::interval(2)),
            BigUint::one()
        );
        assert_eq!(count_avoiding(3, &set(&[1, 2])), BigUint::one());
    }

    #[test]
    fn zero_elements_always_one() {
        for s in [set(&[]), set(&[1]), BlockSizeSet::interval(9), set(&[4, 6])] {
            assert_eq!(count_avoiding(0, &s), BigUint::one());
        }
    }

    #[test]
    fn no_singletons_matches_known_sequence() {
        // OEIS A000296
        let known = [1u32, 0, 1, 1, 4, 11, 41, 162, 715, 3425, 17722];
        let seq = count_avoiding_sequence(10, &set(&[1]));
        for (n, &v) in known.iter().enumerate() {
            assert_eq!(seq[n], BigUint::from(v), "n = {n}");
        }
    }

    #[test]
    fn interval_and_explicit_agree() {
        let a = count_avoiding_sequence(40, &BlockSizeSet::interval(3));
        let b = count_avoiding_sequence(40, &set(&[1, 2, 3]));
        assert_eq!(a, b);
    }

    proptest! {
        #[test]
        fn monotone_under_inclusion(
            n in 0usize..=12,
            small in proptest::collection::btree_set(1u64..=12, 0..6),
            extra in proptest::collection::btree_set(1u64..=12, 0..6),
        ) {
            let sub = BlockSizeSet::from_sizes(small.iter().copied()).unwrap();
            let sup = BlockSizeSet::from_sizes(small.iter().chain(extra.iter()).copied()).unwrap();
            prop_assert!(count_avoiding(n, &sup) <= count_avoiding(n, &sub));
        }

        #[test]
        fn sizes_above_n_are_irrelevant(
            n in 0usize..=25,
            base in proptest::collection::btree_set(1u64..=25, 0..5),
            big in proptest::collection::btree_set(26u64..=200, 1..4),
        ) {
            let base_set = BlockSizeSet::from_sizes(base.iter().copied()).unwrap();
            let with_big = BlockSizeSet::from_sizes(base.iter().chain(big.iter()).copied()).unwrap();
            prop_assert_eq!(count_avoiding(n, &base_set), count_avoiding(n, &with_big));
        }
    }
}
