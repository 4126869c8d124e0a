//! Brute-force ground truth by exhaustive enumeration.
//!
//! Set partitions are walked as restricted growth strings in lexicographic
//! order; everything downstream looks only at block-size multisets.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::{BigCount, BlockSizeSet};

/// Largest `n` for which partitions are enumerated one by one.
pub const ENUMERATION_CAP: usize = 13;

/// Largest `n` for the shape-level census built from integer partitions.
pub const SHAPE_CENSUS_CAP: usize = 60;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::EnumerationCap { n, cap })
    } else {
        Ok(())
    }
}

/// Block sizes of a set partition, ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionShape {
    sizes: Vec<usize>,
}

impl PartitionShape {
    pub fn new(mut sizes: Vec<usize>) -> Result<Self> {
        if sizes.contains(&0) {
            return Err(Error::InvalidArgument(
                "block sizes must be positive".into(),
            ));
        }
        sizes.sort_unstable();
        Ok(Self { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of elements partitioned.
    pub fn n(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn avoids(&self, forbidden: &BlockSizeSet) -> bool {
        !self.sizes.iter().any(|&a| forbidden.contains(a))
    }

    /// Number of set partitions of an `n`-set with this shape:
    /// `n! / (prod a_i! * prod mult_j!)`.
    pub fn multiplicity(&self) -> BigCount {
        let factorial = |k: usize| -> BigUint { (1..=k).map(BigUint::from).product() };
        let mut denom = BigUint::one();
        let mut run = 0;
        for (i, &a) in self.sizes.iter().enumerate() {
            denom *= factorial(a);
            run += 1;
            if self.sizes.get(i + 1) != Some(&a) {
                denom *= factorial(run);
                run = 0;
            }
        }
        factorial(self.n()) / denom
    }
}

/// Practicality via the sorted-prefix criterion: with sizes
/// `a_1 <= ... <= a_l`, every `a_i <= 1 + a_1 + ... + a_{i-1}`.
pub fn is_practical_greedy(shape: &PartitionShape) -> bool {
    let mut reach = 0usize;
    for &a in shape.sizes() {
        if a > reach + 1 {
            return false;
        }
        reach += a;
    }
    true
}

/// Practicality from the definition: the subset sums of the block sizes are
/// exactly `{0, 1, ..., n}`.
pub fn is_practical_subset_sum(shape: &PartitionShape) -> bool {
    let n = shape.n();
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for &a in shape.sizes() {
        for s in (a..=n).rev() {
            if reachable[s - a] {
                reachable[s] = true;
            }
        }
    }
    reachable.into_iter().all(|r| r)
}

/// Restricted growth strings of length `n` in lexicographic order.
///
/// `codes[0] = 0` and `codes[i] <= 1 + max(codes[..i])`; element `i` sits in
/// block `codes[i]`.
#[derive(Clone, Debug)]
pub struct RestrictedGrowthStrings {
    codes: Vec<u8>,
    prefix_max: Vec<u8>,
    fresh: bool,
}

impl RestrictedGrowthStrings {
    pub fn new(n: usize) -> Result<Self> {
        check_cap(n, ENUMERATION_CAP)?;
        Ok(Self {
            codes: vec![0; n],
            prefix_max: vec![0; n],
            fresh: true,
        })
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    /// Steps to the next string; `false` once all have been visited.
    /// The first call positions on the all-zero string.
    pub fn advance(&mut self) -> bool {
        if self.fresh {
            self.fresh = false;
            return true;
        }
        let n = self.codes.len();
        for j in (1..n).rev() {
            if self.codes[j] <= self.prefix_max[j - 1] {
                self.codes[j] += 1;
                let top = self.prefix_max[j - 1].max(self.codes[j]);
                self.prefix_max[j] = top;
                for i in j + 1..n {
                    self.codes[i] = 0;
                    self.prefix_max[i] = top;
                }
                return true;
            }
        }
        false
    }

    fn block_sizes(&self, out: &mut [u8; ENUMERATION_CAP]) -> usize {
        out.fill(0);
        let mut blocks = 0;
        for &c in &self.codes {
            out[c as usize] += 1;
            blocks = blocks.max(c as usize + 1);
        }
        blocks
    }

    pub fn shape(&self) -> PartitionShape {
        let mut buf = [0u8; ENUMERATION_CAP];
        let blocks = self.block_sizes(&mut buf);
        let mut sizes: Vec<usize> = buf[..blocks].iter().map(|&s| s as usize).collect();
        sizes.sort_unstable();
        PartitionShape { sizes }
    }
}

/// Streams the shape of every set partition of an `n`-set, once each.
pub fn enumerate_partitions(n: usize) -> Result<impl Iterator<Item = PartitionShape>> {
    let mut rgs = RestrictedGrowthStrings::new(n)?;
    Ok(std::iter::from_fn(move || {
        rgs.advance().then(|| rgs.shape())
    }))
}

/// `B_{n,S}` by enumeration.
pub fn count_avoiding_bruteforce(n: usize, forbidden: &BlockSizeSet) -> Result<BigCount> {
    let mut rgs = RestrictedGrowthStrings::new(n)?;
    let mut buf = [0u8; ENUMERATION_CAP];
    let mut count = 0u64;
    while rgs.advance() {
        let blocks = rgs.block_sizes(&mut buf);
        if !buf[..blocks]
            .iter()
            .any(|&s| forbidden.contains(s as usize))
        {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// `P_n` by enumeration, testing each partition against the definition.
pub fn count_practical_bruteforce(n: usize) -> Result<BigCount> {
    Ok(BigUint::from(
        enumerate_partitions(n)?
            .filter(is_practical_subset_sum)
            .count(),
    ))
}

/// Partition counts grouped by shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeCensus {
    n: usize,
    counts: BTreeMap<PartitionShape, BigCount>,
}

impl ShapeCensus {
    /// Tallies shapes by streaming every partition (`n <= 13`).
    pub fn by_enumeration(n: usize) -> Result<Self> {
        let mut rgs = RestrictedGrowthStrings::new(n)?;
        let mut raw: BTreeMap<Vec<u8>, u64> = BTreeMap::new();
        let mut buf = [0u8; ENUMERATION_CAP];
        while rgs.advance() {
            let blocks = rgs.block_sizes(&mut buf);
            let mut key = buf[..blocks].to_vec();
            key.sort_unstable();
            *raw.entry(key).or_default() += 1;
        }
        let counts = raw
            .into_iter()
            .map(|(k, c)| {
                let shape = PartitionShape {
                    sizes: k.into_iter().map(usize::from).collect(),
                };
                (shape, BigUint::from(c))
            })
            .collect();
        Ok(Self { n, counts })
    }

    /// Walks integer partitions of `n` and weights each by its multiplicity.
    pub fn by_multiplicity(n: usize) -> Result<Self> {
        check_cap(n, SHAPE_CENSUS_CAP)?;
        let mut counts = BTreeMap::new();
        let mut parts = Vec::new();
        integer_partitions(n, 1, &mut parts, &mut |sizes| {
            let shape = PartitionShape {
                sizes: sizes.to_vec(),
            };
            let m = shape.multiplicity();
            counts.insert(shape, m);
        });
        Ok(Self { n, counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> impl Iterator<Item = (&PartitionShape, &BigCount)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigCount {
        self.counts.values().sum()
    }

    pub fn count_avoiding(&self, forbidden: &BlockSizeSet) -> BigCount {
        self.counts
            .iter()
            .filter(|(s, _)| s.avoids(forbidden))
            .map(|(_, c)| c)
            .sum()
    }

    pub fn count_practical(&self) -> BigCount {
        self.counts
            .iter()
            .filter(|(s, _)| is_practical_subset_sum(s))
            .map(|(_, c)| c)
            .sum()
    }
}

/// Integer partitions of `rest` with parts `>= min_part`, ascending.
fn integer_partitions(
    rest: usize,
    min_part: usize,
    parts: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if rest == 0 {
        visit(parts);
        return;
    }
    for a in min_part..=rest {
        if rest - a != 0 && rest - a < a {
            continue;
        }
        parts.push(a);
        integer_partitions(rest - a, a, parts, visit);
        parts.pop();
    }
}

/// Every shape (integer partition) of `n`, ascending sizes.
pub fn all_shapes(n: usize) -> Vec<PartitionShape> {
    let mut out = Vec::new();
    let mut parts = Vec::new();
    integer_partitions(n, 1, &mut parts, &mut |sizes| {
        out.push(PartitionShape {
            sizes: sizes.to_vec(),
        });
    });
    out
}
