//! Sets of forbidden block sizes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest block size accepted in an explicit list.
pub const MAX_BLOCK_SIZE: u64 = 1_000_000;

/// A finite set `S` of forbidden block sizes.
///
/// Either an explicit strictly ascending list of positive sizes, or the
/// interval `{1, ..., m}` (the `m`-rough case), which is never materialized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockSizeSet {
    repr: Repr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Explicit(Vec<usize>),
    /// `{1, ..., m}` with `m >= 1`.
    Interval(usize),
}

impl BlockSizeSet {
    /// The empty set: no restriction.
    pub fn empty() -> Self {
        Self {
            repr: Repr::Explicit(Vec::new()),
        }
    }

    /// `{1, ..., m}`. `m = 0` gives the empty set.
    pub fn interval(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self {
                repr: Repr::Interval(m),
            }
        }
    }

    /// Builds an explicit set; duplicates are merged, order is irrelevant.
    pub fn from_sizes<I>(sizes: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        let mut v = Vec::new();
        for s in sizes {
            if s == 0 || s > MAX_BLOCK_SIZE {
                return Err(Error::BlockSizeOutOfRange(s));
            }
            v.push(s as usize);
        }
        v.sort_unstable();
        v.dedup();
        Ok(Self {
            repr: Repr::Explicit(v),
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(&self.repr, Repr::Explicit(v) if v.is_empty())
    }

    pub fn contains(&self, k: usize) -> bool {
        match &self.repr {
            Repr::Explicit(v) => v.binary_search(&k).is_ok(),
            Repr::Interval(m) => (1..=*m).contains(&k),
        }
    }

    pub fn max(&self) -> Option<usize> {
        match &self.repr {
            Repr::Explicit(v) => v.last().copied(),
            Repr::Interval(m) => Some(*m),
        }
    }

    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Explicit(v) => v.len(),
            Repr::Interval(m) => *m,
        }
    }

    /// `Some(m)` when the set is stored as `{1, ..., m}`.
    pub fn interval_form(&self) -> Option<usize> {
        match self.repr {
            Repr::Interval(m) => Some(m),
            Repr::Explicit(_) => None,
        }
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> Box<dyn Iterator<Item = usize> + '_> {
        match &self.repr {
            Repr::Explicit(v) => Box::new(v.iter().copied()),
            Repr::Interval(m) => Box::new(1..=*m),
        }
    }

    /// Smallest element lying in the closed real interval `[lo, hi]`.
    pub fn first_in_range(&self, lo: f64, hi: f64) -> Option<usize> {
        if lo.is_nan() || hi.is_nan() || lo > hi {
            return None;
        }
        let start = lo.max(1.0).ceil();
        match &self.repr {
            Repr::Interval(m) => {
                let k = start as usize;
                (start <= hi && k <= *m).then_some(k)
            }
            Repr::Explicit(v) => {
                let idx = v.partition_point(|&k| (k as f64) < start);
                v.get(idx).copied().filter(|&k| k as f64 <= hi)
            }
        }
    }
}

impl Default for BlockSizeSet {
    fn default() -> Self {
        Self::empty()
    }
}

impl fmt::Display for BlockSizeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Interval(m) => write!(f, "1..{m}"),
            Repr::Explicit(v) if v.is_empty() => f.write_str("empty"),
            Repr::Explicit(v) => {
                for (i, k) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{k}")?;
                }
                Ok(())
            }
        }
    }
}

/// Accepts `empty`, an interval `1..m`, or a comma list such as `1,3,7`.
impl FromStr for BlockSizeSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let syntax = |reason: &str| Error::BlockSetSyntax {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() || t.eq_ignore_ascii_case("empty") {
            return Ok(Self::empty());
        }
        if let Some((lo, hi)) = t.split_once("..") {
            if lo.trim() != "1" {
                return Err(syntax("intervals must start at 1"));
            }
            let m: u64 = hi
                .trim()
                .parse()
                .map_err(|_| syntax("interval bound is not a nonnegative integer"))?;
            if m > MAX_BLOCK_SIZE {
                return Err(Error::BlockSizeOutOfRange(m));
            }
            return Ok(Self::interval(m as usize));
        }
        let sizes = t
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| syntax("expected a comma-separated list of positive integers"))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_sizes(sizes)
    }
}
