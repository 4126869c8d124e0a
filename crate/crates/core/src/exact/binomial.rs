//! Exact binomial coefficients.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::BigCount;

/// Rows kept by [`pascal_row`]; older rows are evicted wholesale past this.
const ROW_CACHE_LIMIT: usize = 64;

fn row_cache() -> &'static RwLock<HashMap<usize, Arc<[BigCount]>>> {
    static ROWS: OnceLock<RwLock<HashMap<usize, Arc<[BigCount]>>>> = OnceLock::new();
    ROWS.get_or_init(Default::default)
}

/// Row `n` of Pascal's triangle, shared through a process-wide cache.
pub fn pascal_row(n: usize) -> Arc<[BigCount]> {
    if let Some(row) = row_cache().read().unwrap().get(&n) {
        return Arc::clone(row);
    }
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigUint::one();
    for k in 0..=n {
        row.push(c.clone());
        if k < n {
            c = c * (n - k) / (k + 1);
        }
    }
    let row: Arc<[BigCount]> = row.into();
    let mut cache = row_cache().write().unwrap();
    if cache.len() >= ROW_CACHE_LIMIT {
        cache.clear();
    }
    Arc::clone(cache.entry(n).or_insert(row))
}

/// `C(n, k)`, with the convention `C(n, k) = 0` for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigUint::zero();
    }
    pascal_row(n)[k].clone()
}

/// One row of Pascal's triangle, advanced in place.
///
/// The recurrences only ever need row `n - 1` (or `n`) while producing the
/// `n`-th term, so this keeps O(n) big integers alive instead of the triangle.
#[derive(Clone, Debug)]
pub struct PascalRow {
    n: usize,
    row: Vec<BigCount>,
}

impl PascalRow {
    pub fn new() -> Self {
        Self {
            n: 0,
            row: vec![BigUint::one()],
        }
    }

    pub fn index(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[BigCount] {
        &self.row
    }

    /// Moves from row `n` to row `n + 1`.
    pub fn advance(&mut self) {
        self.row.push(BigUint::one());
        for k in (1..=self.n).rev() {
            let (lo, hi) = self.row.split_at_mut(k);
            hi[0] += &lo[k - 1];
        }
        self.n += 1;
    }
}

impl Default for PascalRow {
    fn default() -> Self {
        Self::new()
    }
}

impl std::ops::Index<usize> for PascalRow {
    type Output = BigCount;

    fn index(&self, k: usize) -> &BigCount {
        &self.row[k]
    }
}
