//! The triangle of `m`-rough counts `B_{j,m}` and its on-disk cache.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::binomial::PascalRow;
use crate::error::{Error, Result};
use crate::BigCount;

/// `B_{j,m}` for `0 <= m <= j <= n_max`: partitions of a `j`-set whose
/// blocks all have more than `m` elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoughTable {
    rows: Vec<Vec<BigCount>>,
    one: BigCount,
    zero: BigCount,
}

impl RoughTable {
    /// Builds the table bottom-up.
    pub fn compute(n_max: usize) -> Self {
        let mut table = Self::from_rows(vec![vec![BigUint::one()]]);
        table.extend_to(n_max);
        table
    }

    fn from_rows(rows: Vec<Vec<BigCount>>) -> Self {
        Self {
            rows,
            one: BigUint::one(),
            zero: BigUint::zero(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// Appends rows until the table covers `n_max`. Existing rows are kept.
    pub fn extend_to(&mut self, n_max: usize) {
        if n_max <= self.n_max() {
            return;
        }
        let mut pascal = PascalRow::new();
        while pascal.index() + 1 < self.rows.len() {
            pascal.advance();
        }
        for j in self.rows.len()..=n_max {
            // pascal holds C(j-1, .)
            let rows = &self.rows;
            let binom = pascal.as_slice();
            let row: Vec<BigCount> = (0..=j)
                .into_par_iter()
                .map(|m| rough_entry(rows, binom, j, m))
                .collect();
            self.rows.push(row);
            pascal.advance();
        }
    }

    /// Drops rows above `n_max`.
    pub fn truncate(&mut self, n_max: usize) {
        self.rows.truncate(n_max + 1);
    }

    /// `B_{j,m}` for any `m`. Entries with `m > j` are `1` at `j = 0`, else `0`.
    pub fn get(&self, j: usize, m: usize) -> &BigCount {
        let row = &self.rows[j];
        match row.get(m) {
            Some(v) => v,
            None if j == 0 => &self.one,
            None => &self.zero,
        }
    }

    /// `B_j`.
    pub fn bell(&self, j: usize) -> &BigCount {
        self.get(j, 0)
    }

    pub fn row(&self, j: usize) -> &[BigCount] {
        &self.rows[j]
    }

    /// Checks the structural invariants of every stored entry.
    pub fn check_invariants(&self) -> bool {
        self.rows.iter().enumerate().all(|(j, row)| {
            row.len() == j + 1
                && row.iter().enumerate().all(|(m, v)| {
                    if j == 0 {
                        v.is_one()
                    } else if j <= m {
                        v.is_zero()
                    } else if j <= 2 * m + 1 {
                        v.is_one()
                    } else {
                        !v.is_zero()
                    }
                })
        })
    }
}

fn rough_entry(rows: &[Vec<BigCount>], binom: &[BigCount], j: usize, m: usize) -> BigCount {
    if j == 0 {
        return BigUint::one();
    }
    if j <= m {
        return BigUint::zero();
    }
    if j <= 2 * m + 1 {
        return BigUint::one();
    }
    // The block holding the first element has j - k > m elements; the
    // remaining k elements form an m-rough partition, so k = 0 or k > m.
    let mut total = binom[0].clone();
    for k in (m + 1)..(j - m) {
        total += &binom[k] * &rows[k][m];
    }
    total
}

/// Cache-file header magic.
const MAGIC: &str = "# blockfree rough-table";
const FORMAT_VERSION: u32 = 1;
const FILE_NAME: &str = "rough-table.txt";

/// Summary of a cache file, for inspection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheInfo {
    pub path: PathBuf,
    pub n_max: usize,
    pub bytes: u64,
}

/// A directory holding the persisted rough table.
///
/// File layout: one header line
/// `# blockfree rough-table v1 n_max=<N> sha256=<hex>` followed by the
/// entries `B_{j,m}` as decimal integers, one per line, in row-major order
/// (`j = 0..=N`, `m = 0..=j`). The checksum covers every byte after the header.
#[derive(Clone, Debug)]
pub struct TableCache {
    dir: PathBuf,
}

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_path(&self) -> PathBuf {
        self.dir.join(FILE_NAME)
    }

    fn io_err(&self, source: std::io::Error) -> Error {
        Error::CacheIo {
            path: self.file_path(),
            source,
        }
    }

    /// Reads the cached table. `Ok(None)` when there is no file;
    /// `Err(reason)` when the file exists but is unusable.
    pub fn load(&self) -> std::result::Result<Option<RoughTable>, String> {
        let text = match fs::read_to_string(self.file_path()) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.to_string()),
        };
        parse_cache(&text).map(Some)
    }

    /// Header of the cache file, if one is present and readable.
    pub fn inspect(&self) -> Result<Option<CacheInfo>> {
        let path = self.file_path();
        let meta = match fs::metadata(&path) {
            Ok(m) => m,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(self.io_err(e)),
        };
        let text = fs::read_to_string(&path).map_err(|e| self.io_err(e))?;
        let n_max = text
            .lines()
            .next()
            .and_then(|h| parse_header(h).ok())
            .map(|(n, _)| n);
        Ok(n_max.map(|n_max| CacheInfo {
            path,
            n_max,
            bytes: meta.len(),
        }))
    }

    /// Writes the table atomically (temp file + rename).
    pub fn store(&self, table: &RoughTable) -> Result<()> {
        fs::create_dir_all(&self.dir).map_err(|e| self.io_err(e))?;
        let text = render_cache(table);
        let tmp = self
            .dir
            .join(format!("{FILE_NAME}.tmp{}", std::process::id()));
        let write = || -> std::io::Result<()> {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
            fs::rename(&tmp, self.file_path())
        };
        write().map_err(|e| self.io_err(e))
    }

    /// Removes the cache file. Returns whether one existed.
    pub fn clear(&self) -> Result<bool> {
        match fs::remove_file(self.file_path()) {
            Ok(()) => Ok(true),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(false),
            Err(e) => Err(self.io_err(e)),
        }
    }
}

fn render_cache(table: &RoughTable) -> String {
    let mut body = String::new();
    for row in &table.rows {
        for v in row {
            writeln!(body, "{v}").unwrap();
        }
    }
    let digest = hex_digest(body.as_bytes());
    format!(
        "{MAGIC} v{FORMAT_VERSION} n_max={} sha256={digest}\n{body}",
        table.n_max()
    )
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .fold(String::with_capacity(64), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

fn parse_header(line: &str) -> std::result::Result<(usize, String), String> {
    let rest = line
        .strip_prefix(MAGIC)
        .ok_or_else(|| "missing header".to_string())?;
    let mut fields = rest.split_whitespace();
    let version = fields.next().unwrap_or_default();
    if version != format!("v{FORMAT_VERSION}") {
        return Err(format!("unsupported format version {version:?}"));
    }
    let n_max = fields
        .next()
        .and_then(|f| f.strip_prefix("n_max="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| "bad n_max field".to_string())?;
    let digest = fields
        .next()
        .and_then(|f| f.strip_prefix("sha256="))
        .ok_or_else(|| "bad sha256 field".to_string())?;
    Ok((n_max, digest.to_string()))
}

fn parse_cache(text: &str) -> std::result::Result<RoughTable, String> {
    let (header, body) = text
        .split_once('\n')
        .ok_or_else(|| "truncated file".to_string())?;
    let (n_max, digest) = parse_header(header)?;
    if hex_digest(body.as_bytes()) != digest {
        return Err("checksum mismatch".into());
    }
    let mut values = body.lines();
    let mut rows = Vec::with_capacity(n_max + 1);
    for j in 0..=n_max {
        let row = (0..=j)
            .map(|_| {
                values
                    .next()
                    .ok_or_else(|| "too few entries".to_string())?
                    .parse::<BigUint>()
                    .map_err(|e| e.to_string())
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if values.next().is_some() {
        return Err("trailing entries".into());
    }
    let table = RoughTable::from_rows(rows);
    if !table.check_invariants() {
        return Err("entries violate the rough-table invariants".into());
    }
    Ok(table)
}

/// The rough table up to `n_max`, reusing and refreshing the cache if given.
///
/// A cached table that is too small is extended; an unreadable or corrupt
/// cache is recomputed and overwritten with a warning.
pub fn rough_table(n_max: usize, cache: Option<&TableCache>) -> Result<RoughTable> {
    let Some(cache) = cache else {
        return Ok(RoughTable::compute(n_max));
    };
    let cached = match cache.load() {
        Ok(t) => t,
        Err(reason) => {
            log::warn!(
                "ignoring rough-table cache at {}: {reason}; recomputing",
                cache.file_path().display()
            );
            None
        }
    };
    match cached {
        Some(mut table) if table.n_max() >= n_max => {
            table.truncate(n_max);
            Ok(table)
        }
        other => {
            let mut table = other.unwrap_or_else(|| RoughTable::compute(0));
            table.extend_to(n_max);
            cache.store(&table)?;
            Ok(table)
        }
    }
}
