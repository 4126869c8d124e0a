//! Proportion tables comparing exact counts with their saddle-point estimates.
//!
//! Rows are taken at `n = 4, 16, 64, ...` and every printed cell is rounded
//! to a fixed precision, so rendered tables are reproducible byte for byte.

use std::fmt;

use crate::asymptotics::{alpha_eval, lambert_w, log_of_bigcount, ratio_estimates};
use crate::error::{Error, Result};
use crate::exact::{
    bell_sequence, count_avoiding_sequence, practical_counts_from, rough_table, TableCache,
};
use crate::BlockSizeSet;

/// The three proportion tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    /// `B_{n,1} / B_n` against `exp(-r)`.
    NoSingletons,
    /// `B_{n,2} / B_n` against `exp(-r - r^2/2)`, plus the error scale `(1+r)^2 e^{-r}`.
    NoSmallBlocks,
    /// `I_n / B_n` against `r / n`.
    Impractical,
}

impl TableKind {
    pub fn from_number(which: u8) -> Option<Self> {
        match which {
            1 => Some(Self::NoSingletons),
            2 => Some(Self::NoSmallBlocks),
            3 => Some(Self::Impractical),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Self::NoSingletons => 1,
            Self::NoSmallBlocks => 2,
            Self::Impractical => 3,
        }
    }

    pub fn title(self) -> &'static str {
        match self {
            Self::NoSingletons => "Proportion of 1-rough set partitions",
            Self::NoSmallBlocks => "Proportion of 2-rough set partitions",
            Self::Impractical => "Proportion of impractical set partitions",
        }
    }

    pub fn headers(self) -> &'static [&'static str] {
        match self {
            Self::NoSingletons => &["n", "B_{n,1}/B_n", "exp(-r)", "rel_error"],
            Self::NoSmallBlocks => &[
                "n",
                "B_{n,2}/B_n",
                "exp(-r-r^2/2)",
                "rel_error",
                "(1+r)^2 e^{-r}",
            ],
            Self::Impractical => &["n", "I_n/B_n", "r/n", "rel_error"],
        }
    }

    /// Largest exponent built without opting into slow runs.
    pub fn default_max_exponent(self) -> u32 {
        match self {
            Self::NoSingletons | Self::NoSmallBlocks => 10,
            Self::Impractical => 8,
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "table {}", self.number())
    }
}

/// One row: exact proportion, its approximation, and
/// `approximation / exact - 1` (computed from logs).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TableRow {
    pub n: u64,
    pub exact_ratio: f64,
    pub approximation: f64,
    pub relative_error: f64,
    pub extra: Option<f64>,
}

impl TableRow {
    /// Cells at the table's print precision: six decimals for tables 1 and
    /// 3; for table 2 four significant digits in scientific notation for the
    /// ratios and four decimals for the rest.
    pub fn cells(&self, kind: TableKind) -> Vec<String> {
        let mut out = vec![self.n.to_string()];
        match kind {
            TableKind::NoSingletons | TableKind::Impractical => {
                out.push(format!("{:.6}", self.exact_ratio));
                out.push(format!("{:.6}", self.approximation));
                out.push(format!("{:.6}", self.relative_error));
            }
            TableKind::NoSmallBlocks => {
                out.push(format!("{:.3e}", self.exact_ratio));
                out.push(format!("{:.3e}", self.approximation));
                out.push(format!("{:.4}", self.relative_error));
                if let Some(x) = self.extra {
                    out.push(format!("{x:.4}"));
                }
            }
        }
        out
    }
}

/// `[2, 4, ..]` up to `max_exponent`.
pub fn even_exponents(max_exponent: u32) -> Vec<u32> {
    (2..=max_exponent).step_by(2).collect()
}

fn sizes_for(max_exponent: u32) -> Result<Vec<u64>> {
    if !(2..=40).contains(&max_exponent) {
        return Err(Error::InvalidArgument(format!(
            "table exponent must lie in 2..=40, got {max_exponent}"
        )));
    }
    Ok(even_exponents(max_exponent)
        .into_iter()
        .map(|e| 1u64 << e)
        .collect())
}

/// Rows for `B_{n,m} / B_n` with `S = {1..m}`.
pub fn rough_rows(m: usize, max_exponent: u32) -> Result<Vec<TableRow>> {
    let sizes = sizes_for(max_exponent)?;
    let n_max = *sizes.last().unwrap() as usize;
    let forbidden = BlockSizeSet::interval(m);
    let bells = bell_sequence(n_max);
    let rough = count_avoiding_sequence(n_max, &forbidden);
    sizes
        .into_iter()
        .map(|n| {
            let i = n as usize;
            let ln_exact = log_of_bigcount(&rough[i])?.ln() - log_of_bigcount(&bells[i])?.ln();
            let r = lambert_w(n)?.r;
            let ln_approx = -alpha_eval(&forbidden, r, 0)?;
            let est = ratio_estimates(n, &forbidden)?;
            Ok(TableRow {
                n,
                exact_ratio: ln_exact.exp(),
                approximation: ln_approx.exp(),
                relative_error: (ln_approx - ln_exact).exp_m1(),
                extra: (m >= 2).then_some(est.error_term),
            })
        })
        .collect()
}

/// Rows for `I_n / B_n`, reading and refreshing the rough-table cache.
pub fn impractical_rows(max_exponent: u32, cache: Option<&TableCache>) -> Result<Vec<TableRow>> {
    let sizes = sizes_for(max_exponent)?;
    let n_max = *sizes.last().unwrap() as usize;
    let table = rough_table(n_max, cache)?;
    let counts = practical_counts_from(&table, n_max)?;
    sizes
        .into_iter()
        .map(|n| {
            let i = n as usize;
            let ln_exact = log_of_bigcount(&counts.impractical[i])?.ln()
                - log_of_bigcount(table.bell(i))?.ln();
            let approx = lambert_w(n)?.exp_neg_r();
            Ok(TableRow {
                n,
                exact_ratio: ln_exact.exp(),
                approximation: approx,
                relative_error: (approx.ln() - ln_exact).exp_m1(),
                extra: None,
            })
        })
        .collect()
}

pub fn build_table(
    kind: TableKind,
    max_exponent: u32,
    cache: Option<&TableCache>,
) -> Result<Vec<TableRow>> {
    match kind {
        TableKind::NoSingletons => rough_rows(1, max_exponent),
        TableKind::NoSmallBlocks => rough_rows(2, max_exponent),
        TableKind::Impractical => impractical_rows(max_exponent, cache),
    }
}

/// Reference rows, as printed cells, for `n = 4, 16, ..., 16384` (table 3
/// stops at 1024). Rows past the default exponent cap are slow to rebuild.
pub mod golden {
    pub const NO_SINGLETONS: &[[&str; 4]] = &[
        ["4", "0.266667", "0.300542", "0.127032"],
        ["16", "0.116036", "0.128325", "0.105906"],
        ["64", "0.045716", "0.047583", "0.040834"],
        ["256", "0.015896", "0.016123", "0.014298"],
        ["1024", "0.005122", "0.005146", "0.004675"],
        ["4096", "0.001573", "0.001575", "0.001456"],
        ["16384", "0.000468", "0.000468", "0.000438"],
    ];

    pub const NO_SMALL_BLOCKS: &[[&str; 5]] = &[
        ["4", "6.667e-2", "1.459e-1", "1.1886", "1.4575"],
        ["16", "8.772e-3", "1.559e-2", "0.7776", "1.1962"],
        ["64", "3.185e-4", "4.610e-4", "0.4474", "0.7787"],
        ["256", "2.628e-6", "3.222e-6", "0.2257", "0.4239"],
        ["1024", "4.356e-9", "4.805e-9", "0.1033", "0.2023"],
        ["4096", "1.368e-12", "1.428e-12", "0.0438", "0.0875"],
        ["16384", "7.902e-17", "8.040e-17", "0.0175", "0.0352"],
    ];

    pub const IMPRACTICAL: &[[&str; 4]] = &[
        ["4", "0.533333", "0.300542", "-0.436484"],
        ["16", "0.141507", "0.128325", "-0.093156"],
        ["64", "0.046743", "0.047583", "0.017954"],
        ["256", "0.015907", "0.016123", "0.013594"],
        ["1024", "0.005122", "0.005146", "0.004670"],
    ];

    /// Reference cells for `kind`, one `Vec` per row.
    pub fn rows(kind: super::TableKind) -> Vec<Vec<&'static str>> {
        use super::TableKind::*;
        match kind {
            NoSingletons => NO_SINGLETONS.iter().map(|r| r.to_vec()).collect(),
            NoSmallBlocks => NO_SMALL_BLOCKS.iter().map(|r| r.to_vec()).collect(),
            Impractical => IMPRACTICAL.iter().map(|r| r.to_vec()).collect(),
        }
    }
}
