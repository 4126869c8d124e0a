use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("block size {0} is out of range (allowed 1..={max})", max = crate::MAX_BLOCK_SIZE)]
    BlockSizeOutOfRange(u64),

    #[error("malformed block-size set {input:?}: {reason}")]
    BlockSetSyntax { input: String, reason: String },

    #[error("exhaustive enumeration is capped at n = {cap}, got n = {n}")]
    EnumerationCap { n: usize, cap: usize },

    #[error(
        "set is not admissible for n = {n}: block size {element} lies in [{lo:.6}, {hi:.6}] = [delta1*r, delta2*r]"
    )]
    Inadmissible {
        n: u64,
        element: usize,
        lo: f64,
        hi: f64,
    },

    #[error("gap constants must satisfy 0 < delta1 < {eta1:.7} and delta2 > {eta2:.7}, got ({delta1}, {delta2})")]
    GapConstants {
        delta1: f64,
        delta2: f64,
        eta1: f64,
        eta2: f64,
    },

    #[error("alpha series term for k = {k} overflows (log-magnitude {log_term:.1} > 700)")]
    AlphaOverflow { k: usize, log_term: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("root solver failed to converge: {0}")]
    NonConvergence(String),

    #[error("impractical count mismatch at n = {n}: the two computations disagree")]
    ImpracticalMismatch { n: usize },

    #[error("cache i/o on {path}: {source}")]
    CacheIo {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
