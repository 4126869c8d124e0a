//! Set partitions whose block sizes avoid a given set.
//!
//! * [`exact`]: big-integer counts `B_n`, `B_{n,S}`, the `m`-rough triangle,
//!   and practical / impractical counts.
//! * [`oracle`]: exhaustive enumeration used as independent ground truth.
//! * [`asymptotics`]: the saddle point `r e^r = n` and log-space evaluation
//!   of the closed-form estimates.
//! * [`tables`]: exact-vs-estimate proportion tables.

pub mod asymptotics;
mod block_set;
mod error;
pub mod exact;
pub mod oracle;
pub mod tables;

pub use block_set::{BlockSizeSet, MAX_BLOCK_SIZE};
pub use error::{Error, Result};

/// An exact, nonnegative partition count.
pub type BigCount = num_bigint::BigUint;

pub use asymptotics::{lambert_w, log_of_bigcount, GapConstants, LogValue, SaddlePoint};
pub use exact::{
    bell, count_avoiding, practical_counts, rough_table, PracticalCounts, RoughTable, TableCache,
};
pub use tables::{build_table, TableKind, TableRow};
