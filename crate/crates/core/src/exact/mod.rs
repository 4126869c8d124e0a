//! Exact big-integer counts.

pub mod binomial;
pub mod counts;
pub mod practical;
pub mod rough;

pub use binomial::{binomial, pascal_row, PascalRow};
pub use counts::{bell, bell_sequence, count_avoiding, count_avoiding_sequence};
pub use practical::{practical_counts, practical_counts_from, PracticalCounts};
pub use rough::{rough_table, CacheInfo, RoughTable, TableCache};
