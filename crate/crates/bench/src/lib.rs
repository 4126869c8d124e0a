//! Criterion benchmarks for `blockfree-core`; see `benches/`.
