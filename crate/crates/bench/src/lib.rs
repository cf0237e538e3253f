//! Criterion benchmarks for the `spinrep` kernels; see `benches/kernels.rs`.
//!
//! Run with `cargo bench -p spinrep-bench`.
