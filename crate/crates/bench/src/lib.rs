//! Criterion benchmarks for the counting and canonical-labeling kernels.
//! See `benches/kernels.rs`.
