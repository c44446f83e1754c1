//! Criterion benchmarks for superpair; see `benches/`.
