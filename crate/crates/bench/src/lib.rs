//! Criterion benchmarks for btdist live under `benches/`.
