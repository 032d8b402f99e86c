//! Criterion benchmarks for `lgp-core`; the benchmark sources live in `benches/`.
