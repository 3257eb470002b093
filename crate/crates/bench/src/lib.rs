//! Criterion benchmarks for the exact invariant and degeneration routines; see `benches/`.
