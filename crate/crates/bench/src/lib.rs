//! Criterion benchmarks for the toric engine; see `benches/engine.rs`.
