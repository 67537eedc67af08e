//! Criterion benchmarks for the dpcodes library; see `benches/`.
