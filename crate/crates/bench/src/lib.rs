//! Criterion benchmarks for `dynsym`; see `benches/`.
