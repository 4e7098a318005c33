//! Benchmark-only crate; see `benches/oracle.rs`.
