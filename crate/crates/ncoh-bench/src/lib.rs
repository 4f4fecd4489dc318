//! Benchmark-only crate; see `benches/cohomology.rs`.
