//! Benchmark-only crate; the code lives in `benches/hotpaths.rs`.
