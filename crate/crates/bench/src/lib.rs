//! Criterion benchmarks for lattice construction, representation builds,
//! exact homology and induced maps. Run with `cargo bench -p matroid-rep-bench`.
