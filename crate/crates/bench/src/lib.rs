// Benchmarks live in benches/; see `cargo bench`.
