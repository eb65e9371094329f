//! Criterion benchmarks for pentagram-maps; see benches/maps.rs.
