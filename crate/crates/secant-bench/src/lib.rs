//! Shared sizing for the criterion benchmarks; see `benches/`.

/// Index bounds the route benchmarks sweep to.
pub const ROUTE_SIZES: [usize; 3] = [50, 100, 200];

/// Row bounds for the table-construction benchmarks.
pub const TABLE_SIZES: [usize; 2] = [60, 120];
