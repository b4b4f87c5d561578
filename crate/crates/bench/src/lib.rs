//! Shared fixtures for the criterion benchmarks in `benches/`.

/// Triangle size used by the route benchmarks; large enough that the
/// back-substitution and series costs dominate setup noise.
pub const TRIANGLE_N_MAX: usize = 16;

/// Truncation order for the series benchmarks, matching the CLI default.
pub const SERIES_ORDER: usize = 24;
