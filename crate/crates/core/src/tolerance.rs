//! Numerical tolerances shared by every module.
//!
//! Dimensions stay below ~10^4, so all of these sit well above accumulated
//! double-precision error and well below the smallest spectral gap of the
//! constructed families, 1/(D(D-1)).

/// Entrywise bound on |M - M^dagger| for a matrix to count as Hermitian.
pub const HERMITIAN: f64 = 1e-12;

/// Eigenvalues above `-PSD` count as nonnegative.
pub const PSD: f64 = 1e-10;

/// Schmidt coefficients above this count towards the rank.
pub const RANK: f64 = 1e-10;

/// Allowed deviation of a density matrix trace from one.
pub const TRACE: f64 = 1e-12;

/// Allowed deviation of a pure vector norm from one.
pub const NORM: f64 = 1e-12;

/// A witness value must lie below `-CERTIFICATION_MARGIN` to certify.
pub const CERTIFICATION_MARGIN: f64 = 1e-10;

/// Slack on radius comparisons against the ball radius (boundary included).
pub const BALL_SLACK: f64 = 1e-12;

/// Re-verified witness values must agree to this absolute difference.
pub const REVERIFY: f64 = 1e-12;

/// Largest n-copy Hilbert space dimension the witness search accepts.
pub const NCOPY_DIMENSION_GUARD: usize = 10_000;
