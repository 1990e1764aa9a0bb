//! Central numerical tolerances.
//!
//! Every threshold used by the kernels lives here so that a run is
//! reproducible from a single set of knobs.

/// Relative eigenvalue cutoff for pseudoinverse rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// How negative an eigenvalue may be before a matrix is rejected as not PSD.
pub const TOL_PSD: f64 = 1e-8;

/// Jacobi sweep convergence: off-diagonal Frobenius norm relative to ‖M‖_F.
pub const EIGEN_CONV: f64 = 1e-12;

/// Cap on Jacobi sweeps before reporting non-convergence.
pub const EIGEN_MAX_SWEEPS: usize = 100;

/// Primal feasibility tolerance for LP solutions.
pub const LP_FEAS: f64 = 1e-9;

/// Relative primal/dual objective agreement for LP solutions.
pub const LP_GAP: f64 = 1e-8;

/// Membership tests against polytopes (STAB/QSTAB) and spectral corners.
pub const MEMBERSHIP: f64 = 1e-8;

/// Default relative duality-gap target for SDP solves.
pub const SDP_GAP: f64 = 1e-7;

/// Relative duality-gap target for the Luz CQP.
pub const LUZ_GAP: f64 = 1e-6;

/// A generalized adjacency matrix with −λ_min below this is treated as zero.
pub const TILDE_ZERO: f64 = 1e-12;

/// Default vertex-count guard; CLI may override via SPECTRAL_GAUGE_MAX_N.
pub const DEFAULT_MAX_N: usize = 64;

/// Guard for full stable-set enumeration.
pub const ENUM_MAX_N: usize = 30;

/// Guard for LP-backed oracles (χ_f, membership) over enumerated stable sets.
pub const LP_ORACLE_MAX_N: usize = 20;
