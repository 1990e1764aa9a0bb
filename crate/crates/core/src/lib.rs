//! Spectral and semidefinite bounds for weighted graph parameters.
//!
//! This crate computes a family of upper bounds on the weighted stability
//! number α(G,w) and lower bounds on the weighted fractional chromatic
//! number χ_f(G,w), all indexed by a *generalized adjacency matrix* A of
//! the graph (any symmetric matrix supported on the edges):
//!
//! * the Hoffman bound `H(A,w) = λ_max(W^{1/2}(I+Ã)W^{1/2})`,
//!   a lower bound on χ_f,
//! * its gauge polar `Ξ(A,w)`, an SDP upper bound on α that recovers the
//!   Delsarte–Hoffman ratio bound `n/(1−k/τ)` on regular graphs,
//! * the Luz convex-quadratic bound `L(A,w)`, which equals Ξ whenever
//!   `A ≥ 0` entrywise and may be `+∞` otherwise,
//! * the Lovász theta function θ(G,w) and its variants θ′ and θ⁺, which
//!   are the optima of Ξ over all (resp. all nonnegative) A.
//!
//! Everything is backed by small, self-contained numerical kernels: a
//! cyclic Jacobi eigensolver, a dense tableau simplex, log-det barrier
//! solvers for the two SDP shapes that appear above, and a Kelley
//! cutting-plane engine that evaluates gauge polars from value/subgradient
//! oracles. Exact brute-force oracles (stable-set enumeration, α, χ_f)
//! provide ground truth at small scale, so every duality relation between
//! the bounds can be verified numerically.

pub mod bounds;
pub mod exact;
pub mod gauge;
pub mod graph;
pub mod linalg;
pub mod result;
pub mod sdp;
pub mod simplex;
pub mod tol;

pub use graph::{GeneralizedAdjacency, Graph, WeightVector};
pub use linalg::SymMatrix;
pub use result::{BoundResult, Certificate, Value};
