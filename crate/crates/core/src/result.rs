//! Common result carrier for bound computations.

use crate::linalg::SymMatrix;

/// A bound value; `+∞` is an explicit variant, never a float sentinel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Finite(f64),
    Infinite,
}

impl Value {
    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    /// The finite value; panics on `Infinite`.
    pub fn finite(&self) -> f64 {
        match self {
            Value::Finite(v) => *v,
            Value::Infinite => panic!("bound value is +inf"),
        }
    }

    /// Total order with `Infinite` above every finite value.
    pub fn le(&self, other: &Value, slack: f64) -> bool {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => *a <= *b + slack,
            (Value::Finite(_), Value::Infinite) => true,
            (Value::Infinite, Value::Finite(_)) => false,
            (Value::Infinite, Value::Infinite) => true,
        }
    }
}

/// Certificate attached to a bound value.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// Maximizing stable set (vertex indices).
    StableSet(Vec<usize>),
    /// Fractional cover: stable sets with positive multipliers, plus the
    /// dual point in QSTAB of the complement.
    FractionalCover {
        sets: Vec<Vec<usize>>,
        multipliers: Vec<f64>,
        dual: Vec<f64>,
    },
    /// Unit eigenvector attaining an extreme eigenvalue.
    Eigenvector(Vec<f64>),
    /// Primal/dual pair from an SDP solve.
    SdpPair { x: Vec<f64>, dual: SymMatrix },
    /// Primal point and dual vector from the Luz CQP.
    CqpPair { x: Vec<f64>, dual: Vec<f64> },
    /// Recession direction certifying an unbounded Luz CQP.
    RecessionDirection(Vec<f64>),
    /// Nonnegative Perron eigenvector.
    PerronVector(Vec<f64>),
    /// Edge weights of the best generalized adjacency matrix found.
    EdgeWeights(Vec<f64>),
    None,
}

/// Value plus certificate and solver diagnostics.
#[derive(Debug, Clone)]
pub struct BoundResult {
    pub value: Value,
    pub certificate: Certificate,
    /// Certified duality gap where available, 0.0 for closed forms.
    pub gap: f64,
    pub iterations: usize,
    /// Set when a search stopped on its evaluation budget.
    pub budget_exhausted: bool,
}

impl BoundResult {
    pub fn exact(value: f64, certificate: Certificate) -> Self {
        BoundResult {
            value: Value::Finite(value),
            certificate,
            gap: 0.0,
            iterations: 0,
            budget_exhausted: false,
        }
    }
}
