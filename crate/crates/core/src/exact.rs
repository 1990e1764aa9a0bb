//! Brute-force ground truth at small scale: stable-set enumeration, the
//! weighted stability number α(G,w), the weighted fractional chromatic
//! number χ_f(G,w), and membership tests for STAB/QSTAB.
//!
//! χ_f is the covering LP over maximal stable sets; α is an exact
//! branch-and-bound over vertex bitsets. Both are the oracles every
//! relaxation in this crate is measured against.

use crate::graph::{Graph, WeightVector};
use crate::result::{BoundResult, Certificate};
use crate::simplex::{self, LinearProgram, LpStatus, Relation, Sense};
use crate::tol;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("graph order {n} exceeds the exact-oracle guard {guard}")]
    Capacity { n: usize, guard: usize },
    #[error("weight vector length {got} does not match n = {n}")]
    WeightLength { got: usize, n: usize },
    #[error("lp backend: {0}")]
    Lp(#[from] simplex::LpError),
    #[error("covering lp ended {0:?}")]
    UnexpectedLpStatus(LpStatus),
}

/// Stable sets of a graph as vertex bitsets, in ascending bitset order.
#[derive(Debug, Clone)]
pub struct StableSetFamily {
    n: usize,
    sets: Vec<u64>,
    maximal_only: bool,
}

impl StableSetFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn maximal_only(&self) -> bool {
        self.maximal_only
    }

    pub fn vertices(set: u64) -> Vec<usize> {
        (0..64).filter(|&v| set & (1 << v) != 0).collect()
    }

    pub fn incidence_vector(&self, set: u64) -> Vec<f64> {
        (0..self.n)
            .map(|v| if set & (1 << v) != 0 { 1.0 } else { 0.0 })
            .collect()
    }
}

fn guard(n: usize, limit: usize) -> Result<(), ExactError> {
    if n > limit {
        return Err(ExactError::Capacity { n, guard: limit });
    }
    Ok(())
}

fn check_weights(g: &Graph, w: &WeightVector) -> Result<(), ExactError> {
    if w.len() != g.n() {
        return Err(ExactError::WeightLength { got: w.len(), n: g.n() });
    }
    Ok(())
}

/// Enumerates all (or only maximal) stable sets; include/exclude recursion
/// pruned by adjacency masks.
pub fn enumerate_stable_sets(g: &Graph, maximal_only: bool) -> Result<StableSetFamily, ExactError> {
    guard(g.n(), tol::ENUM_MAX_N)?;
    let n = g.n();
    let adj = g.adjacency_masks().expect("guard keeps n <= 64");
    let mut sets = Vec::new();

    fn rec(v0: usize, n: usize, cur: u64, blocked: u64, adj: &[u64], out: &mut Vec<u64>) {
        out.push(cur);
        for v in v0..n {
            let bit = 1u64 << v;
            if blocked & bit == 0 {
                rec(v + 1, n, cur | bit, blocked | adj[v], adj, out);
            }
        }
    }
    rec(0, n, 0, 0, &adj, &mut sets);

    if maximal_only {
        sets.retain(|&s| {
            (0..n).all(|v| {
                let bit = 1u64 << v;
                s & bit != 0 || adj[v] & s != 0
            })
        });
    }
    sets.sort_unstable();
    Ok(StableSetFamily { n, sets, maximal_only })
}

/// Max-weight stable set by branch and bound over bitsets.
pub fn alpha(g: &Graph, w: &WeightVector) -> Result<BoundResult, ExactError> {
    guard(g.n(), tol::ENUM_MAX_N)?;
    check_weights(g, w)?;
    let n = g.n();
    let adj = g.adjacency_masks().expect("guard keeps n <= 64");
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    struct Search<'a> {
        adj: &'a [u64],
        w: &'a [f64],
        best: f64,
        best_set: u64,
    }
    impl Search<'_> {
        fn run(&mut self, candidates: u64, cur: u64, cur_weight: f64) {
            if candidates == 0 {
                if cur_weight > self.best {
                    self.best = cur_weight;
                    self.best_set = cur;
                }
                return;
            }
            let remaining: f64 = {
                let mut s = 0.0;
                let mut m = candidates;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    s += self.w[v];
                    m &= m - 1;
                }
                s
            };
            if cur_weight + remaining <= self.best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            let bit = 1u64 << v;
            // Include v, dropping its neighbors.
            self.run(candidates & !bit & !self.adj[v], cur | bit, cur_weight + self.w[v]);
            // Exclude v.
            self.run(candidates & !bit, cur, cur_weight);
        }
    }

    let mut s = Search { adj: &adj, w: w.entries(), best: -1.0, best_set: 0 };
    s.run(full, 0, 0.0);
    Ok(BoundResult::exact(
        s.best.max(0.0),
        Certificate::StableSet(StableSetFamily::vertices(s.best_set)),
    ))
}

/// Weighted fractional chromatic number: the covering LP over maximal
/// stable sets with over-covering allowed (Σ y_S χ^S ≥ w).
pub fn chi_f(g: &Graph, w: &WeightVector) -> Result<BoundResult, ExactError> {
    guard(g.n(), tol::LP_ORACLE_MAX_N)?;
    check_weights(g, w)?;
    let family = enumerate_stable_sets(g, true)?;
    let n = g.n();
    let ns = family.len();

    let mut lp = LinearProgram::new(Sense::Minimize, vec![1.0; ns]);
    for v in 0..n {
        let coeffs: Vec<f64> = family
            .sets()
            .iter()
            .map(|&s| if s & (1 << v) != 0 { 1.0 } else { 0.0 })
            .collect();
        lp.constrain(coeffs, Relation::Ge, w.get(v));
    }
    let sol = simplex::solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal {
        return Err(ExactError::UnexpectedLpStatus(sol.status));
    }

    let mut sets = Vec::new();
    let mut multipliers = Vec::new();
    for (k, &y) in sol.primal.iter().enumerate() {
        if y > 1e-12 {
            sets.push(StableSetFamily::vertices(family.sets()[k]));
            multipliers.push(y);
        }
    }
    Ok(BoundResult {
        value: crate::result::Value::Finite(sol.objective),
        certificate: Certificate::FractionalCover { sets, multipliers, dual: sol.dual },
        gap: 0.0,
        iterations: sol.iterations,
        budget_exhausted: false,
    })
}

/// Outcome of a polytope membership test; `separator` is a valid
/// inequality ⟨s,·⟩ ≤ 1 for the polytope with ⟨s,x⟩ > 1 when outside.
#[derive(Debug, Clone)]
pub struct Membership {
    pub inside: bool,
    pub separator: Option<Vec<f64>>,
}

/// x ∈ STAB(G), tested through the antiblocking identity
/// STAB(G) = {x ≥ 0 : ⟨x,y⟩ ≤ 1 ∀y ∈ QSTAB(ḡ)}, i.e. χ_f(G,x) ≤ 1.
pub fn in_stab(g: &Graph, x: &WeightVector) -> Result<Membership, ExactError> {
    guard(g.n(), tol::LP_ORACLE_MAX_N)?;
    check_weights(g, x)?;
    let r = chi_f(g, x)?;
    let value = r.value.finite();
    if value <= 1.0 + tol::MEMBERSHIP {
        Ok(Membership { inside: true, separator: None })
    } else {
        let separator = match r.certificate {
            Certificate::FractionalCover { dual, .. } => Some(dual),
            _ => None,
        };
        Ok(Membership { inside: false, separator })
    }
}

/// x ∈ QSTAB(G): x ≥ 0 and ⟨χ^K, x⟩ ≤ 1 for every maximal clique K of G.
pub fn in_qstab(g: &Graph, x: &WeightVector) -> Result<Membership, ExactError> {
    guard(g.n(), tol::LP_ORACLE_MAX_N)?;
    check_weights(g, x)?;
    // Maximal cliques of G are the maximal stable sets of its complement.
    let cliques = enumerate_stable_sets(&g.complement(), true)?;
    for &k in cliques.sets() {
        let total: f64 = StableSetFamily::vertices(k).iter().map(|&v| x.get(v)).sum();
        if total > 1.0 + tol::MEMBERSHIP {
            return Ok(Membership {
                inside: false,
                separator: Some(cliques.incidence_vector(k)),
            });
        }
    }
    Ok(Membership { inside: true, separator: None })
}
