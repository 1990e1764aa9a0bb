//! Purpose-built log-det barrier solvers for the SDP shapes used by the
//! bound catalogue:
//!
//! * the diagonal-LMI family `max ⟨w,x⟩ s.t. Σ xᵢ bᵢbᵢᵀ ⪯ I, x ≥ 0`,
//!   where the bᵢ are the columns of (I+Ã)^{1/2},
//! * the theta-body family `max ⟨w, diag X⟩` over the bordered PSD
//!   condition defining TH(G) and its θ′/θ⁺ variants,
//! * the spectraplex family `max ⟨M,X⟩ s.t. tr X = 1, X ⪰ 0`, whose
//!   central path is available in closed form.
//!
//! Every solve follows the same scheme: a strictly feasible start, Newton
//! steps on the barrier subproblem, μ divided by ten per stage, and a
//! *certified* duality gap measured against an exactly feasible dual point
//! recovered from μ·S⁻¹. Downstream tests check certificates, not solver
//! internals.

use crate::graph::{GeneralizedAdjacency, Graph, WeightVector};
use crate::linalg::{self, LinalgError, SymMatrix};
use crate::tol;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SdpError {
    #[error("barrier ran out of μ-stages at μ = {mu:.3e} with certified gap {gap:.3e}")]
    IterationCap { mu: f64, gap: f64 },
    #[error("newton system singular beyond recovery at μ = {mu:.3e}")]
    NewtonSingular { mu: f64 },
    #[error("problem construction: {0}")]
    BadProblem(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy)]
pub struct SdpConfig {
    /// Relative duality-gap target: gap ≤ gap_tol · (1 + |primal|).
    pub gap_tol: f64,
    pub max_mu_stages: usize,
    pub max_newton_per_stage: usize,
    pub mu_init: f64,
    pub mu_shrink: f64,
}

impl Default for SdpConfig {
    fn default() -> Self {
        SdpConfig {
            gap_tol: tol::SDP_GAP,
            max_mu_stages: 15,
            max_newton_per_stage: 60,
            mu_init: 1.0,
            mu_shrink: 0.1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SdpStatus {
    Optimal,
}

/// Dense row-major product of two symmetric matrices (not symmetric).
fn raw_product(a: &SymMatrix, b: &SymMatrix) -> Vec<f64> {
    let n = a.order();
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a.get(i, k);
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b.get(k, j);
            }
        }
    }
    out
}

/// Inverse of an SPD matrix with one Newton–Schulz refinement pass,
/// X ← X(2I − MX). The certificates below read single entries of these
/// inverses scaled by μ; refinement pushes their relative error from
/// κ(M)·ε down to (κ(M)·ε)², which keeps certified gaps meaningful near
/// the end of the central path.
fn refined_inverse(m: &SymMatrix, chol: &linalg::CholeskyFactor) -> SymMatrix {
    let n = m.order();
    let x0 = chol.inverse();
    // q = 2I − M·X0, then X1 = X0·q, symmetrized at the end.
    let mut q = raw_product(m, &x0);
    for v in q.iter_mut() {
        *v = -*v;
    }
    for i in 0..n {
        q[i * n + i] += 2.0;
    }
    let mut x1 = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let a = x0.get(i, k);
            if a == 0.0 {
                continue;
            }
            for j in 0..n {
                x1[i * n + j] += a * q[k * n + j];
            }
        }
    }
    SymMatrix::from_fn(n, |i, j| x1[i * n + j])
}

/// Certified dual value of the theta family for a PD pattern-feasible V:
/// t = uᵀV⁻¹u with the border pinned to uᵢ = −(wᵢ + Vᵢᵢ)/2.
fn theta_dual_value(vb: &SymMatrix, w: &WeightVector) -> Option<f64> {
    let n = vb.order();
    let u: Vec<f64> = (0..n).map(|i| -0.5 * (w.get(i) + vb.get(i, i))).collect();
    let c = vb.cholesky().ok()?;
    let t: f64 = c.solve(&u).iter().zip(&u).map(|(a, b)| a * b).sum();
    t.is_finite().then_some(t)
}

/// Exact cyclic coordinate descent on the dual value over the free
/// entries of V (all diagonal entries, plus off-diagonal entries the
/// variant leaves unconstrained or sign-constrained). The 1D restriction
/// of t along each coordinate is rational with closed-form stationary
/// points, so every step is a true 1D minimizer; probing line searches
/// cannot resolve the tiny moves that matter here.
fn polish_theta_dual(
    graph: &crate::graph::Graph,
    variant: ThetaVariant,
    w: &WeightVector,
    v0: &SymMatrix,
    t0: f64,
) -> Option<(f64, SymMatrix)> {
    let n = v0.order();
    let mut coords: Vec<(usize, usize, SignConstraint)> = Vec::new();
    for i in 0..n {
        coords.push((i, i, SignConstraint::Free));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let edge = graph.has_edge(i, j);
            match (variant, edge) {
                (ThetaVariant::Theta, true) | (ThetaVariant::ThetaPrime, true) => {
                    coords.push((i, j, SignConstraint::Free));
                }
                (ThetaVariant::ThetaPlus, true) => coords.push((i, j, SignConstraint::NonNeg)),
                (ThetaVariant::ThetaPrime, false) => coords.push((i, j, SignConstraint::NonPos)),
                (_, false) => {} // pinned to zero
            }
        }
    }

    let mut v = v0.clone();
    let mut best = t0;
    for _sweep in 0..8 {
        let mut improved = false;
        for &(a, b, sign) in &coords {
            let Ok(chol) = v.cholesky() else { break };
            let pv = chol.inverse();
            let u: Vec<f64> = (0..n).map(|i| -0.5 * (w.get(i) + v.get(i, i))).collect();
            let g = pv.apply(&u);

            let mut candidates: Vec<f64> = Vec::new();
            if a == b {
                // t(s) = t₀ + (−gᵢ² − gᵢ·s·0 …)/σ with σ = 1 + s·Pᵢᵢ;
                // stationarity is (Pᵢᵢ²/4)s² + (Pᵢᵢ/2)s − (gᵢ² + gᵢ) = 0.
                let pii = pv.get(a, a);
                let gi = g[a];
                for s in real_roots_by_magnitude(
                    pii * pii / 4.0,
                    pii / 2.0,
                    -(gi * gi + gi),
                ) {
                    if 1.0 + s * pii > 1e-12 {
                        candidates.push(s);
                    }
                }
            } else {
                // Pair update: with r = P_ab + 1/s, maximizing the rank-2
                // correction reduces to g_a·g_b·r² + c₁·r − g_a·g_b·P_aa·P_bb = 0,
                // c₁ = g_a²·P_bb + g_b²·P_aa.
                let paa = pv.get(a, a);
                let pbb = pv.get(b, b);
                let pab = pv.get(a, b);
                let (ga, gb) = (g[a], g[b]);
                let c1 = ga * ga * pbb + gb * gb * paa;
                for r in real_roots_by_magnitude(ga * gb, c1, -ga * gb * paa * pbb) {
                    let denom = r - pab;
                    if denom.abs() > 1e-300 {
                        candidates.push(1.0 / denom);
                    }
                }
            }

            for s in candidates {
                if !s.is_finite() || s == 0.0 {
                    continue;
                }
                let new_val = v.get(a, b) + s;
                let sign_ok = match sign {
                    SignConstraint::Free => true,
                    SignConstraint::NonNeg => new_val >= 0.0,
                    SignConstraint::NonPos => new_val <= 0.0,
                };
                if !sign_ok {
                    continue;
                }
                let old = v.get(a, b);
                v.set(a, b, new_val);
                match theta_dual_value(&v, w) {
                    Some(t) if t < best => {
                        best = t;
                        improved = true;
                        break;
                    }
                    _ => v.set(a, b, old),
                }
            }
        }
        if !improved {
            break;
        }
    }
    (best < t0).then_some((best, v))
}

/// Real roots of at² + bt + c = 0, nearest zero first.
fn real_roots_by_magnitude(a: f64, b: f64, c: f64) -> Vec<f64> {
    let mut roots = Vec::new();
    if a.abs() <= 1e-300 {
        if b.abs() > 1e-300 {
            roots.push(-c / b);
        }
    } else {
        let disc = b * b - 4.0 * a * c;
        if disc >= 0.0 {
            let sq = disc.sqrt();
            // Citardauq pairing avoids cancellation in the small root.
            let q = -0.5 * (b + b.signum() * sq);
            if q != 0.0 {
                roots.push(c / q);
                roots.push(q / a);
            } else {
                roots.push(0.0);
                roots.push(-b / a);
            }
        }
    }
    roots.retain(|t| t.is_finite());
    roots.sort_by(|x, y| x.abs().partial_cmp(&y.abs()).unwrap());
    roots
}

/// Descent direction −H⁻¹g for a (theoretically) positive definite Newton
/// Hessian. Near the end of the central path H is extremely ill
/// conditioned and plain Cholesky can break down; the fallback solves
/// through the eigendecomposition with small eigenvalues clamped, which
/// always yields a strict descent direction. The certified gap test
/// decides convergence independently of Newton quality.
fn newton_direction(h: &SymMatrix, grad: &[f64]) -> Option<Vec<f64>> {
    if let Ok(c) = h.cholesky() {
        let d: Vec<f64> = c.solve(grad).iter().map(|v| -v).collect();
        let slope: f64 = grad.iter().zip(&d).map(|(g, x)| g * x).sum();
        if slope < 0.0 && d.iter().all(|v| v.is_finite()) {
            return Some(d);
        }
    }
    // Jacobi-preconditioned eigensolve: equilibrating to unit diagonal
    // keeps barrier curvatures of very different scales (1/vₖ² terms)
    // resolvable before the eigenvalue clamp.
    let n = h.order();
    let scal: Vec<f64> = (0..n)
        .map(|i| 1.0 / h.get(i, i).max(f64::MIN_POSITIVE).sqrt())
        .collect();
    let pre = SymMatrix::from_fn(n, |i, j| h.get(i, j) * scal[i] * scal[j]);
    let eig = pre.eigen().ok()?;
    let top = eig.lambda_max().abs().max(f64::MIN_POSITIVE);
    let inv = eig.map_eigenvalues(|l| 1.0 / l.max(top * 1e-14));
    let scaled_grad: Vec<f64> = grad.iter().zip(&scal).map(|(g, s)| g * s).collect();
    let d: Vec<f64> = inv
        .apply(&scaled_grad)
        .iter()
        .zip(&scal)
        .map(|(v, s)| -v * s)
        .collect();
    if d.iter().all(|v| v.is_finite()) {
        Some(d)
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub struct SdpSolution {
    pub status: SdpStatus,
    /// Primal vector: x for the LMI family, diag(X) for the theta family.
    pub primal_x: Vec<f64>,
    /// Primal matrix when the family has one (theta body X, spectraplex X).
    pub primal_matrix: Option<SymMatrix>,
    /// Exactly feasible dual certificate.
    pub dual_matrix: SymMatrix,
    pub primal_objective: f64,
    pub dual_objective: f64,
    /// dual − primal, certified nonnegative.
    pub gap: f64,
    pub iterations: usize,
}

// ---------------------------------------------------------------------------
// Diagonal-LMI family
// ---------------------------------------------------------------------------

/// `max ⟨w,x⟩ s.t. B Diag(x) B ⪯ I, x ≥ 0` with B = (I+Ã)^{1/2}.
#[derive(Debug, Clone)]
pub struct DiagonalLmiProblem {
    b: SymMatrix,
    w: WeightVector,
}

impl DiagonalLmiProblem {
    pub fn new(b: SymMatrix, w: WeightVector) -> Result<Self, SdpError> {
        if b.order() != w.len() {
            return Err(SdpError::BadProblem(format!(
                "matrix order {} vs weight length {}",
                b.order(),
                w.len()
            )));
        }
        Ok(DiagonalLmiProblem { b, w })
    }

    /// Builds B = (I+Ã)^{1/2} from a generalized adjacency matrix.
    pub fn from_adjacency(a: &GeneralizedAdjacency, w: &WeightVector) -> Result<Self, SdpError> {
        let form = a.tilde_form()?;
        Self::new(form.sqrt_i_plus()?, w.clone())
    }

    pub fn b(&self) -> &SymMatrix {
        &self.b
    }

    pub fn w(&self) -> &WeightVector {
        &self.w
    }
}

pub fn solve_diagonal_lmi(
    p: &DiagonalLmiProblem,
    cfg: &SdpConfig,
) -> Result<SdpSolution, SdpError> {
    let n = p.b.order();
    let w = p.w.entries();
    let b = &p.b;

    // Strictly interior start: the Slater point x = 0 nudged off the
    // orthant wall, scaled so the LMI slack stays positive definite.
    let b_top = b.eigen()?.lambda_max();
    let eps = 0.5 / (1.0f64).max(b_top * b_top);
    let mut x = vec![eps; n];

    let slack = |x: &[f64]| -> SymMatrix {
        SymMatrix::identity(n).sub(&b.scaled_congruence(x))
    };

    let barrier = |x: &[f64], mu: f64| -> Option<f64> {
        if x.iter().any(|&v| v <= 0.0) {
            return None;
        }
        let chol = slack(x).cholesky().ok()?;
        let obj: f64 = w.iter().zip(x).map(|(a, b)| a * b).sum();
        let logs: f64 = x.iter().map(|v| v.ln()).sum();
        Some(-obj - mu * (chol.logdet() + logs))
    };

    let mut mu = cfg.mu_init;
    let mut iterations = 0usize;
    // Feasible primal values only climb and dual bounds only tighten;
    // track the best of each across stages independently.
    let mut best_primal: Option<(f64, Vec<f64>)> = None;
    let mut best_dual: Option<(f64, SymMatrix)> = None;

    for _stage in 0..cfg.max_mu_stages {
        for _step in 0..cfg.max_newton_per_stage {
            let s = slack(&x);
            let Ok(chol) = s.cholesky() else { break };
            let t = b.congruence(&chol.inverse());

            let mut grad = vec![0.0; n];
            for i in 0..n {
                grad[i] = -w[i] + mu * t.get(i, i) - mu / x[i];
            }
            let hess = SymMatrix::from_fn(n, |i, j| {
                let tij = t.get(i, j);
                mu * tij * tij + if i == j { mu / (x[i] * x[i]) } else { 0.0 }
            });
            let Some(delta) = newton_direction(&hess, &grad) else { break };
            let decrement: f64 = -grad.iter().zip(&delta).map(|(g, d)| g * d).sum::<f64>();
            if decrement <= (1e-16f64).max(1e-12 * mu) {
                break;
            }

            // Longest step keeping x > 0, then backtrack for the LMI + Armijo.
            let mut alpha = 1.0f64;
            for i in 0..n {
                if delta[i] < 0.0 {
                    alpha = alpha.min(-0.99 * x[i] / delta[i]);
                }
            }
            let phi0 = barrier(&x, mu).expect("iterate is interior");
            let slope: f64 = grad.iter().zip(&delta).map(|(g, d)| g * d).sum();
            let mut accepted = false;
            for _ in 0..60 {
                let cand: Vec<f64> = x.iter().zip(&delta).map(|(v, d)| v + alpha * d).collect();
                if let Some(phi) = barrier(&cand, mu) {
                    if phi <= phi0 + 0.25 * alpha * slope {
                        x = cand;
                        accepted = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            iterations += 1;
            if !accepted {
                break;
            }
        }

        // Exact cyclic coordinate ascent at the tail stages. A move in xᵢ
        // changes the slack by a rank-one term, so the 1D barrier optimum
        // is a quadratic root and T = B S⁻¹ B follows by Sherman–Morrison.
        if mu < 1e-5 {
            let w_scale = 1.0 + w.iter().fold(0.0f64, |a, &v| a.max(v));
            for _sweep in 0..200 {
                // One factorization per sweep keeps the convergence test
                // honest; in-sweep rank-one updates of T drift by
                // O(ε‖T‖²), so each 1D solve re-reads a column refreshed
                // right before use when the drift matters.
                let s = slack(&x);
                let Ok(chol) = s.cholesky() else { break };
                let s_inv = refined_inverse(&s, &chol);
                let mut t_mat = b.congruence(&s_inv);
                let residual = (0..n)
                    .map(|i| (w[i] - mu * t_mat.get(i, i) + mu / x[i]).abs())
                    .fold(0.0f64, f64::max);
                if residual <= 1e-11 * w_scale {
                    break;
                }
                for i in 0..n {
                    let tii = t_mat.get(i, i);
                    let roots = real_roots_by_magnitude(
                        -w[i] * tii,
                        w[i] * (1.0 - tii * x[i]) - 2.0 * mu * tii,
                        w[i] * x[i] + mu * (1.0 - tii * x[i]),
                    );
                    for t in roots {
                        if !t.is_finite() || x[i] + t <= 0.0 {
                            continue;
                        }
                        let denom = 1.0 - t * tii;
                        if denom <= 1e-12 {
                            continue;
                        }
                        // T ← T + t·(Teᵢ)(Teᵢ)ᵀ/(1 − t·Tᵢᵢ)
                        let col: Vec<f64> = (0..n).map(|r| t_mat.get(r, i)).collect();
                        let factor = t / denom;
                        for r in 0..n {
                            for c in r..n {
                                let v = t_mat.get(r, c) + factor * col[r] * col[c];
                                t_mat.set(r, c, v);
                            }
                        }
                        x[i] += t;
                        break;
                    }
                }
            }
        }

        // Exactly feasible dual point from Y = m·S⁻¹ + t·I. Any scale m > 0
        // works once the shift t = max(0, maxᵢ(wᵢ − m·Tᵢᵢ)) is added, since
        // diag(B·tI·B) = t·diag(I+Ã) = t·1; pick the scale minimizing the
        // certified trace over the breakpoints m = wᵢ/Tᵢᵢ and m = μ.
        let s = slack(&x);
        let Ok(chol) = s.cholesky() else { break };
        let s_inv = refined_inverse(&s, &chol);
        let t = b.congruence(&s_inv);
        let trace_s_inv = s_inv.trace();
        if std::env::var_os("SPECTRAL_GAUGE_TRACE").is_some() {
            let res = (0..n)
                .map(|i| (w[i] - mu * t.get(i, i) + mu / x[i]).abs())
                .fold(0.0f64, f64::max);
            eprintln!("lmi mu={mu:.1e} stationarity residual {res:.3e}");
        }
        let dual_of = |m: f64| -> f64 {
            let mut shift = 0.0f64;
            for i in 0..n {
                shift = shift.max(w[i] - m * t.get(i, i));
            }
            m * trace_s_inv + shift * n as f64
        };
        let mut m_best = mu;
        let mut dual = dual_of(mu);
        for i in 0..n {
            let tii = t.get(i, i);
            if w[i] > 0.0 && tii > 0.0 {
                let cand = w[i] / tii;
                let d = dual_of(cand);
                if d < dual {
                    dual = d;
                    m_best = cand;
                }
            }
        }
        let primal: f64 = w.iter().zip(&x).map(|(a, b)| a * b).sum();
        if best_primal.as_ref().map_or(true, |(p, _)| primal > *p) {
            best_primal = Some((primal, x.clone()));
        }
        if best_dual.as_ref().map_or(true, |(d, _)| dual < *d) {
            let mut shift = 0.0f64;
            for i in 0..n {
                shift = shift.max(w[i] - m_best * t.get(i, i));
            }
            let y = s_inv.scale(m_best).add(&SymMatrix::identity(n).scale(shift));
            best_dual = Some((dual, y));
        }

        let (p_val, _) = best_primal.as_ref().expect("just set");
        let (d_val, _) = best_dual.as_ref().expect("just set");
        let gap = (d_val - p_val).max(0.0);
        if std::env::var_os("SPECTRAL_GAUGE_TRACE").is_some() {
            eprintln!("lmi stage mu={mu:.1e} primal={primal:.12} stage_dual={dual:.12} best=({p_val:.12},{d_val:.12})");
        }
        if gap <= cfg.gap_tol * (1.0 + p_val.abs()) {
            let (primal_objective, x_best) = best_primal.expect("checked");
            let (dual_objective, y_best) = best_dual.expect("checked");
            return Ok(SdpSolution {
                status: SdpStatus::Optimal,
                primal_x: x_best,
                primal_matrix: None,
                dual_matrix: y_best,
                primal_objective,
                dual_objective,
                gap,
                iterations,
            });
        }
        // Full-rate shrink early; a gentler √-rate at the tail keeps the
        // Newton iterates close enough to the path to track it.
        mu *= if mu > 1e-6 { cfg.mu_shrink } else { cfg.mu_shrink.sqrt() };
    }

    let gap = match (&best_primal, &best_dual) {
        (Some((p, _)), Some((d, _))) => (d - p).max(0.0),
        _ => f64::INFINITY,
    };
    Err(SdpError::IterationCap { mu, gap })
}

/// Residuals of a candidate dual point for the diagonal-LMI family:
/// `min tr(Y) s.t. diag(B Y B) ≥ w, Y ⪰ 0`.
#[derive(Debug, Clone)]
pub struct DualFeasReport {
    pub lambda_min_y: f64,
    /// min over i of diag(B Y B)ᵢ − wᵢ.
    pub min_cover_slack: f64,
    pub trace: f64,
}

impl DualFeasReport {
    pub fn is_feasible(&self, tolerance: f64) -> bool {
        self.lambda_min_y >= -tolerance && self.min_cover_slack >= -tolerance
    }
}

pub fn check_dual_feasible(
    b: &SymMatrix,
    y: &SymMatrix,
    w: &WeightVector,
) -> Result<DualFeasReport, SdpError> {
    if b.order() != y.order() || b.order() != w.len() {
        return Err(SdpError::BadProblem("dimension mismatch".into()));
    }
    let lambda_min_y = y.eigen()?.lambda_min();
    let cover = b.congruence(y);
    let mut min_cover_slack = f64::INFINITY;
    for i in 0..b.order() {
        min_cover_slack = min_cover_slack.min(cover.get(i, i) - w.get(i));
    }
    Ok(DualFeasReport { lambda_min_y, min_cover_slack, trace: y.trace() })
}

// ---------------------------------------------------------------------------
// Theta-body family
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaVariant {
    /// X_ij = 0 on edges.
    Theta,
    /// Additionally X ≥ 0 entrywise.
    ThetaPrime,
    /// Edge equalities relaxed to X_ij ≤ 0.
    ThetaPlus,
}

#[derive(Debug, Clone)]
pub struct ThetaBodyProblem {
    graph: Graph,
    w: WeightVector,
    variant: ThetaVariant,
}

impl ThetaBodyProblem {
    pub fn new(graph: Graph, w: WeightVector, variant: ThetaVariant) -> Result<Self, SdpError> {
        if graph.n() != w.len() {
            return Err(SdpError::BadProblem(format!(
                "graph order {} vs weight length {}",
                graph.n(),
                w.len()
            )));
        }
        Ok(ThetaBodyProblem { graph, w, variant })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn variant(&self) -> ThetaVariant {
        self.variant
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SignConstraint {
    Free,
    NonNeg,
    NonPos,
}

/// One free entry of the bordered matrix Z; `cells` lists the positions it
/// occupies (both triangles). Diagonal variables also occupy the border.
struct ThetaVar {
    cells: Vec<(usize, usize)>,
    obj: f64,
    sign: SignConstraint,
    is_diag: bool,
}

pub fn solve_theta_body(p: &ThetaBodyProblem, cfg: &SdpConfig) -> Result<SdpSolution, SdpError> {
    let n = p.graph.n();
    let nz = n + 1; // bordered matrix order; index 0 is the border row

    let mut vars: Vec<ThetaVar> = Vec::new();
    for i in 0..n {
        vars.push(ThetaVar {
            cells: vec![(0, i + 1), (i + 1, 0), (i + 1, i + 1)],
            obj: p.w.get(i),
            sign: SignConstraint::Free,
            is_diag: true,
        });
    }
    for i in 0..n {
        for j in (i + 1)..n {
            let edge = p.graph.has_edge(i, j);
            let sign = match (p.variant, edge) {
                (ThetaVariant::Theta, true) => continue, // eliminated: X_ij = 0
                (ThetaVariant::ThetaPrime, true) => continue,
                (ThetaVariant::ThetaPlus, true) => SignConstraint::NonPos,
                (ThetaVariant::ThetaPrime, false) => SignConstraint::NonNeg,
                (_, false) => SignConstraint::Free,
            };
            vars.push(ThetaVar {
                cells: vec![(i + 1, j + 1), (j + 1, i + 1)],
                obj: 0.0,
                sign,
                is_diag: false,
            });
        }
    }
    let m = vars.len();

    let assemble = |v: &[f64]| -> SymMatrix {
        let mut z = SymMatrix::zeros(nz);
        z.set(0, 0, 1.0);
        for (k, var) in vars.iter().enumerate() {
            for &(a, b) in &var.cells {
                if a <= b {
                    z.set(a, b, v[k]);
                }
            }
        }
        z
    };

    // Start at X = I/(n+1) with a small push off every sign barrier.
    let c0 = 1.0 / (n as f64 + 1.0);
    let mut delta0 = c0 / (2.0 * (n as f64) * (n as f64 + 1.0));
    let mut v = vec![0.0; m];
    loop {
        for (k, var) in vars.iter().enumerate() {
            v[k] = match var.sign {
                SignConstraint::Free => {
                    if var.cells.len() == 3 {
                        c0
                    } else {
                        0.0
                    }
                }
                SignConstraint::NonNeg => delta0,
                SignConstraint::NonPos => -delta0,
            };
        }
        if assemble(&v).cholesky().is_ok() {
            break;
        }
        delta0 *= 0.5;
        if delta0 < 1e-300 {
            return Err(SdpError::BadProblem("no interior start found".into()));
        }
    }

    let domain_ok = |v: &[f64]| -> bool {
        vars.iter().zip(v).all(|(var, &x)| match var.sign {
            SignConstraint::Free => true,
            SignConstraint::NonNeg => x > 0.0,
            SignConstraint::NonPos => x < 0.0,
        })
    };
    let barrier = |v: &[f64], mu: f64| -> Option<f64> {
        if !domain_ok(v) {
            return None;
        }
        let chol = assemble(v).cholesky().ok()?;
        let mut phi = -mu * chol.logdet();
        for (k, var) in vars.iter().enumerate() {
            phi -= var.obj * v[k];
            match var.sign {
                SignConstraint::Free => {}
                SignConstraint::NonNeg => phi -= mu * v[k].ln(),
                SignConstraint::NonPos => phi -= mu * (-v[k]).ln(),
            }
        }
        Some(phi)
    };

    let mut mu = cfg.mu_init;
    let mut iterations = 0usize;
    let mut best_primal: Option<(f64, Vec<f64>)> = None;
    let mut best_dual: Option<(f64, SymMatrix)> = None;

    for _stage in 0..cfg.max_mu_stages {
        for _step in 0..cfg.max_newton_per_stage {
            let z = assemble(&v);
            let Ok(chol) = z.cholesky() else { break };
            let pinv_z = chol.inverse();

            let mut grad = vec![0.0; m];
            for (k, var) in vars.iter().enumerate() {
                let tr: f64 = var.cells.iter().map(|&(a, b)| pinv_z.get(a, b)).sum();
                grad[k] = -var.obj - mu * tr;
                if var.sign != SignConstraint::Free {
                    grad[k] -= mu / v[k];
                }
            }
            let hess = SymMatrix::from_fn(m, |k, l| {
                let mut s = 0.0;
                for &(a, b) in &vars[k].cells {
                    for &(c, d) in &vars[l].cells {
                        s += pinv_z.get(b, c) * pinv_z.get(d, a);
                    }
                }
                let mut h = mu * s;
                if k == l && vars[k].sign != SignConstraint::Free {
                    h += mu / (v[k] * v[k]);
                }
                h
            });
            let Some(delta) = newton_direction(&hess, &grad) else { break };
            let decrement: f64 = -grad.iter().zip(&delta).map(|(g, d)| g * d).sum::<f64>();
            if decrement <= (1e-16f64).max(1e-12 * mu) {
                break;
            }

            let mut alpha = 1.0f64;
            for (k, var) in vars.iter().enumerate() {
                match var.sign {
                    SignConstraint::NonNeg if delta[k] < 0.0 => {
                        alpha = alpha.min(-0.99 * v[k] / delta[k]);
                    }
                    SignConstraint::NonPos if delta[k] > 0.0 => {
                        alpha = alpha.min(-0.99 * v[k] / delta[k]);
                    }
                    _ => {}
                }
            }
            let phi0 = barrier(&v, mu).expect("iterate is interior");
            let slope: f64 = grad.iter().zip(&delta).map(|(g, d)| g * d).sum();
            let mut accepted = false;
            for _ in 0..60 {
                let cand: Vec<f64> = v.iter().zip(&delta).map(|(x, d)| x + alpha * d).collect();
                if let Some(phi) = barrier(&cand, mu) {
                    if phi <= phi0 + 0.25 * alpha * slope {
                        v = cand;
                        accepted = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            iterations += 1;
            if !accepted {
                break;
            }
        }

        // Exact cyclic coordinate ascent on the free variables. Newton
        // directions degrade in the stiff/soft mixed spectrum near the end
        // of the path, leaving free-variable residuals that loosen the
        // dual bound; each 1D barrier maximum is available in closed form
        // through the matrix determinant lemma, so a few sweeps push those
        // residuals to machine level.
        if mu < 1e-5 {
            let w_scale = 1.0 + p.w.norm_inf();
            for _sweep in 0..64 {
                // Stationarity of the free variables decides convergence;
                // their residuals are exactly what loosens the dual bound.
                {
                    let z = assemble(&v);
                    let Ok(chol) = z.cholesky() else { break };
                    let pz = refined_inverse(&z, &chol);
                    let residual = vars
                        .iter()
                        .map(|var| {
                            if var.sign != SignConstraint::Free {
                                return 0.0;
                            }
                            let tr: f64 = var.cells.iter().map(|&(a, b)| pz.get(a, b)).sum();
                            (var.obj + mu * tr).abs()
                        })
                        .fold(0.0f64, f64::max);
                    if residual <= 1e-11 * w_scale {
                        break;
                    }
                }
                let mut largest_move = 0.0f64;
                for k in 0..m {
                    let z = assemble(&v);
                    let Ok(chol) = z.cholesky() else { break };
                    let pz = refined_inverse(&z, &chol);
                    let candidates = if vars[k].is_diag {
                        // Z + t(uuᵀ − e₀e₀ᵀ) with u = e₀ + e_a: the log-det
                        // term is log[(1+tα)(1−tγ) + t²β²]; stationarity is
                        // a quadratic in t.
                        let a = vars[k].cells[0].1; // (0, a) border cell
                        let alpha = pz.get(0, 0) + 2.0 * pz.get(0, a) + pz.get(a, a);
                        let gamma = pz.get(0, 0);
                        let beta = pz.get(0, 0) + pz.get(a, 0);
                        let s1 = alpha - gamma;
                        let s2 = beta * beta - alpha * gamma;
                        let wk = vars[k].obj;
                        real_roots_by_magnitude(wk * s2, wk * s1 + 2.0 * mu * s2, wk + mu * s1)
                    } else {
                        // Off-diagonal pair: log-det factor is
                        // q(t) = (1 + tP_ab)² − t² P_aa P_bb.
                        let (a, b) = vars[k].cells[0];
                        let paa = pz.get(a, a);
                        let pbb = pz.get(b, b);
                        let pab = pz.get(a, b);
                        let dq = pab * pab - paa * pbb; // q's leading coefficient
                        match vars[k].sign {
                            SignConstraint::Free => {
                                if dq < 0.0 {
                                    vec![-pab / dq]
                                } else {
                                    vec![]
                                }
                            }
                            // Entrywise barrier log(±(v+t)) added:
                            // stationarity q'(t)(v+t) + q(t) = 0.
                            _ => real_roots_by_magnitude(
                                3.0 * dq,
                                4.0 * pab + 2.0 * dq * v[k],
                                1.0 + 2.0 * pab * v[k],
                            ),
                        }
                    };
                    'candidates: for t in candidates {
                        if !t.is_finite() {
                            continue;
                        }
                        // Damp toward the current point when the exact
                        // optimum sits on the PD boundary numerically.
                        for damp in [1.0, 0.7, 0.5, 0.3, 0.1, 0.03] {
                            let step = damp * t;
                            let sign_ok = match vars[k].sign {
                                SignConstraint::Free => true,
                                SignConstraint::NonNeg => v[k] + step > 0.0,
                                SignConstraint::NonPos => v[k] + step < 0.0,
                            };
                            if !sign_ok {
                                continue;
                            }
                            let old = v[k];
                            v[k] += step;
                            if assemble(&v).cholesky().is_ok() {
                                largest_move = largest_move.max(step.abs());
                                break 'candidates;
                            }
                            v[k] = old;
                        }
                    }
                }
                if largest_move <= 1e-14 {
                    break;
                }
            }
        }

        // Certified dual bound. A dual point is U = [[t, uᵀ],[u, V]] ⪰ 0
        // with 2uᵢ + Vᵢᵢ = −wᵢ and the variant's sign pattern on V
        // (V_ij = 0 on non-edges for θ/θ⁺, ≤ 0 for θ′; ≥ 0 on edges for
        // θ⁺); its value is t, and the smallest valid t given V is
        // uᵀV⁻¹u by the Schur complement. Starting from the V-block of
        // m·Z⁻¹ (PSD as a principal submatrix of a PSD matrix), enforcing
        // the pattern and reading t through one linear solve keeps every
        // error term linear; no penalty amplification near the path end.
        let z = assemble(&v);
        let Ok(chol) = z.cholesky() else { break };
        let z_inv = refined_inverse(&z, &chol);
        let v_block = SymMatrix::from_fn(n, |i, j| z_inv.get(i + 1, j + 1));
        let dual_from_scale = |m: f64| -> Option<(f64, SymMatrix)> {
            let mut vb = v_block.scale(m);
            for i in 0..n {
                for j in (i + 1)..n {
                    let edge = p.graph.has_edge(i, j);
                    let val = vb.get(i, j);
                    match (p.variant, edge) {
                        (ThetaVariant::Theta, false) => vb.set(i, j, 0.0),
                        (ThetaVariant::ThetaPlus, false) => vb.set(i, j, 0.0),
                        (ThetaVariant::ThetaPrime, false) => vb.set(i, j, val.min(0.0)),
                        (ThetaVariant::ThetaPlus, true) => vb.set(i, j, val.max(0.0)),
                        (_, true) => {}
                    }
                }
            }
            // Any diagonal bump beyond the PSD deficit stays feasible (the
            // border pin absorbs it); larger bumps damp the near-null
            // amplification of u at the cost of a longer border. Scan.
            let deficit = (-vb.eigen().ok()?.lambda_min()).max(0.0);
            let scale = 1.0 + vb.norm_max();
            let mut best: Option<(f64, SymMatrix)> = None;
            for exp in [
                -12.0f64, -11.0, -10.0, -9.0, -8.0, -7.0, -6.0, -5.0, -4.0, -3.0, -2.0,
            ] {
                let bump = deficit + scale * 10f64.powf(exp);
                let vbb = vb.add(&SymMatrix::identity(n).scale(bump));
                if let Some(t) = theta_dual_value(&vbb, &p.w) {
                    if best.as_ref().map_or(true, |(b, _)| t < *b) {
                        best = Some((t, vbb));
                    }
                }
            }
            best
        };
        let mut stage_dual = dual_from_scale(mu);
        for j in -16i32..=16 {
            let m = mu * 1.25f64.powi(j);
            if let Some((d, vb)) = dual_from_scale(m) {
                if stage_dual.as_ref().map_or(true, |(b, _)| d < *b) {
                    stage_dual = Some((d, vb));
                }
            }
        }
        // Coordinate polish directly on the certified dual value over the
        // free entries of V; path-following alone leaves the dual loose
        // when the optimal face is degenerate.
        if let Some((d0, vb0)) = &stage_dual {
            if let Some(better) = polish_theta_dual(&p.graph, p.variant, &p.w, vb0, *d0) {
                stage_dual = Some(better);
            }
        }
        let dual = stage_dual.as_ref().map_or(f64::INFINITY, |(d, _)| *d);
        if std::env::var_os("SPECTRAL_GAUGE_TRACE").is_some() {
            let resid = vars
                .iter()
                .map(|var| {
                    if var.sign != SignConstraint::Free {
                        return 0.0;
                    }
                    let tr: f64 = var.cells.iter().map(|&(a, b)| z_inv.get(a, b)).sum();
                    (var.obj + mu * tr).abs()
                })
                .fold(0.0f64, f64::max);
            eprintln!("theta mu={mu:.1e} free-var residual {resid:.3e}");
        }
        let primal: f64 = vars.iter().zip(&v).map(|(var, &x)| var.obj * x).sum();
        if best_primal.as_ref().map_or(true, |(p, _)| primal > *p) {
            best_primal = Some((primal, v.clone()));
        }
        if let Some((d, vb)) = stage_dual {
            if best_dual.as_ref().map_or(true, |(b, _)| d < *b) {
                let u_border: Vec<f64> =
                    (0..n).map(|i| -0.5 * (p.w.get(i) + vb.get(i, i))).collect();
                let full = SymMatrix::from_fn(n + 1, |i, j| match (i, j) {
                    (0, 0) => d,
                    (0, j) => u_border[j - 1],
                    (i, 0) => u_border[i - 1],
                    (i, j) => vb.get(i - 1, j - 1),
                });
                best_dual = Some((d, full));
            }
        }

        let (p_val, _) = best_primal.as_ref().expect("just set");
        let Some((d_val, _)) = best_dual.as_ref() else {
            mu *= cfg.mu_shrink;
            continue;
        };
        let gap = (d_val - p_val).max(0.0);
        if std::env::var_os("SPECTRAL_GAUGE_TRACE").is_some() {
            eprintln!("theta stage mu={mu:.1e} primal={primal:.12} stage_dual={dual:.12} best=({p_val:.12},{d_val:.12})");
        }
        if gap <= cfg.gap_tol * (1.0 + p_val.abs()) {
            let (primal_objective, v_best) = best_primal.expect("checked");
            let (dual_objective, u_best) = best_dual.expect("checked");
            let mut x_mat = SymMatrix::zeros(n);
            for (k, var) in vars.iter().enumerate() {
                for &(a, b) in &var.cells {
                    if a >= 1 && b >= 1 && a <= b {
                        x_mat.set(a - 1, b - 1, v_best[k]);
                    }
                }
            }
            return Ok(SdpSolution {
                status: SdpStatus::Optimal,
                primal_x: x_mat.diagonal(),
                primal_matrix: Some(x_mat),
                dual_matrix: u_best,
                primal_objective,
                dual_objective,
                gap,
                iterations,
            });
        }
        // Full-rate shrink early; a gentler √-rate at the tail keeps the
        // Newton iterates close enough to the path to track it.
        mu *= if mu > 1e-6 { cfg.mu_shrink } else { cfg.mu_shrink.sqrt() };
    }

    let gap = match (&best_primal, &best_dual) {
        (Some((p, _)), Some((d, _))) => (d - p).max(0.0),
        _ => f64::INFINITY,
    };
    Err(SdpError::IterationCap { mu, gap })
}

// ---------------------------------------------------------------------------
// Spectraplex family
// ---------------------------------------------------------------------------

/// `max ⟨M,X⟩ s.t. tr X = 1, X ⪰ 0`.
///
/// The central path is X(μ) = μ(νI − M)⁻¹ with ν > λ_max(M) solving
/// μ·tr((νI − M)⁻¹) = 1; the matching dual is ν itself (feasible for
/// `min ν s.t. νI ⪰ M`), with exact gap μn.
pub fn solve_spectraplex(m: &SymMatrix, cfg: &SdpConfig) -> Result<SdpSolution, SdpError> {
    let n = m.order();
    if n == 0 {
        return Err(SdpError::BadProblem("empty matrix".into()));
    }
    let eig = m.eigen()?;
    let lmax = eig.lambda_max();
    let nf = n as f64;
    // Work in the shifted variable s = ν − λ_max; the spectral gaps stay
    // fully resolved even when s is tiny.
    let gaps: Vec<f64> = eig.eigenvalues.iter().map(|&l| lmax - l).collect();

    let mut mu = cfg.mu_init;
    let mut iterations = 0usize;
    let mut last: Option<SdpSolution> = None;
    for _stage in 0..cfg.max_mu_stages {
        // Solve μ Σ 1/(s + gapᵢ) = 1 on [μ, μn] by bisection.
        let f = |s: f64| -> f64 { mu * gaps.iter().map(|&g| 1.0 / (s + g)).sum::<f64>() - 1.0 };
        let mut lo = mu;
        let mut hi = mu * nf;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            iterations += 1;
            if hi - lo <= f64::EPSILON * hi {
                break;
            }
        }
        let s = 0.5 * (lo + hi);
        let nu = lmax + s;
        let primal = nu - mu * nf;
        let gap = mu * nf;
        let x = eig.map_eigenvalues(|l| mu / (s + (lmax - l)));
        let slack = SymMatrix::identity(n).scale(nu).sub(m);
        let sol = SdpSolution {
            status: SdpStatus::Optimal,
            primal_x: x.diagonal(),
            primal_matrix: Some(x),
            dual_matrix: slack,
            primal_objective: primal,
            dual_objective: nu,
            gap,
            iterations,
        };
        if gap <= cfg.gap_tol * (1.0 + primal.abs()) {
            return Ok(sol);
        }
        last = Some(sol);
        mu *= cfg.mu_shrink;
    }
    let gap = last.map(|s| s.gap).unwrap_or(f64::INFINITY);
    Err(SdpError::IterationCap { mu, gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn cfg() -> SdpConfig {
        SdpConfig::default()
    }

    fn xi_of(g: &Graph, w: &WeightVector) -> SdpSolution {
        let a = g.adjacency_matrix();
        let p = DiagonalLmiProblem::from_adjacency(&a, w).unwrap();
        solve_diagonal_lmi(&p, &cfg()).unwrap()
    }

    #[test]
    fn lmi_edgeless_reaches_total_weight() {
        let g = Graph::new(4, &[]).unwrap();
        let w = WeightVector::new(vec![1.0, 2.0, 0.5, 0.0]).unwrap();
        let s = xi_of(&g, &w);
        assert!((s.primal_objective - 3.5).abs() <= 1e-6, "{}", s.primal_objective);
        for i in 0..3 {
            assert!((s.primal_x[i] - 1.0).abs() <= 1e-4, "x[{i}] = {}", s.primal_x[i]);
        }
        assert!(s.gap <= 1e-6);
    }

    #[test]
    fn lmi_c5_is_sqrt5() {
        let g = GraphFamily::Cycle(5).build().unwrap();
        let s = xi_of(&g, &WeightVector::uniform(5));
        assert!((s.primal_objective - 5.0f64.sqrt()).abs() <= 1e-6, "{}", s.primal_objective);
    }

    #[test]
    fn lmi_petersen_is_four() {
        let g = GraphFamily::Petersen.build().unwrap();
        let s = xi_of(&g, &WeightVector::uniform(10));
        assert!((s.primal_objective - 4.0).abs() <= 1e-6, "{}", s.primal_objective);
        // Feasible region is inside the unit box.
        for &xi in &s.primal_x {
            assert!(xi <= 1.0 + 1e-8 && xi >= -1e-10);
        }
    }

    #[test]
    fn stable_set_incidence_is_primal_feasible() {
        let g = GraphFamily::Cycle(5).build().unwrap();
        let a = g.adjacency_matrix();
        let b = a.tilde_form().unwrap().sqrt_i_plus().unwrap();
        for set in [vec![0usize, 2], vec![1, 4], vec![3]] {
            let mut x = vec![0.0; 5];
            for &v in &set {
                x[v] = 1.0;
            }
            let slack = SymMatrix::identity(5).sub(&b.scaled_congruence(&x));
            let lmin = slack.eigen().unwrap().lambda_min();
            assert!(lmin >= -1e-8, "set {set:?}: λ_min {lmin}");
        }
    }

    #[test]
    fn dual_certificate_is_feasible() {
        let g = GraphFamily::Petersen.build().unwrap();
        let w = WeightVector::uniform(10);
        let a = g.adjacency_matrix();
        let p = DiagonalLmiProblem::from_adjacency(&a, &w).unwrap();
        let s = solve_diagonal_lmi(&p, &cfg()).unwrap();
        let report = check_dual_feasible(p.b(), &s.dual_matrix, &w).unwrap();
        assert!(report.is_feasible(1e-10), "{report:?}");
        assert!((report.trace - s.dual_objective).abs() <= 1e-9);
    }

    #[test]
    fn slater_point_feasibility_report() {
        let g = GraphFamily::Cycle(5).build().unwrap();
        let w = WeightVector::new(vec![1.0, 3.0, 0.5, 2.0, 1.0]).unwrap();
        let a = g.adjacency_matrix();
        let b = a.tilde_form().unwrap().sqrt_i_plus().unwrap();
        let slater = SymMatrix::identity(5).scale(w.norm_inf() + 1.0);
        let report = check_dual_feasible(&b, &slater, &w).unwrap();
        assert!(report.is_feasible(1e-9), "{report:?}");
        // The zero matrix is infeasible for positive weights.
        let zero = check_dual_feasible(&b, &SymMatrix::zeros(5), &w).unwrap();
        assert!(!zero.is_feasible(1e-9));
    }

    #[test]
    fn regular_graph_rank_one_dual_value() {
        // Y = (I+Ã)^{†/2} 1 1ᵀ (I+Ã)^{†/2} is dual feasible on a regular
        // graph with trace n/(1 − λ/τ).
        let g = GraphFamily::Cycle(5).build().unwrap();
        let a = g.adjacency_matrix();
        let form = a.tilde_form().unwrap();
        let pinv_half = linalg::psd_sqrt(&linalg::pinv(&form.i_plus).unwrap()).unwrap();
        let ones = vec![1.0; 5];
        let v = pinv_half.apply(&ones);
        let y = SymMatrix::outer(&v);
        let b = form.sqrt_i_plus().unwrap();
        let report = check_dual_feasible(&b, &y, &WeightVector::uniform(5)).unwrap();
        assert!(report.is_feasible(1e-8), "{report:?}");
        let tau = 2.0 * (4.0 * std::f64::consts::PI / 5.0).cos();
        let expected = 5.0 / (1.0 - 2.0 / tau);
        assert!((report.trace - expected).abs() <= 1e-8);
    }

    #[test]
    fn theta_complete_graph_is_one() {
        let g = GraphFamily::Complete(4).build().unwrap();
        let p = ThetaBodyProblem::new(g, WeightVector::uniform(4), ThetaVariant::Theta).unwrap();
        let s = solve_theta_body(&p, &cfg()).unwrap();
        assert!((s.primal_objective - 1.0).abs() <= 1e-5, "{}", s.primal_objective);
    }

    #[test]
    fn theta_c5_is_sqrt5() {
        let g = GraphFamily::Cycle(5).build().unwrap();
        let p = ThetaBodyProblem::new(g, WeightVector::uniform(5), ThetaVariant::Theta).unwrap();
        let s = solve_theta_body(&p, &cfg()).unwrap();
        assert!((s.primal_objective - 5.0f64.sqrt()).abs() <= 1e-5, "{}", s.primal_objective);
        // diag(X) = x by construction; the bordered matrix is PSD.
        let x = s.primal_matrix.as_ref().unwrap();
        for i in 0..5 {
            assert!((x.get(i, i) - s.primal_x[i]).abs() <= 1e-12);
        }
    }

    #[test]
    fn theta_variants_are_ordered() {
        let g = GraphFamily::ErdosRenyi { n: 8, p: 0.4, seed: 11 }.build().unwrap();
        let w = WeightVector::uniform(8);
        let tp = solve_theta_body(
            &ThetaBodyProblem::new(g.clone(), w.clone(), ThetaVariant::ThetaPrime).unwrap(),
            &cfg(),
        )
        .unwrap();
        let t = solve_theta_body(
            &ThetaBodyProblem::new(g.clone(), w.clone(), ThetaVariant::Theta).unwrap(),
            &cfg(),
        )
        .unwrap();
        let tplus = solve_theta_body(
            &ThetaBodyProblem::new(g, w, ThetaVariant::ThetaPlus).unwrap(),
            &cfg(),
        )
        .unwrap();
        assert!(tp.primal_objective <= t.primal_objective + 1e-6);
        assert!(t.primal_objective <= tplus.primal_objective + 1e-6);
    }

    #[test]
    fn spectraplex_matches_lambda_max() {
        let m = SymMatrix::from_fn(6, |i, j| ((i * 5 + j * 2) % 7) as f64 - 3.0);
        let s = solve_spectraplex(&m, &cfg()).unwrap();
        let lmax = m.eigen().unwrap().lambda_max();
        assert!((s.primal_objective - lmax).abs() <= 1e-6 * (1.0 + lmax.abs()));
        assert!(s.gap <= 1e-6 * (1.0 + lmax.abs()));
        // Certificate: X PSD with unit trace.
        let x = s.primal_matrix.as_ref().unwrap();
        assert!((x.trace() - 1.0).abs() <= 1e-9);
        assert!(x.eigen().unwrap().lambda_min() >= -1e-10);
    }
}
