//! The bound catalogue: the Hoffman bound H(A,w), its gauge polar Ξ(A,w),
//! the Luz CQP bound L(A,w), the Perron bound, the closed-form ratio
//! bound, and the best-A searches tying the family to θ, θ′ and θ⁺.
//!
//! Everything is indexed by a generalized adjacency matrix A: H lower
//! bounds the fractional chromatic number, Ξ and L upper bound the
//! stability number, and optimizing over A recovers the theta function
//! and its variants.

use crate::exact;
use crate::graph::{GeneralizedAdjacency, Graph, TildeForm, WeightVector};
use crate::linalg::{LinalgError, SymMatrix};
use crate::result::{BoundResult, Certificate, Value};
use crate::sdp::{
    self, DiagonalLmiProblem, SdpConfig, SdpError, ThetaBodyProblem, ThetaVariant,
};
use crate::simplex::{self, LinearProgram, LpStatus, Relation, Sense};
use crate::tol;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BoundsError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("weight vector length {got} does not match n = {n}")]
    WeightLength { got: usize, n: usize },
    #[error("ratio closed form {closed_form} disagrees with SDP value {sdp}")]
    RatioMismatch { closed_form: f64, sdp: f64 },
    #[error(transparent)]
    Sdp(#[from] SdpError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Exact(#[from] exact::ExactError),
    #[error("lp backend: {0}")]
    Lp(#[from] simplex::LpError),
}

fn check_weights(n: usize, w: &WeightVector) -> Result<(), BoundsError> {
    if w.len() != n {
        return Err(BoundsError::WeightLength { got: w.len(), n });
    }
    Ok(())
}

/// Hoffman bound H(A,w) = λ_max(W^{1/2}(I+Ã)W^{1/2}); a lower bound on
/// χ_f(G,w) for any generalized adjacency matrix A of G.
pub fn hoffman(a: &GeneralizedAdjacency, w: &WeightVector) -> Result<BoundResult, BoundsError> {
    let n = a.graph().n();
    check_weights(n, w)?;
    let form = a.tilde_form()?;
    Ok(hoffman_from_form(&form, w)?)
}

/// Same bound evaluated from a precomputed I+Ã (used by the search loops).
fn hoffman_from_form(form: &TildeForm, w: &WeightVector) -> Result<BoundResult, LinalgError> {
    let n = form.i_plus.order();
    let sw = w.sqrt();
    let m = SymMatrix::from_fn(n, |i, j| sw[i] * form.i_plus.get(i, j) * sw[j]);
    let eig = m.eigen()?;
    Ok(BoundResult::exact(
        eig.lambda_max(),
        Certificate::Eigenvector(eig.eigenvector(n - 1)),
    ))
}

/// The same value through the trace-one SDP
/// max ⟨w, diag((I+Ã)^{1/2} X (I+Ã)^{1/2})⟩ over tr X = 1, X ⪰ 0,
/// an independent route used to cross-check the eigenvalue form.
pub fn hoffman_via_sdp(
    a: &GeneralizedAdjacency,
    w: &WeightVector,
    cfg: &SdpConfig,
) -> Result<BoundResult, BoundsError> {
    let n = a.graph().n();
    check_weights(n, w)?;
    let form = a.tilde_form()?;
    let b = form.sqrt_i_plus()?;
    let objective = b.scaled_congruence(w.entries());
    let sol = sdp::solve_spectraplex(&objective, cfg)?;
    Ok(BoundResult {
        value: Value::Finite(sol.primal_objective),
        certificate: Certificate::SdpPair {
            x: sol.primal_x.clone(),
            dual: sol.primal_matrix.expect("spectraplex returns X"),
        },
        gap: sol.gap,
        iterations: sol.iterations,
        budget_exhausted: false,
    })
}

/// Ξ(A,w): the SDP upper bound on α(G,w) that is gauge-polar to H(A,·),
/// max ⟨w,x⟩ s.t. (I+Ã)^{1/2} Diag(x) (I+Ã)^{1/2} ⪯ I, x ≥ 0.
pub fn xi(
    a: &GeneralizedAdjacency,
    w: &WeightVector,
    cfg: &SdpConfig,
) -> Result<BoundResult, BoundsError> {
    let n = a.graph().n();
    check_weights(n, w)?;
    let problem = DiagonalLmiProblem::from_adjacency(a, w)?;
    let sol = sdp::solve_diagonal_lmi(&problem, cfg)?;
    Ok(BoundResult {
        value: Value::Finite(sol.primal_objective),
        certificate: Certificate::SdpPair { x: sol.primal_x.clone(), dual: sol.dual_matrix },
        gap: sol.gap,
        iterations: sol.iterations,
        budget_exhausted: false,
    })
}

/// Closed-form ratio bound n/(1 − λ/τ) for matrices whose all-ones vector
/// is a λ_max-eigenvector (k-regular adjacency matrices in particular);
/// cross-checked against the SDP value of Ξ(A,1) before returning.
pub fn ratio_bound_closed_form(
    a: &GeneralizedAdjacency,
    cfg: &SdpConfig,
) -> Result<f64, BoundsError> {
    let n = a.graph().n();
    let matrix = a.matrix();
    if matrix.is_zero() {
        return Err(BoundsError::NotApplicable("zero matrix".into()));
    }
    let eig = matrix.eigen()?;
    let lambda = eig.lambda_max();
    let tau = eig.lambda_min();
    let ones = vec![1.0; n];
    let image = matrix.apply(&ones);
    let worst = image
        .iter()
        .map(|v| (v - lambda).abs())
        .fold(0.0f64, f64::max);
    if worst > 1e-8 * (1.0 + lambda.abs()) {
        return Err(BoundsError::NotApplicable(format!(
            "all-ones vector is not a λ_max-eigenvector (residual {worst:.3e})"
        )));
    }
    let value = n as f64 / (1.0 - lambda / tau);
    let sdp_value = xi(a, &WeightVector::uniform(n), cfg)?.value.finite();
    if (value - sdp_value).abs() > 1e-5 {
        return Err(BoundsError::RatioMismatch { closed_form: value, sdp: sdp_value });
    }
    Ok(value)
}

/// α(G) ≤ (maxᵢ pᵢ⁻²)/(1 − λ/τ) for a connected graph, where p is the
/// unit-norm Perron–Frobenius eigenvector of the adjacency matrix.
pub fn perron_bound(g: &Graph) -> Result<BoundResult, BoundsError> {
    if g.edge_count() == 0 {
        return Err(BoundsError::NotApplicable("graph has no edges".into()));
    }
    if !g.is_connected() {
        return Err(BoundsError::NotApplicable("graph is disconnected".into()));
    }
    let eig = g.adjacency_matrix().matrix().eigen()?;
    let n = g.n();
    let lambda = eig.lambda_max();
    let tau = eig.lambda_min();
    let mut p = eig.eigenvector(n - 1);
    // Perron–Frobenius guarantees a positive eigenvector for connected
    // graphs; fix the sign by the largest-magnitude entry and clamp
    // roundoff-level negatives.
    let top = p.iter().cloned().fold(0.0f64, |a, v| if v.abs() > a.abs() { v } else { a });
    if top < 0.0 {
        for v in p.iter_mut() {
            *v = -*v;
        }
    }
    for v in p.iter_mut() {
        if *v < 0.0 {
            if *v < -1e-8 {
                return Err(BoundsError::NotApplicable(format!(
                    "Perron eigenvector has negative entry {v:.3e}"
                )));
            }
            *v = 0.0;
        }
    }
    let min_entry = p.iter().cloned().fold(f64::INFINITY, f64::min);
    if min_entry <= 0.0 {
        return Err(BoundsError::NotApplicable("Perron eigenvector entry vanished".into()));
    }
    let value = (1.0 / (min_entry * min_entry)) / (1.0 - lambda / tau);
    Ok(BoundResult::exact(value, Certificate::PerronVector(p)))
}

/// Configuration for the Luz CQP solver.
#[derive(Debug, Clone, Copy)]
pub struct LuzConfig {
    pub gap_tol: f64,
    pub max_iterations: usize,
}

impl Default for LuzConfig {
    fn default() -> Self {
        LuzConfig { gap_tol: tol::LUZ_GAP, max_iterations: 50_000 }
    }
}

/// Luz bound L(A,w): the optimal value of the concave QP
/// sup { 2⟨√w,x⟩ − ⟨x,(I+Ã)x⟩ : x ≥ 0, supp(x) ⊆ supp(w) }, which may be
/// +∞. Unboundedness is decided first by searching the null space of
/// I+Ã restricted to the support for a nonnegative recession direction.
pub fn luz(
    a: &GeneralizedAdjacency,
    w: &WeightVector,
    cfg: &LuzConfig,
) -> Result<BoundResult, BoundsError> {
    let n = a.graph().n();
    check_weights(n, w)?;
    let support = w.support();
    if support.is_empty() {
        return Ok(BoundResult::exact(
            0.0,
            Certificate::CqpPair { x: vec![0.0; n], dual: vec![0.0; n] },
        ));
    }
    let form = a.tilde_form()?;
    let m_ss = form.i_plus.principal_submatrix(&support);
    let sqrt_w_s: Vec<f64> = support.iter().map(|&i| w.get(i).sqrt()).collect();
    let s = support.len();

    // Recession direction: d ≥ 0 supported on supp(w), (I+Ã)d = 0 there,
    // ⟨√w,d⟩ > 0. The null-space basis reduces this to an LP.
    let eig = m_ss.eigen()?;
    let scale = eig.lambda_max().max(1.0);
    let null_cols: Vec<usize> = (0..s)
        .filter(|&k| eig.eigenvalues[k].abs() <= 1e-9 * scale)
        .collect();
    if !null_cols.is_empty() {
        let basis: Vec<Vec<f64>> = null_cols.iter().map(|&k| eig.eigenvector(k)).collect();
        if let Some(direction) = recession_direction(&basis, &sqrt_w_s)? {
            // Verify the certificate before declaring +∞.
            let quad = m_ss.quadratic_form(&direction);
            let pairing: f64 = sqrt_w_s.iter().zip(&direction).map(|(a, b)| a * b).sum();
            let norm2: f64 = direction.iter().map(|v| v * v).sum();
            if quad <= 1e-10 * (1.0 + scale) * norm2 && pairing > 0.0 {
                let mut full = vec![0.0; n];
                for (k, &i) in support.iter().enumerate() {
                    full[i] = direction[k];
                }
                return Ok(BoundResult {
                    value: Value::Infinite,
                    certificate: Certificate::RecessionDirection(full),
                    gap: 0.0,
                    iterations: 0,
                    budget_exhausted: false,
                });
            }
        }
    }

    // Finite case: projected gradient with Armijo backtracking, with an
    // exact active-set polish once the iterates settle.
    let lipschitz = 2.0 * scale;
    let mut x = vec![0.0; s];
    let objective = |x: &[f64]| -> f64 {
        let mx = m_ss.apply(x);
        2.0 * sqrt_w_s.iter().zip(x).map(|(a, b)| a * b).sum::<f64>()
            - x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>()
    };
    let mut iterations = 0usize;
    loop {
        let mx = m_ss.apply(&x);
        let grad: Vec<f64> = (0..s).map(|i| 2.0 * sqrt_w_s[i] - 2.0 * mx[i]).collect();

        // dual − primal = 2(⟨x,Mx⟩ − ⟨√w,x⟩) once (Mx) ≥ √w holds.
        let comp_gap = 2.0
            * (x.iter().zip(&mx).map(|(a, b)| a * b).sum::<f64>()
                - sqrt_w_s.iter().zip(&x).map(|(a, b)| a * b).sum::<f64>());
        let dual_violation = (0..s)
            .map(|i| (sqrt_w_s[i] - mx[i]).max(0.0))
            .fold(0.0f64, f64::max);
        let obj = objective(&x);
        if comp_gap.abs() <= 0.5 * cfg.gap_tol * (1.0 + obj.abs()) && dual_violation <= 1e-9 {
            break;
        }
        if iterations >= cfg.max_iterations {
            break;
        }

        // Periodic exact polish on the inferred active set.
        if iterations % 50 == 25 {
            if let Some(polished) = active_set_polish(&m_ss, &sqrt_w_s, &x) {
                x = polished;
                continue;
            }
        }

        let f0 = obj;
        let mut step = 1.0 / lipschitz;
        let mut improved = false;
        for _ in 0..40 {
            let cand: Vec<f64> = (0..s).map(|i| (x[i] + step * grad[i]).max(0.0)).collect();
            let fc = objective(&cand);
            let moved: f64 = cand
                .iter()
                .zip(&x)
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>();
            if fc >= f0 + 0.25 * moved / step - 1e-18 {
                x = cand;
                improved = moved > 0.0;
                break;
            }
            step *= 0.5;
        }
        iterations += 1;
        if !improved {
            if let Some(polished) = active_set_polish(&m_ss, &sqrt_w_s, &x) {
                x = polished;
            }
            break;
        }
    }

    // Dual certificate y = (I+Ã)^{1/2} x̃, scaled up if the cover is
    // marginally short.
    let mut x_full = vec![0.0; n];
    for (k, &i) in support.iter().enumerate() {
        x_full[i] = x[k];
    }
    let b = form.sqrt_i_plus()?;
    let y = b.apply(&x_full);
    let cover = form.i_plus.apply(&x_full);
    let mut scale_up: f64 = 1.0;
    for (k, &i) in support.iter().enumerate() {
        if sqrt_w_s[k] > 0.0 {
            if cover[i] <= 0.0 {
                scale_up = f64::INFINITY;
            } else {
                scale_up = scale_up.max(sqrt_w_s[k] / cover[i]);
            }
        }
    }
    let primal = objective(&x);
    let (dual_norm2, y_cert) = if scale_up.is_finite() {
        let y_scaled: Vec<f64> = y.iter().map(|v| v * scale_up).collect();
        (y_scaled.iter().map(|v| v * v).sum::<f64>(), y_scaled)
    } else {
        (f64::INFINITY, y)
    };
    let gap = if dual_norm2.is_finite() { (dual_norm2 - primal).max(0.0) } else { f64::INFINITY };
    Ok(BoundResult {
        value: Value::Finite(primal),
        certificate: Certificate::CqpPair { x: x_full, dual: y_cert },
        gap,
        iterations,
        budget_exhausted: iterations >= cfg.max_iterations,
    })
}

/// LP search for v with Nv ≥ 0 and ⟨√w, Nv⟩ = 1 over the null-space
/// basis N; homogeneity makes the optimum 0 or 1.
fn recession_direction(
    basis: &[Vec<f64>],
    sqrt_w: &[f64],
) -> Result<Option<Vec<f64>>, BoundsError> {
    let r = basis.len();
    let s = sqrt_w.len();
    // Free coefficients split into positive and negative parts.
    let pairings: Vec<f64> = basis
        .iter()
        .map(|b| b.iter().zip(sqrt_w).map(|(a, c)| a * c).sum())
        .collect();
    let mut objective = Vec::with_capacity(2 * r);
    objective.extend(pairings.iter().cloned());
    objective.extend(pairings.iter().map(|p| -p));
    let mut lp = LinearProgram::new(Sense::Maximize, objective.clone());
    for i in 0..s {
        let mut coeffs = Vec::with_capacity(2 * r);
        for b in basis {
            coeffs.push(b[i]);
        }
        for b in basis {
            coeffs.push(-b[i]);
        }
        lp.constrain(coeffs, Relation::Ge, 0.0);
    }
    lp.constrain(objective, Relation::Le, 1.0);
    let sol = simplex::solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal || sol.objective < 0.5 {
        return Ok(None);
    }
    let mut d = vec![0.0; s];
    for (k, b) in basis.iter().enumerate() {
        let coeff = sol.primal[k] - sol.primal[r + k];
        for i in 0..s {
            d[i] += coeff * b[i];
        }
    }
    // Clamp roundoff negatives; the caller re-verifies the certificate.
    for v in d.iter_mut() {
        if *v < 0.0 && *v > -1e-9 {
            *v = 0.0;
        }
    }
    if d.iter().any(|&v| v < 0.0) {
        return Ok(None);
    }
    Ok(Some(d))
}

/// Solves the KKT system on the inferred free set and accepts the result
/// only if it satisfies the full optimality conditions.
fn active_set_polish(m: &SymMatrix, sqrt_w: &[f64], x: &[f64]) -> Option<Vec<f64>> {
    let s = x.len();
    let free: Vec<usize> = (0..s).filter(|&i| x[i] > 1e-10).collect();
    if free.is_empty() {
        return None;
    }
    let m_ff = m.principal_submatrix(&free);
    let rhs: Vec<f64> = free.iter().map(|&i| sqrt_w[i]).collect();
    let pinv = crate::linalg::pinv(&m_ff).ok()?;
    let x_f = pinv.apply(&rhs);
    let mut polished = vec![0.0; s];
    for (k, &i) in free.iter().enumerate() {
        if x_f[k] < -1e-12 {
            return None;
        }
        polished[i] = x_f[k].max(0.0);
    }
    // KKT: (M x)ᵢ ≥ √wᵢ everywhere; complementarity holds by construction
    // on the free set.
    let mx = m.apply(&polished);
    for i in 0..s {
        if mx[i] < sqrt_w[i] - 1e-9 * (1.0 + sqrt_w[i]) {
            return None;
        }
    }
    Some(polished)
}

/// Comparison of Ξ(A,w) against L(A,w), with the rank-one dual
/// cross-check when A is nonnegative.
#[derive(Debug, Clone)]
pub struct XiLuzReport {
    pub xi_value: f64,
    pub xi_gap: f64,
    pub luz_value: Value,
    pub nonneg: bool,
    /// min over i of diag(B yyᵀ B)ᵢ − wᵢ for the Luz dual vector y
    /// (≥ −tol certifies feasibility in the dual SDP).
    pub rank_one_cover_slack: Option<f64>,
    /// |tr(yyᵀ) − Ξ(A,w)|.
    pub rank_one_trace_diff: Option<f64>,
}

impl XiLuzReport {
    /// Ξ ≤ L with additive slack.
    pub fn xi_le_luz(&self, slack: f64) -> bool {
        Value::Finite(self.xi_value - slack).le(&self.luz_value, 0.0)
    }

    /// |Ξ − L| when both finite.
    pub fn equality_gap(&self) -> Option<f64> {
        match self.luz_value {
            Value::Finite(l) => Some((self.xi_value - l).abs()),
            Value::Infinite => None,
        }
    }
}

pub fn xi_vs_luz(
    a: &GeneralizedAdjacency,
    w: &WeightVector,
    cfg: &SdpConfig,
) -> Result<XiLuzReport, BoundsError> {
    let xi_result = xi(a, w, cfg)?;
    let luz_result = luz(a, w, &LuzConfig::default())?;
    let nonneg = a.is_nonneg();
    let (mut cover_slack, mut trace_diff) = (None, None);
    if nonneg {
        if let (Value::Finite(_), Certificate::CqpPair { dual, .. }) =
            (&luz_result.value, &luz_result.certificate)
        {
            let b = a.tilde_form()?.sqrt_i_plus()?;
            let y_outer = SymMatrix::outer(dual);
            let report = sdp::check_dual_feasible(&b, &y_outer, w)?;
            cover_slack = Some(report.min_cover_slack);
            trace_diff = Some((report.trace - xi_result.value.finite()).abs());
        }
    }
    Ok(XiLuzReport {
        xi_value: xi_result.value.finite(),
        xi_gap: xi_result.gap,
        luz_value: luz_result.value,
        nonneg,
        rank_one_cover_slack: cover_slack,
        rank_one_trace_diff: trace_diff,
    })
}

/// Best-A search settings; evaluations of the objective (one SDP or
/// eigensolve per candidate A) are the budgeted unit.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub budget: usize,
    pub seed: u64,
    /// Stop once |value − reference| drops below this.
    pub reference_tol: f64,
    pub multistarts: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 200, seed: 1, reference_tol: 1e-4, multistarts: 2 }
    }
}

/// min over A ∈ 𝒜_G (or 𝒜_G⁺) of Ξ(A,w): equals θ(G,w) (resp. θ⁺(G,w))
/// at the optimum. Coordinate descent over edge weights with
/// golden-section line search, multistarted from random members; the
/// theta value from the SDP engine is the stopping reference. `gap` in
/// the result reports value − reference.
pub fn best_xi_over_a(
    g: &Graph,
    w: &WeightVector,
    nonneg: bool,
    search: &SearchConfig,
    cfg: &SdpConfig,
) -> Result<BoundResult, BoundsError> {
    check_weights(g.n(), w)?;
    let variant = if nonneg { ThetaVariant::ThetaPlus } else { ThetaVariant::Theta };
    let reference =
        sdp::solve_theta_body(&ThetaBodyProblem::new(g.clone(), w.clone(), variant)?, cfg)?
            .primal_objective;
    let evaluate = |weights: &[f64]| -> Result<f64, BoundsError> {
        let a = GeneralizedAdjacency::from_edge_weights(g, weights)
            .expect("weights sized by edge count");
        Ok(xi(&a, w, cfg)?.value.finite())
    };
    run_edge_search(g, nonneg, search, reference, false, evaluate)
}

/// max over A ∈ 𝒜_G (or 𝒜_G⁺) of H(A,w): equals θ(ḡ,w) (resp. θ′(ḡ,w))
/// at the optimum.
pub fn best_hoffman_over_a(
    g: &Graph,
    w: &WeightVector,
    nonneg: bool,
    search: &SearchConfig,
    cfg: &SdpConfig,
) -> Result<BoundResult, BoundsError> {
    check_weights(g.n(), w)?;
    let complement = g.complement();
    let variant = if nonneg { ThetaVariant::ThetaPrime } else { ThetaVariant::Theta };
    let reference =
        sdp::solve_theta_body(&ThetaBodyProblem::new(complement, w.clone(), variant)?, cfg)?
            .primal_objective;
    let evaluate = |weights: &[f64]| -> Result<f64, BoundsError> {
        let a = GeneralizedAdjacency::from_edge_weights(g, weights)
            .expect("weights sized by edge count");
        Ok(hoffman(&a, w)?.value.finite())
    };
    run_edge_search(g, nonneg, search, reference, true, evaluate)
}

fn run_edge_search(
    g: &Graph,
    nonneg: bool,
    search: &SearchConfig,
    reference: f64,
    maximize: bool,
    evaluate: impl Fn(&[f64]) -> Result<f64, BoundsError>,
) -> Result<BoundResult, BoundsError> {
    let ne = g.edge_count();
    let sign = if maximize { -1.0 } else { 1.0 };
    let mut evals = 0usize;

    if ne == 0 {
        // 𝒜_G = {0}: nothing to search.
        let value = evaluate(&[])?;
        return Ok(BoundResult {
            value: Value::Finite(value),
            certificate: Certificate::EdgeWeights(vec![]),
            gap: value - reference,
            iterations: 1,
            budget_exhausted: false,
        });
    }

    // Internally minimize sign·value.
    let mut best_score = f64::INFINITY;
    let mut best_weights: Vec<f64> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(search.seed);
    let mut budget_exhausted = false;

    let mut starts: Vec<Vec<f64>> = vec![vec![1.0; ne]];
    for _ in 0..search.multistarts {
        let s: Vec<f64> = (0..ne)
            .map(|_| {
                let u: f64 = rng.gen();
                if nonneg {
                    0.05 + 0.95 * u
                } else {
                    2.0 * u - 1.0
                }
            })
            .collect();
        starts.push(s);
    }

    // Ties between equal scores resolve to the lexicographically smaller
    // weight vector, keeping multistart reductions deterministic.
    let better = |score: f64, weights: &[f64], best: f64, best_w: &[f64]| -> bool {
        score < best || (score == best && weights < best_w)
    };

    'outer: for start in starts {
        let mut current = start;
        let score0 = match try_eval(&evaluate, &current, &mut evals, search.budget) {
            Some(v) => sign * v?,
            None => {
                budget_exhausted = true;
                break 'outer;
            }
        };
        let mut score = score0;
        if better(score, &current, best_score, &best_weights) {
            best_score = score;
            best_weights = current.clone();
        }
        if (best_score * sign - reference).abs() <= search.reference_tol {
            break 'outer;
        }

        // Cyclic coordinate descent with golden-section line search.
        for _sweep in 0..6 {
            let mut sweep_improved = false;
            for e in 0..ne {
                let center = current[e];
                let lo = if nonneg { (center - 1.0).max(0.0) } else { center - 1.0 };
                let hi = center + 1.0;
                let mut probe = |t: f64| -> Option<Result<f64, BoundsError>> {
                    let mut candidate = current.clone();
                    candidate[e] = t;
                    try_eval(&evaluate, &candidate, &mut evals, search.budget)
                        .map(|r| r.map(|v| sign * v))
                };
                match golden_section(lo, hi, 8, &mut probe) {
                    GoldenOutcome::Found { argument, score: found } => {
                        let found = found?;
                        if found < score {
                            score = found;
                            current[e] = argument;
                            sweep_improved = true;
                        }
                    }
                    GoldenOutcome::BudgetExhausted => {
                        budget_exhausted = true;
                        break 'outer;
                    }
                }
                if better(score, &current, best_score, &best_weights) {
                    best_score = score;
                    best_weights = current.clone();
                }
                if (best_score * sign - reference).abs() <= search.reference_tol {
                    break 'outer;
                }
            }
            if !sweep_improved {
                break;
            }
        }
    }

    let value = best_score * sign;
    Ok(BoundResult {
        value: Value::Finite(value),
        certificate: Certificate::EdgeWeights(best_weights),
        gap: value - reference,
        iterations: evals,
        budget_exhausted,
    })
}

fn try_eval(
    evaluate: &impl Fn(&[f64]) -> Result<f64, BoundsError>,
    weights: &[f64],
    evals: &mut usize,
    budget: usize,
) -> Option<Result<f64, BoundsError>> {
    if *evals >= budget {
        return None;
    }
    *evals += 1;
    Some(evaluate(weights))
}

enum GoldenOutcome {
    Found { argument: f64, score: Result<f64, BoundsError> },
    BudgetExhausted,
}

fn golden_section(
    mut lo: f64,
    mut hi: f64,
    steps: usize,
    eval: &mut impl FnMut(f64) -> Option<Result<f64, BoundsError>>,
) -> GoldenOutcome {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let mut fa = match eval(a) {
        Some(Ok(v)) => v,
        Some(Err(e)) => return GoldenOutcome::Found { argument: a, score: Err(e) },
        None => return GoldenOutcome::BudgetExhausted,
    };
    let mut fb = match eval(b) {
        Some(Ok(v)) => v,
        Some(Err(e)) => return GoldenOutcome::Found { argument: b, score: Err(e) },
        None => return GoldenOutcome::BudgetExhausted,
    };
    for _ in 0..steps {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = match eval(a) {
                Some(Ok(v)) => v,
                Some(Err(e)) => return GoldenOutcome::Found { argument: a, score: Err(e) },
                None => return GoldenOutcome::BudgetExhausted,
            };
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = match eval(b) {
                Some(Ok(v)) => v,
                Some(Err(e)) => return GoldenOutcome::Found { argument: b, score: Err(e) },
                None => return GoldenOutcome::BudgetExhausted,
            };
        }
    }
    if fa <= fb {
        GoldenOutcome::Found { argument: a, score: Ok(fa) }
    } else {
        GoldenOutcome::Found { argument: b, score: Ok(fb) }
    }
}

/// The convex corners whose membership tests the library exposes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Body {
    /// U_A = {x ≥ 0 : (I+Ã)^{1/2} Diag(x) (I+Ã)^{1/2} ⪯ I}, the unit
    /// corner of H(A,·) and feasible region of the Ξ SDP.
    UA,
    /// 𝓗_A = {x ≥ 0 : Ξ(A,x) ≤ 1}, the unit corner of Ξ(A,·).
    HA,
    /// TH(G); tested through θ(ḡ,x) ≤ 1 via the antiblocking identity.
    Theta,
    /// TH′(G); tested through θ⁺(ḡ,x) ≤ 1.
    ThetaPrime,
    /// TH⁺(G); tested through θ′(ḡ,x) ≤ 1.
    ThetaPlus,
    Stab,
    Qstab,
}

#[derive(Debug, Clone)]
pub struct CornerMembership {
    /// Gauge value deciding membership (≤ 1 means inside).
    pub value: f64,
    pub inside: bool,
}

pub fn corner_membership(
    body: Body,
    point: &WeightVector,
    g: &Graph,
    a: Option<&GeneralizedAdjacency>,
    cfg: &SdpConfig,
) -> Result<CornerMembership, BoundsError> {
    check_weights(g.n(), point)?;
    let need_a = || {
        a.ok_or_else(|| {
            BoundsError::NotApplicable("body requires a generalized adjacency matrix".into())
        })
    };
    let (value, tolerance) = match body {
        Body::UA => {
            let form = need_a()?.tilde_form()?;
            let value = hoffman_from_form(&form, point)?.value.finite();
            (value, tol::MEMBERSHIP)
        }
        Body::HA => (xi(need_a()?, point, cfg)?.value.finite(), 1e-6),
        Body::Theta | Body::ThetaPrime | Body::ThetaPlus => {
            let variant = match body {
                Body::Theta => ThetaVariant::Theta,
                Body::ThetaPrime => ThetaVariant::ThetaPlus,
                _ => ThetaVariant::ThetaPrime,
            };
            let problem = ThetaBodyProblem::new(g.complement(), point.clone(), variant)?;
            (sdp::solve_theta_body(&problem, cfg)?.primal_objective, 1e-6)
        }
        Body::Stab => (exact::chi_f(g, point)?.value.finite(), tol::MEMBERSHIP),
        Body::Qstab => {
            let cliques = exact::enumerate_stable_sets(&g.complement(), true)?;
            let mut worst = 0.0f64;
            for &k in cliques.sets() {
                let total: f64 = exact::StableSetFamily::vertices(k)
                    .iter()
                    .map(|&v| point.get(v))
                    .sum();
                worst = worst.max(total);
            }
            (worst, tol::MEMBERSHIP)
        }
    };
    Ok(CornerMembership { value, inside: value <= 1.0 + tolerance })
}
