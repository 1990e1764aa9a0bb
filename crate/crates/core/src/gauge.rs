//! Generic engine for positive definite monotone gauges: evaluate gauge
//! polars numerically from value/subgradient oracles.
//!
//! The polar κ°(z) = max{⟨w,z⟩ : w ≥ 0, κ(w) ≤ 1} is computed by Kelley
//! cutting planes: positive homogeneity turns every subgradient g at a
//! query point into the valid inequality ⟨g,w⟩ ≤ 1 for the unit corner,
//! the master LP over accumulated cuts yields upper bounds, and rescaled
//! master optimizers yield feasible lower bounds. This makes the duality
//! between the α-side bounds (Ξ, L, θ) and the χ_f-side bounds (H, θ̄)
//! executable.

use crate::bounds::{self, BoundsError, LuzConfig};
use crate::exact;
use crate::graph::{GeneralizedAdjacency, Graph, WeightVector};

use crate::result::{Certificate, Value};
use crate::sdp::{self, SdpConfig, ThetaBodyProblem, ThetaVariant};
use crate::simplex::{self, LinearProgram, LpStatus, Relation, Sense};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaugeError {
    #[error("oracle evaluation failed: {0}")]
    Oracle(#[from] BoundsError),
    #[error("oracle returned a non-gauge value: {0}")]
    BadOracle(String),
    #[error("master lp: {0}")]
    Lp(#[from] simplex::LpError),
    #[error("master lp ended {0:?}")]
    UnexpectedLpStatus(LpStatus),
}

type ValueFn = dyn Fn(&[f64]) -> Result<f64, BoundsError>;
type SubgradientFn = dyn Fn(&[f64]) -> Result<Vec<f64>, BoundsError>;

/// Callable description of a positive definite monotone gauge: its value
/// and one subgradient (of the convex function κ) per query point.
pub struct GaugeOracle {
    dimension: usize,
    value: Box<ValueFn>,
    subgradient: Box<SubgradientFn>,
}

impl GaugeOracle {
    pub fn new(
        dimension: usize,
        value: impl Fn(&[f64]) -> Result<f64, BoundsError> + 'static,
        subgradient: impl Fn(&[f64]) -> Result<Vec<f64>, BoundsError> + 'static,
    ) -> Self {
        GaugeOracle { dimension, value: Box::new(value), subgradient: Box::new(subgradient) }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn value(&self, w: &[f64]) -> Result<f64, BoundsError> {
        (self.value)(w)
    }

    pub fn subgradient(&self, w: &[f64]) -> Result<Vec<f64>, BoundsError> {
        (self.subgradient)(w)
    }

    /// H(A,·): value by the largest eigenvalue of (I+Ã)^{1/2} W (I+Ã)^{1/2};
    /// subgradient ((I+Ã)^{1/2}u)² from the top unit eigenvector u.
    pub fn hoffman(a: &GeneralizedAdjacency) -> Result<Self, BoundsError> {
        let b = a.tilde_form()?.sqrt_i_plus()?;
        let n = b.order();
        let b2 = b.clone();
        Ok(GaugeOracle::new(
            n,
            move |w| Ok(b.scaled_congruence(w).eigen()?.lambda_max()),
            move |w| {
                let eig = b2.scaled_congruence(w).eigen()?;
                let mut u = eig.eigenvector(n - 1);
                let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
                for v in u.iter_mut() {
                    *v /= norm;
                }
                Ok(b2.apply(&u).iter().map(|v| v * v).collect())
            },
        ))
    }

    /// α(G,·): the exact stability-number gauge; subgradients are the
    /// incidence vectors of maximizing stable sets.
    pub fn alpha(g: &Graph) -> Self {
        let g1 = g.clone();
        let g2 = g.clone();
        GaugeOracle::new(
            g.n(),
            move |w| Ok(exact::alpha(&g1, &clamped(w))?.value.finite()),
            move |w| {
                let r = exact::alpha(&g2, &clamped(w))?;
                match r.certificate {
                    Certificate::StableSet(s) => {
                        let mut g = vec![0.0; g2.n()];
                        for v in s {
                            g[v] = 1.0;
                        }
                        Ok(g)
                    }
                    _ => unreachable!("alpha returns a stable set"),
                }
            },
        )
    }

    /// χ_f(G,·): the covering-LP gauge; subgradients are the LP duals,
    /// points of QSTAB of the complement.
    pub fn chi_f(g: &Graph) -> Self {
        let g1 = g.clone();
        let g2 = g.clone();
        GaugeOracle::new(
            g.n(),
            move |w| Ok(exact::chi_f(&g1, &clamped(w))?.value.finite()),
            move |w| {
                let r = exact::chi_f(&g2, &clamped(w))?;
                match r.certificate {
                    Certificate::FractionalCover { dual, .. } => Ok(dual),
                    _ => unreachable!("chi_f returns a cover"),
                }
            },
        )
    }

    /// Ξ(A,·): subgradients are the primal SDP maximizers, points of the
    /// corner U_A.
    pub fn xi(a: &GeneralizedAdjacency, cfg: SdpConfig) -> Self {
        let a1 = a.clone();
        let a2 = a.clone();
        GaugeOracle::new(
            a.graph().n(),
            move |w| Ok(bounds::xi(&a1, &clamped(w), &cfg)?.value.finite()),
            move |w| {
                let r = bounds::xi(&a2, &clamped(w), &cfg)?;
                match r.certificate {
                    Certificate::SdpPair { x, .. } => Ok(x),
                    _ => unreachable!("xi returns an sdp pair"),
                }
            },
        )
    }

    /// L(A,·) for nonnegative A (where it is a gauge and equals Ξ);
    /// values from the CQP, subgradients from the Ξ primal maximizer.
    pub fn luz(a: &GeneralizedAdjacency, cfg: SdpConfig) -> Self {
        let a1 = a.clone();
        let a2 = a.clone();
        GaugeOracle::new(
            a.graph().n(),
            move |w| match bounds::luz(&a1, &clamped(w), &LuzConfig::default())?.value {
                Value::Finite(v) => Ok(v),
                Value::Infinite => Err(BoundsError::NotApplicable(
                    "Luz bound is +inf; not a gauge for this matrix".into(),
                )),
            },
            move |w| {
                let r = bounds::xi(&a2, &clamped(w), &cfg)?;
                match r.certificate {
                    Certificate::SdpPair { x, .. } => Ok(x),
                    _ => unreachable!("xi returns an sdp pair"),
                }
            },
        )
    }

    /// θ(G,·): subgradients are diag(X*) of the optimal theta-body point.
    pub fn theta(g: &Graph, variant: ThetaVariant, cfg: SdpConfig) -> Self {
        let g1 = g.clone();
        let g2 = g.clone();
        GaugeOracle::new(
            g.n(),
            move |w| {
                let p = ThetaBodyProblem::new(g1.clone(), clamped(w), variant)?;
                Ok(sdp::solve_theta_body(&p, &cfg)?.primal_objective)
            },
            move |w| {
                let p = ThetaBodyProblem::new(g2.clone(), clamped(w), variant)?;
                Ok(sdp::solve_theta_body(&p, &cfg)?.primal_x)
            },
        )
    }

    /// The ‖·‖₁ gauge on the orthant (polar of ‖·‖∞).
    pub fn norm_1(dimension: usize) -> Self {
        GaugeOracle::new(
            dimension,
            |w| Ok(w.iter().sum()),
            move |w| Ok(vec![1.0; w.len()]),
        )
    }

    /// The ‖·‖∞ gauge on the orthant.
    pub fn norm_inf(dimension: usize) -> Self {
        GaugeOracle::new(
            dimension,
            |w| Ok(w.iter().cloned().fold(0.0, f64::max)),
            |w| {
                let mut g = vec![0.0; w.len()];
                let mut best = 0;
                for (i, &v) in w.iter().enumerate() {
                    if v > w[best] {
                        best = i;
                    }
                }
                g[best] = 1.0;
                Ok(g)
            },
        )
    }
}

fn clamped(w: &[f64]) -> WeightVector {
    WeightVector::new(w.iter().map(|&v| v.max(0.0)).collect()).expect("clamped to nonnegative")
}

/// Result of a cutting-plane polar evaluation: a certified bracket
/// [lower, upper] around κ°(z) and the feasible maximizer attaining the
/// lower bound.
#[derive(Debug, Clone)]
pub struct PolarEvaluation {
    pub query: Vec<f64>,
    /// The certified value (equals `lower`).
    pub value: f64,
    /// w* with κ(w*) ≤ 1 up to oracle noise and ⟨w*,z⟩ = lower.
    pub maximizer: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
    pub cuts: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct PolarConfig {
    /// Relative bracket width target: upper − lower ≤ tol·(1+lower).
    pub tol: f64,
    pub max_cuts: usize,
}

impl Default for PolarConfig {
    fn default() -> Self {
        PolarConfig { tol: 1e-5, max_cuts: 400 }
    }
}

/// Kelley cutting-plane evaluation of κ°(z) = max{⟨w,z⟩ : w ≥ 0, κ(w) ≤ 1}.
pub fn polar(
    oracle: &GaugeOracle,
    z: &[f64],
    cfg: &PolarConfig,
) -> Result<PolarEvaluation, GaugeError> {
    let n = oracle.dimension();
    assert_eq!(z.len(), n, "query dimension mismatch");
    if z.iter().all(|&v| v == 0.0) {
        return Ok(PolarEvaluation {
            query: z.to_vec(),
            value: 0.0,
            maximizer: vec![0.0; n],
            lower: 0.0,
            upper: 0.0,
            cuts: 0,
            converged: true,
        });
    }

    // Positive definiteness bounds the unit corner inside the box
    // wᵢ ≤ 1/κ(eᵢ), which makes the first master iterate finite.
    let mut box_bound = vec![0.0; n];
    for i in 0..n {
        let mut e = vec![0.0; n];
        e[i] = 1.0;
        let k = oracle.value(&e)?;
        if !(k > 0.0) {
            return Err(GaugeError::BadOracle(format!(
                "κ(e_{i}) = {k}; gauge must be positive definite"
            )));
        }
        box_bound[i] = 1.0 / k;
    }

    let mut cuts: Vec<Vec<f64>> = Vec::new();
    let mut lower = 0.0f64;
    let mut maximizer = vec![0.0; n];
    let mut upper = f64::INFINITY;

    for iteration in 0..cfg.max_cuts {
        let mut lp = LinearProgram::new(Sense::Maximize, z.to_vec());
        lp.upper_bounds = box_bound.iter().map(|&b| Some(b)).collect();
        for g in &cuts {
            lp.constrain(g.clone(), Relation::Le, 1.0);
        }
        let sol = simplex::solve_lp(&lp)?;
        if sol.status != LpStatus::Optimal {
            return Err(GaugeError::UnexpectedLpStatus(sol.status));
        }
        upper = sol.objective;
        let w_t: Vec<f64> = sol.primal.iter().map(|&v| v.max(0.0)).collect();

        let k_t = oracle.value(&w_t)?;
        if k_t > 1e-14 {
            let pairing: f64 = w_t.iter().zip(z).map(|(a, b)| a * b).sum();
            let candidate = pairing / k_t;
            if candidate > lower {
                lower = candidate;
                maximizer = w_t.iter().map(|&v| v / k_t).collect();
            }
        }
        if upper - lower <= cfg.tol * (1.0 + lower) {
            return Ok(PolarEvaluation {
                query: z.to_vec(),
                value: lower,
                maximizer,
                lower,
                upper,
                cuts: iteration,
                converged: true,
            });
        }
        cuts.push(oracle.subgradient(&w_t)?);
    }

    Ok(PolarEvaluation {
        query: z.to_vec(),
        value: lower,
        maximizer,
        lower,
        upper,
        cuts: cfg.max_cuts,
        converged: false,
    })
}

/// Report of gauge-axiom spot checks on random inputs; violations are
/// relative to 1 + the magnitudes involved.
#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub homogeneity: f64,
    pub sublinearity: f64,
    pub monotonicity: f64,
    /// min κ(w)/‖w‖∞ observed; positive definiteness wants this > 0.
    pub definiteness_ratio: f64,
    pub trials: usize,
}

impl AxiomReport {
    pub fn max_violation(&self) -> f64 {
        self.homogeneity.max(self.sublinearity).max(self.monotonicity)
    }
}

/// Samples random weight pairs and scalars, reporting the worst violation
/// of each gauge axiom.
pub fn check_gauge_axioms(
    oracle: &GaugeOracle,
    trials: usize,
    seed: u64,
) -> Result<AxiomReport, GaugeError> {
    let n = oracle.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = AxiomReport {
        homogeneity: 0.0,
        sublinearity: 0.0,
        monotonicity: 0.0,
        definiteness_ratio: f64::INFINITY,
        trials,
    };
    for _ in 0..trials {
        let w: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let z: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 2.0).collect();
        let lambda: f64 = 0.1 + 1.9 * rng.gen::<f64>();

        let kw = oracle.value(&w)?;
        let kz = oracle.value(&z)?;

        let scaled: Vec<f64> = w.iter().map(|v| v * lambda).collect();
        let k_scaled = oracle.value(&scaled)?;
        let h = (k_scaled - lambda * kw).abs() / (1.0 + lambda * kw);
        report.homogeneity = report.homogeneity.max(h);

        let sum: Vec<f64> = w.iter().zip(&z).map(|(a, b)| a + b).collect();
        let k_sum = oracle.value(&sum)?;
        let s = (k_sum - kw - kz).max(0.0) / (1.0 + kw + kz);
        report.sublinearity = report.sublinearity.max(s);

        // w ≤ w + z componentwise.
        let m = (kw - k_sum).max(0.0) / (1.0 + k_sum);
        report.monotonicity = report.monotonicity.max(m);

        let sup = w.iter().cloned().fold(0.0, f64::max);
        if sup > 0.0 {
            report.definiteness_ratio = report.definiteness_ratio.min(kw / sup);
        }
    }
    Ok(report)
}

/// Deviation report for the involution κ°° = κ.
#[derive(Debug, Clone)]
pub struct RoundtripReport {
    pub max_relative_deviation: f64,
    pub points: usize,
    pub all_converged: bool,
}

/// Evaluates κ°° through a nested cutting plane (the outer evaluation
/// queries inner polar evaluations as its oracle) and compares with κ.
/// The outer tolerance is 10× the inner one to absorb error compounding.
pub fn polar_roundtrip(
    oracle: &GaugeOracle,
    points: &[Vec<f64>],
    inner_cfg: &PolarConfig,
) -> Result<RoundtripReport, GaugeError> {
    let outer_cfg = PolarConfig { tol: inner_cfg.tol * 10.0, max_cuts: inner_cfg.max_cuts };
    let mut worst = 0.0f64;
    let mut all_converged = true;

    for p in points {
        // Outer polar of the inner polar, evaluated without storing
        // closures over borrowed data: run Kelley manually with the inner
        // polar as the oracle.
        let n = oracle.dimension();
        let mut box_bound = vec![0.0; n];
        for i in 0..n {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            let k = polar(oracle, &e, inner_cfg)?.value;
            if !(k > 0.0) {
                return Err(GaugeError::BadOracle(format!("κ°(e_{i}) = {k} not positive")));
            }
            box_bound[i] = 1.0 / k;
        }
        let mut cuts: Vec<Vec<f64>> = Vec::new();
        let mut lower = 0.0f64;
        let mut converged = false;
        for _ in 0..outer_cfg.max_cuts {
            let mut lp = LinearProgram::new(Sense::Maximize, p.clone());
            lp.upper_bounds = box_bound.iter().map(|&b| Some(b)).collect();
            for g in &cuts {
                lp.constrain(g.clone(), Relation::Le, 1.0);
            }
            let sol = simplex::solve_lp(&lp)?;
            if sol.status != LpStatus::Optimal {
                return Err(GaugeError::UnexpectedLpStatus(sol.status));
            }
            let upper = sol.objective;
            let z_t: Vec<f64> = sol.primal.iter().map(|&v| v.max(0.0)).collect();
            let eval = polar(oracle, &z_t, inner_cfg)?;
            if eval.value > 1e-14 {
                let pairing: f64 = z_t.iter().zip(p).map(|(a, b)| a * b).sum();
                lower = lower.max(pairing / eval.value);
            }
            if upper - lower <= outer_cfg.tol * (1.0 + lower) {
                converged = true;
                break;
            }
            // The inner maximizer is a subgradient of κ° at z_t.
            cuts.push(eval.maximizer);
        }
        all_converged &= converged;
        let direct = oracle.value(p)?;
        let deviation = (lower - direct).abs() / (1.0 + direct.abs());
        worst = worst.max(deviation);
    }
    Ok(RoundtripReport {
        max_relative_deviation: worst,
        points: points.len(),
        all_converged,
    })
}

/// Outcome of the inclusion-reversal check: κ₁ ≤ κ₂ pointwise should give
/// κ₂° ≤ κ₁° pointwise.
#[derive(Debug, Clone)]
pub struct ReversalReport {
    pub premise_ok: bool,
    pub max_premise_violation: f64,
    pub max_reversal_violation: f64,
}

pub fn reversal_check(
    k1: &GaugeOracle,
    k2: &GaugeOracle,
    points: &[Vec<f64>],
    cfg: &PolarConfig,
) -> Result<ReversalReport, GaugeError> {
    let mut premise_violation = 0.0f64;
    for p in points {
        let a = k1.value(p)?;
        let b = k2.value(p)?;
        premise_violation = premise_violation.max((a - b).max(0.0) / (1.0 + b));
    }
    if premise_violation > 1e-6 {
        return Ok(ReversalReport {
            premise_ok: false,
            max_premise_violation: premise_violation,
            max_reversal_violation: f64::NAN,
        });
    }
    let mut reversal_violation = 0.0f64;
    for p in points {
        let p1 = polar(k1, p, cfg)?;
        let p2 = polar(k2, p, cfg)?;
        // Compare certified brackets: κ₂° ≤ κ₁° must hold, so the
        // violation is lower₂ − upper₁ when positive.
        reversal_violation = reversal_violation.max((p2.lower - p1.upper).max(0.0) / (1.0 + p1.upper));
    }
    Ok(ReversalReport {
        premise_ok: true,
        max_premise_violation: premise_violation,
        max_reversal_violation: reversal_violation,
    })
}

/// Minkowski functional of the polytopal corner {y ≥ 0 : Ry ≤ 1},
/// computed by LP: min μ s.t. ⟨rᵢ,x⟩ ≤ μ for every row rᵢ.
pub fn minkowski_gauge_lp(rows: &[Vec<f64>], x: &[f64]) -> Result<f64, GaugeError> {
    // Single variable μ.
    let mut lp = LinearProgram::new(Sense::Minimize, vec![1.0]);
    for r in rows {
        let pairing: f64 = r.iter().zip(x).map(|(a, b)| a * b).sum();
        lp.constrain(vec![1.0], Relation::Ge, pairing);
    }
    let sol = simplex::solve_lp(&lp)?;
    if sol.status != LpStatus::Optimal {
        return Err(GaugeError::UnexpectedLpStatus(sol.status));
    }
    Ok(sol.objective)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;

    fn pcfg() -> PolarConfig {
        PolarConfig::default()
    }

    #[test]
    fn polar_of_norm1_is_norm_inf() {
        let oracle = GaugeOracle::norm_1(2);
        let eval = polar(&oracle, &[2.0, 3.0], &pcfg()).unwrap();
        assert!(eval.converged);
        assert!((eval.value - 3.0).abs() <= 1e-4, "{}", eval.value);
        // Maximizer is (essentially) e₂.
        assert!((eval.maximizer[1] - 1.0).abs() <= 1e-6);
        assert!(eval.maximizer[0].abs() <= 1e-6);
    }

    #[test]
    fn polar_of_hoffman_is_xi() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let a = c5.adjacency_matrix();
        let oracle = GaugeOracle::hoffman(&a).unwrap();
        let eval = polar(&oracle, &[1.0; 5], &pcfg()).unwrap();
        assert!(eval.converged, "bracket [{}, {}]", eval.lower, eval.upper);
        assert!((eval.value - 5.0f64.sqrt()).abs() <= 1e-3, "{}", eval.value);
        // The returned maximizer is feasible for the unit corner.
        let k = oracle.value(&eval.maximizer).unwrap();
        assert!(k <= 1.0 + 1e-6, "κ(w*) = {k}");
        let pairing: f64 = eval.maximizer.iter().sum();
        assert!((pairing - eval.lower).abs() <= 1e-9);
    }

    #[test]
    fn polar_of_alpha_is_chi_f() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let oracle = GaugeOracle::alpha(&c5);
        let eval = polar(&oracle, &[1.0; 5], &pcfg()).unwrap();
        assert!((eval.value - 2.5).abs() <= 1e-4, "{}", eval.value);
    }

    #[test]
    fn axioms_hold_for_norms_and_fail_for_quadratic() {
        let l1 = GaugeOracle::norm_1(4);
        let report = check_gauge_axioms(&l1, 50, 7).unwrap();
        assert!(report.max_violation() <= 1e-12, "{report:?}");

        let broken = GaugeOracle::new(
            3,
            |w| Ok(w.iter().map(|v| v * v).sum()),
            |w| Ok(w.iter().map(|v| 2.0 * v).collect()),
        );
        let report = check_gauge_axioms(&broken, 50, 7).unwrap();
        assert!(report.homogeneity > 1e-2, "{report:?}");
    }

    #[test]
    fn axioms_hold_for_xi_on_petersen() {
        let p = GraphFamily::Petersen.build().unwrap();
        let oracle = GaugeOracle::xi(&p.adjacency_matrix(), SdpConfig::default());
        let report = check_gauge_axioms(&oracle, 12, 3).unwrap();
        assert!(report.max_violation() <= 1e-6, "{report:?}");
        assert!(report.definiteness_ratio > 0.5);
    }

    #[test]
    fn roundtrip_norm1() {
        let oracle = GaugeOracle::norm_1(3);
        let points = vec![vec![1.0, 2.0, 0.5], vec![0.2, 0.0, 1.0]];
        let report = polar_roundtrip(&oracle, &points, &PolarConfig { tol: 1e-7, max_cuts: 200 })
            .unwrap();
        assert!(report.max_relative_deviation <= 1e-6, "{report:?}");
    }

    #[test]
    fn roundtrip_alpha_on_path() {
        let p3 = GraphFamily::Path(3).build().unwrap();
        let oracle = GaugeOracle::alpha(&p3);
        let points = vec![vec![1.0, 1.0, 1.0], vec![2.0, 0.5, 1.0]];
        let report = polar_roundtrip(&oracle, &points, &PolarConfig { tol: 1e-5, max_cuts: 300 })
            .unwrap();
        assert!(report.max_relative_deviation <= 1e-4, "{report:?}");
    }

    #[test]
    fn reversal_alpha_vs_xi() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let alpha = GaugeOracle::alpha(&c5);
        let xi = GaugeOracle::xi(&c5.adjacency_matrix(), SdpConfig::default());
        let points = vec![vec![1.0; 5], vec![0.5, 1.5, 1.0, 0.2, 0.9]];
        // α ≤ Ξ pointwise, so Ξ° ≤ α° = χ_f.
        let report = reversal_check(&alpha, &xi, &points, &pcfg()).unwrap();
        assert!(report.premise_ok);
        assert!(report.max_reversal_violation <= 1e-4, "{report:?}");
    }

    #[test]
    fn reversal_same_oracle_is_tight() {
        let oracle1 = GaugeOracle::norm_inf(3);
        let oracle2 = GaugeOracle::norm_inf(3);
        let points = vec![vec![1.0, 0.5, 2.0]];
        let report = reversal_check(&oracle1, &oracle2, &points, &pcfg()).unwrap();
        assert!(report.premise_ok);
        assert!(report.max_reversal_violation <= 1e-9);
    }

    #[test]
    fn reversal_supnorm_vs_chif() {
        // ‖·‖∞ ≤ χ_f pointwise, so polar order gives α ≤ ‖·‖₁.
        let p4 = GraphFamily::Path(4).build().unwrap();
        let supnorm = GaugeOracle::norm_inf(4);
        let chif = GaugeOracle::chi_f(&p4);
        let points = vec![vec![1.0; 4], vec![0.3, 1.2, 0.8, 2.0]];
        let report = reversal_check(&supnorm, &chif, &points, &pcfg()).unwrap();
        assert!(report.premise_ok);
        assert!(report.max_reversal_violation <= 1e-4, "{report:?}");
    }

    #[test]
    fn reversal_premise_failure_reported() {
        let l1 = GaugeOracle::norm_1(3);
        let linf = GaugeOracle::norm_inf(3);
        // ‖·‖₁ ≤ ‖·‖∞ is false.
        let points = vec![vec![1.0, 1.0, 1.0]];
        let report = reversal_check(&l1, &linf, &points, &pcfg()).unwrap();
        assert!(!report.premise_ok);
        assert!(report.max_premise_violation > 0.5);
    }

    #[test]
    fn minkowski_lp_matches_alpha() {
        // The corner {x ≥ 0 : ⟨χ^S, x⟩ ≤ 1 ∀ maximal stable S} has
        // Minkowski functional α(G,·).
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let fam = exact::enumerate_stable_sets(&c5, true).unwrap();
        let rows: Vec<Vec<f64>> = fam.sets().iter().map(|&s| fam.incidence_vector(s)).collect();
        let x = vec![0.7, 0.2, 1.0, 0.4, 0.1];
        let via_lp = minkowski_gauge_lp(&rows, &x).unwrap();
        let w = WeightVector::new(x).unwrap();
        let via_alpha = exact::alpha(&c5, &w).unwrap().value.finite();
        assert!((via_lp - via_alpha).abs() <= 1e-8);
    }
}
