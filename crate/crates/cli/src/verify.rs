//! Verification suites: each named check exercises one of the duality or
//! sandwich relations between the bounds on the supplied graph, printing
//! machine-readable pass/fail lines. Checks that need exact oracles skip
//! (and say so) when the graph exceeds the brute-force guards.

use crate::CliError;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_gauge::bounds::{self, LuzConfig, SearchConfig};
use spectral_gauge::exact;
use spectral_gauge::gauge::{self, GaugeOracle, PolarConfig};
use spectral_gauge::graph::{GeneralizedAdjacency, Graph, GraphFamily, WeightVector};
use spectral_gauge::linalg::SymMatrix;
use spectral_gauge::result::Value;
use spectral_gauge::sdp::{self, SdpConfig, ThetaBodyProblem, ThetaVariant};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gauge,
    Duality,
    Sandwich,
    Luz,
    Theta,
    All,
}

pub fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Gauge => "gauge",
        Suite::Duality => "duality",
        Suite::Sandwich => "sandwich",
        Suite::Luz => "luz",
        Suite::Theta => "theta",
        Suite::All => "all",
    }
}

pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

struct Ctx {
    g: Graph,
    vertex_transitive: bool,
    seed: u64,
    sdp: SdpConfig,
    budget: usize,
}

impl Ctx {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }

    fn random_weights(&self, rng: &mut ChaCha8Rng) -> WeightVector {
        WeightVector::new((0..self.g.n()).map(|_| 0.1 + 1.9 * rng.gen::<f64>()).collect())
            .expect("nonnegative by construction")
    }

    fn random_matrix(&self, nonneg: bool, salt: u64) -> GeneralizedAdjacency {
        GeneralizedAdjacency::random(&self.g, nonneg, self.seed.wrapping_add(salt))
    }
}

pub fn run_suite(
    suite: Suite,
    g: &Graph,
    family: Option<&GraphFamily>,
    seed: u64,
    tol: f64,
    budget: usize,
) -> Result<Vec<CheckOutcome>, CliError> {
    let ctx = Ctx {
        g: g.clone(),
        vertex_transitive: family.map_or(false, |f| f.vertex_transitive()),
        seed,
        sdp: SdpConfig { gap_tol: tol, ..SdpConfig::default() },
        budget,
    };
    let mut checks: Vec<CheckOutcome> = Vec::new();
    let mut extend = |mut list: Vec<CheckOutcome>| checks.append(&mut list);
    match suite {
        Suite::Gauge => extend(gauge_suite(&ctx)),
        Suite::Duality => extend(duality_suite(&ctx)),
        Suite::Sandwich => extend(sandwich_suite(&ctx)),
        Suite::Luz => extend(luz_suite(&ctx)),
        Suite::Theta => extend(theta_suite(&ctx)),
        Suite::All => {
            extend(gauge_suite(&ctx));
            extend(duality_suite(&ctx));
            extend(sandwich_suite(&ctx));
            extend(luz_suite(&ctx));
            extend(theta_suite(&ctx));
        }
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(checks)
}

fn check(name: &str, body: impl FnOnce() -> Result<(bool, String), String>) -> CheckOutcome {
    match body() {
        Ok((passed, detail)) => CheckOutcome { name: name.to_string(), passed, detail },
        Err(message) => CheckOutcome { name: name.to_string(), passed: false, detail: message },
    }
}

fn skip(name: &str, why: &str) -> CheckOutcome {
    CheckOutcome { name: name.to_string(), passed: true, detail: format!("skipped: {why}") }
}

fn err_str<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

// ---------------------------------------------------------------------------
// gauge
// ---------------------------------------------------------------------------

fn gauge_suite(ctx: &Ctx) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let a = ctx.g.adjacency_matrix();

    out.push(check("gauge:axioms-hoffman-adjacency", || {
        let oracle = GaugeOracle::hoffman(&a).map_err(err_str)?;
        let report = gauge::check_gauge_axioms(&oracle, 8, ctx.seed).map_err(err_str)?;
        Ok((report.max_violation() <= 1e-6, format!("max violation {:.3e}", report.max_violation())))
    }));

    out.push(check("gauge:axioms-xi-adjacency", || {
        let oracle = GaugeOracle::xi(&ctx.g.adjacency_matrix(), ctx.sdp);
        let report = gauge::check_gauge_axioms(&oracle, 8, ctx.seed).map_err(err_str)?;
        Ok((report.max_violation() <= 1e-6, format!("max violation {:.3e}", report.max_violation())))
    }));

    out.push(check("gauge:axioms-theta", || {
        let oracle = GaugeOracle::theta(&ctx.g, ThetaVariant::Theta, ctx.sdp);
        let report = gauge::check_gauge_axioms(&oracle, 6, ctx.seed).map_err(err_str)?;
        Ok((report.max_violation() <= 1e-6, format!("max violation {:.3e}", report.max_violation())))
    }));

    out.push(check("gauge:axioms-luz-random-nonneg", || {
        let a = ctx.random_matrix(true, 11);
        let oracle = GaugeOracle::luz(&a, ctx.sdp);
        let report = gauge::check_gauge_axioms(&oracle, 8, ctx.seed).map_err(err_str)?;
        Ok((report.max_violation() <= 1e-5, format!("max violation {:.3e}", report.max_violation())))
    }));

    out
}

// ---------------------------------------------------------------------------
// duality
// ---------------------------------------------------------------------------

fn duality_suite(ctx: &Ctx) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let n = ctx.g.n();
    let pcfg = PolarConfig { tol: 1e-5, max_cuts: 400 };

    if n > 12 {
        out.push(skip("duality:xi-equals-hoffman-polar", "n > 12"));
    } else {
        out.push(check("duality:xi-equals-hoffman-polar", || {
            let mut rng = ctx.rng(1);
            let mut worst = 0.0f64;
            for a in [ctx.g.adjacency_matrix(), ctx.random_matrix(false, 3)] {
                let oracle = GaugeOracle::hoffman(&a).map_err(err_str)?;
                for _ in 0..3 {
                    let w = ctx.random_weights(&mut rng);
                    let polar = gauge::polar(&oracle, w.entries(), &pcfg).map_err(err_str)?;
                    let xi = bounds::xi(&a, &w, &ctx.sdp).map_err(err_str)?.value.finite();
                    worst = worst.max((polar.value - xi).abs() / (1.0 + xi));
                }
            }
            Ok((worst <= 1e-3, format!("max relative deviation {worst:.3e}")))
        }));
    }

    if n > spectral_gauge::tol::LP_ORACLE_MAX_N {
        out.push(skip("duality:alpha-polar-equals-chif", "n exceeds exact-oracle guard"));
        out.push(skip("duality:chif-polar-equals-alpha", "n exceeds exact-oracle guard"));
    } else {
        out.push(check("duality:alpha-polar-equals-chif", || {
            let oracle = GaugeOracle::alpha(&ctx.g);
            let mut rng = ctx.rng(2);
            let mut worst = 0.0f64;
            for _ in 0..3 {
                let w = ctx.random_weights(&mut rng);
                let polar = gauge::polar(&oracle, w.entries(), &pcfg).map_err(err_str)?;
                let chif = exact::chi_f(&ctx.g, &w).map_err(err_str)?.value.finite();
                worst = worst.max((polar.value - chif).abs() / (1.0 + chif));
            }
            Ok((worst <= 1e-4, format!("max relative deviation {worst:.3e}")))
        }));

        out.push(check("duality:chif-polar-equals-alpha", || {
            let oracle = GaugeOracle::chi_f(&ctx.g);
            let mut rng = ctx.rng(3);
            let mut worst = 0.0f64;
            for _ in 0..3 {
                let w = ctx.random_weights(&mut rng);
                let polar = gauge::polar(&oracle, w.entries(), &pcfg).map_err(err_str)?;
                let alpha = exact::alpha(&ctx.g, &w).map_err(err_str)?.value.finite();
                worst = worst.max((polar.value - alpha).abs() / (1.0 + alpha));
            }
            Ok((worst <= 1e-4, format!("max relative deviation {worst:.3e}")))
        }));
    }

    out.push(check("duality:cauchy-pairing", || {
        let a = ctx.g.adjacency_matrix();
        let mut rng = ctx.rng(4);
        let mut worst = 0.0f64;
        for _ in 0..10 {
            let w = ctx.random_weights(&mut rng);
            let z = ctx.random_weights(&mut rng);
            let h = bounds::hoffman(&a, &w).map_err(err_str)?.value.finite();
            let xi = bounds::xi(&a, &z, &ctx.sdp).map_err(err_str)?.value.finite();
            let pairing: f64 = w.entries().iter().zip(z.entries()).map(|(x, y)| x * y).sum();
            worst = worst.max((pairing - h * xi) / (1.0 + pairing));
        }
        Ok((worst <= 1e-6, format!("max excess {worst:.3e}")))
    }));

    if n > 8 {
        out.push(skip("duality:hoffman-roundtrip", "n > 8"));
    } else {
        out.push(check("duality:hoffman-roundtrip", || {
            let a = ctx.g.adjacency_matrix();
            let oracle = GaugeOracle::hoffman(&a).map_err(err_str)?;
            let mut rng = ctx.rng(5);
            let points: Vec<Vec<f64>> =
                (0..2).map(|_| ctx.random_weights(&mut rng).entries().to_vec()).collect();
            let report =
                gauge::polar_roundtrip(&oracle, &points, &PolarConfig { tol: 1e-4, max_cuts: 400 })
                    .map_err(err_str)?;
            Ok((
                report.max_relative_deviation <= 1e-3,
                format!("max relative deviation {:.3e}", report.max_relative_deviation),
            ))
        }));
    }

    out
}

// ---------------------------------------------------------------------------
// sandwich
// ---------------------------------------------------------------------------

fn sandwich_suite(ctx: &Ctx) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let n = ctx.g.n();

    if n > spectral_gauge::tol::LP_ORACLE_MAX_N {
        out.push(skip("sandwich:hoffman-between-supnorm-chif", "n exceeds exact-oracle guard"));
        out.push(skip("sandwich:xi-between-alpha-l1norm", "n exceeds exact-oracle guard"));
        out.push(skip("sandwich:variant-ordering", "n exceeds exact-oracle guard"));
        return out;
    }

    out.push(check("sandwich:hoffman-between-supnorm-chif", || {
        let mut rng = ctx.rng(6);
        let mut worst = 0.0f64;
        for salt in 0..5u64 {
            let a = ctx.random_matrix(false, 20 + salt);
            let w = ctx.random_weights(&mut rng);
            let h = bounds::hoffman(&a, &w).map_err(err_str)?.value.finite();
            let chif = exact::chi_f(&ctx.g, &w).map_err(err_str)?.value.finite();
            worst = worst.max(w.norm_inf() - h).max(h - chif);
        }
        Ok((worst <= 1e-6, format!("max violation {worst:.3e}")))
    }));

    out.push(check("sandwich:xi-between-alpha-l1norm", || {
        let mut rng = ctx.rng(7);
        let mut worst = 0.0f64;
        for salt in 0..5u64 {
            let a = ctx.random_matrix(false, 40 + salt);
            let w = ctx.random_weights(&mut rng);
            let xi = bounds::xi(&a, &w, &ctx.sdp).map_err(err_str)?.value.finite();
            let alpha = exact::alpha(&ctx.g, &w).map_err(err_str)?.value.finite();
            worst = worst.max(alpha - xi).max(xi - w.norm_1());
        }
        Ok((worst <= 1e-6, format!("max violation {worst:.3e}")))
    }));

    out.push(check("sandwich:variant-ordering", || {
        let w = WeightVector::uniform(n);
        let alpha = exact::alpha(&ctx.g, &w).map_err(err_str)?.value.finite();
        let chif_bar =
            exact::chi_f(&ctx.g.complement(), &w).map_err(err_str)?.value.finite();
        let mut values = Vec::new();
        for variant in [ThetaVariant::ThetaPrime, ThetaVariant::Theta, ThetaVariant::ThetaPlus] {
            let p = ThetaBodyProblem::new(ctx.g.clone(), w.clone(), variant).map_err(err_str)?;
            values.push(sdp::solve_theta_body(&p, &ctx.sdp).map_err(err_str)?.primal_objective);
        }
        let chain = [alpha, values[0], values[1], values[2], chif_bar];
        let mut worst = 0.0f64;
        for pair in chain.windows(2) {
            worst = worst.max(pair[0] - pair[1]);
        }
        Ok((
            worst <= 1e-5,
            format!(
                "alpha {:.6} <= theta' {:.6} <= theta {:.6} <= theta+ {:.6} <= chif(comp) {:.6}",
                chain[0], chain[1], chain[2], chain[3], chain[4]
            ),
        ))
    }));

    out
}

// ---------------------------------------------------------------------------
// luz
// ---------------------------------------------------------------------------

fn luz_suite(ctx: &Ctx) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let luz_cfg = LuzConfig::default();

    out.push(check("luz:xi-below-luz-signed", || {
        let mut rng = ctx.rng(8);
        let mut ok = true;
        let mut detail = String::from("xi <= luz on 5 signed matrices");
        for salt in 0..5u64 {
            let a = ctx.random_matrix(false, 60 + salt);
            let w = ctx.random_weights(&mut rng);
            let report = bounds::xi_vs_luz(&a, &w, &ctx.sdp).map_err(err_str)?;
            if !report.xi_le_luz(1e-6) {
                ok = false;
                detail = format!(
                    "violation: xi {:.8} vs luz {:?}",
                    report.xi_value, report.luz_value
                );
                break;
            }
        }
        Ok((ok, detail))
    }));

    out.push(check("luz:xi-equals-luz-nonneg", || {
        let mut rng = ctx.rng(9);
        let mut worst = 0.0f64;
        for salt in 0..5u64 {
            let a = ctx.random_matrix(true, 80 + salt);
            let w = ctx.random_weights(&mut rng);
            let report = bounds::xi_vs_luz(&a, &w, &ctx.sdp).map_err(err_str)?;
            match report.equality_gap() {
                Some(gap) => worst = worst.max(gap / (1.0 + report.xi_value)),
                None => return Ok((false, "luz unexpectedly infinite for nonneg A".into())),
            }
        }
        Ok((worst <= 1e-5, format!("max relative equality gap {worst:.3e}")))
    }));

    out.push(check("luz:rank-one-dual-feasible", || {
        let mut rng = ctx.rng(10);
        let mut worst_slack = 0.0f64;
        let mut worst_trace = 0.0f64;
        for salt in 0..5u64 {
            let a = ctx.random_matrix(true, 100 + salt);
            let w = ctx.random_weights(&mut rng);
            let report = bounds::xi_vs_luz(&a, &w, &ctx.sdp).map_err(err_str)?;
            let slack = report
                .rank_one_cover_slack
                .ok_or("missing rank-one report for nonneg A")?;
            let trace = report
                .rank_one_trace_diff
                .ok_or("missing rank-one report for nonneg A")?;
            worst_slack = worst_slack.max(-slack);
            worst_trace = worst_trace.max(trace / (1.0 + report.xi_value));
        }
        Ok((
            worst_slack <= 1e-5 && worst_trace <= 1e-5,
            format!("worst cover shortfall {worst_slack:.3e}, trace mismatch {worst_trace:.3e}"),
        ))
    }));

    let degrees: Vec<usize> = (0..ctx.g.n()).map(|v| ctx.g.degree(v)).collect();
    let regular = ctx.g.edge_count() > 0 && degrees.iter().all(|&d| d == degrees[0]);
    if !regular {
        out.push(skip("luz:unbounded-negated-adjacency", "graph is not regular"));
    } else {
        out.push(check("luz:unbounded-negated-adjacency", || {
            let neg = GeneralizedAdjacency::new(
                ctx.g.clone(),
                ctx.g.adjacency_matrix().matrix().scale(-1.0),
            )
            .map_err(err_str)?;
            let w = WeightVector::uniform(ctx.g.n());
            let r = bounds::luz(&neg, &w, &luz_cfg).map_err(err_str)?;
            match (r.value, &r.certificate) {
                (Value::Infinite, spectral_gauge::result::Certificate::RecessionDirection(d)) => {
                    let form = neg.tilde_form().map_err(err_str)?;
                    let quad = form.i_plus.quadratic_form(d);
                    let pairing: f64 = d.iter().map(|&v| v).sum();
                    let ok = d.iter().all(|&v| v >= 0.0) && quad <= 1e-8 && pairing > 0.0;
                    Ok((ok, format!("recession direction verified (dᵀ(I+Ã)d = {quad:.3e})")))
                }
                (Value::Infinite, _) => Ok((false, "infinite but no direction returned".into())),
                (Value::Finite(v), _) => Ok((false, format!("expected +inf, got {v:.6}"))),
            }
        }));
    }

    out
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

fn theta_suite(ctx: &Ctx) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let n = ctx.g.n();
    let w = WeightVector::uniform(n);

    out.push(check("theta:variant-order", || {
        let mut values = Vec::new();
        for variant in [ThetaVariant::ThetaPrime, ThetaVariant::Theta, ThetaVariant::ThetaPlus] {
            let p = ThetaBodyProblem::new(ctx.g.clone(), w.clone(), variant).map_err(err_str)?;
            values.push(sdp::solve_theta_body(&p, &ctx.sdp).map_err(err_str)?.primal_objective);
        }
        let ok = values[0] <= values[1] + 1e-6 && values[1] <= values[2] + 1e-6;
        Ok((ok, format!("theta' {:.7} <= theta {:.7} <= theta+ {:.7}", values[0], values[1], values[2])))
    }));

    out.push(check("theta:product-complement", || {
        let p = ThetaBodyProblem::new(ctx.g.clone(), w.clone(), ThetaVariant::Theta)
            .map_err(err_str)?;
        let theta = sdp::solve_theta_body(&p, &ctx.sdp).map_err(err_str)?.primal_objective;
        let pc = ThetaBodyProblem::new(ctx.g.complement(), w.clone(), ThetaVariant::Theta)
            .map_err(err_str)?;
        let theta_bar = sdp::solve_theta_body(&pc, &ctx.sdp).map_err(err_str)?.primal_objective;
        let product = theta * theta_bar;
        let nf = n as f64;
        let ok = if ctx.vertex_transitive {
            (product - nf).abs() <= 1e-4
        } else {
            product >= nf - 1e-4
        };
        let relation = if ctx.vertex_transitive { "=" } else { ">=" };
        Ok((ok, format!("theta*theta_bar {product:.7} {relation} n {nf}")))
    }));

    out.push(check("theta:below-xi-samples", || {
        let p = ThetaBodyProblem::new(ctx.g.clone(), w.clone(), ThetaVariant::Theta)
            .map_err(err_str)?;
        let theta = sdp::solve_theta_body(&p, &ctx.sdp).map_err(err_str)?.primal_objective;
        let mut worst = 0.0f64;
        for salt in 0..5u64 {
            let a = ctx.random_matrix(false, 120 + salt);
            let xi = bounds::xi(&a, &w, &ctx.sdp).map_err(err_str)?.value.finite();
            worst = worst.max(theta - xi);
        }
        Ok((worst <= 1e-6, format!("max theta excess over sampled xi {worst:.3e}")))
    }));

    out.push(check("theta:solution-consistency", || {
        let p = ThetaBodyProblem::new(ctx.g.clone(), w.clone(), ThetaVariant::Theta)
            .map_err(err_str)?;
        let s = sdp::solve_theta_body(&p, &ctx.sdp).map_err(err_str)?;
        let x_mat = s.primal_matrix.as_ref().ok_or("missing X")?;
        let mut diag_dev = 0.0f64;
        for i in 0..n {
            diag_dev = diag_dev.max((x_mat.get(i, i) - s.primal_x[i]).abs());
        }
        let bordered = SymMatrix::from_fn(n + 1, |i, j| match (i, j) {
            (0, 0) => 1.0,
            (0, j) => s.primal_x[j - 1],
            (i, 0) => s.primal_x[i - 1],
            (i, j) => x_mat.get(i - 1, j - 1),
        });
        let lmin = bordered.eigen().map_err(err_str)?.lambda_min();
        Ok((
            diag_dev <= 1e-8 && lmin >= -1e-8,
            format!("diag deviation {diag_dev:.3e}, bordered λ_min {lmin:.3e}"),
        ))
    }));

    if ctx.g.edge_count() == 0 {
        out.push(skip("theta:best-xi-search", "edgeless graph"));
    } else {
        out.push(check("theta:best-xi-search", || {
            let search = SearchConfig {
                budget: ctx.budget,
                seed: ctx.seed,
                reference_tol: 1e-4,
                multistarts: 2,
            };
            let r = bounds::best_xi_over_a(&ctx.g, &w, false, &search, &ctx.sdp)
                .map_err(err_str)?;
            Ok((
                r.gap.abs() <= 1e-3,
                format!("best xi {:.7}, gap to theta {:.3e}, {} evaluations", r.value.finite(), r.gap, r.iterations),
            ))
        }));
    }

    out
}
