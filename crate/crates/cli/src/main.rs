//! Command-line surface: compute bounds, run verification suites over the
//! duality relations, and generate graphs.

mod verify;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use spectral_gauge::bounds::{self, LuzConfig, SearchConfig};
use spectral_gauge::exact;
use spectral_gauge::graph::{
    parse_graph_with_limit, GeneralizedAdjacency, Graph, GraphFamily, GraphFormat, WeightVector,
};
use spectral_gauge::linalg::SymMatrix;
use spectral_gauge::result::{BoundResult, Certificate, Value};
use spectral_gauge::sdp::{self, SdpConfig, ThetaBodyProblem, ThetaVariant};
use spectral_gauge::tol;
use std::fmt::Write as _;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_SOLVER: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "spectral-gauge",
    version,
    about = "Spectral and semidefinite bounds on weighted stability and fractional chromatic numbers"
)]
struct Cli {
    /// Relative duality-gap target for the SDP/CQP solvers.
    #[arg(long, global = true, default_value_t = tol::SDP_GAP)]
    tol: f64,
    /// Seed for every randomized component (matrices, suites, searches).
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Evaluation budget for the best-A searches.
    #[arg(long, global = true, default_value_t = 200)]
    budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one bound for a graph.
    Compute {
        /// Graph source: gen:<family-spec> or a path (DIMACS or edge list).
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        bound: BoundKind,
        /// adjacency | random:<seed>[:nonneg] | file:<path>
        #[arg(long, default_value = "adjacency")]
        matrix: String,
        /// uniform | inline:<v,v,...> | <path>
        #[arg(long, default_value = "uniform")]
        weights: String,
    },
    /// Run a verification suite of the duality relations on one graph.
    Verify {
        #[arg(long, value_enum)]
        suite: verify::Suite,
        #[arg(long)]
        graph: String,
    },
    /// Emit a generated graph as DIMACS on stdout.
    Gen { family: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundKind {
    Alpha,
    Chif,
    Hoffman,
    HoffmanSdp,
    Xi,
    Luz,
    Ratio,
    Perron,
    Theta,
    ThetaPrime,
    ThetaPlus,
    BestXi,
    BestXiNonneg,
    BestHoffman,
    BestHoffmanNonneg,
}

impl BoundKind {
    fn name(&self) -> &'static str {
        match self {
            BoundKind::Alpha => "alpha",
            BoundKind::Chif => "chif",
            BoundKind::Hoffman => "hoffman",
            BoundKind::HoffmanSdp => "hoffman-sdp",
            BoundKind::Xi => "xi",
            BoundKind::Luz => "luz",
            BoundKind::Ratio => "ratio",
            BoundKind::Perron => "perron",
            BoundKind::Theta => "theta",
            BoundKind::ThetaPrime => "theta-prime",
            BoundKind::ThetaPlus => "theta-plus",
            BoundKind::BestXi => "best-xi",
            BoundKind::BestXiNonneg => "best-xi-nonneg",
            BoundKind::BestHoffman => "best-hoffman",
            BoundKind::BestHoffmanNonneg => "best-hoffman-nonneg",
        }
    }

    fn needs_matrix(&self) -> bool {
        matches!(
            self,
            BoundKind::Hoffman
                | BoundKind::HoffmanSdp
                | BoundKind::Xi
                | BoundKind::Luz
                | BoundKind::Ratio
        )
    }
}

/// Error carrying the exit code it maps to.
pub enum CliError {
    Usage(String),
    Solver(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Solver(_) => EXIT_SOLVER,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) => m,
            CliError::Solver(m) => m,
        }
    }
}

impl From<bounds::BoundsError> for CliError {
    fn from(e: bounds::BoundsError) -> Self {
        match e {
            bounds::BoundsError::Exact(exact::ExactError::Capacity { .. })
            | bounds::BoundsError::WeightLength { .. }
            | bounds::BoundsError::NotApplicable(_) => CliError::Usage(e.to_string()),
            other => CliError::Solver(other.to_string()),
        }
    }
}

impl From<exact::ExactError> for CliError {
    fn from(e: exact::ExactError) -> Self {
        match e {
            exact::ExactError::Capacity { .. } | exact::ExactError::WeightLength { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Solver(other.to_string()),
        }
    }
}

impl From<sdp::SdpError> for CliError {
    fn from(e: sdp::SdpError) -> Self {
        CliError::Solver(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let max_n = match max_n_from_env() {
        Ok(v) => v,
        Err(m) => {
            eprintln!("error: {m}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let outcome = match &cli.command {
        Command::Compute { graph, bound, matrix, weights } => {
            cmd_compute(&cli, graph, *bound, matrix, weights, max_n)
        }
        Command::Verify { suite, graph } => {
            let g = match load_graph(graph, max_n) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("error: {}", e.message());
                    return ExitCode::from(e.code());
                }
            };
            let family = family_of(graph);
            match verify::run_suite(*suite, &g, family.as_ref(), cli.seed, cli.tol, cli.budget) {
                Ok(checks) => {
                    let all_passed = checks.iter().all(|c| c.passed);
                    print_verify(&cli, *suite, graph, &checks, all_passed);
                    return ExitCode::from(if all_passed { EXIT_OK } else { EXIT_VERIFY });
                }
                Err(e) => Err(e),
            }
        }
        Command::Gen { family } => cmd_gen(family, max_n),
    };

    match outcome {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn max_n_from_env() -> Result<usize, String> {
    match std::env::var("SPECTRAL_GAUGE_MAX_N") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("SPECTRAL_GAUGE_MAX_N={v:?} is not a vertex count")),
        Err(_) => Ok(tol::DEFAULT_MAX_N),
    }
}

fn family_of(source: &str) -> Option<GraphFamily> {
    source
        .strip_prefix("gen:")
        .and_then(|spec| GraphFamily::parse(spec).ok())
}

fn load_graph(source: &str, max_n: usize) -> Result<Graph, CliError> {
    if let Some(spec) = source.strip_prefix("gen:") {
        let family = GraphFamily::parse(spec).map_err(|e| CliError::Usage(e.to_string()))?;
        return family
            .build_with_limit(max_n)
            .map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = std::fs::read_to_string(source)
        .map_err(|e| CliError::Usage(format!("cannot read graph file {source:?}: {e}")))?;
    let format = sniff_format(&text);
    parse_graph_with_limit(&text, format, max_n).map_err(|e| CliError::Usage(e.to_string()))
}

fn sniff_format(text: &str) -> GraphFormat {
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        return if t.starts_with('c') || t.starts_with('p') {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        };
    }
    GraphFormat::EdgeList
}

fn load_weights(spec: &str, n: usize) -> Result<WeightVector, CliError> {
    if spec == "uniform" {
        return Ok(WeightVector::uniform(n));
    }
    if let Some(inline) = spec.strip_prefix("inline:") {
        let cleaned = inline.replace(',', " ");
        return WeightVector::parse(&cleaned, n).map_err(|e| CliError::Usage(e.to_string()));
    }
    let text = std::fs::read_to_string(spec)
        .map_err(|e| CliError::Usage(format!("cannot read weights file {spec:?}: {e}")))?;
    WeightVector::parse(&text, n).map_err(|e| CliError::Usage(e.to_string()))
}

fn load_matrix(spec: &str, g: &Graph, seed: u64) -> Result<GeneralizedAdjacency, CliError> {
    if spec == "adjacency" {
        return Ok(g.adjacency_matrix());
    }
    if let Some(rest) = spec.strip_prefix("random:") {
        let parts: Vec<&str> = rest.split(':').collect();
        let matrix_seed: u64 = parts[0]
            .parse()
            .map_err(|_| CliError::Usage(format!("bad matrix seed {:?}", parts[0])))?;
        let nonneg = match parts.len() {
            1 => false,
            2 if parts[1] == "nonneg" => true,
            _ => return Err(CliError::Usage(format!("bad matrix spec {spec:?}"))),
        };
        return Ok(GeneralizedAdjacency::random(g, nonneg, matrix_seed.wrapping_add(seed)));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read matrix file {path:?}: {e}")))?;
        let vals: Vec<f64> = text
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|_| CliError::Usage(format!("bad matrix entry {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        let n = g.n();
        if vals.len() != n * n {
            return Err(CliError::Usage(format!(
                "matrix file has {} entries, expected {}",
                vals.len(),
                n * n
            )));
        }
        let m = SymMatrix::from_fn(n, |i, j| vals[i * n + j]);
        return GeneralizedAdjacency::new(g.clone(), m)
            .map_err(|e| CliError::Usage(e.to_string()));
    }
    Err(CliError::Usage(format!("unknown matrix spec {spec:?}")))
}

fn cmd_compute(
    cli: &Cli,
    graph_source: &str,
    bound: BoundKind,
    matrix_spec: &str,
    weights_spec: &str,
    max_n: usize,
) -> Result<(), CliError> {
    let g = load_graph(graph_source, max_n)?;
    let w = load_weights(weights_spec, g.n())?;
    let sdp_cfg = SdpConfig { gap_tol: cli.tol, ..SdpConfig::default() };
    let luz_cfg = LuzConfig { gap_tol: cli.tol.max(1e-10), ..LuzConfig::default() };
    let search = SearchConfig { budget: cli.budget, seed: cli.seed, ..SearchConfig::default() };

    let matrix_used = bound.needs_matrix();
    let a = if matrix_used { Some(load_matrix(matrix_spec, &g, cli.seed)?) } else { None };
    let a_ref = a.as_ref();

    let result: BoundResult = match bound {
        BoundKind::Alpha => exact::alpha(&g, &w)?,
        BoundKind::Chif => exact::chi_f(&g, &w)?,
        BoundKind::Hoffman => bounds::hoffman(a_ref.unwrap(), &w)?,
        BoundKind::HoffmanSdp => bounds::hoffman_via_sdp(a_ref.unwrap(), &w, &sdp_cfg)?,
        BoundKind::Xi => bounds::xi(a_ref.unwrap(), &w, &sdp_cfg)?,
        BoundKind::Luz => bounds::luz(a_ref.unwrap(), &w, &luz_cfg)?,
        BoundKind::Ratio => {
            let v = bounds::ratio_bound_closed_form(a_ref.unwrap(), &sdp_cfg)?;
            BoundResult::exact(v, Certificate::None)
        }
        BoundKind::Perron => bounds::perron_bound(&g)?,
        BoundKind::Theta | BoundKind::ThetaPrime | BoundKind::ThetaPlus => {
            let variant = match bound {
                BoundKind::Theta => ThetaVariant::Theta,
                BoundKind::ThetaPrime => ThetaVariant::ThetaPrime,
                _ => ThetaVariant::ThetaPlus,
            };
            let p = ThetaBodyProblem::new(g.clone(), w.clone(), variant)?;
            let s = sdp::solve_theta_body(&p, &sdp_cfg)?;
            BoundResult {
                value: Value::Finite(s.primal_objective),
                certificate: Certificate::SdpPair { x: s.primal_x, dual: s.dual_matrix },
                gap: s.gap,
                iterations: s.iterations,
                budget_exhausted: false,
            }
        }
        BoundKind::BestXi => bounds::best_xi_over_a(&g, &w, false, &search, &sdp_cfg)?,
        BoundKind::BestXiNonneg => bounds::best_xi_over_a(&g, &w, true, &search, &sdp_cfg)?,
        BoundKind::BestHoffman => bounds::best_hoffman_over_a(&g, &w, false, &search, &sdp_cfg)?,
        BoundKind::BestHoffmanNonneg => {
            bounds::best_hoffman_over_a(&g, &w, true, &search, &sdp_cfg)?
        }
    };

    let matrix_descriptor = if matrix_used { matrix_spec } else { "none" };
    match cli.format {
        Format::Json => {
            let payload = json!({
                "graph": { "n": g.n(), "m": g.edge_count(), "source": graph_source },
                "bound": bound.name(),
                "matrix": matrix_descriptor,
                "value": value_json(&result.value),
                "gap": result.gap,
                "iterations": result.iterations,
                "certificate": certificate_json(&result.certificate),
            });
            println!("{payload}");
        }
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "bound       {}", bound.name());
            let _ = writeln!(
                out,
                "graph       {} (n={}, m={})",
                graph_source,
                g.n(),
                g.edge_count()
            );
            let _ = writeln!(out, "matrix      {matrix_descriptor}");
            let value_text = match result.value {
                Value::Finite(v) => format!("{v:.7}"),
                Value::Infinite => "inf".to_string(),
            };
            let _ = writeln!(out, "value       {value_text}");
            let _ = writeln!(out, "gap         {:.7}", result.gap);
            let _ = writeln!(out, "iterations  {}", result.iterations);
            let _ = writeln!(out, "certificate {}", certificate_summary(&result.certificate));
            print!("{out}");
        }
    }
    Ok(())
}

fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Finite(x) => json!(x),
        Value::Infinite => json!("inf"),
    }
}

fn certificate_json(c: &Certificate) -> serde_json::Value {
    match c {
        Certificate::StableSet(s) => json!({ "type": "stable_set", "vertices": s }),
        Certificate::FractionalCover { sets, multipliers, dual } => json!({
            "type": "fractional_cover",
            "sets": sets,
            "multipliers": multipliers,
            "dual": dual,
        }),
        Certificate::Eigenvector(v) => json!({ "type": "eigenvector", "vector": v }),
        Certificate::SdpPair { x, dual } => json!({
            "type": "sdp_pair",
            "x": x,
            "dual_trace": dual.trace(),
        }),
        Certificate::CqpPair { x, dual } => json!({ "type": "cqp_pair", "x": x, "dual": dual }),
        Certificate::RecessionDirection(d) => {
            json!({ "type": "recession_direction", "direction": d })
        }
        Certificate::PerronVector(p) => json!({ "type": "perron_vector", "vector": p }),
        Certificate::EdgeWeights(e) => json!({ "type": "edge_weights", "weights": e }),
        Certificate::None => serde_json::Value::Null,
    }
}

fn certificate_summary(c: &Certificate) -> String {
    match c {
        Certificate::StableSet(s) => format!("stable set {s:?}"),
        Certificate::FractionalCover { sets, .. } => {
            format!("fractional cover over {} stable sets", sets.len())
        }
        Certificate::Eigenvector(_) => "top eigenvector".to_string(),
        Certificate::SdpPair { dual, .. } => {
            format!("primal/dual pair, dual trace {:.7}", dual.trace())
        }
        Certificate::CqpPair { dual, .. } => {
            let norm2: f64 = dual.iter().map(|v| v * v).sum();
            format!("cqp pair, dual norm^2 {norm2:.7}")
        }
        Certificate::RecessionDirection(_) => "recession direction".to_string(),
        Certificate::PerronVector(_) => "perron eigenvector".to_string(),
        Certificate::EdgeWeights(weights) => format!("edge weights ({} edges)", weights.len()),
        Certificate::None => "none".to_string(),
    }
}

fn print_verify(
    cli: &Cli,
    suite: verify::Suite,
    graph_source: &str,
    checks: &[verify::CheckOutcome],
    all_passed: bool,
) {
    match cli.format {
        Format::Json => {
            let payload = json!({
                "suite": verify::suite_name(suite),
                "graph": graph_source,
                "seed": cli.seed,
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
                "all_passed": all_passed,
            });
            println!("{payload}");
        }
        Format::Table => {
            for c in checks {
                println!("{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            println!(
                "{} {} checks for suite {}",
                if all_passed { "PASS" } else { "FAIL" },
                checks.len(),
                verify::suite_name(suite)
            );
        }
    }
}

fn cmd_gen(family_spec: &str, max_n: usize) -> Result<(), CliError> {
    let family = GraphFamily::parse(family_spec).map_err(|e| CliError::Usage(e.to_string()))?;
    let g = family
        .build_with_limit(max_n)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    print!("{}", g.render_dimacs());
    Ok(())
}
