//! Graph representation, file I/O, generators, and generalized adjacency
//! matrices.
//!
//! Vertices are dense integers `0..n−1`; DIMACS 1-based indices are
//! shifted on read and write.

use crate::linalg::{self, LinalgError, SymMatrix};
use crate::tol;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex count {n} outside 1..={max}")]
    BadOrder { n: usize, max: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("invalid generator parameters: {0}")]
    BadFamily(String),
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("weight vector: {0}")]
    BadWeights(String),
    #[error("matrix is not a generalized adjacency matrix: {0}")]
    BadMatrix(String),
}

/// Simple undirected graph on vertices `0..n−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Sorted, deduplicated, with i < j.
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_limit(n, edges, tol::DEFAULT_MAX_N)
    }

    pub fn with_limit(n: usize, edges: &[(usize, usize)], max_n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > max_n {
            return Err(GraphError::BadOrder { n, max: max_n });
        }
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let v = a.max(b);
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Graph { n, edges: canon })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        self.edges.binary_search(&(i.min(j), i.max(j))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Neighbor bitsets; only valid for n ≤ 64 (enumeration paths).
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            masks[a] |= 1 << b;
            masks[b] |= 1 << a;
        }
        Some(masks)
    }

    /// Graph on the same vertices whose edges are the non-edges.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if !self.has_edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        Graph { n: self.n, edges }
    }

    /// Applies a vertex permutation: edge σ(i)σ(j) iff edge ij.
    pub fn relabel(&self, sigma: &[usize]) -> Result<Graph, GraphError> {
        if sigma.len() != self.n {
            return Err(GraphError::NotAPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &s in sigma {
            if s >= self.n || seen[s] {
                return Err(GraphError::NotAPermutation(self.n));
            }
            seen[s] = true;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (sigma[a], sigma[b]))
            .collect();
        Graph::with_limit(self.n, &edges, self.n)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Ordinary 0/1 adjacency matrix as a generalized adjacency matrix.
    pub fn adjacency_matrix(&self) -> GeneralizedAdjacency {
        let mut m = SymMatrix::zeros(self.n);
        for &(a, b) in &self.edges {
            m.set(a, b, 1.0);
        }
        GeneralizedAdjacency { graph: self.clone(), matrix: m }
    }

    pub fn render_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.n, self.edges.len());
        for &(a, b) in &self.edges {
            out.push_str(&format!("e {} {}\n", a + 1, b + 1));
        }
        out
    }

    pub fn render_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a, b));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, GraphError> {
    parse_graph_with_limit(text, format, tol::DEFAULT_MAX_N)
}

pub fn parse_graph_with_limit(
    text: &str,
    format: GraphFormat,
    max_n: usize,
) -> Result<Graph, GraphError> {
    match format {
        GraphFormat::Dimacs => parse_dimacs(text, max_n),
        GraphFormat::EdgeList => parse_edge_list(text, max_n),
    }
}

fn parse_dimacs(text: &str, max_n: usize) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if n.is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: "duplicate problem line".into(),
                    });
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("malformed header {line:?}, expected 'p edge <n> <m>'"),
                    });
                }
                let nv: usize = fields[2].parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("bad vertex count {:?}", fields[2]),
                })?;
                let _m: usize = fields[3].parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("bad edge count {:?}", fields[3]),
                })?;
                n = Some(nv);
            }
            "e" => {
                let nv = n.ok_or(GraphError::Parse {
                    line: line_no,
                    message: "edge before problem line".into(),
                })?;
                if fields.len() != 3 {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("malformed edge line {line:?}"),
                    });
                }
                let a: usize = fields[1].parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("bad endpoint {:?}", fields[1]),
                })?;
                let b: usize = fields[2].parse().map_err(|_| GraphError::Parse {
                    line: line_no,
                    message: format!("bad endpoint {:?}", fields[2]),
                })?;
                if a == 0 || b == 0 || a > nv || b > nv {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("vertex index out of range 1..={nv}"),
                    });
                }
                if a == b {
                    return Err(GraphError::Parse {
                        line: line_no,
                        message: format!("self-loop at vertex {a}"),
                    });
                }
                edges.push((a - 1, b - 1));
            }
            other => {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: format!("unknown record {other:?}"),
                })
            }
        }
    }
    let n = n.ok_or(GraphError::Parse { line: 0, message: "missing problem line".into() })?;
    Graph::with_limit(n, &edges, max_n)
}

fn parse_edge_list(text: &str, max_n: usize) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or(GraphError::Parse {
        line: 0,
        message: "empty input".into(),
    })?;
    let n: usize = first.parse().map_err(|_| GraphError::Parse {
        line: first_no,
        message: format!("expected vertex count, got {first:?}"),
    })?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("expected 'i j', got {line:?}"),
            });
        }
        let a: usize = fields[0].parse().map_err(|_| GraphError::Parse {
            line: line_no,
            message: format!("bad endpoint {:?}", fields[0]),
        })?;
        let b: usize = fields[1].parse().map_err(|_| GraphError::Parse {
            line: line_no,
            message: format!("bad endpoint {:?}", fields[1]),
        })?;
        if a >= n || b >= n {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("vertex index out of range 0..{n}"),
            });
        }
        if a == b {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("self-loop at vertex {a}"),
            });
        }
        edges.push((a, b));
    }
    Graph::with_limit(n, &edges, max_n)
}

/// Deterministic graph generators used as test fixtures. The cycle,
/// complete, Petersen, Kneser and circulant families are vertex-transitive,
/// which several verification suites rely on.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    Cycle(usize),
    Complete(usize),
    Path(usize),
    Star(usize),
    Petersen,
    Kneser(usize, usize),
    Circulant(usize, Vec<usize>),
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl GraphFamily {
    /// Parses a spec like `cycle:5`, `kneser:5:2`, `erdos_renyi:8:0.5:1`,
    /// or `circulant:7:1,2`.
    pub fn parse(spec: &str) -> Result<GraphFamily, GraphError> {
        let parts: Vec<&str> = spec.split(':').collect();
        let bad = |msg: &str| GraphError::BadFamily(format!("{spec:?}: {msg}"));
        let int = |s: &str| s.parse::<usize>().map_err(|_| bad("expected integer"));
        match parts[0] {
            "cycle" if parts.len() == 2 => Ok(GraphFamily::Cycle(int(parts[1])?)),
            "complete" if parts.len() == 2 => Ok(GraphFamily::Complete(int(parts[1])?)),
            "path" if parts.len() == 2 => Ok(GraphFamily::Path(int(parts[1])?)),
            "star" if parts.len() == 2 => Ok(GraphFamily::Star(int(parts[1])?)),
            "petersen" if parts.len() == 1 => Ok(GraphFamily::Petersen),
            "kneser" if parts.len() == 3 => Ok(GraphFamily::Kneser(int(parts[1])?, int(parts[2])?)),
            "circulant" if parts.len() == 3 => {
                let conns = parts[2]
                    .split(',')
                    .map(int)
                    .collect::<Result<Vec<usize>, _>>()?;
                Ok(GraphFamily::Circulant(int(parts[1])?, conns))
            }
            "erdos_renyi" if parts.len() == 4 => {
                let p: f64 = parts[2].parse().map_err(|_| bad("expected probability"))?;
                let seed: u64 = parts[3].parse().map_err(|_| bad("expected seed"))?;
                Ok(GraphFamily::ErdosRenyi { n: int(parts[1])?, p, seed })
            }
            _ => Err(bad("unknown family")),
        }
    }

    /// True for the families known to be vertex-transitive by construction.
    pub fn vertex_transitive(&self) -> bool {
        matches!(
            self,
            GraphFamily::Cycle(_)
                | GraphFamily::Complete(_)
                | GraphFamily::Petersen
                | GraphFamily::Kneser(_, _)
                | GraphFamily::Circulant(_, _)
        )
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.build_with_limit(tol::DEFAULT_MAX_N)
    }

    pub fn build_with_limit(&self, max_n: usize) -> Result<Graph, GraphError> {
        match self {
            GraphFamily::Cycle(n) => {
                if *n < 3 {
                    return Err(GraphError::BadFamily("cycle needs n >= 3".into()));
                }
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::with_limit(*n, &edges, max_n)
            }
            GraphFamily::Complete(n) => {
                let mut edges = Vec::new();
                for i in 0..*n {
                    for j in (i + 1)..*n {
                        edges.push((i, j));
                    }
                }
                Graph::with_limit(*n, &edges, max_n)
            }
            GraphFamily::Path(n) => {
                let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Graph::with_limit(*n, &edges, max_n)
            }
            GraphFamily::Star(k) => {
                if *k == 0 {
                    return Err(GraphError::BadFamily("star needs k >= 1".into()));
                }
                let edges: Vec<_> = (1..=*k).map(|i| (0, i)).collect();
                Graph::with_limit(k + 1, &edges, max_n)
            }
            GraphFamily::Petersen => GraphFamily::Kneser(5, 2).build_with_limit(max_n),
            GraphFamily::Kneser(n, k) => {
                if *k == 0 || *k > *n {
                    return Err(GraphError::BadFamily(format!("kneser({n},{k}) needs 1 <= k <= n")));
                }
                let subsets = k_subsets(*n, *k);
                let mut edges = Vec::new();
                for i in 0..subsets.len() {
                    for j in (i + 1)..subsets.len() {
                        if subsets[i] & subsets[j] == 0 {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::with_limit(subsets.len(), &edges, max_n)
            }
            GraphFamily::Circulant(n, conns) => {
                if *n == 0 {
                    return Err(GraphError::BadFamily("circulant needs n >= 1".into()));
                }
                let mut edges = Vec::new();
                for &c in conns {
                    if c == 0 || c >= *n {
                        return Err(GraphError::BadFamily(format!(
                            "circulant connection {c} outside 1..{n}"
                        )));
                    }
                    for i in 0..*n {
                        let j = (i + c) % n;
                        if i != j {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::with_limit(*n, &edges, max_n)
            }
            GraphFamily::ErdosRenyi { n, p, seed } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(GraphError::BadFamily(format!("p = {p} outside [0,1]")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut edges = Vec::new();
                for i in 0..*n {
                    for j in (i + 1)..*n {
                        if rng.gen::<f64>() < *p {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::with_limit(*n, &edges, max_n)
            }
        }
    }
}

/// Lexicographically ordered k-subsets of 0..n as bitmasks.
fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<u32>) {
        if current.len() == k {
            out.push(current.iter().fold(0u32, |m, &v| m | (1 << v)));
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Nonnegative vertex weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    entries: Vec<f64>,
}

impl WeightVector {
    pub fn new(entries: Vec<f64>) -> Result<Self, GraphError> {
        for (i, &v) in entries.iter().enumerate() {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(GraphError::BadWeights(format!("entry {i} = {v} is not a nonnegative real")));
            }
        }
        Ok(WeightVector { entries })
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector { entries: vec![1.0; n] }
    }

    pub fn parse(text: &str, n: usize) -> Result<Self, GraphError> {
        let vals: Vec<f64> = text
            .split_whitespace()
            .map(|t| t.parse::<f64>().map_err(|_| GraphError::BadWeights(format!("bad number {t:?}"))))
            .collect::<Result<_, _>>()?;
        if vals.len() != n {
            return Err(GraphError::BadWeights(format!("expected {n} weights, got {}", vals.len())));
        }
        Self::new(vals)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> f64 {
        self.entries[i]
    }

    pub fn norm_1(&self) -> f64 {
        self.entries.iter().sum()
    }

    pub fn norm_inf(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |a, &v| a.max(v))
    }

    /// Componentwise square root.
    pub fn sqrt(&self) -> Vec<f64> {
        self.entries.iter().map(|v| v.sqrt()).collect()
    }

    /// Indices with positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i] > 0.0).collect()
    }
}

/// A symmetric matrix vanishing on the diagonal and on non-edges of its
/// graph. `A ≥ 0` entrywise marks membership in the nonnegative family.
#[derive(Debug, Clone)]
pub struct GeneralizedAdjacency {
    graph: Graph,
    matrix: SymMatrix,
}

impl GeneralizedAdjacency {
    /// Validates support: diagonal zero and zero on non-edges.
    pub fn new(graph: Graph, matrix: SymMatrix) -> Result<Self, GraphError> {
        if matrix.order() != graph.n() {
            return Err(GraphError::BadMatrix(format!(
                "order {} does not match n = {}",
                matrix.order(),
                graph.n()
            )));
        }
        for i in 0..graph.n() {
            if matrix.get(i, i) != 0.0 {
                return Err(GraphError::BadMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in (i + 1)..graph.n() {
                if !graph.has_edge(i, j) && matrix.get(i, j) != 0.0 {
                    return Err(GraphError::BadMatrix(format!("nonzero entry on non-edge ({i},{j})")));
                }
            }
        }
        Ok(GeneralizedAdjacency { graph, matrix })
    }

    /// Zero matrix in the family of `graph`.
    pub fn zero(graph: Graph) -> Self {
        let n = graph.n();
        GeneralizedAdjacency { graph, matrix: SymMatrix::zeros(n) }
    }

    /// Random member, entries on edges uniform in [−1,1] (or [0,1] when
    /// `nonneg`), deterministic per seed.
    pub fn random(graph: &Graph, nonneg: bool, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = SymMatrix::zeros(graph.n());
        for &(a, b) in graph.edges() {
            let u: f64 = rng.gen();
            let v = if nonneg { u } else { 2.0 * u - 1.0 };
            m.set(a, b, v);
        }
        GeneralizedAdjacency { graph: graph.clone(), matrix: m }
    }

    /// Builds a matrix from per-edge weights listed in `graph.edges()` order.
    pub fn from_edge_weights(graph: &Graph, weights: &[f64]) -> Result<Self, GraphError> {
        if weights.len() != graph.edge_count() {
            return Err(GraphError::BadMatrix(format!(
                "expected {} edge weights, got {}",
                graph.edge_count(),
                weights.len()
            )));
        }
        let mut m = SymMatrix::zeros(graph.n());
        for (&(a, b), &w) in graph.edges().iter().zip(weights) {
            m.set(a, b, w);
        }
        Ok(GeneralizedAdjacency { graph: graph.clone(), matrix: m })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.matrix
    }

    pub fn edge_weights(&self) -> Vec<f64> {
        self.graph.edges().iter().map(|&(a, b)| self.matrix.get(a, b)).collect()
    }

    pub fn is_nonneg(&self) -> bool {
        self.graph
            .edges()
            .iter()
            .all(|&(a, b)| self.matrix.get(a, b) >= 0.0)
    }

    /// The scaled matrix Ã with λ_min = −1, its PSD companion I + Ã, and
    /// diagnostics about degenerate (near-zero) inputs.
    pub fn tilde_form(&self) -> Result<TildeForm, LinalgError> {
        let (tilde, neg_lambda_min) = linalg::normalize_tilde(&self.matrix)?;
        let treated_as_zero = neg_lambda_min == 0.0 && !self.matrix.is_zero();
        let i_plus = SymMatrix::identity(self.matrix.order()).add(&tilde);
        Ok(TildeForm { tilde, i_plus, neg_lambda_min, treated_as_zero })
    }
}

/// Ã together with I + Ã (which is PSD by construction).
#[derive(Debug, Clone)]
pub struct TildeForm {
    pub tilde: SymMatrix,
    pub i_plus: SymMatrix,
    /// −λ_min of the input matrix; 0.0 when the input was (numerically) zero.
    pub neg_lambda_min: f64,
    /// True when a nonzero input was below the zero threshold and got
    /// treated as the zero matrix.
    pub treated_as_zero: bool,
}

impl TildeForm {
    /// (I + Ã)^{1/2}, the column source of the diagonal-LMI constraint.
    pub fn sqrt_i_plus(&self) -> Result<SymMatrix, LinalgError> {
        linalg::psd_sqrt(&self.i_plus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_dimacs_path() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_dimacs_cycle_with_comments() {
        let text = "c five cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = parse_graph(text, GraphFormat::Dimacs).unwrap();
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        assert_eq!(g, c5);
    }

    #[test]
    fn parse_dimacs_rejects_self_loop() {
        let err = parse_graph("p edge 2 1\ne 1 1\n", GraphFormat::Dimacs).unwrap_err();
        match err {
            GraphError::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_dimacs_rejects_out_of_range() {
        let err = parse_graph("p edge 3 1\ne 1 4\n", GraphFormat::Dimacs).unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    #[test]
    fn roundtrip_both_formats() {
        let g = GraphFamily::Petersen.build().unwrap();
        let d = parse_graph(&g.render_dimacs(), GraphFormat::Dimacs).unwrap();
        assert_eq!(g, d);
        let e = parse_graph(&g.render_edge_list(), GraphFormat::EdgeList).unwrap();
        assert_eq!(g, e);
    }

    #[test]
    fn complement_involution_and_k5() {
        let k5 = GraphFamily::Complete(5).build().unwrap();
        assert_eq!(k5.complement().edge_count(), 0);
        let p = GraphFamily::Petersen.build().unwrap();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn c5_is_self_complementary() {
        // Brute-force isomorphism over all 120 vertex permutations.
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let comp = c5.complement();
        let mut perm = vec![0usize, 1, 2, 3, 4];
        let mut found = false;
        permute(&mut perm, 0, &mut |sigma| {
            if comp.relabel(sigma).unwrap() == c5 {
                found = true;
            }
        });
        assert!(found, "complement of C5 is isomorphic to C5");
    }

    fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn petersen_shape() {
        let g = GraphFamily::Petersen.build().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        for v in 0..10 {
            assert_eq!(g.degree(v), 3);
        }
        let kneser = GraphFamily::Kneser(5, 2).build().unwrap();
        assert_eq!(g, kneser);
    }

    #[test]
    fn erdos_renyi_deterministic() {
        let a = GraphFamily::ErdosRenyi { n: 8, p: 0.5, seed: 1 }.build().unwrap();
        let b = GraphFamily::ErdosRenyi { n: 8, p: 0.5, seed: 1 }.build().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kneser_rejects_bad_k() {
        assert!(GraphFamily::Kneser(3, 4).build().is_err());
    }

    #[test]
    fn relabel_cases() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let ident = c5.relabel(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(ident, c5);
        let rot = c5.relabel(&[1, 2, 3, 4, 0]).unwrap();
        assert_eq!(rot, c5);
        let p3 = GraphFamily::Path(3).build().unwrap();
        let swapped = p3.relabel(&[2, 1, 0]).unwrap();
        assert_eq!(swapped, p3);
        assert!(c5.relabel(&[0, 0, 1, 2, 3]).is_err());
    }

    #[test]
    fn adjacency_matrix_values() {
        let k2 = GraphFamily::Complete(2).build().unwrap();
        let a = k2.adjacency_matrix();
        assert_eq!(a.matrix().get(0, 1), 1.0);
        assert_eq!(a.matrix().get(0, 0), 0.0);

        let e3 = Graph::new(3, &[]).unwrap();
        assert!(e3.adjacency_matrix().matrix().is_zero());

        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let m = c5.adjacency_matrix();
        let first_row: Vec<f64> = (0..5).map(|j| m.matrix().get(0, j)).collect();
        assert_eq!(first_row, vec![0.0, 1.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn random_adjacency_determinism_and_sign() {
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let a = GeneralizedAdjacency::random(&c5, false, 7);
        let b = GeneralizedAdjacency::random(&c5, false, 7);
        assert_eq!(a.matrix(), b.matrix());
        let nn = GeneralizedAdjacency::random(&c5, true, 7);
        assert!(nn.is_nonneg());
        let empty = Graph::new(4, &[]).unwrap();
        assert!(GeneralizedAdjacency::random(&empty, false, 3).matrix().is_zero());
    }

    #[test]
    fn weight_vector_rejects_negative() {
        assert!(WeightVector::new(vec![1.0, -0.1]).is_err());
        let w = WeightVector::parse("1 0.5  2\n", 3).unwrap();
        assert_eq!(w.norm_1(), 3.5);
        assert_eq!(w.norm_inf(), 2.0);
    }

    #[test]
    fn tilde_form_c5_scale() {
        // λ_min of the 5-cycle adjacency is 2cos(4π/5) = −1.618…
        let c5 = GraphFamily::Cycle(5).build().unwrap();
        let form = c5.adjacency_matrix().tilde_form().unwrap();
        let phi = (1.0 + 5.0f64.sqrt()) / 2.0;
        assert!((form.neg_lambda_min - phi).abs() <= 1e-10);
        let e = form.tilde.eigen().unwrap();
        assert!((e.lambda_min() + 1.0).abs() <= 1e-10);
        // I + Ã is PSD.
        let ip = form.i_plus.eigen().unwrap();
        assert!(ip.lambda_min() >= -1e-10);
    }
}
