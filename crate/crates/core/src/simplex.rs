//! Small dense linear-programming solver.
//!
//! Two-phase primal simplex on a dense tableau. Entering columns follow
//! Dantzig's rule until a run of degenerate pivots (3n of them) switches
//! the solver to Bland's rule, which guarantees termination. Problem sizes
//! here are tiny (stable-set columns for n ≤ 20, cutting-plane masters),
//! so no factorization updates are attempted.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LpError {
    #[error("simplex iteration limit reached after {0} pivots")]
    IterationLimit(usize),
    #[error("malformed program: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Variables are implicitly bounded below by zero; upper bounds are
/// optional per variable.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub upper_bounds: Vec<Option<f64>>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let n = objective.len();
        LinearProgram { sense, objective, constraints: Vec::new(), upper_bounds: vec![None; n] }
    }

    pub fn constrain(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint { coeffs, relation, rhs });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Values of the original variables (empty unless optimal).
    pub primal: Vec<f64>,
    /// One multiplier per caller constraint, signed so that
    /// Σ dual_i · rhs_i (+ upper-bound terms) equals the objective.
    pub dual: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

impl LpSolution {
    fn status_only(status: LpStatus, iterations: usize) -> Self {
        LpSolution { status, primal: vec![], dual: vec![], objective: 0.0, iterations }
    }
}

const PIVOT_TOL: f64 = 1e-11;
const COST_TOL: f64 = 1e-9;

pub fn solve_lp(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    let nv = lp.objective.len();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != nv {
            return Err(LpError::Malformed(format!(
                "constraint {i} has {} coefficients, expected {nv}",
                c.coeffs.len()
            )));
        }
        if !c.rhs.is_finite() || c.coeffs.iter().any(|v| !v.is_finite()) {
            return Err(LpError::Malformed(format!("constraint {i} has non-finite data")));
        }
    }
    if lp.upper_bounds.len() != nv {
        return Err(LpError::Malformed("upper_bounds length mismatch".into()));
    }

    // Caller rows first, then upper-bound rows.
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = lp
        .constraints
        .iter()
        .map(|c| (c.coeffs.clone(), c.relation, c.rhs))
        .collect();
    for (j, ub) in lp.upper_bounds.iter().enumerate() {
        if let Some(u) = ub {
            let mut coeffs = vec![0.0; nv];
            coeffs[j] = 1.0;
            rows.push((coeffs, Relation::Le, *u));
        }
    }

    let m = rows.len();
    let sign = match lp.sense {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };
    // Internal problem always maximizes.
    let c_int: Vec<f64> = lp.objective.iter().map(|v| v * sign).collect();

    // Column layout: [vars | slacks (Le/Ge rows) | artificials].
    let slack_rows: Vec<usize> = (0..m).filter(|&i| rows[i].1 != Relation::Eq).collect();
    let n_slack = slack_rows.len();
    let art0 = nv + n_slack;
    let ncols = nv + n_slack + m;

    let mut t = Tableau::new(m, ncols);
    let mut row_flip = vec![1.0f64; m];
    for (i, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        for j in 0..nv {
            t.set(i, j, coeffs[j]);
        }
        if let Some(s) = slack_rows.iter().position(|&r| r == i) {
            let v = match rel {
                Relation::Le => 1.0,
                Relation::Ge => -1.0,
                Relation::Eq => unreachable!(),
            };
            t.set(i, nv + s, v);
        }
        t.set_rhs(i, *rhs);
        if t.rhs(i) < 0.0 {
            row_flip[i] = -1.0;
            t.negate_row(i);
        }
        t.set(i, art0 + i, 1.0);
        t.basis[i] = art0 + i;
    }

    let iteration_cap = 2000 + 200 * (m + ncols);
    let mut iterations = 0usize;

    // Phase 1: maximize −Σ artificials.
    let mut phase1_cost = vec![0.0; ncols];
    for i in 0..m {
        phase1_cost[art0 + i] = -1.0;
    }
    t.install_objective(&phase1_cost);
    t.run(&phase1_cost, None, iteration_cap, &mut iterations)?;
    if t.objective_value() < -1e-7 {
        return Ok(LpSolution::status_only(LpStatus::Infeasible, iterations));
    }
    t.drive_out_artificials(art0);

    // Phase 2: real objective, artificials barred from entering.
    let mut phase2_cost = vec![0.0; ncols];
    phase2_cost[..nv].copy_from_slice(&c_int);
    t.install_objective(&phase2_cost);
    let unbounded = t.run(&phase2_cost, Some(art0), iteration_cap, &mut iterations)?;
    if unbounded {
        return Ok(LpSolution::status_only(LpStatus::Unbounded, iterations));
    }

    let mut primal = vec![0.0; nv];
    for i in 0..m {
        if t.basis[i] < nv {
            primal[t.basis[i]] = t.rhs(i);
        }
    }
    // Duals read from the reduced costs of the artificial columns.
    let n_caller = lp.constraints.len();
    let mut dual = Vec::with_capacity(n_caller);
    for i in 0..n_caller {
        dual.push(sign * row_flip[i] * t.obj[art0 + i]);
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        primal,
        dual,
        objective: sign * t.objective_value(),
        iterations,
    })
}

struct Tableau {
    m: usize,
    ncols: usize,
    /// m rows of (ncols coefficients + rhs).
    data: Vec<f64>,
    /// Reduced costs z_j − c_j.
    obj: Vec<f64>,
    obj_value: f64,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(m: usize, ncols: usize) -> Self {
        Tableau {
            m,
            ncols,
            data: vec![0.0; m * (ncols + 1)],
            obj: vec![0.0; ncols],
            obj_value: 0.0,
            basis: vec![0; m],
        }
    }

    #[inline]
    fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * (self.ncols + 1) + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * (self.ncols + 1) + j] = v;
    }

    #[inline]
    fn rhs(&self, i: usize) -> f64 {
        self.data[i * (self.ncols + 1) + self.ncols]
    }

    #[inline]
    fn set_rhs(&mut self, i: usize, v: f64) {
        self.data[i * (self.ncols + 1) + self.ncols] = v;
    }

    fn negate_row(&mut self, i: usize) {
        let w = self.ncols + 1;
        for v in &mut self.data[i * w..(i + 1) * w] {
            *v = -*v;
        }
    }

    fn objective_value(&self) -> f64 {
        self.obj_value
    }

    /// Rebuilds reduced costs z_j − c_j for the given cost vector by
    /// pricing out the current basis.
    fn install_objective(&mut self, cost: &[f64]) {
        for j in 0..self.ncols {
            let mut z = 0.0;
            for i in 0..self.m {
                z += cost[self.basis[i]] * self.get(i, j);
            }
            self.obj[j] = z - cost[j];
        }
        let mut v = 0.0;
        for i in 0..self.m {
            v += cost[self.basis[i]] * self.rhs(i);
        }
        self.obj_value = v;
    }

    /// Simplex iterations; returns Ok(true) when unbounded.
    fn run(
        &mut self,
        _cost: &[f64],
        barred_from: Option<usize>,
        cap: usize,
        iterations: &mut usize,
    ) -> Result<bool, LpError> {
        let mut degenerate_run = 0usize;
        let bland_after = 3 * (self.ncols + 1);
        loop {
            let bland = degenerate_run >= bland_after;
            let col_limit = barred_from.unwrap_or(self.ncols);
            let entering = if bland {
                (0..col_limit).find(|&j| self.obj[j] < -COST_TOL)
            } else {
                let mut best: Option<(usize, f64)> = None;
                for j in 0..col_limit {
                    let r = self.obj[j];
                    if r < -COST_TOL && best.map_or(true, |(_, b)| r < b) {
                        best = Some((j, r));
                    }
                }
                best.map(|(j, _)| j)
            };
            let Some(e) = entering else {
                return Ok(false);
            };

            // Ratio test; ties resolved by smallest basis index (Bland-safe).
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.m {
                let a = self.get(i, e);
                if a > PIVOT_TOL {
                    let ratio = self.rhs(i) / a;
                    let better = match leave {
                        None => true,
                        Some((li, lr)) => {
                            ratio < lr - PIVOT_TOL
                                || (ratio < lr + PIVOT_TOL && self.basis[i] < self.basis[li])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((l, ratio)) = leave else {
                return Ok(true);
            };

            degenerate_run = if ratio <= PIVOT_TOL { degenerate_run + 1 } else { 0 };
            self.pivot(l, e);
            *iterations += 1;
            if *iterations > cap {
                return Err(LpError::IterationLimit(*iterations));
            }
        }
    }

    /// Pivots basic artificials out on any usable non-artificial entry.
    /// A row whose entries all sit in the artificial block is redundant;
    /// its artificial stays basic at level zero and cannot grow, since
    /// every later pivot scales it by a ~zero column entry.
    fn drive_out_artificials(&mut self, art0: usize) {
        for i in 0..self.m {
            if self.basis[i] < art0 {
                continue;
            }
            let col = (0..art0).find(|&j| self.get(i, j).abs() > 1e-9);
            if let Some(j) = col {
                self.pivot(i, j);
            }
        }
    }

    fn pivot(&mut self, l: usize, e: usize) {
        let w = self.ncols + 1;
        let p = self.get(l, e);
        for j in 0..w {
            self.data[l * w + j] /= p;
        }
        for i in 0..self.m {
            if i == l {
                continue;
            }
            let f = self.get(i, e);
            if f != 0.0 {
                for j in 0..w {
                    self.data[i * w + j] -= f * self.data[l * w + j];
                }
            }
        }
        let f = self.obj[e];
        if f != 0.0 {
            for j in 0..self.ncols {
                self.obj[j] -= f * self.data[l * w + j];
            }
            self.obj_value -= f * self.rhs(l);
        }
        // obj_value tracks z = c_B B^{-1} b, which grows as −(z_e − c_e)·ratio.
        self.basis[l] = e;
    }
}
