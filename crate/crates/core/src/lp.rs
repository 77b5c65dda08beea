//! Dense linear programming.
//!
//! Two-phase tableau simplex with Bland's anti-cycling rule, plus the builder
//! for the relaxed linear-ordering formulation of feasible completion-time
//! vectors. Everything here works in floating point; the rest of the crate is
//! exact. Problem sizes are small (at most a few hundred rows), so a dense
//! tableau is adequate.

use crate::model::Instance;

/// Feasibility tolerance on constraint residuals.
pub const FEAS_TOL: f64 = 1e-7;
/// Entries at most this magnitude are treated as zero when pivoting.
pub const PIVOT_TOL: f64 = 1e-12;
/// Reduced-cost optimality tolerance.
pub const OPT_TOL: f64 = 1e-9;

const INF: f64 = f64::INFINITY;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

/// A minimization problem `min c'x` subject to rows `a'x {<=,=,>=} b` and
/// per-variable bounds. Default bounds are `[0, inf)`.
#[derive(Clone, Debug)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub rows: Vec<(Vec<f64>, Relation, f64)>,
    pub bounds: Vec<(f64, f64)>,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> Self {
        LpProblem {
            objective: vec![0.0; num_vars],
            rows: Vec::new(),
            bounds: vec![(0.0, INF); num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn push_row(&mut self, coeffs: Vec<f64>, rel: Relation, rhs: f64) {
        debug_assert_eq!(coeffs.len(), self.num_vars());
        self.rows.push((coeffs, rel, rhs));
    }

    /// Row with only a few nonzero coefficients.
    pub fn push_sparse_row(&mut self, entries: &[(usize, f64)], rel: Relation, rhs: f64) {
        let mut coeffs = vec![0.0; self.num_vars()];
        for &(j, v) in entries {
            coeffs[j] += v;
        }
        self.rows.push((coeffs, rel, rhs));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    /// Variable values; empty unless `status == Optimal`.
    pub values: Vec<f64>,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("numerical breakdown in simplex pivot")]
    NumericalBreakdown,
}

/// Solves the problem with a two-phase dense simplex. `Infeasible` and
/// `Unbounded` are reported through the status field; only numerical
/// breakdown is an error.
pub fn solve_lp(p: &LpProblem) -> Result<LpSolution, LpError> {
    let nv = p.num_vars();
    debug_assert!(p.bounds.len() == nv);
    debug_assert!(p.bounds.iter().all(|&(l, u)| l <= u));

    // Substitute variables so every standard-form column is nonnegative.
    // col_map[j] describes how to recover original variable j.
    enum Sub {
        Shift { col: usize, lower: f64 },       // x = lower + y
        Mirror { col: usize, upper: f64 },      // x = upper - y
        Split { pos: usize, neg: usize },       // x = y+ - y-
    }
    let mut subs = Vec::with_capacity(nv);
    let mut ncols = 0usize;
    let mut extra_rows: Vec<(usize, f64)> = Vec::new(); // (col, ub) rows y <= ub
    for &(l, u) in &p.bounds {
        if l.is_finite() {
            subs.push(Sub::Shift { col: ncols, lower: l });
            if u.is_finite() {
                extra_rows.push((ncols, u - l));
            }
            ncols += 1;
        } else if u.is_finite() {
            subs.push(Sub::Mirror { col: ncols, upper: u });
            ncols += 1;
        } else {
            subs.push(Sub::Split { pos: ncols, neg: ncols + 1 });
            ncols += 2;
        }
    }

    let nrows = p.rows.len() + extra_rows.len();
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(nrows);
    let mut b: Vec<f64> = Vec::with_capacity(nrows);
    let mut rels: Vec<Relation> = Vec::with_capacity(nrows);
    for (coeffs, rel, rhs) in &p.rows {
        let mut row = vec![0.0; ncols];
        let mut shift = 0.0;
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            match subs[j] {
                Sub::Shift { col, lower } => {
                    row[col] += c;
                    shift += c * lower;
                }
                Sub::Mirror { col, upper } => {
                    row[col] -= c;
                    shift += c * upper;
                }
                Sub::Split { pos, neg } => {
                    row[pos] += c;
                    row[neg] -= c;
                }
            }
        }
        a.push(row);
        b.push(rhs - shift);
        rels.push(*rel);
    }
    for &(col, ub) in &extra_rows {
        let mut row = vec![0.0; ncols];
        row[col] = 1.0;
        a.push(row);
        b.push(ub);
        rels.push(Relation::Le);
    }

    // Objective over standard columns plus a constant from the shifts.
    let mut cost = vec![0.0; ncols];
    let mut obj_const = 0.0;
    for (j, &c) in p.objective.iter().enumerate() {
        match subs[j] {
            Sub::Shift { col, lower } => {
                cost[col] += c;
                obj_const += c * lower;
            }
            Sub::Mirror { col, upper } => {
                cost[col] -= c;
                obj_const += c * upper;
            }
            Sub::Split { pos, neg } => {
                cost[pos] += c;
                cost[neg] -= c;
            }
        }
    }

    // Normalize rhs signs, then append slack/surplus/artificial columns.
    for i in 0..a.len() {
        if b[i] < 0.0 {
            b[i] = -b[i];
            for v in a[i].iter_mut() {
                *v = -*v;
            }
            rels[i] = match rels[i] {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }
    let m = a.len();
    let mut total = ncols;
    let mut basis = vec![usize::MAX; m];
    let mut artificial_start = usize::MAX;
    // First slacks/surpluses, then artificials, so artificial columns form a
    // contiguous suffix that phase 2 can ignore.
    let mut needs_artificial = vec![false; m];
    for i in 0..m {
        match rels[i] {
            Relation::Le => {
                for (r, row) in a.iter_mut().enumerate() {
                    row.push(if r == i { 1.0 } else { 0.0 });
                }
                basis[i] = total;
                total += 1;
            }
            Relation::Ge => {
                for (r, row) in a.iter_mut().enumerate() {
                    row.push(if r == i { -1.0 } else { 0.0 });
                }
                total += 1;
                needs_artificial[i] = true;
            }
            Relation::Eq => needs_artificial[i] = true,
        }
    }
    for i in 0..m {
        if needs_artificial[i] {
            if artificial_start == usize::MAX {
                artificial_start = total;
            }
            for (r, row) in a.iter_mut().enumerate() {
                row.push(if r == i { 1.0 } else { 0.0 });
            }
            basis[i] = total;
            total += 1;
        }
    }
    if artificial_start == usize::MAX {
        artificial_start = total;
    }

    let mut tab = Tableau { a, b, basis, ncols: total };

    // Phase 1: minimize the sum of artificials.
    if artificial_start < total {
        let mut phase1 = vec![0.0; total];
        for c in phase1.iter_mut().skip(artificial_start) {
            *c = 1.0;
        }
        match tab.optimize(&phase1, total)? {
            Outcome::Optimal => {}
            Outcome::Unbounded => unreachable!("phase-1 objective is bounded below by 0"),
        }
        let infeas: f64 = tab
            .basis
            .iter()
            .zip(&tab.b)
            .filter(|(&j, _)| j >= artificial_start)
            .map(|(_, &v)| v)
            .sum();
        if infeas > FEAS_TOL {
            return Ok(LpSolution { status: LpStatus::Infeasible, values: vec![], objective: 0.0 });
        }
        tab.drive_out_artificials(artificial_start);
    }

    // Phase 2: original objective; artificial columns are banned.
    let mut phase2 = vec![0.0; total];
    phase2[..ncols].copy_from_slice(&cost);
    match tab.optimize(&phase2, artificial_start)? {
        Outcome::Unbounded => {
            return Ok(LpSolution {
                status: LpStatus::Unbounded,
                values: vec![],
                objective: f64::NEG_INFINITY,
            })
        }
        Outcome::Optimal => {}
    }

    // Recover original variables.
    let mut std_vals = vec![0.0; total];
    for (i, &j) in tab.basis.iter().enumerate() {
        std_vals[j] = tab.b[i];
    }
    let mut values = vec![0.0; nv];
    for (j, sub) in subs.iter().enumerate() {
        values[j] = match *sub {
            Sub::Shift { col, lower } => lower + std_vals[col],
            Sub::Mirror { col, upper } => upper - std_vals[col],
            Sub::Split { pos, neg } => std_vals[pos] - std_vals[neg],
        };
    }
    let objective: f64 = p
        .objective
        .iter()
        .zip(&values)
        .map(|(&c, &x)| c * x)
        .sum::<f64>();
    debug_assert!((objective - (dot(&cost, &std_vals[..ncols]) + obj_const)).abs() < 1e-6);

    // Certify the solution before reporting it optimal.
    for (coeffs, rel, rhs) in &p.rows {
        let lhs = dot(coeffs, &values);
        let resid = match rel {
            Relation::Le => lhs - rhs,
            Relation::Ge => rhs - lhs,
            Relation::Eq => (lhs - rhs).abs(),
        };
        if resid > FEAS_TOL {
            return Err(LpError::NumericalBreakdown);
        }
    }
    for (j, &(l, u)) in p.bounds.iter().enumerate() {
        if values[j] < l - 1e-9 || values[j] > u + 1e-9 {
            return Err(LpError::NumericalBreakdown);
        }
    }

    Ok(LpSolution { status: LpStatus::Optimal, values, objective })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}

enum Outcome {
    Optimal,
    Unbounded,
}

struct Tableau {
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    /// Runs simplex iterations with Bland's rule over columns `< allowed`.
    fn optimize(&mut self, cost: &[f64], allowed: usize) -> Result<Outcome, LpError> {
        loop {
            // Reduced costs from the current basis, recomputed each
            // iteration; O(mn) per iteration is fine at this scale.
            let cb: Vec<f64> = self.basis.iter().map(|&j| cost[j]).collect();
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let red = cost[j] - self.a.iter().zip(&cb).map(|(row, &c)| c * row[j]).sum::<f64>();
                if red < -OPT_TOL {
                    entering = Some(j);
                    break; // Bland: smallest eligible index
                }
            }
            let Some(j) = entering else { return Ok(Outcome::Optimal) };

            let mut leaving: Option<(usize, f64)> = None;
            for i in 0..self.a.len() {
                let aij = self.a[i][j];
                if aij > PIVOT_TOL {
                    let ratio = self.b[i] / aij;
                    match leaving {
                        None => leaving = Some((i, ratio)),
                        Some((bi, br)) => {
                            // Bland tie-break: smallest basic variable index.
                            if ratio < br - PIVOT_TOL
                                || (ratio <= br + PIVOT_TOL && self.basis[i] < self.basis[bi])
                            {
                                leaving = Some((i, ratio));
                            }
                        }
                    }
                }
            }
            let Some((r, _)) = leaving else { return Ok(Outcome::Unbounded) };
            self.pivot(r, j)?;
        }
    }

    fn pivot(&mut self, r: usize, j: usize) -> Result<(), LpError> {
        let piv = self.a[r][j];
        if piv.abs() < PIVOT_TOL {
            return Err(LpError::NumericalBreakdown);
        }
        let inv = 1.0 / piv;
        for v in self.a[r].iter_mut() {
            *v *= inv;
        }
        self.b[r] *= inv;
        for i in 0..self.a.len() {
            if i == r {
                continue;
            }
            let f = self.a[i][j];
            if f == 0.0 {
                continue;
            }
            for k in 0..self.ncols {
                let sub = f * self.a[r][k];
                self.a[i][k] -= sub;
            }
            self.a[i][j] = 0.0;
            self.b[i] -= f * self.b[r];
        }
        self.basis[r] = j;
        Ok(())
    }

    /// Replaces basic artificials by structural columns where possible.
    /// Rows where no structural pivot exists are redundant and keep a zero
    /// artificial, which phase 2 can never move off zero.
    fn drive_out_artificials(&mut self, artificial_start: usize) {
        for r in 0..self.basis.len() {
            if self.basis[r] < artificial_start {
                continue;
            }
            if let Some(j) = (0..artificial_start).find(|&j| self.a[r][j].abs() > 1e-9) {
                let _ = self.pivot(r, j);
            }
        }
    }
}

/// Index map for the linear-ordering relaxation built by
/// [`build_vc_relaxation`].
pub struct VcRelaxation {
    pub prob: LpProblem,
    n: usize,
    /// First index of the caller-reserved extra variables.
    pub extra_start: usize,
}

impl VcRelaxation {
    /// Column of the ordering variable "i before j" (i != j).
    pub fn delta_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i != j && i < self.n && j < self.n);
        i * (self.n - 1) + if j < i { j } else { j - 1 }
    }

    /// Column of the completion time of job j.
    pub fn c_idx(&self, j: usize) -> usize {
        self.n * (self.n - 1) + j
    }
}

/// Builds the relaxed ordering formulation of feasible completion times:
/// ordering variables `delta_ij` in [0, 1] (fixed to 1 on precedence edges),
/// pairwise rows `delta_ij + delta_ji = 1`, cyclic triangle rows, and derived
/// completion-time rows `C_j = p_j + sum_i delta_ij p_i`. Processing times
/// must be deterministic (identical across scenarios); the first scenario's
/// vector is used. `extra_vars` columns are appended for the caller's risk
/// variables, with zero objective and `[0, inf)` bounds.
pub fn build_vc_relaxation(inst: &Instance, extra_vars: usize) -> VcRelaxation {
    let n = inst.n();
    debug_assert!(inst.has_deterministic_p());
    let p: Vec<f64> = inst.scenarios[0].p.iter().map(|r| r.to_f64()).collect();
    let num_delta = n * (n - 1);
    let total = num_delta + n + extra_vars;
    let mut prob = LpProblem::new(total);
    let vc = VcRelaxation { prob: LpProblem::new(0), n, extra_start: num_delta + n };

    for i in 0..n {
        for j in 0..n {
            if i != j {
                prob.bounds[vc.delta_idx(i, j)] = (0.0, 1.0);
            }
        }
    }
    for &(i, j) in &inst.precedence {
        prob.bounds[vc.delta_idx(i, j)] = (1.0, 1.0);
        prob.bounds[vc.delta_idx(j, i)] = (0.0, 0.0);
    }

    // C_j - sum_{i != j} p_i delta_ij = p_j
    for j in 0..n {
        let mut entries = vec![(vc.c_idx(j), 1.0)];
        for i in 0..n {
            if i != j {
                entries.push((vc.delta_idx(i, j), -p[i]));
            }
        }
        prob.push_sparse_row(&entries, Relation::Eq, p[j]);
    }
    // delta_ij + delta_ji = 1
    for i in 0..n {
        for j in (i + 1)..n {
            prob.push_sparse_row(
                &[(vc.delta_idx(i, j), 1.0), (vc.delta_idx(j, i), 1.0)],
                Relation::Eq,
                1.0,
            );
        }
    }
    // delta_ij + delta_jk + delta_ki >= 1 for all ordered distinct triples
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                prob.push_sparse_row(
                    &[
                        (vc.delta_idx(i, j), 1.0),
                        (vc.delta_idx(j, k), 1.0),
                        (vc.delta_idx(k, i), 1.0),
                    ],
                    Relation::Ge,
                    1.0,
                );
            }
        }
    }

    VcRelaxation { prob, n, extra_start: num_delta + n }
}

/// Checks the subset inequalities `sum p_j C_j >= ((sum p_j)^2 + sum p_j^2)/2`
/// on the given subsets; returns the worst violation (negative slack).
pub fn queyranne_violation(p: &[f64], c: &[f64], subsets: &[Vec<usize>]) -> f64 {
    let mut worst: f64 = 0.0;
    for set in subsets {
        let lhs: f64 = set.iter().map(|&j| p[j] * c[j]).sum();
        let sp: f64 = set.iter().map(|&j| p[j]).sum();
        let sp2: f64 = set.iter().map(|&j| p[j] * p[j]).sum();
        let rhs = 0.5 * (sp * sp + sp2);
        worst = worst.min(lhs - rhs);
    }
    worst
}
