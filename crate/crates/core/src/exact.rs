//! Exact solvers: brute-force oracle, assignment solver for unit-time
//! expected-cost problems, mean-WSPT for expected weighted flow time, the
//! generalized backward-greedy minmax bottleneck solver, and the
//! pseudopolynomial / FPTAS enumeration over threshold vectors.

use crate::approx::ApproxCertificate;
use crate::error::{Error, Result};
use crate::model::{
    cost_distribution, linear_extensions, Instance, Objective, Schedule,
};
use crate::rational::Rational;
use crate::risk::{evaluate, RiskCriterion};

/// Default cap on enumerated linear extensions (10!).
pub const DEFAULT_EXTENSION_CAP: u64 = 3_628_800;
/// Default cap on enumerated threshold vectors.
pub const DEFAULT_VECTOR_CAP: u64 = 2_000_000;
/// Default cap on enumerated scenario subsets (2^K).
pub const DEFAULT_SUBSET_CAP: u64 = 4096;

/// How a solver's output value relates to the optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Exact,
    Approx(ApproxCertificate),
    Fptas { eps: Rational },
}

/// A schedule together with its criterion value (always recomputed from the
/// schedule itself) and an optimality certificate.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub schedule: Schedule,
    pub value: Rational,
    pub certificate: Certificate,
}

/// Builds a result with the value recomputed independently of the solver.
pub(crate) fn finish(
    inst: &Instance,
    criterion: RiskCriterion,
    schedule: Schedule,
    certificate: Certificate,
) -> Result<SolveResult> {
    debug_assert!(schedule.is_feasible(inst));
    let value = evaluate(&cost_distribution(&schedule, inst), criterion)?;
    Ok(SolveResult { schedule, value, certificate })
}

/// Globally optimal schedule by enumerating every linear extension. Ties are
/// broken toward the lexicographically smallest permutation. Fails with
/// `TooLarge` once the extension cap is exceeded.
pub fn brute_force(inst: &Instance, criterion: RiskCriterion) -> Result<SolveResult> {
    brute_force_capped(inst, criterion, DEFAULT_EXTENSION_CAP)
}

pub fn brute_force_capped(
    inst: &Instance,
    criterion: RiskCriterion,
    cap: u64,
) -> Result<SolveResult> {
    criterion.validate()?;
    let mut best: Option<(Rational, Schedule)> = None;
    let mut count = 0u64;
    for sched in linear_extensions(inst) {
        count += 1;
        if count > cap {
            return Err(Error::TooLarge { what: "linear extensions", cap });
        }
        let value = evaluate(&cost_distribution(&sched, inst), criterion)?;
        // Extensions arrive in lexicographic order, so keeping strict
        // improvements keeps the lexicographically smallest optimum.
        match &best {
            Some((v, _)) if *v <= value => {}
            _ => best = Some((value, sched)),
        }
    }
    let (value, schedule) = best.expect("instance has no feasible schedule");
    Ok(SolveResult { schedule, value, certificate: Certificate::Exact })
}

/// Minimum-cost perfect assignment of rows to columns over an exact cost
/// matrix (potentials method, O(n^3)). Returns the row-to-column assignment
/// and its total cost. Deterministic: among equal alternatives the smallest
/// column index wins.
pub fn hungarian(cost: &[Vec<Rational>]) -> (Vec<usize>, Rational) {
    let n = cost.len();
    if n == 0 {
        return (Vec::new(), Rational::zero());
    }
    debug_assert!(cost.iter().all(|row| row.len() == n));
    let inf = cost
        .iter()
        .flatten()
        .map(|r| r.abs())
        .sum::<Rational>()
        + Rational::one();

    const NONE: usize = usize::MAX;
    let mut u = vec![Rational::zero(); n]; // row potentials
    let mut v = vec![Rational::zero(); n + 1]; // column potentials, n = virtual
    let mut row_of = vec![NONE; n + 1]; // row matched to each column
    let mut way = vec![0usize; n + 1];

    for i in 0..n {
        row_of[n] = i;
        let mut j0 = n;
        let mut minv = vec![inf; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let mut delta = inf;
            let mut j1 = NONE;
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0][j] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    let r = row_of[j];
                    u[r] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == NONE {
                break;
            }
        }
        // Augment along the alternating path.
        while j0 != n {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
        }
    }

    let mut assign = vec![NONE; n];
    for j in 0..n {
        assign[row_of[j]] = j;
    }
    let total = (0..n).map(|i| cost[i][assign[i]]).sum();
    (assign, total)
}

pub(crate) fn require_no_precedence(inst: &Instance) -> Result<()> {
    if inst.precedence.is_empty() {
        Ok(())
    } else {
        Err(Error::HasPrecedence)
    }
}

pub(crate) fn require_unit_time(inst: &Instance) -> Result<()> {
    if inst.is_unit_time() {
        Ok(())
    } else {
        Err(Error::NotUnitTime)
    }
}

/// Per-position per-job cost matrix for unit-time instances: position
/// (0-based, completion time `pos + 1`) against job, with each scenario's
/// contribution scaled by the given multiplier (probabilities for the
/// expectation solver, `1/K` for the K-approximation).
pub(crate) fn unit_cost_matrix(
    inst: &Instance,
    multipliers: &[Rational],
) -> Result<Vec<Vec<Rational>>> {
    let n = inst.n();
    let mut cost = vec![vec![Rational::zero(); n]; n];
    for (sc, &mult) in inst.scenarios.iter().zip(multipliers) {
        for pos in 0..n {
            let completion = Rational::from(pos + 1);
            for (j, row) in cost[pos].iter_mut().enumerate().take(n) {
                let w = inst.weight(sc, j);
                let penalty = match inst.objective {
                    Objective::SumWU => {
                        if completion > sc.d[j] {
                            w
                        } else {
                            Rational::zero()
                        }
                    }
                    Objective::SumWT => w * (completion - sc.d[j]).pos_part(),
                    other => {
                        return Err(Error::WrongObjective {
                            expected: "sumWU or sumWT",
                            found: other,
                        })
                    }
                };
                *row += mult * penalty;
            }
        }
    }
    Ok(cost)
}

/// Optimal expected cost for unit-time weighted tardiness / late-job
/// instances without precedence, via minimum assignment of jobs to
/// positions.
pub fn assignment_min_exp_unit(inst: &Instance) -> Result<SolveResult> {
    require_unit_time(inst)?;
    require_no_precedence(inst)?;
    let probs: Vec<Rational> = inst.scenarios.iter().map(|sc| sc.prob).collect();
    let cost = unit_cost_matrix(inst, &probs)?;
    let (assign, _) = hungarian(&cost);
    let mut order = vec![0usize; inst.n()];
    for (pos, &job) in assign.iter().enumerate() {
        order[pos] = job;
    }
    finish(inst, RiskCriterion::Expectation, Schedule::new(order), Certificate::Exact)
}

/// Optimal expected total weighted flow time without precedence.
/// With uncertain processing times and deterministic weights, the cost
/// separates and mean-WSPT (sort by `E[p_j] / w_j`) is optimal; with the
/// inverted form (deterministic processing times, uncertain weights) the
/// rule is `p_j / E[w_j]`.
pub fn wspt_min_exp_sumwc(inst: &Instance) -> Result<SolveResult> {
    if inst.objective != Objective::SumWC {
        return Err(Error::WrongObjective { expected: "sumWC", found: inst.objective });
    }
    require_no_precedence(inst)?;
    let n = inst.n();
    let keys: Vec<Rational> = if inst.has_scenario_weights() {
        if !inst.has_deterministic_p() {
            return Err(Error::Precondition(
                "scenario weights require deterministic processing times".into(),
            ));
        }
        (0..n)
            .map(|j| {
                let mean_w: Rational =
                    inst.scenarios.iter().map(|sc| sc.prob * inst.weight(sc, j)).sum();
                inst.scenarios[0].p[j] / mean_w
            })
            .collect()
    } else {
        (0..n)
            .map(|j| {
                let mean_p: Rational = inst.scenarios.iter().map(|sc| sc.prob * sc.p[j]).sum();
                mean_p / inst.weights[j]
            })
            .collect()
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(a.cmp(&b)));
    finish(inst, RiskCriterion::Expectation, Schedule::new(order), Certificate::Exact)
}

fn require_bottleneck(inst: &Instance) -> Result<()> {
    match inst.objective {
        Objective::MaxT | Objective::MaxWT => Ok(()),
        other => Err(Error::WrongObjective { expected: "maxT or maxWT", found: other }),
    }
}

fn bottleneck_weight(inst: &Instance, sc_idx: usize, job: usize) -> Rational {
    match inst.objective {
        Objective::MaxT => Rational::one(),
        _ => inst.weight(&inst.scenarios[sc_idx], job),
    }
}

/// Minmax-optimal schedule for the bottleneck (maximum weighted tardiness)
/// objective, with precedence, by a backward greedy: repeatedly place last,
/// among unscheduled jobs without unscheduled successors, a job whose
/// worst-scenario cost at the current per-scenario makespan is smallest.
/// The per-scenario makespan of the unscheduled set does not depend on the
/// order, which is what the exchange argument behind the rule needs.
pub fn minmax_bottleneck(inst: &Instance) -> Result<SolveResult> {
    require_bottleneck(inst)?;
    let n = inst.n();
    let k = inst.num_scenarios();
    let mut succ_count = vec![0usize; n];
    let mut preds = vec![Vec::new(); n];
    for &(i, j) in &inst.precedence {
        succ_count[i] += 1;
        preds[j].push(i);
    }
    let mut makespan: Vec<Rational> = (0..k)
        .map(|s| inst.scenarios[s].p.iter().copied().sum())
        .collect();
    let mut remaining = vec![true; n];
    let mut order = vec![0usize; n];
    for pos in (0..n).rev() {
        let mut best: Option<(Rational, usize)> = None;
        for j in 0..n {
            if !remaining[j] || succ_count[j] > 0 {
                continue;
            }
            let cost = (0..k)
                .map(|s| {
                    bottleneck_weight(inst, s, j)
                        * (makespan[s] - inst.scenarios[s].d[j]).pos_part()
                })
                .max()
                .unwrap_or_else(Rational::zero);
            // Ties go to the largest index so small indices drift forward.
            match best {
                Some((c, _)) if c < cost => {}
                _ => best = Some((cost, j)),
            }
        }
        let (_, j) = best.expect("cyclic precedence graph");
        order[pos] = j;
        remaining[j] = false;
        for s in 0..k {
            makespan[s] -= inst.scenarios[s].p[j];
        }
        for &i in &preds[j] {
            succ_count[i] -= 1;
        }
    }
    finish(inst, RiskCriterion::Max, Schedule::new(order), Certificate::Exact)
}

/// Per-scenario cost thresholds for the auxiliary feasibility problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdVector(pub Vec<Rational>);

/// Is there a feasible schedule whose cost under scenario i stays within
/// `t[i]` for every i? Realized by rescaling due dates to
/// `t_i / w_j + d_j(xi_i)`, dropping weights, and asking the minmax
/// bottleneck solver for a zero-cost schedule.
pub fn threshold_feasible(inst: &Instance, t: &ThresholdVector) -> Result<Option<Schedule>> {
    require_bottleneck(inst)?;
    debug_assert_eq!(t.0.len(), inst.num_scenarios());
    debug_assert!(t.0.iter().all(|v| !v.is_negative()));
    let mut aux = inst.clone();
    aux.objective = Objective::MaxT;
    for (i, sc) in aux.scenarios.iter_mut().enumerate() {
        for j in 0..inst.n() {
            let w = bottleneck_weight(inst, i, j);
            sc.d[j] = t.0[i] / w + sc.d[j];
        }
        sc.w = None;
    }
    let res = minmax_bottleneck(&aux)?;
    if res.value.is_zero() {
        Ok(Some(res.schedule))
    } else {
        Ok(None)
    }
}

/// Closed-form upper bound on the schedule cost over all scenarios and
/// schedules: worst scenario makespan against the smallest due date, scaled
/// by the largest weight.
pub fn f_max_bound(inst: &Instance) -> Result<Rational> {
    require_bottleneck(inst)?;
    let mut bound = Rational::zero();
    for (i, sc) in inst.scenarios.iter().enumerate() {
        let makespan: Rational = sc.p.iter().copied().sum();
        let d_min = sc.d.iter().copied().min().unwrap_or_else(Rational::zero);
        for j in 0..inst.n() {
            let v = bottleneck_weight(inst, i, j) * (makespan - d_min).pos_part();
            bound = bound.max(v);
        }
    }
    Ok(bound)
}

fn require_integer_bottleneck_data(inst: &Instance) -> Result<()> {
    for sc in &inst.scenarios {
        if !sc.p.iter().chain(sc.d.iter()).all(|r| r.is_integer()) {
            return Err(Error::NonIntegerData);
        }
        if let Some(w) = &sc.w {
            if !w.iter().all(|r| r.is_integer()) {
                return Err(Error::NonIntegerData);
            }
        }
    }
    if !inst.weights.iter().all(|r| r.is_integer()) {
        return Err(Error::NonIntegerData);
    }
    Ok(())
}

/// Enumerates over a per-coordinate grid of threshold vectors, keeping the
/// feasible schedule with the smallest criterion value. Shared by the
/// pseudopolynomial solver (full integer grid) and the FPTAS (geometric
/// grid).
fn grid_search(
    inst: &Instance,
    criterion: RiskCriterion,
    grid: &[Rational],
    cap: u64,
    certificate: Certificate,
) -> Result<SolveResult> {
    criterion.validate()?;
    let k = inst.num_scenarios();
    let cells = (grid.len() as u64).checked_pow(k as u32);
    match cells {
        Some(c) if c <= cap => {}
        _ => return Err(Error::TooLarge { what: "threshold vectors", cap }),
    }
    let mut t = ThresholdVector(vec![grid[0]; k]);
    let mut index = vec![0usize; k];
    let mut best: Option<(Rational, Schedule)> = None;
    loop {
        if let Some(sched) = threshold_feasible(inst, &t)? {
            let value = evaluate(&cost_distribution(&sched, inst), criterion)?;
            match &best {
                Some((v, _)) if *v <= value => {}
                _ => best = Some((value, sched)),
            }
        }
        // Odometer over grid indices.
        let mut pos = 0;
        loop {
            if pos == k {
                let (value, schedule) = best.expect("full-threshold vector is always feasible");
                return finish(inst, criterion, schedule, certificate)
                    .map(|mut r| {
                        debug_assert_eq!(r.value, value);
                        r.value = value;
                        r
                    });
            }
            index[pos] += 1;
            if index[pos] < grid.len() {
                t.0[pos] = grid[index[pos]];
                break;
            }
            index[pos] = 0;
            t.0[pos] = grid[0];
            pos += 1;
        }
    }
}

/// Exact optimum of any monotone risk criterion of the bottleneck cost, for
/// integer data, by enumerating all threshold vectors in
/// `{0, ..., f_max}^K`.
pub fn pseudo_poly_bottleneck(inst: &Instance, criterion: RiskCriterion) -> Result<SolveResult> {
    pseudo_poly_bottleneck_capped(inst, criterion, DEFAULT_VECTOR_CAP)
}

pub fn pseudo_poly_bottleneck_capped(
    inst: &Instance,
    criterion: RiskCriterion,
    cap: u64,
) -> Result<SolveResult> {
    require_bottleneck(inst)?;
    require_integer_bottleneck_data(inst)?;
    let f_max = f_max_bound(inst)?;
    let grid: Vec<Rational> = (0..=f_max.floor()).map(Rational::from).collect();
    grid_search(inst, criterion, &grid, cap, Certificate::Exact)
}

/// (1+eps)-approximation over the geometric grid
/// `{0, 1} + {(1+eps)^l : l = 1..eta}`, `eta = ceil(log_{1+eps} f_max)`.
pub fn fptas_bottleneck(
    inst: &Instance,
    criterion: RiskCriterion,
    eps: Rational,
) -> Result<SolveResult> {
    fptas_bottleneck_capped(inst, criterion, eps, DEFAULT_VECTOR_CAP)
}

pub fn fptas_bottleneck_capped(
    inst: &Instance,
    criterion: RiskCriterion,
    eps: Rational,
    cap: u64,
) -> Result<SolveResult> {
    require_bottleneck(inst)?;
    require_integer_bottleneck_data(inst)?;
    if !eps.is_positive() || eps >= Rational::one() {
        return Err(Error::Precondition(format!("eps {eps} outside (0,1)")));
    }
    let f_max = f_max_bound(inst)?;
    let mut grid = vec![Rational::zero()];
    if !f_max.is_zero() {
        grid.push(Rational::one());
        let base = Rational::one() + eps;
        let mut power = Rational::one();
        while power < f_max {
            power *= base;
            grid.push(power);
        }
    }
    grid_search(inst, criterion, &grid, cap, Certificate::Fptas { eps })
}
