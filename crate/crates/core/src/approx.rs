//! Approximation algorithms with explicit certificates: expectation lifting
//! for CVaR, LP-relaxation rounding for total weighted completion time under
//! CVaR and VaR, and the K-approximation for unit-time minmax problems.

use crate::error::{Error, Result};
use crate::exact::{
    hungarian, require_no_precedence, require_unit_time, unit_cost_matrix, Certificate,
    SolveResult, DEFAULT_SUBSET_CAP,
};
use crate::lp::{build_vc_relaxation, solve_lp, LpStatus, Relation};
use crate::model::{Instance, Objective, Schedule};
use crate::rational::Rational;
use crate::risk::{check_cvar_alpha, check_var_alpha, RiskCriterion};

/// Slack used when float LP quantities are compared against exact values.
pub const LP_SLACK: f64 = 1e-6;

/// Which argument backs an approximation ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxBasis {
    LiftExpectation,
    LpRound2,
    VarSubsetLp,
    MeanAssignmentK,
}

/// A claimed performance guarantee: the returned value is at most
/// `ratio` times the optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxCertificate {
    pub ratio: Rational,
    pub basis: ApproxBasis,
}

impl ApproxCertificate {
    pub fn new(ratio: Rational, basis: ApproxBasis) -> Self {
        debug_assert!(ratio >= Rational::one());
        ApproxCertificate { ratio, basis }
    }
}

/// Lifts a sigma-approximate expected-cost solver to a CVaR guarantee: the
/// same schedule is within `sigma * min{1/Pr_min, 1/(1-alpha)}` of the CVaR
/// optimum.
pub fn lift_expectation_cvar(
    inst: &Instance,
    alpha: Rational,
    sigma: Rational,
    exp_solver: impl FnOnce(&Instance) -> Result<SolveResult>,
) -> Result<SolveResult> {
    check_cvar_alpha(alpha)?;
    let base = exp_solver(inst)?;
    let rho = inst.prob_min().recip().min((Rational::one() - alpha).recip());
    let cert = ApproxCertificate::new(sigma * rho, ApproxBasis::LiftExpectation);
    crate::exact::finish(
        inst,
        RiskCriterion::CVaR(alpha),
        base.schedule,
        Certificate::Approx(cert),
    )
}

/// Float LP byproducts of an LP-rounding solve, for bound checks.
#[derive(Clone, Debug)]
pub struct LpRoundInfo {
    /// Optimal value of the relaxation — a lower bound on the optimum.
    pub z_star: f64,
    /// Relaxed completion times the schedule was sorted by.
    pub c_star: Vec<f64>,
}

fn require_sumwc_det_p(inst: &Instance) -> Result<()> {
    if inst.objective != Objective::SumWC {
        return Err(Error::WrongObjective { expected: "sumWC", found: inst.objective });
    }
    if !inst.has_deterministic_p() {
        return Err(Error::Precondition(
            "completion-time relaxation needs deterministic processing times".into(),
        ));
    }
    Ok(())
}

/// Sorts jobs by relaxed completion time; ties by topological position and
/// then index, which keeps precedence feasibility for zero-length jobs.
fn schedule_from_c_star(inst: &Instance, c_star: &[f64]) -> Result<Schedule> {
    let topo = inst.topological_positions();
    // Keys quantized so float noise cannot reorder genuinely tied values.
    let key = |j: usize| (c_star[j] * 1e9).round() as i64;
    let mut order: Vec<usize> = (0..inst.n()).collect();
    order.sort_by_key(|&j| (key(j), topo[j], j));
    let sched = Schedule::new(order);
    if !sched.is_feasible(inst) {
        return Err(Error::LpFailure(
            "relaxed completion times inconsistent with precedence".into(),
        ));
    }
    Ok(sched)
}

fn lp_status_err(status: LpStatus) -> Error {
    Error::LpFailure(format!("relaxation terminated with status {status:?}"))
}

/// 2-approximation for Min-CVaR of total weighted completion time with
/// deterministic processing times and (possibly) scenario-dependent
/// weights: append CVaR variables gamma and u_k to the ordering relaxation,
/// solve, and sort by the relaxed completion times.
pub fn lp_round_cvar_sumwc(inst: &Instance, alpha: Rational) -> Result<SolveResult> {
    lp_round_cvar_sumwc_detailed(inst, alpha).map(|(res, _)| res)
}

pub fn lp_round_cvar_sumwc_detailed(
    inst: &Instance,
    alpha: Rational,
) -> Result<(SolveResult, LpRoundInfo)> {
    check_cvar_alpha(alpha)?;
    require_sumwc_det_p(inst)?;
    let n = inst.n();
    let k = inst.num_scenarios();

    // Extra columns: gamma (free), then u_1..u_K (nonnegative).
    let mut vc = build_vc_relaxation(inst, 1 + k);
    let gamma = vc.extra_start;
    vc.prob.bounds[gamma] = (f64::NEG_INFINITY, f64::INFINITY);
    vc.prob.objective[gamma] = 1.0;
    let scale = (Rational::one() - alpha).recip().to_f64();
    for (i, sc) in inst.scenarios.iter().enumerate() {
        vc.prob.objective[gamma + 1 + i] = scale * sc.prob.to_f64();
        // gamma + u_i - sum_j w_j(xi_i) C_j >= 0
        let mut entries = vec![(gamma, 1.0), (gamma + 1 + i, 1.0)];
        for j in 0..n {
            entries.push((vc.c_idx(j), -inst.weight(sc, j).to_f64()));
        }
        vc.prob.push_sparse_row(&entries, Relation::Ge, 0.0);
    }

    let sol = solve_lp(&vc.prob).map_err(|e| Error::LpFailure(e.to_string()))?;
    if sol.status != LpStatus::Optimal {
        return Err(lp_status_err(sol.status));
    }
    let c_star: Vec<f64> = (0..n).map(|j| sol.values[vc.c_idx(j)]).collect();
    let sched = schedule_from_c_star(inst, &c_star)?;

    // The rounding chain: every completion time is within twice its relaxed
    // counterpart, and the relaxation bounds the optimum from below.
    let completions = crate::model::completion_times(&sched, &inst.scenarios[0]);
    for j in 0..n {
        if completions[j].to_f64() > 2.0 * c_star[j] + LP_SLACK {
            return Err(Error::LpFailure(format!(
                "rounded completion time of job {j} exceeds twice its relaxed value"
            )));
        }
    }

    let cert = ApproxCertificate::new(Rational::from(2), ApproxBasis::LpRound2);
    let res = crate::exact::finish(
        inst,
        RiskCriterion::CVaR(alpha),
        sched,
        Certificate::Approx(cert),
    )?;
    if sol.objective > res.value.to_f64() + LP_SLACK {
        return Err(Error::LpFailure(
            "relaxation value exceeds the rounded schedule value".into(),
        ));
    }
    Ok((res, LpRoundInfo { z_star: sol.objective, c_star }))
}

/// 2-approximation for Min-VaR of total weighted completion time with a
/// constant number of scenarios: enumerate which scenarios may exceed the
/// threshold (probability mass at most 1 - alpha), solve a minmax LP over
/// the remaining ones, and round the best relaxation.
pub fn lp_round_var_sumwc(inst: &Instance, alpha: Rational) -> Result<SolveResult> {
    lp_round_var_sumwc_capped(inst, alpha, DEFAULT_SUBSET_CAP)
}

pub fn lp_round_var_sumwc_capped(
    inst: &Instance,
    alpha: Rational,
    cap: u64,
) -> Result<SolveResult> {
    check_var_alpha(alpha)?;
    require_sumwc_det_p(inst)?;
    let n = inst.n();
    let k = inst.num_scenarios();
    if k >= 63 || (1u64 << k) > cap {
        return Err(Error::TooLarge { what: "scenario subsets", cap });
    }

    let budget = Rational::one() - alpha;
    let mut best: Option<(f64, Vec<f64>)> = None;
    for mask in 0u64..(1 << k) {
        let excluded: Rational = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| inst.scenarios[i].prob)
            .sum();
        if excluded > budget || mask == (1 << k) - 1 {
            continue;
        }
        let mut vc = build_vc_relaxation(inst, 1);
        let theta = vc.extra_start;
        vc.prob.objective[theta] = 1.0;
        for (i, sc) in inst.scenarios.iter().enumerate() {
            if mask & (1 << i) != 0 {
                continue;
            }
            // theta - sum_j w_j(xi_i) C_j >= 0
            let mut entries = vec![(theta, 1.0)];
            for j in 0..n {
                entries.push((vc.c_idx(j), -inst.weight(sc, j).to_f64()));
            }
            vc.prob.push_sparse_row(&entries, Relation::Ge, 0.0);
        }
        let sol = solve_lp(&vc.prob).map_err(|e| Error::LpFailure(e.to_string()))?;
        if sol.status != LpStatus::Optimal {
            return Err(lp_status_err(sol.status));
        }
        match &best {
            Some((v, _)) if *v <= sol.objective => {}
            _ => {
                let c_star = (0..n).map(|j| sol.values[vc.c_idx(j)]).collect();
                best = Some((sol.objective, c_star));
            }
        }
    }
    let (_, c_star) = best.expect("the empty exclusion set is always admissible");
    let sched = schedule_from_c_star(inst, &c_star)?;
    let cert = ApproxCertificate::new(Rational::from(2), ApproxBasis::VarSubsetLp);
    crate::exact::finish(inst, RiskCriterion::VaR(alpha), sched, Certificate::Approx(cert))
}

/// K-approximation for minmax unit-time weighted tardiness / late jobs: an
/// optimal assignment for the uniform scenario average is within a factor K
/// of the minmax optimum (the maximum is at most the sum, which is K times
/// the average).
pub fn minmax_assignment_k_approx(inst: &Instance) -> Result<SolveResult> {
    require_unit_time(inst)?;
    require_no_precedence(inst)?;
    let k = inst.num_scenarios();
    let uniform = vec![Rational::from(k as i64).recip(); k];
    let cost = unit_cost_matrix(inst, &uniform)?;
    let (assign, _) = hungarian(&cost);
    let mut order = vec![0usize; inst.n()];
    for (pos, &job) in assign.iter().enumerate() {
        order[pos] = job;
    }
    let cert = ApproxCertificate::new(Rational::from(k), ApproxBasis::MeanAssignmentK);
    crate::exact::finish(
        inst,
        RiskCriterion::Max,
        Schedule::new(order),
        Certificate::Approx(cert),
    )
}
