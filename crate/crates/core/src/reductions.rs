//! Constructive reduction gadgets and scenario transforms. Every generator
//! here has a defining property (an iff against a threshold, or an exact
//! cost identity) that is brute-force checkable on small inputs; the tests
//! exercise those properties directly.

use crate::error::{Error, Result};
use crate::model::{Instance, Objective, Scenario, Schedule};
use crate::rational::Rational;

/// A CNF formula with at most three literals per clause. Literals are
/// nonzero signed integers, 1-based: `v` stands for variable v, `-v` for
/// its negation (the DIMACS convention).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::DegenerateFormula("formula with no variables".into()));
        }
        for clause in &clauses {
            if clause.is_empty() {
                return Err(Error::DegenerateFormula("empty clause".into()));
            }
            if clause.len() > 3 {
                return Err(Error::DegenerateFormula(format!(
                    "clause with {} literals",
                    clause.len()
                )));
            }
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::DegenerateFormula(format!("invalid literal {lit}")));
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    /// Number of clauses satisfied by the assignment (`assignment[v]` is the
    /// value of variable v+1).
    pub fn satisfied_count(&self, assignment: &[bool]) -> usize {
        debug_assert_eq!(assignment.len(), self.num_vars);
        self.clauses
            .iter()
            .filter(|clause| {
                clause.iter().any(|&lit| {
                    let v = lit.unsigned_abs() as usize - 1;
                    (lit > 0) == assignment[v]
                })
            })
            .count()
    }

    /// Minimum over all assignments of the number of satisfied clauses.
    pub fn min_satisfied(&self) -> usize {
        assignments(self.num_vars)
            .map(|a| self.satisfied_count(&a))
            .min()
            .expect("at least one assignment")
    }

    pub fn is_satisfiable(&self) -> bool {
        assignments(self.num_vars).any(|a| self.satisfied_count(&a) == self.num_clauses())
    }
}

/// Iterator over all assignments to `n` variables.
pub fn assignments(n: usize) -> impl Iterator<Item = Vec<bool>> {
    assert!(n < 32);
    (0u32..1 << n).map(move |bits| (0..n).map(|v| bits & (1 << v) != 0).collect())
}

/// A Min-Max 0-1 Selection instance: choose exactly `q` of `num_items`
/// items minimizing the maximum scenario cost; `costs[i][j]` in {0,1} is
/// the cost of item j under scenario i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionInstance {
    pub num_items: usize,
    pub q: usize,
    pub costs: Vec<Vec<u8>>,
}

impl SelectionInstance {
    pub fn new(num_items: usize, q: usize, costs: Vec<Vec<u8>>) -> Result<Self> {
        if num_items == 0 || q == 0 || q > num_items {
            return Err(Error::Precondition(format!(
                "selection needs 1 <= q <= n, got q={q}, n={num_items}"
            )));
        }
        if costs.is_empty()
            || costs
                .iter()
                .any(|row| row.len() != num_items || row.iter().any(|&c| c > 1))
        {
            return Err(Error::Precondition("costs must be a K x n binary matrix".into()));
        }
        Ok(SelectionInstance { num_items, q, costs })
    }

    /// Exact optimum by enumerating all q-subsets.
    pub fn minmax_brute_force(&self) -> u32 {
        let n = self.num_items;
        assert!(n < 25);
        let mut best = u32::MAX;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() != self.q as u32 {
                continue;
            }
            let worst = self
                .costs
                .iter()
                .map(|row| {
                    (0..n)
                        .filter(|&j| mask & (1 << j) != 0)
                        .map(|j| row[j] as u32)
                        .sum::<u32>()
                })
                .max()
                .unwrap();
            best = best.min(worst);
        }
        best
    }
}

/// Job of the positive literal of (0-based) variable `v`.
pub fn pos_job(v: usize) -> usize {
    2 * v
}

/// Job of the negated literal of (0-based) variable `v`.
pub fn neg_job(v: usize) -> usize {
    2 * v + 1
}

fn job_of_literal(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        pos_job(v)
    } else {
        neg_job(v)
    }
}

fn job_of_negated_literal(lit: i32) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        neg_job(v)
    } else {
        pos_job(v)
    }
}

/// Clause due-date row over the 2n literal jobs: a literal's own job is due
/// one slot before the end of its variable's pair, its complement at the
/// end; variables absent from the clause have both jobs due at the end of
/// their pair.
fn clause_due_dates(num_vars: usize, clause: &[i32]) -> Vec<Rational> {
    let mut d: Vec<Rational> = (0..num_vars)
        .flat_map(|v| {
            let end = Rational::from(2 * (v + 1));
            [end, end]
        })
        .collect();
    for &lit in clause {
        let v = lit.unsigned_abs() as usize - 1;
        let early = Rational::from(2 * v + 1);
        let late = Rational::from(2 * (v + 1));
        d[job_of_literal(lit)] = early;
        d[job_of_negated_literal(lit)] = late;
    }
    d
}

fn unit_instance_skeleton(num_jobs: usize, objective: Objective) -> Instance {
    Instance {
        jobs: num_jobs,
        weights: vec![Rational::one(); num_jobs],
        precedence: vec![],
        objective,
        scenarios: vec![],
    }
}

/// Which dummy scenario the value-at-risk gadget emitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DummyCase {
    /// `l/m > alpha`: dummy scenario with all due dates 0.
    EarlyDue,
    /// `l/m < alpha`: dummy scenario with all due dates 2n.
    LateDue,
    /// `l/m = alpha` exactly: the dummy scenario would have probability 0,
    /// so it is omitted.
    NoDummy,
}

/// Output of [`min3sat_to_var`]. The encoded question: the formula admits
/// an assignment satisfying at most L clauses if and only if some schedule
/// of `instance` has VaR at level `alpha` at most `threshold` (which is 0).
#[derive(Clone, Debug)]
pub struct VarGadget {
    pub instance: Instance,
    pub threshold: Rational,
    pub alpha: Rational,
    pub case: DummyCase,
}

/// Encodes "can at most L clauses be satisfied?" as a VaR-feasibility
/// question over 2n unit-time jobs: one due-date scenario per clause plus
/// (usually) a dummy scenario whose shape and probability depend on how
/// `l/m` compares with `alpha`, where `l = m - L`.
pub fn min3sat_to_var(
    f: &CnfFormula,
    l_max: usize,
    alpha: Rational,
    objective: Objective,
) -> Result<VarGadget> {
    match objective {
        Objective::MaxT | Objective::SumT | Objective::SumU => {}
        other => {
            return Err(Error::WrongObjective { expected: "maxT, sumT or sumU", found: other })
        }
    }
    if !(alpha.is_positive() && alpha < Rational::one()) {
        return Err(Error::AlphaOutOfRange { alpha, criterion: "VaR gadget", domain: "(0,1)" });
    }
    let m = f.num_clauses();
    if l_max == 0 || l_max >= m {
        return Err(Error::DegenerateFormula(format!(
            "need 0 < L < m, got L={l_max}, m={m}"
        )));
    }
    for clause in &f.clauses {
        for &lit in clause {
            if clause.contains(&-lit) {
                return Err(Error::DegenerateFormula(format!(
                    "clause {clause:?} contains complementary literals"
                )));
            }
        }
    }

    let n = f.num_vars;
    let l = Rational::from(m - l_max);
    let m_rat = Rational::from(m);
    let mut inst = unit_instance_skeleton(2 * n, objective);
    let ratio = l / m_rat;

    let (case, clause_prob, dummy): (DummyCase, Rational, Option<(Rational, Rational)>) =
        if ratio > alpha {
            // Dummy due dates 0, probability (l - alpha*m)/l.
            let dp = (l - alpha * m_rat) / l;
            (DummyCase::EarlyDue, alpha / l, Some((dp, Rational::zero())))
        } else if ratio == alpha {
            (DummyCase::NoDummy, alpha / l, None)
        } else {
            // Dummy due dates 2n, probability (m*alpha - l)/(m - l).
            let span = m_rat - l;
            let dp = (m_rat * alpha - l) / span;
            (DummyCase::LateDue, (Rational::one() - alpha) / span, Some((dp, Rational::from(2 * n))))
        };

    for clause in &f.clauses {
        inst.scenarios.push(Scenario {
            prob: clause_prob,
            p: vec![Rational::one(); 2 * n],
            d: clause_due_dates(n, clause),
            w: None,
        });
    }
    if let Some((prob, due)) = dummy {
        inst.scenarios.push(Scenario {
            prob,
            p: vec![Rational::one(); 2 * n],
            d: vec![due; 2 * n],
            w: None,
        });
    }
    debug_assert!(crate::model::validate_instance(&inst).is_ok());
    Ok(VarGadget { instance: inst, threshold: Rational::zero(), alpha, case })
}

/// An instance paired with the decision threshold it encodes: the source
/// question answers yes if and only if some schedule has minmax cost at
/// most `threshold`.
#[derive(Clone, Debug)]
pub struct ThresholdGadget {
    pub instance: Instance,
    pub threshold: Rational,
}

/// Rewrites the formula so every clause has exactly three distinct,
/// non-complementary literals, preserving satisfiability: tautological
/// clauses are dropped, short clauses are expanded over both polarities of
/// variables they do not mention (raising the variable count to at least 3
/// if needed), and duplicate clauses are merged. The threshold arguments of
/// the minmax gadgets need three false literals per violated clause, which
/// only exactly-3 clauses provide.
pub fn pad_to_exact_three(f: &CnfFormula) -> CnfFormula {
    let num_vars = f.num_vars.max(3);
    let mut seen = std::collections::HashSet::new();
    let mut clauses = Vec::new();
    let mut emit = |mut clause: Vec<i32>| {
        clause.sort_by_key(|lit| lit.abs());
        if seen.insert(clause.clone()) {
            clauses.push(clause);
        }
    };
    for clause in &f.clauses {
        let mut lits: Vec<i32> = Vec::new();
        let mut tautology = false;
        for &lit in clause {
            if lits.contains(&-lit) {
                tautology = true;
            }
            if !lits.contains(&lit) {
                lits.push(lit);
            }
        }
        if tautology {
            continue;
        }
        let used: Vec<usize> = lits.iter().map(|l| l.unsigned_abs() as usize).collect();
        let spare: Vec<i32> = (1..=num_vars as i32)
            .filter(|v| !used.contains(&(*v as usize)))
            .take(3 - lits.len())
            .collect();
        for bits in 0u32..1 << spare.len() {
            let mut padded = lits.clone();
            for (i, &v) in spare.iter().enumerate() {
                padded.push(if bits & (1 << i) != 0 { v } else { -v });
            }
            emit(padded);
        }
    }
    CnfFormula { num_vars, clauses }
}

/// 3-SAT to minmax total tardiness over 2n unit-time jobs: clause due-date
/// scenarios as in the VaR gadget, plus one scenario per variable pulling
/// that pair's due dates to the start of its slot pair. Satisfiable iff the
/// minmax value is at most 2; unsatisfiable formulas force at least 5/2.
pub fn threesat_to_minmax_unit_sumt(f: &CnfFormula) -> ThresholdGadget {
    let f = pad_to_exact_three(f);
    let n = f.num_vars;
    let num_scenarios = f.num_clauses() + n;
    let prob = Rational::from(num_scenarios).recip();
    let mut inst = unit_instance_skeleton(2 * n, Objective::SumT);
    for clause in &f.clauses {
        inst.scenarios.push(Scenario {
            prob,
            p: vec![Rational::one(); 2 * n],
            d: clause_due_dates(n, clause),
            w: None,
        });
    }
    for v in 0..n {
        let mut d = vec![Rational::from(2 * n); 2 * n];
        let pair_due = Rational::from(2 * v) + Rational::new(1, 2);
        d[pos_job(v)] = pair_due;
        d[neg_job(v)] = pair_due;
        inst.scenarios.push(Scenario {
            prob,
            p: vec![Rational::one(); 2 * n],
            d,
            w: None,
        });
    }
    debug_assert!(crate::model::validate_instance(&inst).is_ok());
    ThresholdGadget { instance: inst, threshold: Rational::from(2) }
}

/// 3-SAT to minmax late jobs with a common deterministic due date 2 and
/// uncertain processing times: clause scenarios give unit length to the
/// three negated-literal jobs, variable scenarios give length 2 to that
/// variable's pair. Satisfiable iff some schedule has at most n late jobs
/// under every scenario (n counts the padded formula's variables).
pub fn threesat_to_minmax_sumu_proc(f: &CnfFormula) -> ThresholdGadget {
    let f = pad_to_exact_three(f);
    let n = f.num_vars;
    let num_scenarios = f.num_clauses() + n;
    let prob = Rational::from(num_scenarios).recip();
    let mut inst = unit_instance_skeleton(2 * n, Objective::SumU);
    let common_d = vec![Rational::from(2); 2 * n];
    for clause in &f.clauses {
        let mut p = vec![Rational::zero(); 2 * n];
        for &lit in clause {
            p[job_of_negated_literal(lit)] = Rational::one();
        }
        inst.scenarios.push(Scenario { prob, p, d: common_d.clone(), w: None });
    }
    for v in 0..n {
        let mut p = vec![Rational::zero(); 2 * n];
        p[pos_job(v)] = Rational::from(2);
        p[neg_job(v)] = Rational::from(2);
        inst.scenarios.push(Scenario { prob, p, d: common_d.clone(), w: None });
    }
    debug_assert!(crate::model::validate_instance(&inst).is_ok());
    ThresholdGadget { instance: inst, threshold: Rational::from(n) }
}

/// Deterministic weighted tardiness/late-work to expected unweighted cost:
/// scenario j restores job j's true due date (all others get the makespan,
/// so they are never late) with probability w_j / W. For every schedule the
/// expected cost equals 1/W times the weighted cost.
pub fn weighted_to_exp(inst: &Instance) -> Result<Instance> {
    let unweighted = match inst.objective {
        Objective::SumWT => Objective::SumT,
        Objective::SumWU => Objective::SumU,
        other => return Err(Error::WrongObjective { expected: "sumWT or sumWU", found: other }),
    };
    if inst.num_scenarios() != 1 || inst.has_scenario_weights() {
        return Err(Error::Precondition("input must be a deterministic instance".into()));
    }
    if !inst.weights.iter().all(|w| w.is_positive()) {
        return Err(Error::Precondition("weights must be positive".into()));
    }
    let n = inst.n();
    let base = &inst.scenarios[0];
    let total_w: Rational = inst.weights.iter().copied().sum();
    let makespan: Rational = base.p.iter().copied().sum();
    let scenarios = (0..n)
        .map(|j| {
            let mut d = vec![makespan; n];
            d[j] = base.d[j];
            Scenario { prob: inst.weights[j] / total_w, p: base.p.clone(), d, w: None }
        })
        .collect();
    let out = Instance {
        jobs: n,
        weights: vec![Rational::one(); n],
        precedence: inst.precedence.clone(),
        objective: unweighted,
        scenarios,
    };
    debug_assert!(crate::model::validate_instance(&out).is_ok());
    Ok(out)
}

/// Min-Max 0-1 Selection to minmax late jobs over unit-time jobs: an item
/// costing 1 under a scenario is due at slot n - q, a free item at slot n.
/// The two optima are equal.
pub fn selection_to_minmax_unit_sumu(s: &SelectionInstance) -> Instance {
    let n = s.num_items;
    let k = s.costs.len();
    let prob = Rational::from(k).recip();
    let tight = Rational::from(n - s.q);
    let loose = Rational::from(n);
    let inst = Instance {
        jobs: n,
        weights: vec![Rational::one(); n],
        precedence: vec![],
        objective: Objective::SumU,
        scenarios: s
            .costs
            .iter()
            .map(|row| Scenario {
                prob,
                p: vec![Rational::one(); n],
                d: row.iter().map(|&c| if c == 1 { tight } else { loose }).collect(),
                w: None,
            })
            .collect(),
    };
    debug_assert!(crate::model::validate_instance(&inst).is_ok());
    inst
}

/// Swaps the roles of processing times and weights for total weighted
/// completion time: the output has deterministic processing times `w_j`,
/// scenario weights `p_j(xi_i)` and reversed precedence. A schedule and its
/// reversal have identical cost scenario by scenario, so
/// [`Schedule::reversed`] maps solutions back.
pub fn invert_flowtime(inst: &Instance) -> Result<Instance> {
    if inst.objective != Objective::SumWC {
        return Err(Error::WrongObjective { expected: "sumWC", found: inst.objective });
    }
    let n = inst.n();
    let reversed_prec: Vec<(usize, usize)> =
        inst.precedence.iter().map(|&(a, b)| (b, a)).collect();
    let scenarios;
    let weights;
    if inst.has_scenario_weights() {
        // Inverted form back to the direct one: scenario weights become
        // scenario processing times, the deterministic processing times
        // become the global weights.
        if !inst.has_deterministic_p() {
            return Err(Error::Precondition(
                "scenario weights require deterministic processing times".into(),
            ));
        }
        weights = inst.scenarios[0].p.clone();
        if !weights.iter().all(|w| w.is_positive()) {
            return Err(Error::Precondition(
                "processing times must be positive to serve as weights".into(),
            ));
        }
        scenarios = inst
            .scenarios
            .iter()
            .map(|sc| Scenario {
                prob: sc.prob,
                p: (0..n).map(|j| inst.weight(sc, j)).collect(),
                d: sc.d.clone(),
                w: None,
            })
            .collect();
    } else {
        if inst.scenarios.iter().any(|sc| sc.p.iter().any(|p| !p.is_positive())) {
            return Err(Error::Precondition(
                "processing times must be positive to serve as weights".into(),
            ));
        }
        let new_p = inst.weights.clone();
        weights = vec![Rational::one(); n];
        scenarios = inst
            .scenarios
            .iter()
            .map(|sc| Scenario {
                prob: sc.prob,
                p: new_p.clone(),
                d: sc.d.clone(),
                w: Some(sc.p.clone()),
            })
            .collect();
    }
    let out = Instance {
        jobs: n,
        weights,
        precedence: reversed_prec,
        objective: Objective::SumWC,
        scenarios,
    };
    debug_assert!(crate::model::validate_instance(&out).is_ok());
    Ok(out)
}

/// Adds a scenario of probability `alpha` under which every schedule costs
/// 0 (all processing times 0), scaling the original probabilities by
/// `1 - alpha`. The CVaR at level `alpha` of the augmented cost equals the
/// original expected cost, for every schedule.
pub fn add_zero_scenario(inst: &Instance, alpha: Rational) -> Result<Instance> {
    if !(alpha.is_positive() && alpha < Rational::one()) {
        return Err(Error::AlphaOutOfRange {
            alpha,
            criterion: "zero-scenario augmentation",
            domain: "(0,1)",
        });
    }
    let n = inst.n();
    let mut out = inst.clone();
    for sc in out.scenarios.iter_mut() {
        sc.prob *= Rational::one() - alpha;
    }
    out.scenarios.push(Scenario {
        prob: alpha,
        p: vec![Rational::zero(); n],
        d: vec![Rational::zero(); n],
        w: None,
    });
    debug_assert!(crate::model::validate_instance(&out).is_ok());
    Ok(out)
}

/// Which risk criterion the dominating-scenario augmentation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugMode {
    Var,
    CVar,
}

/// Output of [`add_max_scenario`]; `m_value` is the (schedule-independent)
/// cost of the dummy scenario.
#[derive(Clone, Debug)]
pub struct MaxScenarioGadget {
    pub instance: Instance,
    pub m_value: Rational,
}

/// Adds a dominating scenario (maximum processing times, minimum due date)
/// whose cost M is the same for every schedule and at least every original
/// scenario cost. In `Var` mode the augmented VaR at level `alpha` equals
/// the original maximum cost per schedule; in `CVar` mode the augmented
/// CVaR is the affine map `(beta * Max + gamma * M)/(1 - alpha)` with
/// `beta = alpha/(K-1)`, `gamma = 1 - K*alpha/(K-1)`, so the optimizers
/// coincide with the minmax optimizers.
pub fn add_max_scenario(
    inst: &Instance,
    alpha: Rational,
    mode: AugMode,
) -> Result<MaxScenarioGadget> {
    if !(alpha.is_positive() && alpha < Rational::one()) {
        return Err(Error::AlphaOutOfRange {
            alpha,
            criterion: "dominating-scenario augmentation",
            domain: "(0,1)",
        });
    }
    if inst.has_scenario_weights() || inst.weights.iter().any(|&w| w != inst.weights[0]) {
        return Err(Error::Precondition(
            "dominating scenario needs uniform job weights".into(),
        ));
    }
    let n = inst.n();
    let k = inst.num_scenarios();
    let p_max = inst
        .scenarios
        .iter()
        .flat_map(|sc| sc.p.iter().copied())
        .fold(Rational::zero(), Rational::max);
    let d_min = inst
        .scenarios
        .iter()
        .flat_map(|sc| sc.d.iter().copied())
        .fold(Rational::from(i64::MAX), Rational::min);
    let dummy = Scenario {
        prob: Rational::one(), // placeholder, set below
        p: vec![p_max; n],
        d: vec![d_min; n],
        w: None,
    };
    let m_value = crate::model::scenario_cost(
        &Schedule::identity(n),
        &dummy,
        inst.objective,
        &inst.weights,
    );

    let (dummy_prob, each_prob) = match mode {
        AugMode::Var => (Rational::one() - alpha, alpha / Rational::from(k)),
        AugMode::CVar => {
            if k < 2 {
                return Err(Error::Precondition(
                    "CVaR augmentation needs at least two scenarios".into(),
                ));
            }
            let beta = alpha / Rational::from(k - 1);
            let gamma = Rational::one() - Rational::from(k) * beta;
            if !gamma.is_positive() {
                return Err(Error::AlphaOutOfRange {
                    alpha,
                    criterion: "CVaR augmentation",
                    domain: "(0,(K-1)/K)",
                });
            }
            (gamma, beta)
        }
    };
    let mut out = inst.clone();
    for sc in out.scenarios.iter_mut() {
        sc.prob = each_prob;
    }
    out.scenarios.push(Scenario { prob: dummy_prob, ..dummy });
    debug_assert!(crate::model::validate_instance(&out).is_ok());
    Ok(MaxScenarioGadget { instance: out, m_value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::brute_force;
    use crate::gen::{random_instance, rng_from_seed, GenParams};
    use crate::model::{cost_distribution, linear_extensions, scenario_cost};
    use crate::rational::rat;
    use crate::risk::{evaluate, RiskCriterion};

    fn formula(num_vars: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(num_vars, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn sample_formula() -> CnfFormula {
        formula(
            4,
            &[
                &[1, -2, -3],
                &[-2, -3, 4],
                &[-1, 2, -4],
                &[1, 2, 3],
                &[1, 3, -4],
            ],
        )
    }

    #[test]
    fn clause_scenario_table_row() {
        let f = sample_formula();
        let d: Vec<Vec<Rational>> = f
            .clauses
            .iter()
            .map(|c| clause_due_dates(f.num_vars, c))
            .collect();
        // First literal job's due dates across the five clause scenarios.
        let row: Vec<Rational> = d.iter().map(|sc| sc[pos_job(0)]).collect();
        assert_eq!(row, vec![1, 2, 2, 1, 1].into_iter().map(Rational::from).collect::<Vec<_>>());
        let row: Vec<Rational> = d.iter().map(|sc| sc[neg_job(3)]).collect();
        assert_eq!(row, vec![8, 8, 7, 8, 7].into_iter().map(Rational::from).collect::<Vec<_>>());
    }

    /// Answer of the scheduling side: does some schedule reach VaR <= 0?
    fn var_gadget_says_yes(g: &VarGadget) -> bool {
        let res = brute_force(&g.instance, RiskCriterion::VaR(g.alpha)).unwrap();
        res.value <= g.threshold
    }

    fn min3sat_says_yes(f: &CnfFormula, l_max: usize) -> bool {
        f.min_satisfied() <= l_max
    }

    #[test]
    fn min3sat_iff_both_cases_and_boundary() {
        // Counts per assignment: 2 or 2 -> min 2; L=1 is a no-instance.
        let no_f = formula(1, &[&[1], &[1], &[-1], &[-1]]);
        // min satisfied = 1 <= 1: a yes-instance.
        let yes_f = formula(1, &[&[1], &[1], &[-1]]);
        for (f, l_max) in [(&no_f, 1usize), (&yes_f, 1)] {
            for alpha in [rat(1, 2), rat(7, 8), rat(3, 4), rat(2, 3)] {
                let g = min3sat_to_var(f, l_max, alpha, Objective::SumU).unwrap();
                assert_eq!(
                    var_gadget_says_yes(&g),
                    min3sat_says_yes(f, l_max),
                    "alpha={alpha}, formula={f:?}"
                );
            }
        }
        // Case reporting: no_f has l/m = 3/4.
        let g = min3sat_to_var(&no_f, 1, rat(1, 2), Objective::SumT).unwrap();
        assert_eq!(g.case, DummyCase::EarlyDue);
        let g = min3sat_to_var(&no_f, 1, rat(7, 8), Objective::SumT).unwrap();
        assert_eq!(g.case, DummyCase::LateDue);
        let g = min3sat_to_var(&no_f, 1, rat(3, 4), Objective::SumT).unwrap();
        assert_eq!(g.case, DummyCase::NoDummy);
        assert_eq!(g.instance.num_scenarios(), 4);
    }

    #[test]
    fn min3sat_duplicated_clause_invariance() {
        let f = formula(2, &[&[1, 2], &[-1]]);
        let dup = formula(2, &[&[1, 2], &[1, 2], &[-1], &[-1]]);
        for alpha in [rat(1, 3), rat(2, 3)] {
            let g1 = min3sat_to_var(&f, 1, alpha, Objective::SumU).unwrap();
            let g2 = min3sat_to_var(&dup, 2, alpha, Objective::SumU).unwrap();
            assert_eq!(var_gadget_says_yes(&g1), var_gadget_says_yes(&g2));
        }
    }

    #[test]
    fn min3sat_rejects_degenerate() {
        let f = formula(1, &[&[1], &[-1]]);
        assert!(matches!(
            min3sat_to_var(&f, 0, rat(1, 2), Objective::SumT),
            Err(Error::DegenerateFormula(_))
        ));
        assert!(matches!(
            min3sat_to_var(&f, 2, rat(1, 2), Objective::SumT),
            Err(Error::DegenerateFormula(_))
        ));
        let taut = formula(1, &[&[1, -1], &[1]]);
        assert!(matches!(
            min3sat_to_var(&taut, 1, rat(1, 2), Objective::SumT),
            Err(Error::DegenerateFormula(_))
        ));
        assert!(min3sat_to_var(&f, 1, Rational::one(), Objective::SumT).is_err());
        assert!(matches!(
            min3sat_to_var(&f, 1, rat(1, 2), Objective::SumWC),
            Err(Error::WrongObjective { .. })
        ));
    }

    #[test]
    fn off_pattern_schedules_cost_positive_everywhere() {
        // Every schedule outside the paired pattern (pair of variable 1,
        // then pair of variable 2, ...) has positive cost in all scenarios.
        let f = formula(2, &[&[1, 2], &[-1, -2], &[1, -2]]);
        let g = min3sat_to_var(&f, 1, rat(1, 2), Objective::SumT).unwrap();
        let n_vars = 2;
        for sched in linear_extensions(&g.instance) {
            let paired = (0..n_vars).all(|v| {
                let a = sched.order[2 * v];
                let b = sched.order[2 * v + 1];
                a.min(b) == pos_job(v) && a.max(b) == neg_job(v)
            });
            if !paired {
                for sc in &g.instance.scenarios {
                    let cost = scenario_cost(
                        &sched,
                        sc,
                        g.instance.objective,
                        &g.instance.weights,
                    );
                    // The dummy scenario (last) is exempt in the LateDue
                    // case; here l/m = 2/3 > 1/2 so all due dates are 0.
                    assert!(cost.is_positive(), "schedule {:?}", sched.order);
                }
            }
        }
    }

    #[test]
    fn padding_preserves_satisfiability() {
        let cases = [
            formula(1, &[&[1]]),
            formula(1, &[&[1], &[-1]]),
            formula(2, &[&[1, 2], &[-1]]),
            formula(3, &[&[1, -2], &[2, 3], &[-3]]),
            formula(2, &[&[1, -1], &[2]]),
        ];
        for f in &cases {
            let padded = pad_to_exact_three(f);
            assert_eq!(padded.is_satisfiable(), f.is_satisfiable(), "{f:?}");
            for clause in &padded.clauses {
                assert_eq!(clause.len(), 3);
                let vars: std::collections::HashSet<i32> =
                    clause.iter().map(|l| l.abs()).collect();
                assert_eq!(vars.len(), 3);
            }
        }
    }

    #[test]
    fn sumt_gadget_satisfiable_and_not() {
        let sat = formula(1, &[&[1]]);
        let g = threesat_to_minmax_unit_sumt(&sat);
        let res = brute_force(&g.instance, RiskCriterion::Max).unwrap();
        assert!(res.value <= g.threshold);

        let unsat = formula(1, &[&[1], &[-1]]);
        let g = threesat_to_minmax_unit_sumt(&unsat);
        let res = brute_force(&g.instance, RiskCriterion::Max).unwrap();
        assert!(res.value >= rat(5, 2), "got {}", res.value);
    }

    #[test]
    fn sumt_gadget_reference_schedule() {
        let g = threesat_to_minmax_unit_sumt(&sample_formula());
        // (J_x1, Jnx1, Jnx2, Jx2, Jx3, Jnx3, Jnx4, Jx4): x = (1,0,1,0).
        let sched = Schedule::new(vec![
            pos_job(0),
            neg_job(0),
            neg_job(1),
            pos_job(1),
            pos_job(2),
            neg_job(2),
            neg_job(3),
            pos_job(3),
        ]);
        let value = evaluate(
            &cost_distribution(&sched, &g.instance),
            RiskCriterion::Max,
        )
        .unwrap();
        assert!(value <= g.threshold);
    }

    #[test]
    fn sumu_proc_gadget_satisfiable_and_not() {
        let sat = formula(1, &[&[1]]);
        let g = threesat_to_minmax_sumu_proc(&sat);
        let res = brute_force(&g.instance, RiskCriterion::Max).unwrap();
        assert!(res.value <= g.threshold);

        let unsat = formula(1, &[&[1], &[-1]]);
        let g = threesat_to_minmax_sumu_proc(&unsat);
        let res = brute_force(&g.instance, RiskCriterion::Max).unwrap();
        assert!(res.value > g.threshold);
        assert!(res.value > Rational::one());
    }

    #[test]
    fn sumu_proc_gadget_reference_schedule() {
        let g = threesat_to_minmax_sumu_proc(&sample_formula());
        // True literals first: x = (1,0,1,0).
        let sched = Schedule::new(vec![
            pos_job(0),
            neg_job(1),
            pos_job(2),
            neg_job(3),
            neg_job(0),
            pos_job(1),
            neg_job(2),
            pos_job(3),
        ]);
        let value = evaluate(
            &cost_distribution(&sched, &g.instance),
            RiskCriterion::Max,
        )
        .unwrap();
        assert!(value <= g.threshold);
        assert_eq!(g.threshold, Rational::from(4));
    }

    #[test]
    fn weighted_to_exp_identity() {
        let params = GenParams::new(Objective::SumWT).with_jobs(2, 5).with_scenarios(1, 1);
        let mut rng = rng_from_seed(31);
        for _ in 0..30 {
            let inst = random_instance(&mut rng, &params);
            let total_w: Rational = inst.weights.iter().copied().sum();
            let out = weighted_to_exp(&inst).unwrap();
            for sched in linear_extensions(&inst) {
                let weighted = scenario_cost(
                    &sched,
                    &inst.scenarios[0],
                    inst.objective,
                    &inst.weights,
                );
                let expected = evaluate(
                    &cost_distribution(&sched, &out),
                    RiskCriterion::Expectation,
                )
                .unwrap();
                assert_eq!(expected * total_w, weighted);
            }
        }
    }

    #[test]
    fn weighted_to_exp_single_job() {
        let inst = Instance {
            jobs: 1,
            weights: vec![rat(5, 1)],
            precedence: vec![],
            objective: Objective::SumWT,
            scenarios: vec![Scenario {
                prob: Rational::one(),
                p: vec![Rational::from(4)],
                d: vec![Rational::from(1)],
                w: None,
            }],
        };
        let out = weighted_to_exp(&inst).unwrap();
        let sched = Schedule::identity(1);
        let e = evaluate(&cost_distribution(&sched, &out), RiskCriterion::Expectation).unwrap();
        assert_eq!(e, Rational::from(3)); // tardiness 3, unweighted
    }

    #[test]
    fn selection_reduction_preserves_optimum() {
        use rand::Rng;
        let mut rng = rng_from_seed(32);
        for _ in 0..25 {
            let n = rng.gen_range(2..=5usize);
            let k = rng.gen_range(1..=3usize);
            let q = rng.gen_range(1..=n);
            let costs: Vec<Vec<u8>> =
                (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..=1u8)).collect()).collect();
            let s = SelectionInstance::new(n, q, costs).unwrap();
            let inst = selection_to_minmax_unit_sumu(&s);
            let sched_opt = brute_force(&inst, RiskCriterion::Max).unwrap();
            assert_eq!(sched_opt.value, Rational::from(s.minmax_brute_force() as usize));
        }
    }

    #[test]
    fn selection_trivial_cases() {
        let s = SelectionInstance::new(3, 2, vec![vec![0, 0, 0]]).unwrap();
        let inst = selection_to_minmax_unit_sumu(&s);
        assert_eq!(brute_force(&inst, RiskCriterion::Max).unwrap().value, Rational::zero());
        let s = SelectionInstance::new(3, 1, vec![vec![1, 0, 0]]).unwrap();
        let inst = selection_to_minmax_unit_sumu(&s);
        assert_eq!(brute_force(&inst, RiskCriterion::Max).unwrap().value, Rational::zero());
    }

    #[test]
    fn invert_flowtime_cost_equality_and_involution() {
        let params = GenParams::new(Objective::SumWC)
            .with_jobs(3, 3)
            .with_scenarios(2, 2)
            .with_precedence(0.3);
        let mut rng = rng_from_seed(33);
        for _ in 0..20 {
            let mut inst = random_instance(&mut rng, &params);
            for sc in inst.scenarios.iter_mut() {
                for p in sc.p.iter_mut() {
                    *p = (*p).max(Rational::one());
                }
            }
            let inv = invert_flowtime(&inst).unwrap();
            for sched in linear_extensions(&inst) {
                let rev = sched.reversed();
                assert!(rev.is_feasible(&inv));
                for (sc, sc_inv) in inst.scenarios.iter().zip(&inv.scenarios) {
                    let a = scenario_cost(&sched, sc, inst.objective, &inst.weights);
                    let b = scenario_cost(&rev, sc_inv, inv.objective, &inv.weights);
                    assert_eq!(a, b);
                }
            }
            let back = invert_flowtime(&inv).unwrap();
            assert_eq!(back, inst);
        }
    }

    #[test]
    fn add_zero_scenario_cvar_is_expectation() {
        let params = GenParams::new(Objective::SumWT).with_jobs(2, 4).with_scenarios(1, 3);
        let mut rng = rng_from_seed(34);
        for _ in 0..25 {
            let inst = random_instance(&mut rng, &params);
            for alpha in [rat(1, 4), rat(1, 2), rat(9, 10)] {
                let aug = add_zero_scenario(&inst, alpha).unwrap();
                for sched in linear_extensions(&inst) {
                    let e = evaluate(
                        &cost_distribution(&sched, &inst),
                        RiskCriterion::Expectation,
                    )
                    .unwrap();
                    let cv = evaluate(
                        &cost_distribution(&sched, &aug),
                        RiskCriterion::CVaR(alpha),
                    )
                    .unwrap();
                    assert_eq!(cv, e);
                }
            }
        }
    }

    #[test]
    fn add_max_scenario_var_equals_max() {
        let params = GenParams::new(Objective::SumT).with_jobs(2, 4).with_scenarios(2, 3);
        let mut rng = rng_from_seed(35);
        for _ in 0..25 {
            let mut inst = random_instance(&mut rng, &params);
            inst.weights = vec![Rational::one(); inst.n()];
            for alpha in [rat(1, 4), rat(1, 2), rat(3, 4)] {
                let g = add_max_scenario(&inst, alpha, AugMode::Var).unwrap();
                for sched in linear_extensions(&inst) {
                    let mx =
                        evaluate(&cost_distribution(&sched, &inst), RiskCriterion::Max).unwrap();
                    let var = evaluate(
                        &cost_distribution(&sched, &g.instance),
                        RiskCriterion::VaR(alpha),
                    )
                    .unwrap();
                    assert_eq!(var, mx);
                    assert!(g.m_value >= mx);
                }
            }
        }
    }

    #[test]
    fn add_max_scenario_cvar_affine_identity() {
        let params = GenParams::new(Objective::SumT).with_jobs(2, 4).with_scenarios(2, 2);
        let mut rng = rng_from_seed(36);
        let alpha = rat(1, 4);
        let beta = rat(1, 4); // alpha/(K-1), K=2
        let gamma = rat(1, 2); // 1 - K*alpha/(K-1)
        for _ in 0..20 {
            let mut inst = random_instance(&mut rng, &params);
            inst.weights = vec![Rational::one(); inst.n()];
            let g = add_max_scenario(&inst, alpha, AugMode::CVar).unwrap();
            for sched in linear_extensions(&inst) {
                let mx = evaluate(&cost_distribution(&sched, &inst), RiskCriterion::Max).unwrap();
                let cv = evaluate(
                    &cost_distribution(&sched, &g.instance),
                    RiskCriterion::CVaR(alpha),
                )
                .unwrap();
                let rhs = (beta * mx + gamma * g.m_value) / (Rational::one() - alpha);
                assert_eq!(cv, rhs);
            }
        }
    }

    #[test]
    fn add_max_scenario_alpha_range() {
        let params = GenParams::new(Objective::SumT).with_jobs(2, 2).with_scenarios(2, 2);
        let mut rng = rng_from_seed(37);
        let mut inst = random_instance(&mut rng, &params);
        inst.weights = vec![Rational::one(); inst.n()];
        // K = 2: gamma <= 0 for alpha >= 1/2.
        assert!(matches!(
            add_max_scenario(&inst, rat(1, 2), AugMode::CVar),
            Err(Error::AlphaOutOfRange { .. })
        ));
        assert!(add_max_scenario(&inst, rat(1, 4), AugMode::CVar).is_ok());
        assert!(add_max_scenario(&inst, Rational::one(), AugMode::Var).is_err());
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(0, vec![]).is_err());
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![1, 2, -1, -2]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![0]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![1, -2]]).is_ok());
    }

    #[test]
    fn selection_validation() {
        assert!(SelectionInstance::new(3, 0, vec![vec![0, 0, 0]]).is_err());
        assert!(SelectionInstance::new(3, 4, vec![vec![0, 0, 0]]).is_err());
        assert!(SelectionInstance::new(3, 1, vec![vec![0, 2, 0]]).is_err());
        assert!(SelectionInstance::new(3, 1, vec![vec![0, 1]]).is_err());
        assert!(SelectionInstance::new(3, 1, vec![]).is_err());
    }
}
