//! Instance and schedule data model.
//!
//! An [`Instance`] is a set of jobs with deterministic weights, a precedence
//! DAG and a discrete scenario set. Each [`Scenario`] carries processing
//! times, due dates, an optional per-scenario weight vector and a positive
//! occurrence probability; probabilities sum to 1 exactly. A [`Schedule`] is
//! a feasible permutation of the jobs, and its cost under the scenario set is
//! a finite [`Distribution`] over rational values.

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Cost function evaluated per scenario.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    /// Total flow time, sum of completion times.
    #[serde(rename = "sumC")]
    SumC,
    /// Total weighted flow time.
    #[serde(rename = "sumWC")]
    SumWC,
    /// Total tardiness.
    #[serde(rename = "sumT")]
    SumT,
    /// Total weighted tardiness.
    #[serde(rename = "sumWT")]
    SumWT,
    /// Number of late jobs.
    #[serde(rename = "sumU")]
    SumU,
    /// Weighted number of late jobs.
    #[serde(rename = "sumWU")]
    SumWU,
    /// Maximum tardiness.
    #[serde(rename = "maxT")]
    MaxT,
    /// Maximum weighted tardiness.
    #[serde(rename = "maxWT")]
    MaxWT,
}

impl Objective {
    /// True for the objectives whose job costs are multiplied by weights.
    pub fn is_weighted(self) -> bool {
        matches!(
            self,
            Objective::SumWC | Objective::SumWT | Objective::SumWU | Objective::MaxWT
        )
    }
}

/// One realization of the uncertain parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    /// Occurrence probability, strictly positive.
    pub prob: Rational,
    /// Processing time per job.
    pub p: Vec<Rational>,
    /// Due date per job.
    pub d: Vec<Rational>,
    /// Per-scenario weights; when absent the instance weights apply.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<Rational>>,
}

/// A scheduling instance under discrete scenario uncertainty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub jobs: usize,
    /// Deterministic job weights, strictly positive.
    pub weights: Vec<Rational>,
    /// Precedence edges (i, j): job i must precede job j.
    #[serde(default)]
    pub precedence: Vec<(usize, usize)>,
    pub objective: Objective,
    pub scenarios: Vec<Scenario>,
}

impl Instance {
    pub fn n(&self) -> usize {
        self.jobs
    }

    pub fn num_scenarios(&self) -> usize {
        self.scenarios.len()
    }

    /// Smallest scenario probability.
    pub fn prob_min(&self) -> Rational {
        self.scenarios
            .iter()
            .map(|s| s.prob)
            .min()
            .expect("instance with no scenarios")
    }

    /// Effective weight of `job` under scenario `sc`: the scenario override
    /// when present, the deterministic weight otherwise.
    pub fn weight(&self, sc: &Scenario, job: usize) -> Rational {
        match &sc.w {
            Some(w) => w[job],
            None => self.weights[job],
        }
    }

    /// True when all processing times equal 1 under every scenario.
    pub fn is_unit_time(&self) -> bool {
        self.scenarios
            .iter()
            .all(|s| s.p.iter().all(|&p| p == Rational::one()))
    }

    /// True when the processing-time vector is the same under every scenario.
    pub fn has_deterministic_p(&self) -> bool {
        self.scenarios.windows(2).all(|w| w[0].p == w[1].p)
    }

    pub fn has_scenario_weights(&self) -> bool {
        self.scenarios.iter().any(|s| s.w.is_some())
    }

    /// A topological position for every job, respecting precedence, with
    /// smaller indices first among the ready jobs. Panics on a cyclic graph.
    pub fn topological_positions(&self) -> Vec<usize> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(i, j) in &self.precedence {
            indeg[j] += 1;
            succ[i].push(j);
        }
        let mut pos = vec![usize::MAX; n];
        let mut ready: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
        for next in 0..n {
            let (k, &j) = ready
                .iter()
                .enumerate()
                .min_by_key(|&(_, &j)| j)
                .expect("precedence graph is cyclic");
            pos[j] = next;
            ready.swap_remove(k);
            for &s in &succ[j] {
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    ready.push(s);
                }
            }
        }
        pos
    }
}

/// A permutation of the jobs; `order[k]` is the job at position `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Schedule {
    pub order: Vec<usize>,
}

impl Schedule {
    pub fn new(order: Vec<usize>) -> Self {
        Schedule { order }
    }

    pub fn identity(n: usize) -> Self {
        Schedule { order: (0..n).collect() }
    }

    /// Checks that the order is a permutation of 0..n respecting precedence.
    pub fn is_feasible(&self, inst: &Instance) -> bool {
        let n = inst.n();
        if self.order.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (k, &j) in self.order.iter().enumerate() {
            if j >= n || pos[j] != usize::MAX {
                return false;
            }
            pos[j] = k;
        }
        inst.precedence.iter().all(|&(i, j)| pos[i] < pos[j])
    }

    /// The reversed permutation (used by the flow-time inversion transform).
    pub fn reversed(&self) -> Schedule {
        let mut order = self.order.clone();
        order.reverse();
        Schedule { order }
    }
}

/// A violation found by [`validate_instance`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    CycleInPrecedence,
    ProbabilityNotOne { total: Rational },
    LengthMismatch { scenario: usize, field: &'static str, len: usize, expected: usize },
    NonpositiveProbability { scenario: usize, prob: Rational },
    BadJobIndex { edge: (usize, usize) },
    NegativeValue { scenario: Option<usize>, field: &'static str, job: usize },
    NonpositiveWeight { scenario: Option<usize>, job: usize },
    NoScenarios,
    JobCountMismatch { weights: usize, jobs: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::CycleInPrecedence => write!(f, "precedence graph contains a cycle"),
            Violation::ProbabilityNotOne { total } => {
                write!(f, "scenario probabilities sum to {total}, expected 1")
            }
            Violation::LengthMismatch { scenario, field, len, expected } => write!(
                f,
                "scenario {scenario}: field `{field}` has length {len}, expected {expected}"
            ),
            Violation::NonpositiveProbability { scenario, prob } => {
                write!(f, "scenario {scenario}: probability {prob} is not positive")
            }
            Violation::BadJobIndex { edge } => {
                write!(f, "precedence edge ({}, {}) references a missing job", edge.0, edge.1)
            }
            Violation::NegativeValue { scenario, field, job } => match scenario {
                Some(s) => write!(f, "scenario {s}: `{field}` of job {job} is negative"),
                None => write!(f, "`{field}` of job {job} is negative"),
            },
            Violation::NonpositiveWeight { scenario, job } => match scenario {
                Some(s) => write!(f, "scenario {s}: weight of job {job} is not positive"),
                None => write!(f, "weight of job {job} is not positive"),
            },
            Violation::NoScenarios => write!(f, "instance has no scenarios"),
            Violation::JobCountMismatch { weights, jobs } => {
                write!(f, "{weights} weights given for {jobs} jobs")
            }
        }
    }
}

/// Report listing every invariant violation in an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, thiserror::Error)]
#[error("invalid instance: {}", self.describe())]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn describe(&self) -> String {
        self.violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Checks all instance invariants, reporting every violation found.
pub fn validate_instance(inst: &Instance) -> Result<(), ValidationReport> {
    let mut violations = Vec::new();
    let n = inst.jobs;
    if inst.weights.len() != n {
        violations.push(Violation::JobCountMismatch { weights: inst.weights.len(), jobs: n });
    }
    for (j, &w) in inst.weights.iter().enumerate() {
        if !w.is_positive() {
            violations.push(Violation::NonpositiveWeight { scenario: None, job: j });
        }
    }
    for &(i, j) in &inst.precedence {
        if i >= n || j >= n {
            violations.push(Violation::BadJobIndex { edge: (i, j) });
        }
    }
    if has_cycle(n, &inst.precedence) {
        violations.push(Violation::CycleInPrecedence);
    }
    if inst.scenarios.is_empty() {
        violations.push(Violation::NoScenarios);
    }
    let mut total = Rational::zero();
    for (k, sc) in inst.scenarios.iter().enumerate() {
        total += sc.prob;
        if !sc.prob.is_positive() {
            violations.push(Violation::NonpositiveProbability { scenario: k, prob: sc.prob });
        }
        for (field, len) in [("p", sc.p.len()), ("d", sc.d.len())] {
            if len != n {
                violations.push(Violation::LengthMismatch { scenario: k, field, len, expected: n });
            }
        }
        if let Some(w) = &sc.w {
            if w.len() != n {
                violations.push(Violation::LengthMismatch {
                    scenario: k,
                    field: "w",
                    len: w.len(),
                    expected: n,
                });
            }
            for (j, &wj) in w.iter().enumerate() {
                if !wj.is_positive() {
                    violations.push(Violation::NonpositiveWeight { scenario: Some(k), job: j });
                }
            }
        }
        for (j, &p) in sc.p.iter().enumerate() {
            if p.is_negative() {
                violations.push(Violation::NegativeValue { scenario: Some(k), field: "p", job: j });
            }
        }
        for (j, &d) in sc.d.iter().enumerate() {
            if d.is_negative() {
                violations.push(Violation::NegativeValue { scenario: Some(k), field: "d", job: j });
            }
        }
    }
    if !inst.scenarios.is_empty() && total != Rational::one() {
        violations.push(Violation::ProbabilityNotOne { total });
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ValidationReport { violations })
    }
}

fn has_cycle(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(i, j) in edges {
        if i >= n || j >= n {
            continue;
        }
        indeg[j] += 1;
        succ[i].push(j);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&j| indeg[j] == 0).collect();
    let mut seen = 0usize;
    while let Some(j) = stack.pop() {
        seen += 1;
        for &s in &succ[j] {
            indeg[s] -= 1;
            if indeg[s] == 0 {
                stack.push(s);
            }
        }
    }
    seen != n
}

/// Completion time of every job under one scenario: `C[job]` is the prefix
/// sum of processing times up to and including the job's position.
pub fn completion_times(sched: &Schedule, sc: &Scenario) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); sched.order.len()];
    let mut clock = Rational::zero();
    for &j in &sched.order {
        clock += sc.p[j];
        c[j] = clock;
    }
    c
}

/// Cost of a schedule under one scenario. `weights` are the deterministic
/// instance weights; a per-scenario weight vector overrides them.
pub fn scenario_cost(
    sched: &Schedule,
    sc: &Scenario,
    obj: Objective,
    weights: &[Rational],
) -> Rational {
    let eff = |j: usize| match &sc.w {
        Some(w) => w[j],
        None => weights[j],
    };
    let mut total = Rational::zero();
    let mut bottleneck = Rational::zero();
    let mut clock = Rational::zero();
    for &j in &sched.order {
        clock += sc.p[j];
        let c = clock;
        match obj {
            Objective::SumC => total += c,
            Objective::SumWC => total += eff(j) * c,
            Objective::SumT => total += (c - sc.d[j]).pos_part(),
            Objective::SumWT => total += eff(j) * (c - sc.d[j]).pos_part(),
            Objective::SumU => {
                if c > sc.d[j] {
                    total += Rational::one();
                }
            }
            Objective::SumWU => {
                if c > sc.d[j] {
                    total += eff(j);
                }
            }
            Objective::MaxT => bottleneck = bottleneck.max((c - sc.d[j]).pos_part()),
            Objective::MaxWT => bottleneck = bottleneck.max(eff(j) * (c - sc.d[j]).pos_part()),
        }
    }
    match obj {
        Objective::MaxT | Objective::MaxWT => bottleneck,
        _ => total,
    }
}

/// The random cost of a schedule: one atom per scenario, equal values merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    atoms: Vec<(Rational, Rational)>,
}

impl Distribution {
    /// Builds the canonical form: atoms sorted ascending by value, equal
    /// values merged by summing probabilities, zero-probability atoms dropped.
    pub fn from_atoms(raw: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        let mut atoms: Vec<(Rational, Rational)> =
            raw.into_iter().filter(|(_, pr)| !pr.is_zero()).collect();
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, Rational)> = Vec::with_capacity(atoms.len());
        for (v, pr) in atoms {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += pr,
                _ => merged.push((v, pr)),
            }
        }
        Distribution { atoms: merged }
    }

    pub fn single(value: Rational) -> Self {
        Distribution { atoms: vec![(value, Rational::one())] }
    }

    /// Atoms in ascending value order.
    pub fn atoms(&self) -> &[(Rational, Rational)] {
        &self.atoms
    }

    pub fn total_probability(&self) -> Rational {
        self.atoms.iter().map(|&(_, pr)| pr).sum()
    }

    pub fn prob_min(&self) -> Rational {
        self.atoms
            .iter()
            .map(|&(_, pr)| pr)
            .min()
            .expect("empty distribution")
    }
}

/// Distribution of the schedule cost induced by the scenario set.
pub fn cost_distribution(sched: &Schedule, inst: &Instance) -> Distribution {
    Distribution::from_atoms(inst.scenarios.iter().map(|sc| {
        (scenario_cost(sched, sc, inst.objective, &inst.weights), sc.prob)
    }))
}

/// Iterator over all feasible permutations in lexicographic order.
pub struct LinearExtensions {
    n: usize,
    succ: Vec<Vec<usize>>,
    indeg: Vec<usize>,
    used: Vec<bool>,
    prefix: Vec<usize>,
    started: bool,
    done: bool,
}

/// Yields every feasible permutation of the instance exactly once, in
/// lexicographic order. The precedence graph must be acyclic.
pub fn linear_extensions(inst: &Instance) -> LinearExtensions {
    let n = inst.n();
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(i, j) in &inst.precedence {
        indeg[j] += 1;
        succ[i].push(j);
    }
    LinearExtensions {
        n,
        succ,
        indeg,
        used: vec![false; n],
        prefix: Vec::with_capacity(n),
        started: false,
        done: false,
    }
}

impl Iterator for LinearExtensions {
    type Item = Schedule;

    fn next(&mut self) -> Option<Schedule> {
        if self.done {
            return None;
        }
        let ok = if self.started { self.advance() } else {
            self.started = true;
            self.descend();
            true
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(Schedule::new(self.prefix.clone()))
    }
}

impl LinearExtensions {
    fn first_candidate(&self, from: usize) -> Option<usize> {
        (from..self.n).find(|&j| !self.used[j] && self.indeg[j] == 0)
    }

    fn push(&mut self, j: usize) {
        self.used[j] = true;
        for s in 0..self.succ[j].len() {
            let t = self.succ[j][s];
            self.indeg[t] -= 1;
        }
        self.prefix.push(j);
    }

    fn pop(&mut self) -> Option<usize> {
        let j = self.prefix.pop()?;
        self.used[j] = false;
        for s in 0..self.succ[j].len() {
            let t = self.succ[j][s];
            self.indeg[t] += 1;
        }
        Some(j)
    }

    /// Completes the current prefix with the smallest candidates. Always
    /// succeeds for an acyclic graph.
    fn descend(&mut self) {
        while self.prefix.len() < self.n {
            let j = self
                .first_candidate(0)
                .expect("precedence graph is cyclic");
            self.push(j);
        }
    }

    /// Moves to the lexicographically next extension; false when exhausted.
    fn advance(&mut self) -> bool {
        while let Some(j) = self.pop() {
            if let Some(k) = self.first_candidate(j + 1) {
                self.push(k);
                self.descend();
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub fn plain_instance(
        weights: Vec<i64>,
        precedence: Vec<(usize, usize)>,
        objective: Objective,
        scenarios: Vec<(Rational, Vec<i64>, Vec<i64>)>,
    ) -> Instance {
        let n = weights.len();
        Instance {
            jobs: n,
            weights: weights.into_iter().map(Rational::from).collect(),
            precedence,
            objective,
            scenarios: scenarios
                .into_iter()
                .map(|(prob, p, d)| Scenario {
                    prob,
                    p: p.into_iter().map(Rational::from).collect(),
                    d: d.into_iter().map(Rational::from).collect(),
                    w: None,
                })
                .collect(),
        }
    }

    #[test]
    fn validate_ok_single_job() {
        let inst = plain_instance(
            vec![1],
            vec![],
            Objective::SumC,
            vec![(Rational::one(), vec![2], vec![0])],
        );
        assert!(validate_instance(&inst).is_ok());
    }

    #[test]
    fn validate_probability_not_one() {
        let inst = plain_instance(
            vec![1],
            vec![],
            Objective::SumC,
            vec![
                (rat(1, 2), vec![2], vec![0]),
                (rat(1, 3), vec![2], vec![0]),
            ],
        );
        let report = validate_instance(&inst).unwrap_err();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::ProbabilityNotOne { total } if *total == rat(5, 6))));
    }

    #[test]
    fn validate_cycle() {
        let inst = plain_instance(
            vec![1, 1],
            vec![(0, 1), (1, 0)],
            Objective::SumC,
            vec![(Rational::one(), vec![1, 1], vec![0, 0])],
        );
        let report = validate_instance(&inst).unwrap_err();
        assert!(report.violations.contains(&Violation::CycleInPrecedence));
    }

    #[test]
    fn completion_times_prefix_sums() {
        let sc = Scenario {
            prob: Rational::one(),
            p: vec![Rational::from(1), Rational::from(2)],
            d: vec![Rational::zero(), Rational::zero()],
            w: None,
        };
        assert_eq!(
            completion_times(&Schedule::new(vec![0, 1]), &sc),
            vec![Rational::from(1), Rational::from(3)]
        );
        let c = completion_times(&Schedule::new(vec![1, 0]), &sc);
        assert_eq!(c[0], Rational::from(3));
        assert_eq!(c[1], Rational::from(2));
    }

    #[test]
    fn unit_completion_times() {
        let sc = Scenario {
            prob: Rational::one(),
            p: vec![Rational::one(); 4],
            d: vec![Rational::zero(); 4],
            w: None,
        };
        assert_eq!(
            completion_times(&Schedule::new(vec![0, 1, 2, 3]), &sc),
            (1..=4).map(|v| Rational::from(v as i64)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn scenario_cost_examples() {
        let w1 = vec![Rational::one(); 2];
        let sc = Scenario {
            prob: Rational::one(),
            p: vec![Rational::one(); 2],
            d: vec![Rational::zero(); 2],
            w: None,
        };
        let s = Schedule::new(vec![0, 1]);
        assert_eq!(scenario_cost(&s, &sc, Objective::SumT, &w1), Rational::from(3));

        let on_time = Scenario {
            prob: Rational::one(),
            p: vec![Rational::one(); 2],
            d: vec![Rational::from(1), Rational::from(2)],
            w: None,
        };
        assert_eq!(scenario_cost(&s, &on_time, Objective::SumU, &w1), Rational::zero());

        let weighted = Scenario {
            prob: Rational::one(),
            p: vec![Rational::from(2); 2],
            d: vec![Rational::one(); 2],
            w: None,
        };
        let w = vec![Rational::from(3), Rational::from(5)];
        assert_eq!(scenario_cost(&s, &weighted, Objective::MaxWT, &w), Rational::from(15));
    }

    /// Worked example: 4 unit-weight jobs, 5 processing-time
    /// scenarios whose induced costs are 13, 22, 29, 33, 36.
    pub fn worked_example_instance() -> Instance {
        // Per-job processing times are not recoverable from the aggregate
        // values; a single job whose processing time equals the scenario
        // cost reproduces the same distribution under sum-C.
        Instance {
            jobs: 1,
            weights: vec![Rational::one()],
            precedence: vec![],
            objective: Objective::SumC,
            scenarios: [(13, 3), (22, 1), (29, 2), (33, 1), (36, 3)]
                .into_iter()
                .map(|(cost, tenths)| Scenario {
                    prob: rat(tenths, 10),
                    p: vec![Rational::from(cost)],
                    d: vec![Rational::zero()],
                    w: None,
                })
                .collect(),
        }
    }

    #[test]
    fn worked_example_distribution() {
        let inst = worked_example_instance();
        let d = cost_distribution(&Schedule::identity(1), &inst);
        let expect: Vec<(Rational, Rational)> = [(13, 3), (22, 1), (29, 2), (33, 1), (36, 3)]
            .into_iter()
            .map(|(v, pr)| (Rational::from(v), rat(pr, 10)))
            .collect();
        assert_eq!(d.atoms(), &expect[..]);
        assert_eq!(d.total_probability(), Rational::one());
    }

    #[test]
    fn distribution_merges_equal_values() {
        let d = Distribution::from_atoms(vec![
            (Rational::from(5), rat(1, 2)),
            (Rational::from(5), rat(1, 2)),
        ]);
        assert_eq!(d.atoms(), &[(Rational::from(5), Rational::one())]);
    }

    #[test]
    fn single_scenario_single_atom() {
        let inst = plain_instance(
            vec![1, 1],
            vec![],
            Objective::SumC,
            vec![(Rational::one(), vec![1, 1], vec![0, 0])],
        );
        let d = cost_distribution(&Schedule::identity(2), &inst);
        assert_eq!(d.atoms().len(), 1);
        assert_eq!(d.atoms()[0], (Rational::from(3), Rational::one()));
    }

    #[test]
    fn linear_extensions_counts() {
        let free = plain_instance(
            vec![1; 3],
            vec![],
            Objective::SumC,
            vec![(Rational::one(), vec![1; 3], vec![0; 3])],
        );
        let all: Vec<_> = linear_extensions(&free).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].order, vec![0, 1, 2]);
        assert_eq!(all[5].order, vec![2, 1, 0]);

        let fork = plain_instance(
            vec![1; 3],
            vec![(0, 1), (0, 2)],
            Objective::SumC,
            vec![(Rational::one(), vec![1; 3], vec![0; 3])],
        );
        assert_eq!(linear_extensions(&fork).count(), 2);

        let chain = plain_instance(
            vec![1; 3],
            vec![(0, 1), (1, 2)],
            Objective::SumC,
            vec![(Rational::one(), vec![1; 3], vec![0; 3])],
        );
        let only: Vec<_> = linear_extensions(&chain).collect();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].order, vec![0, 1, 2]);
    }

    #[test]
    fn linear_extensions_match_filtered_permutations() {
        // n = 4 with a diamond 0 -> {1, 2} -> 3.
        let inst = plain_instance(
            vec![1; 4],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            Objective::SumC,
            vec![(Rational::one(), vec![1; 4], vec![0; 4])],
        );
        let got: Vec<Vec<usize>> =
            linear_extensions(&inst).map(|s| s.order).collect();
        let mut want = Vec::new();
        let mut perm = vec![0, 1, 2, 3];
        permutations(&mut perm, 0, &mut |p| {
            let sched = Schedule::new(p.to_vec());
            if sched.is_feasible(&inst) {
                want.push(p.to_vec());
            }
        });
        want.sort();
        assert_eq!(got, want);
    }

    fn permutations(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permutations(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn swap_identical_jobs_is_cost_invariant() {
        // Jobs 0 and 1 identical across all scenarios.
        let inst = plain_instance(
            vec![2, 2, 1],
            vec![],
            Objective::SumWT,
            vec![
                (rat(1, 2), vec![3, 3, 1], vec![2, 2, 5]),
                (rat(1, 2), vec![1, 1, 4], vec![0, 0, 3]),
            ],
        );
        let a = Schedule::new(vec![0, 2, 1]);
        let b = Schedule::new(vec![1, 2, 0]);
        for sc in &inst.scenarios {
            assert_eq!(
                scenario_cost(&a, sc, inst.objective, &inst.weights),
                scenario_cost(&b, sc, inst.objective, &inst.weights)
            );
        }
    }
}
