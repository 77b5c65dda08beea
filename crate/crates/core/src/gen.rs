//! Seeded random corpora: distributions and instances within solver
//! preconditions. Deterministic for a fixed seed, used by the oracle tests
//! and by the CLI `oracle` and `bench` subcommands.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model::{Instance, Objective, Scenario};
use crate::rational::Rational;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Raw probability atoms: `k` values in `0..=max_value` with positive
/// rational probabilities summing to exactly 1. Values may repeat.
pub fn random_atoms(rng: &mut impl Rng, k: usize, max_value: i64) -> Vec<(Rational, Rational)> {
    let masses: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = masses.iter().sum();
    masses
        .into_iter()
        .map(|m| {
            (
                Rational::from(rng.gen_range(0..=max_value)),
                Rational::new(m, total),
            )
        })
        .collect()
}

/// Parameters for [`random_instance`].
#[derive(Clone, Debug)]
pub struct GenParams {
    pub n_min: usize,
    pub n_max: usize,
    pub k_min: usize,
    pub k_max: usize,
    pub objective: Objective,
    /// All processing times forced to 1.
    pub unit_time: bool,
    /// Probability of an edge i -> j for each pair i < j; 0 disables
    /// precedence entirely.
    pub precedence_prob: f64,
    pub max_p: i64,
    pub max_d: i64,
    pub max_w: i64,
    /// Attach a per-scenario weight vector to every scenario.
    pub scenario_weights: bool,
}

impl GenParams {
    pub fn new(objective: Objective) -> Self {
        GenParams {
            n_min: 2,
            n_max: 6,
            k_min: 1,
            k_max: 4,
            objective,
            unit_time: false,
            precedence_prob: 0.0,
            max_p: 4,
            max_d: 8,
            max_w: 4,
            scenario_weights: false,
        }
    }

    pub fn unit_time(mut self) -> Self {
        self.unit_time = true;
        self
    }

    pub fn with_jobs(mut self, lo: usize, hi: usize) -> Self {
        self.n_min = lo;
        self.n_max = hi;
        self
    }

    pub fn with_scenarios(mut self, lo: usize, hi: usize) -> Self {
        self.k_min = lo;
        self.k_max = hi;
        self
    }

    pub fn with_precedence(mut self, prob: f64) -> Self {
        self.precedence_prob = prob;
        self
    }

    pub fn with_ranges(mut self, max_p: i64, max_d: i64, max_w: i64) -> Self {
        self.max_p = max_p;
        self.max_d = max_d;
        self.max_w = max_w;
        self
    }

    pub fn with_scenario_weights(mut self) -> Self {
        self.scenario_weights = true;
        self
    }
}

/// Random instance with integer data inside the parameter ranges; scenario
/// probabilities are exact rationals summing to 1.
pub fn random_instance(rng: &mut impl Rng, params: &GenParams) -> Instance {
    let n = rng.gen_range(params.n_min..=params.n_max);
    let k = rng.gen_range(params.k_min..=params.k_max);
    let masses: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=9)).collect();
    let total: i64 = masses.iter().sum();
    let mut precedence = Vec::new();
    if params.precedence_prob > 0.0 {
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen_bool(params.precedence_prob) {
                    precedence.push((i, j));
                }
            }
        }
    }
    let scenarios = masses
        .into_iter()
        .map(|m| Scenario {
            prob: Rational::new(m, total),
            p: (0..n)
                .map(|_| {
                    if params.unit_time {
                        Rational::one()
                    } else {
                        Rational::from(rng.gen_range(0..=params.max_p))
                    }
                })
                .collect(),
            d: (0..n).map(|_| Rational::from(rng.gen_range(0..=params.max_d))).collect(),
            w: params.scenario_weights.then(|| {
                (0..n).map(|_| Rational::from(rng.gen_range(1..=params.max_w))).collect()
            }),
        })
        .collect();
    Instance {
        jobs: n,
        weights: (0..n).map(|_| Rational::from(rng.gen_range(1..=params.max_w))).collect(),
        precedence,
        objective: params.objective,
        scenarios,
    }
}
