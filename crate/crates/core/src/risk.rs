//! Risk criteria over finite cost distributions: expectation, maximum,
//! value at risk and conditional value at risk.
//!
//! CVaR has two routes: an exact greedy over the mass-distribution form
//! (the production path) and a floating-point LP on the primal program,
//! kept solely as a cross-check oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp::{self, LpProblem, LpStatus, Relation};
use crate::model::Distribution;
use crate::rational::Rational;

/// The four performance measures of a random schedule cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RiskCriterion {
    Expectation,
    Max,
    /// Alpha-quantile; alpha in (0, 1].
    VaR(Rational),
    /// Expected cost in the worst 1-alpha probability mass; alpha in [0, 1).
    CVaR(Rational),
}

impl RiskCriterion {
    /// Checks the per-criterion alpha domain.
    pub fn validate(&self) -> Result<()> {
        match *self {
            RiskCriterion::Expectation | RiskCriterion::Max => Ok(()),
            RiskCriterion::VaR(alpha) => check_var_alpha(alpha),
            RiskCriterion::CVaR(alpha) => check_cvar_alpha(alpha),
        }
    }
}

impl std::fmt::Display for RiskCriterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RiskCriterion::Expectation => write!(f, "E"),
            RiskCriterion::Max => write!(f, "Max"),
            RiskCriterion::VaR(a) => write!(f, "VaR_{a}"),
            RiskCriterion::CVaR(a) => write!(f, "CVaR_{a}"),
        }
    }
}

pub fn check_var_alpha(alpha: Rational) -> Result<()> {
    if alpha.is_positive() && alpha <= Rational::one() {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { alpha, criterion: "VaR", domain: "(0,1]" })
    }
}

pub fn check_cvar_alpha(alpha: Rational) -> Result<()> {
    if !alpha.is_negative() && alpha < Rational::one() {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { alpha, criterion: "CVaR", domain: "[0,1)" })
    }
}

/// `sum value * prob` over the atoms.
pub fn expectation(dist: &Distribution) -> Rational {
    dist.atoms().iter().map(|&(v, pr)| v * pr).sum()
}

/// Largest atom value.
pub fn maximum(dist: &Distribution) -> Rational {
    dist.atoms().last().expect("empty distribution").0
}

/// Smallest value whose cumulative probability (ascending by value) reaches
/// alpha. The comparison is exact, so an alpha exactly on a cumulative
/// boundary returns the lower value.
pub fn var(dist: &Distribution, alpha: Rational) -> Result<Rational> {
    check_var_alpha(alpha)?;
    let mut cum = Rational::zero();
    for &(v, pr) in dist.atoms() {
        cum += pr;
        if cum >= alpha {
            return Ok(v);
        }
    }
    // Probabilities sum to 1 >= alpha, so the loop always returns.
    unreachable!("distribution probabilities below alpha <= 1")
}

/// Exact CVaR by the greedy mass distribution: take probability mass
/// `1 - alpha` from the largest values and average it.
pub fn cvar_greedy(dist: &Distribution, alpha: Rational) -> Result<Rational> {
    check_cvar_alpha(alpha)?;
    let mut remaining = Rational::one() - alpha;
    let budget = remaining;
    let mut acc = Rational::zero();
    for &(v, pr) in dist.atoms().iter().rev() {
        let take = pr.min(remaining);
        acc += v * take;
        remaining -= take;
        if remaining.is_zero() {
            break;
        }
    }
    Ok(acc / budget)
}

/// CVaR via the primal LP `min gamma + (1/(1-alpha)) sum Pr[b_k] u_k`.
/// Floating point; used only to cross-check [`cvar_greedy`].
pub fn cvar_lp(dist: &Distribution, alpha: Rational) -> Result<f64> {
    check_cvar_alpha(alpha)?;
    let atoms = dist.atoms();
    let k = atoms.len();
    let scale = 1.0 / (1.0 - alpha.to_f64());
    let mut p = LpProblem::new(1 + k);
    p.objective[0] = 1.0; // gamma
    p.bounds[0] = (f64::NEG_INFINITY, f64::INFINITY);
    for (i, &(_, pr)) in atoms.iter().enumerate() {
        p.objective[1 + i] = scale * pr.to_f64();
    }
    for (i, &(v, _)) in atoms.iter().enumerate() {
        p.push_sparse_row(&[(0, 1.0), (1 + i, 1.0)], Relation::Ge, v.to_f64());
    }
    let sol = lp::solve_lp(&p).map_err(|e| Error::LpFailure(e.to_string()))?;
    match sol.status {
        LpStatus::Optimal => Ok(sol.objective),
        other => Err(Error::LpFailure(format!("CVaR LP ended with status {other:?}"))),
    }
}

/// Dispatches to the evaluator for the criterion; CVaR uses the exact greedy.
pub fn evaluate(dist: &Distribution, criterion: RiskCriterion) -> Result<Rational> {
    match criterion {
        RiskCriterion::Expectation => Ok(expectation(dist)),
        RiskCriterion::Max => Ok(maximum(dist)),
        RiskCriterion::VaR(alpha) => var(dist, alpha),
        RiskCriterion::CVaR(alpha) => cvar_greedy(dist, alpha),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub fn worked_example_atoms() -> Distribution {
        Distribution::from_atoms(
            [(13, 3), (22, 1), (29, 2), (33, 1), (36, 3)]
                .map(|(v, pr)| (Rational::from(v), rat(pr, 10))),
        )
    }

    #[test]
    fn worked_example_values() {
        let d = worked_example_atoms();
        assert_eq!(expectation(&d), Rational::from(26));
        assert_eq!(maximum(&d), Rational::from(36));
        assert_eq!(var(&d, rat(1, 2)).unwrap(), Rational::from(29));
        assert_eq!(cvar_greedy(&d, rat(1, 2)).unwrap(), Rational::from(34));
    }

    #[test]
    fn single_atom() {
        let d = Distribution::single(Rational::from(7));
        assert_eq!(expectation(&d), Rational::from(7));
        assert_eq!(maximum(&d), Rational::from(7));
        assert_eq!(var(&d, rat(1, 4)).unwrap(), Rational::from(7));
        assert_eq!(cvar_greedy(&d, rat(3, 4)).unwrap(), Rational::from(7));
        let lp = cvar_lp(&d, rat(1, 3)).unwrap();
        assert!((lp - 7.0).abs() < 1e-6);
    }

    #[test]
    fn expectation_half_half() {
        let d = Distribution::from_atoms([
            (Rational::zero(), rat(1, 2)),
            (Rational::from(10), rat(1, 2)),
        ]);
        assert_eq!(expectation(&d), Rational::from(5));
    }

    #[test]
    fn var_full_mass_is_maximum() {
        let d = worked_example_atoms();
        assert_eq!(var(&d, Rational::one()).unwrap(), maximum(&d));
    }

    #[test]
    fn var_boundary_returns_lower_value() {
        // Cumulative mass reaches exactly 3/10 at the first atom.
        let d = worked_example_atoms();
        assert_eq!(var(&d, rat(3, 10)).unwrap(), Rational::from(13));
    }

    #[test]
    fn cvar_alpha_zero_is_expectation() {
        let d = worked_example_atoms();
        assert_eq!(cvar_greedy(&d, Rational::zero()).unwrap(), expectation(&d));
        let lp = cvar_lp(&d, Rational::zero()).unwrap();
        assert!((lp - 26.0).abs() < 1e-6);
    }

    #[test]
    fn cvar_tail_inside_top_atom() {
        // Mass 1/5 <= Pr[36] = 3/10, so only the top atom contributes.
        let d = worked_example_atoms();
        assert_eq!(cvar_greedy(&d, rat(4, 5)).unwrap(), Rational::from(36));
        let lp = cvar_lp(&d, rat(4, 5)).unwrap();
        assert!((lp - 36.0).abs() < 1e-6);
    }

    #[test]
    fn cvar_lp_matches_worked_example() {
        let lp = cvar_lp(&worked_example_atoms(), rat(1, 2)).unwrap();
        assert!((lp - 34.0).abs() < 1e-6);
    }

    #[test]
    fn evaluate_dispatch() {
        let d = worked_example_atoms();
        assert_eq!(evaluate(&d, RiskCriterion::CVaR(rat(1, 2))).unwrap(), Rational::from(34));
        assert_eq!(evaluate(&d, RiskCriterion::Max).unwrap(), Rational::from(36));
        let single = Distribution::single(Rational::from(5));
        assert_eq!(
            evaluate(&single, RiskCriterion::VaR(rat(1, 4))).unwrap(),
            Rational::from(5)
        );
    }

    #[test]
    fn alpha_domain_checks() {
        let d = worked_example_atoms();
        assert!(var(&d, Rational::zero()).is_err());
        assert!(var(&d, rat(3, 2)).is_err());
        assert!(cvar_greedy(&d, Rational::one()).is_err());
        assert!(cvar_greedy(&d, rat(-1, 2)).is_err());
        assert!(RiskCriterion::VaR(Rational::one()).validate().is_ok());
        assert!(RiskCriterion::CVaR(Rational::zero()).validate().is_ok());
    }

    #[test]
    fn cvar_equals_max_at_top_atom_threshold() {
        let d = worked_example_atoms();
        // Pr[max] = 3/10, so CVaR coincides with Max for alpha >= 7/10.
        let threshold = rat(7, 10);
        assert_eq!(cvar_greedy(&d, threshold).unwrap(), maximum(&d));
        assert_eq!(cvar_greedy(&d, rat(9, 10)).unwrap(), maximum(&d));
        assert!(cvar_greedy(&d, rat(69, 100)).unwrap() < maximum(&d));
    }
}
