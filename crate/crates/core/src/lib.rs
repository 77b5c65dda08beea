//! Single-machine scheduling under discrete scenario uncertainty.
//!
//! Jobs have deterministic weights, a precedence DAG and a finite set of
//! scenarios, each carrying processing times, due dates and a probability.
//! The cost of a schedule is a discrete random variable; schedules are
//! compared by expectation, maximum, value at risk or conditional value at
//! risk. The crate provides exact evaluators over rationals, exact and
//! approximate solvers with certificates, and constructive reduction gadgets
//! whose defining properties are brute-force checkable on small inputs.

pub mod approx;
pub mod error;
pub mod exact;
pub mod gen;
pub mod io;
pub mod lp;
pub mod model;
pub mod rational;
pub mod reductions;
pub mod risk;

pub use error::{Error, Result};
pub use model::{Distribution, Instance, Objective, Scenario, Schedule};
pub use rational::Rational;
pub use risk::RiskCriterion;
