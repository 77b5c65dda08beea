//! Command-line front end: validate and evaluate instances, run solvers,
//! compare algorithms against the brute-force oracle, emit reduction
//! gadgets, and benchmark.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use scenrisk::exact::{
    assignment_min_exp_unit, brute_force, fptas_bottleneck, minmax_bottleneck,
    pseudo_poly_bottleneck, wspt_min_exp_sumwc, Certificate, SolveResult,
};
use scenrisk::approx::{
    lift_expectation_cvar, lp_round_cvar_sumwc, lp_round_var_sumwc, minmax_assignment_k_approx,
};
use scenrisk::gen::{random_instance, rng_from_seed, GenParams};
use scenrisk::io::{parse_cnf, parse_instance, parse_selection, write_instance};
use scenrisk::model::{cost_distribution, validate_instance};
use scenrisk::reductions::{
    add_max_scenario, add_zero_scenario, invert_flowtime, min3sat_to_var,
    selection_to_minmax_unit_sumu, threesat_to_minmax_sumu_proc, threesat_to_minmax_unit_sumt,
    AugMode, DummyCase,
};
use scenrisk::risk::evaluate;
use scenrisk::{Error, Instance, Objective, Rational, RiskCriterion, Schedule};

#[derive(Parser)]
#[command(name = "scenrisk", version, about = "Single-machine scheduling under scenario risk")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Exp,
    Max,
    Var,
    Cvar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Brute,
    Assignment,
    Wspt,
    Lawler,
    Pseudo,
    Fptas,
    Lift,
    Lp2,
    Lpvar,
    Kapprox,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gadget {
    #[value(name = "min3sat-var")]
    Min3satVar,
    #[value(name = "3sat-sumt")]
    ThreesatSumt,
    #[value(name = "3sat-sumu")]
    ThreesatSumu,
    #[value(name = "weighted-exp")]
    WeightedExp,
    Selection,
    Invert,
    #[value(name = "add-zero")]
    AddZero,
    #[value(name = "add-max")]
    AddMax,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AugModeArg {
    Var,
    Cvar,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check an instance file against all model invariants.
    Validate {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Evaluate a schedule: one criterion, or all four when none is given.
    Evaluate {
        #[arg(long)]
        instance: PathBuf,
        /// Comma-separated job order, e.g. 0,2,1.
        #[arg(long)]
        schedule: String,
        #[arg(long, value_enum)]
        criterion: Option<CriterionArg>,
        /// Risk level as an exact rational, e.g. 1/2.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Run a solver and print schedule, value and certificate.
    Solve {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        #[arg(long, value_enum)]
        criterion: Option<CriterionArg>,
        #[arg(long)]
        alpha: Option<String>,
        /// Accuracy for the fptas algorithm, e.g. 1/4.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Run an algorithm against brute force on a seeded random corpus.
    Oracle {
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        eps: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Generate a hardness-gadget or transform instance.
    Reduce {
        #[arg(long, value_enum)]
        gadget: Gadget,
        /// Input file: DIMACS CNF, selection JSON, or instance JSON
        /// depending on the gadget.
        #[arg(long)]
        input: PathBuf,
        /// Output path for the generated instance (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        alpha: Option<String>,
        /// Clause bound L for min3sat-var.
        #[arg(long)]
        l: Option<usize>,
        /// Objective for min3sat-var (maxT, sumT or sumU).
        #[arg(long)]
        objective: Option<String>,
        /// Augmentation target for add-max.
        #[arg(long, value_enum)]
        mode: Option<AugModeArg>,
    },
    /// Time the solvers on seeded random corpora.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        count: usize,
    },
}

struct CliError {
    code: u8,
    kind: &'static str,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, kind: "usage", message: message.into() }
    }

    fn invalid_input(message: impl Into<String>) -> Self {
        CliError { code: 3, kind: "invalid-input", message: message.into() }
    }

    fn solver(message: impl Into<String>) -> Self {
        CliError { code: 4, kind: "solver", message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match &e {
            Error::TooLarge { .. } | Error::LpFailure(_) => CliError::solver(e.to_string()),
            Error::DegenerateFormula(_) => CliError::invalid_input(e.to_string()),
            _ => CliError::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.cmd, format) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            match format {
                Format::Text => eprintln!("error: {}", err.message),
                Format::Json => eprintln!(
                    "{}",
                    serde_json::json!({"error": {"kind": err.kind, "message": err.message}})
                ),
            }
            ExitCode::from(err.code)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &PathBuf) -> Result<Instance, CliError> {
    parse_instance(&read_file(path)?).map_err(|e| CliError::invalid_input(e.to_string()))
}

fn parse_rational(text: &str, what: &str) -> Result<Rational, CliError> {
    text.parse()
        .map_err(|_| CliError::usage(format!("{what} must be a rational like 3 or 1/2, got `{text}`")))
}

fn parse_alpha(alpha: &Option<String>) -> Result<Rational, CliError> {
    let text = alpha
        .as_ref()
        .ok_or_else(|| CliError::usage("--alpha is required for this command"))?;
    parse_rational(text, "--alpha")
}

fn build_criterion(
    criterion: CriterionArg,
    alpha: &Option<String>,
) -> Result<RiskCriterion, CliError> {
    let c = match criterion {
        CriterionArg::Exp => RiskCriterion::Expectation,
        CriterionArg::Max => RiskCriterion::Max,
        CriterionArg::Var => RiskCriterion::VaR(parse_alpha(alpha)?),
        CriterionArg::Cvar => RiskCriterion::CVaR(parse_alpha(alpha)?),
    };
    if matches!(criterion, CriterionArg::Exp | CriterionArg::Max) && alpha.is_some() {
        return Err(CliError::usage("--alpha is only valid with var or cvar"));
    }
    c.validate()?;
    Ok(c)
}

fn parse_schedule(text: &str, inst: &Instance) -> Result<Schedule, CliError> {
    let order: Vec<usize> = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::usage(format!("bad schedule entry `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    let sched = Schedule::new(order);
    if !sched.is_feasible(inst) {
        return Err(CliError::usage(
            "schedule is not a feasible permutation of this instance",
        ));
    }
    Ok(sched)
}

fn schedule_string(sched: &Schedule) -> String {
    sched
        .order
        .iter()
        .map(|j| j.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn certificate_json(cert: &Certificate) -> serde_json::Value {
    match cert {
        Certificate::Exact => serde_json::json!({"kind": "exact"}),
        Certificate::Approx(c) => serde_json::json!({
            "kind": "approx",
            "ratio": c.ratio.to_string(),
            "basis": format!("{:?}", c.basis),
        }),
        Certificate::Fptas { eps } => {
            serde_json::json!({"kind": "fptas", "eps": eps.to_string()})
        }
    }
}

fn certificate_text(cert: &Certificate) -> String {
    match cert {
        Certificate::Exact => "exact".into(),
        Certificate::Approx(c) => format!("approx ratio {} ({:?})", c.ratio, c.basis),
        Certificate::Fptas { eps } => format!("fptas eps {eps}"),
    }
}

fn run(cmd: Cmd, format: Format) -> Result<(), CliError> {
    match cmd {
        Cmd::Validate { instance } => {
            let text = read_file(&instance)?;
            let inst: Instance = serde_json::from_str(&text).map_err(|e| {
                CliError::invalid_input(format!(
                    "line {}, column {}: {e}",
                    e.line(),
                    e.column()
                ))
            })?;
            match validate_instance(&inst) {
                Ok(()) => {
                    match format {
                        Format::Text => println!("ok: {} jobs, {} scenarios", inst.n(), inst.num_scenarios()),
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({"valid": true, "jobs": inst.n(), "scenarios": inst.num_scenarios()})
                        ),
                    }
                    Ok(())
                }
                Err(report) => {
                    match format {
                        Format::Text => {
                            for v in &report.violations {
                                println!("violation: {v}");
                            }
                        }
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({
                                "valid": false,
                                "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            })
                        ),
                    }
                    Err(CliError::invalid_input("instance violates model invariants"))
                }
            }
        }

        Cmd::Evaluate { instance, schedule, criterion, alpha } => {
            let inst = load_instance(&instance)?;
            let sched = parse_schedule(&schedule, &inst)?;
            let dist = cost_distribution(&sched, &inst);
            match criterion {
                Some(c) => {
                    let value = evaluate(&dist, build_criterion(c, &alpha)?)?;
                    match format {
                        Format::Text => println!("{value}"),
                        Format::Json => {
                            println!("{}", serde_json::json!({"value": value.to_string()}))
                        }
                    }
                }
                None => {
                    let a = parse_alpha(&alpha)?;
                    let e = evaluate(&dist, RiskCriterion::Expectation)?;
                    let mx = evaluate(&dist, RiskCriterion::Max)?;
                    let var = evaluate(&dist, RiskCriterion::VaR(a))?;
                    let cvar = evaluate(&dist, RiskCriterion::CVaR(a))?;
                    match format {
                        Format::Text => {
                            println!("expectation: {e}");
                            println!("max: {mx}");
                            println!("var[{a}]: {var}");
                            println!("cvar[{a}]: {cvar}");
                        }
                        Format::Json => println!(
                            "{}",
                            serde_json::json!({
                                "alpha": a.to_string(),
                                "expectation": e.to_string(),
                                "max": mx.to_string(),
                                "var": var.to_string(),
                                "cvar": cvar.to_string(),
                            })
                        ),
                    }
                }
            }
            Ok(())
        }

        Cmd::Solve { instance, algorithm, criterion, alpha, eps } => {
            let inst = load_instance(&instance)?;
            let res = run_algorithm(&inst, algorithm, &criterion, &alpha, &eps)?;
            match format {
                Format::Text => {
                    println!("schedule: {}", schedule_string(&res.schedule));
                    println!("value: {}", res.value);
                    println!("certificate: {}", certificate_text(&res.certificate));
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "schedule": res.schedule.order,
                        "value": res.value.to_string(),
                        "certificate": certificate_json(&res.certificate),
                    })
                ),
            }
            Ok(())
        }

        Cmd::Oracle { algorithm, alpha, eps, seed, count } => {
            let mut rng = rng_from_seed(seed);
            let params = oracle_params(algorithm);
            let criterion_arg = oracle_criterion(algorithm);
            let mut worst = Rational::zero();
            let mut rows = Vec::new();
            for i in 0..count {
                let inst = oracle_instance(&mut rng, &params, algorithm);
                let res = run_algorithm(&inst, algorithm, &criterion_arg, &alpha, &eps)?;
                let reference = brute_force(
                    &inst,
                    reference_criterion(algorithm, &alpha)?,
                )?;
                let ratio = if reference.value.is_zero() {
                    if res.value.is_zero() {
                        Rational::one()
                    } else {
                        return Err(CliError::solver(format!(
                            "instance {i}: positive value {} against zero optimum",
                            res.value
                        )));
                    }
                } else {
                    res.value / reference.value
                };
                worst = worst.max(ratio);
                rows.push((i, ratio));
            }
            match format {
                Format::Text => {
                    for (i, ratio) in &rows {
                        println!("instance {i}: ratio {ratio}");
                    }
                    println!("worst ratio: {worst}");
                }
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "count": count,
                        "seed": seed,
                        "ratios": rows.iter().map(|(_, r)| r.to_string()).collect::<Vec<_>>(),
                        "worst": worst.to_string(),
                    })
                ),
            }
            Ok(())
        }

        Cmd::Reduce { gadget, input, output, alpha, l, objective, mode } => {
            let text = read_file(&input)?;
            let (inst, meta) = build_gadget(gadget, &text, &alpha, l, &objective, mode)?;
            let body = write_instance(&inst);
            match &output {
                Some(path) => fs::write(path, &body)
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?,
                None => {
                    if format == Format::Text {
                        println!("{body}");
                    }
                }
            }
            match format {
                Format::Text => {
                    for (key, value) in &meta {
                        eprintln!("{key}: {value}");
                    }
                }
                Format::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert(
                        "instance".into(),
                        serde_json::to_value(&inst).expect("instance serializes"),
                    );
                    for (key, value) in &meta {
                        obj.insert((*key).into(), serde_json::Value::String(value.clone()));
                    }
                    println!("{}", serde_json::Value::Object(obj));
                }
            }
            Ok(())
        }

        Cmd::Bench { seed, count } => {
            let mut table = String::new();
            writeln!(table, "{:<12} {:>10} {:>12}", "algorithm", "instances", "total ms")
                .unwrap();
            for algorithm in [
                Algorithm::Brute,
                Algorithm::Assignment,
                Algorithm::Wspt,
                Algorithm::Lawler,
                Algorithm::Pseudo,
                Algorithm::Kapprox,
                Algorithm::Lp2,
            ] {
                let mut rng = rng_from_seed(seed);
                let params = oracle_params(algorithm);
                let criterion = oracle_criterion(algorithm);
                let alpha = matches!(algorithm, Algorithm::Lift | Algorithm::Lp2 | Algorithm::Lpvar)
                    .then(|| "1/4".to_string());
                let start = Instant::now();
                for _ in 0..count {
                    let inst = oracle_instance(&mut rng, &params, algorithm);
                    run_algorithm(&inst, algorithm, &criterion, &alpha, &None)?;
                }
                let elapsed = start.elapsed().as_millis();
                let name = format!("{:?}", algorithm).to_lowercase();
                writeln!(table, "{name:<12} {count:>10} {elapsed:>12}").unwrap();
            }
            print!("{table}");
            Ok(())
        }
    }
}

/// Default expectation solver for the lifting algorithm, chosen by
/// instance shape.
fn default_exp_solver(inst: &Instance) -> Result<SolveResult, Error> {
    if inst.is_unit_time()
        && matches!(inst.objective, Objective::SumWU | Objective::SumWT)
    {
        assignment_min_exp_unit(inst)
    } else if inst.objective == Objective::SumWC {
        wspt_min_exp_sumwc(inst)
    } else {
        Err(Error::Precondition(
            "no expectation solver applies to this instance shape".into(),
        ))
    }
}

fn run_algorithm(
    inst: &Instance,
    algorithm: Algorithm,
    criterion: &Option<CriterionArg>,
    alpha: &Option<String>,
    eps: &Option<String>,
) -> Result<SolveResult, CliError> {
    let res = match algorithm {
        Algorithm::Brute => {
            let c = criterion
                .ok_or_else(|| CliError::usage("--criterion is required for brute"))?;
            brute_force(inst, build_criterion(c, alpha)?)?
        }
        Algorithm::Assignment => assignment_min_exp_unit(inst)?,
        Algorithm::Wspt => wspt_min_exp_sumwc(inst)?,
        Algorithm::Lawler => minmax_bottleneck(inst)?,
        Algorithm::Pseudo => {
            let c = criterion
                .ok_or_else(|| CliError::usage("--criterion is required for pseudo"))?;
            pseudo_poly_bottleneck(inst, build_criterion(c, alpha)?)?
        }
        Algorithm::Fptas => {
            let c = criterion
                .ok_or_else(|| CliError::usage("--criterion is required for fptas"))?;
            let e = parse_rational(
                eps.as_deref()
                    .ok_or_else(|| CliError::usage("--eps is required for fptas"))?,
                "--eps",
            )?;
            fptas_bottleneck(inst, build_criterion(c, alpha)?, e)?
        }
        Algorithm::Lift => {
            let a = parse_alpha(alpha)?;
            lift_expectation_cvar(inst, a, Rational::one(), default_exp_solver)?
        }
        Algorithm::Lp2 => lp_round_cvar_sumwc(inst, parse_alpha(alpha)?)?,
        Algorithm::Lpvar => lp_round_var_sumwc(inst, parse_alpha(alpha)?)?,
        Algorithm::Kapprox => minmax_assignment_k_approx(inst)?,
    };
    Ok(res)
}

/// Generation parameters matching each algorithm's preconditions.
fn oracle_params(algorithm: Algorithm) -> GenParams {
    match algorithm {
        Algorithm::Brute => GenParams::new(Objective::SumWT).with_jobs(2, 6).with_scenarios(1, 3),
        Algorithm::Assignment | Algorithm::Kapprox | Algorithm::Lift => {
            GenParams::new(Objective::SumWT).unit_time().with_jobs(2, 6).with_scenarios(1, 3)
        }
        Algorithm::Wspt => GenParams::new(Objective::SumWC).with_jobs(2, 6).with_scenarios(1, 3),
        Algorithm::Lawler | Algorithm::Pseudo | Algorithm::Fptas => {
            GenParams::new(Objective::MaxWT)
                .with_jobs(2, 6)
                .with_scenarios(1, 3)
                .with_ranges(2, 5, 2)
                .with_precedence(0.2)
        }
        Algorithm::Lp2 | Algorithm::Lpvar => {
            GenParams::new(Objective::SumWC).with_jobs(2, 6).with_scenarios(1, 3)
        }
    }
}

fn oracle_instance(
    rng: &mut rand_chacha::ChaCha8Rng,
    params: &GenParams,
    algorithm: Algorithm,
) -> Instance {
    let mut inst = random_instance(rng, params);
    if matches!(algorithm, Algorithm::Lp2 | Algorithm::Lpvar) {
        // The completion-time relaxation needs deterministic processing
        // times.
        let p = inst.scenarios[0].p.clone();
        for sc in inst.scenarios.iter_mut() {
            sc.p = p.clone();
        }
    }
    inst
}

fn oracle_criterion(algorithm: Algorithm) -> Option<CriterionArg> {
    match algorithm {
        Algorithm::Brute => Some(CriterionArg::Exp),
        Algorithm::Pseudo | Algorithm::Fptas => Some(CriterionArg::Max),
        _ => None,
    }
}

/// Criterion the oracle's brute-force reference optimizes for an algorithm.
fn reference_criterion(
    algorithm: Algorithm,
    alpha: &Option<String>,
) -> Result<RiskCriterion, CliError> {
    Ok(match algorithm {
        Algorithm::Brute | Algorithm::Assignment | Algorithm::Wspt => RiskCriterion::Expectation,
        Algorithm::Lawler | Algorithm::Pseudo | Algorithm::Fptas | Algorithm::Kapprox => {
            RiskCriterion::Max
        }
        Algorithm::Lift | Algorithm::Lp2 => RiskCriterion::CVaR(parse_alpha(alpha)?),
        Algorithm::Lpvar => RiskCriterion::VaR(parse_alpha(alpha)?),
    })
}

type Meta = Vec<(&'static str, String)>;

fn build_gadget(
    gadget: Gadget,
    input: &str,
    alpha: &Option<String>,
    l: Option<usize>,
    objective: &Option<String>,
    mode: Option<AugModeArg>,
) -> Result<(Instance, Meta), CliError> {
    match gadget {
        Gadget::Min3satVar => {
            let f = parse_cnf(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let a = parse_alpha(alpha)?;
            let l = l.ok_or_else(|| CliError::usage("--l is required for min3sat-var"))?;
            let obj = match objective.as_deref().unwrap_or("sumU") {
                "maxT" => Objective::MaxT,
                "sumT" => Objective::SumT,
                "sumU" => Objective::SumU,
                other => {
                    return Err(CliError::usage(format!(
                        "--objective must be maxT, sumT or sumU, got `{other}`"
                    )))
                }
            };
            let g = min3sat_to_var(&f, l, a, obj)?;
            let case = match g.case {
                DummyCase::EarlyDue => "early-due",
                DummyCase::LateDue => "late-due",
                DummyCase::NoDummy => "no-dummy",
            };
            let meta = vec![
                ("threshold", g.threshold.to_string()),
                ("alpha", g.alpha.to_string()),
                ("case", case.to_string()),
                ("question", "at most L clauses satisfiable iff some schedule has VaR_alpha <= threshold".to_string()),
            ];
            Ok((g.instance, meta))
        }
        Gadget::ThreesatSumt => {
            let f = parse_cnf(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let g = threesat_to_minmax_unit_sumt(&f);
            let meta = vec![
                ("threshold", g.threshold.to_string()),
                ("question", "satisfiable iff minmax total tardiness <= threshold".to_string()),
            ];
            Ok((g.instance, meta))
        }
        Gadget::ThreesatSumu => {
            let f = parse_cnf(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let g = threesat_to_minmax_sumu_proc(&f);
            let meta = vec![
                ("threshold", g.threshold.to_string()),
                ("question", "satisfiable iff minmax late jobs <= threshold".to_string()),
            ];
            Ok((g.instance, meta))
        }
        Gadget::WeightedExp => {
            let inst =
                parse_instance(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let out = scenrisk::reductions::weighted_to_exp(&inst)?;
            let w: Rational = inst.weights.iter().copied().sum();
            Ok((out, vec![("weight-total", w.to_string())]))
        }
        Gadget::Selection => {
            let s = parse_selection(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            Ok((selection_to_minmax_unit_sumu(&s), vec![("q", s.q.to_string())]))
        }
        Gadget::Invert => {
            let inst =
                parse_instance(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let out = invert_flowtime(&inst)?;
            Ok((out, vec![("mapping", "reverse the schedule".to_string())]))
        }
        Gadget::AddZero => {
            let inst =
                parse_instance(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let a = parse_alpha(alpha)?;
            Ok((add_zero_scenario(&inst, a)?, vec![("alpha", a.to_string())]))
        }
        Gadget::AddMax => {
            let inst =
                parse_instance(input).map_err(|e| CliError::invalid_input(e.to_string()))?;
            let a = parse_alpha(alpha)?;
            let mode = match mode.ok_or_else(|| CliError::usage("--mode is required for add-max"))?
            {
                AugModeArg::Var => AugMode::Var,
                AugModeArg::Cvar => AugMode::CVar,
            };
            let g = add_max_scenario(&inst, a, mode)?;
            Ok((g.instance, vec![("m-value", g.m_value.to_string())]))
        }
    }
}
