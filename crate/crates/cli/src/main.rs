//! opcalc: exact operadic calculus from the command line.
//!
//! Four subcommands (`verify`, `cohomology`, `deform`, `evolve`), each
//! emitting a single JSON report on stdout and diagnostics on stderr.
//! Exit codes: 0 all checks passed, 1 an algebraic identity or precondition
//! was violated, 2 usage or input error, 3 resource cap exceeded.

use opcalc_cli::report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use opcalc_core::cohomology::{cohomology_dimensions, is_cocycle};
use opcalc_core::deformation::{basic_report, gauge_residuals, DeformationPair, DualMode};
use opcalc_core::dynamics::{cocycle_defect_trace, heisenberg_flow, DynamicsConfig};
use opcalc_core::verify::{run_suite, SuiteConfig};
use opcalc_core::{AlgebraSpec, Error as CoreError, Operation, Scalar};

use report::{ResidualValue, RunReport};

/// Cocycle-defect tolerance for trajectories started from an exact cocycle.
const DEFECT_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "opcalc",
    version,
    about = "Exact operadic calculus: identity suites, cohomology tables, deformation reports, flows"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the seeded random identity suite
    Verify(VerifyArgs),
    /// Exact cohomology dimension and rank table of an associative algebra
    Cohomology(CohomologyArgs),
    /// Curvature, Maurer-Cartan/Bianchi residuals, and gauge report of a deformation
    Deform(DeformArgs),
    /// Integrate the linear flow generated by a degree-1 cocycle
    Evolve(EvolveArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Module dimension (1..=4)
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Largest operation degree drawn (1..=4)
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
    /// Random instances per identity
    #[arg(long, default_value_t = 100)]
    trials: u32,
    /// Seed of the documented generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Algebra file (JSON: {"dim", "name", "mu"})
    #[arg(long)]
    algebra: PathBuf,
    /// Largest cochain degree in the table
    #[arg(long, default_value_t = 2)]
    n_max: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualModeArg {
    SelfDual,
    AntiSelfDual,
    Custom,
}

#[derive(Args)]
struct DeformArgs {
    /// Ground algebra file
    #[arg(long)]
    algebra: PathBuf,
    /// Measured operation file (JSON Operation of degree 2)
    #[arg(long, conflicts_with = "omega", required_unless_present = "omega")]
    mu0: Option<PathBuf>,
    /// Deformation file (JSON Operation of degree 2), used as mu0 = mu + omega
    #[arg(long)]
    omega: Option<PathBuf>,
    /// Dual ansatz for the gauge equations
    #[arg(long, value_enum, default_value_t = DualModeArg::SelfDual)]
    dual_mode: DualModeArg,
    /// Custom dual operation file (degree 3); required with --dual-mode custom
    #[arg(long, required_if_eq("dual_mode", "custom"))]
    dual: Option<PathBuf>,
    /// Current file (degree 4 Operation); defaults to the definitional current
    #[arg(long)]
    current: Option<PathBuf>,
}

#[derive(Args)]
struct EvolveArgs {
    /// Ground algebra file (must be associative)
    #[arg(long)]
    algebra: PathBuf,
    /// Degree-1 cocycle generating the flow
    #[arg(long)]
    hamiltonian: PathBuf,
    /// Initial operation to evolve
    #[arg(long)]
    state: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    t_end: f64,
    #[arg(long, default_value_t = 1e-3)]
    dt: f64,
    /// Real rate constant multiplying the bracket
    #[arg(long, default_value_t = 1.0)]
    lambda: f64,
}

enum CliError {
    Core(CoreError),
    Input(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "{m}"),
        }
    }
}

/// 1 = violated identity or precondition, 2 = usage/input, 3 = resource cap.
fn exit_class(err: &CliError) -> u8 {
    match err {
        CliError::Core(CoreError::NotAssociative { .. }) => 1,
        CliError::Core(CoreError::NotCocycle) => 1,
        CliError::Core(CoreError::ResourceCap { .. }) => 3,
        _ => 2,
    }
}

fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))
}

fn scalar_residual(s: Scalar) -> ResidualValue {
    ResidualValue::Exact(s)
}

fn run_verify(args: &VerifyArgs) -> Result<RunReport, CliError> {
    let config = SuiteConfig {
        dim: args.dim,
        max_degree: args.max_degree,
        trials: args.trials,
        seed: args.seed,
    };
    let checks = run_suite(&config)?;
    let all_passed = checks.iter().all(|c| c.passed);
    let max = checks
        .iter()
        .map(|c| c.max_abs_residual.clone())
        .max()
        .unwrap_or_else(Scalar::zero);
    Ok(RunReport {
        command: "verify".into(),
        inputs: serde_json::to_value(config).expect("inputs"),
        results: json!({ "identities": checks }),
        all_passed,
        max_residual: scalar_residual(max),
        runtime_ms: 0,
    })
}

fn run_cohomology(args: &CohomologyArgs) -> Result<RunReport, CliError> {
    let algebra: AlgebraSpec = load_json(&args.algebra)?;
    let table = cohomology_dimensions(&algebra, args.n_max)?;
    Ok(RunReport {
        command: "cohomology".into(),
        inputs: json!({
            "algebra": args.algebra.display().to_string(),
            "n_max": args.n_max,
        }),
        results: serde_json::to_value(&table).expect("results"),
        all_passed: true,
        max_residual: scalar_residual(Scalar::zero()),
        runtime_ms: 0,
    })
}

fn run_deform(args: &DeformArgs) -> Result<RunReport, CliError> {
    let algebra: AlgebraSpec = load_json(&args.algebra)?;
    let mu = algebra.mu().clone();
    let pair = match (&args.mu0, &args.omega) {
        (Some(path), None) => DeformationPair::new(mu, load_json(path)?)?,
        (None, Some(path)) => DeformationPair::from_omega(mu, load_json(path)?)?,
        _ => return Err(CliError::Input("exactly one of --mu0/--omega".into())),
    };
    let dual_mode = match args.dual_mode {
        DualModeArg::SelfDual => DualMode::SelfDual,
        DualModeArg::AntiSelfDual => DualMode::AntiSelfDual,
        DualModeArg::Custom => {
            let path = args.dual.as_ref().expect("clap enforces --dual");
            DualMode::Custom(load_json(path)?)
        }
    };
    let current: Option<Operation> = match &args.current {
        Some(path) => Some(load_json(path)?),
        None => None,
    };

    let ground_associative = opcalc_core::flows::associator(pair.mu())?.is_zero();
    let report = if ground_associative {
        gauge_residuals(&pair, &dual_mode, current.as_ref())?
    } else {
        eprintln!(
            "opcalc: warning: ground operation is not associative; \
             gauge residuals need d^2 = 0 and are omitted"
        );
        basic_report(&pair)?
    };

    // identities only: with an associative ground, nabla(Omega) = 0 follows
    // from the Bianchi identity, and the definitional current makes the
    // second gauge equation and the conservation law exact
    let mut residuals = vec![
        report.mc_residual.max_abs_coeff.clone(),
        report.bianchi_residual.max_abs_coeff.clone(),
    ];
    if let Some(e) = &report.gauge_residual_1 {
        residuals.push(e.max_abs_coeff.clone());
    }
    if report.current_definitional == Some(true) {
        if let Some(e) = &report.gauge_residual_2 {
            residuals.push(e.max_abs_coeff.clone());
        }
        if let Some(e) = &report.conservation_residual {
            residuals.push(e.max_abs_coeff.clone());
        }
    }
    let max = residuals.iter().cloned().max().unwrap_or_else(Scalar::zero);
    let all_passed = residuals.iter().all(Scalar::is_zero);

    Ok(RunReport {
        command: "deform".into(),
        inputs: json!({
            "algebra": args.algebra.display().to_string(),
            "mu0": args.mu0.as_ref().map(|p| p.display().to_string()),
            "omega": args.omega.as_ref().map(|p| p.display().to_string()),
            "dual_mode": match args.dual_mode {
                DualModeArg::SelfDual => "self_dual",
                DualModeArg::AntiSelfDual => "anti_self_dual",
                DualModeArg::Custom => "custom",
            },
            "dual": args.dual.as_ref().map(|p| p.display().to_string()),
            "current": args.current.as_ref().map(|p| p.display().to_string()),
        }),
        results: serde_json::to_value(&report).expect("results"),
        all_passed,
        max_residual: scalar_residual(max),
        runtime_ms: 0,
    })
}

fn run_evolve(args: &EvolveArgs) -> Result<RunReport, CliError> {
    let algebra: AlgebraSpec = load_json(&args.algebra)?;
    let hamiltonian: Operation = load_json(&args.hamiltonian)?;
    let state: Operation = load_json(&args.state)?;
    let config = DynamicsConfig::new(args.lambda, args.t_end, args.dt)?;

    let table = cohomology_dimensions(&algebra, 1)?;
    let h1_dim = table.dims[1].1;

    let state_is_cocycle = is_cocycle(algebra.mu(), &state)?;
    let trajectory = heisenberg_flow(algebra.mu(), &hamiltonian, &state, &config)?;
    let defects = cocycle_defect_trace(algebra.mu(), &trajectory)?;
    let max_defect = defects.iter().cloned().fold(0.0, f64::max);
    let all_passed = !state_is_cocycle || max_defect < DEFECT_TOLERANCE;

    Ok(RunReport {
        command: "evolve".into(),
        inputs: json!({
            "algebra": args.algebra.display().to_string(),
            "hamiltonian": args.hamiltonian.display().to_string(),
            "state": args.state.display().to_string(),
            "t_end": args.t_end,
            "dt": args.dt,
            "lambda": args.lambda,
        }),
        results: json!({
            "static": h1_dim == 0,
            "h1_dim": h1_dim,
            "initial_state_cocycle": state_is_cocycle,
            "tolerance": DEFECT_TOLERANCE,
            "cocycle_defect": defects,
            "trajectory": trajectory,
        }),
        all_passed,
        max_residual: ResidualValue::Float(max_defect),
        runtime_ms: 0,
    })
}

fn run(command: &Command) -> Result<RunReport, CliError> {
    match command {
        Command::Verify(a) => run_verify(a),
        Command::Cohomology(a) => run_cohomology(a),
        Command::Deform(a) => run_deform(a),
        Command::Evolve(a) => run_evolve(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            report.runtime_ms = started.elapsed().as_millis();
            print!("{}", report.to_pretty_json());
            eprintln!(
                "opcalc: {} completed in {} ms",
                report.command, report.runtime_ms
            );
            if report.all_passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("opcalc: a checked identity or tolerance failed");
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("opcalc: error: {err}");
            ExitCode::from(exit_class(&err))
        }
    }
}
