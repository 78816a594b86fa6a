//! `lazyq`: classify two-qubit states, explore Bell-diagonal geometry,
//! generate witness families and check the entropy-rate meaning of laziness.
//!
//! Exit codes: 0 success, 1 invalid state or family parameters, 2 parse or
//! usage error, 3 internal consistency failure.

mod statefile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lazyq::belldiag::{self, BellDiagPoint, REGION_TOL};
use lazyq::classify::{self, ClassifyError, DEFAULT_TOL};
use lazyq::dynamics::{self, DynamicsError, DEFAULT_STEP};
use lazyq::families::{LazyDiscordantParams, SeparableFamilyParams};
use lazyq::fano::{self, TwoQubitState};
use serde_json::{json, Value};

use statefile::LoadError;

/// Label tolerance for the separable family summary; parameters typed with
/// eight or so significant digits (e.g. alpha = 3.14159265) land on the cases.
const FAMILY_LABEL_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "lazyq", version, about = "Laziness, discord and entanglement of two-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a state file; prints a JSON record with sorted keys.
    Classify {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Local-unitary normal form of a state file.
    NormalForm { path: PathBuf },
    /// Bell-diagonal states.
    #[command(subcommand)]
    Bd(BdCommand),
    /// Generate a witness-family state file. Angles are in radians.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Compare the laziness verdict with entropy rates under random couplings.
    DynamicsCheck {
        path: PathBuf,
        #[arg(long, default_value_t = 20)]
        hamiltonians: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_STEP)]
        step: f64,
    },
}

#[derive(Subcommand)]
enum BdCommand {
    /// Region label of one point (λ1,λ2,λ3).
    Classify {
        #[arg(long, value_parser = parse_lambda, allow_hyphen_values = true)]
        lambda: [f64; 3],
    },
    /// Monte Carlo census of the cube [-1,1]^3 as CSV.
    Census {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Region labels on the plane λ_axis = value as CSV.
    Slice {
        #[arg(long)]
        axis: usize,
        #[arg(long, allow_hyphen_values = true)]
        value: f64,
        #[arg(long, default_value_t = 41)]
        grid: usize,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the state file here; without it the state is printed to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// ¼(I⊗I + y1 I⊗σ1 + l2 σ2⊗σ2 + l3 σ3⊗σ3) with 0 < l2 < l3, y1² + (l2+l3)² ≤ 1.
    LazyDiscordant {
        #[arg(long, allow_hyphen_values = true)]
        y1: f64,
        #[arg(long)]
        l2: f64,
        #[arg(long)]
        l3: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// p|ψ1⟩⟨ψ1|⊗ρ1 + (1−p)|ψ2⟩⟨ψ2|⊗ρ2; alpha, beta in [0, π] radians, a, b in [0, 1].
    Separable {
        #[arg(long)]
        p: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[command(flatten)]
        out: OutArg,
    },
}

fn parse_lambda(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected three comma-separated numbers".into());
    }
    let mut l = [0.0; 3];
    for (slot, part) in l.iter_mut().zip(parts) {
        *slot = part.trim().parse::<f64>().map_err(|e| format!("{part:?}: {e}"))?;
    }
    if l.iter().any(|x| !(x.abs() <= 1.0)) {
        return Err("each component must lie in [-1, 1]".into());
    }
    Ok(l)
}

/// Failure carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn invalid(message: impl Into<String>) -> Self {
        Self { code: 1, message: message.into() }
    }
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
    fn inconsistent(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Parse(m) => Failure::usage(format!("parse error: {m}")),
            LoadError::Invalid(e) => Failure::invalid(format!("invalid state: {e}")),
        }
    }
}

fn load_physical(path: &PathBuf, tol: f64) -> Result<TwoQubitState, Failure> {
    let rho = statefile::load(path)?;
    let phys = fano::validate(&rho, tol);
    phys.into_result().map_err(|e| {
        Failure::invalid(format!(
            "invalid state: {e}\n  min eigenvalue {:.3e}, trace deviation {:.3e}, hermiticity deviation {:.3e}",
            phys.min_eigenvalue, phys.trace_deviation, phys.hermitian_deviation
        ))
    })?;
    Ok(rho)
}

/// Rewrites -0.0 as 0.0 so sign noise never shows up in golden output.
fn clear_negative_zero(v: &mut Value) {
    match v {
        Value::Number(n) if n.as_f64() == Some(0.0) && n.is_f64() => *v = json!(0.0),
        Value::Array(items) => items.iter_mut().for_each(clear_negative_zero),
        Value::Object(map) => map.values_mut().for_each(clear_negative_zero),
        _ => {}
    }
}

fn pretty(v: &Value) -> String {
    let mut v = v.clone();
    clear_negative_zero(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_classify(path: &PathBuf, tol: f64) -> Result<String, Failure> {
    let rho = load_physical(path, tol)?;
    let c = match classify::classify(&rho, tol) {
        Ok(c) => c,
        Err(e @ ClassifyError::RouteDisagreement { .. }) => return Err(Failure::inconsistent(e.to_string())),
        Err(e) => return Err(Failure::invalid(e.to_string())),
    };
    let v = c.verdicts.expect("physical state has verdicts");
    let w = v.witnesses;
    Ok(pretty(&json!({
        "version": lazyq::VERSION,
        "tolerance": tol,
        "physical": c.physical,
        "pure": v.pure,
        "product": v.product,
        "zero_discord_a": v.zero_discord_a,
        "discord": if v.zero_discord_a { "zero" } else { "nonzero" },
        "lazy_a": v.lazy_a,
        "separable": v.separable,
        "schmidt": v.schmidt,
        "discord_direction": v.discord_direction,
        "witnesses": {
            "commutator_norm": w.commutator_norm,
            "parallel_residual": w.parallel_residual,
            "negativity": w.negativity,
            "min_eigenvalue": w.min_eigenvalue,
            "min_pt_eigenvalue": w.min_pt_eigenvalue,
            "product_residual": w.product_residual,
            "dephasing_residual": w.dephasing_residual,
        },
    })))
}

fn cmd_normal_form(path: &PathBuf) -> Result<String, Failure> {
    let rho = load_physical(path, DEFAULT_TOL)?;
    let nf = fano::normal_form(&fano::decompose(&rho));
    Ok(pretty(&json!({
        "version": lazyq::VERSION,
        "x_rot": nf.x_rot,
        "y_rot": nf.y_rot,
        "d": nf.d,
        "sigma": nf.sigma,
        "o_a": nf.o_a.0,
        "o_b": nf.o_b.0,
    })))
}

fn cmd_bd(cmd: &BdCommand) -> Result<String, Failure> {
    match cmd {
        BdCommand::Classify { lambda } => Ok(format!("{}\n", BellDiagPoint::new(*lambda).region(REGION_TOL))),
        BdCommand::Census { samples, seed } => {
            let report = belldiag::census(*samples, *seed).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(report.to_csv(lazyq::VERSION))
        }
        BdCommand::Slice { axis, value, grid } => {
            let s = belldiag::slice(*axis, *value, *grid).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(s.to_csv())
        }
    }
}

fn emit_state(rho: &TwoQubitState, out: &OutArg, summary: Value) -> Result<String, Failure> {
    let text = statefile::to_json(rho);
    match &out.out {
        None => Ok(text),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            let mut summary = summary;
            summary["out"] = json!(path.display().to_string());
            Ok(pretty(&summary))
        }
    }
}

fn cmd_family(cmd: &FamilyCommand) -> Result<String, Failure> {
    match cmd {
        FamilyCommand::LazyDiscordant { y1, l2, l3, out } => {
            let q = LazyDiscordantParams::new(*y1, *l2, *l3).map_err(|e| Failure::invalid(e.to_string()))?;
            let summary = json!({
                "family": "lazy-discordant",
                "params": {"y1": y1, "l2": l2, "l3": l3},
                "spectrum": q.spectrum(),
            });
            emit_state(&q.compose(), out, summary)
        }
        FamilyCommand::Separable { p, alpha, beta, a, b, out } => {
            let s = SeparableFamilyParams::new(*p, *alpha, *beta, *a, *b).map_err(|e| Failure::invalid(e.to_string()))?;
            let summary = json!({
                "family": "separable",
                "params": {"p": p, "alpha": alpha, "beta": beta, "a": a, "b": b},
                "label": s.label(FAMILY_LABEL_TOL).as_str(),
                "label_tolerance": FAMILY_LABEL_TOL,
            });
            emit_state(&s.compose(), out, summary)
        }
    }
}

fn cmd_dynamics(path: &PathBuf, hamiltonians: usize, seed: u64, step: f64) -> Result<String, Failure> {
    let rho = load_physical(path, DEFAULT_TOL)?;
    let check = dynamics::laziness_dynamics_check(&rho, hamiltonians, seed, step).map_err(|e| match e {
        DynamicsError::Step { .. } => Failure::usage(e.to_string()),
        other => Failure::invalid(other.to_string()),
    })?;
    let rates: Vec<Value> = check
        .rates
        .iter()
        .map(|r| json!({"seed": r.seed, "rate": r.rate, "caution": r.caution}))
        .collect();
    let report = pretty(&json!({
        "version": lazyq::VERSION,
        "hamiltonians": hamiltonians,
        "seed": seed,
        "step": step,
        "lazy": check.lazy,
        "commutator_norm": check.commutator_norm,
        "max_abs_rate": check.max_abs_rate,
        "caution": check.rates.iter().any(|r| r.caution),
        "gray_zone": check.gray_zone,
        "consistent": check.consistent,
        "rates": rates,
    }));
    if check.consistent {
        Ok(report)
    } else {
        print!("{report}");
        Err(Failure::inconsistent(format!(
            "classifier says lazy = {} but max |rate| = {:.3e} (commutator norm {:.3e}{})",
            check.lazy,
            check.max_abs_rate,
            check.commutator_norm,
            if check.gray_zone { ", inside the gray zone" } else { "" }
        )))
    }
}

fn main() -> ExitCode {
    // A panic is an internal failure; keep it inside the exit-code contract.
    let default_hook = std::panic::take_hook();
    std::panic::set_hook(Box::new(move |info| {
        default_hook(info);
        std::process::exit(3);
    }));
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { path, tol } => cmd_classify(path, *tol),
        Command::NormalForm { path } => cmd_normal_form(path),
        Command::Bd(cmd) => cmd_bd(cmd),
        Command::Family(cmd) => cmd_family(cmd),
        Command::DynamicsCheck { path, hamiltonians, seed, step } => cmd_dynamics(path, *hamiltonians, *seed, *step),
    };
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("lazyq: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
