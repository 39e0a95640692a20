//! Command-line front end for the `fracreep` toolkit.
//!
//! Exit status: 0 on success, 1 for usage, parse or domain errors, 2 for
//! internal failures (I/O on outputs, non-finite values during a solve).

pub mod problem_file;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use fracreep::analysis::{self, contraction_check, lipschitz_warning};
use fracreep::creep::{classical_creep, fractional_creep, Material};
use fracreep::expr::ScalarFn;
use fracreep::format::sig12;
use fracreep::mlf::{mittag_leffler, MlArgs, DEFAULT_TOL};
use fracreep::solver::{picard_iterate, solve_delay, ProblemSpec};
use fracreep::trajectory::UniformGrid;
use serde::Serialize;
use thiserror::Error;

use crate::problem_file::{parse_problem, ProblemError};

#[derive(Debug, Parser)]
#[command(name = "fracreep", version, about = "Fractional Voigt creep toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mittag-Leffler function evaluation.
    #[command(subcommand)]
    Mlf(MlfCommand),
    /// Creep function tables.
    #[command(subcommand)]
    Creep(CreepCommand),
    /// Solve a delay problem and write the trajectory as CSV.
    Solve(SolveArgs),
    /// Run successive approximations and report contraction ratios.
    Picard(PicardArgs),
    /// Evaluate the contraction condition and derived constants.
    Check(CheckArgs),
    /// Compare solutions under two histories against the dependence bound.
    VerifyDependence(DependenceArgs),
    /// Perturb the forcing and compare against the Ulam-Hyers bound.
    VerifyUlam(UlamArgs),
}

#[derive(Debug, Subcommand)]
enum MlfCommand {
    /// Evaluate E_{alpha,beta}(z).
    Eval(MlfEvalArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct MlfEvalArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    z: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum CreepCommand {
    /// Tabulate fractional and classical creep functions (CSV t,k_alpha,k_classical).
    Table(CreepTableArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct CreepTableArgs {
    #[arg(long)]
    modulus: f64,
    #[arg(long)]
    viscosity: f64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    horizon: f64,
    /// Sample spacing; defaults to horizon/100.
    #[arg(long)]
    step: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ProblemArgs {
    /// JSON problem file.
    problem: PathBuf,
    /// Grid step; overrides the file's grid_step (default horizon/1024).
    #[arg(long)]
    step: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SolveArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct PicardArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long, default_value_t = 20)]
    iterations: usize,
    /// Write the last iterate as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    problem: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct DependenceArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    /// First history (expression in t); defaults to the file's history.
    #[arg(long)]
    history1: Option<String>,
    /// Second history (expression in t).
    #[arg(long)]
    history2: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct UlamArgs {
    #[command(flatten)]
    problem: ProblemArgs,
    #[arg(long)]
    epsilon: f64,
    /// Forcing perturbation h(t) with sup |h| <= epsilon.
    #[arg(long)]
    perturbation: String,
    #[arg(long)]
    json: bool,
}

/// A problem with the command line itself.
#[derive(Debug, Error)]
#[error("{flag}: {message}")]
pub struct FlagError {
    pub flag: &'static str,
    pub message: String,
}

fn flag_error(flag: &'static str, message: impl Into<String>) -> anyhow::Error {
    FlagError {
        flag,
        message: message.into(),
    }
    .into()
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// status.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e:#}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    for cause in e.chain() {
        if cause.is::<FlagError>() || cause.is::<ProblemError>() {
            return 1;
        }
        if let Some(core) = cause.downcast_ref::<fracreep::Error>() {
            return match core {
                fracreep::Error::NonFinite { .. } => 2,
                _ => 1,
            };
        }
    }
    2
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    match command {
        Command::Mlf(MlfCommand::Eval(a)) => mlf_eval(a, stdout),
        Command::Creep(CreepCommand::Table(a)) => creep_table(a, stdout),
        Command::Solve(a) => solve(a, stdout, stderr),
        Command::Picard(a) => picard(a, stdout),
        Command::Check(a) => check(a, stdout, stderr),
        Command::VerifyDependence(a) => verify_dependence(a, stdout),
        Command::VerifyUlam(a) => verify_ulam(a, stdout),
    }
}

fn emit(out: Option<&PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing --out {}", path.display())),
        None => stdout.write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn print_json<T: Serialize>(value: &T, stdout: &mut dyn Write) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value).context("serialising report")?;
    s.push('\n');
    emit(None, &s, stdout)
}

fn mlf_eval(a: MlfEvalArgs, stdout: &mut dyn Write) -> Result<()> {
    if !(a.tol.is_finite() && a.tol > 0.0) {
        return Err(flag_error("--tol", format!("must be positive, got {}", a.tol)));
    }
    let v = mittag_leffler(&MlArgs::new(a.alpha, a.beta, a.z).with_tol(a.tol))
        .with_context(|| format!("mlf eval --alpha {} --beta {} --z {}", a.alpha, a.beta, a.z))?;
    if a.json {
        print_json(&v, stdout)
    } else {
        emit(None, &format!("{}\n", sig12(v.value)), stdout)
    }
}

fn creep_table(a: CreepTableArgs, stdout: &mut dyn Write) -> Result<()> {
    let material =
        Material::new(a.modulus, a.viscosity, a.alpha).context("creep table --modulus/--viscosity/--alpha")?;
    let grid = match a.step {
        Some(h) => UniformGrid::with_step(a.horizon, h).context("creep table --step/--horizon")?,
        None => UniformGrid::new(a.horizon, 100).context("creep table --horizon")?,
    };
    let mut csv = String::from("t,k_alpha,k_classical\n");
    for t in grid.times() {
        let ka = fractional_creep(&material, t)?;
        let kc = classical_creep(&material, t)?;
        let _ = writeln!(csv, "{},{},{}", sig12(t), sig12(ka), sig12(kc));
    }
    emit(a.out.as_ref(), &csv, stdout)
}

fn load(args: &ProblemArgs) -> Result<(ProblemSpec, UniformGrid)> {
    let spec = parse_problem(&args.problem)?;
    let grid = match args.step {
        Some(h) => UniformGrid::with_step(spec.horizon(), h).map_err(|e| flag_error("--step", e.to_string()))?,
        None => spec.default_grid(),
    };
    Ok((spec, grid))
}

fn expr_flag(flag: &'static str, src: &str) -> Result<ScalarFn> {
    ScalarFn::parse(src, 't').map_err(|e| flag_error(flag, e.to_string()))
}

fn solve(a: SolveArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let (spec, grid) = load(&a.problem)?;
    let sol = solve_delay(&spec, &grid)?;
    for w in &sol.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    emit(a.out.as_ref(), &sol.trajectory.to_csv(), stdout)
}

#[derive(Serialize)]
struct PicardSummary<'a> {
    contraction_bound: Option<f64>,
    increments: &'a [f64],
    ratios: &'a [f64],
}

fn picard(a: PicardArgs, stdout: &mut dyn Write) -> Result<()> {
    let (spec, grid) = load(&a.problem)?;
    let run = picard_iterate(&spec, &grid, a.iterations).map_err(|e| flag_error("--iterations", e.to_string()))?;
    if let Some(path) = &a.out {
        let last = run.iterates.last().expect("at least one iterate");
        emit(Some(path), &last.to_csv(), stdout)?;
    }
    if a.json {
        return print_json(
            &PicardSummary {
                contraction_bound: run.contraction_bound,
                increments: &run.increments,
                ratios: &run.ratios,
            },
            stdout,
        );
    }
    let mut s = String::new();
    if let Some(b) = run.contraction_bound {
        let _ = writeln!(s, "contraction_bound = {}", sig12(b));
    }
    let _ = writeln!(s, "iteration,increment,ratio");
    for (m, inc) in run.increments.iter().enumerate() {
        let ratio = if m == 0 { String::new() } else { sig12(run.ratios[m - 1]) };
        let _ = writeln!(s, "{},{},{}", m + 1, sig12(*inc), ratio);
    }
    emit(None, &s, stdout)
}

fn check(a: CheckArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let spec = parse_problem(&a.problem)?;
    for w in spec.warnings() {
        let _ = writeln!(stderr, "warning: {w}");
    }
    // sanity check of the supplied constants on a generous state range
    let psi_max = (0..=256)
        .map(|k| spec.history().eval(-spec.max_delay() * k as f64 / 256.0).abs())
        .fold(0.0, f64::max);
    let range = 1.0 + 2.0 * psi_max;
    for (j, t) in spec.terms().iter().enumerate() {
        if let Some(l) = t.lipschitz {
            if let Some(w) = lipschitz_warning(|x| t.g.eval(x), l, -range, range, 2001)? {
                let _ = writeln!(stderr, "warning: terms[{j}].g: {w}");
            }
        }
    }
    let report = contraction_check(&spec)?;
    if a.json {
        print_json(&report, stdout)
    } else {
        emit(None, &report.to_text(), stdout)
    }
}

fn verify_dependence(a: DependenceArgs, stdout: &mut dyn Write) -> Result<()> {
    let (spec, grid) = load(&a.problem)?;
    let psi1 = match &a.history1 {
        Some(src) => expr_flag("--history1", src)?,
        None => spec.history().clone(),
    };
    let psi2 = expr_flag("--history2", &a.history2)?;
    spec.with_history(psi1.clone()).map_err(|e| flag_error("--history1", e.to_string()))?;
    spec.with_history(psi2.clone()).map_err(|e| flag_error("--history2", e.to_string()))?;
    let r = analysis::verify_dependence(&spec, &psi1, &psi2, &grid)?;
    if a.json {
        return print_json(&r, stdout);
    }
    let mut s = String::new();
    let _ = writeln!(s, "measured         = {}", sig12(r.measured));
    let _ = writeln!(s, "history_distance = {}", sig12(r.history_distance));
    let _ = writeln!(s, "bound            = {}", sig12(r.bound));
    let _ = writeln!(s, "slack            = {}", sig12(r.slack));
    let _ = writeln!(s, "pass             = {}", r.pass);
    emit(None, &s, stdout)
}

fn verify_ulam(a: UlamArgs, stdout: &mut dyn Write) -> Result<()> {
    let (spec, grid) = load(&a.problem)?;
    let h = expr_flag("--perturbation", &a.perturbation)?;
    if !(a.epsilon.is_finite() && a.epsilon >= 0.0) {
        return Err(flag_error("--epsilon", format!("must be non-negative, got {}", a.epsilon)));
    }
    let r = analysis::verify_ulam(&spec, a.epsilon, &h, &grid).map_err(|e| match e {
        fracreep::Error::Input(m) => flag_error("--perturbation", m),
        other => other.into(),
    })?;
    if a.json {
        return print_json(&r, stdout);
    }
    let mut s = String::new();
    let _ = writeln!(s, "epsilon      = {}", sig12(r.epsilon));
    let _ = writeln!(s, "ulam_k       = {}", sig12(r.ulam_k));
    let _ = writeln!(s, "measured     = {}", sig12(r.measured));
    let _ = writeln!(s, "bound        = {}", sig12(r.bound));
    let _ = writeln!(s, "defect       = {}", sig12(r.defect));
    let _ = writeln!(s, "defect_bound = {}", sig12(r.defect_bound));
    let _ = writeln!(s, "slack        = {}", sig12(r.slack));
    let _ = writeln!(s, "pass         = {}", r.pass && r.defect_pass);
    emit(None, &s, stdout)
}
