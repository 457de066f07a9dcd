// Copyright 2026 The torus-weyl Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end.
//!
//! Every command writes its artifact (JSON) to `-o FILE` or stdout and its
//! report (also JSON) to `--report FILE` or stderr. Files that carry `θ` and
//! `N` are authoritative; flags that contradict them are dimension errors.
//!
//! Exit codes: 0 success, 1 I/O failure or failed selftest, 2 parse or usage
//! error, 3 dimension error, 4 domain-validation error.

use crate::acceptance;
use crate::dequantize::dequantize;
use crate::error::Error;
use crate::io::{lattice_csv, marginals_csv, to_json_string, JsonArtifact};
use crate::moyal::{evolve_operator, evolve_symbol, HamiltonianSystem};
use crate::quantize::{quantize_fourier, quantize_sampled};
use crate::rep::{Operator, Representation, State};
use crate::symbols::{sample, SampledSymbol, TrigPolynomial};
use crate::wigner::{marginal_p, marginal_x, symmetry_residuals, wigner_state};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DIMENSION: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "torus-weyl",
    version,
    about = "Weyl quantization on the torus phase space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Quantize a symbol into an N×N operator.
    Quantize(QuantizeArgs),
    /// Canonical symbol N·W̃(A) of an operator.
    Dequantize(DequantizeArgs),
    /// Wigner table of one state (ψ = φ) or of a state pair.
    Wigner(WignerArgs),
    /// Evolve a symbol under a real Hamiltonian and compare with exact operator dynamics.
    Evolve(EvolveArgs),
    /// Run the randomized acceptance checks.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub theta1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub theta2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Artifact destination (default: stdout).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Report destination (default: stderr).
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Trigonometric polynomial, `Σ α̂(n) T(n)`.
    Fourier,
    /// Lattice sampling, matrix-element formula.
    Sampled,
    /// Trigonometric polynomial through both routes.
    Both,
}

#[derive(Debug, Args)]
pub struct QuantizeArgs {
    /// TrigPolynomial JSON (fourier, both) or SampledSymbol JSON (sampled).
    pub symbol: PathBuf,
    #[command(flatten)]
    pub theta: ThetaArgs,
    /// Hilbert space dimension; required unless the input carries it.
    #[arg(short = 'n', long = "n", alias = "N")]
    pub dim: Option<usize>,
    #[arg(long, value_enum, default_value_t = Route::Fourier)]
    pub route: Route,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DequantizeArgs {
    /// Operator JSON.
    pub operator: PathBuf,
    #[command(flatten)]
    pub theta: ThetaArgs,
    /// Also write the symbol as a lattice CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct WignerArgs {
    /// State JSON for ψ.
    pub psi: PathBuf,
    /// State JSON for φ (default: ψ).
    pub phi: Option<PathBuf>,
    #[command(flatten)]
    pub theta: ThetaArgs,
    /// Also write the table as a lattice CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Also write both marginals as CSV.
    #[arg(long)]
    pub marginals_csv: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EvolveArgs {
    /// Real Hamiltonian, SampledSymbol JSON.
    pub hamiltonian: PathBuf,
    /// Initial symbol, SampledSymbol JSON.
    pub symbol: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, default_value_t = 1000)]
    pub steps: usize,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 20_260_101)]
    pub seed: u64,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::NonFiniteTheta(..) | Error::NonFinite(..) => EXIT_PARSE,
        Error::ZeroDimension
        | Error::DimensionMismatch { .. }
        | Error::GridShape { .. }
        | Error::RepresentationMismatch
        | Error::IndexOutOfRange { .. }
        | Error::NonSquare(..) => EXIT_DIMENSION,
        Error::NonRealHamiltonian(_) | Error::ZeroSteps => EXIT_DOMAIN,
        Error::Io(_) => EXIT_FAILURE,
    }
}

fn fail(code: i32, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

/// Runs a parsed command.
pub fn execute(command: &Command) -> CliResult<i32> {
    match command {
        Command::Quantize(a) => quantize_cmd(a),
        Command::Dequantize(a) => dequantize_cmd(a),
        Command::Wigner(a) => wigner_cmd(a),
        Command::Evolve(a) => evolve_cmd(a),
        Command::Selftest(a) => Ok(selftest_cmd(a)),
    }
}

fn read<T: JsonArtifact>(path: &Path) -> CliResult<T> {
    T::read(path).map_err(|e| {
        let code = exit_code(&e);
        fail(code, format!("{}: {e}", path.display()))
    })
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| fail(EXIT_FAILURE, format!("{}: {e}", path.display())))
}

fn emit(out: &OutputArgs, artifact: &str, report: Option<&Value>) -> CliResult<()> {
    match &out.output {
        Some(path) => write_text(path, artifact)?,
        None => print!("{artifact}"),
    }
    if let Some(report) = report {
        let text = to_json_string(report);
        match &out.report {
            Some(path) => write_text(path, &text)?,
            None => eprint!("{text}"),
        }
    }
    Ok(())
}

fn value_of<T: JsonArtifact>(x: &T) -> Value {
    serde_json::from_str(&x.to_json()).expect("artifacts serialize to valid JSON")
}

fn pair(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Representation from flags alone, `θ` defaulting to `(0, 0)`.
fn rep_from_flags(theta: &ThetaArgs, dim: usize) -> CliResult<Representation> {
    Ok(Representation::new(
        theta.theta1.unwrap_or(0.0),
        theta.theta2.unwrap_or(0.0),
        dim,
    )?)
}

/// Flags must agree with a representation read from a file.
fn check_flags(theta: &ThetaArgs, dim: Option<usize>, rep: &Representation) -> CliResult<()> {
    if let Some(n) = dim {
        if n != rep.dim() {
            return Err(fail(
                EXIT_DIMENSION,
                format!("--n {n} contradicts N = {} in the input file", rep.dim()),
            ));
        }
    }
    let flagged = Representation::new(
        theta.theta1.unwrap_or(rep.theta1()),
        theta.theta2.unwrap_or(rep.theta2()),
        rep.dim(),
    )?;
    if flagged != *rep {
        return Err(fail(
            EXIT_DIMENSION,
            format!(
                "--theta1/--theta2 contradict θ = ({}, {}) in the input file",
                rep.theta1(),
                rep.theta2()
            ),
        ));
    }
    Ok(())
}

fn quantize_cmd(a: &QuantizeArgs) -> CliResult<i32> {
    match a.route {
        Route::Sampled => {
            let sym: SampledSymbol = read(&a.symbol)?;
            check_flags(&a.theta, a.dim, sym.rep())?;
            emit(&a.out, &quantize_sampled(&sym).to_json(), None)?;
        }
        Route::Fourier | Route::Both => {
            let tp: TrigPolynomial = read(&a.symbol)?;
            let dim = a.dim.ok_or_else(|| {
                fail(EXIT_PARSE, "--n is required for a trigonometric polynomial")
            })?;
            let rep = rep_from_flags(&a.theta, dim)?;
            let fourier = quantize_fourier(&tp, &rep);
            if a.route == Route::Fourier {
                emit(&a.out, &fourier.to_json(), None)?;
            } else {
                let sampled = quantize_sampled(&sample(&tp, &rep));
                let gap = fourier.max_abs_diff(&sampled);
                let artifact = json!({
                    "fourier": value_of(&fourier),
                    "sampled": value_of(&sampled),
                    "max_discrepancy": gap,
                });
                emit(
                    &a.out,
                    &to_json_string(&artifact),
                    Some(&json!({ "max_discrepancy": gap })),
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn dequantize_cmd(a: &DequantizeArgs) -> CliResult<i32> {
    let op: Operator = read(&a.operator)?;
    let rep = rep_from_flags(&a.theta, op.dim())?;
    let sym = dequantize(&rep, &op)?;
    if let Some(path) = &a.csv {
        write_text(path, &lattice_csv(&rep, sym.grid()))?;
    }
    emit(&a.out, &sym.to_json(), None)?;
    Ok(EXIT_OK)
}

fn wigner_cmd(a: &WignerArgs) -> CliResult<i32> {
    let psi: State = read(&a.psi)?;
    let phi: State = match &a.phi {
        Some(path) => read(path)?,
        None => psi.clone(),
    };
    if phi.dim() != psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: phi.dim(),
        }
        .into());
    }
    let rep = rep_from_flags(&a.theta, psi.dim())?;
    let table = wigner_state(&rep, &psi, &phi)?;
    if let Some(path) = &a.csv {
        write_text(path, &lattice_csv(&rep, table.grid()))?;
    }
    if let Some(path) = &a.marginals_csv {
        write_text(path, &marginals_csv(&table))?;
    }
    let summary = json!({
        "total_mass": pair(table.total_mass()),
        "inner_product": pair(psi.inner(&phi)),
        "marginal_x": marginal_x(&table).into_iter().map(pair).collect::<Vec<_>>(),
        "marginal_p": marginal_p(&table).into_iter().map(pair).collect::<Vec<_>>(),
        "symmetry_residuals": symmetry_residuals(table.grid()),
    });
    emit(&a.out, &table.to_json(), Some(&summary))?;
    Ok(EXIT_OK)
}

fn evolve_cmd(a: &EvolveArgs) -> CliResult<i32> {
    if !a.t.is_finite() {
        return Err(fail(
            EXIT_DOMAIN,
            format!("--t must be finite, got {}", a.t),
        ));
    }
    let h: SampledSymbol = read(&a.hamiltonian)?;
    let a0: SampledSymbol = read(&a.symbol)?;
    if h.rep() != a0.rep() {
        return Err(fail(
            EXIT_DIMENSION,
            "Hamiltonian and symbol carry different (θ, N)".to_string(),
        ));
    }
    check_flags(&a.theta, None, a0.rep())?;
    let sys = HamiltonianSystem::new(h)?;
    let evolved = evolve_symbol(&sys, &a0, a.t, a.steps)?;
    let exact = evolve_operator(&sys, &quantize_sampled(&a0), a.t)?;
    let defect = quantize_sampled(&evolved).max_abs_diff(&exact);
    let report = json!({ "t": a.t, "steps": a.steps, "defect": defect });
    emit(&a.out, &evolved.to_json(), Some(&report))?;
    Ok(EXIT_OK)
}

fn selftest_cmd(a: &SelftestArgs) -> i32 {
    println!("selftest (seed {})", a.seed);
    let results = acceptance::run(a.seed);
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
