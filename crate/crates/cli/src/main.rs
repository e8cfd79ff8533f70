//! `alia`: evaluate functions, run verification suites, solve for τ and
//! emit tables.

mod scalar;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use alia_core::elliptic::{jacobi_w, modular_lambda, mu, tau_from_r, wp, wp_prime, Lattice};
use alia_core::intertwiner::omega_det_closed;
use alia_core::report::VerificationReport;
use alia_core::sampling::Sampler;
use alia_core::suites::{fmt_c64, run_suite, SuiteConfig, DEFAULT_TOL, SAMPLE_RADIUS, SUITES};
use alia_core::theta::{theta_general, theta_jacobi, ModularParam};

const USAGE_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "alia", version, about = "Automorphic Lie algebras on complex tori: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one function value.
    Eval(EvalArgs),
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// Print the modulus τ of the curve with parameters r₁, r₂, r₃.
    TauSolve(TauSolveArgs),
    /// Write sampled function values as CSV.
    Table(TableArgs),
    /// Re-emit a saved JSON report, exiting 1 if any case fails.
    Report(ReportArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Function {
    /// Jacobi theta θ_j(z|τ), j = --index.
    Theta,
    /// θ_{a,b}(z|τ) with --a, --b.
    ThetaGeneral,
    /// μ_i(z), i = --index.
    Mu,
    /// ℘(z) for the lattice ℤ + τℤ.
    Wp,
    /// ℘′(z) for the lattice ℤ + τℤ.
    WpPrime,
    /// w_i(z) built from Jacobi elliptic functions, i = --index.
    JacobiW,
    /// det Ω(z) in closed form.
    OmegaDet,
}

#[derive(Args, Debug)]
struct FunctionArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    /// Modulus, e.g. `i`, `2i`, `0.3+0.9i`.
    #[arg(long, value_parser = parse_tau, allow_hyphen_values = true)]
    tau: ModularParam,
    /// Index j or i where the function needs one.
    #[arg(long, default_value_t = 1)]
    index: usize,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    b: f64,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    f: FunctionArgs,
    #[arg(long, value_parser = scalar::parse_complex, allow_hyphen_values = true)]
    z: Complex64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// One of theta, omega, generators, qring, zcr, holod, uglov, real, all.
    #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
    suite: String,
    #[arg(long, value_parser = parse_tau, default_value = "i", allow_hyphen_values = true)]
    tau: ModularParam,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    samples: u64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Tolerance; defaults to $ALIA_TOL, else 1e-9.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TauSolveArgs {
    /// Comma-separated r₁,r₂,r₃.
    #[arg(long, value_parser = scalar::parse_triple, allow_hyphen_values = true)]
    r: [Complex64; 3],
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    f: FunctionArgs,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReportArgs {
    /// A JSON report written by `verify`.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn parse_tau(s: &str) -> Result<ModularParam, String> {
    let t = scalar::parse_complex(s)?;
    ModularParam::new(t).map_err(|e| format!("tau = {s}: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    Failure::Runtime(e.to_string())
}

fn run(cmd: Command) -> Result<ExitCode, Failure> {
    match cmd {
        Command::Eval(a) => {
            check_index(&a.f)?;
            let v = evaluate(&a.f, a.z)
                .map_err(|e| runtime(format!("{e} (z = {}, tau = {})", fmt_c64(a.z), fmt_c64(a.f.tau.tau()))))?;
            println!("{}", fmt_c64(v));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(a) => verify(a),
        Command::TauSolve(a) => {
            let [r1, r2, r3] = a.r;
            let p = tau_from_r(r1, r2, r3)
                .map_err(|e| runtime(format!("{e} (r = {}, {}, {})", fmt_c64(r1), fmt_c64(r2), fmt_c64(r3))))?;
            println!("{}", fmt_c64(p.tau()));
            eprintln!("lambda(tau) = {}", fmt_c64(modular_lambda(&p)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table(a) => {
            check_index(&a.f)?;
            let csv = table(&a)?;
            emit(&csv, a.output.as_ref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report(a) => {
            let text =
                std::fs::read_to_string(&a.input).map_err(|e| Failure::Usage(format!("{}: {e}", a.input.display())))?;
            let rep = VerificationReport::from_json(&text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", a.input.display())))?;
            emit(&render(&rep, a.format), None)?;
            Ok(exit_for(&rep))
        }
    }
}

fn check_index(f: &FunctionArgs) -> Result<(), Failure> {
    let max = match f.function {
        Function::Theta => 4,
        Function::Mu | Function::JacobiW => 3,
        _ => return Ok(()),
    };
    if (1..=max).contains(&f.index) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--index {} out of range 1..={max} for {:?}", f.index, f.function)))
    }
}

fn evaluate(f: &FunctionArgs, z: Complex64) -> alia_core::Result<Complex64> {
    let tau = &f.tau;
    match f.function {
        Function::Theta => theta_jacobi(f.index, z, tau),
        Function::ThetaGeneral => theta_general(f.a, f.b, z, tau),
        Function::Mu => mu(f.index, z, tau),
        Function::Wp => wp(z, &Lattice::unit(tau.tau())?),
        Function::WpPrime => wp_prime(z, &Lattice::unit(tau.tau())?),
        Function::JacobiW => jacobi_w(f.index, z, tau),
        Function::OmegaDet => omega_det_closed(z, tau),
    }
}

fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("ALIA_TOL") {
            Ok(s) => {
                s.trim().parse::<f64>().map_err(|_| Failure::Usage(format!("ALIA_TOL = `{s}` is not a number")))?
            }
            Err(_) => DEFAULT_TOL,
        },
    };
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(Failure::Usage(format!("tolerance must be positive and finite, got {tol}")))
    }
}

fn verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    let tol = tolerance(a.tol)?;
    let samples = usize::try_from(a.samples).map_err(|_| Failure::Usage("--samples too large".into()))?;
    let cfg = SuiteConfig::new(a.tau, samples, a.seed, tol);
    let rep = run_suite(&a.suite, &cfg).map_err(|e| Failure::Usage(e.to_string()))?;
    emit(&render(&rep, a.format), a.output.as_ref())?;
    for c in rep.failures() {
        let detail = c.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default();
        eprintln!("FAIL {} (residual {:e}, tol {:e}){detail}", c.name, c.max_abs_residual, c.tol);
    }
    Ok(exit_for(&rep))
}

fn render(rep: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => rep.to_json() + "\n",
        Format::Csv => rep.to_csv(),
    }
}

fn exit_for(rep: &VerificationReport) -> ExitCode {
    if rep.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| runtime(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn table(a: &TableArgs) -> Result<String, Failure> {
    let t = a.f.tau.tau();
    let half = Lattice::unit(t).map_err(runtime)?.half();
    let mut rng = Sampler::new(a.seed);
    let mut out = String::from("z_re,z_im,value_re,value_im\n");
    for _ in 0..a.samples {
        let z = rng.avoiding(t, &half, &[], SAMPLE_RADIUS);
        let v = evaluate(&a.f, z).map_err(|e| runtime(format!("{e} (z = {})", fmt_c64(z))))?;
        let _ = writeln!(out, "{:?},{:?},{:?},{:?}", z.re, z.im, v.re, v.im);
    }
    Ok(out)
}
