//! `slicefiber`: JSON in, JSON or CSV out.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error.

mod commands;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use slicefiber::verify::{OutputFormat, RunConfig};

#[derive(Debug, Parser)]
#[command(
    name = "slicefiber",
    version,
    about = "Slice regular functions on quaternionic balls"
)]
pub struct Cli {
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = RunConfig::default().seed)]
    pub seed: u64,
    /// Sample count for random suites and sampled slices.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Boundary samples for Schwarz quadrature (power of two, at least 16).
    #[arg(long = "quadrature-n", global = true, default_value_t = RunConfig::default().quadrature_n)]
    pub quadrature_n: usize,
    /// Tolerance override, also accepted as `--tol.NAME=VALUE`.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE", value_parser = parse_tol)]
    pub tol: Vec<(String, f64)>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// JSON input file; stdin when absent or `-`.
#[derive(Debug, Args)]
pub struct Input {
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a series at a point: series JSON, point given by --at.
    Eval {
        #[arg(long, value_parser = parse_json::<slicefiber::Quaternion>)]
        at: slicefiber::Quaternion,
        #[command(flatten)]
        input: Input,
    },
    /// {series, frame} -> slice pair (f1, f2).
    Split(Input),
    /// {pair, points} -> reassembled series and extension values.
    Extend(Input),
    /// {series, i, target, x, y} -> value from two samples on C(i).
    Representation(Input),
    /// {series, frame} -> real components D1..D4 of the slice restriction.
    Dcomp(Input),
    /// {f, g} -> star product.
    Star(Input),
    /// {f, g, frame} -> bullet product.
    Bullet(Input),
    /// series -> derivative.
    Derivative(Input),
    /// {series, frame, points} -> both round-trip residuals.
    Roundtrip(Input),
    /// {series, frame, z} -> residuals of the two slice identities.
    SliceIdentities(Input),
    /// {u, points, frame?} -> rotated points and frame.
    Rotate(Input),
    /// {u, path, other?} -> harmonic conjugate along a path.
    Conjugate(Input),
    /// {trace, z, lambda?} -> complex Schwarz integral.
    Schwarz(Input),
    /// {a, c, frame, nmax, at?, lambda1?, lambda2?} -> quaternionic Schwarz series.
    SchwarzQ(Input),
    /// Operations on the harmonic-class bundle.
    #[command(subcommand)]
    Bundle(BundleCommand),
    /// {polynomial, frame} -> component zero data.
    Zeros(Input),
    /// {zero_data, degree, strict?} -> polynomial.
    Reconstruct(Input),
    /// polynomial -> whether its vector parts span R^3.
    Psrb(Input),
    /// {polynomial, slice} -> zeros on one slice.
    SliceZeros(Input),
    /// list of planar points -> hull vertices.
    Hull(Input),
    /// {polynomial, slices?} -> hulls on sampled slices.
    Skull(Input),
    /// {polynomial, frame} -> Gauss-Lucas containment report.
    GaussLucas(Input),
    /// {polynomial, frame, slices?} -> both routes of the hull morphism.
    Gamma(Input),
    /// {f, g, frame1, frame2, c1?, c2?} -> bullet-factor uniqueness check.
    Uniqueness(Input),
    /// complex coefficients, ascending -> roots with multiplicities.
    Roots(Input),
    /// Run every verification suite.
    Verify,
}

#[derive(Debug, Subcommand)]
pub enum BundleCommand {
    /// total element -> base class.
    Project(Input),
    /// {frame, class} -> total element.
    Section(Input),
    /// {u, class, frame} -> total element.
    Trivialize(Input),
    /// {u, v, class, frame} -> transition residual.
    Compat(Input),
    /// {x, y} -> sum of total elements.
    Add(Input),
    /// total element -> x-derivative.
    Deriv(Input),
    /// {u, x} -> rotated total element.
    Rotate(Input),
    /// {class, frames} -> sections over sampled frames.
    Fiber(Input),
    /// {u, x, points} -> projection/rotation residual.
    RotationIdentity(Input),
}

pub enum Failure {
    Verification(String),
    Parse(String),
    Domain(slicefiber::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<slicefiber::Error> for Failure {
    fn from(e: slicefiber::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {s}"))?;
    let value: f64 = value
        .parse()
        .map_err(|e| format!("tolerance {name}: {e}"))?;
    Ok((name.to_string(), value))
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, String> {
    serde_json::from_str(s).map_err(|e| e.to_string())
}

/// Turns `--tol.NAME=V` and `--tol.NAME V` into `--tol NAME=V`.
fn rewrite_tolerance_flags(args: impl Iterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut args = args.peekable();
    while let Some(arg) = args.next() {
        match arg.strip_prefix("--tol.") {
            Some(rest) => {
                out.push("--tol".to_string());
                if rest.contains('=') {
                    out.push(rest.to_string());
                } else {
                    let value = args.next().unwrap_or_default();
                    out.push(format!("{rest}={value}"));
                }
            }
            None => out.push(arg),
        }
    }
    out
}

impl Cli {
    pub fn run_config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            samples: self.samples,
            quadrature_n: self.quadrature_n,
            tolerances: self.tol.iter().cloned().collect::<BTreeMap<_, _>>(),
            output_format: match self.format {
                Format::Json => OutputFormat::Json,
                Format::Csv => OutputFormat::Csv,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(rewrite_tolerance_flags(std::env::args())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Verification(out) => print!("{out}"),
                Failure::Parse(msg) => eprintln!("parse error: {msg}"),
                Failure::Domain(e) => eprintln!("domain error: {e}"),
            }
            ExitCode::from(failure.code())
        }
    }
}
