//! The `stewart-alhazen` command line.
//!
//! Every subcommand prints one JSON document on stdout. Exit codes: 0 on
//! success, 1 when the mathematics is degenerate (the JSON is then an error
//! object), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::diophantine::search_biquadratic;
use crate::error::Error;
use crate::mirror::{solve_mirror, stewart_scenario, MirrorScenario, RatPoint};
use crate::numerics::Tolerance;
use crate::rational::{parse_rational_or_decimal, Rational};
use crate::stewart::analyze;
use crate::svg::render_svg;

#[derive(Debug, Parser)]
#[command(name = "stewart-alhazen", version, about = "Stewart quartics and the circular mirror")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factorization, irreducibility and constructibility of X^4 - rX - 1.
    StewartAnalyze {
        #[arg(short = 'r', allow_hyphen_values = true, value_parser = nonzero_rational)]
        r: Rational,
    },
    /// Reflection points on a circular mirror.
    MirrorSolve {
        #[command(flatten)]
        scene: SceneArgs,
        /// Residual tolerance for the roots of the quartic.
        #[arg(long, value_parser = positive_float)]
        tol: Option<f64>,
    },
    /// The mirror scenario whose quartic is a multiple of X^4 - rX - 1.
    MirrorEmbed {
        #[arg(short = 'r', allow_hyphen_values = true, value_parser = nonzero_rational)]
        r: Rational,
    },
    /// Exhaustive search for x^4 + 4y^4 = z^2 with 1 <= x, y <= bound.
    DiophSearch {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        bound: u64,
    },
    /// Solve a scenario and write an SVG figure.
    Plot {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Debug, Args)]
struct SceneArgs {
    /// Point A as x,y (rationals or decimals).
    #[arg(long = "a", allow_hyphen_values = true, value_parser = parse_point,
          required_unless_present = "scenario")]
    a: Option<RatPoint>,
    #[arg(long = "b", allow_hyphen_values = true, value_parser = parse_point,
          required_unless_present = "scenario")]
    b: Option<RatPoint>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    center: Option<RatPoint>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational_arg)]
    radius: Option<Rational>,
    /// Scenario JSON file, instead of the individual flags.
    #[arg(long, conflicts_with_all = ["a", "b", "center", "radius"])]
    scenario: Option<PathBuf>,
}

impl SceneArgs {
    fn build(&self) -> Result<MirrorScenario, Failure> {
        if let Some(path) = &self.scenario {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let scenario: MirrorScenario = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("bad scenario file {}: {e}", path.display())))?;
            scenario.validate()?;
            return Ok(scenario);
        }
        let (Some(a), Some(b)) = (self.a.clone(), self.b.clone()) else {
            return Err(Failure::Usage("--a and --b are required".into()));
        };
        Ok(MirrorScenario::new(
            self.center.clone().unwrap_or_else(RatPoint::origin),
            self.radius.clone().unwrap_or_else(|| Rational::from_integer(1.into())),
            a,
            b,
        )?)
    }
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational_or_decimal(s).map_err(|e| e.to_string())
}

fn nonzero_rational(s: &str) -> Result<Rational, String> {
    let r = parse_rational_arg(s)?;
    if num_traits::Zero::is_zero(&r) {
        return Err("r must be a nonzero rational".into());
    }
    Ok(r)
}

fn positive_float(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

fn parse_point(s: &str) -> Result<RatPoint, String> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| format!("expected x,y but got {s:?}"))?;
    Ok(RatPoint::new(
        parse_rational_arg(x.trim())?,
        parse_rational_arg(y.trim())?,
    ))
}

enum Failure {
    Usage(String),
    Math(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(msg) => Failure::Usage(msg),
            other => Failure::Math(other),
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: String,
}

#[derive(Serialize)]
struct PlotReport {
    output: String,
    solutions: usize,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn execute(command: Command) -> Result<String, Failure> {
    let tol = Tolerance::default();
    match command {
        Command::StewartAnalyze { r } => Ok(to_json(&analyze(&r, &tol)?)),
        Command::MirrorSolve { scene, tol: residual } => {
            let scenario = scene.build()?;
            let tol = Tolerance {
                residual: residual.unwrap_or(tol.residual),
                ..tol
            };
            Ok(to_json(&solve_mirror(&scenario, &tol)?))
        }
        Command::MirrorEmbed { r } => Ok(to_json(&stewart_scenario(&r)?)),
        Command::DiophSearch { bound } => Ok(to_json(&search_biquadratic(bound)?)),
        Command::Plot { scene, output } => {
            let scenario = scene.build()?;
            let solutions = solve_mirror(&scenario, &tol)?;
            std::fs::write(&output, render_svg(&scenario, &solutions)).map_err(Failure::Io)?;
            Ok(to_json(&PlotReport {
                output: output.display().to_string(),
                solutions: solutions.len(),
            }))
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(json) => {
            let _ = writeln!(out, "{json}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Math(e)) => {
            let _ = writeln!(
                out,
                "{}",
                to_json(&ErrorReport {
                    error: e.kind(),
                    message: e.to_string(),
                })
            );
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(
                out,
                "{}",
                to_json(&ErrorReport {
                    error: "IoError",
                    message: e.to_string(),
                })
            );
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
