//! `gacalc`: a command-line multivector calculator.
//!
//! The library exposes the whole driver as [`run`] so integration tests can
//! exercise the binary in-process: pass the argument list (without the
//! program name) and a stdin provider, get back captured stdout, stderr and
//! the process exit code.

pub mod error;
pub mod eval;
pub mod format;
pub mod lexer;
pub mod parser;

use clap::Parser as _;
use gacalc_core::{Algebra, MetricOperator, MetricTensor};
use serde::Deserialize;

pub use error::CliError;
use eval::Context;

#[derive(Debug, clap::Parser)]
#[command(name = "gacalc", about = "Multivector calculator over arbitrary metrics")]
struct Args {
    /// Dimension of the underlying vector space (1..=12).
    #[arg(long)]
    dim: usize,
    /// Metric: `euclidean`, `diag:a,b,...`, or `file:PATH` (JSON file with
    /// fields `dim` and `matrix`).
    #[arg(long, default_value = "euclidean")]
    metric: String,
    /// Print results as JSON objects instead of calculator syntax.
    #[arg(long)]
    json: bool,
    /// Route metric-dependent products through the euclidean deformation
    /// operator instead of computing them directly (results are identical).
    #[arg(long)]
    deform: bool,
    /// Expression to evaluate. When omitted, expressions are read from
    /// stdin, one per line, and evaluated until the first failure.
    /// Hyphen values are allowed so expressions may start with a minus.
    #[arg(allow_hyphen_values = true)]
    expr: Option<String>,
}

/// Captured result of one invocation.
#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Shape of a `file:` metric.
#[derive(Deserialize)]
struct MetricFile {
    dim: usize,
    matrix: Vec<Vec<f64>>,
}

fn build_metric(dim: usize, spec: &str) -> Result<MetricTensor, CliError> {
    if spec == "euclidean" {
        return MetricTensor::euclidean(dim).map_err(CliError::Kernel);
    }
    if let Some(list) = spec.strip_prefix("diag:") {
        let mut diag = Vec::new();
        for part in list.split(',') {
            let value: f64 = part.trim().parse().map_err(|_| {
                CliError::Config(format!("invalid diagonal metric entry `{}`", part.trim()))
            })?;
            if value == 0.0 {
                return Err(CliError::Config(
                    "diagonal metric entries must be nonzero".to_string(),
                ));
            }
            diag.push(value);
        }
        if diag.len() != dim {
            return Err(CliError::Config(format!(
                "diagonal metric has {} entries but --dim is {dim}",
                diag.len()
            )));
        }
        return MetricTensor::diagonal(&diag).map_err(CliError::Kernel);
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let raw = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read metric file `{path}`: {e}")))?;
        let parsed: MetricFile = serde_json::from_str(&raw)
            .map_err(|e| CliError::Config(format!("invalid metric file `{path}`: {e}")))?;
        if parsed.dim != dim {
            return Err(CliError::Config(format!(
                "metric file declares dim {} but --dim is {dim}",
                parsed.dim
            )));
        }
        return MetricTensor::new(parsed.matrix).map_err(CliError::Kernel);
    }
    Err(CliError::Config(format!(
        "unrecognized metric `{spec}` (expected `euclidean`, `diag:...`, or `file:...`)"
    )))
}

fn build_context(args: &Args) -> Result<Context, CliError> {
    let metric = build_metric(args.dim, &args.metric)?;
    let algebra = Algebra::new(metric.clone()).map_err(CliError::Kernel)?;
    let deform = if args.deform {
        let euclidean = MetricTensor::euclidean(args.dim).map_err(CliError::Kernel)?;
        Some(MetricOperator::new(euclidean, metric).map_err(CliError::Kernel)?)
    } else {
        None
    };
    Ok(Context::new(algebra, deform))
}

fn eval_line(ctx: &Context, src: &str, as_json: bool) -> Result<String, CliError> {
    let node = parser::parse(src)?;
    let value = eval::evaluate(ctx, &node)?;
    Ok(if as_json { format::json(&value) } else { format::text(&value) })
}

/// Run the calculator. `argv` excludes the program name; `read_stdin` is
/// only called when no expression argument is given.
pub fn run(argv: &[String], read_stdin: impl FnOnce() -> String) -> Outcome {
    let mut full: Vec<String> = Vec::with_capacity(argv.len() + 1);
    full.push("gacalc".to_string());
    full.extend(argv.iter().cloned());
    let args = match Args::try_parse_from(&full) {
        Ok(args) => args,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error and follows the configuration exit code.
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { stdout: rendered, stderr: String::new(), code: 0 }
                }
                _ => Outcome { stdout: String::new(), stderr: rendered, code: 2 },
            };
        }
    };

    let ctx = match build_context(&args) {
        Ok(ctx) => ctx,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("gacalc: {e}\n"),
                code: e.exit_code(),
            }
        }
    };

    match &args.expr {
        Some(expr) => match eval_line(&ctx, expr, args.json) {
            Ok(line) => Outcome { stdout: line + "\n", stderr: String::new(), code: 0 },
            Err(e) => Outcome {
                stdout: String::new(),
                stderr: format!("gacalc: {e}\n"),
                code: e.exit_code(),
            },
        },
        None => {
            // Batch mode: one output line per input line, stopping at the
            // first failure but keeping the lines already produced.
            let input = read_stdin();
            let mut stdout = String::new();
            for (number, line) in input.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                match eval_line(&ctx, line, args.json) {
                    Ok(rendered) => {
                        stdout.push_str(&rendered);
                        stdout.push('\n');
                    }
                    Err(e) => {
                        return Outcome {
                            stdout,
                            stderr: format!("gacalc: line {}: {e}\n", number + 1),
                            code: e.exit_code(),
                        }
                    }
                }
            }
            Outcome { stdout, stderr: String::new(), code: 0 }
        }
    }
}
