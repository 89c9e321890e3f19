//! `tiled`: reflection classes, isomorphism tests, type numbers and apartment
//! pictures for tiled orders, with JSON in and JSON out.
//!
//! Exit status is 0 on success, 1 when the input is well formed but the
//! computation rejects it, and 2 for usage, I/O and parse errors.

mod files;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use tiled_core::{
    are_isomorphic, normalizer, oracle_reflection_class_count, reflection_class_count,
    reflection_class_count_prime, reflection_equivalent, render_svg, type_number, ApartmentScene,
};

use files::{load_order, load_problem};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(tiled_core::Error),
    /// Already printed; exit with this code.
    Reported(u8),
}

impl From<tiled_core::Error> for CliError {
    fn from(e: tiled_core::Error) -> Self {
        CliError::Domain(e)
    }
}

#[derive(Parser)]
#[command(name = "tiled", version, about = "Reflection classes and type numbers of tiled orders")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an order file holds a valid exponent matrix.
    Validate { path: PathBuf },
    /// Number of reflection classes, vertex types and invariants.
    Classes {
        path: PathBuf,
        /// Use the prime-degree shortcut (n must be prime).
        #[arg(long, conflicts_with = "oracle")]
        prime: bool,
        /// Use exhaustive enumeration of S_n (n <= 9).
        #[arg(long)]
        oracle: bool,
        /// Also report the normalizer shadow H and the types of its lifts.
        #[arg(long)]
        normalizer: bool,
    },
    /// Look for σ with m'_ijl = m_σ(i)σ(j)σ(l).
    Isomorphic {
        first: PathBuf,
        second: PathBuf,
        /// Also require t'_i = t_σ(i).
        #[arg(long)]
        reflection: bool,
    },
    /// Global type number of an everywhere locally tiled order.
    TypeNumber { path: PathBuf },
    /// Draw n = 3 orders in the apartment as SVG.
    Plot {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Leave out the [0,a,b] vertex labels.
        #[arg(long)]
        no_labels: bool,
        /// Lattice steps of empty space around the polytopes.
        #[arg(long, default_value_t = 1)]
        margin: i64,
    },
}

fn classes(path: &Path, prime: bool, oracle: bool, with_normalizer: bool) -> Result<Value, CliError> {
    let e = load_order(path)?;
    let d = if prime {
        reflection_class_count_prime(&e)?
    } else if oracle {
        oracle_reflection_class_count(&e)?
    } else {
        reflection_class_count(&e)
    };
    let mut out = json!({ "d": d, "types": e.vertex_types().as_slice() });
    if let Some(six) = e.structural_invariants().six_tuple() {
        out["invariants_6tuple"] = json!(six);
    }
    if with_normalizer {
        let data = normalizer(&e);
        out["H"] = json!(data.h.iter().map(ToString::to_string).collect::<Vec<_>>());
        out["xi_types"] = json!(data.xi_types);
    }
    Ok(out)
}

fn isomorphic(first: &Path, second: &Path, reflection: bool) -> Result<Value, CliError> {
    let (a, b) = (load_order(first)?, load_order(second)?);
    let sigma = if reflection { reflection_equivalent(&a, &b)? } else { are_isomorphic(&a, &b)? };
    Ok(json!({ "isomorphic": sigma.is_some(), "sigma": sigma.map(|s| s.to_string()) }))
}

fn type_number_cmd(path: &Path) -> Result<Value, CliError> {
    let report = type_number(&load_problem(path)?)?;
    let mut out = json!({
        "cl_T_hat": report.cl_t_hat.invariant_factors(),
        "type_number": report.type_number,
        "max_bound": report.max_bound,
    });
    if !report.skipped.is_empty() {
        out["skipped"] = json!(report.skipped);
    }
    Ok(out)
}

fn plot(paths: &[PathBuf], out: Option<&Path>, labels: bool, margin: i64) -> Result<Option<String>, CliError> {
    let orders = paths.iter().map(|p| load_order(p)).collect::<Result<Vec<_>, _>>()?;
    let svg = render_svg(&ApartmentScene::fit(&orders, margin.max(0), labels)?);
    match out {
        Some(file) => {
            fs::write(file, svg).map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            Ok(None)
        }
        None => Ok(Some(svg)),
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("TILED_THREADS") else { return Ok(()) };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("TILED_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))
}

fn report_error(e: &CliError) -> ExitCode {
    let (body, code) = match e {
        CliError::Usage(msg) => (json!({ "error": "usage", "message": msg }), 2),
        CliError::Domain(err) => (json!({ "error": err.kind(), "message": err.to_string() }), 1),
        CliError::Reported(code) => return ExitCode::from(*code),
    };
    eprintln!("{body}");
    ExitCode::from(code)
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    let value = match cli.command {
        Command::Validate { path } => match load_order(&path) {
            Ok(_) => json!({ "valid": true }),
            Err(CliError::Domain(err)) => {
                let mut out = json!({ "valid": false, "error": err.kind(), "message": err.to_string() });
                if let tiled_core::Error::RingConditionViolated(i, j, k) = err {
                    out["triple"] = json!([i, j, k]);
                }
                println!("{out}");
                return Err(CliError::Reported(1));
            }
            Err(usage) => return Err(usage),
        },
        Command::Classes { path, prime, oracle, normalizer } => classes(&path, prime, oracle, normalizer)?,
        Command::Isomorphic { first, second, reflection } => isomorphic(&first, &second, reflection)?,
        Command::TypeNumber { path } => type_number_cmd(&path)?,
        Command::Plot { paths, out, no_labels, margin } => return plot(&paths, out.as_deref(), !no_labels, margin),
    };
    Ok(Some(value.to_string()))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return report_error(&e);
    }
    match run(cli) {
        Ok(Some(text)) => {
            println!("{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => report_error(&e),
    }
}
