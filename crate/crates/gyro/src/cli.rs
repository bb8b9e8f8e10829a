//! Argument parsing and the top-level run.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use gyro_core::ToleranceConfig;

use crate::config::{ChainSpec, ModelSpec, RunConfig, Suite};
use crate::error::{CliError, EXIT_FAIL, EXIT_PASS};
use crate::report_io::{emit_report, output_value};
use crate::suites::run_suite;

/// Verification harness for gyrogroup models.
#[derive(Debug, Parser)]
#[command(name = "gyro", version, about)]
struct Args {
    /// Suite to run (see --list-suites).
    suite: Option<String>,
    /// mobius | einstein | klein | cyclic:<n> | table:<path> | product:<A>,<B>
    #[arg(long)]
    model: Option<String>,
    /// Sample count for randomized checks.
    #[arg(long)]
    samples: Option<u64>,
    /// Root seed of the sample streams.
    #[arg(long)]
    seed: Option<u64>,
    /// Absolute and relative tolerance.
    #[arg(long, allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Minimum relative distance from the carrier boundary.
    #[arg(long = "boundary-margin", allow_negative_numbers = true)]
    boundary_margin: Option<f64>,
    /// Chain spec: inline JSON or a path to a JSON file.
    #[arg(long)]
    chain: Option<String>,
    /// Comma-separated element indices.
    #[arg(long, value_delimiter = ',')]
    subgyrogroup: Option<Vec<usize>>,
    /// Dyadic depth of the prenorm.
    #[arg(long)]
    depth: Option<u32>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Order for search.
    #[arg(long)]
    order: Option<usize>,
    /// Result cap for search.
    #[arg(long = "max-results")]
    max_results: Option<usize>,
    /// Print the available suites and exit.
    #[arg(long = "list-suites")]
    list_suites: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Run(Box<RunConfig>),
    ListSuites,
    /// Help or version text, printed as is.
    Info(String),
}

pub fn parse_args<I, T>(args: I) -> Result<Command, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let a = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            return Ok(Command::Info(e.to_string()))
        }
        Err(e) => return Err(CliError::usage(e.to_string().trim().to_string())),
    };
    if a.list_suites {
        return Ok(Command::ListSuites);
    }
    let name = a.suite.ok_or_else(|| CliError::usage("missing suite; try --list-suites"))?;
    let mut cfg = RunConfig::new(Suite::parse(&name)?);
    if let Some(m) = a.model {
        cfg.model = Some(ModelSpec::parse(&m)?);
    }
    if let Some(n) = a.samples {
        cfg.n_samples = n;
    }
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(t) = a.tol {
        cfg.tol = ToleranceConfig {
            abs_tol: t,
            rel_tol: t,
            ..cfg.tol
        };
    }
    if let Some(m) = a.boundary_margin {
        cfg.tol.boundary_margin = m;
    }
    cfg.tol.validate()?;
    if let Some(c) = a.chain {
        cfg.chain = Some(ChainSpec::parse(&c)?);
    }
    cfg.subgyrogroup = a.subgyrogroup;
    cfg.depth = a.depth;
    cfg.out = a.out;
    cfg.order = a.order;
    cfg.max_results = a.max_results;
    Ok(Command::Run(Box::new(cfg)))
}

pub fn suite_listing() -> String {
    Suite::ALL
        .iter()
        .map(|s| format!("{:<15} {}\n", s.name(), s.summary()))
        .collect()
}

/// Runs the command and returns the process exit code. Errors go to stderr
/// as one line of JSON.
pub fn run(args: impl IntoIterator<Item = OsString>) -> i32 {
    let result = parse_args(args).and_then(|cmd| match cmd {
        Command::Info(text) => {
            print!("{text}");
            Ok(EXIT_PASS)
        }
        Command::ListSuites => {
            print!("{}", suite_listing());
            Ok(EXIT_PASS)
        }
        Command::Run(cfg) => {
            let out = run_suite(&cfg)?;
            emit_report(&output_value(&out, &cfg), cfg.out.as_deref())?;
            Ok(if out.report.pass() { EXIT_PASS } else { EXIT_FAIL })
        }
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}
