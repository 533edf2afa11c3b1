mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use ymbeta::cohomology::{build_framings, CohomologyError};
use ymbeta::diagrams::DiagramError;

use config::{Args, Format};

/// A failure, attributed to the stage that raised it.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {}: {message}", path.display())]
    Io { path: PathBuf, message: String },
    #[error("lie::io: {}: {message}", path.display())]
    Format { path: PathBuf, message: String },
    #[error("lie: {0}")]
    Lie(String),
    #[error("diagrams: {0}")]
    Diagrams(DiagramError),
    #[error("cohomology: {0}")]
    Cohomology(CohomologyError),
    #[error("golden: {0}")]
    Golden(ymbeta::golden::GoldenError),
}

fn run(args: &Args) -> Result<(String, bool), CliError> {
    if let Some(n) = args.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start thread pool: {e}")))?;
    }

    if args.verify {
        let checks = ymbeta::golden::golden_suite().map_err(CliError::Golden)?;
        let failed = checks.iter().filter(|c| !c.passed).count();
        let out = match args.format {
            Format::Table => report::verify_table(&checks),
            Format::Doc => json(&report::VerifyDocument {
                schema_version: report::SCHEMA_VERSION,
                passed: checks.len() - failed,
                failed,
                checks: &checks,
            }),
        };
        return Ok((out, failed == 0));
    }

    let framings = build_framings();
    let framing = framings.get(args.framing.as_str()).ok_or_else(|| {
        let known: Vec<&str> = framings.keys().copied().collect();
        CliError::Usage(format!("unknown framing {:?}; expected one of {}", args.framing, known.join(", ")))
    })?;
    let loaded = args.load()?;
    let doc = report::build(&loaded, framing.as_ref(), args.run_coupling.as_ref())?;
    let out = match args.format {
        Format::Table => report::table(&doc),
        Format::Doc => json(&doc),
    };
    Ok((out, true))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serializes");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
