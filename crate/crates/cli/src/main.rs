use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand};
use thiserror::Error;

mod report;
mod suites;

use report::VerificationReport;
use suites::{DEFAULT_CHARACTERISTICS, DEFAULT_MAX_DEGREE, DEFAULT_ORDER, DEFAULT_WINDOW};

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] tate_mirror::Error),
    #[error("writing the report: {0}")]
    Io(#[from] io::Error),
    #[error("serializing the report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(tate_mirror::Error::Usage(_)) => 2,
            _ => 1,
        }
    }
}

/// Exact verification suites for the Tate curve and its mirror.
#[derive(Debug, Parser)]
#[command(name = "tate-mirror", version)]
struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include the wall-clock duration in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lattice-point counts against the exponent λ.
    VerifyLattice {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        /// Largest λ to test.
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_exponent: u32,
    },
    /// Floer products against theta products.
    VerifyTheta {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
    },
    /// The Weierstrass equation of the mirror curve.
    MirrorMap {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Also report the degree-6 relation coefficients and f.
        #[arg(long)]
        emit_relation: bool,
    },
    /// The seven Dehn-twist products at q = 0.
    DehnTable,
    /// Hochschild tables of the cusp and the node.
    Hochschild {
        /// One characteristic; all of 0, 2, 3, 5 when omitted.
        #[arg(long = "char", value_parser = ["0", "2", "3", "5"])]
        characteristic: Option<String>,
        /// `n_max,s_min`.
        #[arg(long, value_parser = parse_window)]
        window: Option<Window>,
    },
    /// The adjoint bracket table.
    LieBrackets {
        #[arg(long = "char", value_parser = ["0", "2", "3"])]
        characteristic: String,
    },
    /// Every suite.
    All {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
}

#[derive(Clone, Copy, Debug)]
struct Window {
    n_max: u32,
    s_min: i64,
}

fn parse_window(s: &str) -> Result<Window, String> {
    let (n, m) = s.split_once(',').ok_or("expected n_max,s_min")?;
    let n_max = u32::from_str(n.trim()).map_err(|e| format!("n_max: {e}"))?;
    let s_min = i64::from_str(m.trim()).map_err(|e| format!("s_min: {e}"))?;
    Ok(Window { n_max, s_min })
}

fn char_of(s: &str) -> u64 {
    s.parse().expect("validated by clap")
}

fn run(command: &Command) -> Result<VerificationReport, CliError> {
    Ok(match command {
        Command::VerifyLattice { max_degree, max_exponent } => suites::verify_lattice(*max_degree, *max_exponent)?,
        Command::VerifyTheta { order, max_degree } => suites::verify_theta(*order, *max_degree)?,
        Command::MirrorMap { order, emit_relation } => suites::mirror(*order, *emit_relation)?,
        Command::DehnTable => suites::dehn_table()?,
        Command::Hochschild { characteristic, window } => {
            let w = window.unwrap_or(Window { n_max: DEFAULT_WINDOW.0, s_min: DEFAULT_WINDOW.1 });
            match characteristic {
                Some(c) => suites::hochschild(char_of(c), w.n_max, w.s_min)?,
                None => {
                    let mut report = VerificationReport::new("hochschild");
                    for c in DEFAULT_CHARACTERISTICS {
                        report.absorb(suites::hochschild(c, w.n_max, w.s_min)?);
                    }
                    report
                }
            }
        }
        Command::LieBrackets { characteristic } => suites::lie_brackets(char_of(characteristic))?,
        Command::All { order } => suites::all(*order)?,
    })
}

fn emit(cli: &Cli, report: &VerificationReport) -> Result<(), CliError> {
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    match &cli.out {
        Some(path) => fs::write(path, json)?,
        None => io::stdout().write_all(json.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli.command).and_then(|mut report| {
        let elapsed = start.elapsed();
        if cli.timing {
            report.set_duration(elapsed);
        }
        emit(&cli, &report)?;
        eprintln!(
            "{}: {} checks, {} failed, {:.2?}",
            report.suite,
            report.checks.len(),
            report.failures(),
            elapsed
        );
        Ok(report.passed())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
