//! Batch driver for the exact Fock-space verification suites.

mod report;
mod suites;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fockvir::{Error, Parity, Result, Selector, Surd};
use serde::Serialize;

use report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "fockvir",
    version,
    about = "Exact checks of Virasoro representations on the real neutral fermion Fock space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Clifford anticommutators on the truncated basis
    VerifyClifford,
    /// Heisenberg brackets and `h_0 = dg`
    VerifyHeisenberg,
    /// Virasoro brackets, central charge and highest-weight data
    VerifyVirasoro,
    /// The two zero-mode and shifted-mode identities
    VerifyIdentities,
    /// Brute-force trace character of a sector
    Char,
    /// Both sides of the Jacobi triple product
    Jacobi,
    /// Kernel search for singular vectors
    Singular,
    /// Charge-sector decomposition at c = 1
    Decompose,
    /// Discrete-series parameters
    Discrete,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::VerifyClifford => "verify-clifford",
            Command::VerifyHeisenberg => "verify-heisenberg",
            Command::VerifyVirasoro => "verify-virasoro",
            Command::VerifyIdentities => "verify-identities",
            Command::Char => "char",
            Command::Jacobi => "jacobi",
            Command::Singular => "singular",
            Command::Decompose => "decompose",
            Command::Discrete => "discrete",
        }
    }
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Weight {
    Half,
    One,
    Lambda,
}

#[derive(Args, Serialize, Debug, Clone)]
pub struct Options {
    /// Basis energy bound, in quarters
    #[arg(long, global = true, default_value_t = 48)]
    pub energy_cutoff: i64,
    /// Series truncation, in quarters of a power of q
    #[arg(long, global = true, default_value_t = 60)]
    pub q_order: i64,
    /// Largest |power of z| kept
    #[arg(long, global = true, default_value_t = 6)]
    pub z_window: i64,
    /// Largest |mode index| exercised
    #[arg(long, global = true, default_value_t = 4)]
    pub mode_window: i64,
    #[arg(long, global = true, default_value = "1/2", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, global = true, default_value = "0", allow_hyphen_values = true)]
    pub b: String,
    /// full, even, odd or charge:N (singular treats full as charge:0)
    #[arg(long, global = true, default_value = "full")]
    pub sector: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    #[serde(skip)]
    out: Option<PathBuf>,
    /// Zero mode grading the trace
    #[arg(long, global = true, value_enum, default_value_t = Weight::Half)]
    pub weight: Weight,
    /// Weight the trace by z^{h_0}
    #[arg(long, global = true)]
    pub charge_variable: bool,
    /// Measure exponents from the sector's highest weight
    #[arg(long, global = true)]
    pub relative: bool,
    /// I, II or III (inferred from b when absent)
    #[arg(long, global = true)]
    pub case: Option<String>,
    /// Largest |charge| compared sector by sector
    #[arg(long, global = true, default_value_t = 4)]
    pub window: i64,
    #[arg(long, global = true, default_value_t = 6)]
    pub max_level: u64,
    #[arg(long, global = true, default_value_t = 4)]
    pub j_max: i64,
    /// Restrict the discrete series to one m
    #[arg(long, global = true)]
    pub m: Option<u32>,
    /// Also cross-check against the sqrt(2)-valued parameter fixture
    #[arg(long, global = true)]
    pub with_fixtures: bool,
}

const LIMITS: [(&str, i64); 7] = [
    ("energy-cutoff", 160),
    ("q-order", 400),
    ("z-window", 64),
    ("mode-window", 12),
    ("window", 12),
    ("max-level", 14),
    ("j-max", 12),
];

impl Options {
    fn validate(&self) -> Result<()> {
        let values = [
            self.energy_cutoff,
            self.q_order,
            self.z_window,
            self.mode_window,
            self.window,
            self.max_level as i64,
            self.j_max,
        ];
        for ((flag, limit), value) in LIMITS.iter().zip(values) {
            if value <= 0 {
                return Err(Error::OutOfRange(format!(
                    "--{flag} must be positive, got {value}"
                )));
            }
            if value > *limit {
                return Err(Error::OutOfRange(format!(
                    "resource limit: --{flag} {value} exceeds {limit}"
                )));
            }
        }
        if self.m.is_some_and(|m| m > 12) {
            return Err(Error::OutOfRange("resource limit: --m exceeds 12".into()));
        }
        Ok(())
    }

    pub fn lambda_b(&self) -> Result<(Surd, Surd)> {
        let lambda: Surd = self.lambda.parse()?;
        let b: Surd = self.b.parse()?;
        lambda.common_radicand(&b)?;
        Ok((lambda, b))
    }

    pub fn selector(&self) -> Result<Selector> {
        let text = self.sector.trim();
        match text {
            "full" => Ok(Selector::Full),
            "even" => Ok(Selector::Parity(Parity::Even)),
            "odd" => Ok(Selector::Parity(Parity::Odd)),
            _ => text
                .strip_prefix("charge:")
                .and_then(|n| n.trim().parse().ok())
                .map(Selector::Charge)
                .ok_or_else(|| Error::Parse {
                    what: "sector",
                    input: text.to_string(),
                    reason: "expected full, even, odd or charge:N".into(),
                }),
        }
    }
}

fn run(command: Command, options: &Options) -> Result<Report<&Options>> {
    options.validate()?;
    let (checks, data) = match command {
        Command::VerifyClifford => suites::verify_clifford(options)?,
        Command::VerifyHeisenberg => suites::verify_heisenberg(options)?,
        Command::VerifyVirasoro => suites::verify_virasoro(options)?,
        Command::VerifyIdentities => suites::verify_identities(options)?,
        Command::Char => suites::character(options)?,
        Command::Jacobi => suites::jacobi(options)?,
        Command::Singular => suites::singular(options)?,
        Command::Decompose => suites::decompose(options)?,
        Command::Discrete => suites::discrete(options)?,
    };
    Ok(Report::new(command.name(), options, checks, data))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(cli.command, &cli.options) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.command.name());
            return ExitCode::from(2);
        }
    };
    let text = match cli.options.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Plain => report.to_plain(),
    };
    let written = match &cli.options.out {
        Some(path) => fs::write(path, &text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
