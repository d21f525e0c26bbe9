//! `negacensus`: good-integer classification and self-dual negacyclic code
//! census from the command line. Output is JSON lines unless `--table`.

mod commands;
mod record;
mod values;
mod verify;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use negacensus_core::goodint::GoodSet;
use negacensus_core::negacyclic::DualKind;
use negacensus_core::Error;

use record::Record;
use values::Values;

/// Default cap on divisor combinations and constructed codes.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "negacensus",
    version,
    about = "Good integers and self-dual negacyclic codes"
)]
struct Cli {
    /// Render human-readable columns instead of JSON lines.
    #[arg(long, global = true)]
    table: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify d as 2^beta-good, -oddly-good and -evenly-good.
    Classify(ClassifyArgs),
    /// List the members of G, OG or EG up to a limit.
    Enumerate(EnumerateArgs),
    /// Existence and number of self-dual negacyclic codes.
    Census(CensusArgs),
    /// Factor x^n + 1 into reciprocal pairs and self-reciprocal factors.
    Factor(ProfileArgs),
    /// List the generators of every self-dual negacyclic code.
    Construct(ConstructArgs),
    /// Compare closed forms against brute-force search over a grid.
    Verify(verify::VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: i64,
    #[arg(long, default_value_t = 0)]
    pub beta: u32,
    /// A number, a range `lo..hi`, or a comma-separated list.
    #[arg(long)]
    pub d: Values<u64>,
    /// Also run the exhaustive search and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub a: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: i64,
    #[arg(long, default_value_t = 0)]
    pub beta: u32,
    /// G, OG or EG.
    #[arg(long, default_value = "G")]
    pub set: GoodSet,
    #[arg(long)]
    pub limit: u64,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub p: Values<u64>,
    #[arg(long, default_value = "1")]
    pub l: Values<u32>,
    #[arg(long)]
    pub nu: Values<u32>,
    #[arg(long, default_value = "0")]
    pub r: Values<u32>,
    #[arg(long, default_value = "1")]
    pub nprime: Values<u64>,
    #[arg(long, default_value = "euclidean")]
    pub dual: DualKind,
    /// Also count by exhaustive search and compare.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug, Clone)]
pub struct ProfileArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub l: u32,
    #[arg(long)]
    pub nu: u32,
    #[arg(long, default_value_t = 0)]
    pub r: u32,
    #[arg(long, default_value_t = 1)]
    pub nprime: u64,
    #[arg(long, default_value = "euclidean")]
    pub dual: DualKind,
    /// Also factor by the independent route and compare (factor only).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Maximum number of codes; defaults to NEGACENSUS_CAP or 1000000.
    #[arg(long)]
    pub cap: Option<u64>,
}

/// Why a command stopped early.
#[derive(Debug)]
pub enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Core(Error::Domain(_)) => 1,
            Failure::Core(e) if e.is_resource() => 2,
            Failure::Core(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

/// Records to print, an optional stderr note and the exit status.
pub struct Output {
    pub records: Vec<Record>,
    pub note: Option<String>,
    pub status: u8,
}

impl From<Vec<Record>> for Output {
    fn from(records: Vec<Record>) -> Self {
        Output {
            records,
            note: None,
            status: 0,
        }
    }
}

/// Combination cap from the environment, falling back to the default.
pub fn env_cap() -> Result<u64, Failure> {
    match std::env::var("NEGACENSUS_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("NEGACENSUS_CAP={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Classify(a) => commands::classify(&a),
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Census(a) => commands::census(&a),
        Command::Factor(a) => commands::factor(&a),
        Command::Construct(a) => commands::construct(&a),
        Command::Verify(a) => verify::verify(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let text = e.to_string();
            let summary: Vec<&str> = text
                .lines()
                .map(str::trim)
                .take_while(|line| !line.starts_with("Usage:"))
                .filter(|line| {
                    !line.is_empty() && !line.starts_with("tip:") && !line.starts_with("For more")
                })
                .collect();
            eprintln!(
                "negacensus: {}",
                summary.join(" ").trim_start_matches("error: ")
            );
            return ExitCode::from(1);
        }
    };
    let table = cli.table;
    match run(cli) {
        Ok(out) => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            let written = if table {
                record::write_table(&mut lock, &out.records)
            } else {
                record::write_json(&mut lock, &out.records)
            };
            if written.and_then(|_| lock.flush()).is_err() {
                return ExitCode::from(1);
            }
            if let Some(note) = out.note {
                eprintln!("{note}");
            }
            ExitCode::from(out.status)
        }
        Err(f) => {
            eprintln!("negacensus: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
