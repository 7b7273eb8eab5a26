mod census;
mod output;
mod scan;
mod sieve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frobscope::Error;

#[derive(Parser)]
#[command(name = "frobscope", version, about = "Torus censuses, bounding-set volumes, Frobenius field scans and sieve bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal-torus classes and the class equation.
    TorusCensus(census::CensusArgs),
    /// Exact regular-semisimple and bounding-set volumes by enumeration.
    BorelVolume(census::CensusArgs),
    /// Count good primes by Frobenius field.
    Scan(scan::ScanArgs),
    /// Evaluate the Selberg sieve bound and the counting exponent.
    Sieve(sieve::SieveArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Lib(Error),
    /// A checked property failed; the output was still written.
    Contract(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Contract(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Lib(e) => match e {
                Error::Consistency(_) => 1,
                Error::Input(_) | Error::Unsupported(_) => 2,
                Error::Resource(_) | Error::IncompleteFactorization(_) => 3,
                Error::EmptySievingSet(_) | Error::InsufficientData(_) | Error::RamifiedPrime(_) => 4,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Contract(m) => write!(f, "check failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::TorusCensus(a) => census::torus_census(&a),
        Command::BorelVolume(a) => census::borel_volume(&a),
        Command::Scan(a) => scan::run(&a),
        Command::Sieve(a) => sieve::run(&a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frobscope: {e}");
            ExitCode::from(e.code())
        }
    }
}
