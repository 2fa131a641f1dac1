//! `localh`: batch tables and certificates for local h-polynomials of
//! cluster subdivisions.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails, and 2 for usage or validation errors. `LOCALH_THREADS` sets the
//! worker count (default: all cores); output order never depends on it.

mod commands;
mod emit;
mod error;
mod select;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use localh::chebyshev::DEFAULT_PRECISION_BITS;
use localh::multiplier::{MultiplierSeq, DEFAULT_DEPTH};

use crate::commands::{Outcome, Settings};
use crate::emit::{write_records, Format};
use crate::error::CliError;
use crate::select::{parse_range, Selector};

pub const THREADS_ENV: &str = "LOCALH_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "localh",
    version,
    about = "Local h-polynomials of cluster subdivisions: tables and exact real-rootedness certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "json-lines", global = true)]
    format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Fill `runtime_ms` with wall-clock times (output is then not reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Args, Debug, Clone)]
struct SelectArgs {
    /// Comma-separated types: A, B, D, I2, G2, H3, H4, F4, E6, E7, E8, exceptional, all.
    #[arg(long = "type", value_delimiter = ',', required = true)]
    types: Vec<String>,

    /// A single rank for A, B, D.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "ranks")]
    rank: Option<String>,

    /// An inclusive rank range `A..B` for A, B, D.
    #[arg(long, allow_hyphen_values = true)]
    ranks: Option<String>,

    /// The dihedral parameter `m` (or range) for I2.
    #[arg(long, allow_hyphen_values = true)]
    param: Option<String>,
}

impl SelectArgs {
    fn resolve(&self) -> Result<Vec<localh::cluster::RootSystem>, CliError> {
        let ranks = self
            .rank
            .as_deref()
            .or(self.ranks.as_deref())
            .map(parse_range)
            .transpose()?;
        let params = self.param.as_deref().map(parse_range).transpose()?;
        Selector {
            types: &self.types,
            ranks,
            params,
        }
        .resolve()
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// xi-vectors of the selected root systems.
    Xi(SelectArgs),
    /// Local h-polynomial coefficients.
    LocalH(SelectArgs),
    /// Sturm certificates of real-rootedness with zero-location counts.
    Certify {
        #[command(flatten)]
        select: SelectArgs,
        /// Include isolating intervals.
        #[arg(long)]
        show_roots: bool,
        /// Isolating intervals are at most 2^-BITS wide.
        #[arg(long, default_value_t = 53)]
        width_bits: u32,
    },
    /// Real-rootedness transfer between xi(x) and the local h-polynomial.
    TransferCheck(SelectArgs),
    /// Type D local h-polynomials against the Narayana identity.
    NarayanaCheck {
        /// A single order n (>= 2).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "ranks")]
        rank: Option<String>,
        /// Inclusive range of orders.
        #[arg(long, allow_hyphen_values = true, default_value = "2..100")]
        ranks: String,
    },
    /// Finite-depth Pólya–Schur test of a multiplier sequence.
    MsTest {
        /// reciprocal-factorial, reciprocal-shifted-factorial, binomial-reciprocal.
        #[arg(
            long,
            conflicts_with = "explicit",
            required_unless_present = "explicit"
        )]
        seq: Option<String>,
        /// Order n for the shifted and binomial sequences.
        #[arg(long, allow_hyphen_values = true)]
        param: Option<i64>,
        /// Explicit comma-separated terms (rationals as p/q), zero-extended.
        #[arg(long, allow_hyphen_values = true)]
        explicit: Option<String>,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Chebyshev and H_n checks, including the closed-form root oracle.
    Chebyshev {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = DEFAULT_PRECISION_BITS)]
        precision_bits: usize,
        /// Isolating intervals are at most 2^-BITS wide.
        #[arg(long, default_value_t = 53)]
        width_bits: u32,
        /// Include intervals and oracle values.
        #[arg(long)]
        show_roots: bool,
    },
}

fn settings(timing: bool) -> Settings {
    Settings {
        timing,
        show_roots: false,
        width_bits: 53,
        precision_bits: DEFAULT_PRECISION_BITS,
    }
}

fn sequence(
    seq: Option<&str>,
    param: Option<i64>,
    explicit: Option<&str>,
) -> Result<MultiplierSeq, CliError> {
    if let Some(list) = explicit {
        return Ok(format!("explicit:{list}").parse()?);
    }
    let name = seq.unwrap_or_default();
    let descriptor = match param {
        Some(n) => format!("{name}:{n}"),
        None => name.to_string(),
    };
    Ok(descriptor.parse()?)
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let base = settings(cli.timing);
    match &cli.command {
        Command::Xi(sel) => commands::xi(&sel.resolve()?),
        Command::LocalH(sel) => commands::local_h_table(&sel.resolve()?),
        Command::Certify {
            select,
            show_roots,
            width_bits,
        } => commands::certify(
            &select.resolve()?,
            &Settings {
                show_roots: *show_roots,
                width_bits: *width_bits,
                ..base
            },
        ),
        Command::TransferCheck(sel) => commands::transfer_check(&sel.resolve()?),
        Command::NarayanaCheck { rank, ranks } => {
            let r = parse_range(rank.as_deref().unwrap_or(ranks))?;
            if *r.start() < 2 {
                return Err(localh::Error::InvalidRank(format!(
                    "type D identity requires n >= 2, got {}",
                    r.start()
                ))
                .into());
            }
            let orders: Vec<usize> = r.map(|n| n as usize).collect();
            commands::narayana_check(&orders)
        }
        Command::MsTest {
            seq,
            param,
            explicit,
            depth,
        } => {
            let s = sequence(seq.as_deref(), *param, explicit.as_deref())?;
            commands::ms_test(&s, *depth, &base)
        }
        Command::Chebyshev {
            n,
            precision_bits,
            width_bits,
            show_roots,
        } => {
            let n = usize::try_from(*n).map_err(|_| localh::Error::NegativeOrder(*n))?;
            commands::chebyshev(
                n,
                &Settings {
                    show_roots: *show_roots,
                    width_bits: *width_bits,
                    precision_bits: *precision_bits,
                    ..base
                },
            )
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got `{raw}`"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| {
        let outcome = run(&cli)?;
        let mut w: Box<dyn Write> = match &cli.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        write_records(&outcome.records, cli.format, &mut w)?;
        Ok(outcome.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("localh: {e}");
            ExitCode::from(2)
        }
    }
}
