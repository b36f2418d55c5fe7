use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use kostka::cli::{cmd_bench, cmd_partitions, cmd_table, cmd_verify, Config, Method, OutputFormat};
use kostka::monomial::DEFAULT_MONOMIAL_MAX_N;
use kostka::partitions::DEFAULT_MAX_N;
use kostka::{Error, TableKind};

/// Exact character tables and Kostka matrices of the symmetric groups.
#[derive(Parser)]
#[command(name = "kostka", version)]
struct Args {
    /// Directory for cached tables (JSON).
    #[arg(long, global = true, env = "KOSTKA_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    /// Largest n accepted.
    #[arg(long, global = true, env = "KOSTKA_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n in table order.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "pretty")]
        format: OutputFormat,
    },
    /// Print one table: frobenius, kostka, inverse-kostka or characters.
    Table {
        kind: TableKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "triangular")]
        method: Method,
        #[arg(long, default_value = "pretty")]
        format: OutputFormat,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every cross-check for n. Exits 2 if any fails.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "pretty")]
        format: OutputFormat,
        /// Also run the raw-polynomial identity at n = 5.
        #[arg(long)]
        deep: bool,
    },
    /// Time both methods end to end.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value = "pretty")]
        format: OutputFormat,
    },
}

fn run(args: Args) -> Result<ExitCode, Error> {
    let cfg = Config { max_n: args.max_n, monomial_max_n: DEFAULT_MONOMIAL_MAX_N, cache_dir: args.cache_dir };
    let text = match args.command {
        Command::Partitions { n, format } => cmd_partitions(n, format, &cfg)?,
        Command::Table { kind, n, method, format, out } => cmd_table(kind, n, method, format, out.as_deref(), &cfg)?,
        Command::Verify { n, format, deep } => {
            let (text, passed) = cmd_verify(n, format, deep, &cfg)?;
            print!("{text}");
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(2) });
        }
        Command::Bench { n, reps, format } => cmd_bench(n, reps, format, &cfg)?,
    };
    print!("{text}");
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("kostka: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
