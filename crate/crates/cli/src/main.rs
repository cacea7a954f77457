//! `vsdo`: build, query and check approximate vertex-fault distance oracles.
//!
//! Vertex ids on the command line and in query files are 1-based, matching
//! DIMACS files. Unreachable distances print as `INF`.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use vsdo_core::generate::Family;
use vsdo_core::SzProvider;

#[derive(Parser)]
#[command(
    name = "vsdo",
    version,
    about = "Approximate single-source vertex-fault distance oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random graph in DIMACS format.
    Gen {
        #[arg(long = "type", value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        n: usize,
        /// Arc count; defaults to 4n. Ignored by `grid`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        maxw: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Build an oracle and write it to a file.
    Build {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 's', long)]
        source: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value = "exact")]
        sz_provider: SzProvider,
        #[arg(short = 'o', long)]
        output: PathBuf,
    },
    /// Answer one query.
    Query {
        #[arg(short = 'o', long)]
        oracle: PathBuf,
        #[arg(short = 'x')]
        x: usize,
        #[arg(short = 't')]
        t: usize,
    },
    /// Answer `x<TAB>t` lines from a file.
    Batch {
        #[arg(short = 'o', long)]
        oracle: PathBuf,
        #[arg(short = 'q', long)]
        queries: PathBuf,
    },
    /// Compare every answer against exact replacement distances.
    Verify {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 's', long)]
        source: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value = "exact")]
        sz_provider: SzProvider,
        #[arg(long, default_value_t = 300)]
        max_n: usize,
    },
    /// Print sizes and recursion statistics of an oracle file.
    Stats {
        #[arg(short = 'o', long)]
        oracle: PathBuf,
    },
    /// Time construction and random queries.
    Bench {
        #[arg(short = 'g', long)]
        graph: PathBuf,
        #[arg(short = 's', long)]
        source: usize,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value = "exact")]
        sz_provider: SzProvider,
        #[arg(long, default_value_t = 10_000)]
        queries: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
