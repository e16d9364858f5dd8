use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use corona_cli::commands::{self, Format, Method, Outcome, Pairs};
use corona_cli::suite::SuiteConfig;

/// Resistance distances and Kirchhoff indices of R-vertex and R-edge coronae.
#[derive(Parser)]
#[command(name = "corona", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the corona described by a spec file and write it as an edge list
    /// plus a `<OUTPUT>.partition.json` sidecar.
    Build {
        spec: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Resistance distances by closed form, oracle, or both.
    Resist {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[command(flatten)]
        pairs: PairArgs,
    },
    /// Kirchhoff index, with the closed form's term breakdown.
    Kf {
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Seeded random cross-validation of closed forms against the oracle.
    Suite {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
        /// Maximum base-graph order.
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Maximum crown order.
        #[arg(long, default_value_t = 3)]
        tmax: usize,
        /// Maximum base-graph size (a spanning tree is always kept).
        #[arg(long)]
        mmax: Option<usize>,
        /// Override a block coefficient, e.g. `original=1/2` (repeatable).
        #[arg(long = "mutate", value_name = "NAME=VALUE")]
        mutate: Vec<String>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Judge the competing coefficient variants against the oracle.
    Conformance,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PairArgs {
    /// A single vertex pair.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    pair: Option<Vec<usize>>,
    /// Every unordered pair u < v.
    #[arg(long)]
    all: bool,
}

fn run(cli: Cli) -> Result<Outcome> {
    let format = cli.format;
    match cli.command {
        Command::Build { spec, output } => commands::build(&spec, &output, format),
        Command::Resist {
            spec,
            method,
            pairs,
        } => {
            let pairs = match pairs.pair {
                Some(p) => Pairs::One(p[0], p[1]),
                None => Pairs::All,
            };
            commands::resist(&spec, method, pairs, format)
        }
        Command::Kf { spec, method } => commands::kf(&spec, method, format),
        Command::Suite {
            seed,
            cases,
            nmax,
            tmax,
            mmax,
            mutate,
            output,
        } => {
            let config = SuiteConfig {
                seed,
                cases,
                nmax,
                tmax,
                mmax,
                coefficients: commands::apply_mutations(&mutate)?,
            };
            commands::suite(&config, format, output.as_deref())
        }
        Command::Conformance => commands::conformance(format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
