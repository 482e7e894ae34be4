//! `bilax`: coherence reports, category information and product tables for
//! the Drinfeld centre of Rep(G).
//!
//! Exit codes: 0 all checks pass, 1 a check failed or the engine errored,
//! 2 usage error.

mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::Product;
use config::{NormalisationArg, RunArgs, RunConfig, SuiteArg, UsageError};

#[derive(Parser, Debug)]
#[command(name = "bilax", version, about = "Bilax coherence checks for the Drinfeld centre of Rep(G)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run coherence and lemma suites and write a JSON report.
    Coherence {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Scale of the unit map into the convolution square of the symmetric unit.
        #[arg(long, value_enum, default_value = "inclusive")]
        normalisation: NormalisationArg,
    },
    /// Irrep dimensions, global dimension, the symmetric unit and ranks of the
    /// averaged loop over the test pool.
    Info {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Dimensions and fibre gradings of all pool products.
    ProductTable {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long, value_enum, default_value = "sym")]
        product: Product,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let run_args = match &cli.command {
        Command::Coherence { run, .. } | Command::Info { run } | Command::ProductTable { run, .. } => run,
    };
    let cfg = match RunConfig::from_args(run_args) {
        Ok(cfg) => cfg,
        Err(UsageError(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let outcome = match cli.command {
        Command::Coherence { suite, normalisation, .. } => commands::coherence(&cfg, suite.into(), normalisation.into()),
        Command::Info { .. } => commands::info(&cfg).map(|_| true),
        Command::ProductTable { product, .. } => commands::product_table(&cfg, product).map(|_| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
