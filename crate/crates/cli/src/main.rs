mod commands;
mod input;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use input::BetaArgs;

#[derive(Parser, Debug)]
#[command(name = "betadf", version, about = "Exact digit frequency sets of beta-expansions")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Config {
    /// Alphabet size; inferred from the input when omitted.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(2..=36))]
    pub k: Option<u8>,
    /// Maximum number of digits generated for any sequence.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub digit_budget: u64,
    /// Maximum itinerary depth.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
    /// Cap on refinement of algebraic numbers, in bits.
    #[arg(long, global = true, default_value_t = 4096, value_parser = clap::value_parser!(u64).range(64..))]
    pub bits: u64,
    /// Decimal places in reports.
    #[arg(long, global = true, default_value_t = 6)]
    pub precision: usize,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Greedy digits of x.
    Expand {
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// The expansion of 1.
    Kneading {
        #[command(flatten)]
        beta: BetaArgs,
        /// Digits shown when the expansion is not finite.
        #[arg(long, default_value_t = 60)]
        digits: usize,
    },
    /// The kneading datum w_β.
    Wbeta {
        #[command(flatten)]
        beta: BetaArgs,
        /// Digits shown when the datum is only known to a prefix.
        #[arg(long, default_value_t = 60)]
        digits: usize,
    },
    /// The itinerary of a base, a sequence, or a frequency vector.
    Itinerary {
        #[command(flatten)]
        beta: BetaArgs,
        /// A sequence such as "2(120)" or "2(120)…".
        #[arg(long)]
        word: Option<String>,
        /// A frequency vector such as 7/16,5/16,4/16.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// The infimax sequence of an itinerary or a frequency vector.
    Infimax {
        #[arg(long)]
        itinerary: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = 200)]
        digits: usize,
    },
    /// The digit frequency set.
    Dfset {
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long)]
        itinerary: Option<String>,
        /// File with one base per line (`-` for stdin), processed in parallel.
        #[arg(long)]
        batch: Option<String>,
    },
    /// The locking interval of a prefix n₀ … n_R.
    LockInterval {
        #[arg(long)]
        prefix: String,
    },
    /// FE points, Φ⁻¹ vertex and triangle vertices for plotting.
    PlotData {
        /// `cubes`, `squares`, or an explicit list like [2,1,0,1].
        #[arg(long)]
        rule: String,
        /// Include the vertices of each triangle A_r.
        #[arg(long)]
        triangles: bool,
    },
    /// Compares the Markov-loop hull with the itinerary pipeline.
    MarkovCheck {
        #[command(flatten)]
        beta: BetaArgs,
        /// Claimed finite expansion of 1 (digits before the zero tail).
        #[arg(long)]
        kneading: Option<String>,
    },
    /// Digit frequencies of prefixes of w_β or of a given sequence.
    FreqTrajectory {
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long)]
        word: Option<String>,
        /// Prefix lengths, e.g. 10,100,1000.
        #[arg(long)]
        strides: String,
    },
}

fn main() -> ExitCode {
    // Usage errors exit with 1; 2 is reserved for approximate results.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    betadf::exact_arith::set_bit_budget(cli.config.bits);
    match commands::run(&cli.command, &cli.config) {
        Ok(status) => ExitCode::from(status.code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
