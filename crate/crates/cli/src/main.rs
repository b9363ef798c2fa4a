//! `rectbal`: batch front end for the rectangle balance analyzers.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rectbal::words::{Budget, SequenceKind};

/// Exit status for a failed verification.
pub const EXIT_VERIFY: u8 = 1;
/// Exit status for bad arguments.
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "rectbal", version, about = "Balance of word rectangles over Fibonacci, Tribonacci and Thue-Morse words")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    /// Cap on generated word length; overrides RECTBAL_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

impl GlobalOpts {
    pub fn budget(&self) -> Budget {
        self.budget.map(Budget).unwrap_or_else(Budget::from_env)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fibonacci word rectangles.
    #[command(subcommand)]
    Fib(FibCommand),
    /// Tribonacci word rectangles.
    #[command(subcommand)]
    Trib(TribCommand),
    /// Thue-Morse word rectangles.
    #[command(subcommand)]
    Tm(TmCommand),
    /// Balance automaton inference and replay.
    #[command(subcommand)]
    Dfa(DfaCommand),
    /// Numeration system codecs.
    #[command(subcommand)]
    Num(NumCommand),
    /// Word prefixes.
    #[command(subcommand)]
    Word(WordCommand),
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibMethod {
    Exact,
    Scan,
    Zeck,
}

#[derive(Subcommand, Debug)]
pub enum FibCommand {
    /// Decide whether the m x n rectangles are balanced.
    Bal {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = FibMethod::Exact)]
        method: FibMethod,
        /// Scan horizon (scan method only).
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Balance verdicts for every 0 <= m, n <= max.
    Sweep {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Check the diverse-rectangle identities for one k.
    Diverse {
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum TribCommand {
    /// 2-balance scan of the m x n rectangles.
    Bal2 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// All n <= limit whose 2 x n rectangles look 2-balanced.
    List2 {
        #[arg(long, default_value_t = 48)]
        limit: u64,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Corner witness for block length p.
    Corner {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        search_limit: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum TmCommand {
    /// Signed excess 2|A(i,m,n)|_1 - mn.
    Excess {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Excess extremes and balance over i < horizon.
    Profile {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        horizon: Option<u64>,
    },
    /// Balance class for every 1 <= m, n <= max.
    Table {
        #[arg(long)]
        max: u64,
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DfaCommand {
    /// Infer the balance automaton from exact labels.
    Infer {
        #[arg(long, default_value_t = 14)]
        max_len: usize,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run a saved automaton on the encoding of a pair.
    Run {
        #[arg(long)]
        file: std::path::PathBuf,
        #[arg(long, num_args = 2, value_names = ["M", "N"])]
        pair: Vec<u64>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumSystem {
    Zeck,
    Trib,
    Neg2,
}

#[derive(Subcommand, Debug)]
pub enum NumCommand {
    /// Integer to digit string.
    Encode {
        #[arg(long, value_enum)]
        system: NumSystem,
        #[arg(allow_hyphen_values = true)]
        value: i64,
    },
    /// Digit string to integer.
    Decode {
        #[arg(long, value_enum)]
        system: NumSystem,
        digits: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum WordCommand {
    /// Print a prefix of a word.
    Dump {
        #[arg(long, value_parser = parse_kind)]
        kind: SequenceKind,
        #[arg(long)]
        len: usize,
    },
}

fn parse_kind(s: &str) -> Result<SequenceKind, String> {
    s.parse().map_err(|e: rectbal::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().ok();
    }
    match commands::dispatch(&cli) {
        Ok(status) => ExitCode::from(status),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
