use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use phi3::report::Format;

#[derive(Parser, Debug)]
#[command(
    name = "phi3",
    version,
    about = "Same-form prime factorizations of x^2 + x + 1 and their threats"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalArgs {
    /// Output format [default: human]
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    /// Worker threads (PHI3_WORKERS overrides the config file)
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Seed for randomized factoring
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// TOML file supplying defaults for any flag
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Human,
    Jsonl,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Human => Format::Human,
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stream every solution with at least two factors and x <= x-max
    Enumerate {
        #[arg(long)]
        x_max: Option<u64>,
    },
    /// Factor Φ₃(x) and report the solution and its family matches
    Classify { x: u64 },
    /// Check the published solution tables, the even quadruple threat and
    /// the odd quadruple threat fixture
    VerifyPaper {
        /// Fixture file [default: the shipped fixture]
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Skip the big-integer fixture checks
        #[arg(long)]
        skip_bignum: bool,
    },
    /// Search for quadruple threats
    SearchThreats(SearchArgs),
    /// Expand a product of factors a_i + w / 1 + a_i w symbolically
    Expand {
        /// Selection, e.g. `ddt` or `direct,direct,twisted`
        #[arg(long)]
        sel: String,
    },
    /// List the families and sporadic tables
    Catalog,
}

#[derive(Args, Debug, Clone)]
pub struct SearchArgs {
    /// Quadruple threats over the tables and all four families
    #[arg(long)]
    pub quad: bool,
    /// Odd quadruple threats through family 1
    #[arg(long)]
    pub odd_quad: bool,
    /// Certify that no odd quadruple threat has an argument with Φ₃ <= q-bound
    #[arg(long)]
    pub min_factor_scan: bool,

    #[arg(long)]
    pub entry_bound: Option<u64>,
    #[arg(long)]
    pub a_max: Option<u64>,
    #[arg(long)]
    pub q_bound: Option<u64>,

    /// Resume from and record progress in this file (one search at a time)
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Write per-anchor work counters to this file (JSON lines)
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// Anchors processed between checkpoint writes
    #[arg(long, default_value_t = 64)]
    pub chunk: usize,
    /// Stop after this many chunks, as if interrupted
    #[arg(long, hide = true)]
    pub max_chunks: Option<usize>,
}
