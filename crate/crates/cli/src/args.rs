use clap::{Args, Parser, Subcommand, ValueEnum};

use betatau_core::DEFAULT_PRECISION;

#[derive(Debug, Parser)]
#[command(
    name = "betatau",
    version,
    about = "Critical hole size for beta-transformations"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Working precision in bits (at least 64).
    #[arg(long, global = true, env = "BETATAU_PRECISION", default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    /// Nested renormalization levels explored by the classifier.
    #[arg(long, global = true, default_value_t = betatau_core::intervals::DEFAULT_MAX_DEPTH)]
    pub max_depth: usize,
    /// Longest Farey factor searched per level.
    #[arg(long, global = true, default_value_t = betatau_core::intervals::DEFAULT_MAX_FACTOR_LEN)]
    pub max_factor_len: usize,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
    /// Exit with status 3 when any result is unresolved.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Farey words of one level.
    Farey {
        #[arg(long)]
        level: u32,
    },
    /// Lyndon test, extreme rotations and product factorization of a word.
    Lyndon {
        #[arg(long)]
        check: String,
    },
    /// Substitution product of two or more words, left to right.
    Sub {
        #[arg(required = true, num_args = 2..)]
        words: Vec<String>,
    },
    /// Endpoints of the Lyndon and basic intervals of a product word.
    Interval {
        #[arg(long)]
        word: Option<String>,
        /// Comma-separated Farey factors.
        #[arg(long, value_delimiter = ',')]
        factors: Option<Vec<String>>,
    },
    /// Locate a base in the parameter partition.
    Classify {
        #[arg(long)]
        beta: String,
    },
    /// Critical value of a base.
    Tau {
        #[arg(long)]
        beta: String,
    },
    /// Critical values on a grid of bases.
    Curve {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        step: String,
        /// CSV destination (same as --output).
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Left value and right limit at the right end of a Lyndon interval.
    Jump {
        #[arg(long)]
        word: String,
    },
    /// Thue–Morse bases for every Farey word of level 3.
    Table1,
    /// Word counts and dimension estimates for the survivor set.
    Dim {
        #[arg(long)]
        beta: String,
        /// Hole size.
        #[arg(
            long,
            conflicts_with = "tau_factor",
            required_unless_present = "tau_factor"
        )]
        t: Option<String>,
        /// Hole size as a multiple of the critical value.
        #[arg(long)]
        tau_factor: Option<String>,
        /// Word length.
        #[arg(long)]
        n: usize,
        /// Truncation depth of the boundary comparisons.
        #[arg(long, default_value_t = 256)]
        depth: usize,
    },
    /// Number of ordered factorizations of an integer.
    Factorizations {
        #[arg(long)]
        m: u64,
    },
    /// Thue–Morse base and critical value for one Farey word.
    Thuemorse {
        #[arg(long)]
        word: String,
    },
}
