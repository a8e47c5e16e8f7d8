use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sturmian",
    version,
    about = "Characteristic Sturmian words, Rauzy graphs, Ostrowski numeration and formal intercepts"
)]
pub struct Cli {
    /// Partial quotients a_1,a_2,... of the slope.
    #[arg(long, global = true, value_name = "A1,A2,...")]
    pub slope: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// A word given inline, in a file, or as a prefix of the characteristic word.
#[derive(Debug, Args)]
pub struct WordInput {
    /// Binary word, at most 4096 letters.
    #[arg(long, conflicts_with = "word_file")]
    pub word: Option<String>,

    /// File holding a binary word; surrounding whitespace is ignored.
    #[arg(long, value_name = "PATH")]
    pub word_file: Option<PathBuf>,

    /// Use the prefix of this length of the characteristic word of --slope.
    #[arg(long, conflicts_with_all = ["word", "word_file"])]
    pub length: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Prefix of the characteristic word.
    Cword {
        #[arg(long)]
        length: usize,
    },
    /// Factor complexity for m = 1..=M.
    Complexity {
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        m: usize,
    },
    /// Balance check with witnesses.
    Balance {
        #[command(flatten)]
        input: WordInput,
    },
    /// Repetition function r(x, m), and its closed form when --slope is given.
    Repetition {
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        m: usize,
    },
    /// Rauzy graph of degree m of the characteristic word.
    Rauzy {
        #[arg(long)]
        m: usize,
        /// Also write the graph in DOT syntax to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
    /// Central words.
    Central {
        #[command(subcommand)]
        action: CentralAction,
    },
    /// Ostrowski numeration.
    Ostrowski {
        #[command(subcommand)]
        action: OstrowskiAction,
    },
    /// Formal intercepts.
    Intercept {
        #[command(subcommand)]
        action: InterceptAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CentralAction {
    Check { word: String },
    Decompose { word: String },
}

#[derive(Debug, Subcommand)]
pub enum OstrowskiAction {
    Encode {
        value: String,
        #[arg(long)]
        depth: usize,
    },
    Decode {
        /// Comma-separated digits b_1,b_2,...
        digits: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// The intercept of 0 c_α.
    Zero,
    /// The intercept of 1 c_α.
    One,
}

/// An intercept given by digits (all later digits 0) or a closed-form family.
#[derive(Debug, Args)]
pub struct InterceptInput {
    /// Comma-separated digits b_1,b_2,...; later digits are 0.
    #[arg(long, conflicts_with = "family", required_unless_present = "family")]
    pub digits: Option<String>,

    #[arg(long, value_enum)]
    pub family: Option<Family>,
}

#[derive(Debug, Subcommand)]
pub enum InterceptAction {
    /// Recover ρ_0..ρ_n from a word.
    Recover {
        #[command(flatten)]
        input: WordInput,
        #[arg(long)]
        depth: usize,
    },
    /// Prefix of T^ρ(c_α).
    Word {
        #[command(flatten)]
        intercept: InterceptInput,
        #[arg(long)]
        length: usize,
    },
    /// The λ_n sequence, and the common prefix with T^{ρ_n}(c_α) for --n.
    Lambda {
        #[command(flatten)]
        intercept: InterceptInput,
        #[arg(long)]
        n: Option<usize>,
    },
}
