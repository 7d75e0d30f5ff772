//! `findep`: exact building counts, cylinder probabilities, samplers and
//! verifications for the finitely dependent colorings.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error,
//! 3 malformed input, 4 parameter out of range.

mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use findep::Error;

const AFTER_HELP: &str = "\
Input formats:
  words      comma-separated 1-based colors, e.g. 1,2,1
  rationals  a/b or an integer, e.g. -1/5 or 3
  signs      a string over + and -, e.g. +-++
  patterns   a string over 0, 1 and * (any), e.g. 1*1

Exit codes: 0 ok, 1 verification failed, 2 usage, 3 malformed input, 4 out of range.";

#[derive(Debug, Parser)]
#[command(name = "findep", version, about, after_help = AFTER_HELP)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct GlobalOpts {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,

    /// Include wall-clock runtime in the output (makes it non-reproducible).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of proper buildings B(x) of a word.
    BuildCount {
        word: String,
        /// Alphabet size; defaults to the largest symbol (at least 2).
        #[arg(long)]
        q: Option<u8>,
        /// Also count by enumerating arrival orders (length <= 8).
        #[arg(long)]
        oracle: bool,
    },
    /// Closed-form total Σ(q,n) of buildings over all words of length n.
    Totals {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        /// Also sum B(x) over every word (q^n <= 10^6).
        #[arg(long)]
        verify: bool,
    },
    /// Extension-sum, gap-product and two-point identities for B.
    VerifyIdentities {
        #[arg(long)]
        q: u8,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Cylinder probability of a word, or of a one-color pattern.
    Cylinder {
        /// Word such as 1,2,1 (omit when using --pattern).
        word: Option<String>,
        #[arg(long, default_value_t = 4)]
        q: u8,
        /// Pattern over 0/1/* for the indicator of color 1.
        #[arg(long)]
        pattern: Option<String>,
    },
    /// Exhaustive k-dependence check; fails with a witness when it does not hold.
    KDep {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Draw random words from the coloring.
    Sample {
        #[arg(long, default_value_t = 4)]
        q: u8,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum, default_value_t = commands::Method::Insertion)]
        method: commands::Method,
    },
    /// Exact law of the insertion sampler, compared with the cylinder law.
    InsertionLaw {
        #[arg(long, default_value_t = 4)]
        q: u8,
        #[arg(long)]
        n: usize,
    },
    /// B(x) for a word over [4] through the dispersed-Dyck formula.
    QFormula { word: String },
    /// B(x) for a word over [4] through the cubic-time recurrence.
    QFast { word: String },
    /// Permutations with ascents exactly at the + positions of a sign word.
    Alpha {
        /// Sign word such as +-++ (omit when using --runs).
        signs: Option<String>,
        /// Run lengths such as 2,3,1 (zeros merge neighbouring runs).
        #[arg(long)]
        runs: Option<String>,
    },
    /// Dispersed Dyck words of length m.
    Dd {
        #[arg(long)]
        m: usize,
        /// Print only the count.
        #[arg(long)]
        count_only: bool,
    },
    /// Marginal identities for the formula at length n.
    Marginals {
        #[arg(long)]
        n: usize,
    },
    /// Probabilities of alternating up-down patterns, q_0..q_m.
    Peaks {
        #[arg(long)]
        m: usize,
    },
    /// Coefficients of the renewal gap series at density p.
    Renewal {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        n: usize,
    },
    /// Independence polynomial of a box graph at an activity.
    IndepPoly {
        /// Box side lengths, e.g. 3,3.
        #[arg(long)]
        dims: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = commands::Rule::Largest)]
        rule: commands::Rule,
        /// Also evaluate by enumerating subsets (at most 20 vertices).
        #[arg(long)]
        brute: bool,
    },
    /// Recompute the negative independence-polynomial witnesses and color bounds.
    PhWitness {
        /// Skip the three-dimensional box.
        #[arg(long)]
        quick: bool,
    },
    /// Sample the tree hard-core process.
    TreeHardcore {
        #[arg(long)]
        delta: u32,
        #[arg(long, default_value_t = 10)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        trees: usize,
    },
    /// Sample a range-m coloring of a box in Z^d.
    BoxColor {
        /// Box side lengths, e.g. 8,8.
        #[arg(long)]
        dims: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Print the coloring as CSV rows instead of a grid.
        #[arg(long)]
        csv: bool,
    },
    /// Run the acceptance criteria.
    AcceptanceSuite {
        /// Comma-separated criterion numbers; default all.
        #[arg(long)]
        only: Option<String>,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidSymbol { .. }
        | Error::LengthMismatch { .. }
        | Error::SlotMismatch { .. } => 3,
        Error::InvalidAlphabet(_)
        | Error::IndexOutOfRange { .. }
        | Error::CapExceeded { .. }
        | Error::VertexOutsideGraph { .. }
        | Error::OutOfRange { .. } => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match commands::run(&cli.command, &cli.global) {
        Ok(mut outcome) => {
            if cli.global.timings {
                outcome.report.runtime_ms = Some(start.elapsed().as_millis() as u64);
            }
            output::emit(&outcome, cli.global.json);
            if outcome.report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let code = exit_code_for(&e);
            output::emit_error(&e.to_string(), code, cli.global.json);
            ExitCode::from(code)
        }
    }
}
