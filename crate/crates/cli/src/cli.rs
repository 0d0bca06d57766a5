use std::path::PathBuf;

use clap::{Parser, Subcommand};

/// Gröbner-basis computations and Frobenius verdicts for graded rings in
/// positive characteristic.
///
/// Arguments naming ideals, elements, divisors or divisorial ideals accept
/// either an object name from the ring file or a literal value.
#[derive(Debug, Clone, Parser)]
#[command(name = "fsing", version)]
pub struct Cli {
    /// Ring description file; bare names also match the shipped rings.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    /// Characteristic, overriding the ring file.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Variables `name[:weight],...` when no ring file is given.
    #[arg(long, global = true)]
    pub vars: Option<String>,
    /// Relations when no ring file is given.
    #[arg(long, global = true)]
    pub relations: Option<String>,
    /// Hypothesis flags, comma separated, added to the file's [assert].
    #[arg(long = "assert", global = true, value_name = "FLAGS")]
    pub assert: Vec<String>,
    /// Reduction budget of the Gröbner engine.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Write the JSON report here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Seed for the randomized suites of `check`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Reduced Gröbner basis of the lift of an ideal (default: the relations).
    Gb {
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Ideal membership in the quotient ring.
    Member {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        ideal: String,
    },
    /// Colon ideal I : J in the quotient ring.
    Colon {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Saturation I : s^∞ in the quotient ring.
    Saturate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Hilbert series of the ring, or of its quotient by an ideal.
    Hilbert {
        #[arg(long)]
        ideal: Option<String>,
    },
    /// a-invariant of the ring (needs `cohen-macaulay`).
    Ainv,
    /// Bracket power I^[q].
    Bracket {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        q: u64,
    },
    /// Least e with f^(p^e) in I^[p^e].
    Fclosure {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 3)]
        emax: u32,
    },
    /// Fedder's criterion at the origin for S/J (default J: the relations).
    Fedder {
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Checks c f^q in I^[q] over a range of exponents.
    Tcwitness {
        #[arg(long)]
        elem: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 1)]
        emin: u32,
        #[arg(long, default_value_t = 3)]
        emax: u32,
    },
    /// Rounding, cohomology and F-purity obstruction of a Q-divisor on P^1.
    Divisor {
        #[arg(long, default_value = "D")]
        divisor: String,
        /// Report on nD instead of D.
        #[arg(long, default_value_t = 1)]
        n: i64,
    },
    /// Section ring of a Q-divisor: dimensions and generators by level.
    Demazure {
        #[arg(long)]
        divisor: Option<String>,
        #[arg(long, default_value_t = 4)]
        nmax: i64,
        /// Use the divisor sum (1/N) V(X - a Y) over `--alphas`.
        #[arg(long)]
        family: Option<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alphas: Vec<i64>,
    },
    /// Order of a divisorial class and cyclic-cover degree bookkeeping.
    Cover {
        #[arg(long)]
        omega: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
        /// Skip the class search and use this order.
        #[arg(long, requires = "degu")]
        order: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        degu: Option<String>,
        /// Divisorial objects to match against the symbolic powers.
        #[arg(long, value_delimiter = ',')]
        compare: Vec<String>,
        /// Ring file presenting the cover, for a Hilbert-series cross-check.
        #[arg(long)]
        cover_file: Option<PathBuf>,
    },
    /// F-regularity of a normal graded ring of dimension two.
    Fregular2 {
        #[arg(long)]
        omega: Option<String>,
        #[arg(long)]
        s: Option<String>,
        #[arg(long, default_value_t = 6)]
        nmax: u32,
    },
    /// F-rationality of a normal graded Cohen-Macaulay ring of dimension two.
    Frational2,
    /// Runs a shipped example against its expected values (or `all`).
    Corpus { name: String },
    /// Seeded randomized consistency suites of the engine.
    Check {
        /// Scale factor for the number of cases per suite.
        #[arg(long, default_value_t = 1)]
        scale: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Member { .. } => "member",
            Command::Colon { .. } => "colon",
            Command::Saturate { .. } => "saturate",
            Command::Hilbert { .. } => "hilbert",
            Command::Ainv => "ainv",
            Command::Bracket { .. } => "bracket",
            Command::Fclosure { .. } => "fclosure",
            Command::Fedder { .. } => "fedder",
            Command::Tcwitness { .. } => "tcwitness",
            Command::Divisor { .. } => "divisor",
            Command::Demazure { .. } => "demazure",
            Command::Cover { .. } => "cover",
            Command::Fregular2 { .. } => "fregular2",
            Command::Frational2 => "frational2",
            Command::Corpus { .. } => "corpus",
            Command::Check { .. } => "check",
        }
    }
}
