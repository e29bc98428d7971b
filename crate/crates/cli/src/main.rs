//! `gorenstein`: inverse systems, standard bases and G-admissible sets from the command line.
//!
//! Exit status: 0 when every claim passes, 1 on a mathematical failure, 2 on a usage error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "gorenstein", version, about = "Macaulay inverse systems and one-dimensional Gorenstein algebras")]
#[command(after_help = GRAMMAR)]
pub struct Cli {
    #[command(flatten)]
    pub cfg: Config,
    #[command(subcommand)]
    pub cmd: Command,
}

pub const GRAMMAR: &str = "Text grammar: terms joined by + and -, factors by optional *, exponents with ^,
integer or rational coefficients (3, -3/2), parentheses. Ring variables are lowercase
(x,y,z by default); DP-polynomials use the dual names (X,Y,Z). Ideals are written
\"(f1, f2, ...)\". Fields: q (rationals) or fp:P with P an odd prime.";

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// Ground field: q or fp:P.
    #[arg(long, global = true, env = "GORENSTEIN_FIELD", default_value = "q")]
    pub field: String,
    /// Ring variables, comma separated (default: lowercased dual variables, else x,y,z).
    #[arg(long, global = true, env = "GORENSTEIN_VARS")]
    pub vars: Option<String>,
    /// Dual variables, comma separated (default: uppercased ring variables).
    #[arg(long, global = true, env = "GORENSTEIN_DUAL_VARS")]
    pub dual_vars: Option<String>,
    /// Seed for every randomized choice.
    #[arg(long, global = true, env = "GORENSTEIN_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Degree bound for perp truncations and for the constants of extend/build.
    #[arg(long, global = true, env = "GORENSTEIN_DEGREE_BOUND")]
    pub degree_bound: Option<u32>,
    /// Largest degree of the monomial perturbations tried by gadm lift.
    #[arg(long, global = true, env = "GORENSTEIN_ALPHA_DEG_MAX", default_value_t = 2)]
    pub alpha_deg_max: u32,
    /// Allow the long-running examples (p30, p55).
    #[arg(long, global = true, env = "GORENSTEIN_LONG")]
    pub long: bool,
    /// Output: human-readable text or the structured JSON report.
    #[arg(long, global = true, env = "GORENSTEIN_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Report,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Contraction f∘F of a DP-polynomial by a polynomial.
    Contract { f: String, dp: String },
    /// Annihilator Ann(F_1, ..., F_k).
    Ann {
        #[arg(required = true)]
        dps: Vec<String>,
    },
    /// Basis of the inverse system of an ideal up to --degree-bound.
    Perp { ideal: String },
    /// Dimension, Hilbert function and basis of span(F).
    Span { dp: String },
    /// Standard basis (reduced Gröbner basis, or Mora basis with --local).
    Std {
        ideal: String,
        #[arg(long)]
        local: bool,
    },
    /// Normal form of f modulo an ideal.
    Nf {
        f: String,
        ideal: String,
        #[arg(long)]
        local: bool,
    },
    /// Ideal quotient I : J.
    Colon {
        i: String,
        j: String,
        #[arg(long)]
        local: bool,
    },
    /// Hilbert function, dimension and multiplicity of R/I.
    Hilbert {
        ideal: String,
        #[arg(long)]
        local: bool,
    },
    /// G-admissible sets.
    Gadm {
        #[command(subcommand)]
        op: GadmOp,
    },
    /// Built-in reproductions.
    Example {
        #[command(subcommand)]
        which: ExampleOp,
    },
    /// Linkage of the 14 points into 10 + 4, with the field search.
    Linkage,
}

#[derive(Subcommand, Debug)]
pub enum GadmOp {
    /// Verify conditions (1) and (2) on a fixture.
    Check { fixture: String },
    /// Solution space for the next element of a fixture.
    Extend { fixture: String },
    /// Build H_1..H_len from H_1.
    Build {
        /// H_1 in the dual variables.
        #[arg(long)]
        h1: String,
        /// The distinguished variable.
        #[arg(long)]
        z: String,
        #[arg(long)]
        len: usize,
        /// Constants C_1, C_2, ... fixed in advance, separated by ';'.
        #[arg(long)]
        constants: Option<String>,
        /// Choice among admissible constants when none is given.
        #[arg(long, value_enum, default_value_t = Policy::Zero)]
        policy: Policy,
        /// Write the built set as a fixture file.
        #[arg(long)]
        out: Option<String>,
    },
    /// Lift a fixture H_1..H_{t+1} with t >= e to Gorenstein ideals I_α.
    Lift {
        fixture: String,
        /// Candidate budget.
        #[arg(long, default_value_t = 64)]
        budget: usize,
        /// Number of accepted candidates to report.
        #[arg(long, default_value_t = 1)]
        accept: usize,
    },
    /// Graded shortcut I = Ann(H_{t+1})_{<=t} R.
    GradedLift {
        fixture: String,
        #[arg(long)]
        t: Option<u32>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    Zero,
    Random,
}

#[derive(Subcommand, Debug)]
pub enum ExampleOp {
    /// The family k[[t^3b, t^3b+1, t^6b+3]].
    Semigroup {
        #[arg(long)]
        b: u32,
    },
    /// Gorenstein points in P^3.
    Points {
        #[arg(long, value_parser = ["p5", "p14", "p30", "p55"])]
        name: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.rendered);
            ExitCode::from(if out.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            if e.usage {
                eprintln!("\n{GRAMMAR}");
            }
            ExitCode::from(if e.usage { 2 } else { 1 })
        }
    }
}
