//! Thin command-line front end. All computation and rendering lives in
//! the library (`multibasic::job`); this file only parses arguments,
//! reads the polytope, and maps outcomes to exit codes: 0 on success,
//! 1 when a checked identity fails, 2 on invalid input.

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use multibasic::job::{self, JobOutput, OutputFormat};
use multibasic::json::{ErrorDoc, PolytopeInput};
use multibasic::Polytope;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Pretty => OutputFormat::Pretty,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "multibasic",
    version,
    about = "Exact multibasic Ehrhart series, delta-vectors and Ehrhart polynomials of lattice polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multibasic Ehrhart series Ehr_P(t; q) as numerator over binomial factors
    Series {
        /// Path to a JSON file {"vertices": [[..], ..]} ("-" reads stdin)
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Multibasic delta-vector (series numerator coefficients in t)
    Delta {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Multibasic Ehrhart polynomial of a polytope in the nonnegative orthant
    Poly {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate sigma_(nP)(q) (or its relative-interior variant) exactly
    Eval {
        input: String,
        /// Dilation factor n >= 0 (n >= 1 with --interior)
        #[arg(long)]
        n: i64,
        /// Evaluate over the relative interior of nP instead of nP
        #[arg(long)]
        interior: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check L_P([-n]_q) = (-1)^d sigma_((nP)°)(1/q) at one dilation
    Reciprocity {
        input: String,
        /// Dilation factor n >= 1
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Collapse the series: classical (q_i -> 1) or q-analogue (q_i -> q^lambda_i)
    Specialize {
        input: String,
        /// Comma-separated integer weights, one per coordinate; omit for q_i -> 1
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        lambda: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every identity check against brute-force enumeration
    Verify {
        input: String,
        /// Truncation bound for enumeration-backed checks
        #[arg(long, default_value_t = 4)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn fail(doc: ErrorDoc) -> ExitCode {
    eprintln!(
        "{}",
        serde_json::to_string(&doc).expect("error documents serialize")
    );
    ExitCode::from(2)
}

fn read_polytope(path: &str) -> Result<Polytope, ErrorDoc> {
    let text = if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| ErrorDoc::input(format!("cannot read stdin: {e}")))?;
        buffer
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| ErrorDoc::input(format!("cannot read {path}: {e}")))?
    };
    let input: PolytopeInput = serde_json::from_str(&text)
        .map_err(|e| ErrorDoc::input(format!("invalid polytope JSON: {e}")))?;
    input.to_polytope().map_err(|e| ErrorDoc::of(&e))
}

fn finish(result: multibasic::Result<JobOutput>) -> ExitCode {
    match result {
        Ok(out) => {
            print!("{}", out.text);
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => fail(ErrorDoc::of(&e)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Series { input, format } => match read_polytope(&input) {
            Ok(p) => finish(job::run_series(&p, format.into())),
            Err(doc) => fail(doc),
        },
        Command::Delta { input, format } => match read_polytope(&input) {
            Ok(p) => finish(job::run_delta(&p, format.into())),
            Err(doc) => fail(doc),
        },
        Command::Poly { input, format } => match read_polytope(&input) {
            Ok(p) => finish(job::run_poly(&p, format.into())),
            Err(doc) => fail(doc),
        },
        Command::Eval {
            input,
            n,
            interior,
            format,
        } => {
            if n < 0 {
                return fail(ErrorDoc::input(format!(
                    "dilation must be nonnegative, got {n}"
                )));
            }
            if interior && n < 1 {
                return fail(ErrorDoc::input(
                    "interior evaluation needs a positive dilation".to_string(),
                ));
            }
            match read_polytope(&input) {
                Ok(p) => finish(job::run_eval(&p, n, interior, format.into())),
                Err(doc) => fail(doc),
            }
        }
        Command::Reciprocity { input, n, format } => {
            if n < 1 {
                return fail(ErrorDoc::input(format!(
                    "reciprocity needs a positive dilation, got {n}"
                )));
            }
            match read_polytope(&input) {
                Ok(p) => finish(job::run_reciprocity(&p, n, format.into())),
                Err(doc) => fail(doc),
            }
        }
        Command::Specialize {
            input,
            lambda,
            format,
        } => match read_polytope(&input) {
            Ok(p) => finish(job::run_specialize(&p, lambda.as_deref(), format.into())),
            Err(doc) => fail(doc),
        },
        Command::Verify {
            input,
            bound,
            format,
        } => {
            if bound < 1 {
                return fail(ErrorDoc::input(format!(
                    "truncation bound must be positive, got {bound}"
                )));
            }
            match read_polytope(&input) {
                Ok(p) => finish(job::run_verify(&p, bound, format.into())),
                Err(doc) => fail(doc),
            }
        }
    }
}
