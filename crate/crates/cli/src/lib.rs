//! Command-line front end for `trinv`.
//!
//! [`run_command`] takes the full argv (program name first) and returns
//! what the process should print and its exit status, so the binary is a
//! thin wrapper and tests can drive every command in-process.
//!
//! Structured output is one JSON document per invocation:
//!
//! ```json
//! {"command": "classify", "result": {...}, "status": "ok"}
//! ```
//!
//! Keys are sorted and polynomials are rendered in the canonical term
//! order, so identical inputs give byte-identical output.

pub mod commands;
pub mod parse;

use clap::Parser;
use serde_json::{json, Value};
use thiserror::Error;
use trinv::algebra::AlgebraError;
use trinv::autmap::MapError;
use trinv::canon::CanonError;
use trinv::census::CensusError;

pub use commands::{Cli, Command, OutputMode};
pub use parse::{parse_field_tag, parse_map, parse_poly, MapSource, ParseError, VarContext};

/// Environment variable capping the number of maps a census may enumerate.
pub const BUDGET_ENV: &str = "TRINV_CENSUS_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("algebra error: {0}")]
    Algebra(AlgebraError),
    #[error("{0}")]
    NotTriangular(MapError),
    #[error("map is not an involution")]
    NotInvolution,
    #[error("fixed-ring error: {0}")]
    FixedRing(CanonError),
    #[error("{0}")]
    Budget(CensusError),
    #[error("the brute-force commands require the prime field gf2")]
    FieldNotPrime,
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    NotInvertible(MapError),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Algebra(_) => 4,
            CliError::NotTriangular(_) => 5,
            CliError::NotInvolution => 6,
            CliError::FixedRing(_) => 7,
            CliError::Budget(_) => 8,
            CliError::FieldNotPrime => 9,
            CliError::Io(_) => 10,
            CliError::NotInvertible(_) => 11,
            CliError::Internal(_) => 70,
        }
    }

    /// Stable machine-readable name of the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Algebra(_) => "algebra",
            CliError::NotTriangular(_) => "not_triangular",
            CliError::NotInvolution => "not_involution",
            CliError::FixedRing(_) => "fixed_ring",
            CliError::Budget(_) => "budget_exceeded",
            CliError::FieldNotPrime => "field_not_prime",
            CliError::Io(_) => "io",
            CliError::NotInvertible(_) => "not_invertible",
            CliError::Internal(_) => "internal_invariant_violation",
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Algebra(e)
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::Algebra(a) => CliError::Algebra(a),
            MapError::NotTriangular { .. } => CliError::NotTriangular(e),
            MapError::NotInvertible => CliError::NotInvertible(e),
        }
    }
}

impl From<CanonError> for CliError {
    fn from(e: CanonError) -> Self {
        match e {
            CanonError::Algebra(a) => CliError::Algebra(a),
            CanonError::Map(m) => m.into(),
            CanonError::NotInvolution => CliError::NotInvolution,
            CanonError::InternalInvariantViolation(msg) => CliError::Internal(msg),
            other => CliError::FixedRing(other),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::BudgetExceeded { .. } | CensusError::DegreeTooLarge(_) => CliError::Budget(e),
            CensusError::FieldNotPrime => CliError::FieldNotPrime,
            CensusError::Map(m) => m.into(),
            CensusError::Algebra(a) => CliError::Algebra(a),
            CensusError::Canon(c) => c.into(),
        }
    }
}

/// What a command produced: a result document, plus an error when the
/// command failed. A census with failures carries both.
#[derive(Debug)]
pub struct Outcome {
    pub result: Option<Value>,
    pub text: String,
    pub error: Option<CliError>,
}

/// What the process should do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// Parses `argv` and runs the command. Never panics on bad input; every
/// failure maps to an exit status via [`CliError::exit_code`].
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            return if code == 0 {
                Output {
                    stdout: rendered,
                    stderr: String::new(),
                    exit_code: 0,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: rendered,
                    exit_code: CliError::Usage(String::new()).exit_code(),
                }
            };
        }
    };
    let mode = cli.output;
    let name = cli.command.name();
    let outcome = commands::execute(&cli);
    render(name, mode, outcome)
}

fn render(command: &str, mode: OutputMode, outcome: Outcome) -> Output {
    let exit_code = outcome.error.as_ref().map_or(0, CliError::exit_code);
    match mode {
        OutputMode::Structured => {
            let mut doc = json!({
                "command": command,
                "status": outcome.error.as_ref().map_or("ok", |_| "error"),
            });
            if let Some(result) = outcome.result {
                doc["result"] = result;
            }
            if let Some(e) = &outcome.error {
                doc["error"] = json!({
                    "code": e.exit_code(),
                    "kind": e.kind(),
                    "message": e.to_string(),
                });
            }
            Output {
                stdout: to_canonical_json(&doc),
                stderr: String::new(),
                exit_code,
            }
        }
        OutputMode::Text => Output {
            stdout: outcome.text,
            stderr: outcome
                .error
                .map(|e| format!("error[{}]: {e}\n", e.kind()))
                .unwrap_or_default(),
            exit_code,
        },
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_json(doc: &Value) -> String {
    // serde_json's default map is a BTreeMap, so keys come out sorted
    let mut s = serde_json::to_string_pretty(doc).expect("values are always serializable");
    s.push('\n');
    s
}
