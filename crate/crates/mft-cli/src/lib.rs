//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the exit status together with the text for stdout and stderr, so the
//! binary and the tests share one code path.
//!
//! Exit status: 0 success, 2 domain error, 3 numeric tolerance not met,
//! 64 usage error.

mod args;
mod commands;

use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use mft_quartic::Spectrum;
use serde_json::{json, Value};
use thiserror::Error;

pub use args::Cli;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Numeric(String),
    /// A result was produced but a check failed; the payload is still printed.
    #[error("{message}")]
    Tolerance { message: String, output: Box<Value> },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Numeric(_) | CliError::Tolerance { .. } => EXIT_NUMERIC,
        }
    }
}

impl From<mft_kontsevich::KontsevichError> for CliError {
    fn from(e: mft_kontsevich::KontsevichError) -> Self {
        use mft_kontsevich::KontsevichError::*;
        match e {
            Consistency(_) | Extraction(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<mft_cubic::CubicError> for CliError {
    fn from(e: mft_cubic::CubicError) -> Self {
        match e {
            mft_cubic::CubicError::Numeric(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<mft_catalan::CatalanError> for CliError {
    fn from(e: mft_catalan::CatalanError) -> Self {
        match e {
            mft_catalan::CatalanError::Invariant(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<mft_quartic::QuarticError> for CliError {
    fn from(e: mft_quartic::QuarticError) -> Self {
        use mft_quartic::QuarticError::*;
        match e {
            OutsideNeighbourhood { .. } | RootValidation(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<mft_moyal4::Moyal4Error> for CliError {
    fn from(e: mft_moyal4::Moyal4Error) -> Self {
        match e {
            mft_moyal4::Moyal4Error::Numeric(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a command produced: a JSON document or raw text (DOT, listings).
pub(crate) enum Output {
    Json(Value),
    Text(String),
}

/// Settings shared by all subcommands.
#[derive(Clone, Copy, Debug)]
pub(crate) struct RunConfig {
    pub seed: u64,
    pub tol: f64,
    pub threads: usize,
}

impl RunConfig {
    fn wrap(&self, command: &str, result: Value) -> Value {
        json!({
            "tool_version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "seed": self.seed,
            "threads": self.threads,
            "tolerances": {"check": self.tol},
            "result": result,
        })
    }
}

/// Worker cap from `MFT_THREADS`. Computations are currently sequential,
/// so the value is only validated and recorded.
fn threads_from_env() -> Result<usize, String> {
    match std::env::var("MFT_THREADS") {
        Err(_) => Ok(1),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(format!("MFT_THREADS must be a positive integer, got {s:?}")),
        },
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let threads = match threads_from_env() {
        Ok(n) => n,
        Err(m) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {m}\n") },
    };
    if !(cli.tol > 0.0) {
        return Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: invalid value '{}' for '--tol': must be positive\n", cli.tol),
        };
    }
    let cfg = RunConfig { seed: cli.seed, tol: cli.tol, threads };
    let (name, res) = commands::dispatch(&cli.command, &cfg);
    let render = |v: &Value| serde_json::to_string_pretty(&cfg.wrap(&name, v.clone())).unwrap() + "\n";
    match res {
        Ok(Output::Json(v)) => Outcome { code: EXIT_OK, stdout: render(&v), stderr: String::new() },
        Ok(Output::Text(t)) => Outcome { code: EXIT_OK, stdout: t, stderr: String::new() },
        Err(CliError::Tolerance { message, output }) => {
            Outcome { code: EXIT_NUMERIC, stdout: render(&output), stderr: format!("error: {message}\n") }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

/// Reads and validates a spectrum file. Schema errors name the field path.
pub fn load_spectrum(path: &Path) -> Result<Spectrum, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_spectrum(&text)
}

pub fn parse_spectrum(text: &str) -> Result<Spectrum, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let s: Spectrum = serde_path_to_error::deserialize(de)
        .map_err(|e| CliError::Domain(format!("spectrum schema violation at {}: {}", e.path(), e.inner())))?;
    s.validate()?;
    Ok(s)
}

/// Canonical file form: pretty JSON with a trailing newline.
pub fn spectrum_to_string(s: &Spectrum) -> String {
    serde_json::to_string_pretty(s).expect("spectrum serialises") + "\n"
}
