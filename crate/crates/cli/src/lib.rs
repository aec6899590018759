//! The `ginv` command-line tool.
//!
//! Matrices travel as JSON documents whose entries are exact scalar tokens;
//! every command writes a JSON report. Exit codes:
//!
//! | code | meaning                                          |
//! |------|--------------------------------------------------|
//! | 0    | success, every check holds                       |
//! | 1    | domain failure or failed verification            |
//! | 2    | input error (unreadable file, bad token, shape)  |
//! | 3    | usage error (unknown kind, missing operand)      |

pub mod command;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

pub use command::{execute_command, Command, CommandRequest, Inputs, KindName};
pub use document::{emit_matrix, parse_document, MatrixPayload};
pub use report::{emit_document, parse_report, ReportDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("usage error: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_INPUT,
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> CliError {
        let path = path.display();
        match self {
            CliError::Parse { location, message } => CliError::Parse {
                location: format!("{path}, {location}"),
                message,
            },
            CliError::Dimension(msg) => CliError::Dimension(format!("{path}: {msg}")),
            other => other,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ginv", version, about = "Exact generalized inverses over the Gaussian rationals")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Compute an inverse and verify it against its defining equations
    Compute {
        #[command(flatten)]
        operands: Operands,
    },
    /// Check a candidate inverse against the defining equations of a kind
    Verify {
        #[command(flatten)]
        operands: Operands,
        /// Candidate inverse document
        #[arg(long, value_name = "PATH")]
        candidate: PathBuf,
    },
    /// Split a square matrix into core and nilpotent parts
    Decompose {
        /// Input matrix document
        #[arg(long, value_name = "PATH")]
        a: PathBuf,
        /// Write the report here instead of standard output
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct Operands {
    #[arg(long, value_enum)]
    kind: KindName,
    /// Input matrix document
    #[arg(long, value_name = "PATH")]
    a: PathBuf,
    /// b of the (b,c) pair
    #[arg(long, value_name = "PATH")]
    b: Option<PathBuf>,
    /// c of the (b,c) pair
    #[arg(long, value_name = "PATH")]
    c: Option<PathBuf>,
    /// Generator whose image is the prescribed image T
    #[arg(long, value_name = "PATH")]
    t: Option<PathBuf>,
    /// Generator whose kernel is the prescribed kernel S
    #[arg(long, value_name = "PATH")]
    s: Option<PathBuf>,
    /// Write the report here instead of standard output
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Operands {
    fn into_request(self, command: Command, candidate: Option<PathBuf>) -> CommandRequest {
        CommandRequest {
            command,
            kind: Some(self.kind),
            inputs: Inputs {
                a: self.a,
                b: self.b,
                c: self.c,
                t: self.t,
                s: self.s,
                candidate,
            },
            out: self.out,
        }
    }
}

fn request_from(cli: Cli) -> CommandRequest {
    match cli.command {
        Sub::Compute { operands } => operands.into_request(Command::Compute, None),
        Sub::Verify { operands, candidate } => operands.into_request(Command::Verify, Some(candidate)),
        Sub::Decompose { a, out } => CommandRequest {
            command: Command::Decompose,
            kind: None,
            inputs: Inputs { a, ..Inputs::default() },
            out,
        },
    }
}

fn write_report(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io {
                    path: "<stdout>".into(),
                    message: e.to_string(),
                })
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let req = request_from(cli);

    let outcome = execute_command(&req).and_then(|report| {
        write_report(req.out.as_deref(), &emit_document(&report))?;
        Ok(report)
    });
    match outcome {
        Ok(report) if report.ok => EXIT_OK,
        Ok(report) => {
            if let Some(reason) = &report.reason {
                eprintln!("ginv: {reason}");
            }
            EXIT_FAILURE
        }
        Err(e) => {
            eprintln!("ginv: {e}");
            e.exit_code()
        }
    }
}
