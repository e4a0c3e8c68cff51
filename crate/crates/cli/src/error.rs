use thiserror::Error;

use crate::workspace::Problem;

/// Everything that stops a command before a verdict; all map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}:{line}:{column}: parse error: {message}")]
    Parse {
        file: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Io(String),
    #[error("workspace rejected:\n{}", render(.0))]
    Invalid(Vec<Problem>),
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    Usage(String),
    #[error("shape mismatch: {0}")]
    Shape(#[from] hvdc_core::Error),
}

fn render(problems: &[Problem]) -> String {
    problems.iter().map(|p| format!("  {p}")).collect::<Vec<_>>().join("\n")
}

impl CliError {
    pub const EXIT_CODE: i32 = 2;
}
