//! Command-line front end: graph files in, reports and DOT out.

mod commands;
pub mod dot;
pub mod graph_file;
pub mod report;

pub use commands::{analysis_report, execute, Cli, Command, Output, ReportFormat};

use coxeter_fc::Error;

/// An error with the exit status it maps to: 1 for bad input, 2 for an
/// exhausted search budget.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub message: String,
    pub code: u8,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::DepthExceeded(_) => 2,
            _ => 1,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}
