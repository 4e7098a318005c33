//! CLI failure modes and their process exit codes.

use std::fmt;

/// Exit code for configuration and parameter errors.
pub const EXIT_USAGE: u8 = 2;
/// Exit code for numerical convergence or accuracy failures in the oracle.
pub const EXIT_NUMERICAL: u8 = 3;

/// Everything that aborts a run before a report can be printed.
///
/// Verification *failures* are not errors: `verify` still prints its full
/// report and the process signals the failure through exit status 1.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad flags, bad config file, or invalid parameter combinations.
    Usage(String),
    /// An error surfaced by the solver or the oracle.
    Lib(radial2d::Error),
}

impl CliError {
    /// Short machine-parsable code printed as `error[<code>]: <message>`.
    #[must_use]
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Lib(err) => match err {
                radial2d::Error::NoBoundState { .. } => "no-bound-state",
                radial2d::Error::Convergence { .. } => "convergence",
                radial2d::Error::Accuracy { .. } => "accuracy",
                // Parameter and domain violations reaching the library are
                // still the caller's input problem.
                _ => "usage",
            },
        }
    }

    /// Process exit status: 2 for usage-class errors, 3 for numerical ones.
    #[must_use]
    pub fn exit_code(&self) -> u8 {
        match self.code() {
            "convergence" | "accuracy" => EXIT_NUMERICAL,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Lib(err) => write!(f, "{err}"),
        }
    }
}

impl From<radial2d::Error> for CliError {
    fn from(err: radial2d::Error) -> Self {
        CliError::Lib(err)
    }
}
