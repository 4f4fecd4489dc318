//! Library side of the `ncoh` command-line tool: argument schema, parameter
//! parsing, command implementations, and serialization. The binary in
//! `main.rs` is a thin dispatcher over these.

pub mod args;
pub mod commands;
pub mod output;
pub mod params;

/// Exit status conventions: 0 = success / all expectations met,
/// 1 = expectation mismatch or axiom failure, 2 = usage error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Mismatch,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Mismatch => 1,
        }
    }
}

/// A user-facing error (bad flags, malformed parameter files); exits 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for UsageError {}

impl From<ncoh::FieldError> for UsageError {
    fn from(e: ncoh::FieldError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<ncoh::AlgebraError> for UsageError {
    fn from(e: ncoh::AlgebraError) -> Self {
        UsageError(e.to_string())
    }
}

impl From<std::io::Error> for UsageError {
    fn from(e: std::io::Error) -> Self {
        UsageError(e.to_string())
    }
}
