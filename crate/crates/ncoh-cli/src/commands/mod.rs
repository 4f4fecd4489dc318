//! Subcommand implementations. Each returns the process outcome, with usage
//! problems reported as `UsageError` (exit 2).

pub mod cohomology;
pub mod extensions;
pub mod matrix;
pub mod restricted;
pub mod sweep;
pub mod verify;
