//! Command-line surface for `acmkit-core`: argument parsing, file formats, and
//! the JSON report schema.
//!
//! Exit codes: 0 verdict printed, 2 parse/usage error, 3 route disagreement,
//! 4 domain violation, 5 verification failures.

pub mod commands;
pub mod format;
pub mod report;

pub use commands::{run, Cli, ExitStatus};
