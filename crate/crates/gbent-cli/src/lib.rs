//! Command-line surface for the `gbent-core` library: record parsing and
//! printing, machine-readable reports, and the self-verification suite.
//!
//! The binary target (`gbent`) is a thin dispatcher over this crate so that
//! integration tests can drive every piece directly.

pub mod record;
pub mod report;
pub mod verify;

pub use record::{CliError, FunctionRecord};
pub use report::{AnalyzeReport, ClassEntry, ClassificationReport, DecompositionReport};
pub use verify::{run_all, Outcome};

/// Exit code for malformed input or unsupported parameters.
pub const EXIT_INVALID_INPUT: i32 = 2;
/// Exit code when an input fails a mathematical precondition.
pub const EXIT_PROPERTY_VIOLATION: i32 = 3;
/// Exit code when a request exceeds the supported scale.
pub const EXIT_UNSUPPORTED_SCALE: i32 = 4;
