//! Verification front end for the teleportation library: dimension audits,
//! single protocol traces, randomized sweeps and the impossibility demo.

pub mod commands;
pub mod complex;
pub mod report;
pub mod sweep;

pub use commands::{build_report, Command, CliError, RunConfig};
pub use report::{Format, TeleportReport};
