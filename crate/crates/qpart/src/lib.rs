//! Command-line front end for `qpart-core`: report timing, output formats
//! and argument handling.

pub mod cli;
pub mod format;
pub mod report;

pub use qpart_core as core;
