//! Command-line front end: verification suites and one-shot computations.

pub mod commands;
pub mod report;
pub mod suites;

pub use commands::run;
