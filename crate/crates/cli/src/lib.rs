//! Command-line front end: bound reports, the improvement tables, design
//! constructions, verification and exact search.

pub mod commands;
pub mod render;
pub mod tables;

pub use commands::{configure_threads, run, Cli, EXIT_BUDGET, EXIT_OK, EXIT_SOUNDNESS, EXIT_USAGE};
