//! Front end of the `dpcodes` command: argument handling, the subcommands
//! and the acceptance suite behind `verify`.

pub mod acceptance;
pub mod commands;
pub mod config;

pub use commands::{run, Outcome};
pub use config::Cli;
