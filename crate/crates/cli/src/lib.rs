//! Command-line front end: polynomial text input, rendering, JSON records
//! and the `qsymq` subcommands.

pub mod commands;
pub mod error;
pub mod output;
pub mod parse;
pub mod render;
pub mod verify;

pub use commands::run;
pub use error::CliError;
pub use output::OutputRecord;
pub use parse::{parse_polynomial, ParseError};
pub use render::{render_path, render_polynomial};
