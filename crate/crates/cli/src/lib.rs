//! Command-line front end: a small file format for presentations, and the
//! `groebner`, `bernstein`, `invariants`, `verify` and `kolchin` commands.

pub mod app;
pub mod parse;

pub use app::{execute, Cli, CliError, Command, JsonReport};
pub use parse::{parse, print, ParseError};
