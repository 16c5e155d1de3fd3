//! File format, structured output and command dispatch for the `geodom`
//! command-line tool.

pub mod commands;
pub mod format;

pub use commands::{run, Output};
pub use format::{emit_graph, parse_graph, ParseError};
