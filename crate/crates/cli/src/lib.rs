//! Command-line front end for `knet-core`: commands, projective planes from
//! Latin squares, and SVG rendering.

pub mod commands;
pub mod params;
pub mod plane;
pub mod render;

pub use commands::{run, Cli, CliError, Output};
