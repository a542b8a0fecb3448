//! Command-line front end for `qal-core`: argument parsing, JSON/CSV/table
//! output, presentation and element file formats, and Graphviz export.

pub mod cli;
pub mod dot;
pub mod io;
pub mod output;
