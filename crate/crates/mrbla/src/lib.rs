//! JSON documents and the `mrbla` command-line tool.

pub mod cli;
pub mod document;
