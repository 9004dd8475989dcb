//! Structure files, commands and reports behind the `hopfpi` binary.

pub mod commands;
pub mod error;
pub mod examples;
pub mod model;
pub mod output;
