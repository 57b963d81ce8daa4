//! File formats, the built-in corpus, reports and command dispatch for the
//! `maxinv` binary.

pub mod census;
pub mod commands;
pub mod corpus;
pub mod format;
pub mod report;

pub use commands::{run, Outcome};
