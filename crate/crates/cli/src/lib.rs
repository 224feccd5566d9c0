//! File formats, fixtures, reports and the command line for `folkdyn`.

pub mod cli;
pub mod config;
mod error;
pub mod fixture;
pub mod logfile;
pub mod parallel;
pub mod report;

pub use error::{Error, Result};
