//! File formats, parallel certificate runs and the `lyness` command line on
//! top of `lyness-core`.

pub mod cli;
pub mod csv;
pub mod report;
pub mod run;
