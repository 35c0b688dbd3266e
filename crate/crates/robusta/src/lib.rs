//! Files, command line and parallel drivers for `robusta-core`.

pub mod budget;
pub mod cli;
pub mod corpus;
pub mod formats;
pub mod parallel;
pub mod report;
pub mod reproduce;
