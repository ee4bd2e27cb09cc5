//! Text, JSON and CSV front end for `jacobspin-core`.

pub mod cli;
pub mod output;
pub mod report;
