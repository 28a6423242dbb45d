//! Command-line front end for the `wcop` library: scenario ingestion,
//! identity verification, and canonical machine-readable reports.

pub mod canon;
pub mod cli;
pub mod run;
pub mod scenario_file;

pub use run::main_entry;
