//! Command-line front end for `compoundlab`: matrix files, determinant
//! strategies, compounds, kernels, verification suites and the benchmark.

pub mod bench;
pub mod commands;
pub mod error;
pub mod io;
pub mod verify;

pub use error::CliError;
