//! Benchmark and verification harness for `toom-core`.
//!
//! The `toombench` binary is a thin wrapper over [`cli::run`].

pub mod bench;
pub mod cli;
pub mod error;
pub mod operands;
pub mod record;
pub mod selftest;
pub mod slope;

pub use bench::{run_bench, BenchOptions, BenchReport};
pub use error::{BenchError, Result};
pub use record::{Algorithm, BenchRecord};
pub use slope::{fit_records, fit_slope, SlopeEstimate};
