//! Exact SUBSET-SUM solving with instrumented comparison counts.
//!
//! The crate provides three exact solvers over arbitrary-precision integers
//! (ascending-mask brute force, the two-list meet-in-the-middle scan and a
//! pseudo-polynomial DP used as a cross-check), a ledger that counts every
//! equality-determining comparison a solver performs, seeded instance
//! generators and the benchmark/report machinery behind the `subsetsum` CLI.

pub mod bench;
pub mod instances;
pub mod instrumentation;
pub mod model;
pub mod rng;
pub mod solvers;

pub use instrumentation::{
    ComparisonLedger, Encoding, LedgerStats, Outcome, TraceEvent, TraceMode,
};
pub use model::{Instance, SubsetMask};
pub use solvers::{SolveResult, SolverConfig};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mask {mask} selects indices outside an instance of size {n}")]
    InvalidMask { mask: SubsetMask, n: usize },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("malformed trace: {0}")]
    MalformedTrace(String),

    #[error("refusing: {what} is {actual}, above the configured cap of {cap}")]
    CapExceeded {
        what: &'static str,
        actual: String,
        cap: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn cap(what: &'static str, actual: impl ToString, cap: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            actual: actual.to_string(),
            cap: cap.to_string(),
        }
    }
}
