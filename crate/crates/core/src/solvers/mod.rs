//! Exact solvers. Each returns the first solution its enumeration order reaches.

mod brute;
mod dp;
mod mitm;

pub use brute::brute_force_solve;
pub use dp::dp_solve;
pub use mitm::{build_lists, half_sums, mitm_solve, Half, HalfSumEntry, KeyedEntry, SortedLists};

use crate::instrumentation::{Encoding, LedgerStats};
use crate::model::SubsetMask;

/// Refusal thresholds. Exceeding one is an error, never a truncated search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest n brute force will enumerate.
    pub brute_max_n: usize,
    /// Largest n meet-in-the-middle will accept.
    pub mitm_max_n: usize,
    /// Largest half-sum list meet-in-the-middle will materialize.
    pub max_half_entries: u64,
    /// Largest reachable-sum span the DP table may cover.
    pub dp_max_range: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            brute_max_n: 30,
            mitm_max_n: 50,
            max_half_entries: 1 << 26,
            dp_max_range: 10_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub solution: Option<SubsetMask>,
    pub stats: LedgerStats,
    /// How the solver's compared operands map to (subset-sum, target).
    pub encoding: Encoding,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Brute,
    Mitm,
    Dp,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Mitm => "mitm",
            Algorithm::Dp => "dp",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Algorithm::Brute),
            "mitm" => Ok(Algorithm::Mitm),
            "dp" => Ok(Algorithm::Dp),
            _ => Err(crate::Error::Format(format!("unknown algorithm {s:?}"))),
        }
    }
}
