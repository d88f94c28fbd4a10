//! Comparison ledger, trace events and the checks run over measured solves.
//!
//! A γ-comparison here is one explicit call to [`ComparisonLedger::record_compare`]
//! made by one of our solvers. Solvers that compare a transformed pair declare the
//! one-to-one [`Encoding`] they use, and [`lemma3_check`] decodes operands with it.
//!
//! Charging model for `elementary_ops` (T):
//!
//! | event                         | charge              |
//! |-------------------------------|---------------------|
//! | γ-comparison                  | 1                   |
//! | candidate / half sum produced | 1 each              |
//! | sorted list of length k built | k                   |
//! | sort of k items               | ⌈k·log₂k⌉           |

use std::cmp::Ordering;
use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::bench::ExperimentRecord;
use crate::model::{parse_decimal, Instance, SubsetMask};
use crate::Error;

/// Largest instance a [`TraceMode::FullTrace`] run accepts.
pub const FULL_TRACE_MAX_N: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Equal,
    LhsLess,
    LhsGreater,
}

impl Outcome {
    pub fn of<T: Ord + ?Sized>(lhs: &T, rhs: &T) -> Self {
        lhs.cmp(rhs).into()
    }

    fn tag(self) -> &'static str {
        match self {
            Outcome::Equal => "EQ",
            Outcome::LhsLess => "LT",
            Outcome::LhsGreater => "GT",
        }
    }
}

impl From<Ordering> for Outcome {
    fn from(ord: Ordering) -> Self {
        match ord {
            Ordering::Equal => Outcome::Equal,
            Ordering::Less => Outcome::LhsLess,
            Ordering::Greater => Outcome::LhsGreater,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    Compare {
        lhs: BigInt,
        rhs: BigInt,
        outcome: Outcome,
    },
    SortedListBuilt {
        length: u64,
    },
    Emit {
        mask: SubsetMask,
    },
}

/// One line of the trace dump: `CMP <lhs> <rhs> <EQ|LT|GT>`, `LIST <len>` or `EMIT <mask-hex>`.
impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Compare { lhs, rhs, outcome } => {
                write!(f, "CMP {lhs} {rhs} {}", outcome.tag())
            }
            TraceEvent::SortedListBuilt { length } => write!(f, "LIST {length}"),
            TraceEvent::Emit { mask } => write!(f, "EMIT {}", mask.to_hex()),
        }
    }
}

impl FromStr for TraceEvent {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedTrace(format!("unrecognized line {line:?}"));
        let fields: Vec<&str> = line.split(' ').collect();
        match fields.as_slice() {
            ["CMP", lhs, rhs, tag] => {
                let outcome = match *tag {
                    "EQ" => Outcome::Equal,
                    "LT" => Outcome::LhsLess,
                    "GT" => Outcome::LhsGreater,
                    _ => return Err(bad()),
                };
                Ok(TraceEvent::Compare {
                    lhs: parse_decimal(lhs)?,
                    rhs: parse_decimal(rhs)?,
                    outcome,
                })
            }
            ["LIST", len] => Ok(TraceEvent::SortedListBuilt {
                length: len.parse().map_err(|_| bad())?,
            }),
            ["EMIT", hex] => Ok(TraceEvent::Emit {
                mask: SubsetMask::from_hex(hex)?,
            }),
            _ => Err(bad()),
        }
    }
}

pub fn write_trace<W: Write>(mut out: W, events: &[TraceEvent]) -> io::Result<()> {
    for event in events {
        writeln!(out, "{event}")?;
    }
    out.flush()
}

pub fn read_trace<R: BufRead>(input: R) -> Result<Vec<TraceEvent>, Error> {
    let mut events = Vec::new();
    for line in input.lines() {
        let line = line?;
        if !line.is_empty() {
            events.push(line.parse()?);
        }
    }
    Ok(events)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TraceMode {
    #[default]
    CountersOnly,
    FullTrace,
}

/// Counter snapshot of a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LedgerStats {
    /// C: number of γ-comparisons.
    pub gamma_count: u64,
    /// M: longest sorted list built, never below 1.
    pub peak_sorted_len: u64,
    /// T: charged elementary operations.
    pub elementary_ops: u64,
}

/// Single-writer counters for one solver run.
#[derive(Clone, Debug, Default)]
pub struct ComparisonLedger {
    mode: TraceMode,
    gamma_count: u64,
    peak_sorted_len: u64,
    elementary_ops: u64,
    trace: Vec<TraceEvent>,
}

impl ComparisonLedger {
    pub fn new(mode: TraceMode) -> Self {
        Self {
            mode,
            ..Self::default()
        }
    }

    pub fn counters_only() -> Self {
        Self::new(TraceMode::CountersOnly)
    }

    pub fn full_trace() -> Self {
        Self::new(TraceMode::FullTrace)
    }

    pub fn mode(&self) -> TraceMode {
        self.mode
    }

    /// Refuses instances too large to trace when in full-trace mode.
    pub fn admit(&self, n: usize) -> Result<(), Error> {
        if self.mode == TraceMode::FullTrace && n > FULL_TRACE_MAX_N {
            return Err(Error::cap(
                "instance size under full trace",
                n,
                FULL_TRACE_MAX_N,
            ));
        }
        Ok(())
    }

    pub fn record_compare(&mut self, lhs: &BigInt, rhs: &BigInt) -> Outcome {
        let outcome = Outcome::of(lhs, rhs);
        self.gamma_count += 1;
        self.elementary_ops += 1;
        if self.mode == TraceMode::FullTrace {
            self.trace.push(TraceEvent::Compare {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                outcome,
            });
        }
        outcome
    }

    pub fn record_sorted_list(&mut self, length: u64) {
        self.peak_sorted_len = self.peak_sorted_len.max(length);
        self.elementary_ops += length;
        if self.mode == TraceMode::FullTrace {
            self.trace.push(TraceEvent::SortedListBuilt { length });
        }
    }

    /// Charges a comparison sort of `items` elements.
    pub fn record_sort(&mut self, items: u64) {
        self.elementary_ops += sort_cost(items);
    }

    /// Charges `count` produced candidate sums.
    pub fn record_generated(&mut self, count: u64) {
        self.elementary_ops += count;
    }

    pub fn record_emit(&mut self, mask: SubsetMask) {
        if self.mode == TraceMode::FullTrace {
            self.trace.push(TraceEvent::Emit { mask });
        }
    }

    pub fn gamma_count(&self) -> u64 {
        self.gamma_count
    }

    pub fn peak_sorted_len(&self) -> u64 {
        self.peak_sorted_len.max(1)
    }

    pub fn elementary_ops(&self) -> u64 {
        self.elementary_ops
    }

    pub fn stats(&self) -> LedgerStats {
        LedgerStats {
            gamma_count: self.gamma_count,
            peak_sorted_len: self.peak_sorted_len(),
            elementary_ops: self.elementary_ops,
        }
    }

    pub fn trace(&self) -> &[TraceEvent] {
        &self.trace
    }

    pub fn into_trace(self) -> Vec<TraceEvent> {
        self.trace
    }

    /// Folds a sub-ledger in after this one, as if its events had been recorded here.
    pub fn absorb(&mut self, other: ComparisonLedger) {
        self.gamma_count += other.gamma_count;
        self.elementary_ops += other.elementary_ops;
        self.peak_sorted_len = self.peak_sorted_len.max(other.peak_sorted_len);
        self.trace.extend(other.trace);
    }
}

/// ⌈k·log₂k⌉, zero for k ≤ 1.
pub fn sort_cost(k: u64) -> u64 {
    if k <= 1 {
        0
    } else if k.is_power_of_two() {
        k * u64::from(k.trailing_zeros())
    } else {
        (k as f64 * (k as f64).log2()).ceil() as u64
    }
}

/// How a solver's compared operand pair maps back to (subset-sum, target).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// `lhs` is the subset-sum, `rhs` the target.
    Direct,
    /// `lhs` is s⁺ and `rhs` is b − s⁻; the compared subset-sum is lhs + (b − rhs).
    SPlusVsBMinusSMinus,
}

impl Encoding {
    pub fn name(self) -> &'static str {
        match self {
            Encoding::Direct => "direct",
            Encoding::SPlusVsBMinusSMinus => "s_plus_vs_b_minus_s_minus",
        }
    }

    /// Maps a compared `(lhs, rhs)` back to the `(subset-sum, target)` pair it decides.
    pub fn decode(self, lhs: &BigInt, rhs: &BigInt, target: &BigInt) -> (BigInt, BigInt) {
        match self {
            Encoding::Direct => (lhs.clone(), rhs.clone()),
            Encoding::SPlusVsBMinusSMinus => (lhs + (target - rhs), target.clone()),
        }
    }
}

/// Every emitted mask must be preceded by an `Equal` comparison that, decoded
/// under `encoding`, compares that mask's subset-sum with the target.
pub fn lemma3_check(
    trace: &[TraceEvent],
    instance: &Instance,
    encoding: Encoding,
) -> Result<bool, Error> {
    let target = instance.target();
    for (pos, event) in trace.iter().enumerate() {
        let TraceEvent::Emit { mask } = event else {
            continue;
        };
        let sum = instance
            .subset_sum(*mask)
            .map_err(|e| Error::MalformedTrace(format!("event {pos}: {e}")))?;
        let witnessed = trace[..pos].iter().any(|prior| match prior {
            TraceEvent::Compare { lhs, rhs, outcome } => {
                *outcome == Outcome::Equal
                    && Outcome::of(lhs, rhs) == Outcome::Equal
                    && encoding.decode(lhs, rhs, target) == (sum.clone(), target.clone())
            }
            _ => false,
        });
        if !witnessed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-row outcome of the T ≥ M ≥ 1 and M·T ≥ 2ⁿ checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TradeoffRow {
    pub n: u64,
    pub m: u64,
    pub t: u64,
    pub t_ge_m_ge_1: bool,
    pub mt_ge_2n: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TradeoffReport {
    pub rows: Vec<TradeoffRow>,
    /// Row indices failing T ≥ M ≥ 1.
    pub ordering_violations: Vec<usize>,
    /// Row indices failing M·T ≥ 2ⁿ.
    pub product_violations: Vec<usize>,
}

impl TradeoffReport {
    pub fn is_clean(&self) -> bool {
        self.ordering_violations.is_empty() && self.product_violations.is_empty()
    }
}

pub fn tradeoff_row(n: u64, m: u64, t: u64) -> TradeoffRow {
    let product = BigUint::from(m) * BigUint::from(t);
    let bound = BigUint::one() << n;
    TradeoffRow {
        n,
        m,
        t,
        t_ge_m_ge_1: t >= m && m >= 1,
        mt_ge_2n: product >= bound,
    }
}

/// Checks the measured M and T of every record. An empirical check of these
/// runs only.
pub fn tradeoff_report(records: &[ExperimentRecord]) -> TradeoffReport {
    let mut report = TradeoffReport::default();
    for (i, rec) in records.iter().enumerate() {
        let row = tradeoff_row(rec.n, rec.peak_sorted_len, rec.elementary_ops);
        if !row.t_ge_m_ge_1 {
            report.ordering_violations.push(i);
        }
        if !row.mt_ge_2n {
            report.product_violations.push(i);
        }
        report.rows.push(row);
    }
    report
}
