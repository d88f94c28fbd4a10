use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use super::{fit_growth, ExperimentRecord, GrowthFit};
use crate::instrumentation::{tradeoff_report, TradeoffReport};
use crate::Error;

/// Minimum number of distinct n per (algo, family) group.
pub const MIN_DISTINCT_N: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct GroupSummary {
    pub algo: String,
    pub family: String,
    pub rows: usize,
    /// log₂(T) against n.
    pub ops_fit: GrowthFit,
    /// log₂(C) against n.
    pub compare_fit: GrowthFit,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub groups: Vec<GroupSummary>,
    pub tradeoff: TradeoffReport,
}

impl Report {
    /// Only T ≥ M ≥ 1 failures are fatal; M·T ≥ 2ⁿ is asymptotic and merely reported.
    pub fn has_violation(&self) -> bool {
        !self.tradeoff.ordering_violations.is_empty()
    }

    pub fn render(&self, records: &[ExperimentRecord]) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<8} {:<8} {:>5} {:>9} {:>9} {:>9} {:>9}",
            "algo", "family", "rows", "C-slope", "C-resid", "T-slope", "T-resid"
        );
        for g in &self.groups {
            let _ = writeln!(
                out,
                "{:<8} {:<8} {:>5} {:>9.4} {:>9.4} {:>9.4} {:>9.4}",
                g.algo,
                g.family,
                g.rows,
                g.compare_fit.slope,
                g.compare_fit.residual,
                g.ops_fit.slope,
                g.ops_fit.residual
            );
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "{:<8} {:<8} {:>4} {:>6} {:>14} {:>14} {:>14} {:>7} {:>7}",
            "algo", "family", "n", "trial", "C", "M", "T", "T>=M>=1", "MT>=2^n"
        );
        for (rec, row) in records.iter().zip(&self.tradeoff.rows) {
            let _ = writeln!(
                out,
                "{:<8} {:<8} {:>4} {:>6} {:>14} {:>14} {:>14} {:>7} {:>7}",
                rec.algo,
                rec.family,
                rec.n,
                rec.trial,
                rec.gamma_count,
                rec.peak_sorted_len,
                rec.elementary_ops,
                yes_no(row.t_ge_m_ge_1),
                yes_no(row.mt_ge_2n)
            );
        }
        out.push('\n');
        let _ = writeln!(
            out,
            "T >= M >= 1 violations: {}",
            self.tradeoff.ordering_violations.len()
        );
        let _ = writeln!(
            out,
            "M*T >= 2^n shortfalls: {}",
            self.tradeoff.product_violations.len()
        );
        out
    }
}

fn yes_no(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn build_report(records: &[ExperimentRecord]) -> Result<Report, Error> {
    if records.is_empty() {
        return Err(Error::Format("no rows to report on".into()));
    }
    let mut groups: BTreeMap<(&str, &str), Vec<&ExperimentRecord>> = BTreeMap::new();
    for rec in records {
        groups
            .entry((&rec.algo, &rec.family))
            .or_default()
            .push(rec);
    }

    let mut summaries = Vec::new();
    for ((algo, family), rows) in groups {
        let distinct: BTreeSet<u64> = rows.iter().map(|r| r.n).collect();
        if distinct.len() < MIN_DISTINCT_N {
            return Err(Error::Format(format!(
                "group {algo}/{family} has {} distinct n, need at least {MIN_DISTINCT_N}",
                distinct.len()
            )));
        }
        let log_points =
            |value: fn(&ExperimentRecord) -> u64, name: &str| -> Result<Vec<(f64, f64)>, Error> {
                rows.iter()
                    .map(|r| match value(r) {
                        0 => Err(Error::Format(format!(
                            "{algo}/{family} n={}: {name} is 0, log undefined",
                            r.n
                        ))),
                        v => Ok((r.n as f64, (v as f64).log2())),
                    })
                    .collect()
            };
        summaries.push(GroupSummary {
            algo: algo.to_string(),
            family: family.to_string(),
            rows: rows.len(),
            ops_fit: fit_growth(&log_points(|r| r.elementary_ops, "T")?)?,
            compare_fit: fit_growth(&log_points(|r| r.gamma_count, "C")?)?,
        });
    }

    Ok(Report {
        groups: summaries,
        tradeoff: tradeoff_report(records),
    })
}
