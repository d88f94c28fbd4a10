//! Scaling experiments, CSV records, growth fits and the tradeoff report.

mod experiment;
mod fit;
mod record;
mod report;

pub use experiment::{run_scaling_experiment, solve_with, ExperimentConfig, ExperimentOutput};
pub use fit::{fit_growth, GrowthFit};
pub use record::{read_csv, write_csv, ExperimentRecord, CSV_HEADER};
pub use report::{build_report, GroupSummary, Report};
