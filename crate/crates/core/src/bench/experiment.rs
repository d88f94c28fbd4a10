use std::time::Instant;

use rayon::prelude::*;

use super::ExperimentRecord;
use crate::instances::{Family, GeneratorSpec};
use crate::instrumentation::ComparisonLedger;
use crate::model::Instance;
use crate::rng::derive_seed;
use crate::solvers::{brute_force_solve, mitm_solve, Algorithm, SolveResult, SolverConfig};
use crate::Error;

/// Runs `algo` on `instance` against `ledger`. DP is uninstrumented and leaves the ledger untouched.
pub fn solve_with(
    algo: Algorithm,
    instance: &Instance,
    ledger: &mut ComparisonLedger,
    config: &SolverConfig,
) -> Result<SolveResult, Error> {
    match algo {
        Algorithm::Brute => brute_force_solve(instance, ledger, config),
        Algorithm::Mitm => mitm_solve(instance, ledger, config),
        Algorithm::Dp => Ok(SolveResult {
            solution: crate::solvers::dp_solve(instance, config)?,
            stats: ledger.stats(),
            encoding: crate::Encoding::Direct,
        }),
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub algo: Algorithm,
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub step: usize,
    pub trials: u64,
    pub seed: u64,
    pub planted_size: Option<usize>,
    pub solver: SolverConfig,
    /// Worker threads; 1 runs trials sequentially.
    pub threads: usize,
}

#[derive(Clone, Debug, Default)]
pub struct ExperimentOutput {
    /// Sorted by (n, trial).
    pub records: Vec<ExperimentRecord>,
    /// One message per skipped (n, trial).
    pub warnings: Vec<String>,
}

/// One row per `(n, trial)` for `n = n_min, n_min + step, ..., ≤ n_max`.
/// Rows whose run is refused are skipped with a warning.
pub fn run_scaling_experiment(config: &ExperimentConfig) -> Result<ExperimentOutput, Error> {
    if config.step == 0 {
        return Err(Error::Format("step must be at least 1".into()));
    }
    if config.algo == Algorithm::Dp {
        return Err(Error::Format(
            "dp is not instrumented; bench brute or mitm".into(),
        ));
    }
    let jobs: Vec<(usize, u64)> = (config.n_min..=config.n_max)
        .step_by(config.step)
        .flat_map(|n| (0..config.trials).map(move |t| (n, t)))
        .collect();

    let run = |&(n, trial): &(usize, u64)| -> Result<ExperimentRecord, String> {
        let seed = derive_seed(config.seed, n as u64, trial);
        let spec = GeneratorSpec {
            family: config.family,
            n,
            seed,
            planted_size: config.planted_size,
        };
        let skip = |e: Error| format!("skipping n={n} trial={trial}: {e}");
        let generated = spec.generate().map_err(skip)?;
        let mut ledger = ComparisonLedger::counters_only();
        let start = Instant::now();
        let result = solve_with(
            config.algo,
            &generated.instance,
            &mut ledger,
            &config.solver,
        )
        .map_err(skip)?;
        let wall_time = start.elapsed().as_secs_f64();
        Ok(ExperimentRecord {
            n: n as u64,
            family: config.family.name().to_string(),
            algo: config.algo.name().to_string(),
            seed,
            trial,
            gamma_count: result.stats.gamma_count,
            peak_sorted_len: result.stats.peak_sorted_len,
            elementary_ops: result.stats.elementary_ops,
            wall_time,
        })
    };

    let outcomes: Vec<Result<ExperimentRecord, String>> = if config.threads <= 1 {
        jobs.iter().map(run).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::Format(e.to_string()))?;
        pool.install(|| jobs.par_iter().map(run).collect())
    };

    let mut output = ExperimentOutput::default();
    for outcome in outcomes {
        match outcome {
            Ok(rec) => output.records.push(rec),
            Err(warning) => output.warnings.push(warning),
        }
    }
    output.records.sort_by_key(|r| (r.n, r.trial));
    Ok(output)
}
