use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use subsetsum::bench::{self, ExperimentConfig};
use subsetsum::instances::{Family, GeneratorSpec};
use subsetsum::instrumentation::write_trace;
use subsetsum::solvers::{Algorithm, SolverConfig};
use subsetsum::{ComparisonLedger, Instance, SubsetMask, TraceMode};

const FOUND: u8 = 0;
const NOT_FOUND: u8 = 1;
const FAILURE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "subsetsum",
    version,
    about = "Exact SUBSET-SUM solvers with comparison counting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file and its metadata sidecar
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Planted subset size (planted family only; default n/2)
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance and print the solution and counters
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "mitm")]
        algo: Algorithm,
        /// Write a full event trace (n <= 24 only)
        #[arg(long)]
        trace: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run a scaling experiment and write one CSV row per (n, trial)
    Bench {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        step: usize,
        #[arg(long, default_value_t = 1)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        out: PathBuf,
        /// Replace an existing output file
        #[arg(long)]
        force: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        caps: Caps,
    },
    /// Fit growth exponents and check T >= M >= 1 and M*T >= 2^n on a bench CSV
    Report { csv: PathBuf },
    /// Check whether a mask (hex) solves an instance
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        mask: String,
    },
}

#[derive(Args)]
struct Caps {
    #[arg(long, default_value_t = SolverConfig::default().brute_max_n)]
    brute_max_n: usize,
    #[arg(long, default_value_t = SolverConfig::default().mitm_max_n)]
    mitm_max_n: usize,
    #[arg(long, default_value_t = SolverConfig::default().max_half_entries)]
    max_half_entries: u64,
    #[arg(long, default_value_t = SolverConfig::default().dp_max_range)]
    dp_max_range: u64,
}

impl From<&Caps> for SolverConfig {
    fn from(c: &Caps) -> Self {
        SolverConfig {
            brute_max_n: c.brute_max_n,
            mitm_max_n: c.mitm_max_n,
            max_half_entries: c.max_half_entries,
            dp_max_range: c.dp_max_range,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(FAILURE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen {
            family,
            n,
            seed,
            size,
            out,
        } => {
            let spec = GeneratorSpec {
                family,
                n,
                seed,
                planted_size: size,
            };
            let generated = spec.generate()?;
            let sidecar = sidecar_path(&out);
            fs::write(&out, generated.instance.to_json())
                .with_context(|| format!("writing {}", out.display()))?;
            fs::write(&sidecar, generated.metadata(&spec).to_json())
                .with_context(|| format!("writing {}", sidecar.display()))?;
            println!("wrote {} and {}", out.display(), sidecar.display());
            Ok(FOUND)
        }
        Command::Solve {
            input,
            algo,
            trace,
            caps,
        } => {
            let instance = read_instance(&input)?;
            let mode = if trace.is_some() {
                TraceMode::FullTrace
            } else {
                TraceMode::CountersOnly
            };
            let mut ledger = ComparisonLedger::new(mode);
            let result =
                bench::solve_with(algo, &instance, &mut ledger, &SolverConfig::from(&caps))?;
            if let Some(path) = trace {
                let file =
                    File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                write_trace(BufWriter::new(file), ledger.trace())?;
            }
            let stdout = io::stdout();
            let mut out = stdout.lock();
            let code = match result.solution {
                Some(mask) => {
                    writeln!(
                        out,
                        "SOLUTION {} {}",
                        mask.to_hex(),
                        instance.subset_sum(mask)?
                    )?;
                    FOUND
                }
                None => {
                    writeln!(out, "NOSOLUTION")?;
                    NOT_FOUND
                }
            };
            let s = result.stats;
            writeln!(
                out,
                "C={} M={} T={}",
                s.gamma_count, s.peak_sorted_len, s.elementary_ops
            )?;
            Ok(code)
        }
        Command::Bench {
            algo,
            family,
            n_min,
            n_max,
            step,
            trials,
            seed,
            size,
            out,
            force,
            threads,
            caps,
        } => {
            let config = ExperimentConfig {
                algo,
                family,
                n_min,
                n_max,
                step,
                trials,
                seed,
                planted_size: size,
                solver: SolverConfig::from(&caps),
                threads,
            };
            // Open first so an existing file is refused before any work.
            let file = if force {
                File::create(&out)
            } else {
                OpenOptions::new().write(true).create_new(true).open(&out)
            }
            .with_context(|| format!("opening {} (use --force to replace)", out.display()))?;
            let output = bench::run_scaling_experiment(&config)?;
            for warning in &output.warnings {
                eprintln!("warning: {warning}");
            }
            bench::write_csv(BufWriter::new(file), &output.records)?;
            println!("wrote {} rows to {}", output.records.len(), out.display());
            Ok(FOUND)
        }
        Command::Report { csv } => {
            let file = File::open(&csv).with_context(|| format!("opening {}", csv.display()))?;
            let records = bench::read_csv(file)?;
            let report = bench::build_report(&records)?;
            print!("{}", report.render(&records));
            Ok(if report.has_violation() {
                NOT_FOUND
            } else {
                FOUND
            })
        }
        Command::Check { input, mask } => {
            let instance = read_instance(&input)?;
            let mask = SubsetMask::from_hex(&mask)?;
            let sum = instance.subset_sum(mask)?;
            if sum == *instance.target() {
                println!("VALID {sum}");
                Ok(FOUND)
            } else {
                println!("INVALID {sum} != {}", instance.target());
                Ok(NOT_FOUND)
            }
        }
    }
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let instance =
        Instance::from_json(&text).with_context(|| format!("parsing {}", path.display()))?;
    if instance.n() > subsetsum::model::MAX_MASK_BITS {
        bail!(
            "instance has {} elements; at most 64 are supported",
            instance.n()
        );
    }
    Ok(instance)
}

/// `dir/w10.json` → `dir/w10.meta.json`.
fn sidecar_path(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    out.with_file_name(format!("{stem}.meta.json"))
}
