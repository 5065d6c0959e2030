//! Command-line surface.
//!
//! Subcommands: `presets` (list built-ins), `exact` (full enumeration and
//! lowest levels), `vqe` (sampled variational batch), `sweep` (success rate
//! per spatial exponent), `eval` (score one configuration).
//!
//! Exit codes: 0 success, 1 usage error (bad flags or flag values),
//! 2 validation error (a problem file or derived quantity is invalid),
//! 3 runtime error (I/O). The `MTVQ_THREADS` environment variable caps the
//! worker-thread count; it defaults to the machine's parallelism.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::exact::{ground_state, spectrum};
use crate::hamiltonian::{Configuration, ProblemSpec};
use crate::presets::{preset, PRESET_NAMES};
use crate::schema::load_problem;
use crate::topology::check_alpha;
use crate::vqe::{aggregate, alpha_sweep, run_all, Distribution, SweepRow, VqeSettings};

#[derive(Debug, Parser)]
#[command(
    name = "mtvq",
    version,
    about = "Ground-state linker placement for multivariate frameworks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Problem source: exactly one of a built-in preset or a JSON file.
#[derive(Debug, Clone, Default, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Name of a built-in problem (see the `presets` subcommand)
    #[arg(long)]
    pub preset: Option<String>,
    /// Path to a JSON problem file
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the built-in problems
    Presets,
    /// Enumerate every assignment and report the lowest-cost levels
    Exact {
        #[command(flatten)]
        source: Source,
        /// How many distinct cost levels to report
        #[arg(long, default_value_t = 6)]
        top: usize,
        /// Write the levels as JSON to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a batch of sampled variational optimizations and aggregate them
    Vqe {
        #[command(flatten)]
        source: Source,
        /// Optimizer iterations per run
        #[arg(long, default_value_t = 300)]
        iters: usize,
        /// Measurement shots per objective evaluation
        #[arg(long, default_value_t = 1024)]
        shots: u32,
        /// Number of independent runs
        #[arg(long, default_value_t = 128)]
        runs: usize,
        /// Master seed; run r derives its own stream from it
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Override the problem's spatial exponent
        #[arg(long)]
        alpha: Option<f64>,
        /// Write the aggregated distribution as CSV to this path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Optimize once and re-measure the final circuit per run
        #[arg(long)]
        resample_final: bool,
        /// Optimize the exact expectation instead of the sampled one
        #[arg(long)]
        exact_expectation: bool,
    },
    /// Measure the ground-state success rate across spatial exponents
    Sweep {
        #[command(flatten)]
        source: Source,
        /// Comma-separated spatial exponents
        #[arg(long, default_value = "0.01,0.1,0.25,0.5")]
        alphas: String,
        /// Optimizer iterations per run
        #[arg(long, default_value_t = 300)]
        iters: usize,
        /// Measurement shots per objective evaluation
        #[arg(long, default_value_t = 1024)]
        shots: u32,
        /// Number of independent runs per exponent
        #[arg(long, default_value_t = 128)]
        runs: usize,
        /// Master seed; run r derives its own stream from it
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write the success table as CSV to this path
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the cost terms of one configuration
    Eval {
        #[command(flatten)]
        source: Source,
        /// Configuration as a '0'/'1' string, one character per variable
        #[arg(long)]
        config: String,
    },
}

/// A command failure, classified by the exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or flag values (exit 1).
    Usage(String),
    /// The problem file or a derived quantity is invalid (exit 2).
    Validation(String),
    /// I/O failure (exit 3).
    Runtime(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) | CliError::Runtime(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn validation(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

impl Source {
    /// Load the problem, classifying failures: an unknown preset name is a
    /// usage error, an unreadable file is a runtime error, and everything
    /// wrong inside a file is a validation error.
    pub fn load(&self) -> Result<ProblemSpec, CliError> {
        match (&self.preset, &self.file) {
            (Some(name), None) => preset(name).map_err(usage),
            (None, Some(path)) => load_problem(path).map_err(|e| match e {
                Error::FileRead { .. } => runtime(e),
                other => validation(other),
            }),
            _ => Err(CliError::Usage(
                "exactly one of --preset or --file is required".into(),
            )),
        }
    }
}

/// What a successful command produced.
#[derive(Debug, Clone)]
pub struct CommandOutcome {
    /// Human-readable report, printed to stdout.
    pub summary: String,
    /// Files written.
    pub artifacts: Vec<PathBuf>,
}

#[derive(Serialize)]
struct SpectrumLevel {
    h: f64,
    configs: Vec<String>,
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| runtime(format!("cannot write {}: {e}", path.display())))
}

fn parse_alpha_list(text: &str) -> Result<Vec<f64>, CliError> {
    let mut alphas = Vec::new();
    for part in text.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let alpha: f64 = part
            .parse()
            .map_err(|_| CliError::Usage(format!("cannot parse alpha value {part:?}")))?;
        check_alpha(alpha).map_err(usage)?;
        alphas.push(alpha);
    }
    if alphas.is_empty() {
        return Err(CliError::Usage("alpha list is empty".into()));
    }
    Ok(alphas)
}

/// Indices of the exact minimizers, for judging sampled results.
fn minimizer_indices(spec: &ProblemSpec) -> Result<HashSet<u64>, CliError> {
    let ground = ground_state(spec).map_err(validation)?;
    Ok(ground
        .configurations
        .iter()
        .filter_map(|c| c.to_index())
        .collect())
}

/// Distribution rows as CSV, sorted by cost then configuration string.
fn distribution_csv(spec: &ProblemSpec, dist: &Distribution) -> Result<String, CliError> {
    let mut rows: Vec<(f64, u64, f64)> = Vec::with_capacity(dist.support_len());
    for (&idx, &p) in dist.probs() {
        let config = Configuration::from_index(idx, dist.n_bits());
        let h = spec.total_cost(&config).map_err(validation)?;
        rows.push((h, idx, p));
    }
    rows.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
    let mut csv = String::from("bitstring,hamiltonian,probability\n");
    for (h, idx, p) in rows {
        let bits = Configuration::from_index(idx, dist.n_bits());
        let _ = writeln!(csv, "{bits},{h:.6},{p:.6}");
    }
    Ok(csv)
}

fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut csv = String::from("alpha,successes,runs\n");
    for row in rows {
        let _ = writeln!(csv, "{:.6},{},{}", row.alpha, row.successes, row.runs);
    }
    csv
}

fn cmd_presets() -> Result<CommandOutcome, CliError> {
    let mut summary = String::new();
    for name in PRESET_NAMES {
        let spec = preset(name).map_err(validation)?;
        let _ = writeln!(
            summary,
            "{name:<14} {:>2} sites, {} linker types, {:>2} qubits, alpha {}",
            spec.graph().n_sites(),
            spec.catalog().len(),
            spec.n_qubits(),
            spec.graph().alpha(),
        );
    }
    Ok(CommandOutcome {
        summary: summary.trim_end().to_string(),
        artifacts: vec![],
    })
}

fn cmd_exact(source: &Source, top: usize, out: Option<&Path>) -> Result<CommandOutcome, CliError> {
    if top == 0 {
        return Err(usage(Error::ZeroSpectrumDepth));
    }
    let spec = source.load()?;
    let levels = spectrum(&spec, top).map_err(validation)?;

    let mut summary = String::new();
    for (rank, level) in levels.iter().enumerate() {
        let _ = writeln!(
            summary,
            "level {rank}: h {:.6}, {} configurations, e.g. {}",
            level.value,
            level.configurations.len(),
            level.configurations[0],
        );
    }
    let ground = &levels[0];
    let _ = writeln!(summary, "ground value {:.6}", ground.value);
    let _ = write!(
        summary,
        "minimizer {} ({} tied)",
        ground.configurations[0],
        ground.configurations.len()
    );

    let mut artifacts = Vec::new();
    if let Some(path) = out {
        let json_levels: Vec<SpectrumLevel> = levels
            .iter()
            .map(|l| SpectrumLevel {
                h: l.value,
                configs: l.configurations.iter().map(|c| c.to_string()).collect(),
            })
            .collect();
        let text = serde_json::to_string_pretty(&json_levels)
            .map_err(|e| runtime(format!("cannot serialize spectrum: {e}")))?;
        write_text(path, &(text + "\n"))?;
        let _ = write!(summary, "\nwrote {}", path.display());
        artifacts.push(path.to_path_buf());
    }
    Ok(CommandOutcome { summary, artifacts })
}

#[allow(clippy::too_many_arguments)]
fn cmd_vqe(
    source: &Source,
    iters: usize,
    shots: u32,
    runs: usize,
    seed: u64,
    alpha: Option<f64>,
    out: Option<&Path>,
    resample_final: bool,
    exact_expectation: bool,
) -> Result<CommandOutcome, CliError> {
    if iters == 0 {
        return Err(usage(Error::ZeroIterations));
    }
    if shots == 0 {
        return Err(usage(Error::ZeroShots));
    }
    if runs == 0 {
        return Err(usage(Error::ZeroRuns));
    }
    let mut spec = source.load()?;
    if let Some(alpha) = alpha {
        check_alpha(alpha).map_err(usage)?;
        spec = spec.with_alpha(alpha).map_err(validation)?;
    }
    let settings = VqeSettings {
        iterations: iters,
        shots,
        runs,
        master_seed: seed,
        resample_final,
        exact_expectation,
        ..VqeSettings::default()
    };

    let minimizers = minimizer_indices(&spec)?;
    let results = run_all(&spec, &settings).map_err(validation)?;
    let agg = aggregate(&results).map_err(validation)?;
    let (arg_idx, arg_p) = agg
        .argmax()
        .ok_or_else(|| validation("aggregated distribution is empty"))?;
    let arg_config = Configuration::from_index(arg_idx, agg.n_bits());
    let arg_h = spec.total_cost(&arg_config).map_err(validation)?;
    let matches = minimizers.contains(&arg_idx);

    let mut summary = String::new();
    let _ = writeln!(
        summary,
        "runs {}, iterations {}, shots {}, seed {}, alpha {}",
        runs,
        iters,
        shots,
        seed,
        spec.graph().alpha(),
    );
    let _ = write!(
        summary,
        "argmax {arg_config}, probability {arg_p:.6}, h {arg_h:.6}, match {matches}"
    );

    let mut artifacts = Vec::new();
    if let Some(path) = out {
        let csv = distribution_csv(&spec, &agg)?;
        write_text(path, &csv)?;
        let _ = write!(summary, "\nwrote {}", path.display());
        artifacts.push(path.to_path_buf());
    }
    Ok(CommandOutcome { summary, artifacts })
}

fn cmd_sweep(
    source: &Source,
    alphas: &str,
    iters: usize,
    shots: u32,
    runs: usize,
    seed: u64,
    out: Option<&Path>,
) -> Result<CommandOutcome, CliError> {
    if iters == 0 {
        return Err(usage(Error::ZeroIterations));
    }
    if shots == 0 {
        return Err(usage(Error::ZeroShots));
    }
    if runs == 0 {
        return Err(usage(Error::ZeroRuns));
    }
    let alphas = parse_alpha_list(alphas)?;
    let spec = source.load()?;
    let settings = VqeSettings {
        iterations: iters,
        shots,
        runs,
        master_seed: seed,
        ..VqeSettings::default()
    };
    let rows = alpha_sweep(&spec, &alphas, &settings).map_err(validation)?;

    let mut summary = String::new();
    for row in &rows {
        let _ = writeln!(
            summary,
            "alpha {:.6}: {}/{} runs found the ground state",
            row.alpha, row.successes, row.runs
        );
    }
    let mut summary = summary.trim_end().to_string();

    let mut artifacts = Vec::new();
    if let Some(path) = out {
        write_text(path, &sweep_csv(&rows))?;
        let _ = write!(summary, "\nwrote {}", path.display());
        artifacts.push(path.to_path_buf());
    }
    Ok(CommandOutcome { summary, artifacts })
}

fn cmd_eval(source: &Source, config: &str) -> Result<CommandOutcome, CliError> {
    // Character errors are usage errors (the flag value is malformed);
    // a length mismatch is a validation error against the loaded problem.
    let parsed = Configuration::parse(config).map_err(usage)?;
    let spec = source.load()?;
    let breakdown = spec.term_breakdown(&parsed).map_err(validation)?;
    let mut summary = String::new();
    let _ = writeln!(summary, "config    {parsed}");
    let _ = writeln!(summary, "ratio     {:.6}", breakdown.ratio);
    let _ = writeln!(summary, "occupancy {:.6}", breakdown.occupancy);
    let _ = writeln!(summary, "balance   {:.6}", breakdown.balance);
    let _ = write!(summary, "total     {:.6}", breakdown.total);
    Ok(CommandOutcome {
        summary,
        artifacts: vec![],
    })
}

/// Run one parsed command.
pub fn execute(cli: &Cli) -> Result<CommandOutcome, CliError> {
    match &cli.command {
        Command::Presets => cmd_presets(),
        Command::Exact { source, top, out } => cmd_exact(source, *top, out.as_deref()),
        Command::Vqe {
            source,
            iters,
            shots,
            runs,
            seed,
            alpha,
            out,
            resample_final,
            exact_expectation,
        } => cmd_vqe(
            source,
            *iters,
            *shots,
            *runs,
            *seed,
            *alpha,
            out.as_deref(),
            *resample_final,
            *exact_expectation,
        ),
        Command::Sweep {
            source,
            alphas,
            iters,
            shots,
            runs,
            seed,
            out,
        } => cmd_sweep(source, alphas, *iters, *shots, *runs, *seed, out.as_deref()),
        Command::Eval { source, config } => cmd_eval(source, config),
    }
}

/// Execute and report: summary to stdout, errors to stderr; returns the
/// process exit code.
pub fn run(cli: &Cli) -> i32 {
    match execute(cli) {
        Ok(outcome) => {
            if !outcome.summary.is_empty() {
                println!("{}", outcome.summary);
            }
            0
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.code()
        }
    }
}

/// Apply the `MTVQ_THREADS` cap to the global worker pool. Call once at
/// startup, before any parallel work.
pub fn apply_thread_cap() {
    if let Ok(value) = std::env::var("MTVQ_THREADS") {
        match value.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => eprintln!("warning: ignoring invalid MTVQ_THREADS value {value:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset_source(name: &str) -> Source {
        Source {
            preset: Some(name.into()),
            file: None,
        }
    }

    #[test]
    fn presets_lists_names_and_qubit_counts() {
        let outcome = cmd_presets().unwrap();
        assert!(outcome.summary.contains("cu-thq-hhtp"));
        assert!(outcome.summary.contains("16 qubits"));
        assert!(outcome.summary.contains("sioc-cof2"));
        assert!(outcome.summary.contains("12 qubits"));
        assert_eq!(outcome.summary.lines().count(), 4);
    }

    #[test]
    fn exact_reports_the_ground_level_and_writes_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("levels.json");
        let outcome = cmd_exact(&preset_source("muf-7"), 6, Some(&path)).unwrap();
        assert!(outcome.summary.contains("ground value 0.000000"));
        assert!(outcome.summary.contains("(2 tied)"));
        assert_eq!(outcome.artifacts, vec![path.clone()]);

        let text = std::fs::read_to_string(&path).unwrap();
        let levels: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(levels.as_array().unwrap().len(), 6);
        assert!(levels[0]["h"].as_f64().unwrap().abs() < 1e-9);
        assert_eq!(levels[0]["configs"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn exact_rejects_zero_top_before_loading() {
        let err = cmd_exact(&preset_source("no-such"), 0, None).unwrap_err();
        assert_eq!(err.code(), 1);
    }

    #[test]
    fn unknown_preset_is_a_usage_error() {
        let err = preset_source("no-such").load().unwrap_err();
        assert_eq!(err.code(), 1);
    }

    #[test]
    fn missing_file_is_a_runtime_error() {
        let source = Source {
            preset: None,
            file: Some(PathBuf::from("/nonexistent/problem.json")),
        };
        assert_eq!(source.load().unwrap_err().code(), 3);
    }

    #[test]
    fn malformed_file_is_a_validation_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, "{ not json").unwrap();
        let source = Source {
            preset: None,
            file: Some(path),
        };
        assert_eq!(source.load().unwrap_err().code(), 2);
    }

    #[test]
    fn neither_source_is_a_usage_error() {
        let source = Source {
            preset: None,
            file: None,
        };
        assert_eq!(source.load().unwrap_err().code(), 1);
    }

    #[test]
    fn eval_scores_a_ground_state_at_zero() {
        let outcome = cmd_eval(&preset_source("muf-7"), "011001100110").unwrap();
        assert!(outcome.summary.contains("total     0.000000"));
        assert!(outcome.summary.contains("balance   0.000000"));
    }

    #[test]
    fn eval_shows_raw_ratio_and_occupancy_terms() {
        let outcome = cmd_eval(&preset_source("cu-thq-hhtp"), &"0".repeat(16)).unwrap();
        assert!(outcome.summary.contains("ratio     32.000000"));
        assert!(outcome.summary.contains("occupancy 8.000000"));
    }

    #[test]
    fn eval_classifies_bad_characters_and_bad_lengths() {
        let err = cmd_eval(&preset_source("muf-7"), "0110011001102").unwrap_err();
        assert_eq!(err.code(), 1);
        let err = cmd_eval(&preset_source("muf-7"), "0110").unwrap_err();
        assert_eq!(err.code(), 2);
    }

    #[test]
    fn vqe_rejects_zero_valued_counts() {
        let src = preset_source("muf-7");
        assert_eq!(
            cmd_vqe(&src, 0, 1, 1, 7, None, None, false, false)
                .unwrap_err()
                .code(),
            1
        );
        assert_eq!(
            cmd_vqe(&src, 1, 0, 1, 7, None, None, false, false)
                .unwrap_err()
                .code(),
            1
        );
        assert_eq!(
            cmd_vqe(&src, 1, 1, 0, 7, None, None, false, false)
                .unwrap_err()
                .code(),
            1
        );
    }

    #[test]
    fn vqe_writes_a_sorted_distribution_csv() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dist.csv");
        let outcome = cmd_vqe(
            &preset_source("muf-7"),
            20,
            64,
            2,
            7,
            None,
            Some(&path),
            false,
            false,
        )
        .unwrap();
        assert!(outcome.summary.contains("argmax "));
        assert!(outcome.summary.contains("match "));

        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("bitstring,hamiltonian,probability"));
        let costs: Vec<f64> = lines
            .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
            .collect();
        assert!(!costs.is_empty());
        assert!(costs.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn vqe_alpha_override_is_range_checked() {
        let err = cmd_vqe(
            &preset_source("muf-7"),
            1,
            1,
            1,
            7,
            Some(1.5),
            None,
            false,
            false,
        )
        .unwrap_err();
        assert_eq!(err.code(), 1);
    }

    #[test]
    fn alpha_list_parsing() {
        assert_eq!(parse_alpha_list("0.01,0.1").unwrap(), vec![0.01, 0.1]);
        assert_eq!(parse_alpha_list(" 0.5 , 1 ").unwrap(), vec![0.5, 1.0]);
        assert_eq!(parse_alpha_list("").unwrap_err().code(), 1);
        assert_eq!(parse_alpha_list(",,").unwrap_err().code(), 1);
        assert_eq!(parse_alpha_list("abc").unwrap_err().code(), 1);
        assert_eq!(parse_alpha_list("0.1,2.0").unwrap_err().code(), 1);
    }

    #[test]
    fn sweep_writes_one_row_per_exponent() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sweep.csv");
        let outcome = cmd_sweep(
            &preset_source("muf-7"),
            "0.1,0.5",
            15,
            64,
            2,
            3,
            Some(&path),
        )
        .unwrap();
        assert_eq!(outcome.artifacts.len(), 1);
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "alpha,successes,runs");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("0.100000,"));
        assert!(lines[2].starts_with("0.500000,"));
        assert!(lines[1].ends_with(",2"));
    }

    #[test]
    fn clap_accepts_the_documented_grammar() {
        let cli = Cli::try_parse_from(["mtvq", "exact", "--preset", "muf-7", "--top", "3"]);
        assert!(cli.is_ok());
        // Both sources at once violate the exclusive group.
        let cli = Cli::try_parse_from(["mtvq", "exact", "--preset", "muf-7", "--file", "x.json"]);
        assert!(cli.is_err());
        // A missing source is caught at parse time too.
        let cli = Cli::try_parse_from(["mtvq", "exact"]);
        assert!(cli.is_err());
    }
}
