//! Sampled variational ground-state search.
//!
//! Each run draws random initial angles, minimizes the sampled expectation
//! of the placement cost through the two-layer ansatz with SPSA
//! (simultaneous-perturbation stochastic approximation), then measures the
//! optimized circuit once more to produce a probability distribution over
//! assignments. Many independent runs are averaged into an aggregate
//! distribution whose peak is compared against the exact ground state.
//!
//! Determinism: run `r` of a batch seeded with `master_seed` uses ChaCha8
//! stream `(master_seed, r)` for everything random it does (initial angles,
//! perturbation directions, measurement draws), so batches are reproducible
//! bit for bit regardless of thread count.

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::exact;
use crate::hamiltonian::{Configuration, IndexBits, ProblemSpec};
use crate::sim::{run_rng, sample, two_local_state, Counts, Statevector, MAX_QUBITS};
use crate::topology::check_alpha;

/// SPSA gain schedule: step sizes `a_k = a / (k + 1 + stability)^a_decay`
/// and perturbation sizes `c_k = c / (k + 1)^c_decay`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpsaGains {
    /// Step-size numerator. `None` calibrates it per run so that the
    /// expected first parameter step is about `target_first_step` radians,
    /// estimated from `calibration_samples` objective-difference probes at
    /// the initial point.
    pub a: Option<f64>,
    /// Perturbation numerator.
    pub c: f64,
    /// Stability offset added to the iteration index in the step schedule.
    pub stability: f64,
    /// Step-size decay exponent.
    pub a_decay: f64,
    /// Perturbation decay exponent.
    pub c_decay: f64,
    /// Probe pairs used when calibrating `a`.
    pub calibration_samples: usize,
    /// Target magnitude (radians) of the first step when calibrating.
    pub target_first_step: f64,
}

impl Default for SpsaGains {
    fn default() -> Self {
        SpsaGains {
            a: None,
            c: 0.1,
            stability: 30.0,
            a_decay: 0.602,
            c_decay: 0.101,
            calibration_samples: 25,
            target_first_step: 0.15,
        }
    }
}

/// Settings for a batch of optimization runs.
#[derive(Debug, Clone, PartialEq)]
pub struct VqeSettings {
    pub iterations: usize,
    pub shots: u32,
    pub runs: usize,
    pub master_seed: u64,
    pub gains: SpsaGains,
    /// When set, optimize once and only re-measure the optimized circuit
    /// `runs` times, instead of running `runs` independent optimizations.
    pub resample_final: bool,
    /// When set, the optimizer sees the exact expectation (no shot noise);
    /// the final measurement still uses `shots`.
    pub exact_expectation: bool,
}

impl Default for VqeSettings {
    fn default() -> Self {
        VqeSettings {
            iterations: 300,
            shots: 1024,
            runs: 128,
            master_seed: 7,
            gains: SpsaGains::default(),
            resample_final: false,
            exact_expectation: false,
        }
    }
}

/// Result of one SPSA minimization.
#[derive(Debug, Clone, PartialEq)]
pub struct SpsaOutcome {
    pub theta: Vec<f64>,
    /// Midpoint objective estimate `(f+ + f-) / 2` per iteration.
    pub trace: Vec<f64>,
}

fn finite(value: f64, iteration: usize) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteObjective { iteration })
    }
}

fn rademacher(dim: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    use rand::Rng;
    (0..dim)
        .map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 })
        .collect()
}

/// Minimize `objective` from `theta0` with SPSA.
///
/// The objective receives the candidate parameters and the run's generator
/// (sampled objectives draw their measurement shots from it). Two probes
/// per iteration estimate the gradient:
/// `g_j = (f(theta + c_k d) - f(theta - c_k d)) / (2 c_k d_j)` with a
/// Rademacher direction `d`, followed by the step `theta -= a_k g`.
pub fn spsa_minimize(
    mut objective: impl FnMut(&[f64], &mut ChaCha8Rng) -> Result<f64>,
    theta0: &[f64],
    iterations: usize,
    gains: &SpsaGains,
    rng: &mut ChaCha8Rng,
) -> Result<SpsaOutcome> {
    if iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    let dim = theta0.len();
    let mut theta = theta0.to_vec();

    let a = match gains.a {
        Some(a) => a,
        None => {
            // Probe the objective to size the first step: the gradient
            // estimate has magnitude |f+ - f-| / (2 c) in every coordinate,
            // so scale `a` to turn its average into `target_first_step`.
            let c0 = gains.c;
            let mut acc = 0.0;
            for _ in 0..gains.calibration_samples {
                let delta = rademacher(dim, rng);
                let plus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t + c0 * d).collect();
                let minus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t - c0 * d).collect();
                let fp = finite(objective(&plus, rng)?, 0)?;
                let fm = finite(objective(&minus, rng)?, 0)?;
                acc += (fp - fm).abs() / (2.0 * c0);
            }
            let avg = acc / gains.calibration_samples.max(1) as f64;
            let first_decay = (1.0 + gains.stability).powf(gains.a_decay);
            if avg > 1e-12 {
                gains.target_first_step * first_decay / avg
            } else {
                // Flat objective at the probe scale; any step size works.
                gains.target_first_step * first_decay
            }
        }
    };

    let mut trace = Vec::with_capacity(iterations);
    for k in 0..iterations {
        let ak = a / (k as f64 + 1.0 + gains.stability).powf(gains.a_decay);
        let ck = gains.c / (k as f64 + 1.0).powf(gains.c_decay);
        let delta = rademacher(dim, rng);
        let plus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t + ck * d).collect();
        let minus: Vec<f64> = theta.iter().zip(&delta).map(|(t, d)| t - ck * d).collect();
        let fp = finite(objective(&plus, rng)?, k)?;
        let fm = finite(objective(&minus, rng)?, k)?;
        let diff = fp - fm;
        for (t, d) in theta.iter_mut().zip(&delta) {
            let g = diff / (2.0 * ck * d);
            *t -= ak * g;
        }
        trace.push((fp + fm) / 2.0);
    }
    Ok(SpsaOutcome { theta, trace })
}

/// Mean cost over measured outcomes: `sum_x counts[x]/shots * H(x)`.
pub fn expectation(counts: &Counts, shots: u32, spec: &ProblemSpec) -> Result<f64> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let total: u64 = counts.values().map(|&c| c as u64).sum();
    if total != shots as u64 {
        return Err(Error::CountShotMismatch {
            got: total,
            expected: shots as u64,
        });
    }
    let n = spec.n_qubits();
    let mut acc = 0.0;
    for (&index, &count) in counts {
        if n < 64 && index >> n != 0 {
            return Err(Error::IndexOutOfRange { index, n_qubits: n });
        }
        acc += count as f64 / shots as f64 * spec.total_cost_bits(&IndexBits { index, n });
    }
    Ok(acc)
}

/// Infinite-shot limit of [`expectation`]: the state's exact distribution
/// against the cost diagonal.
pub fn expectation_exact(state: &Statevector, spec: &ProblemSpec) -> Result<f64> {
    let n = spec.n_qubits();
    if state.n_qubits() != n {
        return Err(Error::ConfigLenMismatch {
            got: state.n_qubits(),
            expected: n,
        });
    }
    let probs = state.probabilities();
    let mut acc = 0.0;
    for (index, p) in probs.iter().enumerate() {
        acc += p * spec.total_cost_bits(&IndexBits {
            index: index as u64,
            n,
        });
    }
    Ok(acc)
}

/// A sparse probability distribution over assignments.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    n_bits: usize,
    probs: BTreeMap<u64, f64>,
}

impl Distribution {
    pub fn from_counts(counts: &Counts, shots: u32, n_bits: usize) -> Result<Self> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        let total: u64 = counts.values().map(|&c| c as u64).sum();
        if total != shots as u64 {
            return Err(Error::CountShotMismatch {
                got: total,
                expected: shots as u64,
            });
        }
        let probs = counts
            .iter()
            .map(|(&idx, &c)| (idx, c as f64 / shots as f64))
            .collect();
        Ok(Distribution { n_bits, probs })
    }

    pub fn n_bits(&self) -> usize {
        self.n_bits
    }

    pub fn probs(&self) -> &BTreeMap<u64, f64> {
        &self.probs
    }

    pub fn support_len(&self) -> usize {
        self.probs.len()
    }

    pub fn total_mass(&self) -> f64 {
        self.probs.values().sum()
    }

    /// Most probable assignment; ties resolve to the smallest basis index.
    pub fn argmax(&self) -> Option<(u64, f64)> {
        let mut best: Option<(u64, f64)> = None;
        for (&idx, &p) in &self.probs {
            match best {
                Some((_, bp)) if p <= bp => {}
                _ => best = Some((idx, p)),
            }
        }
        best
    }

    /// The configuration string for one of this distribution's outcomes.
    pub fn bitstring(&self, index: u64) -> String {
        Configuration::from_index(index, self.n_bits).to_string()
    }
}

/// One finished optimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub params: Vec<f64>,
    pub distribution: Distribution,
    /// Objective estimate per iteration, `iterations` entries.
    pub trace: Vec<f64>,
}

fn objective_eval<C: Fn(u64) -> f64>(
    cost: &C,
    n_qubits: usize,
    shots: u32,
    exact_expectation: bool,
    theta: &[f64],
    rng: &mut ChaCha8Rng,
) -> Result<f64> {
    let state = two_local_state(theta, n_qubits)?;
    if exact_expectation {
        let probs = state.probabilities();
        Ok(probs
            .iter()
            .enumerate()
            .map(|(i, p)| p * cost(i as u64))
            .sum())
    } else {
        let counts = sample(&state, shots, rng)?;
        let mut acc = 0.0;
        for (&idx, &c) in &counts {
            acc += c as f64 * cost(idx);
        }
        Ok(acc / shots as f64)
    }
}

/// One run against an arbitrary diagonal cost function over `n_qubits`-bit
/// outcomes. [`run_vqe`] wires this to a problem's cost table.
pub fn run_with_cost<C: Fn(u64) -> f64>(
    cost: &C,
    n_qubits: usize,
    settings: &VqeSettings,
    run_index: u64,
) -> Result<RunResult> {
    if settings.iterations == 0 {
        return Err(Error::ZeroIterations);
    }
    if settings.shots == 0 {
        return Err(Error::ZeroShots);
    }
    let mut rng = run_rng(settings.master_seed, run_index);
    let theta0 = crate::sim::random_params(n_qubits, &mut rng);
    let outcome = spsa_minimize(
        |theta, rng| {
            objective_eval(
                cost,
                n_qubits,
                settings.shots,
                settings.exact_expectation,
                theta,
                rng,
            )
        },
        &theta0,
        settings.iterations,
        &settings.gains,
        &mut rng,
    )?;
    let final_state = two_local_state(&outcome.theta, n_qubits)?;
    let counts = sample(&final_state, settings.shots, &mut rng)?;
    let distribution = Distribution::from_counts(&counts, settings.shots, n_qubits)?;
    Ok(RunResult {
        params: outcome.theta,
        distribution,
        trace: outcome.trace,
    })
}

/// One optimization run on a problem: minimizes the sampled expectation of
/// its cost, then measures the optimized circuit `shots` times.
pub fn run_vqe(spec: &ProblemSpec, settings: &VqeSettings, run_index: u64) -> Result<RunResult> {
    let table = spec.cost_table(MAX_QUBITS)?;
    run_with_cost(
        &|i: u64| table[i as usize],
        spec.n_qubits(),
        settings,
        run_index,
    )
}

/// The full batch: `settings.runs` independent runs (in parallel), or one
/// optimization re-measured `runs` times when `resample_final` is set.
pub fn run_all(spec: &ProblemSpec, settings: &VqeSettings) -> Result<Vec<RunResult>> {
    if settings.runs == 0 {
        return Err(Error::ZeroRuns);
    }
    let table = spec.cost_table(MAX_QUBITS)?;
    let cost = |i: u64| table[i as usize];
    let n = spec.n_qubits();

    if settings.resample_final {
        let base = run_with_cost(&cost, n, settings, 0).map_err(|e| Error::RunFailed {
            run: 0,
            source: Box::new(e),
        })?;
        let state = two_local_state(&base.params, n)?;
        let mut results = vec![base.clone()];
        for r in 1..settings.runs {
            let mut rng = run_rng(settings.master_seed, r as u64);
            let counts =
                sample(&state, settings.shots, &mut rng).map_err(|e| Error::RunFailed {
                    run: r,
                    source: Box::new(e),
                })?;
            results.push(RunResult {
                params: base.params.clone(),
                distribution: Distribution::from_counts(&counts, settings.shots, n)?,
                trace: base.trace.clone(),
            });
        }
        return Ok(results);
    }

    (0..settings.runs)
        .into_par_iter()
        .map(|r| {
            run_with_cost(&cost, n, settings, r as u64).map_err(|e| Error::RunFailed {
                run: r,
                source: Box::new(e),
            })
        })
        .collect()
}

/// Mean of the runs' distributions, renormalized.
pub fn aggregate(runs: &[RunResult]) -> Result<Distribution> {
    let first = runs.first().ok_or(Error::NoRuns)?;
    let n_bits = first.distribution.n_bits();
    for r in runs {
        if r.distribution.n_bits() != n_bits {
            return Err(Error::ConfigLenMismatch {
                got: r.distribution.n_bits(),
                expected: n_bits,
            });
        }
    }
    let mut acc: BTreeMap<u64, f64> = BTreeMap::new();
    let weight = 1.0 / runs.len() as f64;
    for r in runs {
        for (&idx, &p) in r.distribution.probs() {
            *acc.entry(idx).or_insert(0.0) += p * weight;
        }
    }
    let total: f64 = acc.values().sum();
    if total > 0.0 {
        for v in acc.values_mut() {
            *v /= total;
        }
    }
    Ok(Distribution { n_bits, probs: acc })
}

/// Success table of a batch against the exact ground state, one row per
/// spatial exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub successes: usize,
    pub runs: usize,
}

/// Re-weight the problem at each exponent, run a full batch, and count the
/// runs whose most probable outcome is an exact ground-state assignment.
pub fn alpha_sweep(
    spec: &ProblemSpec,
    alphas: &[f64],
    settings: &VqeSettings,
) -> Result<Vec<SweepRow>> {
    if alphas.is_empty() {
        return Err(Error::EmptyAlphaList);
    }
    for &alpha in alphas {
        check_alpha(alpha)?;
    }
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let spec_a = spec.with_alpha(alpha)?;
        let ground = exact::ground_state(&spec_a)?;
        let minimizers: HashSet<u64> = ground
            .configurations
            .iter()
            .filter_map(|c| c.to_index())
            .collect();
        let results = run_all(&spec_a, settings)?;
        let successes = results
            .iter()
            .filter(|r| {
                r.distribution
                    .argmax()
                    .is_some_and(|(idx, _)| minimizers.contains(&idx))
            })
            .count();
        rows.push(SweepRow {
            alpha,
            successes,
            runs: results.len(),
        });
    }
    Ok(rows)
}
