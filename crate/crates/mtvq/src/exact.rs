//! Ground states by brute force.
//!
//! The full assignment space of a problem with `n` binary variables has
//! `2^n` points; for every preset that is at most 65 536, so scanning all of
//! them is the reference answer the sampling loop is judged against. The
//! scan is parallelized over index ranges but its results do not depend on
//! the partitioning.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hamiltonian::{Configuration, IndexBits, ProblemSpec, RatioSpec};

/// Largest variable count the full scan will attempt by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 24;

/// Costs closer than this are treated as the same spectrum value.
pub const VALUE_CLUSTER_TOL: f64 = 1e-9;

/// One cost value and every assignment that attains it.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub configurations: Vec<Configuration>,
}

fn check_bound(spec: &ProblemSpec, max_qubits: usize) -> Result<usize> {
    let n = spec.n_qubits();
    if n > max_qubits || n >= usize::BITS as usize {
        return Err(Error::EnumerationBound {
            qubits: n,
            limit: max_qubits,
        });
    }
    Ok(n)
}

/// Cost of every basis index, in index order.
fn all_values(spec: &ProblemSpec, n: usize) -> Vec<f64> {
    (0..1u64 << n)
        .into_par_iter()
        .map(|index| spec.total_cost_bits(&IndexBits { index, n }))
        .collect()
}

/// Exact minimum of the cost over all assignments, with every minimizer
/// listed in ascending bitstring order.
pub fn ground_state(spec: &ProblemSpec) -> Result<SpectrumEntry> {
    ground_state_bounded(spec, DEFAULT_ENUMERATION_LIMIT)
}

/// [`ground_state`] with an explicit enumeration bound.
pub fn ground_state_bounded(spec: &ProblemSpec, max_qubits: usize) -> Result<SpectrumEntry> {
    let n = check_bound(spec, max_qubits)?;
    let values = all_values(spec, n);
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let configurations = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v <= min + VALUE_CLUSTER_TOL)
        .map(|(i, _)| Configuration::from_index(i as u64, n))
        .collect();
    Ok(SpectrumEntry {
        value: min,
        configurations,
    })
}

/// The `k` lowest distinct cost values (clustered within
/// [`VALUE_CLUSTER_TOL`]) and their assignments. Levels come out in
/// ascending value order and the assignments within each level in
/// ascending bitstring order.
pub fn spectrum(spec: &ProblemSpec, k: usize) -> Result<Vec<SpectrumEntry>> {
    spectrum_bounded(spec, k, DEFAULT_ENUMERATION_LIMIT)
}

/// [`spectrum`] with an explicit enumeration bound.
pub fn spectrum_bounded(
    spec: &ProblemSpec,
    k: usize,
    max_qubits: usize,
) -> Result<Vec<SpectrumEntry>> {
    if k == 0 {
        return Err(Error::ZeroSpectrumDepth);
    }
    let n = check_bound(spec, max_qubits)?;
    let values = all_values(spec, n);

    let mut order: Vec<u32> = (0..values.len() as u32).collect();
    order.sort_unstable_by(|&a, &b| {
        values[a as usize]
            .partial_cmp(&values[b as usize])
            .expect("costs are finite")
            .then(a.cmp(&b))
    });

    let mut entries: Vec<SpectrumEntry> = Vec::with_capacity(k);
    for idx in order {
        let v = values[idx as usize];
        match entries.last_mut() {
            Some(entry) if v <= entry.value + VALUE_CLUSTER_TOL => {
                entry
                    .configurations
                    .push(Configuration::from_index(idx as u64, n));
            }
            _ => {
                if entries.len() == k {
                    break;
                }
                entries.push(SpectrumEntry {
                    value: v,
                    configurations: vec![Configuration::from_index(idx as u64, n)],
                });
            }
        }
    }
    // Within a cluster the sort above orders by value, and rounding noise
    // between tied costs can differ from bitstring order; restore it.
    for entry in &mut entries {
        entry.configurations.sort_by_key(Configuration::to_index);
    }
    Ok(entries)
}

/// Lazy enumeration of every assignment that satisfies both hard
/// constraints exactly: the target ratio and one linker per site.
///
/// Configurations come out in lexicographic order of the per-site type
/// sequence. The number of items equals [`count_configs`] for the same
/// shape, which the tests exploit as a cross-check.
pub fn enumerate_valid(spec: &ProblemSpec) -> ValidConfigurations {
    // Lexicographically smallest per-site type sequence: sites take type 0
    // while the ratio allows, then type 1, and so on.
    let mut assignment = Vec::with_capacity(spec.n_sites());
    for (t, &count) in spec.ratio().counts().iter().enumerate() {
        assignment.extend(std::iter::repeat_n(t, count as usize));
    }
    ValidConfigurations {
        assignment,
        n_types: spec.n_types(),
        state: IterState::Fresh,
    }
}

enum IterState {
    Fresh,
    Running,
    Done,
}

pub struct ValidConfigurations {
    /// Current per-site type assignment (a multiset permutation).
    assignment: Vec<usize>,
    n_types: usize,
    state: IterState,
}

impl ValidConfigurations {
    fn materialize(&self) -> Configuration {
        let mut bits = vec![false; self.assignment.len() * self.n_types];
        for (site, &t) in self.assignment.iter().enumerate() {
            bits[site * self.n_types + t] = true;
        }
        Configuration::from_bits(bits)
    }

    /// Standard next-permutation step over the multiset; false when the
    /// sequence was the last one.
    fn advance(&mut self) -> bool {
        let a = &mut self.assignment;
        if a.len() < 2 {
            return false;
        }
        let mut i = a.len() - 1;
        while i > 0 && a[i - 1] >= a[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let pivot = i - 1;
        let mut j = a.len() - 1;
        while a[j] <= a[pivot] {
            j -= 1;
        }
        a.swap(pivot, j);
        a[i..].reverse();
        true
    }
}

impl Iterator for ValidConfigurations {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        match self.state {
            IterState::Fresh => {
                self.state = IterState::Running;
                Some(self.materialize())
            }
            IterState::Running => {
                if self.advance() {
                    Some(self.materialize())
                } else {
                    self.state = IterState::Done;
                    None
                }
            }
            IterState::Done => None,
        }
    }
}

/// Number of ratio- and occupancy-satisfying assignments:
/// `n_sites! / prod_t(n_t!)`, exactly.
pub fn count_configs(n_sites: u32, ratio: &RatioSpec) -> Result<BigUint> {
    if ratio.total() != n_sites as u64 {
        return Err(Error::RatioSumMismatch {
            got: ratio.total(),
            expected: n_sites as u64,
        });
    }
    let mut result = factorial(n_sites);
    for &c in ratio.counts() {
        result /= factorial(c);
    }
    Ok(result)
}

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}
