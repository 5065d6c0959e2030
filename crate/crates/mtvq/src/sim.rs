//! A small dense statevector simulator.
//!
//! Supports exactly what the sampling loop needs: Y-rotations, a
//! controlled-Z entangler, the hardware-efficient two-layer ansatz built
//! from them, exact outcome probabilities, and seeded multinomial sampling.
//! State size is `2^n` complex amplitudes, so memory (and per-gate work) is
//! `O(2^n)`; the qubit count is capped at [`MAX_QUBITS`].
//!
//! Basis convention: qubit `k` maps to bit `n - 1 - k` of the basis index,
//! i.e. qubit 0 is the most significant bit. Printing an index as an
//! `n`-character binary string therefore lists qubit 0 first, matching the
//! configuration-string convention used everywhere else in this crate.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Hard cap on simulated qubits (2^24 amplitudes = 256 MiB).
pub const MAX_QUBITS: usize = 24;

/// Outcome counts from repeated measurement, keyed by basis index.
pub type Counts = BTreeMap<u64, u32>;

#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amps: Vec<Complex64>,
}

impl Statevector {
    /// `|0...0>` on `n_qubits` qubits.
    pub fn zero_state(n_qubits: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::SimulatorBound {
                qubits: n_qubits,
                limit: MAX_QUBITS,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amps[0] = Complex64::new(1.0, 0.0);
        Ok(Statevector { n_qubits, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    fn check_qubit(&self, qubit: usize) -> Result<u64> {
        if qubit >= self.n_qubits {
            return Err(Error::QubitOutOfRange {
                qubit,
                n_qubits: self.n_qubits,
            });
        }
        Ok(1u64 << (self.n_qubits - 1 - qubit))
    }

    /// Y-rotation: |0> -> cos(t/2)|0> + sin(t/2)|1>,
    /// |1> -> -sin(t/2)|0> + cos(t/2)|1>.
    pub fn apply_ry(&mut self, qubit: usize, theta: f64) -> Result<()> {
        let mask = self.check_qubit(qubit)? as usize;
        let c = (theta / 2.0).cos();
        let s = (theta / 2.0).sin();
        for i in 0..self.amps.len() {
            if i & mask == 0 {
                let j = i | mask;
                let a = self.amps[i];
                let b = self.amps[j];
                self.amps[i] = c * a - s * b;
                self.amps[j] = s * a + c * b;
            }
        }
        Ok(())
    }

    /// Controlled-Z: flips the sign of amplitudes where both qubits are 1.
    /// Symmetric in its arguments.
    pub fn apply_cz(&mut self, a: usize, b: usize) -> Result<()> {
        if a == b {
            return Err(Error::IdenticalQubits(a));
        }
        let mask = (self.check_qubit(a)? | self.check_qubit(b)?) as usize;
        for i in 0..self.amps.len() {
            if i & mask == mask {
                self.amps[i] = -self.amps[i];
            }
        }
        Ok(())
    }

    /// `|amp|^2` for every basis index, in index order.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amps.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// The two-layer hardware-efficient circuit:
/// a Y-rotation on every qubit (angles `0..n`), a controlled-Z chain over
/// neighboring qubits `(0,1), (1,2), ..., (n-2, n-1)`, then a second
/// Y-rotation layer (angles `n..2n`). Takes exactly `2 * n_qubits` angles.
pub fn two_local_state(params: &[f64], n_qubits: usize) -> Result<Statevector> {
    if params.len() != 2 * n_qubits {
        return Err(Error::ParamCountMismatch {
            n_qubits,
            expected: 2 * n_qubits,
            got: params.len(),
        });
    }
    let mut state = Statevector::zero_state(n_qubits)?;
    for (q, &angle) in params[..n_qubits].iter().enumerate() {
        state.apply_ry(q, angle)?;
    }
    for q in 0..n_qubits.saturating_sub(1) {
        state.apply_cz(q, q + 1)?;
    }
    for (q, &angle) in params[n_qubits..].iter().enumerate() {
        state.apply_ry(q, angle)?;
    }
    Ok(state)
}

/// Uniform initial angles in `[-2pi, 2pi]`, `2 * n_qubits` of them.
pub fn random_params(n_qubits: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    use std::f64::consts::PI;
    (0..2 * n_qubits)
        .map(|_| rng.gen_range(-2.0 * PI..=2.0 * PI))
        .collect()
}

/// Draw `shots` outcomes from the state's exact distribution.
pub fn sample(state: &Statevector, shots: u32, rng: &mut ChaCha8Rng) -> Result<Counts> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let probs = state.probabilities();
    let mut cumulative = Vec::with_capacity(probs.len());
    let mut acc = 0.0;
    for p in &probs {
        acc += p;
        cumulative.push(acc);
    }
    let last = cumulative.len() - 1;
    let mut counts = Counts::new();
    for _ in 0..shots {
        let r: f64 = rng.gen::<f64>() * acc;
        let idx = cumulative.partition_point(|&c| c <= r).min(last);
        *counts.entry(idx as u64).or_insert(0) += 1;
    }
    Ok(counts)
}

/// [`sample`] with a one-off seeded generator; same seed, same counts.
pub fn sample_seeded(state: &Statevector, shots: u32, seed: u64) -> Result<Counts> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample(state, shots, &mut rng)
}

/// The generator used for run `run_index` of a seeded experiment: one
/// ChaCha8 stream per run, all derived from the same master seed.
pub fn run_rng(master_seed: u64, run_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(run_index);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn amp(state: &Statevector, idx: usize) -> f64 {
        state.amplitudes()[idx].re
    }

    #[test]
    fn zero_state_is_all_zeros_ket() {
        let s = Statevector::zero_state(3).unwrap();
        assert_eq!(amp(&s, 0), 1.0);
        assert!((s.norm() - 1.0).abs() < 1e-15);
        assert!(Statevector::zero_state(0).is_err());
        assert!(Statevector::zero_state(MAX_QUBITS + 1).is_err());
    }

    #[test]
    fn ry_zero_is_identity() {
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(1, 0.0).unwrap();
        assert_eq!(amp(&s, 0), 1.0);
    }

    #[test]
    fn ry_pi_flips_a_qubit() {
        let mut s = Statevector::zero_state(2).unwrap();
        // qubit 0 is the most significant bit: flipping it lands on |10> = index 2
        s.apply_ry(0, PI).unwrap();
        assert!((amp(&s, 2) - 1.0).abs() < 1e-15);
        assert!(amp(&s, 0).abs() < 1e-15);
    }

    #[test]
    fn ry_half_pi_makes_an_equal_superposition() {
        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap();
        let x = 1.0 / 2.0f64.sqrt();
        assert!((amp(&s, 0) - x).abs() < 1e-15);
        assert!((amp(&s, 1) - x).abs() < 1e-15);
    }

    #[test]
    fn ry_inverse_restores_the_state() {
        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, 0.7).unwrap();
        s.apply_ry(0, -0.7).unwrap();
        assert!((amp(&s, 0) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn cz_negates_only_the_both_ones_amplitude() {
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap();
        s.apply_ry(1, PI / 2.0).unwrap();
        s.apply_cz(0, 1).unwrap();
        assert!(amp(&s, 0) > 0.0);
        assert!(amp(&s, 1) > 0.0);
        assert!(amp(&s, 2) > 0.0);
        assert!(amp(&s, 3) < 0.0, "both-ones amplitude must flip sign");
    }

    #[test]
    fn cz_leaves_basis_states_without_both_ones_alone() {
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, PI).unwrap(); // |10>
        s.apply_cz(0, 1).unwrap();
        assert!((amp(&s, 2) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn cz_is_symmetric() {
        let mut a = Statevector::zero_state(3).unwrap();
        let mut b = Statevector::zero_state(3).unwrap();
        for q in 0..3 {
            a.apply_ry(q, 0.3 + q as f64).unwrap();
            b.apply_ry(q, 0.3 + q as f64).unwrap();
        }
        a.apply_cz(0, 2).unwrap();
        b.apply_cz(2, 0).unwrap();
        assert_eq!(a.amplitudes(), b.amplitudes());
    }

    #[test]
    fn gate_argument_errors() {
        let mut s = Statevector::zero_state(2).unwrap();
        assert!(matches!(
            s.apply_ry(2, 0.1),
            Err(Error::QubitOutOfRange { qubit: 2, .. })
        ));
        assert!(matches!(s.apply_cz(1, 1), Err(Error::IdenticalQubits(1))));
        assert!(s.apply_cz(0, 5).is_err());
    }

    #[test]
    fn two_local_param_count() {
        assert!(two_local_state(&[0.0; 4], 2).is_ok());
        assert!(matches!(
            two_local_state(&[0.0; 3], 2),
            Err(Error::ParamCountMismatch {
                expected: 4,
                got: 3,
                ..
            })
        ));
        // 16 qubits need 32 angles
        assert!(two_local_state(&[0.0; 32], 16).is_ok());
        assert!(two_local_state(&[0.0; 31], 16).is_err());
    }

    #[test]
    fn two_local_all_zero_angles_is_the_zero_ket() {
        let s = two_local_state(&[0.0; 8], 4).unwrap();
        assert_eq!(amp(&s, 0), 1.0);
    }

    #[test]
    fn two_local_single_qubit_has_no_entangler() {
        let s = two_local_state(&[PI, 0.0], 1).unwrap();
        assert!((amp(&s, 1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn probabilities_sum_to_one() {
        let s = two_local_state(&[0.3, -1.2, 0.8, 2.2, -0.4, 1.0], 3).unwrap();
        let total: f64 = s.probabilities().iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sampling_a_basis_state_is_deterministic() {
        let mut s = Statevector::zero_state(2).unwrap();
        s.apply_ry(0, PI).unwrap(); // all mass on |10>
        let counts = sample_seeded(&s, 1000, 1).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&2], 1000);
    }

    #[test]
    fn sampling_is_reproducible_per_seed() {
        let s = two_local_state(&[0.4, 1.3, -0.2, 0.9], 2).unwrap();
        let a = sample_seeded(&s, 512, 42).unwrap();
        let b = sample_seeded(&s, 512, 42).unwrap();
        assert_eq!(a, b);
        let c = sample_seeded(&s, 512, 43).unwrap();
        assert_ne!(a, c, "different seeds should (here) give different draws");
    }

    #[test]
    fn sampling_roughly_follows_the_distribution() {
        let mut s = Statevector::zero_state(1).unwrap();
        s.apply_ry(0, PI / 2.0).unwrap(); // 50/50
        let counts = sample_seeded(&s, 1024, 7).unwrap();
        let zeros = *counts.get(&0).unwrap_or(&0);
        assert!((412..=612).contains(&zeros), "got {zeros} zeros of 1024");
    }

    #[test]
    fn sample_rejects_zero_shots() {
        let s = Statevector::zero_state(1).unwrap();
        assert!(matches!(sample_seeded(&s, 0, 1), Err(Error::ZeroShots)));
    }

    #[test]
    fn counts_always_total_the_shot_count() {
        let s = two_local_state(&[1.0, 0.5, -0.7, 0.2, 0.1, -1.4], 3).unwrap();
        let counts = sample_seeded(&s, 777, 3).unwrap();
        let total: u32 = counts.values().sum();
        assert_eq!(total, 777);
    }

    #[test]
    fn run_streams_are_independent_but_reproducible() {
        let a: Vec<f64> = random_params(2, &mut run_rng(9, 0));
        let b: Vec<f64> = random_params(2, &mut run_rng(9, 0));
        let c: Vec<f64> = random_params(2, &mut run_rng(9, 1));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn random_params_stay_in_range() {
        let params = random_params(50, &mut run_rng(1, 0));
        assert_eq!(params.len(), 100);
        for p in params {
            assert!((-2.0 * PI..=2.0 * PI).contains(&p));
        }
    }
}
