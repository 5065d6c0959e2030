//! Ground-state linker placement for multivariate porous frameworks.
//!
//! A framework material built from several linker molecules at once is
//! modeled as a graph: one vertex per linker site, edges between sites that
//! interact, weighted by distance. Which linker occupies which site is
//! encoded in one binary variable per (site, linker type) pair, and a
//! diagonal cost function scores every assignment with three terms:
//!
//! * **ratio** — squared deviation of each linker type's count from its
//!   target stoichiometry,
//! * **occupancy** — squared deviation of each site from exactly one linker,
//! * **balance** — for every weighted edge, the squared deviation of the
//!   two endpoints' combined linker length from the mixture average, so
//!   that short and long linkers spread evenly instead of clustering.
//!
//! The crate finds minimizers two ways and cross-checks them:
//!
//! * [`exact`] enumerates every assignment (or only the stoichiometric
//!   ones) and reports the lowest-cost levels.
//! * [`vqe`] runs a sampled variational loop: a hardware-style two-layer
//!   circuit ([`sim`]) is measured a finite number of shots per step and
//!   its parameters tuned by simultaneous-perturbation (SPSA) descent;
//!   many independent seeded runs are aggregated into a distribution whose
//!   peak is compared against the exact ground state.
//!
//! Four built-in problems ([`presets`]) model published material systems
//! with reconstructed cell geometries; arbitrary problems load from JSON
//! ([`schema`]). The `mtvq` binary ([`cli`]) exposes everything as
//! subcommands with reproducible, file-based output.
//!
//! # Examples
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! * `presets_tour` — the built-in problems and their cost landscapes
//! * `exact_spectrum` — full enumeration, lowest levels, degeneracies
//! * `evaluate_bitstring` — term-by-term scoring of hand-picked layouts
//! * `vqe_single_run` — one optimization run, step by step
//! * `vqe_aggregate` — a many-run batch and its aggregated distribution
//! * `alpha_sweep` — success rate as the spatial weighting varies
//! * `custom_topology` — build a problem from scratch and round-trip it
//!   through JSON
//!
//! # Determinism
//!
//! Every randomized routine takes explicit seeds. Run `r` of a batch uses
//! an independent, reproducible generator stream, so results do not depend
//! on thread scheduling; the `MTVQ_THREADS` environment variable caps the
//! worker pool used by the batch drivers.

pub mod cli;
pub mod error;
pub mod exact;
pub mod hamiltonian;
pub mod presets;
pub mod schema;
pub mod sim;
pub mod topology;
pub mod vqe;

pub use error::{Error, Result};
pub use exact::{
    count_configs, enumerate_valid, ground_state, spectrum, SpectrumEntry, ValidConfigurations,
    DEFAULT_ENUMERATION_LIMIT,
};
pub use hamiltonian::{
    qubit_index, Configuration, LengthForm, ProblemSpec, RatioSpec, TermBreakdown,
};
pub use presets::{preset, PRESET_NAMES};
pub use schema::{load_problem, problem_from_json, problem_to_json};
pub use sim::{run_rng, sample, sample_seeded, two_local_state, Counts, Statevector, MAX_QUBITS};
pub use topology::{edge_weight, Edge, EdgeKind, LinkerCatalog, LinkerType, SiteGraph};
pub use vqe::{
    aggregate, alpha_sweep, expectation, expectation_exact, run_all, run_vqe, spsa_minimize,
    Distribution, RunResult, SpsaGains, SweepRow, VqeSettings,
};
