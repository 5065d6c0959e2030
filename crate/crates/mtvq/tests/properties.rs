//! Structural properties checked over randomized inputs, plus a few fixed
//! numeric cross-checks that tie the presets to independently computed
//! values.

use proptest::prelude::*;
use rand::Rng;

use mtvq::{
    aggregate, edge_weight, enumerate_valid, ground_state, preset, problem_from_json,
    problem_to_json, run_rng, sample, spectrum, two_local_state, Configuration, Edge, EdgeKind,
    LengthForm, LinkerCatalog, LinkerType, ProblemSpec, RatioSpec, SiteGraph,
};

/// A small random problem, deterministic in `seed`: 2..=5 sites, two linker
/// types, a random edge subset with random kinds and distances.
fn random_spec(seed: u64) -> ProblemSpec {
    let mut rng = run_rng(seed, 0);
    let n_sites = rng.gen_range(2..=5usize);
    let mut edges = Vec::new();
    for i in 0..n_sites {
        for j in (i + 1)..n_sites {
            if edges.is_empty() || rng.gen_bool(0.7) {
                let kind = if rng.gen_bool(0.5) {
                    EdgeKind::Topological
                } else {
                    EdgeKind::Spatial
                };
                edges.push(Edge::new(i, j, rng.gen_range(0.5..8.0), kind));
            }
        }
    }
    let alpha = rng.gen_range(0.0..=1.0);
    let graph = SiteGraph::new(n_sites, edges, alpha).unwrap();
    let catalog = LinkerCatalog::new(vec![
        LinkerType::new("a", rng.gen_range(0.5..10.0)),
        LinkerType::new("b", rng.gen_range(0.5..10.0)),
    ])
    .unwrap();
    let n_a = rng.gen_range(0..=n_sites) as u32;
    let ratio = RatioSpec::new(vec![n_a, n_sites as u32 - n_a]);
    ProblemSpec::new(graph, catalog, ratio, 200.0, 300.0).unwrap()
}

fn random_config(spec: &ProblemSpec, seed: u64) -> Configuration {
    let mut rng = run_rng(seed, 1);
    Configuration::from_bits((0..spec.n_qubits()).map(|_| rng.gen_bool(0.5)).collect())
}

proptest! {
    #[test]
    fn weights_increase_with_distance(
        d1 in 0.1f64..50.0,
        d2 in 0.1f64..50.0,
        alpha in 0.01f64..=1.0,
    ) {
        let (lo, hi) = if d1 <= d2 { (d1, d2) } else { (d2, d1) };
        for kind in [EdgeKind::Topological, EdgeKind::Spatial] {
            let w_lo = edge_weight(lo, kind, alpha).unwrap();
            let w_hi = edge_weight(hi, kind, alpha).unwrap();
            prop_assert!(w_lo <= w_hi + 1e-12);
        }
    }

    #[test]
    fn spatial_weight_limits(d in 0.1f64..50.0) {
        // At full sensitivity a spatial edge weighs like a topological one;
        // at zero sensitivity it flattens to 1.
        let topo = edge_weight(d, EdgeKind::Topological, 0.5).unwrap();
        let full = edge_weight(d, EdgeKind::Spatial, 1.0).unwrap();
        let flat = edge_weight(d, EdgeKind::Spatial, 0.0).unwrap();
        prop_assert!((topo - full).abs() < 1e-12);
        prop_assert!((flat - 1.0).abs() < 1e-12);
    }

    #[test]
    fn configuration_index_round_trip(n_bits in 1usize..=16, raw in any::<u64>()) {
        let index = raw & ((1u64 << n_bits) - 1);
        let config = Configuration::from_index(index, n_bits);
        prop_assert_eq!(config.len(), n_bits);
        prop_assert_eq!(config.to_index(), Some(index));
        let reparsed = Configuration::parse(&config.to_string()).unwrap();
        prop_assert_eq!(reparsed, config);
    }

    #[test]
    fn cost_is_nonnegative(seed in any::<u64>(), config_seed in any::<u64>()) {
        let spec = random_spec(seed);
        let config = random_config(&spec, config_seed);
        let total = spec.total_cost(&config).unwrap();
        prop_assert!(total >= 0.0);
    }

    #[test]
    fn cost_is_a_quadratic_form(seed in any::<u64>(), probe in any::<u64>()) {
        // The cost has degree two in the binary variables, so the values at
        // the all-zero assignment, the single-bit assignments, and the
        // two-bit assignments determine it everywhere.
        let spec = random_spec(seed);
        let n = spec.n_qubits();
        let cost = |bits: &[bool]| {
            spec.total_cost(&Configuration::from_bits(bits.to_vec())).unwrap()
        };

        let zero = vec![false; n];
        let constant = cost(&zero);
        let mut linear = vec![0.0; n];
        for (i, l) in linear.iter_mut().enumerate() {
            let mut bits = zero.clone();
            bits[i] = true;
            *l = cost(&bits) - constant;
        }
        let mut pair = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                let mut bits = zero.clone();
                bits[i] = true;
                bits[j] = true;
                pair[i][j] = cost(&bits) - constant - linear[i] - linear[j];
            }
        }

        let config = random_config(&spec, probe);
        let mut predicted = constant;
        for i in 0..n {
            if config.bit(i) {
                predicted += linear[i];
                for (j, &coeff) in pair[i].iter().enumerate().skip(i + 1) {
                    if config.bit(j) {
                        predicted += coeff;
                    }
                }
            }
        }
        let actual = cost(config.bits());
        prop_assert!(
            (predicted - actual).abs() <= 1e-7 * (1.0 + actual.abs()),
            "quadratic reconstruction {} vs direct {}",
            predicted,
            actual
        );
    }

    #[test]
    fn swapping_both_types_and_ratio_preserves_cost(
        seed in any::<u64>(),
        config_seed in any::<u64>(),
    ) {
        let spec = random_spec(seed);
        let config = random_config(&spec, config_seed);

        let swapped_catalog = LinkerCatalog::new(vec![
            LinkerType::new("a", spec.catalog().length(1)),
            LinkerType::new("b", spec.catalog().length(0)),
        ])
        .unwrap();
        let counts = spec.ratio().counts();
        let swapped_ratio = RatioSpec::new(vec![counts[1], counts[0]]);
        let swapped_spec = ProblemSpec::new(
            spec.graph().clone(),
            swapped_catalog,
            swapped_ratio,
            spec.c_ratio(),
            spec.c_occ(),
        )
        .unwrap();

        let mut swapped_bits = Vec::with_capacity(config.len());
        for site in 0..spec.n_sites() {
            swapped_bits.push(config.bit(2 * site + 1));
            swapped_bits.push(config.bit(2 * site));
        }
        let swapped_config = Configuration::from_bits(swapped_bits);

        let original = spec.total_cost(&config).unwrap();
        let mirrored = swapped_spec.total_cost(&swapped_config).unwrap();
        prop_assert!(
            (original - mirrored).abs() <= 1e-9 * (1.0 + original.abs()),
            "{} vs {}",
            original,
            mirrored
        );
    }

    #[test]
    fn scaling_every_distance_scales_valid_costs(
        seed in any::<u64>(),
        lambda in 0.25f64..4.0,
    ) {
        // With only direct connections the weight is the distance itself,
        // so multiplying every distance by a factor multiplies the cost of
        // every stoichiometric assignment by the same factor (the ratio and
        // occupancy terms are zero there).
        let base = random_spec(seed);
        let mk = |factor: f64| {
            let edges: Vec<Edge> = base
                .graph()
                .edges()
                .iter()
                .map(|e| Edge::new(e.i, e.j, e.distance * factor, EdgeKind::Topological))
                .collect();
            let graph = SiteGraph::new(base.n_sites(), edges, base.graph().alpha()).unwrap();
            ProblemSpec::new(
                graph,
                base.catalog().clone(),
                base.ratio().clone(),
                base.c_ratio(),
                base.c_occ(),
            )
            .unwrap()
        };
        let unit = mk(1.0);
        let scaled = mk(lambda);
        for config in enumerate_valid(&unit).take(6) {
            let h1 = unit.total_cost(&config).unwrap();
            let h2 = scaled.total_cost(&config).unwrap();
            prop_assert!(
                (h2 - lambda * h1).abs() <= 1e-9 * (1.0 + h2.abs()),
                "{} vs {} * {}",
                h2,
                lambda,
                h1
            );
        }
    }

    #[test]
    fn circuit_norm_is_conserved(n in 1usize..=8, seed in any::<u64>()) {
        let mut rng = run_rng(seed, 2);
        let params = mtvq::sim::random_params(n, &mut rng);
        let state = two_local_state(&params, n).unwrap();
        prop_assert!((state.norm() - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn sampling_accounts_for_every_shot(n in 1usize..=6, seed in any::<u64>(), shots in 1u32..=2048) {
        let mut rng = run_rng(seed, 3);
        let params = mtvq::sim::random_params(n, &mut rng);
        let state = two_local_state(&params, n).unwrap();
        let counts = sample(&state, shots, &mut rng).unwrap();
        let total: u64 = counts.values().map(|&c| c as u64).sum();
        prop_assert_eq!(total, shots as u64);
        prop_assert!(counts.len() <= shots as usize);
        prop_assert!(counts.keys().all(|&i| i < (1u64 << n)));
    }

    #[test]
    fn spectrum_levels_are_sorted_disjoint_and_exhaustive(seed in any::<u64>()) {
        let spec = random_spec(seed);
        let levels = spectrum(&spec, 4).unwrap();
        prop_assert!(!levels.is_empty());
        for pair in levels.windows(2) {
            prop_assert!(pair[0].value < pair[1].value);
        }
        let ground = ground_state(&spec).unwrap();
        prop_assert_eq!(&ground.configurations, &levels[0].configurations);
        let listed: usize = levels.iter().map(|l| l.configurations.len()).sum();
        prop_assert!(listed <= 1 << spec.n_qubits());
    }

    #[test]
    fn aggregation_is_permutation_invariant(seed in any::<u64>()) {
        let spec = random_spec(seed);
        let settings = mtvq::VqeSettings {
            iterations: 5,
            shots: 32,
            runs: 3,
            master_seed: seed,
            ..mtvq::VqeSettings::default()
        };
        let mut runs = mtvq::run_all(&spec, &settings).unwrap();
        let forward = aggregate(&runs).unwrap();
        runs.reverse();
        let backward = aggregate(&runs).unwrap();
        prop_assert_eq!(forward.n_bits(), backward.n_bits());
        for (idx, p) in forward.probs() {
            let q = backward.probs()[idx];
            prop_assert!((p - q).abs() <= 1e-12);
        }
    }
}

#[test]
fn sampling_matches_the_exact_distribution_chi_square() {
    // Fixed two-qubit superposition; 4 outcomes leave three degrees of
    // freedom, and the 0.1% critical value of the chi-square statistic is
    // 16.266. A correct sampler seeded as below sits far under it.
    let params = vec![1.1, -0.6, 0.4, 0.9];
    let state = two_local_state(&params, 2).unwrap();
    let probs = state.probabilities();
    let shots = 4096u32;
    let mut rng = run_rng(17, 0);
    let counts = sample(&state, shots, &mut rng).unwrap();
    let mut chi2 = 0.0;
    for (idx, p) in probs.iter().enumerate() {
        let expected = p * shots as f64;
        let observed = counts.get(&(idx as u64)).copied().unwrap_or(0) as f64;
        if expected > 0.0 {
            chi2 += (observed - expected).powi(2) / expected;
        } else {
            assert_eq!(observed, 0.0);
        }
    }
    assert!(chi2 < 16.266, "chi-square statistic {chi2}");
}

#[test]
fn presets_round_trip_through_json() {
    for name in mtvq::PRESET_NAMES {
        let spec = preset(name).unwrap();
        let text = problem_to_json(&spec);
        let back = problem_from_json(&text, name).unwrap();
        assert_eq!(back, spec, "{name} changed across serialization");
    }
}

/// Reproduces the published per-structure minima with hand-rolled
/// arithmetic: type-count-scaled edge lengths and connection weights
/// rounded to two decimals, summed over the exact minimizer's edges.
#[test]
fn ground_values_match_published_rounded_arithmetic() {
    let expected = [
        ("cu-thq-hhtp", 293.88),
        ("py-mv-dba-cof", 350.89),
        ("muf-7", 0.0),
        ("sioc-cof2", 188.79),
    ];
    for (name, want) in expected {
        let spec = preset(name).unwrap();
        let ground = ground_state(&spec).unwrap();
        let config = &ground.configurations[0];
        let t = spec.n_types() as f64;
        let mean = t * spec.mean_edge_length();

        let type_of = |site: usize| -> usize {
            (0..spec.n_types())
                .find(|&ty| config.bit(spec.qubit_for(site, ty).unwrap()))
                .unwrap()
        };
        let mut total = 0.0;
        for (edge, weight) in spec.graph().weighted_edges() {
            let rounded = (weight * 100.0).round() / 100.0;
            let length = t
                * (spec.catalog().length(type_of(edge.i)) + spec.catalog().length(type_of(edge.j)));
            total += rounded * (length - mean).powi(2);
        }
        let total = (total * 100.0).round() / 100.0;
        assert!(
            (total - want).abs() < 1e-9,
            "{name}: rounded-arithmetic minimum {total}, expected {want}"
        );
    }
}

/// The type-count-scaled length form multiplies every balance term by the
/// square of the type count, so on stoichiometric assignments the two
/// forms give proportional totals and identical minimizer sets.
#[test]
fn length_forms_agree_up_to_a_constant_factor() {
    for name in mtvq::PRESET_NAMES {
        let spec = preset(name).unwrap();
        let scaled_spec = spec.clone().with_length_form(LengthForm::TypeScaled);
        let factor = (spec.n_types() as f64).powi(2);
        for config in enumerate_valid(&spec).take(10) {
            let plain = spec.total_cost(&config).unwrap();
            let scaled = scaled_spec.total_cost(&config).unwrap();
            assert!(
                (scaled - factor * plain).abs() <= 1e-9 * (1.0 + scaled.abs()),
                "{name}: {scaled} vs {factor} * {plain}"
            );
        }
        assert_eq!(
            ground_state(&spec).unwrap().configurations,
            ground_state(&scaled_spec).unwrap().configurations,
            "{name}: minimizer sets differ between length forms"
        );
    }
}
