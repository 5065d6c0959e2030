//! Walk through every bundled problem: lattice shape, linker catalog, mix
//! ratio, and the derived quantities the cost function is built from.
//!
//! Run with `cargo run --example presets_tour`.

use mtvq::{preset, EdgeKind, PRESET_NAMES};

fn main() -> mtvq::Result<()> {
    for name in PRESET_NAMES {
        let spec = preset(name)?;
        let graph = spec.graph();

        println!("{name}");
        println!(
            "  {} sites x {} linker types = {} binary variables",
            spec.n_sites(),
            spec.n_types(),
            spec.n_qubits()
        );

        let topological = graph
            .edges()
            .iter()
            .filter(|e| e.kind == EdgeKind::Topological)
            .count();
        let spatial = graph.n_edges() - topological;
        println!(
            "  {} edges ({topological} topological, {spatial} spatial), distance exponent {}",
            graph.n_edges(),
            graph.alpha()
        );

        for (t, linker) in spec.catalog().types().iter().enumerate() {
            println!(
                "  linker {:<6} length {:>6.3}  target count {}",
                linker.label,
                linker.characteristic_length,
                spec.ratio().counts()[t]
            );
        }
        println!("  mean edge length {:.6}", spec.mean_edge_length());

        // The weights actually multiplying each edge's squared deviation.
        let mut weights: Vec<f64> = graph.weights().to_vec();
        weights.sort_by(|a, b| a.partial_cmp(b).unwrap());
        weights.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        let rendered: Vec<String> = weights.iter().map(|w| format!("{w:.3}")).collect();
        println!("  distinct edge weights: {}", rendered.join(", "));
        println!(
            "  penalty strengths: ratio {}, occupancy {}",
            spec.c_ratio(),
            spec.c_occ()
        );
        println!();
    }
    Ok(())
}
