//! Score individual assignments and show where their cost comes from: the
//! three penalty terms and the per-edge linker-length distribution that
//! the balance term summarizes.
//!
//! Run with `cargo run --example evaluate_bitstring -- [preset] [bitstring...]`.
//! Without arguments it contrasts an alternating and a clustered layout of
//! the two linker types on `muf-7`.

use mtvq::{preset, Configuration, ProblemSpec};

fn describe(spec: &ProblemSpec, config: &Configuration) -> mtvq::Result<()> {
    let terms = spec.term_breakdown(config)?;
    println!("{config}");
    println!("  ratio     {:>10.4}", terms.ratio);
    println!("  occupancy {:>10.4}", terms.occupancy);
    println!("  balance   {:>10.4}", terms.balance);
    println!("  total     {:>10.4}", terms.total);

    // How far each edge's combined linker length sits from the target mean.
    let mean = spec.mean_edge_length();
    println!("  edge lengths (target mean {mean:.3}):");
    for (edge, weight) in spec.graph().weighted_edges() {
        let length = spec.edge_length(config, edge)?;
        println!(
            "    {}-{}  length {:>6.3}  deviation {:>7.3}  weight {:>6.3}  cost {:>8.4}",
            edge.i,
            edge.j,
            length,
            length - mean,
            weight,
            weight * (length - mean) * (length - mean)
        );
    }
    println!();
    Ok(())
}

fn main() -> mtvq::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "muf-7".to_string());
    let spec = preset(&name)?;
    println!("{name}: {} variables\n", spec.n_qubits());

    let strings: Vec<String> = args.collect();
    if strings.is_empty() {
        // An alternating layout keeps every edge near the mean length; a
        // clustered one concentrates long linkers on a few edges.
        let half = spec.n_sites() / 2;
        let alternating: String = (0..spec.n_sites())
            .flat_map(|s| if s % 2 == 0 { ['0', '1'] } else { ['1', '0'] })
            .collect();
        let clustered: String = (0..spec.n_sites())
            .flat_map(|s| if s < half { ['0', '1'] } else { ['1', '0'] })
            .collect();
        describe(&spec, &spec.parse_config(&alternating)?)?;
        describe(&spec, &spec.parse_config(&clustered)?)?;
    } else {
        for s in &strings {
            describe(&spec, &spec.parse_config(s)?)?;
        }
    }
    Ok(())
}
