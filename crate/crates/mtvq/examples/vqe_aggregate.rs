//! A full batch of independent optimization runs: per-run success
//! statistics, the shot-weighted aggregate distribution, and how much
//! probability the batch concentrates on the exact ground states.
//!
//! Run with `cargo run --example vqe_aggregate -- [preset] [runs]`.

use std::collections::HashSet;

use mtvq::{aggregate, ground_state, preset, run_all, VqeSettings};

fn main() -> mtvq::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "muf-7".to_string());
    let runs: usize = args
        .next()
        .map(|s| s.parse().expect("numeric run count"))
        .unwrap_or(64);

    let spec = preset(&name)?;
    let settings = VqeSettings {
        runs,
        ..VqeSettings::default()
    };
    println!(
        "{name}: {} runs x {} iterations, seed {}",
        settings.runs, settings.iterations, settings.master_seed
    );

    let ground = ground_state(&spec)?;
    let minimizers: HashSet<u64> = ground
        .configurations
        .iter()
        .map(|c| c.to_index().unwrap())
        .collect();

    let results = run_all(&spec, &settings)?;

    let mut hits = 0usize;
    let mut ground_mass = 0.0;
    for run in &results {
        let (argmax, _) = run.distribution.argmax().unwrap();
        if minimizers.contains(&argmax) {
            hits += 1;
        }
        ground_mass += minimizers
            .iter()
            .map(|i| run.distribution.probs().get(i).copied().unwrap_or(0.0))
            .sum::<f64>();
    }
    println!(
        "runs whose most probable outcome is a ground state: {hits}/{}",
        results.len()
    );
    println!(
        "average probability mass on the ground pair: {:.4}",
        ground_mass / results.len() as f64
    );

    let combined = aggregate(&results)?;
    let (argmax, p) = combined.argmax().unwrap();
    let bits = combined.bitstring(argmax);
    let config = spec.parse_config(&bits)?;
    println!("\naggregate over all runs:");
    println!("  support {} distinct outcomes", combined.support_len());
    println!(
        "  argmax {bits}  p {p:.4}  cost {:.4}  ground {}",
        spec.total_cost(&config)?,
        minimizers.contains(&argmax)
    );
    Ok(())
}
