//! Scan every assignment of a problem, print the lowest cost levels with
//! their degeneracies, and cross-check the count of constraint-satisfying
//! assignments against the closed-form multinomial.
//!
//! Run with `cargo run --example exact_spectrum -- [preset]`; the preset
//! defaults to `cu-thq-hhtp`.

use mtvq::{count_configs, enumerate_valid, ground_state, preset, spectrum};

fn main() -> mtvq::Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "cu-thq-hhtp".to_string());
    let spec = preset(&name)?;
    println!(
        "{name}: scanning all 2^{} = {} assignments",
        spec.n_qubits(),
        1u64 << spec.n_qubits()
    );

    let ground = ground_state(&spec)?;
    println!("ground value {:.6}", ground.value);
    for config in &ground.configurations {
        println!("  minimizer {config}");
    }

    println!("\nlowest levels:");
    for (rank, level) in spectrum(&spec, 6)?.iter().enumerate() {
        println!(
            "  level {rank}: value {:>12.6}  degeneracy {:>2}  first {}",
            level.value,
            level.configurations.len(),
            level.configurations[0]
        );
    }

    // Assignments that satisfy both hard constraints exactly. Their number
    // has a closed form, which the lazy enumeration must reproduce.
    let expected = count_configs(spec.n_sites() as u32, spec.ratio())?;
    let listed = enumerate_valid(&spec).count();
    println!("\nconstraint-satisfying assignments: {listed} (closed form {expected})");
    assert_eq!(expected, listed.into());

    // Everything in the low spectrum of a well-penalized problem should be
    // one of them; show where the first constraint violator appears.
    let deep = spectrum(&spec, 40)?;
    let violator = deep.iter().enumerate().find(|(_, level)| {
        level
            .configurations
            .iter()
            .any(|c| spec.ratio_cost(c).unwrap() > 0.0 || spec.occupancy_cost(c).unwrap() > 0.0)
    });
    match violator {
        Some((rank, level)) => println!(
            "first constraint-violating level: rank {rank} at value {:.6}",
            level.value
        ),
        None => println!("no constraint violation in the first {} levels", deep.len()),
    }
    Ok(())
}
