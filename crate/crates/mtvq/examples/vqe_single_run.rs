//! One optimization run end to end: seeded parameter initialization, SPSA
//! descent over the sampled circuit, and the final measured distribution,
//! compared against the exact ground states.
//!
//! Run with `cargo run --example vqe_single_run -- [preset] [seed]`.

use mtvq::vqe::run_vqe;
use mtvq::{ground_state, preset, VqeSettings};

fn main() -> mtvq::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "muf-7".to_string());
    let seed: u64 = args
        .next()
        .map(|s| s.parse().expect("numeric seed"))
        .unwrap_or(7);

    let spec = preset(&name)?;
    let settings = VqeSettings {
        master_seed: seed,
        ..VqeSettings::default()
    };
    println!(
        "{name}: {} iterations, {} shots per estimate, seed {seed}",
        settings.iterations, settings.shots
    );

    let run = run_vqe(&spec, &settings, 0)?;

    println!("\nobjective trace (every 30th iteration):");
    for (i, value) in run.trace.iter().enumerate().step_by(30) {
        println!("  iter {i:>3}  objective {value:>12.4}");
    }
    println!(
        "  iter {:>3}  objective {:>12.4}",
        run.trace.len() - 1,
        run.trace.last().unwrap()
    );

    // Final sampled distribution, most probable outcomes first.
    let mut outcomes: Vec<(u64, f64)> = run
        .distribution
        .probs()
        .iter()
        .map(|(&i, &p)| (i, p))
        .collect();
    outcomes.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap().then(a.0.cmp(&b.0)));

    let ground = ground_state(&spec)?;
    println!(
        "\nexact ground value {:.6} with {} minimizers",
        ground.value,
        ground.configurations.len()
    );
    println!("top of the measured distribution:");
    for &(index, p) in outcomes.iter().take(5) {
        let bits = run.distribution.bitstring(index);
        let config = spec.parse_config(&bits)?;
        let mark = if ground.configurations.contains(&config) {
            "  <- ground state"
        } else {
            ""
        };
        println!(
            "  {bits}  p {p:.4}  cost {:>12.4}{mark}",
            spec.total_cost(&config)?
        );
    }

    let (argmax, p) = run.distribution.argmax().expect("nonempty distribution");
    println!(
        "\nargmax {} with probability {p:.4}",
        run.distribution.bitstring(argmax)
    );
    Ok(())
}
