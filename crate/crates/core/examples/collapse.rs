//! The complex of `≤` collapses onto the complex of `<`.
//!
//! Run with `cargo run --example collapse`.

use dowker::collapse::{certify_contractible, collapse_leq_to_strict, greedy_collapse};
use dowker::io;
use dowker::poset::Side;
use dowker::{homology, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x1 = Poset::from_labels(
        &["1", "2", "3", "4"],
        &[("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
    )?;
    for side in [Side::K, Side::L] {
        let seq = collapse_leq_to_strict(&x1, side)?;
        println!("{side:?}: {:?}", seq.initial.label_facets());
        for (i, (free, coface)) in seq.label_steps().iter().enumerate() {
            println!("  step {i}: remove {free:?} with {coface:?}");
        }
        let last = seq.verify()?;
        println!(
            "  ends at {:?}, H = {}",
            last.label_facets(),
            homology(&last)
        );
        println!("  {}", io::write_report(&io::sequence_json(&seq)));
    }

    let k = x1.dowker_complex(false, Side::K)?;
    let (core, seq) = greedy_collapse(&k);
    println!(
        "greedy: {} steps down to {:?}",
        seq.steps.len(),
        core.label_facets()
    );
    println!(
        "certificate: {}",
        io::write_report(&certify_contractible(&k))
    );

    let lonely = Poset::from_labels(&["a", "b", "c"], &[("a", "b")])?;
    println!(
        "with an isolated point: {}",
        collapse_leq_to_strict(&lonely, Side::K).unwrap_err()
    );
    Ok(())
}
