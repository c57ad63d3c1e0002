//! A poset as a finite T0 space, its order complex and its two Dowker complexes.
//!
//! Run with `cargo run --example finite_spaces`.

use dowker::poset::{topology_to_order, Side};
use dowker::{homology, FiniteTopology, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x1 = Poset::from_labels(
        &["1", "2", "3", "4"],
        &[("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
    )?;

    let t = x1.to_topology()?;
    println!("{} open sets:", t.open_count());
    for open in t.opens() {
        let labels: Vec<&str> = open.iter().map(|&v| x1.label(v)).collect();
        println!("  {labels:?}");
    }
    assert_eq!(topology_to_order(&t)?, x1);

    let c = x1.order_complex()?;
    let k = x1.dowker_complex(false, Side::K)?;
    let l = x1.dowker_complex(false, Side::L)?;
    println!("order complex {:?}: H = {}", c.label_facets(), homology(&c));
    println!("K {:?}: H = {}", k.label_facets(), homology(&k));
    println!("L {:?}: H = {}", l.label_facets(), homology(&l));

    // two points with the same neighbourhoods are not T0
    let lumpy = FiniteTopology::from_labels(&["a", "b", "c"], &[&["a", "b"], &["a", "b", "c"]])?;
    println!("T0 violation: {:?}", lumpy.t0_violation());
    println!("to_order: {}", lumpy.to_order().unwrap_err());
    Ok(())
}
