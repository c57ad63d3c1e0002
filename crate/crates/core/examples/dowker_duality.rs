//! K and L complexes of a relation have the same homology.
//!
//! Run with `cargo run --example dowker_duality`.

use std::sync::Arc;

use dowker::{homology, Relation, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // six points covered by three overlapping sets
    let points = Arc::new(Universe::new(["a", "b", "c", "d", "e", "f"])?);
    let arcs = [
        ("U".to_string(), vec!["a", "b", "d"]),
        ("V".to_string(), vec!["a", "c", "e"]),
        ("W".to_string(), vec!["b", "c", "f"]),
    ];
    let r = Relation::membership(points, &arcs)?;

    let k = r.k_complex()?;
    let l = r.l_complex()?;
    println!("K facets: {:?}", k.label_facets());
    println!("L facets (nerve of the cover): {:?}", l.label_facets());
    println!("H(K) = {}   H(L) = {}", homology(&k), homology(&l));
    assert_eq!(homology(&k), homology(&l));

    // L is the K-complex of the transposed relation
    assert_eq!(l, r.transpose().k_complex()?);
    println!("uncovered columns: {:?}", r.uncovered());
    Ok(())
}
