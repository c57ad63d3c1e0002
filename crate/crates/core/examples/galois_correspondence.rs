//! Subcomplexes of the full simplex on X correspond to relations up to
//! equivalence, and morphisms exist exactly when K-complexes are nested.
//!
//! Run with `cargo run --example galois_correspondence`.

use std::sync::Arc;

use dowker::complex::are_contiguous;
use dowker::relation::{are_equivalent, canonical_relation, find_morphism};
use dowker::{Relation, RelationMorphism, SimplicialComplex, Universe};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = Arc::new(Universe::new(["1", "2", "3"])?);

    let path = SimplicialComplex::from_label_facets(x.clone(), &[vec!["1", "2"], vec!["2", "3"]])?;
    let canonical = canonical_relation(&path)?;
    println!(
        "canonical relation has {} columns: {:?}",
        canonical.y_universe().len(),
        canonical.y_universe().labels()
    );
    assert_eq!(canonical.k_complex()?, path);

    // a smaller relation with the same K-complex is equivalent to it
    let y = Arc::new(Universe::new(["e12", "e23"])?);
    let edges = Relation::from_labels(
        x.clone(),
        y,
        &[("1", "e12"), ("2", "e12"), ("2", "e23"), ("3", "e23")],
    )?;
    println!(
        "equivalent to the canonical relation: {}",
        are_equivalent(&edges, &canonical)?
    );

    // the full triangle contains the path, so a morphism exists one way only
    let z = Arc::new(Universe::new(["t"])?);
    let triangle = Relation::from_labels(x, z, &[("1", "t"), ("2", "t"), ("3", "t")])?;
    let f = find_morphism(&edges, &triangle)?;
    println!("edges -> triangle: {f:?}");
    println!("triangle -> edges: {:?}", find_morphism(&triangle, &edges)?);

    // any two morphisms into the same target induce contiguous maps on L
    let m1 = RelationMorphism::new(
        edges.clone(),
        canonical.clone(),
        find_morphism(&edges, &canonical)?.unwrap(),
    )?;
    let top = canonical.y_universe().lookup("{2,3}")?;
    let mut other = m1.assignment().to_vec();
    other[1] = top;
    let m2 = RelationMorphism::new(edges.clone(), canonical.clone(), other)?;
    let (l, l2) = (edges.l_complex()?, canonical.l_complex()?);
    println!(
        "induced maps contiguous: {}",
        are_contiguous(&m1.induced_l_map(), &m2.induced_l_map(), &l, &l2)?
    );
    Ok(())
}
