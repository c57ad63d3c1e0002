//! Which complexes are K-complexes of posets: exactly those where every
//! facet has a vertex of its own.
//!
//! Run with `cargo run --example realization`.

use dowker::enumerate::all_complete_complexes;
use dowker::poset::{realize_as_poset_k_complex, Side};
use dowker::SimplicialComplex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t =
        SimplicialComplex::from_labels(&[&["a", "b", "p"], &["b", "c", "q"], &["a", "c", "r"]])?;
    let p = realize_as_poset_k_complex(&t)?;
    println!(
        "covers: {:?}",
        p.cover_pairs()
            .iter()
            .map(|&(a, b)| (p.label(a), p.label(b)))
            .collect::<Vec<_>>()
    );
    assert_eq!(p.dowker_complex(false, Side::K)?, t);

    let boundary = SimplicialComplex::from_labels(&[&["a", "b"], &["a", "c"], &["b", "c"]])?;
    println!(
        "boundary of a triangle: {}",
        realize_as_poset_k_complex(&boundary).unwrap_err()
    );

    for n in 1..=4 {
        let all = all_complete_complexes(n);
        let ok = all
            .iter()
            .filter(|t| realize_as_poset_k_complex(t).is_ok())
            .count();
        println!(
            "{n} vertices: {ok} of {} complete complexes are realizable",
            all.len()
        );
    }
    Ok(())
}
