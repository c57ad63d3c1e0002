//! Integer homology through Smith normal form.
//!
//! Run with `cargo run --example homology_engine`.

use dowker::homology::{boundary_matrices, smith_normal_form};
use dowker::{homology, io, IntegerMatrix, SimplicialComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rp2 = SimplicialComplex::from_labels(&[
        &["1", "2", "4"],
        &["1", "2", "6"],
        &["1", "3", "5"],
        &["1", "3", "6"],
        &["1", "4", "5"],
        &["2", "3", "4"],
        &["2", "3", "5"],
        &["2", "5", "6"],
        &["3", "4", "6"],
        &["4", "5", "6"],
    ])?;
    let h = homology(&rp2);
    println!(
        "projective plane: betti {:?}, torsion in degree 1: {:?}",
        h.betti,
        h.torsion(1)
    );
    println!("{}", io::write_report(&h));

    for (i, d) in boundary_matrices(&rp2).iter().enumerate() {
        println!(
            "boundary {}: {}x{}, invariant factors {:?}",
            i + 1,
            d.rows(),
            d.cols(),
            smith_normal_form(d)
        );
    }

    let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    println!("snf of a 3x3 matrix: {:?}", smith_normal_form(&m));
    println!(
        "euler characteristic: {} (faces) = {} (betti)",
        rp2.euler_characteristic(),
        h.euler_characteristic()
    );
    Ok(())
}
