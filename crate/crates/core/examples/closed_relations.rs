//! A closed relation whose fibers are all contractible but which fails the
//! weak hypothesis: the order complexes agree, the K-complexes do not.
//!
//! Run with `cargo run --example closed_relations`.

use dowker::closed::{verify_closed_relation, Mode};
use dowker::{io, ClosedRelation, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x = Poset::from_labels(
        &["1", "2", "3", "4"],
        &[("1", "3"), ("1", "4"), ("2", "3"), ("2", "4")],
    )?;
    let y = Poset::from_labels(
        &["a", "b", "c", "d", "e", "f"],
        &[
            ("a", "d"),
            ("a", "e"),
            ("b", "d"),
            ("b", "f"),
            ("c", "e"),
            ("c", "f"),
        ],
    )?;
    let pairs = [
        ("1", "d"),
        ("2", "e"),
        ("3", "b"),
        ("3", "c"),
        ("3", "d"),
        ("3", "e"),
        ("3", "f"),
        ("4", "a"),
        ("4", "d"),
        ("4", "e"),
    ];
    let r = ClosedRelation::from_labels(x, y, &pairs)?;

    for mode in [Mode::Quillen, Mode::Weak] {
        let v = verify_closed_relation(&r, mode)?;
        println!(
            "{mode:?}: hypothesis {} | H_X = {} | H_Y = {} | verdict {:?}",
            v.hypothesis_holds, v.homology_x, v.homology_y, v.verdict
        );
    }
    let weak = r.weak_hypothesis()?;
    println!("first fiber without a maximum: {:?}", weak.witness);
    println!("relation poset has {} elements", r.relation_poset().len());

    let report = verify_closed_relation(&r, Mode::Quillen)?;
    println!("{}", io::write_report(&report));
    Ok(())
}
