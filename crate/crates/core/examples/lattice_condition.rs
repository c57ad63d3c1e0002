//! Exhaustive check over small posets: when every two down-sets meet in a
//! down-set or not at all, the order complex and L have the same homology.
//!
//! Run with `cargo run --release --example lattice_condition`.

use dowker::enumerate::all_posets;
use dowker::homology;
use dowker::poset::Side;

fn main() {
    for n in 1..=5 {
        let posets = all_posets(n);
        let mut lattice = 0;
        for p in &posets {
            if !p.lattice_condition() {
                continue;
            }
            lattice += 1;
            let c = homology(&p.order_complex().unwrap());
            let l = homology(&p.dowker_complex(false, Side::L).unwrap());
            assert_eq!(c, l, "{:?}", p.cover_pairs());
        }
        println!(
            "{n} elements: {} labelled posets, {lattice} satisfy the condition, all agree",
            posets.len()
        );
    }
}
