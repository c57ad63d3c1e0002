//! Generators for small posets, relations and complexes, exhaustive or random.
//!
//! Elements are always labelled `"1"`, `"2"`, ... so generated values can be
//! compared across runs.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::{SimplicialComplex, Universe, Vertex};
use crate::poset::Poset;
use crate::relation::Relation;

/// Every partial order on `n` labelled elements.
///
/// Built by adding one element at a time: the new element's strict down-set
/// `D` and strict up-set `U` must be a down-set and an up-set of the old
/// order, disjoint, with every element of `D` below every element of `U`.
pub fn all_posets(n: usize) -> Vec<Poset> {
    let u = Arc::new(Universe::numbered(n));
    all_order_matrices(n)
        .into_iter()
        .map(|m| Poset::from_matrix(u.clone(), m))
        .collect()
}

fn all_order_matrices(n: usize) -> Vec<Vec<Vec<bool>>> {
    if n == 0 {
        return vec![vec![]];
    }
    let k = n - 1;
    let mut out = Vec::new();
    for old in all_order_matrices(k) {
        let le = |a: usize, b: usize| old[a][b];
        for dmask in 0u32..1 << k {
            let down: Vec<usize> = (0..k).filter(|i| dmask >> i & 1 == 1).collect();
            // down must be down-closed
            if !down
                .iter()
                .all(|&d| (0..k).all(|z| !le(z, d) || dmask >> z & 1 == 1))
            {
                continue;
            }
            for umask in 0u32..1 << k {
                if umask & dmask != 0 {
                    continue;
                }
                let up: Vec<usize> = (0..k).filter(|i| umask >> i & 1 == 1).collect();
                if !up
                    .iter()
                    .all(|&t| (0..k).all(|z| !le(t, z) || umask >> z & 1 == 1))
                {
                    continue;
                }
                if !down.iter().all(|&d| up.iter().all(|&t| le(d, t))) {
                    continue;
                }
                let mut m: Vec<Vec<bool>> = old
                    .iter()
                    .map(|row| {
                        let mut r = row.clone();
                        r.push(false);
                        r
                    })
                    .collect();
                let mut last = vec![false; n];
                last[k] = true;
                for &t in &up {
                    last[t] = true;
                }
                for &d in &down {
                    m[d][k] = true;
                }
                m.push(last);
                out.push(m);
            }
        }
    }
    out
}

/// A random order on `n` elements: each pair of a random permutation is
/// related with probability `density`, then transitively closed.
pub fn random_poset<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    Poset::from_pairs(Arc::new(Universe::numbered(n)), pairs).expect("pairs follow a linear order")
}

/// Every relation between `nx` and `ny` labelled elements (`y` labels are
/// `"y1"`, `"y2"`, ...).
pub fn all_relations(nx: usize, ny: usize) -> impl Iterator<Item = Relation> {
    let x = Arc::new(Universe::numbered(nx));
    let y = Arc::new(y_universe(ny));
    let cells = nx * ny;
    assert!(cells < 32, "too many relations to enumerate");
    (0u32..1 << cells).map(move |mask| {
        let pairs = (0..cells)
            .filter(|c| mask >> c & 1 == 1)
            .map(|c| (c / ny, c % ny));
        Relation::new(x.clone(), y.clone(), pairs).expect("pairs in range")
    })
}

pub fn all_covered_relations(nx: usize, ny: usize) -> impl Iterator<Item = Relation> {
    all_relations(nx, ny).filter(Relation::is_covered)
}

fn y_universe(ny: usize) -> Universe {
    Universe::new((1..=ny).map(|i| format!("y{i}"))).expect("distinct labels")
}

/// A random covered relation: each cell with probability `density`, then
/// one random `x` for every uncovered `y`.
pub fn random_covered_relation<R: Rng + ?Sized>(
    rng: &mut R,
    x: &Arc<Universe>,
    ny: usize,
    density: f64,
) -> Relation {
    let y = Arc::new(y_universe(ny));
    let mut pairs = Vec::new();
    for b in 0..ny {
        let before = pairs.len();
        for a in 0..x.len() {
            if rng.gen_bool(density) {
                pairs.push((a, b));
            }
        }
        if pairs.len() == before {
            pairs.push((rng.gen_range(0..x.len()), b));
        }
    }
    Relation::new(x.clone(), y, pairs).expect("pairs in range")
}

/// Every complex on `n` vertices in which each vertex appears, via the
/// antichains of nonempty subsets that cover `{1..n}`.
pub fn all_complete_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 5, "antichain enumeration explodes beyond 5 vertices");
    let u = Arc::new(Universe::numbered(n));
    let masks: Vec<u32> = (1u32..1 << n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&masks, 0, &mut chosen, &mut |facets: &[u32]| {
        let union = facets.iter().fold(0, |a, &m| a | m);
        if union == (1 << n) - 1 {
            out.push(complex_from_masks(&u, facets));
        }
    });
    out
}

fn antichains(masks: &[u32], from: usize, chosen: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
    visit(chosen);
    for i in from..masks.len() {
        let m = masks[i];
        if chosen.iter().all(|&c| c & m != c && c & m != m) {
            chosen.push(m);
            antichains(masks, i + 1, chosen, visit);
            chosen.pop();
        }
    }
}

fn complex_from_masks(u: &Arc<Universe>, masks: &[u32]) -> SimplicialComplex {
    let facets = masks
        .iter()
        .map(|&m| (0..u.len()).filter(move |i| m >> i & 1 == 1));
    SimplicialComplex::from_facets(u.clone(), facets).expect("masks are nonempty and in range")
}

/// A random complete complex on `n` vertices with up to `max_facets` drawn facets.
pub fn random_complete_complex<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_facets: usize,
) -> SimplicialComplex {
    assert!((1..32).contains(&n));
    let u = Arc::new(Universe::numbered(n));
    let count = rng.gen_range(1..=max_facets.max(1));
    let mut masks: Vec<u32> = (0..count).map(|_| rng.gen_range(1..1u32 << n)).collect();
    let covered = masks.iter().fold(0, |a, &m| a | m);
    masks.extend((0..n).filter(|i| covered >> i & 1 == 0).map(|i| 1 << i));
    complex_from_masks(&u, &masks)
}

/// All complexes on `n` vertices (complete or not), for small `n`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!(n <= 4);
    let u = Arc::new(Universe::numbered(n));
    let masks: Vec<u32> = (1u32..1 << n).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&masks, 0, &mut chosen, &mut |facets: &[u32]| {
        if !facets.is_empty() {
            out.push(complex_from_masks(&u, facets));
        }
    });
    out
}
