//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dowker::closed::{
    all_closed_relations, is_closed, verify_closed_relation, ClosedError, Factor, Mode,
};
use dowker::collapse::{collapse_leq_to_strict, greedy_collapse, CollapseError};
use dowker::enumerate::{
    all_complete_complexes, all_complexes, all_covered_relations, all_posets,
    random_complete_complex, random_covered_relation, random_poset,
};
use dowker::homology::{boundary_matrices, smith_normal_form};
use dowker::io::{self, ComplexDoc, Document, PosetDoc, RelationDoc};
use dowker::poset::{realize_as_poset_k_complex, PosetError};
use dowker::relation::{canonical_relation, find_morphism};
use dowker::{
    homology, same_homology, ClosedRelation, IntegerMatrix, Poset, Relation, Side,
    SimplicialComplex, Universe,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            passed: true,
            detail: summary,
        }
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Outcome {
            passed: false,
            detail: format!(
                "{summary}; {} failure(s), first: {}",
                failures.len(),
                shown.join(" | ")
            ),
        }
    }
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Face set of a complex as vertex bitmasks.
fn face_masks(k: &SimplicialComplex) -> BTreeSet<u32> {
    k.faces()
        .iter()
        .map(|s| s.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

/// All nonempty submasks of each given mask.
fn down_closure(masks: impl IntoIterator<Item = u32>) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for m in masks {
        let mut s = m;
        while s != 0 {
            out.insert(s);
            s = (s - 1) & m;
        }
    }
    out
}

/// K-complex straight from the definition: sets of x with a common y.
fn oracle_k(r: &Relation) -> BTreeSet<u32> {
    let ny = r.y_universe().len();
    down_closure((0..ny).map(|y| {
        r.pairs()
            .iter()
            .filter(|&&(_, b)| b == y)
            .fold(0u32, |m, &(a, _)| m | 1 << a)
    }))
}

fn oracle_l(r: &Relation) -> BTreeSet<u32> {
    let nx = r.x_universe().len();
    down_closure((0..nx).map(|x| {
        r.pairs()
            .iter()
            .filter(|&&(a, _)| a == x)
            .fold(0u32, |m, &(_, b)| m | 1 << b)
    }))
}

fn ac1_dowker() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut count = 0;
    let mut check = |r: &Relation, failures: &mut Vec<String>| {
        count += 1;
        let k = r.k_complex().unwrap();
        let l = r.l_complex().unwrap();
        if face_masks(&k) != oracle_k(r) || face_masks(&l) != oracle_l(r) {
            failures.push(format!("complex mismatch for {:?}", r.pairs()));
        }
        if homology(&k) != homology(&l) {
            failures.push(format!("homology differs for {:?}", r.pairs()));
        }
    };
    let mut g = rng(1);
    for _ in 0..600 {
        let x = Arc::new(Universe::numbered(g.gen_range(1..=5)));
        let ny = g.gen_range(1..=5);
        let density = g.gen_range(0.15..0.75);
        check(
            &random_covered_relation(&mut g, &x, ny, density),
            &mut failures,
        );
    }
    for nx in 1..=3 {
        for ny in 1..=3 {
            for r in all_covered_relations(nx, ny) {
                check(&r, &mut failures);
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        failures.push(format!("runtime {elapsed:.1?} exceeds 60 s"));
    }
    outcome(
        &failures,
        format!("{count} relations (600 random, rest exhaustive) in {elapsed:.2?}"),
    )
}

fn ac2_x1() -> Outcome {
    let p = io::load_poset(&fixture("x1.poset")).unwrap();
    let mut failures = Vec::new();
    let cx = p.order_complex().unwrap();
    if homology(&cx).betti != [1, 1] {
        failures.push(format!("C_X betti {:?}", homology(&cx).betti));
    }
    let k = p.dowker_complex(false, Side::K).unwrap();
    let l = p.dowker_complex(false, Side::L).unwrap();
    let expect_k = vec![vec!["1", "2", "3"], vec!["1", "2", "4"]];
    let expect_l = vec![vec!["1", "3", "4"], vec!["2", "3", "4"]];
    if k.label_facets() != expect_k {
        failures.push(format!("K facets {:?}", k.label_facets()));
    }
    if l.label_facets() != expect_l {
        failures.push(format!("L facets {:?}", l.label_facets()));
    }
    for (name, c) in [("K", &k), ("L", &l)] {
        let (core, seq) = greedy_collapse(c);
        if !core.is_point() || seq.verify().as_ref() != Ok(&core) {
            failures.push(format!("{name} does not collapse to a point"));
        }
    }
    outcome(
        &failures,
        "C_X ~ circle, K and L collapse to a point".into(),
    )
}

fn strict_oracle(p: &Poset, side: Side) -> BTreeSet<u32> {
    let n = p.len();
    down_closure((0..n).map(|y| {
        (0..n)
            .filter(|&x| match side {
                Side::K => p.lt(x, y),
                Side::L => p.lt(y, x),
            })
            .fold(0u32, |m, x| m | 1 << x)
    }))
    .into_iter()
    .collect()
}

fn ac3_collapse() -> Outcome {
    let mut failures = Vec::new();
    let (mut checked, mut rejected, mut steps) = (0, 0, 0);
    let mut posets: Vec<Poset> = (1..=5).flat_map(all_posets).collect();
    let exhaustive = posets.len();
    let mut g = rng(3);
    let mut sampled = 0;
    while sampled < 250 {
        let (n, density) = (g.gen_range(6..=7), g.gen_range(0.2..0.6));
        let p = random_poset(&mut g, n, density);
        if p.singleton_component().is_none() {
            posets.push(p);
            sampled += 1;
        }
    }
    for p in &posets {
        for side in [Side::K, Side::L] {
            let result = collapse_leq_to_strict(p, side);
            if let Some(v) = p.singleton_component() {
                if !matches!(result, Err(CollapseError::SingletonComponent(_))) {
                    failures.push(format!("singleton `{}` not rejected", p.label(v)));
                }
                rejected += 1;
                continue;
            }
            checked += 1;
            let seq = match result {
                Ok(seq) => seq,
                Err(e) => {
                    failures.push(format!("{e}"));
                    continue;
                }
            };
            steps += seq.steps.len();
            let complexes = match seq.complexes() {
                Ok(c) => c,
                Err(e) => {
                    failures.push(format!("replay failed: {e}"));
                    continue;
                }
            };
            let target = strict_oracle(p, side);
            let last = complexes.last().unwrap();
            if face_masks(last) != target {
                failures.push(format!(
                    "{:?} result differs from strict complex",
                    p.elements().labels()
                ));
            }
            let chi = complexes[0].euler_characteristic();
            let h = homology(&complexes[0]);
            if complexes
                .iter()
                .any(|c| c.euler_characteristic() != chi || homology(c) != h)
            {
                failures.push("invariant changed along the sequence".into());
            }
        }
    }
    outcome(
        &failures,
        format!(
            "{checked} collapses replayed ({exhaustive} posets exhaustive, {sampled} sampled), \
             {steps} steps, {rejected} singleton cases rejected"
        ),
    )
}

fn has_private_vertices(facets: &[u32]) -> bool {
    facets.iter().enumerate().all(|(i, &f)| {
        let others = facets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(0u32, |m, (_, &o)| m | o);
        f & !others != 0
    })
}

fn facet_masks(k: &SimplicialComplex) -> Vec<u32> {
    k.facets()
        .iter()
        .map(|s| s.vertices().iter().fold(0u32, |m, &v| m | 1 << v))
        .collect()
}

fn has_long_chain(p: &Poset) -> bool {
    let n = p.len();
    (0..n).any(|a| (0..n).any(|b| p.lt(a, b) && (0..n).any(|c| p.lt(b, c))))
}

fn ac4_realization() -> Outcome {
    let mut failures = Vec::new();
    for n in 2..=4 {
        let u = Arc::new(Universe::numbered(n + 1));
        let facets = (0..=n).map(|skip| (0..=n).filter(move |&v| v != skip));
        let boundary = SimplicialComplex::from_facets(u, facets).unwrap();
        if !matches!(
            realize_as_poset_k_complex(&boundary),
            Err(PosetError::NotRealizable(_))
        ) {
            failures.push(format!("boundary of the {n}-simplex not rejected"));
        }
    }
    let (mut realized, mut refused) = (0, 0);
    let mut check = |t: &SimplicialComplex, brute: Option<&[Poset]>, failures: &mut Vec<String>| {
        let private = has_private_vertices(&facet_masks(t));
        if let Some(all) = brute {
            let exists = all
                .iter()
                .any(|p| p.dowker_complex(false, Side::K).unwrap() == *t);
            if exists != private {
                failures.push(format!("characterization fails on {:?}", t.label_facets()));
            }
        }
        match realize_as_poset_k_complex(t) {
            Ok(p) if private => {
                realized += 1;
                if has_long_chain(&p) || p.dowker_complex(false, Side::K).unwrap() != *t {
                    failures.push(format!("bad realization of {:?}", t.label_facets()));
                }
            }
            Err(PosetError::NotRealizable(_)) if !private => refused += 1,
            other => failures.push(format!("{:?} on {:?}", other.map(|_| ()), t.label_facets())),
        }
    };
    for n in 1..=4 {
        let posets = all_posets(n);
        for t in all_complete_complexes(n) {
            check(&t, Some(&posets), &mut failures);
        }
    }
    let mut g = rng(4);
    for _ in 0..400 {
        let n = g.gen_range(5..=6);
        let max = g.gen_range(1..=6);
        check(
            &random_complete_complex(&mut g, n, max),
            None,
            &mut failures,
        );
    }
    outcome(
        &failures,
        format!("boundaries rejected, {realized} realized, {refused} refused, exhaustive at <=4 vertices"),
    )
}

/// Existence of `f: Y → Z` with `x R y ⇒ x R' f(y)`, by trying every assignment.
fn brute_morphism(r: &Relation, r2: &Relation) -> bool {
    let (ny, nz) = (r.y_universe().len(), r2.y_universe().len());
    let total = nz.pow(ny as u32);
    (0..total).any(|mut code| {
        let f: Vec<usize> = (0..ny)
            .map(|_| {
                let z = code % nz;
                code /= nz;
                z
            })
            .collect();
        r.pairs().iter().all(|&(x, y)| r2.relates(x, f[y]))
    })
}

fn ac5_galois() -> Outcome {
    let mut failures = Vec::new();
    let mut corpus: Vec<SimplicialComplex> = (1..=4).flat_map(all_complexes).collect();
    let mut g = rng(5);
    corpus.extend((0..100).map(|_| random_complete_complex(&mut g, 6, 5)));
    for f in [
        "boundary.complex",
        "rp2.complex",
        "realizable.complex",
        "x1_k.complex",
    ] {
        corpus.push(io::load_complex(&fixture(f)).unwrap());
    }
    for t in &corpus {
        let back = canonical_relation(t).unwrap().k_complex().unwrap();
        if back != *t {
            failures.push(format!("canonical relation of {:?}", t.label_facets()));
        }
    }
    let (mut pairs, mut exist) = (0, 0);
    let mut compare = |r: &Relation, r2: &Relation, failures: &mut Vec<String>| {
        pairs += 1;
        let found = find_morphism(r, r2).unwrap();
        let brute = brute_morphism(r, r2);
        let sub = r
            .k_complex()
            .unwrap()
            .is_subcomplex_of(&r2.k_complex().unwrap());
        if found.is_some() != brute || brute != sub {
            failures.push(format!("{:?} -> {:?}", r.pairs(), r2.pairs()));
        }
        if let Some(f) = found {
            exist += 1;
            if !r.pairs().iter().all(|&(x, y)| r2.relates(x, f[y])) {
                failures.push("returned assignment is not a morphism".into());
            }
        }
    };
    for _ in 0..600 {
        let x = Arc::new(Universe::numbered(g.gen_range(1..=4)));
        let (ny, nz) = (g.gen_range(1..=4), g.gen_range(1..=4));
        let (d1, d2) = (g.gen_range(0.1..0.6), g.gen_range(0.2..0.8));
        let r = random_covered_relation(&mut g, &x, ny, d1);
        let r2 = random_covered_relation(&mut g, &x, nz, d2);
        compare(&r, &r2, &mut failures);
    }
    let small: Vec<Relation> = (1..=2)
        .flat_map(|ny| all_covered_relations(2, ny))
        .collect();
    for r in &small {
        for r2 in &small {
            compare(r, r2, &mut failures);
        }
    }
    outcome(
        &failures,
        format!(
            "{} complexes round trip, {pairs} relation pairs ({exist} with a morphism) agree with brute force",
            corpus.len()
        ),
    )
}

fn ac6_counterexample() -> Outcome {
    let x = io::load_poset(&fixture("x1.poset")).unwrap();
    let y = io::load_poset(&fixture("hexagon.poset")).unwrap();
    let rel = io::load_relation(&fixture("closed.relation")).unwrap();
    let pairs: Vec<(&str, &str)> = rel
        .pairs()
        .iter()
        .map(|&(a, b)| (rel.x_universe().label(a), rel.y_universe().label(b)))
        .collect();
    let mut failures = Vec::new();
    let r = ClosedRelation::from_labels(x.clone(), y.clone(), &pairs).unwrap();
    if !is_closed(r.pairs(), &x, &y) {
        failures.push("not closed".into());
    }
    let quillen = r.quillen_hypothesis().unwrap();
    let certified = quillen
        .fibers
        .iter()
        .filter(|f| f.order_complex.is_certified() && f.k_complex.is_certified())
        .count();
    if quillen.fibers.len() != 10 || certified != 10 {
        failures.push(format!(
            "{certified} of {} fibers certified",
            quillen.fibers.len()
        ));
    }
    let weak = r.weak_hypothesis().unwrap();
    if weak.holds || weak.witness != Some((Factor::X, "3".to_string())) {
        failures.push(format!(
            "weak hypothesis {} witness {:?}",
            weak.holds, weak.witness
        ));
    }
    let kx = homology(&x.dowker_complex(false, Side::K).unwrap());
    let ky = homology(&y.dowker_complex(false, Side::K).unwrap());
    let reports = (io::write_report(&kx), io::write_report(&ky));
    let expected = (
        r#"{"betti":[1,0,0],"torsion":[[],[],[]]}"#,
        r#"{"betti":[1,1,0],"torsion":[[],[],[]]}"#,
    );
    if (reports.0.as_str(), reports.1.as_str()) != expected {
        failures.push(format!("K_X {} K_Y {}", reports.0, reports.1));
    }
    let (cx, cy) = (x.order_complex().unwrap(), y.order_complex().unwrap());
    if !same_homology(&cx, &cy) || homology(&cx).betti != [1, 1] || homology(&cy).betti != [1, 1] {
        failures.push("order complexes differ".into());
    }
    let verdict = verify_closed_relation(&r, Mode::Weak).unwrap();
    if verdict.hypothesis_holds {
        failures.push("weak verification claims the hypothesis".into());
    }
    outcome(
        &failures,
        "closed, 10 fibers contractible, weak hypothesis fails at S_3, K_X != K_Y in homology, C_X ~ C_Y".into(),
    )
}

fn ac7_weak() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let posets: Vec<Poset> = (1..=3).flat_map(all_posets).collect();
    let (mut relations, mut eligible) = (0, 0);
    for p in &posets {
        for q in &posets {
            for pairs in all_closed_relations(p, q) {
                relations += 1;
                let r = ClosedRelation::new(p.clone(), q.clone(), pairs).unwrap();
                match r.weak_hypothesis() {
                    Err(ClosedError::EmptyFiber(_)) => continue,
                    Err(e) => failures.push(e.to_string()),
                    Ok(w) if !w.holds => continue,
                    Ok(_) => {
                        eligible += 1;
                        let v = verify_closed_relation(&r, Mode::Weak).unwrap();
                        if !v.same_homology || !v.preimages.iter().all(|p| p.all_full) {
                            failures.push(format!(
                                "{:?} / {:?}: {:?}",
                                p.elements().labels(),
                                q.elements().labels(),
                                r.pairs()
                            ));
                        }
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        failures.push(format!("runtime {elapsed:.1?} exceeds 120 s"));
    }
    outcome(
        &failures,
        format!(
            "{relations} closed relations, {eligible} satisfy the hypothesis, in {elapsed:.2?}"
        ),
    )
}

fn ac8_lattice() -> Outcome {
    let mut failures = Vec::new();
    let (mut total, mut lattice) = (0, 0);
    for n in 1..=5 {
        for p in all_posets(n) {
            total += 1;
            let downs: Vec<u32> = (0..n)
                .map(|x| (0..n).filter(|&z| p.le(z, x)).fold(0u32, |m, z| m | 1 << z))
                .collect();
            let oracle = downs.iter().all(|&a| {
                downs
                    .iter()
                    .all(|&b| a & b == 0 || downs.contains(&(a & b)))
            });
            if oracle != p.lattice_condition() {
                failures.push(format!("lattice test disagrees on {:?}", p.cover_pairs()));
            }
            if !oracle {
                continue;
            }
            lattice += 1;
            let cx = p.order_complex().unwrap();
            let l = p.dowker_complex(false, Side::L).unwrap();
            if homology(&cx) != homology(&l) {
                failures.push(format!("homology differs on {:?}", p.cover_pairs()));
            }
        }
    }
    outcome(
        &failures,
        format!("{lattice} of {total} posets satisfy the condition"),
    )
}

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k×k minors.
fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> i64 {
    let mut g = 0;
    for rows in subsets(m.len(), k) {
        for cols in subsets(m[0].len(), k) {
            let sub: Vec<Vec<i64>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
                .collect();
            g = gcd(g, det(&sub));
        }
    }
    g
}

fn ac9_homology() -> Outcome {
    let mut failures = Vec::new();
    let mut corpus: Vec<SimplicialComplex> = (1..=4).flat_map(all_complexes).collect();
    corpus.extend(
        (1..=4)
            .flat_map(all_posets)
            .map(|p| p.order_complex().unwrap()),
    );
    let mut g = rng(9);
    corpus.extend((0..100).map(|_| random_complete_complex(&mut g, 7, 6)));
    for f in [
        "boundary.complex",
        "rp2.complex",
        "realizable.complex",
        "x1_k.complex",
    ] {
        corpus.push(io::load_complex(&fixture(f)).unwrap());
    }
    for k in &corpus {
        let d = boundary_matrices(k);
        if d.windows(2).any(|w| !w[0].mul(&w[1]).is_zero()) {
            failures.push(format!(
                "boundary squared nonzero on {:?}",
                k.label_facets()
            ));
        }
        if homology(k).euler_characteristic() != k.euler_characteristic() {
            failures.push(format!("Euler mismatch on {:?}", k.label_facets()));
        }
    }
    let mut low_rank = 0;
    for _ in 0..1000 {
        let (rows, cols) = (g.gen_range(1..=6), g.gen_range(1..=6));
        let zero_rate = g.gen_range(0.0..0.7);
        let m: Vec<Vec<i64>> = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        if g.gen_bool(zero_rate) {
                            0
                        } else {
                            g.gen_range(-9..=9)
                        }
                    })
                    .collect()
            })
            .collect();
        let d = smith_normal_form(&IntegerMatrix::from_rows(&m));
        let zero = BigInt::from(0);
        if d.iter().any(|v| *v <= zero) || d.windows(2).any(|w| &w[1] % &w[0] != zero) {
            failures.push(format!("bad invariant factors {d:?} for {m:?}"));
            continue;
        }
        let rank = d.len();
        if rank > 3 {
            continue;
        }
        low_rank += 1;
        let mut product = BigInt::from(1);
        for k in 1..=rank {
            product *= &d[k - 1];
            if BigInt::from(determinantal_divisor(&m, k)) != product {
                failures.push(format!("minor gcd mismatch at k={k} for {m:?}"));
            }
        }
        if rank < rows.min(cols) && determinantal_divisor(&m, rank + 1) != 0 {
            failures.push(format!("rank too small for {m:?}"));
        }
    }
    let rp2 = homology(&io::load_complex(&fixture("rp2.complex")).unwrap());
    if rp2.torsion(1) != [BigInt::from(2)] || rp2.betti != [1, 0, 0] {
        failures.push(format!("projective plane gives {rp2}"));
    }
    outcome(
        &failures,
        format!(
            "{} complexes, 1000 matrices ({low_rank} of rank <= 3 checked against minors), RP2 torsion 2",
            corpus.len()
        ),
    )
}

const COMMANDS: &[&[&str]] = &[
    &["dowker", "k", "--relation", "closed.relation"],
    &["dowker", "l", "--relation", "closed.relation"],
    &["dowker", "k", "--relation", "x1.space"],
    &[
        "dowker",
        "morphism",
        "--from",
        "path.relation",
        "--to",
        "x1_leq.relation",
    ],
    &[
        "dowker",
        "equivalent",
        "--a",
        "x1_leq.relation",
        "--b",
        "path.relation",
    ],
    &["dowker", "canonical", "--complex", "boundary.complex"],
    &["poset", "order-complex", "--poset", "x1.poset"],
    &["poset", "k", "--poset", "hexagon.poset"],
    &["poset", "l", "--poset", "hexagon.poset"],
    &["poset", "k-strict", "--poset", "x1.poset"],
    &["poset", "l-strict", "--poset", "x1.poset"],
    &["poset", "realize", "--complex", "realizable.complex"],
    &["poset", "realize", "--complex", "boundary.complex"],
    &["poset", "lattice-check", "--poset", "x1.poset"],
    &["poset", "to-topology", "--poset", "x1.poset"],
    &["poset", "from-topology", "--space", "x1.space"],
    &[
        "collapse",
        "leq-strict",
        "--poset",
        "hexagon.poset",
        "--side",
        "k",
    ],
    &[
        "collapse",
        "leq-strict",
        "--poset",
        "x1.poset",
        "--side",
        "l",
    ],
    &["collapse", "greedy", "--complex", "rp2.complex"],
    &[
        "collapse",
        "verify",
        "--complex",
        "x1_k.complex",
        "--steps",
        "x1_k.steps",
    ],
    &["homology", "--complex", "rp2.complex"],
    &[
        "homology",
        "same",
        "--a",
        "boundary.complex",
        "--b",
        "x1_k.complex",
    ],
    &[
        "closed",
        "verify",
        "--xposet",
        "x1.poset",
        "--yposet",
        "hexagon.poset",
        "--relation",
        "closed.relation",
        "--mode",
        "quillen",
    ],
    &[
        "closed",
        "verify",
        "--xposet",
        "x1.poset",
        "--yposet",
        "hexagon.poset",
        "--relation",
        "closed.relation",
        "--mode",
        "weak",
    ],
    &["verify", "dowker", "--relation", "closed.relation"],
];

fn run_cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_fintop"))
        .args(args)
        .current_dir(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
        .output()
        .expect("binary runs");
    (out.status.code(), out.stdout)
}

fn ac10_determinism() -> Outcome {
    let mut failures = Vec::new();
    for args in COMMANDS {
        let first = run_cli(args);
        for _ in 0..2 {
            if run_cli(args) != first {
                failures.push(format!("`{}` not byte-stable", args.join(" ")));
            }
        }
        if first.0 == Some(0) && serde_json::from_slice::<serde_json::Value>(&first.1).is_err() {
            failures.push(format!("`{}` printed invalid JSON", args.join(" ")));
        }
    }
    let mut docs = 0;
    let mut round_trip = |text: &str, failures: &mut Vec<String>| {
        docs += 1;
        let doc = io::parse(text).unwrap();
        let out = io::serialize(&doc);
        if io::parse(&out).as_ref() != Ok(&doc) || io::serialize(&io::parse(&out).unwrap()) != out {
            failures.push(format!("round trip of {}", doc.name()));
        }
    };
    for f in [
        "x1.poset",
        "hexagon.poset",
        "closed.relation",
        "x1_leq.relation",
        "path.relation",
        "uncovered.relation",
        "boundary.complex",
        "rp2.complex",
        "realizable.complex",
        "x1_k.complex",
        "x1.space",
        "indiscrete.space",
    ] {
        round_trip(&fixture(f), &mut failures);
    }
    for p in all_posets(4) {
        let doc = PosetDoc::from_poset("P", &p);
        round_trip(&io::serialize(&Document::Poset(doc.clone())), &mut failures);
        if doc.to_poset().as_ref() != Ok(&p) {
            failures.push("poset document loses information".into());
        }
    }
    // a facet list cannot mention unused vertices, so only complete complexes round trip
    for k in all_complete_complexes(4) {
        let doc = ComplexDoc::from_complex("K", &k);
        round_trip(
            &io::serialize(&Document::Complex(doc.clone())),
            &mut failures,
        );
        if doc.to_complex().as_ref() != Ok(&k) {
            failures.push("complex document loses information".into());
        }
    }
    for r in all_covered_relations(2, 3) {
        let doc = RelationDoc::from_relation("R", &r);
        round_trip(
            &io::serialize(&Document::Relation(doc.clone())),
            &mut failures,
        );
        if doc.to_relation().as_ref() != Ok(&r) {
            failures.push("relation document loses information".into());
        }
    }
    let p = io::load_poset(&fixture("hexagon.poset")).unwrap();
    let seq = collapse_leq_to_strict(&p, Side::K).unwrap();
    let text = io::write_report(&io::sequence_json(&seq));
    match io::parse_sequence(&text, seq.initial.clone()) {
        Ok(back) if back == seq && io::write_report(&io::sequence_json(&back)) == text => {}
        _ => failures.push("collapse report does not round trip".into()),
    }
    outcome(
        &failures,
        format!(
            "{} CLI commands stable over 3 runs, {docs} documents round trip",
            COMMANDS.len()
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("1 Dowker theorem suite", ac1_dowker),
        ("2 poset X1 worked example", ac2_x1),
        ("3 collapse of K onto K'", ac3_collapse),
        ("4 realization of complete complexes", ac4_realization),
        ("5 Galois correspondence", ac5_galois),
        ("6 closed-relation counterexample", ac6_counterexample),
        ("7 weak theorem suite", ac7_weak),
        ("8 lattice condition", ac8_lattice),
        ("9 homology engine", ac9_homology),
        ("10 determinism and round trips", ac10_determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Outcome {
            passed: false,
            detail: "panicked".into(),
        });
        let tag = if result.passed { "PASS" } else { "FAIL" };
        println!(
            "[{tag}] {name}: {} ({:.2?})",
            result.detail,
            start.elapsed()
        );
        failed += usize::from(!result.passed);
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
