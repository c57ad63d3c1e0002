//! Finite posets, viewed interchangeably as finite T0-spaces.
//!
//! A poset's minimal open sets are its down-sets `U_x = {y ≤ x}` and its
//! minimal closed sets are the up-sets `F_x = {y ≥ x}`. The Dowker complexes
//! of `≤` are the nerves of these two covers; the ones of `<` are the strict
//! complexes `K'` and `L'`.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex, Universe, Vertex};
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("order has a cycle: {}", .0.join(" <= "))]
    CycleDetected(Vec<String>),
    #[error("empty poset")]
    EmptyPoset,
    #[error("the strict complex is empty: the poset is discrete")]
    EmptyResult,
    #[error("complex is not complete: `{0}` is not a vertex")]
    NotComplete(String),
    #[error("facet {0:?} has no private vertex; not the K-complex of any poset")]
    NotRealizable(Vec<String>),
    #[error("not a T0 space: `{0}` and `{1}` have the same minimal open set")]
    NotT0(String, String),
    #[error("not a topology: {0}")]
    NotATopology(String),
    #[error("finite spaces are limited to 64 points, got {0}")]
    TooLarge(usize),
}

/// Which Dowker complex of an order to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// Subsets with a common upper bound.
    K,
    /// Subsets with a common lower bound.
    L,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Arc<Universe>,
    // leq[a][b] ⇔ a ≤ b
    leq: Vec<Vec<bool>>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<String> = self
            .cover_pairs()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.label(a), self.label(b)))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.elements)
            .field("covers", &covers)
            .finish()
    }
}

impl Poset {
    /// Reflexive-transitive closure of `pairs` (each `(a, b)` meaning `a ≤ b`).
    pub fn from_pairs<I>(elements: Arc<Universe>, pairs: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let n = elements.len();
        let mut edges = vec![Vec::new(); n];
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(ComplexError::UnknownVertex(format!("#{}", a.max(b))).into());
            }
            leq[a][b] = true;
            if a != b {
                edges[a].push(b);
            }
        }
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if leq[a][b] && leq[b][a] {
                    let cycle = find_cycle(&edges, a, b);
                    return Err(PosetError::CycleDetected(
                        cycle
                            .iter()
                            .map(|&v| elements.label(v).to_string())
                            .collect(),
                    ));
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    pub fn from_labels(elements: &[&str], pairs: &[(&str, &str)]) -> Result<Self, PosetError> {
        let u = Arc::new(Universe::new(elements.iter().copied())?);
        let indexed = pairs
            .iter()
            .map(|(a, b)| Ok((u.lookup(a)?, u.lookup(b)?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        Self::from_pairs(u, indexed)
    }

    /// Builds from a full order matrix; panics unless it is a partial order.
    pub fn from_matrix(elements: Arc<Universe>, leq: Vec<Vec<bool>>) -> Self {
        let p = Poset { elements, leq };
        assert!(p.is_partial_order(), "matrix is not a partial order");
        p
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.len();
        self.leq.len() == n
            && (0..n).all(|a| self.leq[a].len() == n && self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq[a][b] || (0..n).all(|c| !self.leq[b][c] || self.leq[a][c]))
            })
    }

    pub fn elements(&self) -> &Arc<Universe> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn label(&self, x: Vertex) -> &str {
        self.elements.label(x)
    }

    pub fn le(&self, a: Vertex, b: Vertex) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn comparable(&self, a: Vertex, b: Vertex) -> bool {
        self.leq[a][b] || self.leq[b][a]
    }

    /// `U_x`, the minimal open set of `x`.
    pub fn down_set(&self, x: Vertex) -> Vec<Vertex> {
        (0..self.len()).filter(|&y| self.leq[y][x]).collect()
    }

    /// `F_x`, the minimal closed set of `x`.
    pub fn up_set(&self, x: Vertex) -> Vec<Vertex> {
        (0..self.len()).filter(|&y| self.leq[x][y]).collect()
    }

    pub fn strictly_below(&self, x: Vertex) -> Vec<Vertex> {
        (0..self.len()).filter(|&y| self.lt(y, x)).collect()
    }

    pub fn strictly_above(&self, x: Vertex) -> Vec<Vertex> {
        (0..self.len()).filter(|&y| self.lt(x, y)).collect()
    }

    pub fn lookup(&self, label: &str) -> Result<Vertex, PosetError> {
        Ok(self.elements.lookup(label)?)
    }

    pub fn maximal_elements(&self) -> Vec<Vertex> {
        (0..self.len())
            .filter(|&x| self.strictly_above(x).is_empty())
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<Vertex> {
        (0..self.len())
            .filter(|&x| self.strictly_below(x).is_empty())
            .collect()
    }

    pub fn maximum(&self) -> Option<Vertex> {
        match self.maximal_elements()[..] {
            [m] if self.down_set(m).len() == self.len() => Some(m),
            _ => None,
        }
    }

    /// All pairs `a ≤ b` with `a ≠ b`, ascending.
    pub fn strict_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| self.lt(a, b))
            .collect()
    }

    /// Covering pairs of the Hasse diagram, ascending.
    pub fn cover_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(a, b)| !(0..self.len()).any(|c| self.lt(a, c) && self.lt(c, b)))
            .collect()
    }

    pub fn is_discrete(&self) -> bool {
        self.strict_pairs().is_empty()
    }

    /// The order with every comparison reversed.
    pub fn dual(&self) -> Poset {
        let n = self.len();
        let leq = (0..n)
            .map(|a| (0..n).map(|b| self.leq[b][a]).collect())
            .collect();
        Poset {
            elements: self.elements.clone(),
            leq,
        }
    }

    /// The relation `≤` (or `<` when `strict`) as a relation `X → X`.
    pub fn order_relation(&self, strict: bool) -> Relation {
        let pairs: Vec<(Vertex, Vertex)> = if strict {
            self.strict_pairs()
        } else {
            let n = self.len();
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| self.leq[a][b])
                .collect()
        };
        Relation::new(self.elements.clone(), self.elements.clone(), pairs)
            .expect("order pairs lie in the element set")
    }

    /// Induced subposet on `subset`, keeping labels.
    pub fn subposet(&self, subset: &[Vertex]) -> Poset {
        let u = Arc::new(
            Universe::new(subset.iter().map(|&v| self.label(v).to_string()))
                .expect("subset elements are distinct"),
        );
        let leq = subset
            .iter()
            .map(|&a| subset.iter().map(|&b| self.leq[a][b]).collect())
            .collect();
        Poset { elements: u, leq }
    }

    /// Simplicial complex of nonempty chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex, PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let mut maximal_chains = Vec::new();
        let mut chain = Vec::new();
        for m in self.minimal_elements() {
            self.extend_chains(m, &mut chain, &mut maximal_chains);
        }
        Ok(SimplicialComplex::from_simplices(
            self.elements.clone(),
            maximal_chains,
        ))
    }

    fn extend_chains(&self, x: Vertex, chain: &mut Vec<Vertex>, out: &mut Vec<Simplex>) {
        chain.push(x);
        let covers: Vec<Vertex> = self
            .strictly_above(x)
            .into_iter()
            .filter(|&y| !(0..self.len()).any(|c| self.lt(x, c) && self.lt(c, y)))
            .collect();
        if covers.is_empty() {
            out.push(Simplex::new(chain.iter().copied()).expect("chain is nonempty"));
        }
        for y in covers {
            self.extend_chains(y, chain, out);
        }
        chain.pop();
    }

    /// K or L complex of `≤` (or of `<` when `strict`).
    pub fn dowker_complex(
        &self,
        strict: bool,
        side: Side,
    ) -> Result<SimplicialComplex, PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        if strict && self.is_discrete() {
            return Err(PosetError::EmptyResult);
        }
        let r = self.order_relation(strict);
        let k = match side {
            Side::K => r.k_complex(),
            Side::L => r.l_complex(),
        };
        Ok(k.expect("relation is nonempty"))
    }

    /// Whether each `U_x ∩ U_y` is empty or some `U_z`.
    pub fn lattice_condition(&self) -> bool {
        let downs: Vec<Vec<Vertex>> = (0..self.len()).map(|x| self.down_set(x)).collect();
        let n = self.len();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                let meet: Vec<Vertex> = downs[x]
                    .iter()
                    .copied()
                    .filter(|v| downs[y].contains(v))
                    .collect();
                meet.is_empty() || downs.contains(&meet)
            })
        })
    }

    /// Components of the comparability graph, each ascending, ordered by least element.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.len();
        let mut component = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if component[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![];
            let mut queue = VecDeque::from([start]);
            component[start] = id;
            while let Some(v) = queue.pop_front() {
                members.push(v);
                for w in 0..n {
                    if component[w] == usize::MAX && self.comparable(v, w) {
                        component[w] = id;
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// An element forming a component by itself, if any.
    pub fn singleton_component(&self) -> Option<Vertex> {
        self.connected_components()
            .into_iter()
            .find(|c| c.len() == 1)
            .map(|c| c[0])
    }

    /// All up-closed subsets, each ascending.
    pub fn up_sets(&self) -> Vec<Vec<Vertex>> {
        // decide elements from the top down so everything above is settled first
        let mut order: Vec<Vertex> = (0..self.len()).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.down_set(x).len()));
        let mut included = vec![false; self.len()];
        let mut out = Vec::new();
        self.up_sets_from(&order, 0, &mut included, &mut out);
        out
    }

    fn up_sets_from(
        &self,
        order: &[Vertex],
        i: usize,
        included: &mut Vec<bool>,
        out: &mut Vec<Vec<Vertex>>,
    ) {
        if i == order.len() {
            out.push((0..self.len()).filter(|&v| included[v]).collect());
            return;
        }
        let x = order[i];
        self.up_sets_from(order, i + 1, included, out);
        if self.strictly_above(x).iter().all(|&y| included[y]) {
            included[x] = true;
            self.up_sets_from(order, i + 1, included, out);
            included[x] = false;
        }
    }

    pub fn is_up_set(&self, subset: &[Vertex]) -> bool {
        subset
            .iter()
            .all(|&x| self.strictly_above(x).iter().all(|y| subset.contains(y)))
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        match self.order_complex() {
            Ok(c) => c.dimension().map_or(0, |d| d + 1),
            Err(_) => 0,
        }
    }

    pub fn to_topology(&self) -> Result<FiniteTopology, PosetError> {
        order_to_topology(self)
    }
}

fn find_cycle(edges: &[Vec<Vertex>], a: Vertex, b: Vertex) -> Vec<Vertex> {
    let mut cycle = shortest_path(edges, a, b);
    let back = shortest_path(edges, b, a);
    cycle.extend(back.into_iter().skip(1));
    cycle
}

fn shortest_path(edges: &[Vec<Vertex>], from: Vertex, to: Vertex) -> Vec<Vertex> {
    let mut prev = vec![usize::MAX; edges.len()];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &w in &edges[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = prev[v];
        path.push(v);
    }
    path.reverse();
    path
}

pub fn poset_dowker_complex(
    p: &Poset,
    strict: bool,
    side: Side,
) -> Result<SimplicialComplex, PosetError> {
    p.dowker_complex(strict, side)
}

/// Componentwise order on `P × Q`, elements labelled `(p,q)` in row-major order.
pub fn product_poset(p: &Poset, q: &Poset) -> Poset {
    let (m, n) = (p.len(), q.len());
    let labels =
        (0..m).flat_map(|a| (0..n).map(move |b| format!("({},{})", p.label(a), q.label(b))));
    let u = Arc::new(Universe::new(labels).expect("product labels are distinct"));
    let leq = (0..m * n)
        .map(|i| {
            (0..m * n)
                .map(|j| p.le(i / n, j / n) && q.le(i % n, j % n))
                .collect()
        })
        .collect();
    Poset { elements: u, leq }
}

/// Realizes a complete complex as the K-complex of a poset of height at most 2.
///
/// Each facet must have a vertex lying in no other facet; the least such
/// vertex becomes a maximal element lying above the rest of its facet.
pub fn realize_as_poset_k_complex(t: &SimplicialComplex) -> Result<Poset, PosetError> {
    if t.is_empty() {
        return Err(ComplexError::EmptyComplex.into());
    }
    let u = t.universe();
    let vertices = t.vertices();
    if let Some(missing) = (0..u.len()).find(|v| vertices.binary_search(v).is_err()) {
        return Err(PosetError::NotComplete(u.label(missing).to_string()));
    }
    let facets = t.facets();
    let mut pairs = Vec::new();
    for (i, s) in facets.iter().enumerate() {
        let private = s.vertices().iter().copied().find(|&v| {
            facets
                .iter()
                .enumerate()
                .all(|(j, other)| j == i || !other.contains(v))
        });
        let Some(top) = private else {
            let mut labels: Vec<String> = s.labels(u).into_iter().map(String::from).collect();
            labels.sort();
            return Err(PosetError::NotRealizable(labels));
        };
        pairs.extend(s.vertices().iter().map(|&x| (x, top)));
    }
    Poset::from_pairs(u.clone(), pairs)
}

/// A topology on at most 64 points, with every open set stored as a bitmask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteTopology {
    points: Arc<Universe>,
    opens: BTreeSet<u64>,
}

impl FiniteTopology {
    /// Validates closure under unions and intersections. The empty set is
    /// added implicitly; the whole set must be listed.
    pub fn new<I>(points: Arc<Universe>, opens: I) -> Result<Self, PosetError>
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let n = points.len();
        if n > 64 {
            return Err(PosetError::TooLarge(n));
        }
        let mut set = BTreeSet::from([0u64]);
        for open in opens {
            let mut mask = 0u64;
            for v in open {
                if v >= n {
                    return Err(ComplexError::UnknownVertex(format!("#{v}")).into());
                }
                mask |= 1 << v;
            }
            set.insert(mask);
        }
        let whole = full_mask(n);
        if !set.contains(&whole) {
            return Err(PosetError::NotATopology(
                "the whole space is not listed as open".into(),
            ));
        }
        let topology = FiniteTopology { points, opens: set };
        for &a in &topology.opens {
            for &b in &topology.opens {
                for (what, c) in [("union", a | b), ("intersection", a & b)] {
                    if !topology.opens.contains(&c) {
                        return Err(PosetError::NotATopology(format!(
                            "{what} of {:?} and {:?} is not open",
                            topology.mask_labels(a),
                            topology.mask_labels(b)
                        )));
                    }
                }
            }
        }
        Ok(topology)
    }

    pub fn from_labels(points: &[&str], opens: &[&[&str]]) -> Result<Self, PosetError> {
        let u = Arc::new(Universe::new(points.iter().copied())?);
        let indexed = opens
            .iter()
            .map(|o| o.iter().map(|l| u.lookup(l)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(u, indexed)
    }

    pub fn points(&self) -> &Arc<Universe> {
        &self.points
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    pub fn is_open(&self, subset: &[Vertex]) -> bool {
        self.opens.contains(&to_mask(subset))
    }

    /// Open sets as ascending vertex lists, ordered by size then lexicographically.
    pub fn opens(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self.opens.iter().map(|&m| from_mask(m)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Intersection of the open sets containing `x`.
    pub fn minimal_open(&self, x: Vertex) -> Vec<Vertex> {
        let mask = self
            .opens
            .iter()
            .filter(|&&o| o >> x & 1 == 1)
            .fold(full_mask(self.points.len()), |acc, &o| acc & o);
        from_mask(mask)
    }

    /// First pair of distinct points sharing a minimal open set.
    pub fn t0_violation(&self) -> Option<(Vertex, Vertex)> {
        let mins: Vec<Vec<Vertex>> = (0..self.points.len())
            .map(|x| self.minimal_open(x))
            .collect();
        (0..mins.len())
            .flat_map(|a| (a + 1..mins.len()).map(move |b| (a, b)))
            .find(|&(a, b)| mins[a] == mins[b])
    }

    pub fn is_t0(&self) -> bool {
        self.t0_violation().is_none()
    }

    fn mask_labels(&self, mask: u64) -> Vec<&str> {
        from_mask(mask)
            .into_iter()
            .map(|v| self.points.label(v))
            .collect()
    }

    pub fn to_order(&self) -> Result<Poset, PosetError> {
        topology_to_order(self)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn to_mask(subset: &[Vertex]) -> u64 {
    subset.iter().fold(0, |m, &v| m | 1 << v)
}

fn from_mask(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// The topology whose open sets are the down-closed subsets.
pub fn order_to_topology(p: &Poset) -> Result<FiniteTopology, PosetError> {
    if p.len() > 64 {
        return Err(PosetError::TooLarge(p.len()));
    }
    let basis: Vec<u64> = (0..p.len()).map(|x| to_mask(&p.down_set(x))).collect();
    let mut opens = BTreeSet::from([0u64]);
    let mut frontier = vec![0u64];
    while let Some(o) = frontier.pop() {
        for &b in &basis {
            if opens.insert(o | b) {
                frontier.push(o | b);
            }
        }
    }
    Ok(FiniteTopology {
        points: p.elements.clone(),
        opens,
    })
}

/// `x ≤ y` iff `x` lies in the minimal open set of `y`.
pub fn topology_to_order(t: &FiniteTopology) -> Result<Poset, PosetError> {
    if let Some((a, b)) = t.t0_violation() {
        return Err(PosetError::NotT0(
            t.points.label(a).to_string(),
            t.points.label(b).to_string(),
        ));
    }
    let n = t.points.len();
    let mins: Vec<u64> = (0..n).map(|y| to_mask(&t.minimal_open(y))).collect();
    let leq = (0..n)
        .map(|x| (0..n).map(|y| mins[y] >> x & 1 == 1).collect())
        .collect();
    Ok(Poset {
        elements: t.points.clone(),
        leq,
    })
}
