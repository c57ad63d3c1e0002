//! Relations `R ⊆ X × Y`, their K- and L-complexes, and morphisms between
//! relations on a common `X`.
//!
//! The K-complex has as simplices the finite subsets of `X` with a common
//! related element of `Y`; the L-complex is the K-complex of the transpose.
//! Morphisms `f: (Y, R) → (Z, R')` satisfy `x R y ⇒ x R' f(y)`, and the
//! K-complex is a complete invariant of a relation up to morphisms in both
//! directions: `K_Y ≤ K_Z` exactly when a morphism `Y → Z` exists.

use std::collections::BTreeSet;
use std::sync::Arc;

use thiserror::Error;

use crate::complex::{
    is_sorted_subset, ComplexError, Simplex, SimplicialComplex, Universe, Vertex, VertexMap,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("relation has no pairs")]
    EmptyRelation,
    #[error("relation is not covered: `{0}` is related to nothing")]
    Uncovered(String),
    #[error("relations are defined over different X universes")]
    UniverseMismatch,
    #[error("assignment has {got} entries, expected {expected}")]
    PartialAssignment { expected: usize, got: usize },
    #[error("assignment is not a morphism: `{0}` violates x R y => x R' f(y)")]
    NotAMorphism(String),
}

/// A relation between two finite universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    x: Arc<Universe>,
    y: Arc<Universe>,
    pairs: BTreeSet<(Vertex, Vertex)>,
    // support[y] = sorted S_y
    support: Vec<Vec<Vertex>>,
}

impl Relation {
    pub fn new<I>(x: Arc<Universe>, y: Arc<Universe>, pairs: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let pairs: BTreeSet<(Vertex, Vertex)> = pairs.into_iter().collect();
        for &(a, b) in &pairs {
            if a >= x.len() {
                return Err(ComplexError::UnknownVertex(format!("#{a}")).into());
            }
            if b >= y.len() {
                return Err(ComplexError::UnknownVertex(format!("#{b}")).into());
            }
        }
        let mut support = vec![Vec::new(); y.len()];
        // pairs iterate in x order, so each support comes out sorted
        for &(a, b) in &pairs {
            support[b].push(a);
        }
        Ok(Relation {
            x,
            y,
            pairs,
            support,
        })
    }

    pub fn from_labels(
        x: Arc<Universe>,
        y: Arc<Universe>,
        pairs: &[(&str, &str)],
    ) -> Result<Self, RelationError> {
        let indexed = pairs
            .iter()
            .map(|(a, b)| Ok((x.lookup(a)?, y.lookup(b)?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        Self::new(x, y, indexed)
    }

    /// Membership relation of a family of subsets of `points`: `x R U` iff `x ∈ U`.
    /// Its L-complex is the nerve of the family and its K-complex the Vietoris complex.
    pub fn membership<S: AsRef<str>>(
        points: Arc<Universe>,
        sets: &[(String, Vec<S>)],
    ) -> Result<Self, RelationError> {
        let y = Arc::new(Universe::new(sets.iter().map(|(name, _)| name.clone()))?);
        let mut pairs = Vec::new();
        for (j, (_, members)) in sets.iter().enumerate() {
            for m in members {
                pairs.push((points.lookup(m.as_ref())?, j));
            }
        }
        Self::new(points, y, pairs)
    }

    pub fn x_universe(&self) -> &Arc<Universe> {
        &self.x
    }

    pub fn y_universe(&self) -> &Arc<Universe> {
        &self.y
    }

    pub fn pairs(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.pairs
    }

    pub fn relates(&self, x: Vertex, y: Vertex) -> bool {
        self.pairs.contains(&(x, y))
    }

    /// `S_y`: the elements of `X` related to `y`, ascending.
    pub fn support(&self, y: Vertex) -> &[Vertex] {
        &self.support[y]
    }

    pub fn uncovered(&self) -> Vec<Vertex> {
        (0..self.y.len())
            .filter(|&y| self.support[y].is_empty())
            .collect()
    }

    pub fn is_covered(&self) -> bool {
        self.support.iter().all(|s| !s.is_empty())
    }

    fn require_covered(&self) -> Result<(), RelationError> {
        match self.uncovered().first() {
            Some(&y) => Err(RelationError::Uncovered(self.y.label(y).to_string())),
            None => Ok(()),
        }
    }

    pub fn transpose(&self) -> Relation {
        Relation::new(
            self.y.clone(),
            self.x.clone(),
            self.pairs.iter().map(|&(a, b)| (b, a)),
        )
        .expect("transposed pairs stay within the swapped universes")
    }

    /// `S_y` as a simplex of the K-complex.
    pub fn support_simplex(&self, y: Vertex) -> Result<Simplex, RelationError> {
        Simplex::new(self.support[y].iter().copied())
            .map_err(|_| RelationError::Uncovered(self.y.label(y).to_string()))
    }

    /// Subsets of `X` with a common related element of `Y`.
    pub fn k_complex(&self) -> Result<SimplicialComplex, RelationError> {
        if self.pairs.is_empty() {
            return Err(RelationError::EmptyRelation);
        }
        let supports = self
            .support
            .iter()
            .filter(|s| !s.is_empty())
            .map(|s| Simplex::from_sorted(s.clone()));
        Ok(SimplicialComplex::from_simplices(self.x.clone(), supports))
    }

    /// Subsets of `Y` with a common related element of `X`.
    pub fn l_complex(&self) -> Result<SimplicialComplex, RelationError> {
        self.transpose().k_complex()
    }
}

fn face_label(universe: &Universe, s: &Simplex) -> String {
    format!("{{{}}}", s.labels(universe).join(","))
}

/// The relation `x R s ⇔ x ∈ s` between the universe of `t` and the faces of `t`.
/// Its K-complex is `t` again.
pub fn canonical_relation(t: &SimplicialComplex) -> Result<Relation, RelationError> {
    if t.is_empty() {
        return Err(ComplexError::EmptyComplex.into());
    }
    let x = t.universe().clone();
    let faces: Vec<&Simplex> = t.faces().iter().collect();
    let y = Arc::new(Universe::new(faces.iter().map(|s| face_label(&x, s)))?);
    let pairs = faces
        .iter()
        .enumerate()
        .flat_map(|(j, s)| s.vertices().iter().map(move |&v| (v, j)));
    Relation::new(x, y, pairs)
}

fn check_same_x(r: &Relation, r2: &Relation) -> Result<(), RelationError> {
    if r.x != r2.x {
        return Err(RelationError::UniverseMismatch);
    }
    Ok(())
}

/// Whether `f: Y → Z` satisfies `S_y ⊆ S'_{f(y)}` for every `y`.
pub fn is_morphism(f: &[Vertex], r: &Relation, r2: &Relation) -> Result<bool, RelationError> {
    check_same_x(r, r2)?;
    if f.len() != r.y.len() {
        return Err(RelationError::PartialAssignment {
            expected: r.y.len(),
            got: f.len(),
        });
    }
    Ok(f.iter()
        .enumerate()
        .all(|(y, &z)| z < r2.y.len() && is_sorted_subset(r.support(y), r2.support(z))))
}

/// A validated morphism of relations on a common `X`.
#[derive(Clone, Debug)]
pub struct RelationMorphism {
    source: Relation,
    target: Relation,
    assignment: Vec<Vertex>,
}

impl RelationMorphism {
    pub fn new(
        source: Relation,
        target: Relation,
        assignment: Vec<Vertex>,
    ) -> Result<Self, RelationError> {
        if !is_morphism(&assignment, &source, &target)? {
            let bad = assignment
                .iter()
                .enumerate()
                .find(|&(y, &z)| {
                    z >= target.y.len() || !is_sorted_subset(source.support(y), target.support(z))
                })
                .map(|(y, _)| source.y.label(y).to_string())
                .unwrap_or_default();
            return Err(RelationError::NotAMorphism(bad));
        }
        Ok(RelationMorphism {
            source,
            target,
            assignment,
        })
    }

    pub fn source(&self) -> &Relation {
        &self.source
    }

    pub fn target(&self) -> &Relation {
        &self.target
    }

    pub fn assignment(&self) -> &[Vertex] {
        &self.assignment
    }

    /// The simplicial map `L_Y → L_Z` induced by the assignment.
    pub fn induced_l_map(&self) -> VertexMap {
        VertexMap::from_assignment(
            self.source.y.clone(),
            self.target.y.clone(),
            &self.assignment,
        )
    }

    pub fn compose(&self, next: &RelationMorphism) -> Result<RelationMorphism, RelationError> {
        let assignment = self
            .assignment
            .iter()
            .map(|&z| next.assignment[z])
            .collect();
        RelationMorphism::new(self.source.clone(), next.target.clone(), assignment)
    }
}

/// A morphism `R → R2` if one exists, sending each `y` to the least `z` with
/// `S_y ⊆ S'_z`. Exists exactly when `K(R) ≤ K(R2)`.
pub fn find_morphism(r: &Relation, r2: &Relation) -> Result<Option<Vec<Vertex>>, RelationError> {
    check_same_x(r, r2)?;
    r.require_covered()?;
    r2.require_covered()?;
    let mut assignment = Vec::with_capacity(r.y.len());
    for y in 0..r.y.len() {
        let target = (0..r2.y.len()).find(|&z| is_sorted_subset(r.support(y), r2.support(z)));
        match target {
            Some(z) => assignment.push(z),
            None => return Ok(None),
        }
    }
    debug_assert!(is_morphism(&assignment, r, r2)?);
    Ok(Some(assignment))
}

/// Morphisms exist in both directions.
pub fn are_equivalent(r: &Relation, r2: &Relation) -> Result<bool, RelationError> {
    Ok(find_morphism(r, r2)?.is_some() && find_morphism(r2, r)?.is_some())
}
