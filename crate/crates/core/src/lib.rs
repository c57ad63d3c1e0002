//! Dowker complexes of relations and finite posets as finite spaces.
//!
//! * [`complex`]: abstract simplicial complexes, simplicial maps, contiguity.
//! * [`relation`]: K- and L-complexes of a relation, morphisms of relations
//!   and the correspondence between subcomplexes and relation classes.
//! * [`poset`]: finite posets and finite T0-spaces, order complexes, the
//!   Dowker complexes of `≤` and `<`, and realization of K-complexes.
//! * [`collapse`]: elementary collapses, including the explicit collapse of
//!   the complex of `≤` onto the complex of `<`.
//! * [`homology`]: integer homology through Smith normal form, used to check
//!   homotopy-equivalence claims at the level of homology.
//! * [`closed`]: closed relations between posets and the hypothesis checks
//!   for comparing their complexes.
//! * [`io`]: the line-based input formats and JSON reports.
//! * [`enumerate`]: exhaustive and random generators of small posets,
//!   relations and complexes.

pub mod closed;
pub mod collapse;
pub mod complex;
pub mod enumerate;
pub mod homology;
pub mod io;
pub mod poset;
pub mod relation;

pub use closed::ClosedRelation;
pub use collapse::{CollapseSequence, CollapseStep};
pub use complex::{Simplex, SimplicialComplex, Universe, Vertex, VertexMap};
pub use homology::{homology, same_homology, HomologyProfile, IntegerMatrix};
pub use poset::{FiniteTopology, Poset, Side};
pub use relation::{Relation, RelationMorphism};
