//! Elementary simplicial collapses.
//!
//! A face is free when exactly one other face properly contains it; an
//! elementary collapse removes such a pair. [`collapse_leq_to_strict`]
//! builds an explicit collapse from the Dowker complex of `≤` to that of `<`.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Simplex, SimplicialComplex};
use crate::poset::{Poset, PosetError, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CollapseError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<String>),
    #[error("{face:?} is not free; its proper cofaces are {cofaces:?}")]
    NotFree {
        face: Vec<String>,
        cofaces: Vec<Vec<String>>,
    },
    #[error("malformed step: {0:?} is not a codimension-one face of {1:?}")]
    MalformedStep(Vec<String>, Vec<String>),
    #[error("step {index}: {source}")]
    StepFailed {
        index: usize,
        #[source]
        source: Box<CollapseError>,
    },
    #[error("`{0}` forms a connected component by itself")]
    SingletonComponent(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CollapseStep {
    pub free_face: Simplex,
    pub coface: Simplex,
}

impl CollapseStep {
    pub fn new(free_face: Simplex, coface: Simplex) -> Self {
        CollapseStep { free_face, coface }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseSequence {
    pub initial: SimplicialComplex,
    pub steps: Vec<CollapseStep>,
}

impl CollapseSequence {
    /// Replays the steps, returning the final complex.
    pub fn verify(&self) -> Result<SimplicialComplex, CollapseError> {
        verify_sequence(self)
    }

    /// Every intermediate complex, starting with the initial one.
    pub fn complexes(&self) -> Result<Vec<SimplicialComplex>, CollapseError> {
        let mut out = vec![self.initial.clone()];
        for (index, step) in self.steps.iter().enumerate() {
            let next =
                apply_step(out.last().unwrap(), step).map_err(|e| CollapseError::StepFailed {
                    index,
                    source: Box::new(e),
                })?;
            out.push(next);
        }
        Ok(out)
    }

    /// Steps as pairs of label lists, in the same vertex order as the universe.
    pub fn label_steps(&self) -> Vec<(Vec<String>, Vec<String>)> {
        let u = self.initial.universe();
        let labels = |s: &Simplex| s.labels(u).into_iter().map(String::from).collect();
        self.steps
            .iter()
            .map(|st| (labels(&st.free_face), labels(&st.coface)))
            .collect()
    }
}

fn labels_of(k: &SimplicialComplex, s: &Simplex) -> Vec<String> {
    s.labels(k.universe())
        .into_iter()
        .map(String::from)
        .collect()
}

/// The unique face properly containing `s`, if there is exactly one.
pub fn free_coface(k: &SimplicialComplex, s: &Simplex) -> Result<Option<Simplex>, CollapseError> {
    if !k.contains(s) {
        return Err(CollapseError::NotAFace(labels_of(k, s)));
    }
    // in a closed complex, a second proper coface always shows up in codimension one
    let mut cofaces = k.codim_one_cofaces(s);
    Ok(if cofaces.len() == 1 {
        cofaces.pop()
    } else {
        None
    })
}

/// Removes the free pair `step` from `k`.
pub fn apply_step(
    k: &SimplicialComplex,
    step: &CollapseStep,
) -> Result<SimplicialComplex, CollapseError> {
    let CollapseStep { free_face, coface } = step;
    if coface.len() != free_face.len() + 1 || !free_face.is_subset_of(coface) {
        return Err(CollapseError::MalformedStep(
            labels_of(k, free_face),
            labels_of(k, coface),
        ));
    }
    if !k.contains(free_face) {
        return Err(CollapseError::NotAFace(labels_of(k, free_face)));
    }
    let cofaces = k.codim_one_cofaces(free_face);
    if cofaces.len() != 1 || &cofaces[0] != coface {
        return Err(CollapseError::NotFree {
            face: labels_of(k, free_face),
            cofaces: cofaces.iter().map(|c| labels_of(k, c)).collect(),
        });
    }
    Ok(k.without_faces(free_face, coface))
}

pub fn verify_sequence(seq: &CollapseSequence) -> Result<SimplicialComplex, CollapseError> {
    seq.steps
        .iter()
        .enumerate()
        .try_fold(seq.initial.clone(), |k, (index, step)| {
            apply_step(&k, step).map_err(|e| CollapseError::StepFailed {
                index,
                source: Box::new(e),
            })
        })
}

/// Collapse from the Dowker complex of `≤` to that of `<` on the given side.
///
/// Faces containing a maximal element `y` (minimal, for side L) are exactly
/// the faces of its unique facet `{y} ∪ {x < y}` that contain `y`. They are
/// removed by pairing `{y} ∪ A` with `{y} ∪ A ∪ {x₀}`, where `x₀` is the least
/// element below `y`, largest faces first.
pub fn collapse_leq_to_strict(p: &Poset, side: Side) -> Result<CollapseSequence, CollapseError> {
    if let Some(v) = p.singleton_component() {
        return Err(CollapseError::SingletonComponent(p.label(v).to_string()));
    }
    let initial = p.dowker_complex(false, side)?;
    let oriented = match side {
        Side::K => p.clone(),
        Side::L => p.dual(),
    };
    let mut steps = Vec::new();
    for y in oriented.maximal_elements() {
        let below = oriented.strictly_below(y);
        let x0 = below[0];
        let rest: Vec<_> = below[1..].to_vec();
        let mut pairs: Vec<CollapseStep> = subsets(&rest)
            .map(|a| {
                let free = Simplex::new(a.iter().copied().chain([y])).unwrap();
                let coface = free.with_vertex(x0);
                CollapseStep::new(free, coface)
            })
            .collect();
        pairs.sort_by(|s, t| {
            t.coface
                .len()
                .cmp(&s.coface.len())
                .then_with(|| s.free_face.cmp(&t.free_face))
        });
        steps.extend(pairs);
    }
    let seq = CollapseSequence { initial, steps };
    debug_assert_eq!(
        seq.verify().ok(),
        p.dowker_complex(true, side).ok(),
        "collapse must end at the strict complex"
    );
    Ok(seq)
}

fn subsets(items: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    assert!(items.len() < 64);
    (0u64..1 << items.len()).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Repeatedly collapses the highest-dimensional, lexicographically least free
/// face until none is left. A single-point core certifies contractibility;
/// any other core is inconclusive.
pub fn greedy_collapse(k: &SimplicialComplex) -> (SimplicialComplex, CollapseSequence) {
    let mut current = k.clone();
    let mut steps = Vec::new();
    let mut candidates: BTreeSet<(Reverse<usize>, Simplex)> = k
        .faces()
        .iter()
        .map(|s| (Reverse(s.dim()), s.clone()))
        .collect();
    loop {
        let found = candidates.iter().find_map(|(_, s)| {
            let cofaces = current.codim_one_cofaces(s);
            (cofaces.len() == 1).then(|| CollapseStep::new(s.clone(), cofaces[0].clone()))
        });
        let Some(step) = found else { break };
        candidates.remove(&(Reverse(step.free_face.dim()), step.free_face.clone()));
        candidates.remove(&(Reverse(step.coface.dim()), step.coface.clone()));
        current = current.without_faces(&step.free_face, &step.coface);
        steps.push(step);
    }
    let seq = CollapseSequence {
        initial: k.clone(),
        steps,
    };
    (current, seq)
}

/// Outcome of a contractibility check; never claims non-contractibility.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "certificate", rename_all = "lowercase")]
pub enum Contractibility {
    Cone { apex: String },
    Collapsible,
    Unknown,
}

impl Contractibility {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Contractibility::Unknown)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Contractibility::Cone { .. } => "cone",
            Contractibility::Collapsible => "collapsible",
            Contractibility::Unknown => "unknown",
        }
    }
}

pub fn certify_contractible(k: &SimplicialComplex) -> Contractibility {
    if let Some(apex) = k.cone_apex() {
        return Contractibility::Cone {
            apex: k.universe().label(apex).to_string(),
        };
    }
    if !k.is_empty() && greedy_collapse(k).0.is_point() {
        Contractibility::Collapsible
    } else {
        Contractibility::Unknown
    }
}
