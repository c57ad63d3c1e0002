//! Closed relations between two posets.
//!
//! A relation `R ⊆ X × Y` is closed when it is an up-set of the product
//! order. Two hypotheses on the fibers `S_x = {y : x R y}` and
//! `S_y = {x : x R y}` are checked here:
//!
//! * every fiber's order complex is contractible, which makes the order
//!   complexes of `X` and `Y` homotopy equivalent;
//! * every fiber has a maximum, which makes the K-complexes of `X` and `Y`
//!   homotopy equivalent. Viewing `R` itself as a poset, each facet of
//!   `K_X` then pulls back to a single closed simplex of `K_R`.
//!
//! Contractibility is only ever certified (cone apex or collapse to a point);
//! an uncertified fiber is reported as unknown, never as non-contractible.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::collapse::{certify_contractible, Contractibility};
use crate::complex::{SimplicialComplex, Vertex};
use crate::homology::{homology, HomologyProfile};
use crate::poset::{product_poset, Poset, Side};
use crate::relation::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedError {
    #[error("relation is not closed: ({0},{1}) is in R but ({2},{3}) above it is not")]
    NotClosed(String, String, String, String),
    #[error("fiber of `{0}` is empty")]
    EmptyFiber(String),
    #[error("`{0}` is not an element of the chosen poset")]
    UnknownElement(String),
}

/// Which factor of `X × Y` an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Quillen,
    Weak,
}

/// First pair `(x, y) ∈ R` with some `(x', y') ≥ (x, y)` outside `R`.
fn closedness_violation(
    pairs: &BTreeSet<(Vertex, Vertex)>,
    p: &Poset,
    q: &Poset,
) -> Option<((Vertex, Vertex), (Vertex, Vertex))> {
    for &(x, y) in pairs {
        for x2 in p.up_set(x) {
            for y2 in q.up_set(y) {
                if !pairs.contains(&(x2, y2)) {
                    return Some(((x, y), (x2, y2)));
                }
            }
        }
    }
    None
}

/// Up-closure of `pairs` in the product order.
pub fn is_closed(pairs: &BTreeSet<(Vertex, Vertex)>, p: &Poset, q: &Poset) -> bool {
    closedness_violation(pairs, p, q).is_none()
}

#[derive(Clone, Debug)]
pub struct ClosedRelation {
    x: Poset,
    y: Poset,
    pairs: BTreeSet<(Vertex, Vertex)>,
}

impl ClosedRelation {
    pub fn new<I>(x: Poset, y: Poset, pairs: I) -> Result<Self, ClosedError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let pairs: BTreeSet<(Vertex, Vertex)> = pairs.into_iter().collect();
        for &(a, b) in &pairs {
            if a >= x.len() {
                return Err(ClosedError::UnknownElement(format!("#{a}")));
            }
            if b >= y.len() {
                return Err(ClosedError::UnknownElement(format!("#{b}")));
            }
        }
        if let Some(((a, b), (c, d))) = closedness_violation(&pairs, &x, &y) {
            return Err(ClosedError::NotClosed(
                x.label(a).into(),
                y.label(b).into(),
                x.label(c).into(),
                y.label(d).into(),
            ));
        }
        Ok(ClosedRelation { x, y, pairs })
    }

    pub fn from_labels(x: Poset, y: Poset, pairs: &[(&str, &str)]) -> Result<Self, ClosedError> {
        let indexed = pairs
            .iter()
            .map(|(a, b)| {
                let a = x
                    .elements()
                    .index_of(a)
                    .ok_or_else(|| ClosedError::UnknownElement(a.to_string()))?;
                let b = y
                    .elements()
                    .index_of(b)
                    .ok_or_else(|| ClosedError::UnknownElement(b.to_string()))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>, ClosedError>>()?;
        Self::new(x, y, indexed)
    }

    pub fn x_poset(&self) -> &Poset {
        &self.x
    }

    pub fn y_poset(&self) -> &Poset {
        &self.y
    }

    pub fn pairs(&self) -> &BTreeSet<(Vertex, Vertex)> {
        &self.pairs
    }

    fn poset(&self, factor: Factor) -> &Poset {
        match factor {
            Factor::X => &self.x,
            Factor::Y => &self.y,
        }
    }

    /// Elements of the other factor related to `v`, ascending.
    pub fn fiber_elements(&self, v: Vertex, factor: Factor) -> Result<Vec<Vertex>, ClosedError> {
        if v >= self.poset(factor).len() {
            return Err(ClosedError::UnknownElement(format!("#{v}")));
        }
        let mut out: Vec<Vertex> = self
            .pairs
            .iter()
            .filter_map(|&(a, b)| match factor {
                Factor::X if a == v => Some(b),
                Factor::Y if b == v => Some(a),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// `S_v` as an induced subposet of the other factor.
    pub fn fiber(&self, v: Vertex, factor: Factor) -> Result<Poset, ClosedError> {
        let elements = self.fiber_elements(v, factor)?;
        let other = match factor {
            Factor::X => &self.y,
            Factor::Y => &self.x,
        };
        Ok(other.subposet(&elements))
    }

    fn fibers(&self) -> Result<Vec<(Factor, Vertex, Poset)>, ClosedError> {
        let mut out = Vec::new();
        for factor in [Factor::X, Factor::Y] {
            for v in 0..self.poset(factor).len() {
                let fiber = self.fiber(v, factor)?;
                if fiber.is_empty() {
                    return Err(ClosedError::EmptyFiber(
                        self.poset(factor).label(v).to_string(),
                    ));
                }
                out.push((factor, v, fiber));
            }
        }
        Ok(out)
    }

    /// Does every fiber have a maximum?
    pub fn weak_hypothesis(&self) -> Result<WeakReport, ClosedError> {
        let fibers = self
            .fibers()?
            .into_iter()
            .map(|(factor, v, fiber)| FiberMaximum {
                factor,
                element: self.poset(factor).label(v).to_string(),
                maximum: fiber.maximum().map(|m| fiber.label(m).to_string()),
                maximal: fiber
                    .maximal_elements()
                    .into_iter()
                    .map(|m| fiber.label(m).to_string())
                    .collect(),
            })
            .collect::<Vec<_>>();
        let witness = fibers
            .iter()
            .find(|f| f.maximum.is_none())
            .map(|f| (f.factor, f.element.clone()));
        Ok(WeakReport {
            holds: witness.is_none(),
            witness,
            fibers,
        })
    }

    /// Certifies contractibility of each fiber's order complex (and, for
    /// reference, its K-complex).
    pub fn quillen_hypothesis(&self) -> Result<QuillenReport, ClosedError> {
        let fibers = self
            .fibers()?
            .into_iter()
            .map(|(factor, v, fiber)| {
                let order = fiber.order_complex().expect("fiber is nonempty");
                let k = fiber
                    .dowker_complex(false, Side::K)
                    .expect("fiber is nonempty");
                FiberCertificate {
                    factor,
                    element: self.poset(factor).label(v).to_string(),
                    order_complex: certify_contractible(&order),
                    k_complex: certify_contractible(&k),
                }
            })
            .collect::<Vec<_>>();
        Ok(QuillenReport {
            all_certified: fibers.iter().all(|f| f.order_complex.is_certified()),
            fibers,
        })
    }

    /// `R` ordered as a subposet of `X × Y`; elements labelled `(x,y)`.
    pub fn relation_poset(&self) -> Poset {
        let product = product_poset(&self.x, &self.y);
        let n = self.y.len();
        let members: Vec<Vertex> = self.pairs.iter().map(|&(a, b)| a * n + b).collect();
        product.subposet(&members)
    }

    /// For each facet `s` of the K-complex of one factor, the subcomplex of
    /// `K_R` spanned by the pairs projecting into `s`, and whether it is a
    /// single closed simplex.
    pub fn preimage_facet_check(&self, factor: Factor) -> PreimageReport {
        let base = self.poset(factor);
        let rposet = self.relation_poset();
        let projections: Vec<Vertex> = self
            .pairs
            .iter()
            .map(|&(a, b)| match factor {
                Factor::X => a,
                Factor::Y => b,
            })
            .collect();
        let k = base
            .dowker_complex(false, Side::K)
            .expect("factor posets are nonempty");
        let facets = k
            .facets()
            .into_iter()
            .map(|s| {
                let preimage: Vec<Vertex> = (0..projections.len())
                    .filter(|&i| s.contains(projections[i]))
                    .collect();
                let spanned = spanned_subcomplex(&rposet, &preimage);
                let full = !preimage.is_empty() && spanned.is_full_simplex();
                PreimageFacet {
                    facet: s
                        .labels(base.elements())
                        .into_iter()
                        .map(String::from)
                        .collect(),
                    preimage: preimage
                        .iter()
                        .map(|&i| rposet.label(i).to_string())
                        .collect(),
                    full_simplex: full,
                }
            })
            .collect::<Vec<_>>();
        PreimageReport {
            factor,
            all_full: facets.iter().all(|f| f.full_simplex),
            facets,
        }
    }
}

/// Induced subcomplex of the K-complex of `p` on `vertices`: the subsets of
/// `vertices` with a common upper bound in `p`.
fn spanned_subcomplex(p: &Poset, vertices: &[Vertex]) -> SimplicialComplex {
    let pairs: Vec<(Vertex, Vertex)> = vertices
        .iter()
        .flat_map(|&v| p.up_set(v).into_iter().map(move |w| (v, w)))
        .collect();
    if pairs.is_empty() {
        return SimplicialComplex::empty(p.elements().clone());
    }
    Relation::new(p.elements().clone(), p.elements().clone(), pairs)
        .and_then(|r| r.k_complex())
        .expect("pairs lie in the element set")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberMaximum {
    pub factor: Factor,
    pub element: String,
    pub maximum: Option<String>,
    pub maximal: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeakReport {
    pub holds: bool,
    /// First fiber without a maximum.
    pub witness: Option<(Factor, String)>,
    pub fibers: Vec<FiberMaximum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberCertificate {
    pub factor: Factor,
    pub element: String,
    pub order_complex: Contractibility,
    pub k_complex: Contractibility,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuillenReport {
    pub all_certified: bool,
    pub fibers: Vec<FiberCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreimageFacet {
    pub facet: Vec<String>,
    pub preimage: Vec<String>,
    pub full_simplex: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreimageReport {
    pub factor: Factor,
    pub all_full: bool,
    pub facets: Vec<PreimageFacet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Hypothesis certified and the homology-level conclusion holds.
    ConclusionVerified,
    HypothesisNotMet,
    /// Hypothesis certified but the conclusion fails.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum HypothesisReport {
    Quillen(QuillenReport),
    Weak(WeakReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedVerification {
    pub mode: Mode,
    pub check: &'static str,
    pub hypothesis_holds: bool,
    pub hypothesis: HypothesisReport,
    pub homology_x: HomologyProfile,
    pub homology_y: HomologyProfile,
    pub same_homology: bool,
    pub preimages: Vec<PreimageReport>,
    pub verdict: Verdict,
}

/// Checks a hypothesis and the homology-level form of its conclusion.
///
/// In quillen mode the compared complexes are the order complexes of `X` and
/// `Y`; in weak mode they are the K-complexes, and the facet preimages are
/// checked on both sides as well.
pub fn verify_closed_relation(
    r: &ClosedRelation,
    mode: Mode,
) -> Result<ClosedVerification, ClosedError> {
    let (hypothesis_holds, hypothesis, complexes) = match mode {
        Mode::Quillen => {
            let report = r.quillen_hypothesis()?;
            let cx = r.x.order_complex().expect("nonempty");
            let cy = r.y.order_complex().expect("nonempty");
            (
                report.all_certified,
                HypothesisReport::Quillen(report),
                (cx, cy),
            )
        }
        Mode::Weak => {
            let report = r.weak_hypothesis()?;
            let kx = r.x.dowker_complex(false, Side::K).expect("nonempty");
            let ky = r.y.dowker_complex(false, Side::K).expect("nonempty");
            (report.holds, HypothesisReport::Weak(report), (kx, ky))
        }
    };
    let homology_x = homology(&complexes.0);
    let homology_y = homology(&complexes.1);
    let same = homology_x == homology_y;
    let preimages = match mode {
        Mode::Quillen => Vec::new(),
        Mode::Weak => vec![
            r.preimage_facet_check(Factor::X),
            r.preimage_facet_check(Factor::Y),
        ],
    };
    let conclusion = same && preimages.iter().all(|p| p.all_full);
    let verdict = match (hypothesis_holds, conclusion) {
        (false, _) => Verdict::HypothesisNotMet,
        (true, true) => Verdict::ConclusionVerified,
        (true, false) => Verdict::Violation,
    };
    Ok(ClosedVerification {
        mode,
        check: "homology-level",
        hypothesis_holds,
        hypothesis,
        homology_x,
        homology_y,
        same_homology: same,
        preimages,
        verdict,
    })
}

/// Every closed relation between `p` and `q`, as up-sets of `p × q`.
pub fn all_closed_relations(p: &Poset, q: &Poset) -> Vec<BTreeSet<(Vertex, Vertex)>> {
    let n = q.len();
    product_poset(p, q)
        .up_sets()
        .into_iter()
        .map(|u| u.into_iter().map(|i| (i / n, i % n)).collect())
        .collect()
}
