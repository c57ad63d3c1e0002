//! Abstract simplicial complexes over interned vertex labels.
//!
//! Every complex lives over a [`Universe`] of labels. Faces are stored
//! explicitly as a downward-closed set of [`Simplex`] values, each a
//! strictly increasing list of vertex indices into the universe.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Dense index of a vertex inside its [`Universe`].
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("empty facet")]
    EmptyFacet,
    #[error("empty universe")]
    EmptyUniverse,
    #[error("empty complex")]
    EmptyComplex,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("vertex `{0}` is not in the universe")]
    UnknownVertex(String),
    #[error("vertex map is undefined on `{0}`")]
    PartialMap(String),
    #[error("face {0:?} is not mapped to a face of the target")]
    NotSimplicial(Vec<String>),
}

/// A finite set of labels, interned to indices `0..len` in insertion order.
#[derive(Clone, Default)]
pub struct Universe {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut universe = Universe::default();
        for label in labels {
            let label = label.into();
            if universe.index.contains_key(&label) {
                return Err(ComplexError::DuplicateLabel(label));
            }
            universe.index.insert(label.clone(), universe.labels.len());
            universe.labels.push(label);
        }
        Ok(universe)
    }

    /// Universe with labels `"1"`, `"2"`, ..., `"n"`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string())).expect("numbered labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn lookup(&self, label: &str) -> Result<Vertex, ComplexError> {
        self.index_of(label)
            .ok_or_else(|| ComplexError::UnknownVertex(label.to_string()))
    }

    pub fn labels_of<'a>(&'a self, vertices: &'a [Vertex]) -> impl Iterator<Item = &'a str> + 'a {
        vertices.iter().map(|&v| self.label(v))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.labels).finish()
    }
}

/// A nonempty set of vertices, kept sorted and duplicate free.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Result<Self, ComplexError> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Err(ComplexError::EmptyFacet);
        }
        Ok(Simplex(vs))
    }

    /// Caller guarantees `sorted` is strictly increasing and nonempty.
    pub(crate) fn from_sorted(sorted: Vec<Vertex>) -> Self {
        debug_assert!(!sorted.is_empty());
        debug_assert!(sorted.windows(2).all(|w| w[0] < w[1]));
        Simplex(sorted)
    }

    pub fn vertex(v: Vertex) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut vs = self.0.clone();
        vs.extend_from_slice(&other.0);
        vs.sort_unstable();
        vs.dedup();
        Simplex(vs)
    }

    pub fn with_vertex(&self, v: Vertex) -> Simplex {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Simplex(vs)
            }
        }
    }

    /// Face obtained by dropping `v`; `None` if that leaves nothing.
    pub fn without_vertex(&self, v: Vertex) -> Option<Simplex> {
        let vs: Vec<Vertex> = self.0.iter().copied().filter(|&w| w != v).collect();
        (!vs.is_empty()).then_some(Simplex(vs))
    }

    /// All nonempty subsets, including `self`.
    pub fn faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 64, "simplex too large to enumerate its faces");
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i])
                    .collect(),
            )
        })
    }

    pub fn labels<'a>(&'a self, universe: &'a Universe) -> Vec<&'a str> {
        universe.labels_of(&self.0).collect()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.0).finish()
    }
}

pub(crate) fn is_sorted_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// A downward-closed set of simplices over a shared universe.
#[derive(Clone)]
pub struct SimplicialComplex {
    universe: Arc<Universe>,
    faces: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn empty(universe: Arc<Universe>) -> Self {
        SimplicialComplex {
            universe,
            faces: BTreeSet::new(),
        }
    }

    /// Downward closure of `facets`. Redundant facets are absorbed.
    pub fn from_facets<F, I>(universe: Arc<Universe>, facets: F) -> Result<Self, ComplexError>
    where
        F: IntoIterator<Item = I>,
        I: IntoIterator<Item = Vertex>,
    {
        let mut simplices = Vec::new();
        for facet in facets {
            let s = Simplex::new(facet)?;
            if let Some(&v) = s.vertices().iter().find(|&&v| v >= universe.len()) {
                return Err(ComplexError::UnknownVertex(format!("#{v}")));
            }
            simplices.push(s);
        }
        Ok(Self::from_simplices(universe, simplices))
    }

    /// Same as [`from_facets`](Self::from_facets), with facets given by label.
    pub fn from_label_facets<S: AsRef<str>>(
        universe: Arc<Universe>,
        facets: &[Vec<S>],
    ) -> Result<Self, ComplexError> {
        let indexed = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| universe.lookup(l.as_ref()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_facets(universe, indexed)
    }

    /// Builds a complex whose facets are given by label, with the universe
    /// taken from the labels in order of first appearance.
    pub fn from_labels(facets: &[&[&str]]) -> Result<Self, ComplexError> {
        let mut seen = Vec::<String>::new();
        for l in facets.iter().flat_map(|f| f.iter()) {
            if !seen.iter().any(|s| s == l) {
                seen.push(l.to_string());
            }
        }
        let universe = Arc::new(Universe::new(seen)?);
        let facets: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        Self::from_label_facets(universe, &facets)
    }

    pub(crate) fn from_simplices<I>(universe: Arc<Universe>, simplices: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut faces = BTreeSet::new();
        let mut maximal: Vec<Simplex> = simplices.into_iter().collect();
        // expanding larger simplices first lets contained ones be skipped
        maximal.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for s in maximal {
            if faces.contains(&s) {
                continue;
            }
            faces.extend(s.faces());
        }
        SimplicialComplex { universe, faces }
    }

    /// Caller guarantees `faces` is downward closed.
    pub(crate) fn from_faces_unchecked(universe: Arc<Universe>, faces: BTreeSet<Simplex>) -> Self {
        let k = SimplicialComplex { universe, faces };
        debug_assert!(k.is_downward_closed());
        k
    }

    /// The complex of all nonempty subsets of the universe.
    pub fn full(universe: Arc<Universe>) -> Result<Self, ComplexError> {
        if universe.is_empty() {
            return Err(ComplexError::EmptyUniverse);
        }
        let all: Vec<Vertex> = (0..universe.len()).collect();
        Self::from_facets(universe, [all])
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn faces(&self) -> &BTreeSet<Simplex> {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces.contains(s)
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.iter().map(Simplex::dim).max()
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Simplex> + '_ {
        self.faces.iter().filter(move |s| s.dim() == dim)
    }

    /// Vertices of the complex (the union of its 0-faces), ascending.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.faces_of_dim(0).map(|s| s.vertices()[0]).collect()
    }

    /// Is every universe element a vertex?
    pub fn is_complete(&self) -> bool {
        self.vertices().len() == self.universe.len()
    }

    /// Faces of the form `s ∪ {v}` with `v ∉ s`.
    pub fn codim_one_cofaces(&self, s: &Simplex) -> Vec<Simplex> {
        self.vertices()
            .into_iter()
            .filter(|&v| !s.contains(v))
            .map(|v| s.with_vertex(v))
            .filter(|c| self.faces.contains(c))
            .collect()
    }

    pub fn is_facet(&self, s: &Simplex) -> bool {
        self.contains(s) && self.codim_one_cofaces(s).is_empty()
    }

    /// Inclusion-maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Simplex> {
        let vertices = self.vertices();
        self.faces
            .iter()
            .filter(|s| {
                vertices
                    .iter()
                    .all(|&v| s.contains(v) || !self.faces.contains(&s.with_vertex(v)))
            })
            .cloned()
            .collect()
    }

    /// Facets as label lists, sorted lexicographically by label sequence.
    pub fn label_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets()
            .iter()
            .map(|s| {
                let mut ls: Vec<String> = s
                    .labels(&self.universe)
                    .into_iter()
                    .map(String::from)
                    .collect();
                ls.sort();
                ls
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|s| {
            s.len() == 1
                || s.vertices()
                    .iter()
                    .all(|&v| self.faces.contains(&s.without_vertex(v).unwrap()))
        }) && self
            .faces
            .iter()
            .all(|s| s.vertices().iter().all(|&v| v < self.universe.len()))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|s| if s.dim() % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// True when the complex is a single closed simplex.
    pub fn is_full_simplex(&self) -> bool {
        let vs = self.vertices();
        !vs.is_empty() && self.faces.contains(&Simplex::from_sorted(vs))
    }

    pub fn is_point(&self) -> bool {
        self.faces.len() == 1
    }

    /// Least vertex lying in every facet, if any.
    pub fn cone_apex(&self) -> Option<Vertex> {
        let facets = self.facets();
        let first = facets.first()?;
        first
            .vertices()
            .iter()
            .copied()
            .find(|&v| facets.iter().all(|f| f.contains(v)))
    }

    /// Subcomplex of faces whose vertices all lie in `vertices`.
    pub fn induced(&self, vertices: &[Vertex]) -> SimplicialComplex {
        let keep: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let faces = self
            .faces
            .iter()
            .filter(|s| s.vertices().iter().all(|v| keep.contains(v)))
            .cloned()
            .collect();
        SimplicialComplex::from_faces_unchecked(self.universe.clone(), faces)
    }

    /// Removes a pair of faces; the caller is responsible for closure.
    pub(crate) fn without_faces(&self, a: &Simplex, b: &Simplex) -> SimplicialComplex {
        let mut faces = self.faces.clone();
        faces.remove(a);
        faces.remove(b);
        SimplicialComplex::from_faces_unchecked(self.universe.clone(), faces)
    }

    fn label_faces(&self) -> BTreeSet<Vec<&str>> {
        self.faces
            .iter()
            .map(|s| {
                let mut ls = s.labels(&self.universe);
                ls.sort_unstable();
                ls
            })
            .collect()
    }

    fn translate_face(&self, s: &Simplex, target: &Universe) -> Option<Simplex> {
        let vs = s
            .vertices()
            .iter()
            .map(|&v| target.index_of(self.universe.label(v)))
            .collect::<Option<Vec<_>>>()?;
        Simplex::new(vs).ok()
    }

    /// Every face of `self` is a face of `other`, matching vertices by label.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        if self.universe == other.universe {
            return self.faces.is_subset(&other.faces);
        }
        self.faces.iter().all(|s| {
            self.translate_face(s, &other.universe)
                .is_some_and(|t| other.faces.contains(&t))
        })
    }
}

/// Equality of face sets over the same universe, compared by label.
impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        if self.universe == other.universe {
            return self.faces == other.faces;
        }
        let mut a: Vec<&String> = self.universe.labels().iter().collect();
        let mut b: Vec<&String> = other.universe.labels().iter().collect();
        a.sort();
        b.sort();
        a == b && self.label_faces() == other.label_faces()
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("facets", &self.label_facets())
            .finish()
    }
}

pub fn is_subcomplex(t: &SimplicialComplex, k: &SimplicialComplex) -> bool {
    t.is_subcomplex_of(k)
}

/// A vertex assignment between two universes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    domain: Arc<Universe>,
    codomain: Arc<Universe>,
    images: Vec<Option<Vertex>>,
}

impl VertexMap {
    pub fn new(domain: Arc<Universe>, codomain: Arc<Universe>) -> Self {
        let images = vec![None; domain.len()];
        VertexMap {
            domain,
            codomain,
            images,
        }
    }

    pub fn from_assignment(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        assignment: &[Vertex],
    ) -> Self {
        let mut map = VertexMap::new(domain, codomain);
        for (v, &w) in assignment.iter().enumerate() {
            map.set(v, w);
        }
        map
    }

    pub fn from_labels(
        domain: Arc<Universe>,
        codomain: Arc<Universe>,
        pairs: &[(&str, &str)],
    ) -> Result<Self, ComplexError> {
        let mut map = VertexMap::new(domain, codomain);
        for (a, b) in pairs {
            let v = map.domain.lookup(a)?;
            let w = map.codomain.lookup(b)?;
            map.set(v, w);
        }
        Ok(map)
    }

    pub fn identity(universe: Arc<Universe>) -> Self {
        let assignment: Vec<Vertex> = (0..universe.len()).collect();
        Self::from_assignment(universe.clone(), universe, &assignment)
    }

    pub fn set(&mut self, v: Vertex, image: Vertex) {
        assert!(image < self.codomain.len(), "image outside codomain");
        self.images[v] = Some(image);
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.images.get(v).copied().flatten()
    }

    pub fn domain(&self) -> &Arc<Universe> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Universe> {
        &self.codomain
    }

    pub fn image_of(&self, s: &Simplex) -> Result<Simplex, ComplexError> {
        let vs = s
            .vertices()
            .iter()
            .map(|&v| {
                self.get(v)
                    .ok_or_else(|| ComplexError::PartialMap(self.domain.label(v).to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Simplex::new(vs)
    }

    fn labels(&self, s: &Simplex) -> Vec<String> {
        s.labels(&self.domain)
            .into_iter()
            .map(String::from)
            .collect()
    }
}

/// Image complex `{f(s) : s ∈ K}`, checking that every image is a face of `l`.
pub fn apply_simplicial_map(
    f: &VertexMap,
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<SimplicialComplex, ComplexError> {
    let mut images = BTreeSet::new();
    for s in k.faces() {
        let image = f.image_of(s)?;
        if !l.contains(&image) {
            return Err(ComplexError::NotSimplicial(f.labels(s)));
        }
        images.insert(image);
    }
    Ok(SimplicialComplex::from_faces_unchecked(
        l.universe().clone(),
        images,
    ))
}

/// Whether `f(s) ∪ g(s)` is a face of `l` for every face `s` of `k`.
pub fn are_contiguous(
    f: &VertexMap,
    g: &VertexMap,
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<bool, ComplexError> {
    apply_simplicial_map(f, k, l)?;
    apply_simplicial_map(g, k, l)?;
    for s in k.faces() {
        if !l.contains(&f.image_of(s)?.union(&g.image_of(s)?)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boundary() -> SimplicialComplex {
        SimplicialComplex::from_labels(&[&["a", "b"], &["a", "c"], &["b", "c"]]).unwrap()
    }

    fn filled() -> SimplicialComplex {
        SimplicialComplex::from_labels(&[&["a", "b", "c"]]).unwrap()
    }

    #[test]
    fn boundary_of_triangle_from_facets() {
        let k = boundary();
        assert_eq!(k.face_count(), 6);
        assert_eq!(
            k.label_facets(),
            vec![vec!["a", "b"], vec!["a", "c"], vec!["b", "c"]]
        );
        assert!(k.is_downward_closed());
    }

    #[test]
    fn single_point_and_redundant_facets() {
        let p = SimplicialComplex::from_labels(&[&["a"]]).unwrap();
        assert_eq!(p.face_count(), 1);
        assert!(p.is_point());

        let k = SimplicialComplex::from_labels(&[&["1", "2", "3"], &["1", "2"]]).unwrap();
        assert_eq!(k.label_facets(), vec![vec!["1", "2", "3"]]);
    }

    #[test]
    fn constructor_errors() {
        let u = Arc::new(Universe::numbered(2));
        let empty: Vec<Vertex> = vec![];
        assert_eq!(
            SimplicialComplex::from_facets(u.clone(), [empty]),
            Err(ComplexError::EmptyFacet)
        );
        assert!(matches!(
            SimplicialComplex::from_facets(u.clone(), [vec![0, 5]]),
            Err(ComplexError::UnknownVertex(_))
        ));
        assert!(matches!(
            SimplicialComplex::from_label_facets(u, &[vec!["1", "9"]]),
            Err(ComplexError::UnknownVertex(l)) if l == "9"
        ));
        assert!(matches!(
            Universe::new(["a", "a"]),
            Err(ComplexError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn full_complexes() {
        let point = SimplicialComplex::full(Arc::new(Universe::new(["a"]).unwrap())).unwrap();
        assert!(point.is_point());
        let tri = SimplicialComplex::full(Arc::new(Universe::numbered(3))).unwrap();
        assert_eq!(tri.face_count(), 7);
        let tet = SimplicialComplex::full(Arc::new(Universe::numbered(4))).unwrap();
        assert_eq!(tet.face_count(), 15);
        assert_eq!(tet.dimension(), Some(3));
        assert_eq!(
            SimplicialComplex::full(Arc::new(Universe::default())),
            Err(ComplexError::EmptyUniverse)
        );
    }

    #[test]
    fn subcomplex_checks() {
        let b = boundary();
        let f = filled();
        assert!(is_subcomplex(&b, &f));
        assert!(!is_subcomplex(&f, &b));
        assert!(is_subcomplex(&b, &b));
    }

    #[test]
    fn simplicial_maps() {
        let b = boundary();
        let u = b.universe().clone();
        let id = VertexMap::identity(u.clone());
        assert_eq!(apply_simplicial_map(&id, &b, &b).unwrap(), b);

        let point = SimplicialComplex::from_labels(&[&["*"]]).unwrap();
        let constant = VertexMap::from_labels(
            u.clone(),
            point.universe().clone(),
            &[("a", "*"), ("b", "*"), ("c", "*")],
        )
        .unwrap();
        assert_eq!(apply_simplicial_map(&constant, &b, &point).unwrap(), point);

        let edge = SimplicialComplex::from_labels(&[&["1", "2"]]).unwrap();
        let squash = VertexMap::from_labels(
            u.clone(),
            edge.universe().clone(),
            &[("a", "1"), ("b", "1"), ("c", "2")],
        )
        .unwrap();
        // faces a, b, c, ab, ac, bc map to 1, 1, 2, 1, 12, 12
        for s in b.faces() {
            assert!(edge.contains(&squash.image_of(s).unwrap()));
        }
        assert_eq!(apply_simplicial_map(&squash, &b, &edge).unwrap(), edge);
    }

    #[test]
    fn non_simplicial_map_names_face() {
        let f = filled();
        let b = boundary();
        let id_into_boundary = VertexMap::identity(f.universe().clone());
        assert_eq!(
            apply_simplicial_map(&id_into_boundary, &f, &b),
            Err(ComplexError::NotSimplicial(vec![
                "a".into(),
                "b".into(),
                "c".into()
            ]))
        );
        let partial = VertexMap::new(f.universe().clone(), f.universe().clone());
        assert!(matches!(
            apply_simplicial_map(&partial, &f, &f),
            Err(ComplexError::PartialMap(_))
        ));
    }

    #[test]
    fn contiguity() {
        let b = boundary();
        let u = b.universe().clone();
        let id = VertexMap::identity(u.clone());
        assert!(are_contiguous(&id, &id, &b, &b).unwrap());

        let swap =
            VertexMap::from_labels(u.clone(), u.clone(), &[("a", "b"), ("b", "a"), ("c", "c")])
                .unwrap();
        // {a,c} ∪ {b,c} = {a,b,c} is not a face of the boundary
        assert!(!are_contiguous(&id, &swap, &b, &b).unwrap());

        let f = filled();
        assert!(are_contiguous(&id, &swap, &b, &f).unwrap());
    }

    #[test]
    fn cone_apexes() {
        assert_eq!(filled().cone_apex(), Some(0));
        assert_eq!(boundary().cone_apex(), None);
        let k = SimplicialComplex::from_labels(&[&["1", "2", "3"], &["1", "2", "4"]]).unwrap();
        assert_eq!(k.cone_apex().map(|v| k.universe().label(v)), Some("1"));
        assert_eq!(
            SimplicialComplex::empty(Arc::new(Universe::numbered(1))).cone_apex(),
            None
        );
    }

    #[test]
    fn equality_ignores_interning_order() {
        let a = SimplicialComplex::from_labels(&[&["x", "y"], &["z"]]).unwrap();
        let b = SimplicialComplex::from_labels(&[&["z"], &["y", "x"]]).unwrap();
        assert_eq!(a, b);
        let c = SimplicialComplex::from_labels(&[&["x", "y"], &["y", "z"]]).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sorted_subset() {
        assert!(is_sorted_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_sorted_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_sorted_subset(&[], &[0]));
    }
}
