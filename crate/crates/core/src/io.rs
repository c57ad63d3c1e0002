//! Line-based input formats and JSON reports.
//!
//! Every input file starts with a header `<kind> <name>` and continues with
//! one record per line. `#` starts a comment that runs to the end of the line.
//!
//! ```text
//! poset X1            relation R          complex B           space S
//! element 1           xelement 1          facet a b           point 1
//! element 3           yelement u          facet a c           point 2
//! le 1 3              pair 1 u            facet b c           open 1
//!                                                             open 1 2
//! ```
//!
//! Labels are compared as exact strings. Reports are JSON with sorted keys
//! and no floating point, so equal values always print to equal bytes.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::collapse::{CollapseSequence, CollapseStep};
use crate::complex::{ComplexError, Simplex, SimplicialComplex, Universe};
use crate::poset::{FiniteTopology, Poset, PosetError};
use crate::relation::{Relation, RelationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Errors turning a parsed document into a domain value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("expected a {expected} document, found a {found} document")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub le: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDoc {
    pub name: String,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexDoc {
    pub name: String,
    pub facets: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDoc {
    pub name: String,
    pub points: Vec<String>,
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Poset(PosetDoc),
    Relation(RelationDoc),
    Complex(ComplexDoc),
    Space(SpaceDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Poset(_) => "poset",
            Document::Relation(_) => "relation",
            Document::Complex(_) => "complex",
            Document::Space(_) => "space",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Poset(d) => &d.name,
            Document::Relation(d) => &d.name,
            Document::Complex(d) => &d.name,
            Document::Space(d) => &d.name,
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices().chain([(line.len(), ' ')]) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                tokens.push(Token {
                    text: &line[s..i],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    tokens
}

/// Tracks declared labels for one namespace.
struct Labels {
    what: &'static str,
    seen: HashSet<String>,
    order: Vec<String>,
}

impl Labels {
    fn new(what: &'static str) -> Self {
        Labels {
            what,
            seen: HashSet::new(),
            order: Vec::new(),
        }
    }

    fn declare(&mut self, line: usize, tok: &Token) -> Result<(), ParseError> {
        if !self.seen.insert(tok.text.to_string()) {
            return Err(ParseError::at(
                line,
                tok.column,
                format!("{} `{}` declared twice", self.what, tok.text),
            ));
        }
        self.order.push(tok.text.to_string());
        Ok(())
    }

    fn require(&self, line: usize, tok: &Token) -> Result<String, ParseError> {
        if !self.seen.contains(tok.text) {
            return Err(ParseError::at(
                line,
                tok.column,
                format!("undeclared {} `{}`", self.what, tok.text),
            ));
        }
        Ok(tok.text.to_string())
    }
}

fn arity(line: usize, tokens: &[Token], n: usize) -> Result<(), ParseError> {
    if tokens.len() - 1 != n {
        let column = tokens.get(n + 1).unwrap_or(&tokens[0]).column;
        return Err(ParseError::at(
            line,
            column,
            format!(
                "`{}` takes {n} argument(s), got {}",
                tokens[0].text,
                tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

/// Parses one document. Errors carry 1-based line and column numbers.
pub fn parse(text: &str) -> Result<Document, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokenize(l)))
        .filter(|(_, toks)| !toks.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(ParseError::at(1, 1, "missing header"));
    };
    if header.len() != 2 {
        let column = header.get(2).unwrap_or(&header[0]).column;
        return Err(ParseError::at(
            hline,
            column,
            "header must be `<kind> <name>`",
        ));
    }
    let name = header[1].text.to_string();
    match header[0].text {
        "poset" => {
            let mut elements = Labels::new("element");
            let mut le = Vec::new();
            for (line, toks) in lines {
                match toks[0].text {
                    "element" => {
                        arity(line, &toks, 1)?;
                        elements.declare(line, &toks[1])?;
                    }
                    "le" => {
                        arity(line, &toks, 2)?;
                        le.push((
                            elements.require(line, &toks[1])?,
                            elements.require(line, &toks[2])?,
                        ));
                    }
                    other => return Err(unknown(line, &toks[0], other, "poset")),
                }
            }
            Ok(Document::Poset(PosetDoc {
                name,
                elements: elements.order,
                le,
            }))
        }
        "relation" => {
            let mut xs = Labels::new("x element");
            let mut ys = Labels::new("y element");
            let mut pairs = Vec::new();
            for (line, toks) in lines {
                match toks[0].text {
                    "xelement" => {
                        arity(line, &toks, 1)?;
                        xs.declare(line, &toks[1])?;
                    }
                    "yelement" => {
                        arity(line, &toks, 1)?;
                        ys.declare(line, &toks[1])?;
                    }
                    "pair" => {
                        arity(line, &toks, 2)?;
                        pairs.push((xs.require(line, &toks[1])?, ys.require(line, &toks[2])?));
                    }
                    other => return Err(unknown(line, &toks[0], other, "relation")),
                }
            }
            Ok(Document::Relation(RelationDoc {
                name,
                x: xs.order,
                y: ys.order,
                pairs,
            }))
        }
        "complex" => {
            let mut facets = Vec::new();
            for (line, toks) in lines {
                match toks[0].text {
                    "facet" => {
                        if toks.len() < 2 {
                            return Err(ParseError::at(line, toks[0].column, "empty facet"));
                        }
                        let mut seen = Labels::new("vertex");
                        for t in &toks[1..] {
                            seen.declare(line, t)?;
                        }
                        facets.push(seen.order);
                    }
                    other => return Err(unknown(line, &toks[0], other, "complex")),
                }
            }
            Ok(Document::Complex(ComplexDoc { name, facets }))
        }
        "space" => {
            let mut points = Labels::new("point");
            let mut opens = Vec::new();
            for (line, toks) in lines {
                match toks[0].text {
                    "point" => {
                        arity(line, &toks, 1)?;
                        points.declare(line, &toks[1])?;
                    }
                    "open" => {
                        let mut seen = Labels::new("point");
                        for t in &toks[1..] {
                            points.require(line, t)?;
                            seen.declare(line, t)?;
                        }
                        opens.push(seen.order);
                    }
                    other => return Err(unknown(line, &toks[0], other, "space")),
                }
            }
            Ok(Document::Space(SpaceDoc {
                name,
                points: points.order,
                opens,
            }))
        }
        other => Err(ParseError::at(
            hline,
            header[0].column,
            format!("unknown document kind `{other}`"),
        )),
    }
}

fn unknown(line: usize, tok: &Token, keyword: &str, kind: &str) -> ParseError {
    ParseError::at(
        line,
        tok.column,
        format!("unknown keyword `{keyword}` in a {kind} document"),
    )
}

struct Lines<'a>(&'a mut String);

impl Lines<'_> {
    fn record<S: AsRef<str>>(&mut self, keyword: &str, args: &[S]) {
        self.0.push_str(keyword);
        for a in args {
            self.0.push(' ');
            self.0.push_str(a.as_ref());
        }
        self.0.push('\n');
    }
}

/// Renders a document in the input format; `parse` reads it back unchanged.
pub fn serialize(doc: &Document) -> String {
    let mut out = String::new();
    let mut w = Lines(&mut out);
    w.record(doc.kind(), &[doc.name()]);
    match doc {
        Document::Poset(d) => {
            for e in &d.elements {
                w.record("element", &[e]);
            }
            for (a, b) in &d.le {
                w.record("le", &[a, b]);
            }
        }
        Document::Relation(d) => {
            for e in &d.x {
                w.record("xelement", &[e]);
            }
            for e in &d.y {
                w.record("yelement", &[e]);
            }
            for (a, b) in &d.pairs {
                w.record("pair", &[a, b]);
            }
        }
        Document::Complex(d) => {
            for f in &d.facets {
                w.record("facet", f);
            }
        }
        Document::Space(d) => {
            for p in &d.points {
                w.record("point", &[p]);
            }
            for o in &d.opens {
                w.record("open", o);
            }
        }
    }
    out
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize(self))
    }
}

impl PosetDoc {
    pub fn to_poset(&self) -> Result<Poset, LoadError> {
        let u = Arc::new(Universe::new(self.elements.iter().cloned())?);
        let pairs = self
            .le
            .iter()
            .map(|(a, b)| Ok((u.lookup(a)?, u.lookup(b)?)))
            .collect::<Result<Vec<_>, ComplexError>>()?;
        Ok(Poset::from_pairs(u, pairs)?)
    }

    /// Canonical form: elements in order, `le` lines for the Hasse diagram.
    pub fn from_poset(name: &str, p: &Poset) -> Self {
        PosetDoc {
            name: name.to_string(),
            elements: p.elements().labels().to_vec(),
            le: p
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| (p.label(a).to_string(), p.label(b).to_string()))
                .collect(),
        }
    }
}

impl RelationDoc {
    pub fn to_relation(&self) -> Result<Relation, LoadError> {
        let x = Arc::new(Universe::new(self.x.iter().cloned())?);
        let y = Arc::new(Universe::new(self.y.iter().cloned())?);
        let pairs: Vec<(&str, &str)> = self
            .pairs
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Ok(Relation::from_labels(x, y, &pairs)?)
    }

    pub fn from_relation(name: &str, r: &Relation) -> Self {
        let (x, y) = (r.x_universe(), r.y_universe());
        RelationDoc {
            name: name.to_string(),
            x: x.labels().to_vec(),
            y: y.labels().to_vec(),
            pairs: r
                .pairs()
                .iter()
                .map(|&(a, b)| (x.label(a).to_string(), y.label(b).to_string()))
                .collect(),
        }
    }
}

impl ComplexDoc {
    /// The universe is the set of labels in order of first appearance.
    pub fn to_complex(&self) -> Result<SimplicialComplex, LoadError> {
        let mut seen = HashSet::new();
        let labels: Vec<&String> = self
            .facets
            .iter()
            .flatten()
            .filter(|l| seen.insert(l.as_str()))
            .collect();
        if labels.is_empty() {
            return Err(ComplexError::EmptyComplex.into());
        }
        let u = Arc::new(Universe::new(labels.into_iter().cloned())?);
        Ok(SimplicialComplex::from_label_facets(u, &self.facets)?)
    }

    /// Canonical form: facets sorted lexicographically by label sequence.
    pub fn from_complex(name: &str, k: &SimplicialComplex) -> Self {
        ComplexDoc {
            name: name.to_string(),
            facets: k.label_facets(),
        }
    }
}

impl SpaceDoc {
    pub fn to_topology(&self) -> Result<FiniteTopology, LoadError> {
        let u = Arc::new(Universe::new(self.points.iter().cloned())?);
        let opens = self
            .opens
            .iter()
            .map(|o| o.iter().map(|l| u.lookup(l)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteTopology::new(u, opens)?)
    }

    /// `x R U` iff `x ∈ U`, over the nonempty listed sets; no topology
    /// axioms are checked, so any cover works. Sets are labelled `{a,b}`.
    pub fn membership_relation(&self) -> Result<Relation, LoadError> {
        let u = Arc::new(Universe::new(self.points.iter().cloned())?);
        let sets: Vec<(String, Vec<String>)> = self
            .opens
            .iter()
            .filter(|o| !o.is_empty())
            .map(|o| (format!("{{{}}}", o.join(",")), o.clone()))
            .collect();
        Ok(Relation::membership(u, &sets)?)
    }

    /// Lists every nonempty open set, smallest first.
    pub fn from_topology(name: &str, t: &FiniteTopology) -> Self {
        let u = t.points();
        SpaceDoc {
            name: name.to_string(),
            points: u.labels().to_vec(),
            opens: t
                .opens()
                .into_iter()
                .filter(|o| !o.is_empty())
                .map(|o| o.iter().map(|&v| u.label(v).to_string()).collect())
                .collect(),
        }
    }
}

macro_rules! loader {
    ($fn_name:ident, $variant:ident, $ty:ty, $convert:ident, $kind:literal) => {
        pub fn $fn_name(text: &str) -> Result<$ty, LoadError> {
            match parse(text)? {
                Document::$variant(d) => d.$convert(),
                other => Err(LoadError::WrongKind {
                    expected: $kind,
                    found: other.kind(),
                }),
            }
        }
    };
}

loader!(load_poset, Poset, Poset, to_poset, "poset");

/// Reads a relation file, or a space file as the membership relation of its
/// nonempty open sets.
pub fn load_relation(text: &str) -> Result<Relation, LoadError> {
    match parse(text)? {
        Document::Relation(d) => d.to_relation(),
        Document::Space(d) => d.membership_relation(),
        other => Err(LoadError::WrongKind {
            expected: "relation",
            found: other.kind(),
        }),
    }
}
loader!(
    load_complex,
    Complex,
    SimplicialComplex,
    to_complex,
    "complex"
);
loader!(load_space, Space, FiniteTopology, to_topology, "space");

/// Canonical JSON: object keys sorted, compact, no trailing newline.
pub fn write_report<T: Serialize + ?Sized>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("reports serialize to JSON");
    serde_json::to_string(&value).expect("JSON values always print")
}

pub fn complex_json(k: &SimplicialComplex) -> Value {
    let mut vertices: Vec<&str> = k
        .vertices()
        .iter()
        .map(|&v| k.universe().label(v))
        .collect();
    vertices.sort_unstable();
    json!({
        "dimension": k.dimension(),
        "face_count": k.face_count(),
        "facets": k.label_facets(),
        "vertices": vertices,
    })
}

pub fn poset_json(p: &Poset) -> Value {
    let pair = |(a, b): (usize, usize)| [p.label(a), p.label(b)];
    json!({
        "covers": p.cover_pairs().into_iter().map(pair).collect::<Vec<_>>(),
        "elements": p.elements().labels(),
        "height": p.height(),
        "maximal": p.maximal_elements().into_iter().map(|v| p.label(v)).collect::<Vec<_>>(),
    })
}

pub fn relation_json(r: &Relation) -> Value {
    let (x, y) = (r.x_universe(), r.y_universe());
    json!({
        "pairs": r.pairs().iter().map(|&(a, b)| [x.label(a), y.label(b)]).collect::<Vec<_>>(),
        "x": x.labels(),
        "y": y.labels(),
    })
}

pub fn topology_json(t: &FiniteTopology) -> Value {
    let u = t.points();
    let opens: Vec<Vec<&str>> = t
        .opens()
        .into_iter()
        .map(|o| o.iter().map(|&v| u.label(v)).collect())
        .collect();
    json!({ "opens": opens, "points": u.labels() })
}

/// `{"steps": [[free_face, coface], ...]}` with faces as label arrays.
pub fn sequence_json(seq: &CollapseSequence) -> Value {
    let steps: Vec<[Vec<String>; 2]> = seq.label_steps().into_iter().map(|(a, b)| [a, b]).collect();
    json!({ "steps": steps })
}

/// Reads the `steps` array of a sequence report against the complex it
/// starts from.
pub fn parse_sequence(
    json_text: &str,
    initial: SimplicialComplex,
) -> Result<CollapseSequence, LoadError> {
    let value: Value = serde_json::from_str(json_text)
        .map_err(|e| ParseError::at(e.line(), e.column(), e.to_string()))?;
    let bad = |message: &str| ParseError::at(0, 0, message);
    let steps = value
        .get("steps")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("expected an object with a `steps` array"))?;
    let u = initial.universe().clone();
    let face = |v: &Value| -> Result<Simplex, LoadError> {
        let labels = v
            .as_array()
            .ok_or_else(|| bad("a face must be a label array"))?;
        let vs = labels
            .iter()
            .map(|l| {
                let l = l.as_str().ok_or_else(|| bad("labels must be strings"))?;
                Ok(u.lookup(l)?)
            })
            .collect::<Result<Vec<_>, LoadError>>()?;
        Ok(Simplex::new(vs)?)
    };
    let steps = steps
        .iter()
        .map(|st| match st.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(CollapseStep::new(face(a)?, face(b)?)),
            _ => Err(bad("a step must be a pair of faces").into()),
        })
        .collect::<Result<Vec<_>, LoadError>>()?;
    Ok(CollapseSequence { initial, steps })
}
