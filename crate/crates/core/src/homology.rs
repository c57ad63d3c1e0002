//! Integer simplicial homology through Smith normal form.
//!
//! Boundary matrices are reduced over the integers so that torsion is
//! visible. Reduction runs on machine integers with overflow checks and
//! restarts on arbitrary-precision integers if any operation overflows.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::complex::{Simplex, SimplicialComplex};

/// A dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![<BigInt as Zero>::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntegerMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flatten().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if Zero::is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !Zero::is_zero(b) {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Boundary maps `∂_1, ..., ∂_d`; entry `n-1` maps `n`-faces to `(n-1)`-faces,
/// both in canonical face order.
pub fn boundary_matrices(k: &SimplicialComplex) -> Vec<IntegerMatrix> {
    let dim = match k.dimension() {
        Some(d) => d,
        None => return Vec::new(),
    };
    let by_dim: Vec<Vec<&Simplex>> = (0..=dim).map(|n| k.faces_of_dim(n).collect()).collect();
    (1..=dim)
        .map(|n| {
            let index: HashMap<&Simplex, usize> = by_dim[n - 1]
                .iter()
                .enumerate()
                .map(|(i, &s)| (s, i))
                .collect();
            let mut m = IntegerMatrix::zeros(by_dim[n - 1].len(), by_dim[n].len());
            for (c, s) in by_dim[n].iter().enumerate() {
                for (i, &v) in s.vertices().iter().enumerate() {
                    let face = s.without_vertex(v).expect("n ≥ 1");
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(index[&face], c, BigInt::from(sign));
                }
            }
            m
        })
        .collect()
}

/// Entry type for the reduction: every operation may refuse on overflow.
trait Entry: Clone + PartialEq + fmt::Debug {
    fn is_zero(&self) -> bool;
    fn abs_lt(&self, other: &Self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Option<Self>;
    /// Quotient rounded toward zero.
    fn quotient(&self, b: &Self) -> Self;
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add(&self, b: &Self) -> Option<Self>;
    fn divides(&self, b: &Self) -> bool;
}

impl Entry for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn quotient(&self, b: &Self) -> Self {
        // callers never divide i64::MIN, which `sub_mul`/`add` refuse to produce
        self / b
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
            .filter(|&v| v != i64::MIN)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b).filter(|&v| v != i64::MIN)
    }
    fn divides(&self, b: &Self) -> bool {
        b % self == 0
    }
}

impl Entry for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs_lt(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn quotient(&self, b: &Self) -> Self {
        self / b
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn divides(&self, b: &Self) -> bool {
        Zero::is_zero(&(b % self))
    }
}

struct Work<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

impl<T: Entry> Work<T> {
    fn at(&self, r: usize, c: usize) -> &T {
        &self.a[r * self.cols + c]
    }

    fn swap_rows(&mut self, r1: usize, r2: usize) {
        if r1 != r2 {
            for c in 0..self.cols {
                self.a.swap(r1 * self.cols + c, r2 * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, c1: usize, c2: usize) {
        if c1 != c2 {
            for r in 0..self.rows {
                self.a.swap(r * self.cols + c1, r * self.cols + c2);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn row_sub(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        for c in from..self.cols {
            let v = self.at(target, c).sub_mul(q, self.at(source, c))?;
            self.a[target * self.cols + c] = v;
        }
        Some(())
    }

    fn col_sub(&mut self, target: usize, source: usize, q: &T, from: usize) -> Option<()> {
        for r in from..self.rows {
            let v = self.at(r, target).sub_mul(q, self.at(r, source))?;
            self.a[r * self.cols + target] = v;
        }
        Some(())
    }

    fn row_add(&mut self, target: usize, source: usize, from: usize) -> Option<()> {
        for c in from..self.cols {
            let v = self.at(target, c).add(self.at(source, c))?;
            self.a[target * self.cols + c] = v;
        }
        Some(())
    }

    /// Position of the smallest nonzero entry (by absolute value) in the
    /// lower-right block starting at `t`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.rows {
            for c in t..self.cols {
                let v = self.at(r, c);
                if !v.is_zero() && best.is_none_or(|(br, bc)| v.abs_lt(self.at(br, bc))) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    /// Invariant factors, or `None` if an operation overflowed.
    fn reduce(mut self) -> Option<Vec<T>> {
        let mut diagonal = Vec::new();
        let mut t = 0;
        while t < self.rows.min(self.cols) {
            let Some((pr, pc)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                let pivot = self.at(t, t).clone();
                let mut dirty = false;
                for r in t + 1..self.rows {
                    if !self.at(r, t).is_zero() {
                        let q = self.at(r, t).quotient(&pivot);
                        self.row_sub(r, t, &q, t)?;
                        dirty |= !self.at(r, t).is_zero();
                    }
                }
                for c in t + 1..self.cols {
                    if !self.at(t, c).is_zero() {
                        let q = self.at(t, c).quotient(&pivot);
                        self.col_sub(c, t, &q, t)?;
                        dirty |= !self.at(t, c).is_zero();
                    }
                }
                if dirty {
                    // a remainder is smaller than the pivot: move it into place
                    let (pr, pc) = self.min_pivot_in_cross(t);
                    self.swap_rows(t, pr);
                    self.swap_cols(t, pc);
                    continue;
                }
                // row and column cleared; enforce divisibility on the rest
                let bad = (t + 1..self.rows)
                    .find(|&r| (t + 1..self.cols).any(|c| !pivot.divides(self.at(r, c))));
                match bad {
                    Some(r) => self.row_add(t, r, t)?,
                    None => break,
                }
            }
            let mut d = self.at(t, t).clone();
            if d.is_negative() {
                d = d.neg()?;
            }
            diagonal.push(d);
            t += 1;
        }
        Some(diagonal)
    }

    /// Smallest nonzero entry in row `t` or column `t`.
    fn min_pivot_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let cells = (t..self.rows)
            .map(|r| (r, t))
            .chain((t + 1..self.cols).map(|c| (t, c)));
        for (r, c) in cells {
            let v = self.at(r, c);
            let b = self.at(best.0, best.1);
            if !v.is_zero() && (b.is_zero() || v.abs_lt(b)) {
                best = (r, c);
            }
        }
        best
    }
}

/// Invariant factors `d_1 | d_2 | ... | d_r`, all positive, `r` the rank.
pub fn smith_normal_form(m: &IntegerMatrix) -> Vec<BigInt> {
    let small: Option<Vec<i64>> = m
        .entries
        .iter()
        .map(|v| v.to_i64().filter(|&x| x != i64::MIN))
        .collect();
    if let Some(a) = small {
        let work = Work {
            rows: m.rows,
            cols: m.cols,
            a,
        };
        if let Some(d) = work.reduce() {
            return d.into_iter().map(BigInt::from).collect();
        }
    }
    Work {
        rows: m.rows,
        cols: m.cols,
        a: m.entries.clone(),
    }
    .reduce()
    .expect("arbitrary precision arithmetic does not overflow")
}

/// Betti numbers and torsion coefficients per dimension.
#[derive(Clone, Debug, Default)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn betti(&self, n: usize) -> usize {
        self.betti.get(n).copied().unwrap_or(0)
    }

    pub fn torsion(&self, n: usize) -> &[BigInt] {
        self.torsion.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn has_torsion(&self) -> bool {
        self.torsion.iter().any(|t| !t.is_empty())
    }

    /// Homology of a point.
    pub fn is_acyclic(&self) -> bool {
        self.betti(0) == 1 && self.betti.iter().skip(1).all(|&b| b == 0) && !self.has_torsion()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(n, &b)| if n % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    fn len(&self) -> usize {
        self.betti.len().max(self.torsion.len())
    }
}

/// Equal in every dimension, treating missing trailing dimensions as zero.
impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let n = self.len().max(other.len());
        (0..n).all(|i| self.betti(i) == other.betti(i) && self.torsion(i) == other.torsion(i))
    }
}

impl Eq for HomologyProfile {}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.len())
            .map(|n| {
                let mut s = self.betti(n).to_string();
                for t in self.torsion(n) {
                    s.push_str(&format!("+Z/{t}"));
                }
                s
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn torsion_json(t: &BigInt) -> serde_json::Value {
    match t.to_u64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(t.to_string()),
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<Vec<serde_json::Value>> = (0..self.betti.len())
            .map(|n| self.torsion(n).iter().map(torsion_json).collect())
            .collect();
        let mut st = serializer.serialize_struct("HomologyProfile", 2)?;
        st.serialize_field("betti", &self.betti)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

/// Integral homology of `k`; all-zero for the empty complex.
pub fn homology(k: &SimplicialComplex) -> HomologyProfile {
    let Some(dim) = k.dimension() else {
        return HomologyProfile::default();
    };
    let counts: Vec<usize> = (0..=dim).map(|n| k.faces_of_dim(n).count()).collect();
    // snf[n] belongs to ∂_{n+1}
    let snf: Vec<Vec<BigInt>> = boundary_matrices(k).iter().map(smith_normal_form).collect();
    let rank = |n: usize| -> usize {
        // rank of ∂_n; ∂_0 and ∂_{dim+1} vanish
        if n == 0 || n > dim {
            0
        } else {
            snf[n - 1].len()
        }
    };
    let betti = (0..=dim)
        .map(|n| counts[n] - rank(n) - rank(n + 1))
        .collect();
    let torsion = (0..=dim)
        .map(|n| {
            if n < dim {
                snf[n].iter().filter(|d| !d.is_one()).cloned().collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    HomologyProfile { betti, torsion }
}

pub fn same_homology(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    homology(a) == homology(b)
}
