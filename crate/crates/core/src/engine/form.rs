//! The bilinear form, roots, and group elements as matrices on
//! simple-root coordinates.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::graph::{CoxeterMatrix, Label, NodeSet};

/// `-cos(π/m)` for the labels the engine supports.
pub fn form_entry(m: Label) -> Result<FieldElement> {
    let half = FieldElement::ratio(1, 2);
    Ok(match m {
        Label::Finite(1) => FieldElement::ONE,
        Label::Finite(2) => FieldElement::ZERO,
        Label::Finite(3) => -half,
        Label::Finite(4) => -(FieldElement::sqrt2() * half),
        Label::Finite(5) => -((FieldElement::ONE + FieldElement::sqrt5()) * FieldElement::ratio(1, 4)),
        Label::Finite(6) => -(FieldElement::sqrt3() * half),
        Label::Infinite => -FieldElement::ONE,
        Label::Finite(m) => return Err(Error::UnsupportedLabel(m.to_string())),
    })
}

/// Gram matrix of `B(a, b) = -cos(π/m_ab)` on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    rank: usize,
    gram: Vec<FieldElement>,
    /// `2·B(a, b)`, the coefficients used by the simple reflections.
    twice: Vec<FieldElement>,
    /// Nodes `b != a` with `B(a, b) != 0`.
    neighbours: Vec<Vec<usize>>,
}

impl BilinearForm {
    pub fn new(matrix: &CoxeterMatrix) -> Result<Self> {
        let n = matrix.rank();
        let mut gram = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                gram.push(form_entry(matrix.label(i, j))?);
            }
        }
        let twice = gram.iter().map(|x| x.scale(2)).collect();
        let neighbours = (0..n)
            .map(|i| (0..n).filter(|&j| j != i && !gram[i * n + j].is_zero()).collect())
            .collect();
        Ok(BilinearForm {
            rank: n,
            gram,
            twice,
            neighbours,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.gram[i * self.rank + j]
    }

    pub fn dot(&self, u: &Root, v: &Root) -> FieldElement {
        let n = self.rank;
        let mut acc = FieldElement::ZERO;
        for i in 0..n {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !v.0[j].is_zero() {
                    acc += u.0[i] * self.gram[i * n + j] * v.0[j];
                }
            }
        }
        acc
    }

    /// Leading principal minors `det G[0..k, 0..k]` for `k = 1..=rank`.
    pub fn leading_minors(&self) -> Vec<FieldElement> {
        (1..=self.rank)
            .map(|k| {
                let rows: Vec<usize> = (0..k).collect();
                determinant(&|i, j| self.entry(i, j), &rows, &rows)
            })
            .collect()
    }
}

/// Laplace expansion along the first row. Only used for small ranks.
fn determinant(
    entry: &dyn Fn(usize, usize) -> FieldElement,
    rows: &[usize],
    cols: &[usize],
) -> FieldElement {
    match rows.len() {
        0 => FieldElement::ONE,
        1 => entry(rows[0], cols[0]),
        _ => {
            let mut acc = FieldElement::ZERO;
            for (k, &c) in cols.iter().enumerate() {
                let x = entry(rows[0], c);
                if x.is_zero() {
                    continue;
                }
                let minor_cols: Vec<usize> = cols.iter().copied().filter(|&d| d != c).collect();
                let term = x * determinant(entry, &rows[1..], &minor_cols);
                if k % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// A vector in `V` written in simple-root coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub Vec<FieldElement>);

impl Root {
    pub fn simple(rank: usize, a: usize) -> Self {
        let mut v = vec![FieldElement::ZERO; rank];
        v[a] = FieldElement::ONE;
        Root(v)
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElement::is_zero)
    }

    /// Nonzero with every coordinate `>= 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|x| !x.is_negative())
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|x| !x.is_positive())
    }

    /// Nodes with a nonzero coordinate.
    pub fn support(&self) -> NodeSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// `Some(a)` if this is the simple root `a`.
    pub fn as_simple(&self) -> Option<usize> {
        let s = self.support();
        match s.first() {
            Some(a) if s.len() == 1 && self.0[a] == FieldElement::ONE => Some(a),
            _ => None,
        }
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&x| -x).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(&x, &y)| x + y).collect())
    }

    pub fn scale(&self, k: FieldElement) -> Root {
        Root(self.0.iter().map(|&x| x * k).collect())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.0).finish()
    }
}

/// A linear map of `V`, stored row-major. Column `j` is the image of the
/// simple root `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rank: usize,
    entries: Vec<FieldElement>,
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![FieldElement::ZERO; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = FieldElement::ONE;
        }
        GroupElement { rank, entries }
    }

    pub fn simple_reflection(form: &BilinearForm, a: usize) -> Self {
        GroupElement::identity(form.rank()).right_mul_simple(form, a)
    }

    /// `v ↦ v - 2 B(root, v) root`, defined for `B(root, root) = 1`.
    pub fn reflection_along(form: &BilinearForm, root: &Root) -> Result<Self> {
        if form.dot(root, root) != FieldElement::ONE {
            return Err(Error::NotUnitRoot);
        }
        let n = form.rank();
        let mut entries = vec![FieldElement::ZERO; n * n];
        for j in 0..n {
            let e = Root::simple(n, j);
            let c = form.dot(root, &e).scale(2);
            for i in 0..n {
                let id = if i == j { FieldElement::ONE } else { FieldElement::ZERO };
                entries[i * n + j] = id - c * root.0[i];
            }
        }
        Ok(GroupElement { rank: n, entries })
    }

    /// Square matrix from its rows.
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        let rank = rows.len();
        assert!(rows.iter().all(|r| r.len() == rank), "matrix must be square");
        GroupElement {
            rank,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.rank + j]
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity(self.rank)
    }

    /// Image of the simple root `j`.
    pub fn column(&self, j: usize) -> Root {
        Root((0..self.rank).map(|i| self.entry(i, j)).collect())
    }

    pub fn apply(&self, v: &Root) -> Root {
        let n = self.rank;
        Root(
            (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&j| !v.0[j].is_zero())
                        .map(|j| self.entries[i * n + j] * v.0[j])
                        .sum()
                })
                .collect(),
        )
    }

    /// `w(a) ∈ Φ⁺`, i.e. `ℓ(w r_a) = ℓ(w) + 1`.
    pub fn sends_simple_positive(&self, a: usize) -> bool {
        let n = self.rank;
        (0..n)
            .map(|i| self.entries[i * n + a])
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_positive())
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        let n = self.rank;
        let mut entries = vec![FieldElement::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.entries[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = other.entries[k * n + j];
                    if !y.is_zero() {
                        entries[i * n + j] += x * y;
                    }
                }
            }
        }
        GroupElement { rank: n, entries }
    }

    /// `self · r_a`: column `b` becomes `col_b - 2B(a,b)·col_a`.
    pub fn right_mul_simple(&self, form: &BilinearForm, a: usize) -> GroupElement {
        let n = self.rank;
        let mut out = self.clone();
        for &b in &form.neighbours[a] {
            let c = form.twice[a * n + b];
            for i in 0..n {
                let x = self.entries[i * n + a];
                if !x.is_zero() {
                    out.entries[i * n + b] -= c * x;
                }
            }
        }
        for i in 0..n {
            out.entries[i * n + a] = -self.entries[i * n + a];
        }
        out
    }

    /// `r_a · self`: row `a` becomes `-row_a - Σ_{b≠a} 2B(a,b)·row_b`.
    pub fn left_mul_simple(&self, form: &BilinearForm, a: usize) -> GroupElement {
        let n = self.rank;
        let mut out = self.clone();
        for j in 0..n {
            let mut acc = -self.entries[a * n + j];
            for &b in &form.neighbours[a] {
                let y = self.entries[b * n + j];
                if !y.is_zero() {
                    acc -= form.twice[a * n + b] * y;
                }
            }
            out.entries[a * n + j] = acc;
        }
        out
    }

    /// Product `r_{word[0]} r_{word[1]} ...`.
    pub fn from_word(form: &BilinearForm, word: &[usize]) -> GroupElement {
        word.iter()
            .fold(GroupElement::identity(form.rank()), |w, &s| w.right_mul_simple(form, s))
    }

    /// `B(wu, wv) = B(u, v)` for all pairs of simple roots.
    pub fn preserves_form(&self, form: &BilinearForm) -> bool {
        let n = self.rank;
        let cols: Vec<Root> = (0..n).map(|j| self.column(j)).collect();
        (0..n).all(|i| (i..n).all(|j| form.dot(&cols[i], &cols[j]) == form.entry(i, j)))
    }

    /// Acts as `-1` on the span of `set`.
    pub fn negates(&self, set: NodeSet) -> bool {
        set.iter()
            .all(|a| self.column(a) == Root::simple(self.rank, a).neg())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<FieldElement>> = (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j)).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}
