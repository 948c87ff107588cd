//! Coxeter matrices, node subsets and the derived graphs used by the
//! classifier: connected components, the odd graph and even closures.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported rank. Node sets are bit masks.
pub const MAX_RANK: usize = 64;

/// An entry `m_ab` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn is_infinite(self) -> bool {
        matches!(self, Label::Infinite)
    }

    /// `m >= 3` or `m = inf`, i.e. an edge of the Coxeter graph.
    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m >= 3,
            Label::Infinite => true,
        }
    }

    /// Odd finite label `>= 3`: an edge of the odd graph.
    pub fn is_odd_edge(self) -> bool {
        matches!(self, Label::Finite(m) if m >= 3 && m % 2 == 1)
    }

    /// Even finite label. Note that `2` counts.
    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(m) if m % 2 == 0)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

/// A subset of the nodes of a Coxeter matrix, stored as a bit mask over
/// node indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All nodes `0..rank`.
    pub fn full(rank: usize) -> Self {
        if rank >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        NodeSet(1 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    pub fn with(self, i: usize) -> Self {
        NodeSet(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        NodeSet(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = NodeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Checks the Coxeter matrix invariants on raw data.
///
/// Reports the first violation in row-major order.
pub fn validate(nodes: &[String], entries: &[Vec<Label>]) -> Result<()> {
    let n = nodes.len();
    if n == 0 {
        return Err(Error::Input("rank must be at least 1".into()));
    }
    if n > MAX_RANK {
        return Err(Error::Input(format!("rank {n} exceeds the maximum of {MAX_RANK}")));
    }
    for (i, name) in nodes.iter().enumerate() {
        if nodes[..i].contains(name) {
            return Err(Error::Input(format!("duplicate node name `{name}`")));
        }
    }
    if entries.len() != n || entries.iter().any(|row| row.len() != n) {
        return Err(Error::Input(format!("entry table must be {n}x{n}")));
    }
    for i in 0..n {
        for j in 0..n {
            let m = entries[i][j];
            if i == j {
                if m != Label::Finite(1) {
                    return Err(Error::Input(format!(
                        "m({0},{0}) = {m}, expected 1",
                        nodes[i]
                    )));
                }
                continue;
            }
            if let Label::Finite(v) = m {
                if v < 2 {
                    return Err(Error::Input(format!(
                        "m({},{}) = {v}, off-diagonal labels must be at least 2",
                        nodes[i], nodes[j]
                    )));
                }
            }
            if entries[j][i] != m {
                return Err(Error::Input(format!(
                    "m({a},{b}) = {m} but m({b},{a}) = {}",
                    entries[j][i],
                    a = nodes[i],
                    b = nodes[j]
                )));
            }
        }
    }
    Ok(())
}

/// A validated Coxeter matrix over an ordered list of named nodes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    nodes: Vec<String>,
    labels: Vec<Label>,
}

impl CoxeterMatrix {
    pub fn new(nodes: Vec<String>, entries: Vec<Vec<Label>>) -> Result<Self> {
        validate(&nodes, &entries)?;
        let labels = entries.into_iter().flatten().collect();
        Ok(CoxeterMatrix { nodes, labels })
    }

    /// Builds a matrix from the listed edges; unlisted pairs get `m = 2`.
    pub fn from_edges<S: AsRef<str>>(nodes: &[S], edges: &[(S, S, Label)]) -> Result<Self> {
        let names: Vec<String> = nodes.iter().map(|s| s.as_ref().to_string()).collect();
        let n = names.len();
        let index = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UnknownNode(s.to_string()))
        };
        let mut entries = vec![vec![Label::Finite(2); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for (u, v, m) in edges {
            let (i, j) = (index(u.as_ref())?, index(v.as_ref())?);
            if i == j {
                return Err(Error::Input(format!("self-loop on `{}`", u.as_ref())));
            }
            entries[i][j] = *m;
            entries[j][i] = *m;
        }
        CoxeterMatrix::new(names, entries)
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn name(&self, i: usize) -> &str {
        &self.nodes[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|x| x == name)
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    pub fn subset<S: AsRef<str>>(&self, names: &[S]) -> Result<NodeSet> {
        names.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    pub fn all(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    pub fn label(&self, i: usize, j: usize) -> Label {
        self.labels[i * self.rank() + j]
    }

    /// Coxeter-graph adjacency (`m >= 3`, including `inf`).
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.label(i, j).is_edge()
    }

    pub fn names_of(&self, set: NodeSet) -> Vec<String> {
        set.iter().map(|i| self.nodes[i].clone()).collect()
    }

    pub fn format_set(&self, set: NodeSet) -> String {
        format!("{{{}}}", self.names_of(set).join(","))
    }

    /// Same matrix with nodes reordered: node `k` of the result is node
    /// `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.rank();
        let nodes = perm.iter().map(|&p| self.nodes[p].clone()).collect();
        let mut labels = Vec::with_capacity(n * n);
        for &p in perm {
            for &q in perm {
                labels.push(self.label(p, q));
            }
        }
        CoxeterMatrix { nodes, labels }
    }

    /// Full submatrix on `set`, with nodes in index order.
    pub fn restrict(&self, set: NodeSet) -> Self {
        let idx: Vec<usize> = set.iter().collect();
        self.permuted(&idx)
    }

    fn components_by(&self, subset: NodeSet, edge: impl Fn(Label) -> bool) -> Vec<NodeSet> {
        let mut remaining = subset;
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = NodeSet::singleton(start);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for v in remaining.iter() {
                    if !comp.contains(v) && u != v && edge(self.label(u, v)) {
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            remaining = remaining.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Connected components of the full Coxeter subgraph on `subset`,
    /// ordered by smallest member.
    pub fn coxeter_components(&self, subset: NodeSet) -> Vec<NodeSet> {
        self.components_by(subset, Label::is_edge)
    }

    pub fn is_connected(&self, subset: NodeSet) -> bool {
        self.coxeter_components(subset).len() == 1
    }

    /// Components of the odd graph (edges with odd finite labels only).
    pub fn odd_components(&self) -> Vec<NodeSet> {
        self.components_by(self.all(), Label::is_odd_edge)
    }

    /// `Odd(a)`: the odd-graph component containing `a`.
    pub fn odd_component(&self, a: usize) -> NodeSet {
        self.odd_components()
            .into_iter()
            .find(|c| c.contains(a))
            .expect("every node lies in some component")
    }

    pub fn is_odd_component(&self, set: NodeSet) -> bool {
        self.odd_components().contains(&set)
    }

    /// `Even(M)`: `M` together with every node joined to `M` by an even
    /// label. Label 2 counts as even, so this is usually most of the graph.
    pub fn even_closure(&self, m: NodeSet) -> Result<NodeSet> {
        if !self.is_odd_component(m) {
            return Err(Error::NotAnOddComponent);
        }
        let mut out = m;
        for b in self.all().difference(m).iter() {
            if m.iter().any(|c| self.label(c, b).is_even()) {
                out.insert(b);
            }
        }
        Ok(out)
    }

    pub fn is_irreducible(&self) -> bool {
        self.is_connected(self.all())
    }

    /// No label equals `inf`.
    pub fn is_two_spherical(&self) -> bool {
        self.labels.iter().all(|m| !m.is_infinite())
    }

    /// Odd-graph edges inside `set`.
    pub fn odd_edges(&self, set: NodeSet) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in set.iter() {
            for j in set.iter().filter(|&j| j > i) {
                if self.label(i, j).is_odd_edge() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{:>3}", self.label(i, j).to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(m: &CoxeterMatrix, names: &[&str]) -> NodeSet {
        m.subset(names).unwrap()
    }

    #[test]
    fn validate_accepts_dihedral() {
        let e = vec![
            vec![Label::Finite(1), Label::Finite(6)],
            vec![Label::Finite(6), Label::Finite(1)],
        ];
        validate(&["a".into(), "b".into()], &e).unwrap();
    }

    #[test]
    fn validate_rejects_off_diagonal_one() {
        let e = vec![
            vec![Label::Finite(1), Label::Finite(1)],
            vec![Label::Finite(1), Label::Finite(1)],
        ];
        let err = validate(&["a".into(), "b".into()], &e).unwrap_err();
        assert!(matches!(err, Error::Input(ref s) if s.contains("m(a,b)")), "{err}");
    }

    #[test]
    fn validate_rejects_asymmetry() {
        let e = vec![
            vec![Label::Finite(1), Label::Finite(3)],
            vec![Label::Finite(4), Label::Finite(1)],
        ];
        let err = validate(&["a".into(), "b".into()], &e).unwrap_err();
        assert!(matches!(err, Error::Input(ref s) if s.contains("m(b,a) = 4")), "{err}");
    }

    #[test]
    fn validate_rejects_empty_and_bad_diagonal() {
        assert!(validate(&[], &[]).is_err());
        let e = vec![vec![Label::Finite(2)]];
        assert!(validate(&["a".into()], &e).is_err());
    }

    #[test]
    fn components() {
        let m = fixtures::a1_x_a2();
        assert_eq!(
            m.coxeter_components(m.all()),
            vec![set(&m, &["a"]), set(&m, &["b", "c"])]
        );
        assert_eq!(m.coxeter_components(set(&m, &["c"])), vec![set(&m, &["c"])]);
        let t = fixtures::affine_a2();
        assert_eq!(t.coxeter_components(t.all()), vec![t.all()]);
        assert!(m.coxeter_components(NodeSet::EMPTY).is_empty());
    }

    #[test]
    fn odd_components() {
        let m = fixtures::i2(6);
        assert_eq!(m.odd_component(0), NodeSet::singleton(0));
        let a3 = fixtures::a(3);
        assert_eq!(a3.odd_component(1), a3.all());
        let g7 = fixtures::g7();
        let a = g7.index_of("a").unwrap();
        assert_eq!(g7.odd_component(a), set(&g7, &["a2", "a", "c"]));
    }

    #[test]
    fn even_closures() {
        let c2 = fixtures::affine_c2();
        assert_eq!(c2.even_closure(set(&c2, &["a"])).unwrap(), c2.all());
        let t = fixtures::affine_a2();
        assert_eq!(t.even_closure(t.all()).unwrap(), t.all());
        let i7 = fixtures::i2(7);
        assert_eq!(i7.even_closure(i7.all()).unwrap(), i7.all());
        assert_eq!(
            c2.even_closure(set(&c2, &["a", "b"])),
            Err(Error::NotAnOddComponent)
        );
    }

    #[test]
    fn rank_one_is_legal() {
        let m = CoxeterMatrix::from_edges::<&str>(&["x"], &[]).unwrap();
        assert_eq!(m.odd_component(0), m.all());
        assert_eq!(m.even_closure(m.all()).unwrap(), m.all());
        assert!(m.is_irreducible());
    }

    #[test]
    fn irreducible_and_two_spherical() {
        let t = fixtures::affine_a2();
        assert_eq!((t.is_irreducible(), t.is_two_spherical()), (true, true));
        let g7 = fixtures::g7();
        assert_eq!((g7.is_irreducible(), g7.is_two_spherical()), (true, false));
        let m = fixtures::a1_x_a2();
        assert_eq!((m.is_irreducible(), m.is_two_spherical()), (false, true));
    }

    #[test]
    fn node_set_iteration() {
        let s: NodeSet = [5, 1, 3].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(NodeSet::singleton(3).is_subset(s));
        assert_eq!(NodeSet::full(64).len(), 64);
    }
}
