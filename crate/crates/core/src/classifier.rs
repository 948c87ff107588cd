//! Finite continuation of each simple reflection, read off the Coxeter
//! graph.
//!
//! For a node `a` with odd component `M = Odd(a)` exactly one of four
//! situations applies:
//!
//! * **A**: the component of `Even(M)` containing `M` is spherical. Then
//!   `FC(r_a) = W_J` with `J` the union of the spherical components of
//!   `Even(M)`.
//! * **C**: `M` has a focus `(f, b)`. Only `f` gets a visible answer, namely
//!   `{f, b}` plus the spherical components of `Even(M)`.
//! * **D**: `M` has a half-focus `{f, g}`. Both get `{f, g}` plus the
//!   spherical components; every other node of `M` is not visible.
//! * **B**: none of the above. With `J'` the spherical components together
//!   with the `C_3`-neighbours of `M`, nodes not adjacent to any `C_3`-
//!   neighbour get `J' ∪ {a}` and the rest are not visible.
//!
//! The definitions of focus and half-focus are checked clause by clause;
//! [`focus_diagnostics`] and [`half_focus_diagnostics`] report the first
//! failing clause for each candidate.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finite_type::{classify_connected, is_spherical, spherical_part, FiniteType};
use crate::graph::{CoxeterMatrix, Label, NodeSet};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    /// `(a, b)` with `a ∈ M`, `b ∉ M`.
    Focus(usize, usize),
    /// Unordered pair inside `M`, smaller index first.
    HalfFocus(usize, usize),
    C3Neighbours(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Visibility {
    /// `FC(r_a) = W_J`.
    Visible(NodeSet),
    NotVisible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FcResult {
    pub node: usize,
    pub odd_component: NodeSet,
    pub even_closure: NodeSet,
    pub visibility: Visibility,
    pub case: Case,
    pub witness: Witness,
}

impl FcResult {
    pub fn visible_set(&self) -> Option<NodeSet> {
        match self.visibility {
            Visibility::Visible(j) => Some(j),
            Visibility::NotVisible => None,
        }
    }

    /// `FC(r_a) = ⟨r_a⟩`.
    pub fn is_trivial(&self) -> bool {
        self.visible_set() == Some(NodeSet::singleton(self.node))
    }
}

/// The clause of a definition that a candidate fails, numbered as in the
/// definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FailedClause {
    pub clause: u8,
    pub detail: String,
}

impl fmt::Display for FailedClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.clause, self.detail)
    }
}

/// `Ok(())` when every clause holds.
pub type ClauseCheck = std::result::Result<(), FailedClause>;

fn fail(clause: u8, detail: impl Into<String>) -> ClauseCheck {
    Err(FailedClause {
        clause,
        detail: detail.into(),
    })
}

fn require_odd_component(matrix: &CoxeterMatrix, m: NodeSet) -> Result<()> {
    if matrix.is_odd_component(m) {
        Ok(())
    } else {
        Err(Error::NotAnOddComponent)
    }
}

/// `set` is a tree in the odd graph whose edges all carry label 3.
fn is_three_tree(matrix: &CoxeterMatrix, set: NodeSet) -> std::result::Result<(), String> {
    let edges = matrix.odd_edges(set);
    if let Some(&(i, j)) = edges.iter().find(|&&(i, j)| matrix.label(i, j) != Label::Finite(3)) {
        return Err(format!(
            "edge {}-{} has label {}",
            matrix.name(i),
            matrix.name(j),
            matrix.label(i, j)
        ));
    }
    if set.is_empty() || edges.len() + 1 != set.len() || !odd_connected(matrix, set) {
        return Err(format!("{} is not a tree", matrix.format_set(set)));
    }
    Ok(())
}

fn odd_connected(matrix: &CoxeterMatrix, set: NodeSet) -> bool {
    odd_path(matrix, set, set.first().unwrap_or(0), None).is_some_and(|reach| reach == set)
}

/// Nodes of `set` reachable from `from` along odd edges; with `to`, the
/// path from `from` to `to` instead.
fn odd_path(matrix: &CoxeterMatrix, set: NodeSet, from: usize, to: Option<usize>) -> Option<NodeSet> {
    if !set.contains(from) {
        return None;
    }
    let n = matrix.rank();
    let mut prev = vec![usize::MAX; n];
    let mut seen = NodeSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for v in set.iter() {
            if !seen.contains(v) && matrix.label(u, v).is_odd_edge() {
                seen.insert(v);
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    let Some(to) = to else {
        return Some(seen);
    };
    if !seen.contains(to) {
        return None;
    }
    let mut path = NodeSet::singleton(to);
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.insert(cur);
    }
    Some(path)
}

fn tree_path(matrix: &CoxeterMatrix, tree: NodeSet, from: usize, to: usize) -> Result<NodeSet> {
    if is_three_tree_shape(matrix, tree).is_err() {
        return Err(Error::NotATree);
    }
    odd_path(matrix, tree, from, Some(to))
        .ok_or_else(|| Error::NoPath(matrix.name(from).into(), matrix.name(to).into()))
}

fn is_three_tree_shape(matrix: &CoxeterMatrix, set: NodeSet) -> std::result::Result<(), ()> {
    let edges = matrix.odd_edges(set).len();
    if !set.is_empty() && edges + 1 == set.len() && odd_connected(matrix, set) {
        Ok(())
    } else {
        Err(())
    }
}

/// `C[b..c]`: `b` together with the path from `a` to `c` in the tree `M`.
pub fn c_chain(matrix: &CoxeterMatrix, m: NodeSet, a: usize, b: usize, c: usize) -> Result<NodeSet> {
    require_odd_component(matrix, m)?;
    Ok(tree_path(matrix, m, a, c)?.with(b))
}

/// `D[a,b..c]`: `b` together with the path from `a` to `c` in the tree
/// `M ∖ {b}`.
pub fn d_chain(matrix: &CoxeterMatrix, m: NodeSet, a: usize, b: usize, c: usize) -> Result<NodeSet> {
    require_odd_component(matrix, m)?;
    Ok(tree_path(matrix, m.without(b), a, c)?.with(b))
}

fn is_type_c(matrix: &CoxeterMatrix, set: NodeSet) -> bool {
    classify_connected(matrix, set).is_ok_and(|t| t == FiniteType::B(set.len()))
}

fn is_type_d(matrix: &CoxeterMatrix, set: NodeSet) -> bool {
    let want = match set.len() {
        3 => FiniteType::A(3),
        k => FiniteType::D(k),
    };
    classify_connected(matrix, set).is_ok_and(|t| t == want)
}

fn is_spherical_component_of_even(matrix: &CoxeterMatrix, m: NodeSet, set: NodeSet) -> Result<bool> {
    let even = matrix.even_closure(m)?;
    Ok(matrix.coxeter_components(even).contains(&set) && is_spherical(matrix, set))
}

/// `C_3`-neighbours of the odd component `M`, in node order.
///
/// `b ∉ M` qualifies when its labels to `Even(M) ∖ {b}` lie in `{2, 4}` with
/// at least one 4, and each `c` with `m_bc = 4` has a partner `a ∈ M` with
/// `m_ba = 2`, `m_ca = 3`, `m_cd = inf` for the rest of `M`, and, for every
/// `e` outside `M ∪ {b}`, either `m_ce = inf` or `m_ae = m_ce = m_be = 2`.
pub fn c3_neighbours(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Vec<usize>> {
    let even = matrix.even_closure(m)?;
    let all = matrix.all();
    let two = Label::Finite(2);
    let four = Label::Finite(4);
    let out = all
        .difference(m)
        .iter()
        .filter(|&b| {
            let e_m = even.without(b);
            if !e_m.iter().all(|c| matches!(matrix.label(b, c), Label::Finite(2 | 4))) {
                return false;
            }
            let heavy: Vec<usize> = e_m.iter().filter(|&c| matrix.label(b, c) == four).collect();
            !heavy.is_empty()
                && heavy.iter().all(|&c| {
                    m.iter().any(|a| {
                        matrix.label(b, a) == two
                            && matrix.label(c, a) == Label::Finite(3)
                            && m.without(a)
                                .without(c)
                                .iter()
                                .all(|d| matrix.label(c, d).is_infinite())
                            && all.difference(m.with(b)).iter().all(|e| {
                                matrix.label(c, e).is_infinite()
                                    || (matrix.label(a, e) == two
                                        && matrix.label(c, e) == two
                                        && matrix.label(b, e) == two)
                            })
                    })
                })
        })
        .collect();
    Ok(out)
}

/// Checks whether `(a, b)` is a focus of `M`, reporting the first failed
/// clause.
pub fn check_focus(
    matrix: &CoxeterMatrix,
    m: NodeSet,
    a: usize,
    b: usize,
) -> Result<ClauseCheck> {
    require_odd_component(matrix, m)?;
    if !m.contains(a) || m.contains(b) {
        return Err(Error::BadArguments("a focus needs a ∈ M and b ∉ M".into()));
    }
    let name = |i: usize| matrix.name(i);
    if let Err(detail) = is_three_tree(matrix, m) {
        return Ok(fail(1, detail));
    }
    let chains: Vec<(usize, NodeSet)> = m
        .iter()
        .map(|c| Ok((c, c_chain(matrix, m, a, b, c)?)))
        .collect::<Result<_>>()?;
    let chain = |c: usize| {
        if c == b {
            NodeSet::singleton(b)
        } else {
            chains.iter().find(|(x, _)| *x == c).expect("c ∈ M").1
        }
    };
    for &(c, set) in &chains {
        if !is_type_c(matrix, set) {
            return Ok(fail(
                2,
                format!("C[{}..{}] = {} is not of type C", name(b), name(c), matrix.format_set(set)),
            ));
        }
    }
    let mb = m.with(b);
    for c in mb.iter() {
        for d in mb.iter().filter(|&d| d > c) {
            if !chain(d).contains(c) && !chain(c).contains(d) && !matrix.label(c, d).is_infinite() {
                return Ok(fail(
                    3,
                    format!("{} and {} are incomparable but m = {}", name(c), name(d), matrix.label(c, d)),
                ));
            }
        }
    }
    for c in m.iter() {
        for e in matrix.all().difference(mb).iter() {
            if matrix.label(c, e).is_infinite() {
                continue;
            }
            if let Some(d) = chain(c).iter().find(|&d| matrix.label(d, e) != Label::Finite(2)) {
                return Ok(fail(
                    4,
                    format!(
                        "m({},{}) is finite but m({},{}) = {}",
                        name(c),
                        name(e),
                        name(d),
                        name(e),
                        matrix.label(d, e)
                    ),
                ));
            }
        }
    }
    if is_spherical_component_of_even(matrix, m, mb)? {
        return Ok(fail(5, format!("{} is a spherical component of Even(M)", matrix.format_set(mb))));
    }
    Ok(Ok(()))
}

/// Checks whether `{a, b}` is a half-focus of `M`, reporting the first
/// failed clause. Clause 0 is the requirement `m_ab = 2`.
pub fn check_half_focus(
    matrix: &CoxeterMatrix,
    m: NodeSet,
    a: usize,
    b: usize,
) -> Result<ClauseCheck> {
    require_odd_component(matrix, m)?;
    if !m.contains(a) || !m.contains(b) || a == b {
        return Err(Error::BadArguments("a half-focus is two nodes of M".into()));
    }
    let name = |i: usize| matrix.name(i);
    let label = |i: usize, j: usize| matrix.label(i, j);
    if label(a, b) != Label::Finite(2) {
        return Ok(fail(0, format!("m({},{}) = {}", name(a), name(b), label(a, b))));
    }
    let rest = m.without(a).without(b);
    for c in matrix.all().without(a).without(b).iter() {
        let allowed = if m.contains(c) {
            matches!(label(a, c), Label::Finite(2 | 3))
        } else {
            matches!(label(a, c), Label::Finite(2) | Label::Infinite)
        };
        if label(a, c) != label(b, c) || !allowed {
            return Ok(fail(
                1,
                format!(
                    "m({a},{c}) = {} and m({b},{c}) = {}",
                    label(a, c),
                    label(b, c),
                    a = name(a),
                    b = name(b),
                    c = name(c)
                ),
            ));
        }
    }
    if let Err(detail) = is_three_tree(matrix, m.without(b)) {
        return Ok(fail(2, detail));
    }
    let chains: Vec<(usize, NodeSet)> = rest
        .iter()
        .map(|c| Ok((c, d_chain(matrix, m, a, b, c)?)))
        .collect::<Result<_>>()?;
    let chain = |c: usize| chains.iter().find(|(x, _)| *x == c).expect("c ∈ M∖{a,b}").1;
    for &(c, set) in &chains {
        if !is_type_d(matrix, set) {
            return Ok(fail(
                3,
                format!(
                    "D[{},{}..{}] = {} is not of type D",
                    name(a),
                    name(b),
                    name(c),
                    matrix.format_set(set)
                ),
            ));
        }
    }
    for c in rest.iter() {
        for d in rest.iter().filter(|&d| d > c) {
            if !chain(d).contains(c) && !chain(c).contains(d) && !label(c, d).is_infinite() {
                return Ok(fail(
                    4,
                    format!("{} and {} are incomparable but m = {}", name(c), name(d), label(c, d)),
                ));
            }
        }
    }
    for c in rest.iter() {
        for e in matrix.all().difference(m).iter() {
            if label(c, e).is_infinite() {
                continue;
            }
            if let Some(d) = chain(c).iter().find(|&d| label(d, e) != Label::Finite(2)) {
                return Ok(fail(
                    5,
                    format!(
                        "m({},{}) is finite but m({},{}) = {}",
                        name(c),
                        name(e),
                        name(d),
                        name(e),
                        label(d, e)
                    ),
                ));
            }
        }
    }
    if is_spherical_component_of_even(matrix, m, m)? {
        return Ok(fail(6, format!("{} is a spherical component of Even(M)", matrix.format_set(m))));
    }
    Ok(Ok(()))
}

/// Every focus of `M`, in node order.
pub fn find_foci(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Vec<(usize, usize)>> {
    Ok(focus_diagnostics(matrix, m)?
        .into_iter()
        .filter(|(_, _, r)| r.is_ok())
        .map(|(a, b, _)| (a, b))
        .collect())
}

/// The first focus of `M`, if any.
pub fn find_focus(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Option<(usize, usize)>> {
    Ok(find_foci(matrix, m)?.into_iter().next())
}

/// Clause-by-clause verdict for every candidate pair `(a ∈ M, b ∉ M)`.
pub fn focus_diagnostics(
    matrix: &CoxeterMatrix,
    m: NodeSet,
) -> Result<Vec<(usize, usize, ClauseCheck)>> {
    require_odd_component(matrix, m)?;
    let mut out = Vec::new();
    for a in m.iter() {
        for b in matrix.all().difference(m).iter() {
            out.push((a, b, check_focus(matrix, m, a, b)?));
        }
    }
    Ok(out)
}

/// Every half-focus of `M`.
pub fn find_half_foci(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Vec<(usize, usize)>> {
    Ok(half_focus_diagnostics(matrix, m)?
        .into_iter()
        .filter(|(_, _, r)| r.is_ok())
        .map(|(a, b, _)| (a, b))
        .collect())
}

pub fn find_half_focus(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Option<(usize, usize)>> {
    Ok(find_half_foci(matrix, m)?.into_iter().next())
}

/// Verdicts for every pair `a < b` in `M`. The conditions are symmetric in
/// `a` and `b` once clause 1 holds, so one orientation suffices.
pub fn half_focus_diagnostics(
    matrix: &CoxeterMatrix,
    m: NodeSet,
) -> Result<Vec<(usize, usize, ClauseCheck)>> {
    require_odd_component(matrix, m)?;
    let mut out = Vec::new();
    for a in m.iter() {
        for b in m.iter().filter(|&b| b > a) {
            out.push((a, b, check_half_focus(matrix, m, a, b)?));
        }
    }
    Ok(out)
}

/// Everything the classifier derives for one odd component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentAnalysis {
    pub odd_component: NodeSet,
    pub even_closure: NodeSet,
    /// Union of the spherical components of `Even(M)`.
    pub spherical_part: NodeSet,
    /// The component of `Even(M)` containing `M` is spherical.
    pub case_a: bool,
    pub foci: Vec<(usize, usize)>,
    pub half_foci: Vec<(usize, usize)>,
    pub c3_neighbours: Vec<usize>,
}

impl ComponentAnalysis {
    pub fn new(matrix: &CoxeterMatrix, m: NodeSet) -> Result<Self> {
        let even = matrix.even_closure(m)?;
        let home = matrix
            .coxeter_components(even)
            .into_iter()
            .find(|c| m.is_subset(*c))
            .expect("an odd component is connected");
        Ok(ComponentAnalysis {
            odd_component: m,
            even_closure: even,
            spherical_part: spherical_part(matrix, even),
            case_a: is_spherical(matrix, home),
            foci: find_foci(matrix, m)?,
            half_foci: find_half_foci(matrix, m)?,
            c3_neighbours: c3_neighbours(matrix, m)?,
        })
    }

    /// The applicable case, or `CaseConflict` when the detectors disagree.
    pub fn case(&self, matrix: &CoxeterMatrix) -> Result<Case> {
        let pair = |&(x, y): &(usize, usize)| format!("({},{})", matrix.name(x), matrix.name(y));
        let mut found = Vec::new();
        if self.case_a {
            found.push("spherical Even component".to_string());
        }
        if !self.foci.is_empty() {
            found.push(format!("focus {}", self.foci.iter().map(pair).collect::<Vec<_>>().join(" ")));
        }
        if !self.half_foci.is_empty() {
            found.push(format!(
                "half-focus {}",
                self.half_foci.iter().map(pair).collect::<Vec<_>>().join(" ")
            ));
        }
        if found.len() > 1 || self.foci.len() > 1 || self.half_foci.len() > 1 {
            return Err(Error::CaseConflict {
                component: matrix.format_set(self.odd_component),
                detail: found.join("; "),
            });
        }
        Ok(if self.case_a {
            Case::A
        } else if !self.foci.is_empty() {
            Case::C
        } else if !self.half_foci.is_empty() {
            Case::D
        } else {
            Case::B
        })
    }

    fn result_for(&self, matrix: &CoxeterMatrix, a: usize) -> Result<FcResult> {
        debug_assert!(self.odd_component.contains(a));
        let case = self.case(matrix)?;
        let sph = self.spherical_part;
        let (visibility, witness) = match case {
            Case::A => (Visibility::Visible(sph), Witness::None),
            Case::C => {
                let (f, b) = self.foci[0];
                let vis = if a == f {
                    Visibility::Visible(sph.with(f).with(b))
                } else {
                    Visibility::NotVisible
                };
                (vis, Witness::Focus(f, b))
            }
            Case::D => {
                let (f, g) = self.half_foci[0];
                let vis = if a == f || a == g {
                    Visibility::Visible(sph.with(f).with(g))
                } else {
                    Visibility::NotVisible
                };
                (vis, Witness::HalfFocus(f, g))
            }
            Case::B => {
                let j_prime = self.c3_neighbours.iter().fold(sph, |s, &b| s.with(b));
                let vis = if self.c3_neighbours.iter().any(|&b| matrix.adjacent(a, b)) {
                    Visibility::NotVisible
                } else {
                    Visibility::Visible(j_prime.with(a))
                };
                (vis, Witness::C3Neighbours(self.c3_neighbours.clone()))
            }
        };
        Ok(FcResult {
            node: a,
            odd_component: self.odd_component,
            even_closure: self.even_closure,
            visibility,
            case,
            witness,
        })
    }
}

/// `FC(r_a)` for a single node.
pub fn finite_continuation(matrix: &CoxeterMatrix, a: usize) -> Result<FcResult> {
    if a >= matrix.rank() {
        return Err(Error::UnknownNode(format!("#{a}")));
    }
    ComponentAnalysis::new(matrix, matrix.odd_component(a))?.result_for(matrix, a)
}

/// `FC(r_a)` for every node, in node order.
pub fn finite_continuations(matrix: &CoxeterMatrix, parallel: bool) -> Result<Vec<FcResult>> {
    let components = matrix.odd_components();
    let analyses = par::map(parallel, &components, |&m| ComponentAnalysis::new(matrix, m));
    let analyses: Vec<ComponentAnalysis> = analyses.into_iter().collect::<Result<_>>()?;
    (0..matrix.rank())
        .map(|a| {
            analyses
                .iter()
                .find(|c| c.odd_component.contains(a))
                .expect("components partition the nodes")
                .result_for(matrix, a)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Every simple reflection has `FC(r) = ⟨r⟩`, so every automorphism
    /// maps reflections to reflections.
    ReflectionsDetermined,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub irreducible: bool,
    pub non_spherical: bool,
    pub two_spherical: bool,
    pub finite_rank: bool,
    /// `FC(r_a) = ⟨r_a⟩`, per node.
    pub fc_trivial: Vec<bool>,
    pub verdict: Verdict,
}

impl RigidityReport {
    pub fn hypotheses_hold(&self) -> bool {
        self.irreducible && self.non_spherical && self.two_spherical && self.finite_rank
    }
}

/// Irreducible, infinite, 2-spherical systems have trivial finite
/// continuation at every node. The step from there to conjugacy of all
/// Coxeter generating sets rests on an external result and is only
/// reported, not checked.
pub fn rigidity_report(matrix: &CoxeterMatrix) -> Result<RigidityReport> {
    let results = finite_continuations(matrix, false)?;
    let fc_trivial: Vec<bool> = results.iter().map(FcResult::is_trivial).collect();
    let mut report = RigidityReport {
        irreducible: matrix.is_irreducible(),
        non_spherical: !is_spherical(matrix, matrix.all()),
        two_spherical: matrix.is_two_spherical(),
        finite_rank: true,
        fc_trivial,
        verdict: Verdict::NotApplicable,
    };
    if report.hypotheses_hold() {
        assert!(
            report.fc_trivial.iter().all(|&t| t),
            "2-spherical irreducible infinite system with a nontrivial finite continuation"
        );
        report.verdict = Verdict::ReflectionsDetermined;
    }
    Ok(report)
}
