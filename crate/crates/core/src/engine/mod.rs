//! Exact Tits reflection representation over `Q(√2, √3, √5)`.
//!
//! Supports the labels `2, 3, 4, 5, 6, inf`. Besides the usual root-system
//! machinery (lengths, `N(w)`, longest elements, `v[a, I]`, minimal double
//! coset representatives) it provides a brute-force computation of the
//! finite continuation of a simple reflection, used as an oracle for the
//! graph classifier.

mod enumerate;
mod form;
mod oracle;

use std::collections::HashSet;

pub use enumerate::Enumeration;
pub use form::{form_entry, BilinearForm, GroupElement, Root};
pub use oracle::{OracleOutcome, OracleStatus};

use crate::error::{Error, Result};
use crate::finite_type::is_spherical;
use crate::graph::{CoxeterMatrix, NodeSet};

/// Search bounds for enumeration-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_length: usize,
    pub element_cap: usize,
    /// Use the thread pool when the `parallel` feature is enabled.
    pub parallel: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_length: 12,
            element_cap: 200_000,
            parallel: true,
        }
    }
}

impl Limits {
    pub fn with_max_length(self, max_length: usize) -> Self {
        Limits { max_length, ..self }
    }

    pub fn sequential(self) -> Self {
        Limits {
            parallel: false,
            ..self
        }
    }
}

/// A Coxeter matrix together with its exact reflection representation.
#[derive(Debug, Clone)]
pub struct RootEngine {
    matrix: CoxeterMatrix,
    form: BilinearForm,
    limits: Limits,
}

impl RootEngine {
    pub fn new(matrix: &CoxeterMatrix) -> Result<Self> {
        Ok(RootEngine {
            matrix: matrix.clone(),
            form: BilinearForm::new(matrix)?,
            limits: Limits::default(),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    pub fn simple_root(&self, a: usize) -> Root {
        Root::simple(self.rank(), a)
    }

    pub fn simple_reflection(&self, a: usize) -> GroupElement {
        GroupElement::simple_reflection(&self.form, a)
    }

    pub fn reflection_along(&self, root: &Root) -> Result<GroupElement> {
        GroupElement::reflection_along(&self.form, root)
    }

    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        GroupElement::from_word(&self.form, word)
    }

    /// All elements of length at most `max_length`.
    pub fn enumerate(&self, max_length: usize) -> Result<Enumeration> {
        Enumeration::complete(
            &self.form,
            self.matrix.all(),
            max_length,
            self.limits.element_cap,
            self.limits.parallel,
        )
    }

    /// The whole of a finite visible subgroup `W_J`.
    pub fn parabolic(&self, j: NodeSet) -> Result<Enumeration> {
        if !is_spherical(&self.matrix, j) {
            return Err(Error::NotSpherical);
        }
        let en = Enumeration::complete(
            &self.form,
            j,
            usize::MAX,
            self.limits.element_cap,
            self.limits.parallel,
        )?;
        debug_assert!(en.is_saturated());
        Ok(en)
    }

    /// A reduced word for `w` found by repeatedly removing right descents.
    /// Fails if more than `max_length` steps are needed.
    pub fn reduced_word(&self, w: &GroupElement, max_length: usize) -> Result<Vec<usize>> {
        let mut x = w.clone();
        let mut word = Vec::new();
        loop {
            match (0..self.rank()).find(|&s| !x.sends_simple_positive(s)) {
                Some(s) => {
                    if word.len() == max_length {
                        return Err(Error::DepthExceeded(max_length));
                    }
                    x = x.right_mul_simple(&self.form, s);
                    word.push(s);
                }
                None if x.is_identity() => break,
                None => return Err(Error::NotAGroupElement),
            }
        }
        word.reverse();
        Ok(word)
    }

    pub fn inverse(&self, w: &GroupElement, max_length: usize) -> Result<GroupElement> {
        let mut word = self.reduced_word(w, max_length)?;
        word.reverse();
        Ok(self.from_word(&word))
    }

    /// `ℓ(w)` and `N(w) = {b ∈ Φ⁺ : w b ∈ Φ⁻}`, the latter sorted.
    pub fn length_and_inversions(
        &self,
        w: &GroupElement,
        max_length: usize,
    ) -> Result<(usize, Vec<Root>)> {
        let word = self.reduced_word(w, max_length)?;
        // N(x r_s) = {α_s} ∪ r_s N(x) whenever the length goes up.
        let mut inversions: Vec<Root> = Vec::with_capacity(word.len());
        for &s in &word {
            let rs = self.simple_reflection(s);
            inversions = std::iter::once(self.simple_root(s))
                .chain(inversions.iter().map(|b| rs.apply(b)))
                .collect();
        }
        inversions.sort();
        Ok((word.len(), inversions))
    }

    /// The longest element `w_J` of a finite `W_J`, by greedy ascent.
    pub fn longest_element(&self, j: NodeSet) -> Result<GroupElement> {
        if !is_spherical(&self.matrix, j) {
            return Err(Error::NotSpherical);
        }
        let mut w = self.identity();
        while let Some(s) = j.iter().find(|&s| w.sends_simple_positive(s)) {
            w = w.right_mul_simple(&self.form, s);
        }
        Ok(w)
    }

    /// `v[a, I] = w_L w_{L∖{a}}` where `L` is the component of `I ∪ {a}`
    /// containing `a`.
    pub fn v_element(&self, a: usize, i: NodeSet) -> Result<GroupElement> {
        if a >= self.rank() || i.contains(a) || !i.is_subset(self.matrix.all()) {
            return Err(Error::BadArguments(format!(
                "v[a, I] needs a node a outside I (a = {a})"
            )));
        }
        let l = self
            .matrix
            .coxeter_components(i.with(a))
            .into_iter()
            .find(|c| c.contains(a))
            .expect("a lies in a component");
        if !is_spherical(&self.matrix, l) {
            return Err(Error::NotSpherical);
        }
        let v = self
            .longest_element(l)?
            .compose(&self.longest_element(l.without(a))?);
        let image = i.with(a);
        for b in i.iter() {
            let vb = v.apply(&self.simple_root(b));
            let s = vb.as_simple();
            assert!(s.is_some_and(|s| image.contains(s)), "v[a,I] maps I into I ∪ {{a}}");
            if !l.contains(b) {
                assert_eq!(s, Some(b), "v[a,I] fixes I outside L");
            }
        }
        Ok(v)
    }

    /// The unique minimal-length element of `W_I w W_J`, by greedy descent
    /// on both sides. `max_length` bounds the length of `w`.
    pub fn min_double_coset_rep(
        &self,
        i: NodeSet,
        j: NodeSet,
        w: &GroupElement,
        max_length: usize,
    ) -> Result<GroupElement> {
        let mut d = w.clone();
        let mut d_inv = self.inverse(w, max_length)?;
        loop {
            // ℓ(r_s d) < ℓ(d) iff d^{-1}(α_s) is negative.
            if let Some(s) = i.iter().find(|&s| !d_inv.sends_simple_positive(s)) {
                d = d.left_mul_simple(&self.form, s);
                d_inv = d_inv.right_mul_simple(&self.form, s);
            } else if let Some(t) = j.iter().find(|&t| !d.sends_simple_positive(t)) {
                d = d.right_mul_simple(&self.form, t);
                d_inv = d_inv.left_mul_simple(&self.form, t);
            } else {
                return Ok(d);
            }
        }
    }

    /// Whether every `w` with `w a ∈ Φ_J` normalises `W_J`, checked over the
    /// whole (finite) group.
    pub fn normalizer_condition(&self, a: usize, j: NodeSet) -> Result<bool> {
        if !is_spherical(&self.matrix, self.matrix.all()) {
            return Err(Error::NotSpherical);
        }
        if !j.contains(a) {
            return Err(Error::BadArguments("the node must lie in J".into()));
        }
        let en = Enumeration::complete(
            &self.form,
            self.matrix.all(),
            usize::MAX,
            self.limits.element_cap,
            self.limits.parallel,
        )?;
        let in_phi_j = |r: Root| r.support().is_subset(j);
        let holds = en
            .elements()
            .filter(|w| in_phi_j(w.column(a)))
            .all(|w| j.iter().all(|b| in_phi_j(w.column(b))));
        Ok(holds)
    }

    /// Simple roots of the form `w a` with `w` in the enumeration.
    pub fn simple_roots_in_orbit(&self, a: usize, en: &Enumeration) -> NodeSet {
        en.elements()
            .filter_map(|w| w.column(a).as_simple())
            .collect()
    }

    /// Simple roots in the orbit of `α_a`, by breadth-first search over the
    /// roots `r_{s_k} ... r_{s_1} α_a` with `k <= steps`.
    pub fn orbit_simple_roots(&self, a: usize, steps: usize) -> NodeSet {
        let mut seen: HashSet<Root> = HashSet::from([self.simple_root(a)]);
        let mut frontier = vec![self.simple_root(a)];
        let reflections: Vec<GroupElement> = (0..self.rank()).map(|s| self.simple_reflection(s)).collect();
        for _ in 0..steps {
            let mut next = Vec::new();
            for r in &frontier {
                for rs in &reflections {
                    let image = rs.apply(r);
                    if seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        seen.iter().filter_map(Root::as_simple).collect()
    }

    /// Element sets of every visible subgroup `W_K` with `K` spherical.
    pub fn visible_finite_subgroups(&self) -> Result<Vec<(NodeSet, HashSet<GroupElement>)>> {
        let n = self.rank();
        let mut out = Vec::new();
        for bits in 0..1u64 << n {
            let k = NodeSet::from_bits(bits);
            if is_spherical(&self.matrix, k) {
                let en = self.parabolic(k)?;
                out.push((k, en.elements().cloned().collect()));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::field::FieldElement;
    use crate::graph::{Label, NodeSet};

    fn engine(m: &CoxeterMatrix) -> RootEngine {
        RootEngine::new(m).unwrap()
    }

    #[test]
    fn unsupported_labels_are_rejected() {
        assert!(matches!(
            RootEngine::new(&fixtures::i2(7)),
            Err(Error::UnsupportedLabel(_))
        ));
    }

    #[test]
    fn length_and_inversions_a2() {
        let e = engine(&fixtures::a(2));
        let w = e.from_word(&[0, 1, 0]);
        let (len, n) = e.length_and_inversions(&w, 10).unwrap();
        assert_eq!(len, 3);
        let en = e.enumerate(5).unwrap();
        let mut positive: Vec<Root> = en
            .elements()
            .flat_map(|w| (0..2).map(move |a| w.column(a)))
            .filter(Root::is_positive)
            .collect();
        positive.sort();
        positive.dedup();
        assert_eq!(positive.len(), 3);
        assert_eq!(n, positive);
        let (len0, n0) = e.length_and_inversions(&e.identity(), 0).unwrap();
        assert_eq!((len0, n0.len()), (0, 0));
    }

    #[test]
    fn length_in_infinite_dihedral() {
        let m = CoxeterMatrix::from_edges(&["a", "b"], &[("a", "b", Label::Infinite)]).unwrap();
        let e = engine(&m);
        let w = e.from_word(&[0, 1]);
        let (len, n) = e.length_and_inversions(&w, 5).unwrap();
        assert_eq!(len, 2);
        assert_eq!(n.len(), 2);
        assert!(n.contains(&e.simple_root(1)));
        assert!(n.iter().all(|b| b.is_positive() && w.apply(b).is_negative()));
        assert_eq!(
            e.length_and_inversions(&e.from_word(&[0, 1, 0, 1]), 3),
            Err(Error::DepthExceeded(3))
        );
    }

    #[test]
    fn non_elements_are_detected() {
        let e = engine(&fixtures::a(2));
        let two = FieldElement::from_int(2);
        let doubled = GroupElement::from_rows(vec![
            vec![two, FieldElement::ZERO],
            vec![FieldElement::ZERO, two],
        ]);
        assert_eq!(e.reduced_word(&doubled, 5), Err(Error::NotAGroupElement));
    }

    #[test]
    fn longest_elements() {
        let a2 = engine(&fixtures::a(2));
        assert_eq!(
            a2.longest_element(NodeSet::singleton(0)).unwrap(),
            a2.simple_reflection(0)
        );
        let w0 = a2.longest_element(a2.matrix().all()).unwrap();
        assert_eq!(w0, a2.from_word(&[0, 1, 0]));
        assert_eq!(w0.column(0), a2.simple_root(1).neg());
        assert_eq!(w0.column(1), a2.simple_root(0).neg());
        let b2 = engine(&fixtures::b(2));
        let w0 = b2.longest_element(b2.matrix().all()).unwrap();
        assert_eq!(w0, b2.from_word(&[0, 1, 0, 1]));
        assert!(w0.negates(b2.matrix().all()));
        let g5 = engine(&fixtures::g5());
        assert_eq!(g5.longest_element(g5.matrix().all()), Err(Error::NotSpherical));
    }

    #[test]
    fn v_elements() {
        let a2 = engine(&fixtures::a(2));
        let v = a2.v_element(0, NodeSet::singleton(1)).unwrap();
        assert_eq!(v, a2.from_word(&[0, 1, 0]).compose(&a2.simple_reflection(1)));
        assert_eq!(v.column(1), a2.simple_root(0));
        let m = fixtures::a1_x_a2();
        let e = engine(&m);
        let v = e.v_element(0, m.subset(&["b", "c"]).unwrap()).unwrap();
        assert_eq!(v, e.simple_reflection(0));
        let b2 = engine(&fixtures::b(2));
        let v = b2.v_element(0, NodeSet::singleton(1)).unwrap();
        assert_eq!(v.column(1), b2.simple_root(1));
        assert!(matches!(
            b2.v_element(0, NodeSet::singleton(0)),
            Err(Error::BadArguments(_))
        ));
        let t = engine(&fixtures::affine_a2());
        assert_eq!(
            t.v_element(0, t.matrix().subset(&["b", "c"]).unwrap()),
            Err(Error::NotSpherical)
        );
    }

    #[test]
    fn double_coset_representatives() {
        let a2 = engine(&fixtures::a(2));
        let (i, j) = (NodeSet::singleton(0), NodeSet::singleton(1));
        assert!(a2.min_double_coset_rep(i, j, &a2.identity(), 0).unwrap().is_identity());
        let w = a2.from_word(&[0, 1]);
        assert!(a2.min_double_coset_rep(i, j, &w, 5).unwrap().is_identity());
    }

    #[test]
    fn normalizer_condition_basics() {
        let a3 = engine(&fixtures::a(3));
        let ends = a3.matrix().subset(&["s1", "s3"]).unwrap();
        assert!(a3.normalizer_condition(0, ends).unwrap());
        for a in 0..3 {
            assert!(a3.normalizer_condition(a, NodeSet::singleton(a)).unwrap());
        }
        let g5 = engine(&fixtures::g5());
        assert_eq!(
            g5.normalizer_condition(0, NodeSet::singleton(0)),
            Err(Error::NotSpherical)
        );
    }

    #[test]
    fn orbit_of_simple_root() {
        let e = engine(&fixtures::g7());
        let en = e.enumerate(6).unwrap();
        assert_eq!(
            e.simple_roots_in_orbit(1, &en),
            e.matrix().subset(&["a2", "a", "c"]).unwrap()
        );
        assert_eq!(e.simple_roots_in_orbit(3, &en), NodeSet::singleton(3));
    }
}
