//! Breadth-first enumeration of group elements by length.
//!
//! Level `k + 1` is obtained from level `k` by right multiplication with the
//! simple reflections `s` for which `w(α_s)` is positive; these are exactly
//! the products that gain length, so each level only needs deduplication
//! against itself.

use indexmap::IndexSet;

use crate::engine::form::{BilinearForm, GroupElement};
use crate::error::{Error, Result};
use crate::graph::NodeSet;
use crate::par;

const NO_PARENT: u32 = u32::MAX;

/// Elements of `W_S` of length at most some bound, `S` a set of generators.
#[derive(Debug, Clone)]
pub struct Enumeration {
    elements: IndexSet<GroupElement>,
    lengths: Vec<u32>,
    parent: Vec<(u32, u8)>,
    inverse: Vec<u32>,
    level_start: Vec<usize>,
    generators: NodeSet,
    max_length: usize,
    truncated: bool,
    saturated: bool,
}

impl Enumeration {
    /// Enumerates lengths `0..=max_length`, stopping before any level that
    /// would push the element count beyond `cap`.
    pub fn run(
        form: &BilinearForm,
        generators: NodeSet,
        max_length: usize,
        cap: usize,
        parallel: bool,
    ) -> Self {
        let rank = form.rank();
        let mut elements = IndexSet::new();
        elements.insert(GroupElement::identity(rank));
        let mut en = Enumeration {
            elements,
            lengths: vec![0],
            parent: vec![(NO_PARENT, 0)],
            inverse: vec![0],
            level_start: vec![0, 1],
            generators,
            max_length,
            truncated: false,
            saturated: false,
        };
        let gens: Vec<usize> = generators.iter().collect();
        for k in 0..max_length {
            let (lo, hi) = (en.level_start[k], en.level_start[k + 1]);
            let frontier: Vec<usize> = (lo..hi).collect();
            let candidates = par::map(parallel, &frontier, |&i| {
                let w = &en.elements[i];
                gens.iter()
                    .filter(|&&s| w.sends_simple_positive(s))
                    .map(|&s| (w.right_mul_simple(form, s), i as u32, s as u8))
                    .collect::<Vec<_>>()
            });
            let mut level = IndexSet::new();
            let mut parents = Vec::new();
            for (g, p, s) in candidates.into_iter().flatten() {
                if level.insert(g) {
                    parents.push((p, s));
                }
            }
            if level.is_empty() {
                en.saturated = true;
                break;
            }
            if en.elements.len() + level.len() > cap {
                en.truncated = true;
                break;
            }
            // (w r_s)^{-1} = r_s w^{-1}
            let inv_matrices = par::map(parallel, &parents, |&(p, s)| {
                en.elements[en.inverse[p as usize] as usize].left_mul_simple(form, s as usize)
            });
            let base = en.elements.len();
            let inverse: Vec<u32> = inv_matrices
                .iter()
                .map(|m| (base + level.get_index_of(m).expect("inverse has the same length")) as u32)
                .collect();
            en.elements.extend(level);
            en.lengths.extend(std::iter::repeat_n(k as u32 + 1, parents.len()));
            en.parent.extend(parents);
            en.inverse.extend(inverse);
            en.level_start.push(en.elements.len());
        }
        en
    }

    /// Like [`Enumeration::run`] but reports a truncated run as an error.
    pub fn complete(
        form: &BilinearForm,
        generators: NodeSet,
        max_length: usize,
        cap: usize,
        parallel: bool,
    ) -> Result<Self> {
        let en = Enumeration::run(form, generators, max_length, cap, parallel);
        if en.truncated {
            Err(Error::BudgetExceeded {
                cap,
                length: en.reached_length() + 1,
            })
        } else {
            Ok(en)
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> NodeSet {
        self.generators
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    /// Largest length whose level is fully present.
    pub fn reached_length(&self) -> usize {
        self.level_start.len() - 2
    }

    /// The element-count cap stopped the run early.
    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Some level came out empty, so this is the whole (finite) group.
    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i] as usize
    }

    pub fn index_of(&self, w: &GroupElement) -> Option<usize> {
        self.elements.get_index_of(w)
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.elements.contains(w)
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i] as usize
    }

    /// Indices of the elements of length exactly `k`.
    pub fn level(&self, k: usize) -> std::ops::Range<usize> {
        if k + 1 >= self.level_start.len() {
            return 0..0;
        }
        self.level_start[k]..self.level_start[k + 1]
    }

    /// A reduced word `s_1 ... s_k` with `w = r_{s_1} ... r_{s_k}`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(i));
        while self.parent[i].0 != NO_PARENT {
            let (p, s) = self.parent[i];
            out.push(s as usize);
            i = p as usize;
        }
        out.reverse();
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &GroupElement)> {
        self.elements.iter().enumerate()
    }

    pub fn elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{CoxeterMatrix, Label};

    fn count(m: &CoxeterMatrix, len: usize) -> Enumeration {
        let form = BilinearForm::new(m).unwrap();
        Enumeration::run(&form, m.all(), len, 200_000, true)
    }

    #[test]
    fn small_group_orders() {
        let a2 = count(&fixtures::a(2), 3);
        assert_eq!(a2.len(), 6);
        assert!(!a2.is_saturated());
        assert!(count(&fixtures::a(2), 5).is_saturated());
        assert_eq!(count(&fixtures::i2(6), 6).len(), 12);
        assert_eq!(count(&fixtures::i2(6), 12).len(), 12);
        assert_eq!(count(&fixtures::h3(), 20).len(), 120);
        assert_eq!(count(&fixtures::b(3), 20).len(), 48);
        assert_eq!(count(&fixtures::a(4), 20).len(), 120);
    }

    #[test]
    fn infinite_dihedral_grows_by_two() {
        let m = CoxeterMatrix::from_edges(&["a", "b"], &[("a", "b", Label::Infinite)]).unwrap();
        let en = count(&m, 3);
        assert_eq!(en.len(), 7);
        assert_eq!(en.level(3).len(), 2);
    }

    #[test]
    fn words_and_inverses() {
        let m = fixtures::g7();
        let form = BilinearForm::new(&m).unwrap();
        let en = Enumeration::run(&form, m.all(), 6, 100_000, false);
        for (i, w) in en.iter() {
            let word = en.word(i);
            assert_eq!(word.len(), en.length(i));
            assert_eq!(&GroupElement::from_word(&form, &word), w);
            let inv = en.element(en.inverse_of(i));
            assert!(w.compose(inv).is_identity());
        }
    }

    #[test]
    fn cap_truncates_at_level_boundary() {
        let m = fixtures::affine_a2();
        let form = BilinearForm::new(&m).unwrap();
        let en = Enumeration::run(&form, m.all(), 10, 20, false);
        assert!(en.is_truncated());
        assert!(en.len() <= 20);
        assert_eq!(en.len(), en.level(en.reached_length()).end);
        assert!(matches!(
            Enumeration::complete(&form, m.all(), 10, 20, false),
            Err(Error::BudgetExceeded { cap: 20, .. })
        ));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let m = fixtures::g5();
        let form = BilinearForm::new(&m).unwrap();
        let a = Enumeration::run(&form, m.all(), 7, 100_000, true);
        let b = Enumeration::run(&form, m.all(), 7, 100_000, false);
        assert!(a.elements().eq(b.elements()));
        assert_eq!(a.inverse, b.inverse);
    }

    #[test]
    fn parabolic_subgroup() {
        let m = fixtures::g5();
        let form = BilinearForm::new(&m).unwrap();
        let j = m.subset(&["b", "a"]).unwrap();
        let en = Enumeration::run(&form, j, 50, 1000, false);
        assert!(en.is_saturated());
        assert_eq!(en.len(), 8);
    }
}
