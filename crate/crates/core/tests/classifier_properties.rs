mod common;

use common::any_matrix;
use coxeter_fc::classifier::{finite_continuations, ComponentAnalysis, Visibility};
use coxeter_fc::finite_type::{is_spherical, spherical_components};
use coxeter_fc::{Case, NodeSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn visible_sets_are_spherical_and_contain_the_even_part(m in any_matrix(1..=7)) {
        for r in finite_continuations(&m, false).unwrap() {
            if let Visibility::Visible(j) = r.visibility {
                prop_assert!(j.contains(r.node));
                prop_assert!(is_spherical(&m, j));
                for c in spherical_components(&m, r.even_closure) {
                    prop_assert!(c.is_subset(j));
                }
            }
        }
    }

    /// At most one of the three detectors fires per odd component, so no
    /// conflict is ever raised.
    #[test]
    fn cases_are_exclusive(m in any_matrix(1..=7)) {
        for odd in m.odd_components() {
            let c = ComponentAnalysis::new(&m, odd).unwrap();
            let fired = usize::from(c.case_a) + usize::from(!c.foci.is_empty())
                + usize::from(!c.half_foci.is_empty());
            prop_assert!(fired <= 1, "{m}");
            prop_assert!(c.foci.len() <= 1 && c.half_foci.len() <= 1, "{m}");
            prop_assert!(c.case(&m).is_ok());
        }
    }

    #[test]
    fn results_are_consistent_across_a_component(m in any_matrix(1..=7)) {
        let results = finite_continuations(&m, false).unwrap();
        for odd in m.odd_components() {
            let rs: Vec<_> = results.iter().filter(|r| odd.contains(r.node)).collect();
            let visible: NodeSet = rs.iter().filter(|r| r.visible_set().is_some()).map(|r| r.node).collect();
            prop_assert!(!visible.is_empty(), "every odd component has a visible node\n{m}");
            let case = rs[0].case;
            prop_assert!(rs.iter().all(|r| r.case == case));
            match case {
                Case::A => prop_assert_eq!(visible, odd),
                Case::C => prop_assert_eq!(visible.len(), 1),
                Case::D => prop_assert_eq!(visible.len(), 2),
                Case::B => {
                    // J' is shared; each visible node adds only itself.
                    let mut shared = None;
                    for r in &rs {
                        if let Some(j) = r.visible_set() {
                            let j_prime = j.without(r.node);
                            prop_assert!(shared.is_none_or(|s| s == j_prime));
                            shared = Some(j_prime);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_evaluation_is_deterministic(m in any_matrix(1..=7)) {
        prop_assert_eq!(finite_continuations(&m, true).unwrap(), finite_continuations(&m, false).unwrap());
    }
}
