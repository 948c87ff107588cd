mod common;

use common::{any_matrix, supported_matrix};
use coxeter_fc::{CoxeterMatrix, NodeSet, RootEngine};
use proptest::prelude::*;

fn weighted_eccentricity(m: &CoxeterMatrix, a: usize) -> usize {
    let n = m.rank();
    let mut dist = vec![usize::MAX; n];
    dist[a] = 0;
    // Bellman-Ford; ranks are tiny.
    for _ in 0..n {
        for u in 0..n {
            for v in 0..n {
                if dist[u] != usize::MAX && m.label(u, v).is_odd_edge() {
                    let w = m.label(u, v).finite().unwrap() as usize - 1;
                    dist[v] = dist[v].min(dist[u] + w);
                }
            }
        }
    }
    dist.into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0)
}

proptest! {
    #[test]
    fn components_partition_the_subset(m in any_matrix(1..=7), bits in any::<u64>()) {
        let subset = NodeSet::from_bits(bits).intersection(m.all());
        let parts = m.coxeter_components(subset);
        let mut union = NodeSet::EMPTY;
        for p in &parts {
            prop_assert!(!p.is_empty());
            prop_assert!(union.intersection(*p).is_empty());
            prop_assert!(m.is_connected(*p));
            union = union.union(*p);
        }
        prop_assert_eq!(union, subset);
    }

    #[test]
    fn odd_components_are_symmetric(m in any_matrix(1..=7)) {
        for a in 0..m.rank() {
            let odd = m.odd_component(a);
            prop_assert!(odd.contains(a));
            for b in 0..m.rank() {
                prop_assert_eq!(odd.contains(b), m.odd_component(b).contains(a));
            }
        }
    }

    #[test]
    fn even_closure_contains_its_component(m in any_matrix(1..=7)) {
        for odd in m.odd_components() {
            let even = m.even_closure(odd).unwrap();
            prop_assert!(odd.is_subset(even));
            prop_assert_eq!(even, m.even_closure(odd).unwrap());
            for b in even.difference(odd).iter() {
                prop_assert!(odd.iter().any(|a| m.label(a, b).is_even()));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// Simple roots in `W a` are exactly the odd component of `a`. Moving
    /// `α_a` across an odd edge labelled `m` takes `m - 1` reflections, so
    /// the depth is the weighted odd-graph eccentricity of `a` plus 2.
    #[test]
    fn orbit_law(m in supported_matrix(1..=4)) {
        let engine = RootEngine::new(&m).unwrap();
        for a in 0..m.rank() {
            let depth = weighted_eccentricity(&m, a) + 2;
            prop_assert_eq!(engine.orbit_simple_roots(a, depth), m.odd_component(a));
        }
    }
}
