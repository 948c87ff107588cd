//! Classifier against the brute-force oracle on seeded random matrices,
//! beyond the fixed corpus.

mod common;

use common::from_upper;
use coxeter_fc::classifier::{finite_continuations, Visibility};
use coxeter_fc::engine::{Limits, OracleStatus};
use coxeter_fc::{Label, RootEngine};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn random_matrices_agree_with_the_oracle() {
    let weighted = [
        Label::Finite(2),
        Label::Finite(2),
        Label::Finite(3),
        Label::Finite(3),
        Label::Finite(4),
        Label::Finite(6),
        Label::Infinite,
        Label::Infinite,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut compared = 0;
    for _ in 0..80 {
        let n = rng.gen_range(3..=4);
        let labels: Vec<Label> = (0..n * (n - 1) / 2).map(|_| weighted[rng.gen_range(0..weighted.len())]).collect();
        let m = from_upper(n, &labels);
        let engine = RootEngine::new(&m).unwrap().with_limits(Limits {
            element_cap: 100_000,
            ..Limits::default()
        });
        for r in finite_continuations(&m, true).unwrap() {
            let out = engine.oracle_fc(r.node, 6).unwrap();
            match r.visibility {
                Visibility::Visible(j) => assert_eq!(
                    engine.compare_with_visible(&out.elements, j).unwrap(),
                    OracleStatus::Match,
                    "node {} of\n{m}",
                    m.name(r.node)
                ),
                Visibility::NotVisible => assert_eq!(engine.matching_visible(&out.elements).unwrap(), None),
            }
            compared += 1;
        }
    }
    assert!(compared > 200);
}
