#![allow(dead_code)]

use coxeter_fc::{CoxeterMatrix, Label};
use proptest::prelude::*;

pub const SUPPORTED: [Label; 6] = [
    Label::Finite(2),
    Label::Finite(3),
    Label::Finite(4),
    Label::Finite(5),
    Label::Finite(6),
    Label::Infinite,
];

pub fn from_upper(n: usize, labels: &[Label]) -> CoxeterMatrix {
    let nodes: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut entries = vec![vec![Label::Finite(1); n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            entries[i][j] = labels[k];
            entries[j][i] = labels[k];
            k += 1;
        }
    }
    CoxeterMatrix::new(nodes, entries).expect("valid by construction")
}

fn matrix_with(ranks: std::ops::RangeInclusive<usize>, label: BoxedStrategy<Label>) -> impl Strategy<Value = CoxeterMatrix> {
    ranks.prop_flat_map(move |n| {
        proptest::collection::vec(label.clone(), n * (n - 1) / 2).prop_map(move |l| from_upper(n, &l))
    })
}

/// Labels the root engine supports.
pub fn supported_matrix(ranks: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CoxeterMatrix> {
    matrix_with(ranks, proptest::sample::select(SUPPORTED.to_vec()).boxed())
}

/// Any labels, weighted towards 2, 3 and inf so that the odd graph and the
/// infinite edges both have structure.
pub fn any_matrix(ranks: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CoxeterMatrix> {
    let label = prop_oneof![
        3 => Just(Label::Finite(2)),
        3 => Just(Label::Finite(3)),
        2 => Just(Label::Finite(4)),
        1 => (5u32..=9).prop_map(Label::Finite),
        3 => Just(Label::Infinite),
    ];
    matrix_with(ranks, label.boxed())
}
