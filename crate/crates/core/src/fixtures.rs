//! Named Coxeter matrices used throughout the tests, benches and docs.

use crate::graph::{CoxeterMatrix, Label};

use Label::{Finite as F, Infinite as Inf};

fn build(nodes: &[&str], edges: &[(&str, &str, Label)]) -> CoxeterMatrix {
    CoxeterMatrix::from_edges(nodes, edges).expect("fixture is valid")
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

/// Path `s1 - s2 - ... - sn` with the given edge labels.
pub fn path(labels: &[Label]) -> CoxeterMatrix {
    let nodes = names(labels.len() + 1);
    let edges: Vec<(String, String, Label)> = labels
        .iter()
        .enumerate()
        .map(|(i, &m)| (nodes[i].clone(), nodes[i + 1].clone(), m))
        .collect();
    CoxeterMatrix::from_edges(&nodes, &edges).expect("path is valid")
}

pub fn i2(m: u32) -> CoxeterMatrix {
    build(&["a", "b"], &[("a", "b", F(m))])
}

pub fn a(n: usize) -> CoxeterMatrix {
    path(&vec![F(3); n - 1])
}

/// `B_n` (equivalently `C_n`): the label 4 sits on the edge `s(n-1) - sn`.
pub fn b(n: usize) -> CoxeterMatrix {
    let mut l = vec![F(3); n - 1];
    l[n - 2] = F(4);
    path(&l)
}

/// `D_n`, `n >= 4`: the path `s1..s(n-1)` with `sn` attached to `s(n-2)`.
pub fn d(n: usize) -> CoxeterMatrix {
    let nodes = names(n);
    let mut edges: Vec<(String, String, Label)> = (0..n - 2)
        .map(|i| (nodes[i].clone(), nodes[i + 1].clone(), F(3)))
        .collect();
    edges.push((nodes[n - 3].clone(), nodes[n - 1].clone(), F(3)));
    CoxeterMatrix::from_edges(&nodes, &edges).expect("D_n is valid")
}

/// `E_n`, `n` in 6..=8: the path `s1..s(n-1)` with `sn` attached to `s3`.
pub fn e(n: usize) -> CoxeterMatrix {
    let nodes = names(n);
    let mut edges: Vec<(String, String, Label)> = (0..n - 2)
        .map(|i| (nodes[i].clone(), nodes[i + 1].clone(), F(3)))
        .collect();
    edges.push((nodes[2].clone(), nodes[n - 1].clone(), F(3)));
    CoxeterMatrix::from_edges(&nodes, &edges).expect("E_n is valid")
}

pub fn f4() -> CoxeterMatrix {
    path(&[F(3), F(4), F(3)])
}

pub fn h3() -> CoxeterMatrix {
    path(&[F(5), F(3)])
}

pub fn h4() -> CoxeterMatrix {
    path(&[F(5), F(3), F(3)])
}

pub fn a1_x_a2() -> CoxeterMatrix {
    build(&["a", "b", "c"], &[("b", "c", F(3))])
}

pub fn affine_a2() -> CoxeterMatrix {
    build(
        &["a", "b", "c"],
        &[("a", "b", F(3)), ("b", "c", F(3)), ("a", "c", F(3))],
    )
}

/// Four-cycle of 3s.
pub fn affine_a3() -> CoxeterMatrix {
    build(
        &["a", "b", "c", "d"],
        &[
            ("a", "b", F(3)),
            ("b", "c", F(3)),
            ("c", "d", F(3)),
            ("d", "a", F(3)),
        ],
    )
}

/// `a -4- b -4- c`.
pub fn affine_c2() -> CoxeterMatrix {
    build(&["a", "b", "c"], &[("a", "b", F(4)), ("b", "c", F(4))])
}

/// `a -6- b -3- c`.
pub fn affine_g2() -> CoxeterMatrix {
    build(&["a", "b", "c"], &[("a", "b", F(6)), ("b", "c", F(3))])
}

/// Focus example: `(a, b)` is a focus of `{a, c, d}`.
pub fn g5() -> CoxeterMatrix {
    build(
        &["b", "a", "c", "d"],
        &[
            ("b", "a", F(4)),
            ("a", "c", F(3)),
            ("a", "d", F(3)),
            ("c", "d", Inf),
        ],
    )
}

/// Half-focus example: `{a, b}` is a half-focus of the whole node set.
pub fn g6() -> CoxeterMatrix {
    build(
        &["a", "b", "c", "d"],
        &[
            ("a", "c", F(3)),
            ("b", "c", F(3)),
            ("a", "d", F(3)),
            ("b", "d", F(3)),
            ("c", "d", Inf),
        ],
    )
}

/// `C_3`-neighbour example: `b` is a `C_3`-neighbour of `{a2, a, c}`.
pub fn g7() -> CoxeterMatrix {
    build(
        &["a2", "a", "c", "b"],
        &[
            ("a2", "a", F(3)),
            ("a", "c", F(3)),
            ("a2", "c", Inf),
            ("b", "c", F(4)),
        ],
    )
}

/// The fixture corpus used for classifier/oracle agreement, with names.
pub fn corpus() -> Vec<(&'static str, CoxeterMatrix)> {
    vec![
        ("I2(6)", i2(6)),
        ("A1xI2(3)", a1_x_a2()),
        ("affine A2", affine_a2()),
        ("affine A3", affine_a3()),
        ("affine C2", affine_c2()),
        ("affine G2", affine_g2()),
        ("G5", g5()),
        ("G6", g6()),
        ("G7", g7()),
    ]
}
