//! Sphericity by classification of connected Coxeter diagrams.
//!
//! The classification is purely combinatorial (branching, label multiset,
//! position of the heavy edge), so arbitrary dihedral labels such as
//! `I2(1000)` are handled without touching the number field.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CoxeterMatrix, Label, NodeSet};

/// Finite type of a connected diagram. `B` also covers `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
    NotFinite,
}

impl FiniteType {
    pub fn is_finite(self) -> bool {
        self != FiniteType::NotFinite
    }

    pub fn rank(self) -> Option<usize> {
        use FiniteType::*;
        Some(match self {
            A(n) | B(n) | D(n) => n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
            NotFinite => return None,
        })
    }

    /// Whether the longest element is central, i.e. acts as `-1`.
    pub fn has_central_longest(self) -> bool {
        use FiniteType::*;
        match self {
            A(n) => n == 1,
            B(_) | E7 | E8 | F4 | H3 | H4 => true,
            D(n) => n % 2 == 0,
            I2(m) => m % 2 == 0,
            E6 | NotFinite => false,
        }
    }

    /// Order of the group, when it fits in a `u64`.
    pub fn order(self) -> Option<u64> {
        use FiniteType::*;
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        Some(match self {
            A(n) => fact(n + 1),
            B(n) => (1u64 << n) * fact(n),
            D(n) => (1u64 << (n - 1)) * fact(n),
            E6 => 51_840,
            E7 => 2_903_040,
            E8 => 696_729_600,
            F4 => 1152,
            H3 => 120,
            H4 => 14_400,
            I2(m) => 2 * m as u64,
            NotFinite => return None,
        })
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FiniteType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => f.write_str("E6"),
            E7 => f.write_str("E7"),
            E8 => f.write_str("E8"),
            F4 => f.write_str("F4"),
            H3 => f.write_str("H3"),
            H4 => f.write_str("H4"),
            I2(m) => write!(f, "I2({m})"),
            NotFinite => f.write_str("not finite"),
        }
    }
}

/// Classifies the full subdiagram on a connected `subset`.
pub fn classify_connected(matrix: &CoxeterMatrix, subset: NodeSet) -> Result<FiniteType> {
    if subset.is_empty() || !matrix.is_connected(subset) {
        return Err(Error::NotConnected);
    }
    Ok(classify_unchecked(matrix, &subset.iter().collect::<Vec<_>>()))
}

fn classify_unchecked(matrix: &CoxeterMatrix, nodes: &[usize]) -> FiniteType {
    use FiniteType::*;
    let n = nodes.len();
    if n == 1 {
        return A(1);
    }
    let mut edges = Vec::new();
    for (x, &i) in nodes.iter().enumerate() {
        for (y, &j) in nodes.iter().enumerate().skip(x + 1) {
            match matrix.label(i, j) {
                Label::Infinite => return NotFinite,
                Label::Finite(m) if m >= 3 => edges.push((x, y, m)),
                Label::Finite(_) => {}
            }
        }
    }
    if n == 2 {
        return match edges[0].2 {
            3 => A(2),
            4 => B(2),
            m => I2(m),
        };
    }
    // Connected with n - 1 edges means a tree.
    if edges.len() != n - 1 || edges.iter().any(|e| e.2 >= 6) {
        return NotFinite;
    }
    let mut degree = vec![0usize; n];
    for &(x, y, _) in &edges {
        degree[x] += 1;
        degree[y] += 1;
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
    let branches: Vec<usize> = (0..n).filter(|&v| degree[v] >= 3).collect();
    if heavy.len() > 1 || degree.iter().any(|&d| d > 3) || branches.len() > 1 {
        return NotFinite;
    }
    if let Some(&centre) = branches.first() {
        if !heavy.is_empty() {
            return NotFinite;
        }
        let mut arms = arm_lengths(&edges, n, centre);
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, _] => D(n),
            [1, 2, 2] => E6,
            [1, 2, 3] => E7,
            [1, 2, 4] => E8,
            _ => NotFinite,
        };
    }
    let Some(&&(x, y, m)) = heavy.first() else {
        return A(n);
    };
    let at_end = degree[x] == 1 || degree[y] == 1;
    match (m, n, at_end) {
        (4, _, true) => B(n),
        (4, 4, false) => F4,
        (5, 3, true) => H3,
        (5, 4, true) => H4,
        _ => NotFinite,
    }
}

fn arm_lengths(edges: &[(usize, usize, u32)], n: usize, centre: usize) -> Vec<usize> {
    let neighbours = |v: usize| {
        edges
            .iter()
            .filter_map(move |&(x, y, _)| match v {
                _ if x == v => Some(y),
                _ if y == v => Some(x),
                _ => None,
            })
            .collect::<Vec<_>>()
    };
    neighbours(centre)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next: Vec<_> = neighbours(cur).into_iter().filter(|&v| v != prev).collect();
                match next.as_slice() {
                    [v] if len < n => {
                        prev = cur;
                        cur = *v;
                        len += 1;
                    }
                    _ => break len,
                }
            }
        })
        .collect()
}

/// Classification of every component of `subset`, in component order.
pub fn component_types(matrix: &CoxeterMatrix, subset: NodeSet) -> Vec<(NodeSet, FiniteType)> {
    matrix
        .coxeter_components(subset)
        .into_iter()
        .map(|c| (c, classify_unchecked(matrix, &c.iter().collect::<Vec<_>>())))
        .collect()
}

pub fn is_spherical(matrix: &CoxeterMatrix, subset: NodeSet) -> bool {
    component_types(matrix, subset)
        .iter()
        .all(|(_, t)| t.is_finite())
}

/// Components of `subset` whose classification is finite.
pub fn spherical_components(matrix: &CoxeterMatrix, subset: NodeSet) -> Vec<NodeSet> {
    component_types(matrix, subset)
        .into_iter()
        .filter(|(_, t)| t.is_finite())
        .map(|(c, _)| c)
        .collect()
}

/// Union of [`spherical_components`].
pub fn spherical_part(matrix: &CoxeterMatrix, subset: NodeSet) -> NodeSet {
    spherical_components(matrix, subset)
        .into_iter()
        .fold(NodeSet::EMPTY, NodeSet::union)
}

/// `W_I` finite with central longest element.
pub fn is_minus_one_type(matrix: &CoxeterMatrix, subset: NodeSet) -> bool {
    component_types(matrix, subset)
        .iter()
        .all(|(_, t)| t.is_finite() && t.has_central_longest())
}

/// Maximal spherical subsets of the node set, in increasing bit order.
///
/// Exponential in the rank; intended for the small ranks the root engine
/// handles.
pub fn maximal_spherical_subsets(matrix: &CoxeterMatrix) -> Vec<NodeSet> {
    let n = matrix.rank();
    assert!(n <= 24, "maximal spherical subsets are enumerated exhaustively");
    let spherical: Vec<bool> = (0..1u64 << n)
        .map(|bits| is_spherical(matrix, NodeSet::from_bits(bits)))
        .collect();
    (0..1u64 << n)
        .filter(|&bits| {
            spherical[bits as usize]
                && (0..n).all(|i| bits & (1 << i) != 0 || !spherical[(bits | 1 << i) as usize])
        })
        .map(NodeSet::from_bits)
        .collect()
}
