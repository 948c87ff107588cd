//! Graphviz rendering of a Coxeter graph. Odd edges are solid, even edges
//! dashed and `inf` edges bold.

use std::fmt::Write;

use coxeter_fc::{CoxeterMatrix, Label};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export(matrix: &CoxeterMatrix) -> String {
    let mut out = String::from("graph coxeter {\n  node [shape=circle];\n");
    for name in matrix.nodes() {
        writeln!(out, "  {};", quote(name)).unwrap();
    }
    let n = matrix.rank();
    for i in 0..n {
        for j in i + 1..n {
            let m = matrix.label(i, j);
            let style = match m {
                Label::Infinite => "bold",
                Label::Finite(2) => continue,
                Label::Finite(k) if k % 2 == 1 => "solid",
                Label::Finite(_) => "dashed",
            };
            writeln!(
                out,
                "  {} -- {} [label=\"{m}\", style={style}];",
                quote(matrix.name(i)),
                quote(matrix.name(j))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
