//! The JSON graph format.
//!
//! ```json
//! { "nodes": ["a", "b", "c"],
//!   "edges": [ { "u": "a", "v": "b", "m": 4 }, { "u": "b", "v": "c", "m": "inf" } ] }
//! ```
//!
//! Pairs that are not listed have `m = 2`. Explicit `m = 2` edges are
//! accepted and dropped on canonicalization.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use coxeter_fc::{CoxeterMatrix, Label};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: String,
    pub v: String,
    pub m: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub nodes: Vec<String>,
    #[serde(default)]
    pub edges: Vec<Edge>,
}

fn label_of(m: &Value, field: &str) -> Result<Label, CliError> {
    match m {
        Value::String(s) if s == "inf" => Ok(Label::Infinite),
        Value::Number(n) => match n.as_u64() {
            Some(k @ 2..) if k <= u32::MAX as u64 => Ok(Label::Finite(k as u32)),
            _ => Err(CliError::input(format!("{field}: expected an integer >= 2 or \"inf\", got {n}"))),
        },
        other => Err(CliError::input(format!("{field}: expected an integer >= 2 or \"inf\", got {other}"))),
    }
}

fn label_value(m: Label) -> Value {
    match m {
        Label::Finite(k) => Value::from(k),
        Label::Infinite => Value::from("inf"),
    }
}

impl GraphFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| {
            CliError::input(format!("line {} column {}: {e}", e.line(), e.column()))
        })
    }

    /// Validates and builds the matrix.
    pub fn to_matrix(&self) -> Result<CoxeterMatrix, CliError> {
        if self.nodes.is_empty() {
            return Err(CliError::input("nodes: the node list is empty"));
        }
        let n = self.nodes.len();
        for (i, name) in self.nodes.iter().enumerate() {
            if name.is_empty() {
                return Err(CliError::input(format!("nodes[{i}]: empty node name")));
            }
            if let Some(j) = self.nodes[..i].iter().position(|x| x == name) {
                return Err(CliError::input(format!("nodes[{i}]: `{name}` already declared at nodes[{j}]")));
            }
        }
        let index = |name: &str, field: String| {
            self.nodes
                .iter()
                .position(|x| x == name)
                .ok_or_else(|| CliError::input(format!("{field}: node `{name}` is not declared")))
        };
        let mut entries = vec![vec![Label::Finite(2); n]; n];
        let mut seen: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
        for i in 0..n {
            entries[i][i] = Label::Finite(1);
        }
        for (k, e) in self.edges.iter().enumerate() {
            let u = index(&e.u, format!("edges[{k}].u"))?;
            let v = index(&e.v, format!("edges[{k}].v"))?;
            if u == v {
                return Err(CliError::input(format!("edges[{k}]: u and v are both `{}`", e.u)));
            }
            if let Some(first) = seen[u][v] {
                return Err(CliError::input(format!(
                    "edges[{k}]: pair {}-{} already listed at edges[{first}]",
                    e.u, e.v
                )));
            }
            seen[u][v] = Some(k);
            seen[v][u] = Some(k);
            let m = label_of(&e.m, &format!("edges[{k}].m"))?;
            entries[u][v] = m;
            entries[v][u] = m;
        }
        CoxeterMatrix::new(self.nodes.clone(), entries).map_err(|e| CliError::input(e.to_string()))
    }

    /// Canonical file for a matrix: edges with `m != 2`, in node order.
    pub fn from_matrix(matrix: &CoxeterMatrix) -> Self {
        let n = matrix.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let m = matrix.label(i, j);
                if m != Label::Finite(2) {
                    edges.push(Edge {
                        u: matrix.name(i).to_string(),
                        v: matrix.name(j).to_string(),
                        m: label_value(m),
                    });
                }
            }
        }
        GraphFile {
            nodes: matrix.nodes().to_vec(),
            edges,
        }
    }

    pub fn canonical(&self) -> Result<Self, CliError> {
        Ok(GraphFile::from_matrix(&self.to_matrix()?))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("graph files serialize")
    }
}

/// Reads and validates a graph file; `-` reads standard input.
pub fn load(path: &str) -> Result<CoxeterMatrix, CliError> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CliError::input(format!("{path}: {e}")))?;
    GraphFile::parse(&text)
        .and_then(|g| g.to_matrix())
        .map_err(|e| CliError::input(format!("{path}: {}", e.message)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(text: &str) -> Result<CoxeterMatrix, CliError> {
        GraphFile::parse(text)?.to_matrix()
    }

    #[test]
    fn parses_labels() {
        let m = matrix(r#"{"nodes":["a","b","c"],"edges":[{"u":"a","v":"b","m":4},{"u":"c","v":"b","m":"inf"}]}"#)
            .unwrap();
        assert_eq!(m.label(0, 1), Label::Finite(4));
        assert_eq!(m.label(1, 2), Label::Infinite);
        assert_eq!(m.label(0, 2), Label::Finite(2));
    }

    #[test]
    fn rejects_bad_files() {
        let cases = [
            (r#"{"nodes":[]}"#, "empty"),
            (r#"{"nodes":["a","a"]}"#, "nodes[1]"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"a","m":3}]}"#, "edges[0]"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"b","m":3},{"u":"b","v":"a","m":3}]}"#, "edges[1]"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"x","m":3}]}"#, "edges[0].v"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"b","m":1}]}"#, "edges[0].m"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"b","m":"oo"}]}"#, "edges[0].m"),
            (r#"{"nodes":["a","b"],"edges":[{"u":"a","v":"b","m":2.5}]}"#, "edges[0].m"),
            ("{\"nodes\":[\"a\",\n}", "line 2"),
            (r#"{"nodes":["a"],"extra":1}"#, "unknown field"),
        ];
        for (text, needle) in cases {
            let err = matrix(text).unwrap_err();
            assert!(err.message.contains(needle), "{text}: {}", err.message);
            assert_eq!(err.code, 1);
        }
    }

    #[test]
    fn explicit_twos_are_dropped() {
        let g = GraphFile::parse(r#"{"nodes":["a","b","c"],"edges":[{"u":"a","v":"b","m":2},{"u":"c","v":"a","m":3}]}"#)
            .unwrap();
        let c = g.canonical().unwrap();
        assert_eq!(c.edges.len(), 1);
        assert_eq!((c.edges[0].u.as_str(), c.edges[0].v.as_str()), ("a", "c"));
        assert_eq!(GraphFile::parse(&c.to_json()).unwrap(), c);
    }
}
