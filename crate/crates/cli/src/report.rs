//! Serializable reports. Field order is declaration order, so the JSON
//! output has a stable key order.

use std::fmt::Write;

use serde::Serialize;

use coxeter_fc::classifier::{ComponentAnalysis, RigidityReport, Verdict};
use coxeter_fc::engine::OracleStatus;
use coxeter_fc::finite_type::{component_types, is_minus_one_type, is_spherical};
use coxeter_fc::{Case, CoxeterMatrix, FcResult, NodeSet, Witness};

fn names(m: &CoxeterMatrix, set: NodeSet) -> Vec<String> {
    m.names_of(set)
}

fn pairs(m: &CoxeterMatrix, ps: &[(usize, usize)]) -> Vec<[String; 2]> {
    ps.iter()
        .map(|&(a, b)| [m.name(a).to_string(), m.name(b).to_string()])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub kind: &'static str,
    pub nodes: Vec<String>,
}

impl WitnessReport {
    pub fn new(m: &CoxeterMatrix, w: &Witness) -> Self {
        let (kind, nodes) = match w {
            Witness::None => ("none", vec![]),
            Witness::Focus(a, b) => ("focus", vec![*a, *b]),
            Witness::HalfFocus(a, b) => ("half_focus", vec![*a, *b]),
            Witness::C3Neighbours(bs) => ("c3_neighbours", bs.clone()),
        };
        WitnessReport {
            kind,
            nodes: nodes.into_iter().map(|i| m.name(i).to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FcReport {
    pub node: String,
    pub case: Case,
    pub visible: bool,
    /// `FC(r_a) = W_J` when visible.
    #[serde(rename = "J")]
    pub j: Option<Vec<String>>,
    pub witness: WitnessReport,
}

impl FcReport {
    pub fn new(m: &CoxeterMatrix, r: &FcResult) -> Self {
        let j = r.visible_set();
        FcReport {
            node: m.name(r.node).to_string(),
            case: r.case,
            visible: j.is_some(),
            j: j.map(|j| names(m, j)),
            witness: WitnessReport::new(m, &r.witness),
        }
    }

    pub fn describe_fc(&self) -> String {
        match &self.j {
            Some(j) => format!("W_{{{}}}", j.join(",")),
            None => "not visible".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub odd_component: Vec<String>,
    pub even_closure: Vec<String>,
    pub spherical_part: Vec<String>,
    pub case: Case,
    pub foci: Vec<[String; 2]>,
    pub half_foci: Vec<[String; 2]>,
    pub c3_neighbours: Vec<String>,
}

impl ComponentReport {
    pub fn new(m: &CoxeterMatrix, c: &ComponentAnalysis, case: Case) -> Self {
        ComponentReport {
            odd_component: names(m, c.odd_component),
            even_closure: names(m, c.even_closure),
            spherical_part: names(m, c.spherical_part),
            case,
            foci: pairs(m, &c.foci),
            half_foci: pairs(m, &c.half_foci),
            c3_neighbours: c.c3_neighbours.iter().map(|&b| m.name(b).to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RigidityJson {
    pub irreducible: bool,
    pub non_spherical: bool,
    pub two_spherical: bool,
    pub finite_rank: bool,
    pub fc_trivial: Vec<String>,
    pub verdict: Verdict,
}

impl RigidityJson {
    pub fn new(m: &CoxeterMatrix, r: &RigidityReport) -> Self {
        RigidityJson {
            irreducible: r.irreducible,
            non_spherical: r.non_spherical,
            two_spherical: r.two_spherical,
            finite_rank: r.finite_rank,
            fc_trivial: (0..m.rank())
                .filter(|&a| r.fc_trivial[a])
                .map(|a| m.name(a).to_string())
                .collect(),
            verdict: r.verdict,
        }
    }

    pub fn human(&self) -> String {
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut s = format!(
            "irreducible: {}, infinite: {}, 2-spherical: {}\n",
            yes(self.irreducible),
            yes(self.non_spherical),
            yes(self.two_spherical)
        );
        match self.verdict {
            Verdict::ReflectionsDetermined => s.push_str(
                "verdict: ReflectionsDetermined (FC(r) = <r> for every simple reflection; \
                 every automorphism preserves reflections)\n",
            ),
            Verdict::NotApplicable => s.push_str("verdict: NotApplicable\n"),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub node: String,
    pub predicted: Option<Vec<String>>,
    pub max_length: usize,
    pub reached_length: usize,
    /// The element cap stopped the search early; the set is a partial
    /// result.
    pub partial: bool,
    pub elements: usize,
    pub words: Vec<String>,
    /// Visible `W_K` equal to the oracle set, if any.
    pub matches_visible: Option<Vec<String>>,
    pub status: OracleStatus,
}

impl OracleReport {
    pub fn human(&self) -> String {
        let mut s = String::new();
        let tag = if self.partial { " [PARTIAL]" } else { "" };
        let predicted = match &self.predicted {
            Some(j) => format!("W_{{{}}}", j.join(",")),
            None => "not visible".into(),
        };
        writeln!(s, "node {}: classifier predicts {predicted}", self.node).unwrap();
        writeln!(
            s,
            "oracle{tag}: {} elements, conjugators up to length {} (requested {})",
            self.elements, self.reached_length, self.max_length
        )
        .unwrap();
        writeln!(s, "  {}", self.words.join(", ")).unwrap();
        match &self.matches_visible {
            Some(k) => writeln!(s, "oracle set equals W_{{{}}}", k.join(",")).unwrap(),
            None => writeln!(s, "no visible W_K equals the oracle set").unwrap(),
        }
        writeln!(s, "status{tag}: {}", status_name(self.status)).unwrap();
        s
    }
}

pub fn status_name(s: OracleStatus) -> &'static str {
    match s {
        OracleStatus::Match => "MATCH",
        OracleStatus::Subset => "SUBSET",
        OracleStatus::Mismatch => "MISMATCH",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub nodes: Vec<String>,
    pub components: Vec<ComponentReport>,
    pub fc: Vec<FcReport>,
    pub rigidity: RigidityJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<OracleReport>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn human(&self) -> String {
        let mut s = format!("{} nodes: {}\n", self.nodes.len(), self.nodes.join(" "));
        for c in &self.components {
            write!(
                s,
                "odd component {{{}}}: Even = {{{}}}, case {}",
                c.odd_component.join(","),
                c.even_closure.join(","),
                c.case
            )
            .unwrap();
            for [a, b] in &c.foci {
                write!(s, ", focus ({a},{b})").unwrap();
            }
            for [a, b] in &c.half_foci {
                write!(s, ", half-focus {{{a},{b}}}").unwrap();
            }
            if !c.c3_neighbours.is_empty() {
                write!(s, ", C3-neighbours {{{}}}", c.c3_neighbours.join(",")).unwrap();
            }
            s.push('\n');
        }
        s.push_str("FC table:\n");
        let width = self.nodes.iter().map(String::len).max().unwrap_or(1);
        for r in &self.fc {
            writeln!(s, "  {:width$}  case {}  {}", r.node, r.case, r.describe_fc()).unwrap();
        }
        s.push_str(&self.rigidity.human());
        if let Some(oracle) = &self.oracle {
            s.push_str("oracle comparison:\n");
            for o in oracle {
                let tag = if o.partial { " [PARTIAL]" } else { "" };
                writeln!(
                    s,
                    "  {:width$}  {}{tag}  {} elements, L = {}",
                    o.node,
                    status_name(o.status),
                    o.elements,
                    o.reached_length
                )
                .unwrap();
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentType {
    pub nodes: Vec<String>,
    #[serde(rename = "type")]
    pub ty: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub subset: Vec<String>,
    pub components: Vec<ComponentType>,
    pub spherical: bool,
    pub minus_one_type: bool,
}

impl ClassifyReport {
    pub fn new(m: &CoxeterMatrix, set: NodeSet) -> Self {
        let spherical = is_spherical(m, set);
        ClassifyReport {
            subset: names(m, set),
            components: component_types(m, set)
                .into_iter()
                .map(|(c, t)| ComponentType {
                    nodes: names(m, c),
                    ty: t.to_string(),
                })
                .collect(),
            spherical,
            minus_one_type: spherical && is_minus_one_type(m, set),
        }
    }

    pub fn human(&self) -> String {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{} on {{{}}}", c.ty, c.nodes.join(",")))
            .collect();
        format!(
            "{{{}}}: {}\nspherical: {}, (-1)-type: {}\n",
            self.subset.join(","),
            parts.join(" + "),
            if self.spherical { "yes" } else { "no" },
            if self.minus_one_type { "yes" } else { "no" }
        )
    }
}
