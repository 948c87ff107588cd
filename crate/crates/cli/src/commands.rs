use clap::{Parser, Subcommand, ValueEnum};

use coxeter_fc::classifier::{finite_continuation, finite_continuations, rigidity_report, ComponentAnalysis};
use coxeter_fc::engine::{GroupElement, Limits, OracleStatus};
use coxeter_fc::{CoxeterMatrix, Error, NodeSet, RootEngine, Visibility};

use crate::graph_file::load;
use crate::report::{
    AnalysisReport, ClassifyReport, ComponentReport, FcReport, OracleReport, RigidityJson,
};
use crate::{dot, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Human,
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "coxeter-fc", version, about = "Finite continuations of reflections in Coxeter groups")]
pub struct Cli {
    /// Longest conjugator length searched by the oracle.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_length: usize,
    /// Maximum number of group elements held by any enumeration.
    #[arg(long, global = true, default_value_t = 200_000)]
    pub element_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = ReportFormat::Human)]
    pub report: ReportFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify FC(r_a) for every node and report the rigidity verdict.
    Analyze {
        file: String,
        /// Also compare every node against the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// FC(r_a) for one node.
    Fc {
        file: String,
        #[arg(long)]
        node: String,
    },
    /// Finite types of the components of a node subset.
    Classify {
        file: String,
        #[arg(long, value_delimiter = ',')]
        subset: Vec<String>,
    },
    Rigidity { file: String },
    /// Brute-force FC(r_a) compared with the classifier.
    OracleFc {
        file: String,
        #[arg(long)]
        node: String,
    },
    /// Graphviz rendering of the Coxeter graph.
    ExportDot { file: String },
}

/// Text to print and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn render<T: serde::Serialize>(format: ReportFormat, value: &T, human: impl FnOnce() -> String) -> String {
    match format {
        ReportFormat::Human => human(),
        ReportFormat::Machine => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn node(m: &CoxeterMatrix, name: &str) -> Result<usize, CliError> {
    m.index_of(name).map_err(CliError::from)
}

fn word_string(m: &CoxeterMatrix, word: &[usize]) -> String {
    if word.is_empty() {
        "1".into()
    } else {
        word.iter().map(|&s| m.name(s)).collect::<Vec<_>>().join(" ")
    }
}

fn oracle_report(cli: &Cli, engine: &RootEngine, a: usize) -> Result<OracleReport, CliError> {
    let m = engine.matrix();
    let predicted = finite_continuation(m, a)?;
    let out = engine.oracle_fc_partial(a, cli.max_length)?;
    let matches_visible = engine.matching_visible(&out.elements)?;
    let status = match predicted.visibility {
        Visibility::Visible(j) => engine.compare_with_visible(&out.elements, j)?,
        Visibility::NotVisible if matches_visible.is_none() => OracleStatus::Match,
        Visibility::NotVisible => OracleStatus::Mismatch,
    };
    let mut words: Vec<(usize, String)> = out
        .elements
        .iter()
        .map(|g: &GroupElement| {
            let w = engine.reduced_word(g, usize::MAX)?;
            Ok((w.len(), word_string(m, &w)))
        })
        .collect::<Result<_, Error>>()?;
    words.sort();
    Ok(OracleReport {
        node: m.name(a).to_string(),
        predicted: predicted.visible_set().map(|j| m.names_of(j)),
        max_length: cli.max_length,
        reached_length: out.reached_length,
        partial: out.truncated,
        elements: out.elements.len(),
        words: words.into_iter().map(|(_, w)| w).collect(),
        matches_visible: matches_visible.map(|k| m.names_of(k)),
        status,
    })
}

fn engine_for(cli: &Cli, m: &CoxeterMatrix) -> Result<RootEngine, CliError> {
    Ok(RootEngine::new(m)?.with_limits(Limits {
        max_length: cli.max_length,
        element_cap: cli.element_cap,
        parallel: true,
    }))
}

pub fn analysis_report(cli: &Cli, m: &CoxeterMatrix, with_oracle: bool) -> Result<AnalysisReport, CliError> {
    let fc = finite_continuations(m, true)?;
    let components = m
        .odd_components()
        .into_iter()
        .map(|c| {
            let analysis = ComponentAnalysis::new(m, c)?;
            let case = analysis.case(m)?;
            Ok(ComponentReport::new(m, &analysis, case))
        })
        .collect::<Result<_, Error>>()?;
    let rigidity = rigidity_report(m)?;
    let oracle = if with_oracle {
        let engine = engine_for(cli, m)?;
        Some((0..m.rank()).map(|a| oracle_report(cli, &engine, a)).collect::<Result<_, _>>()?)
    } else {
        None
    };
    Ok(AnalysisReport {
        nodes: m.nodes().to_vec(),
        components,
        fc: fc.iter().map(|r| FcReport::new(m, r)).collect(),
        rigidity: RigidityJson::new(m, &rigidity),
        oracle,
    })
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let fmt = cli.report;
    match &cli.command {
        Command::Analyze { file, oracle } => {
            let m = load(file)?;
            let report = analysis_report(cli, &m, *oracle)?;
            let partial = report.oracle.iter().flatten().any(|o| o.partial);
            let text = match fmt {
                ReportFormat::Human => report.human(),
                ReportFormat::Machine => report.to_json() + "\n",
            };
            Ok(Output {
                text,
                code: if partial { 2 } else { 0 },
            })
        }
        Command::Fc { file, node: name } => {
            let m = load(file)?;
            let r = FcReport::new(&m, &finite_continuation(&m, node(&m, name)?)?);
            Ok(Output::ok(render(fmt, &r, || {
                format!("FC(r_{}) = {}  (case {})\n", r.node, r.describe_fc(), r.case)
            })))
        }
        Command::Classify { file, subset } => {
            let m = load(file)?;
            let set: NodeSet = m.subset(subset)?;
            if set.is_empty() {
                return Err(CliError::input("--subset: no nodes given"));
            }
            let r = ClassifyReport::new(&m, set);
            Ok(Output::ok(render(fmt, &r, || r.human())))
        }
        Command::Rigidity { file } => {
            let m = load(file)?;
            let r = RigidityJson::new(&m, &rigidity_report(&m)?);
            Ok(Output::ok(render(fmt, &r, || r.human())))
        }
        Command::OracleFc { file, node: name } => {
            let m = load(file)?;
            let engine = engine_for(cli, &m)?;
            let r = oracle_report(cli, &engine, node(&m, name)?)?;
            Ok(Output {
                text: render(fmt, &r, || r.human()),
                code: if r.partial { 2 } else { 0 },
            })
        }
        Command::ExportDot { file } => Ok(Output::ok(dot::export(&load(file)?))),
    }
}
