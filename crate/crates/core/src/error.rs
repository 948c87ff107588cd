use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    Input(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("node set is not a connected component of the odd graph")]
    NotAnOddComponent,
    #[error("node set is not connected in the Coxeter graph")]
    NotConnected,
    #[error("odd-graph component is not a tree")]
    NotATree,
    #[error("no path between `{0}` and `{1}`")]
    NoPath(String, String),
    #[error("odd component {component} is claimed by more than one case: {detail}")]
    CaseConflict { component: String, detail: String },
    #[error("label {0} is not supported by the root engine (supported: 2,3,4,5,6,inf)")]
    UnsupportedLabel(String),
    #[error("vector does not have unit length under the form")]
    NotUnitRoot,
    #[error("element needs more than {0} generators")]
    DepthExceeded(usize),
    #[error("matrix is not an element of the group")]
    NotAGroupElement,
    #[error("element budget of {cap} exceeded at length {length}")]
    BudgetExceeded { cap: usize, length: usize },
    #[error("node set is not spherical")]
    NotSpherical,
    #[error("bad arguments: {0}")]
    BadArguments(String),
}
