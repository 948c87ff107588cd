//! Finite continuations of reflections in Coxeter groups.
//!
//! [`classifier`] decides `FC(r_a)` from the Coxeter graph alone;
//! [`engine`] computes it by brute force in the Tits representation so the
//! two can be compared.

mod error;
pub mod classifier;
pub mod engine;
pub mod field;
pub mod finite_type;
pub mod fixtures;
pub mod graph;
pub mod par;

pub use classifier::{finite_continuation, finite_continuations, rigidity_report, Case, FcResult, Visibility, Witness};
pub use engine::{Limits, RootEngine};
pub use error::{Error, Result};
pub use finite_type::{classify_connected, FiniteType};
pub use graph::{CoxeterMatrix, Label, NodeSet};
