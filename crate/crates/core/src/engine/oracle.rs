//! Brute-force finite continuation of a simple reflection.
//!
//! Every maximal finite subgroup is a conjugate `x⁻¹ W_J x` with `J` a
//! maximal spherical subset, and it contains `r_a` exactly when
//! `x(α_a) ∈ Φ_J`. Intersecting the conjugates found for all `x` up to a
//! given length gives a set that shrinks to `FC(r_a)` as the length grows.

use std::collections::HashSet;

use serde::Serialize;

use super::{Enumeration, GroupElement, RootEngine};
use crate::error::{Error, Result};
use crate::finite_type::maximal_spherical_subsets;
use crate::graph::NodeSet;
use crate::par;

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    /// The intersection, in the enumeration order of the first conjugate.
    pub elements: Vec<GroupElement>,
    /// Longest conjugating length fully searched.
    pub reached_length: usize,
    /// The element cap cut the search short of the requested length.
    pub truncated: bool,
    /// Number of `(x, J)` pairs with `r_a ∈ x⁻¹ W_J x`.
    pub conjugates: usize,
}

/// How an oracle set compares with a predicted visible subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OracleStatus {
    /// Equal as element sets.
    Match,
    /// The prediction is a proper subset; the search has not stabilised.
    Subset,
    Mismatch,
}

impl RootEngine {
    /// `FC(r_a)` over conjugators of length at most `max_length`; errors if
    /// the element cap is hit.
    pub fn oracle_fc(&self, a: usize, max_length: usize) -> Result<OracleOutcome> {
        let out = self.oracle_fc_partial(a, max_length)?;
        if out.truncated {
            return Err(Error::BudgetExceeded {
                cap: self.limits.element_cap,
                length: out.reached_length + 1,
            });
        }
        Ok(out)
    }

    /// As [`RootEngine::oracle_fc`], but returns whatever was reached under
    /// the cap.
    pub fn oracle_fc_partial(&self, a: usize, max_length: usize) -> Result<OracleOutcome> {
        if a >= self.rank() {
            return Err(Error::BadArguments(format!("node index {a} out of range")));
        }
        let parallel = self.limits.parallel;
        let maximal = maximal_spherical_subsets(&self.matrix);
        let subgroups: Vec<(NodeSet, HashSet<GroupElement>)> = maximal
            .iter()
            .map(|&j| Ok((j, self.parabolic(j)?.elements().cloned().collect())))
            .collect::<Result<_>>()?;
        let start = maximal
            .iter()
            .position(|j| j.contains(a))
            .expect("{a} is spherical, so some maximal spherical set contains it");
        let candidates: Vec<GroupElement> = self.parabolic(maximal[start])?.elements().cloned().collect();

        let en = Enumeration::run(
            &self.form,
            self.matrix.all(),
            max_length,
            self.limits.element_cap,
            parallel,
        );
        let indices: Vec<usize> = (0..en.len()).collect();
        let per_conjugator = par::map(parallel, &indices, |&i| {
            let x = en.element(i);
            let xa = x.column(a).support();
            let x_inv = en.element(en.inverse_of(i));
            let mut keep = vec![true; candidates.len()];
            let mut hits = 0;
            for (j, members) in &subgroups {
                if !xa.is_subset(*j) {
                    continue;
                }
                hits += 1;
                for (k, g) in candidates.iter().enumerate() {
                    if keep[k] && !members.contains(&x.compose(g).compose(x_inv)) {
                        keep[k] = false;
                    }
                }
            }
            (keep, hits)
        });
        let mut keep = vec![true; candidates.len()];
        let mut conjugates = 0;
        for (mask, hits) in per_conjugator {
            conjugates += hits;
            for (k, v) in mask.into_iter().enumerate() {
                keep[k] &= v;
            }
        }
        let elements = candidates
            .into_iter()
            .zip(keep)
            .filter_map(|(g, k)| k.then_some(g))
            .collect();
        Ok(OracleOutcome {
            elements,
            reached_length: en.reached_length(),
            truncated: en.is_truncated(),
            conjugates,
        })
    }

    /// Compares an oracle set with the elements of `W_J`.
    pub fn compare_with_visible(&self, oracle: &[GroupElement], j: NodeSet) -> Result<OracleStatus> {
        let predicted: HashSet<GroupElement> = self.parabolic(j)?.elements().cloned().collect();
        let found: HashSet<&GroupElement> = oracle.iter().collect();
        Ok(if predicted.len() == found.len() && predicted.iter().all(|g| found.contains(g)) {
            OracleStatus::Match
        } else if predicted.iter().all(|g| found.contains(g)) {
            OracleStatus::Subset
        } else {
            OracleStatus::Mismatch
        })
    }

    /// Spherical `K` with `W_K` equal to the given element set, if any.
    pub fn matching_visible(&self, oracle: &[GroupElement]) -> Result<Option<NodeSet>> {
        let found: HashSet<&GroupElement> = oracle.iter().collect();
        Ok(self
            .visible_finite_subgroups()?
            .into_iter()
            .find(|(_, members)| members.len() == found.len() && members.iter().all(|g| found.contains(g)))
            .map(|(k, _)| k))
    }
}
