//! Explicit witness constructions for each family, each checked against the
//! automorphism group (or a matrix criterion when the graph is too large to build).

mod folded;
mod hamming;
mod matrix;
mod witnesses;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::autgroup::{automorphism_group, search_automorphisms, Method, PermGroup};
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::graph::{Graph, Labeling};
use crate::vertex::format_word;

pub use folded::{
    det_fq, fq_column_sum_condition, fq_det_set, fq_determining_by_matrix, fq_dist_class, fq_dist_walk, fq_is_exceptional,
    FQ_DIST_CLASS_4, FQ_DIST_CLASS_5, TREE_SETS,
};
pub use hamming::{
    hamming_cost_bounds, hamming_det_number, hamming_det_thresholds, stirling2, stirling2_sum, CostBounds,
    HammingDet,
};
pub use matrix::{char_matrix_is_determining, characteristic_matrix, columns_isomorphic, CharMatrix};
pub use witnesses::{
    aq_cost_class, aq_det_witness, det_hypercube, enhanced_det_number, hypercube_det_set, ltq_witnesses,
    q2_witnesses, LtqWitnesses, Q2Witnesses,
};

/// Largest graph built to verify a construction.
pub const VERIFY_VERTEX_LIMIT: usize = 1 << 20;
/// Largest number of arcs in a graph built to verify a construction.
pub const VERIFY_ARC_LIMIT: u64 = 1 << 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// A constructed vertex set together with the checks it was put through.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub family: FamilySpec,
    pub words: Vec<u64>,
    pub vertices: Vec<String>,
    pub size: usize,
    pub checks: Vec<Check>,
    pub verified: bool,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Construction {
    fn new(family: FamilySpec, n: u32, words: Vec<u64>, method: Method) -> Self {
        let vertices = words.iter().map(|&w| format_word(w, n, 2)).collect();
        Self { family, size: words.len(), words, vertices, checks: Vec::new(), verified: false, method, notes: Vec::new() }
    }

    fn check(&mut self, name: &str, passed: bool) {
        self.checks.push(Check { name: name.into(), passed });
        self.verified = self.checks.iter().all(|c| c.passed);
    }

    /// Vertex indices, usable when the family graph was built.
    pub fn indices(&self) -> Vec<u32> {
        self.words.iter().map(|&w| w as u32).collect()
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }
}

pub(crate) fn ceil_lg(n: u64) -> u32 {
    if n <= 1 {
        0
    } else {
        64 - (n - 1).leading_zeros()
    }
}

/// The family's automorphism group, or `None` when the graph is past the verification
/// limit or too large to search.
pub(crate) fn family_group(spec: &FamilySpec) -> Result<Option<PermGroup>> {
    let n = spec.positions().unwrap_or(64);
    if n >= 64 || (1u64 << n) as usize > VERIFY_VERTEX_LIMIT {
        return Ok(None);
    }
    if spec.expected_degree().is_some_and(|d| (1u64 << n).saturating_mul(d) > VERIFY_ARC_LIMIT) {
        return Ok(None);
    }
    match automorphism_group(Arc::new(build_family(spec)?)) {
        Ok(g) => Ok(Some(g)),
        Err(Error::SizeGuard { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Subgraph induced by `words` under an adjacency predicate, built without the full graph.
pub(crate) fn induced_by_words(words: &[u64], adjacent: impl Fn(u64, u64) -> bool) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, &a) in words.iter().enumerate() {
        for (j, &b) in words.iter().enumerate().skip(i + 1) {
            if adjacent(a, b) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::from_edges(words.len(), edges, FamilySpec::Explicit { name: "induced".into() }, Labeling::Indices)
}

pub(crate) fn is_asymmetric_graph(g: Graph) -> Result<bool> {
    search_automorphisms(Arc::new(g))?.is_trivial()
}

pub(crate) fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ParameterOutOfRange(msg()))
    }
}

#[cfg(test)]
mod tests;
