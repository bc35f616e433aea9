//! Determining number, distinguishing number, cost of 2-distinguishing and
//! transitivity, each with a checkable witness.

mod engine;
mod transitivity;

use std::cell::OnceCell;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::autgroup::{search_automorphisms, Method, PermGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use engine::{coloring_search, Mode, Outcome, SetSearch};

pub use transitivity::{transitivity_report, TransitivityReport};

/// A vertex coloring with colors `1..=d`. Unused colors are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    pub d: u32,
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, d: u32) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > d) {
            return Err(Error::ParameterOutOfRange(format!("color {c} outside 1..={d}")));
        }
        Ok(Self { d, colors })
    }

    pub fn uniform(n: usize) -> Self {
        Self { d: 1, colors: vec![1; n] }
    }

    /// Two colors: `class` gets color 2, everything else color 1.
    pub fn from_class(n: usize, class: &[u32]) -> Result<Self> {
        let mut colors = vec![1; n];
        for &v in class {
            *colors.get_mut(v as usize).ok_or(Error::VertexOutOfRange(u64::from(v)))? = 2;
        }
        Ok(Self { d: 2, colors })
    }

    /// Members of each color, indexed by color minus one.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.d as usize];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c as usize - 1].push(v as u32);
        }
        out
    }

    pub fn unused_colors(&self) -> Vec<u32> {
        let classes = self.classes();
        (1..=self.d).filter(|&c| classes[c as usize - 1].is_empty()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    Det,
    Dist,
    Cost,
}

impl std::fmt::Display for Parameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Parameter::Det => "det",
            Parameter::Dist => "dist",
            Parameter::Cost => "cost",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    DeterminingSet { vertices: Vec<u32> },
    DistinguishingColoring { coloring: Coloring },
    CostClass { vertices: Vec<u32> },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Witness {
    #[serde(flatten)]
    pub certificate: Certificate,
    pub verified_by: Method,
}

impl Witness {
    /// Re-checks the certificate against `group`.
    pub fn check(&self, group: &PermGroup) -> Result<bool> {
        match &self.certificate {
            Certificate::DeterminingSet { vertices } => is_determining_set(group, vertices),
            Certificate::DistinguishingColoring { coloring } => is_distinguishing(group, coloring),
            Certificate::CostClass { vertices } => is_distinguishing_class(group, vertices),
        }
    }

    /// The number the certificate bounds: set size or color count.
    pub fn size(&self) -> usize {
        match &self.certificate {
            Certificate::DeterminingSet { vertices } | Certificate::CostClass { vertices } => vertices.len(),
            Certificate::DistinguishingColoring { coloring } => coloring.d as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub parameter: Parameter,
    pub value: u64,
    pub witness: Witness,
    pub verified_by: Method,
    pub group_order: u128,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Node budget for each branch of an exact search.
    pub node_budget: u64,
    /// Node budget per branch and size when looking for any 2-distinguishing class.
    pub dist_size_budget: u64,
    /// Most stabilizer images held in memory at once.
    pub stored_entries: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { node_budget: 200_000_000, dist_size_budget: 2_000_000, stored_entries: 1 << 25 }
    }
}

/// Whether the pointwise stabilizer of `set` is trivial.
pub fn is_determining_set(group: &PermGroup, set: &[u32]) -> Result<bool> {
    group.pointwise_stabilizer(set)?.is_trivial()
}

/// Whether only the identity preserves every color class.
pub fn is_distinguishing(group: &PermGroup, coloring: &Coloring) -> Result<bool> {
    let n = group.graph().vertex_count();
    if coloring.colors.len() != n {
        return Err(Error::DimensionMismatch {
            expected: format!("{n} colors"),
            got: coloring.colors.len().to_string(),
        });
    }
    engine::coloring_is_distinguishing(group, &coloring.colors)
}

/// Whether `class` and its complement form a distinguishing 2-coloring.
pub fn is_distinguishing_class(group: &PermGroup, class: &[u32]) -> Result<bool> {
    group.setwise_stabilizer(class)?.is_trivial()
}

/// Whether the graph has no nontrivial automorphism.
pub fn is_asymmetric(graph: &Graph) -> Result<bool> {
    search_automorphisms(Arc::new(graph.clone()))?.is_trivial()
}

/// Computes the three parameters of one group, sharing work between them.
pub struct Solver<'a> {
    group: &'a PermGroup,
    options: SolverOptions,
    search: OnceCell<SetSearch<'a>>,
    det: OnceCell<Vec<u32>>,
    trivial: OnceCell<bool>,
}

impl<'a> Solver<'a> {
    pub fn new(group: &'a PermGroup) -> Self {
        Self::with_options(group, SolverOptions::default())
    }

    pub fn with_options(group: &'a PermGroup, options: SolverOptions) -> Self {
        Self { group, options, search: OnceCell::new(), det: OnceCell::new(), trivial: OnceCell::new() }
    }

    fn search(&self) -> Result<&SetSearch<'a>> {
        if self.search.get().is_none() {
            let s = SetSearch::new(self.group, self.options.stored_entries)?;
            let _ = self.search.set(s);
        }
        Ok(self.search.get().unwrap())
    }

    fn is_trivial(&self) -> Result<bool> {
        if let Some(&t) = self.trivial.get() {
            return Ok(t);
        }
        let t = self.group.is_trivial()?;
        let _ = self.trivial.set(t);
        Ok(t)
    }

    /// Search nodes visited so far.
    pub fn nodes(&self) -> u64 {
        self.search.get().map_or(0, |s| s.nodes.load(std::sync::atomic::Ordering::Relaxed))
    }

    /// The lex-least determining set of minimum size.
    pub fn determining_set(&self) -> Result<Vec<u32>> {
        if let Some(d) = self.det.get() {
            return Ok(d.clone());
        }
        let set = if self.is_trivial()? {
            Vec::new()
        } else {
            let search = self.search()?;
            let mut found = None;
            for size in 1..=self.group.graph().vertex_count() {
                match search.find(size, Mode::Pointwise, self.options.node_budget)? {
                    Outcome::Found(set) => {
                        found = Some(set);
                        break;
                    }
                    Outcome::Exhausted => {}
                    Outcome::Budget => return Err(Error::SearchBudgetExceeded(self.options.node_budget)),
                }
            }
            found.ok_or_else(|| Error::Inconsistent("no determining set found".into()))?
        };
        let _ = self.det.set(set.clone());
        Ok(set)
    }

    fn report(&self, parameter: Parameter, value: u64, certificate: Certificate, start: Instant) -> Result<SymmetryReport> {
        let witness = Witness { certificate, verified_by: self.group.method() };
        if !witness.check(self.group)? {
            return Err(Error::Inconsistent(format!("{parameter} witness rejected by its checker")));
        }
        Ok(SymmetryReport {
            parameter,
            value,
            witness,
            verified_by: self.group.method(),
            group_order: self.group.order()?,
            elapsed_ms: start.elapsed().as_millis() as u64,
        })
    }

    pub fn determining_number(&self) -> Result<SymmetryReport> {
        let start = Instant::now();
        let set = self.determining_set()?;
        self.report(Parameter::Det, set.len() as u64, Certificate::DeterminingSet { vertices: set }, start)
    }

    /// Some 2-distinguishing class, if one exists. Tries the minimum
    /// determining set first, which works when its induced subgraph is
    /// asymmetric, then searches by increasing size under a per-size budget.
    fn two_distinguishing_class(&self) -> Result<Option<Vec<u32>>> {
        let det = self.determining_set()?;
        let graph = self.group.graph();
        if is_asymmetric(&graph.induced_subgraph(&det)?)? {
            return Ok(Some(det));
        }
        let search = self.search()?;
        let mut incomplete = false;
        for size in det.len()..=graph.vertex_count() / 2 {
            match search.find(size, Mode::Setwise, self.options.dist_size_budget)? {
                Outcome::Found(set) => return Ok(Some(set)),
                Outcome::Exhausted => {}
                Outcome::Budget => incomplete = true,
            }
        }
        if incomplete {
            return Err(Error::SearchBudgetExceeded(self.options.dist_size_budget));
        }
        Ok(None)
    }

    pub fn distinguishing_number(&self) -> Result<SymmetryReport> {
        let start = Instant::now();
        let n = self.group.graph().vertex_count();
        if self.is_trivial()? {
            let coloring = Coloring::uniform(n);
            return self.report(Parameter::Dist, 1, Certificate::DistinguishingColoring { coloring }, start);
        }
        if let Some(class) = self.two_distinguishing_class()? {
            let coloring = Coloring::from_class(n, &class)?;
            return self.report(Parameter::Dist, 2, Certificate::DistinguishingColoring { coloring }, start);
        }
        for d in 3..=n as u32 {
            match coloring_search(self.group, d, self.options.node_budget, self.options.stored_entries)? {
                Outcome::Found(colors) => {
                    let coloring = Coloring::new(colors, d)?;
                    return self.report(
                        Parameter::Dist,
                        u64::from(d),
                        Certificate::DistinguishingColoring { coloring },
                        start,
                    );
                }
                Outcome::Exhausted => {}
                Outcome::Budget => return Err(Error::SearchBudgetExceeded(self.options.node_budget)),
            }
        }
        Err(Error::Inconsistent("no distinguishing coloring found".into()))
    }

    /// Minimum size of a class with trivial setwise stabilizer, searched
    /// upward from the determining number.
    pub fn cost(&self) -> Result<SymmetryReport> {
        let start = Instant::now();
        if self.is_trivial()? {
            return Err(Error::NotTwoDistinguishable);
        }
        let det = self.determining_set()?;
        let search = self.search()?;
        for size in det.len()..=self.group.graph().vertex_count() / 2 {
            match search.find(size, Mode::Setwise, self.options.node_budget)? {
                Outcome::Found(set) => {
                    return self.report(Parameter::Cost, set.len() as u64, Certificate::CostClass { vertices: set }, start)
                }
                Outcome::Exhausted => {}
                Outcome::Budget => return Err(Error::SearchBudgetExceeded(self.options.node_budget)),
            }
        }
        Err(Error::NotTwoDistinguishable)
    }
}

pub fn determining_number(group: &PermGroup) -> Result<SymmetryReport> {
    Solver::new(group).determining_number()
}

pub fn distinguishing_number(group: &PermGroup) -> Result<SymmetryReport> {
    Solver::new(group).distinguishing_number()
}

pub fn cost_2dist(group: &PermGroup) -> Result<SymmetryReport> {
    Solver::new(group).cost()
}

#[cfg(test)]
mod tests;
