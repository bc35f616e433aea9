use std::fmt::Write as _;

use cubesym_core::constructions::{
    aq_cost_class, aq_det_witness, det_fq, det_hypercube, enhanced_det_number, fq_det_set, fq_dist_class,
    hamming_det_number, hypercube_det_set, ltq_witnesses, Construction,
};
use cubesym_core::{transitivity_report, Error, FamilySpec, Solver, TransitivityReport};
use serde::Serialize;

use crate::args::{TableFormat, TableKind, TablesArgs};
use crate::error::Result;
use crate::param::{family_group, Budgets};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellSource {
    /// Exact search on the graph.
    Searched,
    /// Closed form backed by a construction that passed its checks.
    Witness,
    /// Closed form only.
    Formula,
    /// Out of budget and no closed form available.
    Budget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub value: Option<u64>,
    pub source: CellSource,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Cell {
    fn searched(value: u64) -> Self {
        Cell { value: Some(value), source: CellSource::Searched, note: None }
    }

    fn budget(e: &Error) -> Self {
        Cell { value: None, source: CellSource::Budget, note: Some(e.to_string()) }
    }

    fn render(&self) -> String {
        match (self.value, self.source) {
            (Some(v), CellSource::Searched) => v.to_string(),
            (Some(v), CellSource::Witness) => format!("{v}w"),
            (Some(v), _) => format!("{v}f"),
            (None, _) if self.note.as_deref() == Some("not 2-distinguishable") => "-".into(),
            (None, _) => "?".into(),
        }
    }
}

fn budgets(args: &TablesArgs, max_vertices: usize) -> Budgets {
    Budgets { max_vertices: max_vertices.min(args.cell_vertices), node_budget: Some(args.node_budget) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Param {
    Det,
    Dist,
    Cost,
}

/// Exact value by search, `Ok(None)` when the graph is not 2-distinguishable.
fn search(spec: &FamilySpec, param: Param, b: &Budgets) -> std::result::Result<Option<u64>, Error> {
    let group = family_group(spec, b).map_err(|e| match e {
        crate::error::CliError::Core(e) => e,
        other => Error::Inconsistent(other.to_string()),
    })?;
    let solver = Solver::with_options(&group, b.solver_options());
    let report = match param {
        Param::Det => solver.determining_number(),
        Param::Dist => solver.distinguishing_number(),
        Param::Cost => solver.cost(),
    };
    match report {
        Ok(r) if r.witness.check(&group)? => Ok(Some(r.value)),
        Ok(_) => Err(Error::Inconsistent(format!("{} witness rejected", spec.name()))),
        Err(Error::NotTwoDistinguishable) => Ok(None),
        Err(e) => Err(e),
    }
}

fn witnessed(c: Result<Construction>, value: u64) -> Option<Cell> {
    match c {
        Ok(c) if c.verified => Some(Cell { value: Some(value), source: CellSource::Witness, note: None }),
        _ => None,
    }
}

fn formula(value: u64) -> Option<Cell> {
    Some(Cell { value: Some(value), source: CellSource::Formula, note: None })
}

fn wrap<T>(r: std::result::Result<T, Error>) -> Result<T> {
    r.map_err(Into::into)
}

/// Fallback when search is out of budget.
fn closed_form(spec: &FamilySpec, param: Param) -> Option<Cell> {
    use FamilySpec as F;
    match (spec, param) {
        (F::Hypercube { n }, Param::Det) => witnessed(wrap(hypercube_det_set(*n)), u64::from(det_hypercube(*n))),
        (F::Folded { n }, Param::Det) => witnessed(wrap(fq_det_set(*n)), u64::from(det_fq(*n))),
        (F::Augmented { n }, Param::Det) => {
            let c = wrap(aq_det_witness(*n)).ok()?;
            witnessed(Ok(c.clone()), c.size as u64)
        }
        (F::Augmented { n }, Param::Cost) if *n >= 4 => witnessed(wrap(aq_cost_class(*n)), 3),
        (F::LocallyTwisted { n }, Param::Det) if *n >= 4 => {
            witnessed(wrap(ltq_witnesses(*n)).map(|w| w.determining), 1)
        }
        (F::LocallyTwisted { n }, Param::Cost) if *n >= 4 => witnessed(wrap(ltq_witnesses(*n)).map(|w| w.class), 1),
        (F::Enhanced { n, k }, Param::Det) => formula(u64::from(enhanced_det_number(*n, *k).ok()?)),
        (F::Hamming { m, n }, Param::Det) => formula(u64::from(hamming_det_number(*m, u64::from(*n)).ok()?.value)),
        // A verified 2-distinguishing class in a graph with symmetry gives dist = 2.
        (_, Param::Dist) => {
            let class = match spec {
                F::Augmented { n } if *n >= 4 => wrap(aq_cost_class(*n)),
                F::LocallyTwisted { n } if *n >= 4 => wrap(ltq_witnesses(*n)).map(|w| w.class),
                F::Folded { n } if *n >= 4 => wrap(fq_dist_class(*n)),
                _ => return None,
            };
            witnessed(class, 2)
        }
        _ => None,
    }
}

fn cell(spec: &FamilySpec, param: Param, b: &Budgets) -> Cell {
    match search(spec, param, b) {
        Ok(Some(v)) => Cell::searched(v),
        Ok(None) => Cell { value: None, source: CellSource::Searched, note: Some("not 2-distinguishable".into()) },
        Err(e) => closed_form(spec, param).unwrap_or_else(|| Cell::budget(&e)),
    }
}

#[derive(Debug, Serialize)]
struct EnhancedCell {
    n: u32,
    k: u32,
    #[serde(flatten)]
    cell: Cell,
}

#[derive(Debug, Serialize)]
struct TransitivityRow {
    family: FamilySpec,
    name: String,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    report: Option<TransitivityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Debug, Serialize)]
struct SummaryRow {
    family: FamilySpec,
    name: String,
    det: Cell,
    dist: Cell,
    cost: Cell,
}

fn rows_for(n: u32, k: u32, m: u32) -> Vec<FamilySpec> {
    [
        FamilySpec::Hypercube { n },
        FamilySpec::HypercubePower { n, k },
        FamilySpec::Hamming { m, n },
        FamilySpec::Folded { n },
        FamilySpec::Enhanced { n, k },
        FamilySpec::Augmented { n },
        FamilySpec::LocallyTwisted { n },
    ]
    .into_iter()
    .filter(|s| s.validate().is_ok())
    .collect()
}

fn enhanced_dist(args: &TablesArgs, b: &Budgets) -> (serde_json::Value, String) {
    let mut cells = Vec::new();
    for k in 1..args.n_max.max(2) {
        for n in args.n_min.max(k + 1)..=args.n_max {
            let spec = FamilySpec::Enhanced { n, k };
            let mut c = cell(&spec, Param::Dist, b);
            if c.value.is_none() && n >= 6 {
                c = formula(2).expect("formula cell");
            }
            cells.push(EnhancedCell { n, k, cell: c });
        }
    }
    let mut text = format!("{:>6}", "k \\ n");
    for n in args.n_min..=args.n_max {
        write!(text, "{n:>6}").unwrap();
    }
    text.push('\n');
    for k in 1..args.n_max.max(2) {
        write!(text, "{k:>6}").unwrap();
        for n in args.n_min..=args.n_max {
            let shown = cells.iter().find(|c| c.n == n && c.k == k).map_or("·".into(), |c| c.cell.render());
            write!(text, "{shown:>6}").unwrap();
        }
        text.push('\n');
    }
    (serde_json::json!({ "table": "enhanced-dist", "cells": cells }), text)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn transitivity(args: &TablesArgs, b: &Budgets) -> (serde_json::Value, String) {
    let rows: Vec<TransitivityRow> = rows_for(args.n, args.k, args.m)
        .into_iter()
        .map(|spec| {
            let result = family_group(&spec, b).and_then(|g| Ok(transitivity_report(&g)?));
            let (report, note) = match result {
                Ok(r) => (Some(r), None),
                Err(e) => (None, Some(e.to_string())),
            };
            TransitivityRow { name: spec.name(), family: spec, report, note }
        })
        .collect();
    let mut text = format!("{:<10}{:>8}{:>8}{:>8}{:>10}\n", "graph", "vertex", "edge", "arc", "distance");
    for r in &rows {
        match &r.report {
            Some(t) => writeln!(
                text,
                "{:<10}{:>8}{:>8}{:>8}{:>10}",
                r.name,
                yes_no(t.vertex_transitive),
                yes_no(t.edge_transitive),
                yes_no(t.arc_transitive),
                yes_no(t.distance_transitive)
            ),
            None => writeln!(text, "{:<10}{:>8}{:>8}{:>8}{:>10}", r.name, "?", "?", "?", "?"),
        }
        .unwrap();
    }
    (serde_json::json!({ "table": "transitivity", "n": args.n, "rows": rows }), text)
}

fn summary(args: &TablesArgs, b: &Budgets) -> (serde_json::Value, String) {
    let rows: Vec<SummaryRow> = rows_for(args.n, args.k, args.m)
        .into_iter()
        .map(|spec| SummaryRow {
            name: spec.name(),
            det: cell(&spec, Param::Det, b),
            dist: cell(&spec, Param::Dist, b),
            cost: cell(&spec, Param::Cost, b),
            family: spec,
        })
        .collect();
    let mut text = format!("{:<10}{:>6}{:>6}{:>6}\n", "graph", "det", "dist", "cost");
    for r in &rows {
        writeln!(text, "{:<10}{:>6}{:>6}{:>6}", r.name, r.det.render(), r.dist.render(), r.cost.render()).unwrap();
    }
    (serde_json::json!({ "table": "summary", "n": args.n, "rows": rows }), text)
}

pub fn run(args: &TablesArgs, max_vertices: usize) -> Result<String> {
    let b = budgets(args, max_vertices);
    let (json, mut text) = match args.which {
        TableKind::EnhancedDist => enhanced_dist(args, &b),
        TableKind::Transitivity => transitivity(args, &b),
        TableKind::Summary => summary(args, &b),
    };
    Ok(match args.format {
        TableFormat::Json => serde_json::to_string_pretty(&json)?,
        TableFormat::Table => {
            if args.which != TableKind::Transitivity {
                text.push_str("w: closed form with a checked construction, f: closed form, ?: out of budget\n");
            }
            text.trim_end().to_string()
        }
    })
}
