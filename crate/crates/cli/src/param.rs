use std::sync::Arc;
use std::time::Instant;

use cubesym_core::autgroup::automorphism_group_with;
use cubesym_core::oracle::{
    enumerate_automorphisms_naive, oracle_cost, oracle_determining_number, oracle_distinguishing_number,
    OracleResult,
};
use cubesym_core::{
    build_family_capped, Error, FamilySpec, Graph, GroupLimits, Method, PermGroup, Solver, SolverOptions,
    SymmetryReport, TransitivityReport, Witness,
};
use serde::{Deserialize, Serialize};

use crate::args::{ParamArgs, ParamKind};
use crate::cache::ResultCache;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub value: Option<u128>,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamOutput {
    pub family: FamilySpec,
    pub parameter: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transitivity: Option<TransitivityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub method: Method,
    pub group_order: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
    pub elapsed_ms: u64,
}

pub struct Budgets {
    pub max_vertices: usize,
    pub node_budget: Option<u64>,
}

impl Budgets {
    pub fn group_limits(&self) -> GroupLimits {
        let mut limits = GroupLimits::default();
        if let Some(b) = self.node_budget {
            limits.node_budget = b;
        }
        limits
    }

    pub fn solver_options(&self) -> SolverOptions {
        let mut options = SolverOptions::default();
        if let Some(b) = self.node_budget {
            options.node_budget = b;
            options.dist_size_budget = options.dist_size_budget.min(b);
        }
        options
    }
}

pub fn family_group(spec: &FamilySpec, budgets: &Budgets) -> Result<PermGroup> {
    let g = build_family_capped(spec, budgets.max_vertices)?;
    Ok(automorphism_group_with(Arc::new(g), budgets.group_limits())?)
}

fn from_report(spec: &FamilySpec, report: SymmetryReport, group: &PermGroup) -> Result<ParamOutput> {
    if !report.witness.check(group)? {
        return Err(Error::Inconsistent(format!("{} witness for {} failed its own check", report.parameter, spec.name())).into());
    }
    Ok(ParamOutput {
        family: spec.clone(),
        parameter: report.parameter.to_string(),
        value: Some(u128::from(report.value)),
        transitivity: None,
        note: None,
        method: report.verified_by,
        group_order: report.group_order,
        witness: Some(report.witness),
        oracle: None,
        elapsed_ms: 0,
    })
}

/// Computes a report with its witness; the oracle is added separately.
pub fn compute(spec: &FamilySpec, parameter: ParamKind, budgets: &Budgets) -> Result<ParamOutput> {
    let start = Instant::now();
    let group = family_group(spec, budgets)?;
    let solver = Solver::with_options(&group, budgets.solver_options());
    let bare = |value, transitivity, note| -> Result<ParamOutput> {
        Ok(ParamOutput {
            family: spec.clone(),
            parameter: parameter.name().into(),
            value,
            transitivity,
            note,
            method: group.method(),
            group_order: group.order()?,
            witness: None,
            oracle: None,
            elapsed_ms: 0,
        })
    };
    let mut out = match parameter {
        ParamKind::Det => from_report(spec, solver.determining_number()?, &group)?,
        ParamKind::Dist => from_report(spec, solver.distinguishing_number()?, &group)?,
        ParamKind::Cost => match solver.cost() {
            Ok(report) => from_report(spec, report, &group)?,
            Err(Error::NotTwoDistinguishable) => bare(None, None, Some("not 2-distinguishable".into()))?,
            Err(e) => return Err(e.into()),
        },
        ParamKind::AutOrder => bare(Some(group.order()?), None, None)?,
        ParamKind::Transitivity => bare(None, Some(cubesym_core::transitivity_report(&group)?), None)?,
    };
    out.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}

fn oracle_value(r: std::result::Result<OracleResult, Error>) -> Result<Option<u128>> {
    match r {
        Ok(r) => Ok(Some(u128::from(r.value))),
        Err(Error::NotTwoDistinguishable) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn oracle_check(out: &ParamOutput, graph: &Graph) -> Result<OracleCheck> {
    let value = match out.parameter.as_str() {
        "det" => oracle_value(oracle_determining_number(graph))?,
        "dist" => oracle_value(oracle_distinguishing_number(graph))?,
        "cost" => oracle_value(oracle_cost(graph))?,
        "aut-order" => Some(enumerate_automorphisms_naive(graph)?.len() as u128),
        other => return Err(CliError::Usage(format!("no oracle for {other}"))),
    };
    Ok(OracleCheck { agrees: value == out.value, value })
}

pub fn run(args: &ParamArgs, cache: Option<&ResultCache>, max_vertices: usize) -> Result<String> {
    let spec = args.family.spec()?;
    if args.oracle && args.parameter == ParamKind::Transitivity {
        return Err(CliError::Usage("no oracle for transitivity".into()));
    }
    let budgets = Budgets { max_vertices, node_budget: args.node_budget };
    let key = ResultCache::key(&spec, args.parameter.name());
    let mut stored = cache.and_then(|c| c.get(&key)).map(|r| r.output);
    let mut dirty = false;
    let mut out = match stored.take() {
        Some(out) => out,
        None => {
            dirty = true;
            compute(&spec, args.parameter, &budgets)?
        }
    };
    if args.oracle && out.oracle.is_none() {
        let graph = build_family_capped(&spec, max_vertices)?;
        out.oracle = Some(oracle_check(&out, &graph)?);
        dirty = true;
    }
    if dirty {
        if let Some(c) = cache {
            c.put(&key, &out)?;
        }
    }
    let disagreement = out.oracle.as_ref().is_some_and(|o| !o.agrees);
    let mut shown = out;
    if !args.witness {
        shown.witness = None;
    }
    if !args.oracle {
        shown.oracle = None;
    }
    let text = serde_json::to_string_pretty(&shown)?;
    if disagreement {
        println!("{text}");
        return Err(CliError::Rejected(format!("oracle disagrees on {} of {}", args.parameter.name(), spec.name())));
    }
    Ok(text)
}
