use std::fs;
use std::path::Path;

use cubesym_core::{Certificate, FamilySpec, Witness};
use serde::Serialize;
use serde_json::Value;

use crate::error::{CliError, Result};
use crate::param::{family_group, Budgets};

#[derive(Debug, Serialize)]
struct Verdict {
    family: String,
    certificate: &'static str,
    size: usize,
    accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
}

/// Every object carrying both a `family` and a `witness`, depth first.
fn targets<'a>(v: &'a Value, out: &mut Vec<&'a serde_json::Map<String, Value>>) {
    match v {
        Value::Object(map) => {
            if map.contains_key("family") && map.contains_key("witness") {
                out.push(map);
            }
            map.values().for_each(|x| targets(x, out));
        }
        Value::Array(items) => items.iter().for_each(|x| targets(x, out)),
        _ => {}
    }
}

fn kind(c: &Certificate) -> &'static str {
    match c {
        Certificate::DeterminingSet { .. } => "determining_set",
        Certificate::DistinguishingColoring { .. } => "distinguishing_coloring",
        Certificate::CostClass { .. } => "cost_class",
    }
}

fn check(obj: &serde_json::Map<String, Value>, budgets: &Budgets) -> Result<Verdict> {
    let spec: FamilySpec = serde_json::from_value(obj["family"].clone())?;
    let witness: Witness = serde_json::from_value(obj["witness"].clone())?;
    let group = family_group(&spec, budgets)?;
    let mut reason = None;
    if !witness.check(&group)? {
        reason = Some("certificate fails the stabilizer check".to_string());
    }
    if let Some(claimed) = obj.get("value").and_then(Value::as_u64) {
        if claimed as usize != witness.size() {
            reason = Some(format!("reported value {claimed} but certificate has size {}", witness.size()));
        }
    }
    Ok(Verdict {
        family: spec.name(),
        certificate: kind(&witness.certificate),
        size: witness.size(),
        accepted: reason.is_none(),
        reason,
    })
}

pub fn run(path: &Path, max_vertices: usize) -> Result<String> {
    let text = fs::read_to_string(path).map_err(CliError::io(path))?;
    let doc: Value = serde_json::from_str(&text)?;
    let mut found = Vec::new();
    targets(&doc, &mut found);
    if found.is_empty() {
        return Err(CliError::Usage(format!("{}: no witness to verify", path.display())));
    }
    let budgets = Budgets { max_vertices, node_budget: None };
    let verdicts = found.iter().map(|obj| check(obj, &budgets)).collect::<Result<Vec<_>>>()?;
    let rejected = verdicts.iter().filter(|v| !v.accepted).count();
    let out = serde_json::to_string_pretty(&serde_json::json!({
        "checked": verdicts.len(),
        "accepted": verdicts.len() - rejected,
        "results": verdicts,
    }))?;
    if rejected > 0 {
        println!("{out}");
        return Err(CliError::Rejected(format!("{rejected} witness(es) rejected")));
    }
    Ok(out)
}
