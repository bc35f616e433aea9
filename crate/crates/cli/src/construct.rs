use cubesym_core::constructions::{
    aq_cost_class, aq_det_witness, enhanced_det_number, fq_det_set, fq_dist_class, hamming_cost_bounds,
    hamming_det_number, hypercube_det_set, ltq_witnesses, q2_witnesses, Construction,
};
use cubesym_core::{Certificate, Witness};
use serde::Serialize;
use serde_json::json;

use crate::args::{ConstructArgs, ConstructionKind};
use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
struct Emitted {
    #[serde(flatten)]
    construction: Construction,
    /// Present when vertex indices fit in the graph encoding, so `verify` can re-check it.
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
}

fn emit(c: Construction, class: bool) -> Emitted {
    let witness = (c.words.iter().all(|&w| w <= u64::from(u32::MAX)) && c.family.positions().is_some_and(|n| n <= 32))
        .then(|| {
            let vertices = c.indices();
            let certificate = if class {
                Certificate::CostClass { vertices }
            } else {
                Certificate::DeterminingSet { vertices }
            };
            Witness { certificate, verified_by: c.method }
        });
    Emitted { construction: c, witness }
}

fn small(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| CliError::Usage(format!("-n {n} is too large")))
}

fn need(v: Option<u32>, flag: &str) -> Result<u32> {
    v.ok_or_else(|| CliError::Usage(format!("this construction needs -{flag}")))
}

pub fn run(args: &ConstructArgs) -> Result<String> {
    use ConstructionKind as K;
    let name = clap::ValueEnum::to_possible_value(&args.name).expect("no skipped variants").get_name().to_string();
    let mut failed: Vec<String> = Vec::new();
    let mut track = |label: &str, c: &Construction| {
        failed.extend(c.failed_checks().into_iter().map(|f| format!("{label}: {f}")));
        if c.checks.is_empty() {
            failed.push(format!("{label}: no checks could be run"));
        }
    };
    let body = match args.name {
        K::HypercubeDet | K::FqDetSet | K::FqDistClass | K::AqDet | K::AqCostClass => {
            let n = small(args.n)?;
            let (c, class) = match args.name {
                K::HypercubeDet => (hypercube_det_set(n)?, false),
                K::FqDetSet => (fq_det_set(n)?, false),
                K::FqDistClass => (fq_dist_class(n)?, true),
                K::AqDet => (aq_det_witness(n)?, false),
                _ => (aq_cost_class(n)?, true),
            };
            track("set", &c);
            serde_json::to_value(emit(c, class))?
        }
        K::Q2Witnesses => {
            let w = q2_witnesses(small(args.n)?)?;
            track("determining", &w.determining);
            track("class", &w.class);
            json!({ "determining": emit(w.determining, false), "class": emit(w.class, true) })
        }
        K::LtqWitnesses => {
            let w = ltq_witnesses(small(args.n)?)?;
            track("determining", &w.determining);
            track("class", &w.class);
            json!({ "determining": emit(w.determining, false), "class": emit(w.class, true) })
        }
        K::EnhancedDet => {
            let (n, k) = (small(args.n)?, need(args.k, "k")?);
            json!({ "n": n, "k": k, "value": enhanced_det_number(n, k)? })
        }
        K::HammingDet => serde_json::to_value(hamming_det_number(need(args.m, "m")?, args.n)?)?,
        K::HammingCost => {
            let (m, n) = (need(args.m, "m")?, small(args.n)?);
            json!({ "m": m, "n": n, "bounds": hamming_cost_bounds(m, n)? })
        }
    };
    let mut doc = json!({ "construction": name });
    if let (Some(out), serde_json::Value::Object(fields)) = (doc.as_object_mut(), body) {
        out.extend(fields);
    }
    let text = serde_json::to_string_pretty(&doc)?;
    if !failed.is_empty() {
        println!("{text}");
        return Err(CliError::Rejected(failed.join("; ")));
    }
    Ok(text)
}
