use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cubesym_core::io::{from_graph6, from_json};
use serde_json::Value;
use tempfile::TempDir;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubesym"))
        .args(args)
        .env("CUBE_SYM_CACHE", cache)
        .env_remove("CUBE_SYM_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn ok(cache: &Path, args: &[&str]) -> String {
    let out = run(cache, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(cache: &Path, args: &[&str]) -> Value {
    serde_json::from_str(&ok(cache, args)).unwrap()
}

fn code(cache: &Path, args: &[&str]) -> i32 {
    run(cache, args).status.code().unwrap()
}

#[test]
fn gen_formats() {
    let dir = TempDir::new().unwrap();
    let line = ok(dir.path(), &["gen", "folded", "-n", "4", "--format", "graph6"]);
    let g = from_graph6(line.trim()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (16, 40));

    let edges = ok(dir.path(), &["gen", "hamming", "-m", "3", "-n", "2", "--format", "edgelist"]);
    assert_eq!(edges.lines().count(), 18);

    let g = from_json(&ok(dir.path(), &["gen", "enhanced", "-n", "3", "-k", "2"])).unwrap();
    assert_eq!(g.edge_count(), 16);

    let file = dir.path().join("q3.g6");
    ok(dir.path(), &["gen", "hypercube", "-n", "3", "--format", "graph6", "-o", file.to_str().unwrap()]);
    assert_eq!(from_graph6(fs::read_to_string(&file).unwrap().trim()).unwrap().edge_count(), 12);
}

#[test]
fn parameter_values() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    assert_eq!(json(c, &["param", "det", "augmented", "-n", "6"])["value"], 2);
    assert_eq!(json(c, &["param", "dist", "enhanced", "-n", "6", "-k", "4"])["value"], 2);
    let cost = json(c, &["param", "cost", "hypercube", "-n", "4", "--oracle"]);
    assert_eq!(cost["value"], 5);
    assert_eq!(cost["oracle"]["agrees"], true);
    assert!(cost.get("witness").is_none());
    assert_eq!(json(c, &["param", "aut-order", "folded", "-n", "4"])["value"], 1920);
    let t = json(c, &["param", "transitivity", "ltq", "-n", "4"]);
    assert_eq!(t["transitivity"]["vertex_transitive"], false);
    let q3 = json(c, &["param", "cost", "hypercube", "-n", "3"]);
    assert!(q3.get("value").is_none());
    assert_eq!(q3["note"], "not 2-distinguishable");
}

#[test]
fn cache_is_transparent() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let args = ["param", "dist", "folded", "-n", "5", "--witness"];
    let first = ok(c, &args);
    let second = ok(c, &args);
    assert_eq!(first, second);
    assert!(fs::read_dir(c).unwrap().count() >= 1);

    let strip = |s: &str| {
        let mut v: Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let mut uncached = args.to_vec();
    uncached.push("--no-cache");
    assert_eq!(strip(&first), strip(&ok(c, &uncached)));

    // A record from another version is ignored and rewritten.
    let path = c.join("folded-n5-dist.json");
    let mut record: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    record["tool_version"] = "0.0.0-other".into();
    record["output"]["value"] = 99.into();
    fs::write(&path, record.to_string()).unwrap();
    assert_eq!(json(c, &args)["value"], 2);
    let rewritten: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rewritten["tool_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn verify_round_trips() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let cases: Vec<Vec<&str>> = vec![
        vec!["param", "det", "hypercube", "-n", "5", "--witness"],
        vec!["param", "dist", "hypercube", "-n", "3", "--witness"],
        vec!["param", "cost", "augmented", "-n", "4", "--witness"],
        vec!["param", "det", "power", "-n", "4", "-k", "2", "--witness"],
        vec!["construct", "fq-dist-class", "-n", "6"],
        vec!["construct", "fq-det-set", "-n", "9"],
        vec!["construct", "hypercube-det", "-n", "10"],
        vec!["construct", "aq-det", "-n", "7"],
        vec!["construct", "aq-cost-class", "-n", "5"],
        vec!["construct", "ltq-witnesses", "-n", "5"],
        vec!["construct", "q2-witnesses", "-n", "6"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let file = c.join(format!("w{i}.json"));
        fs::write(&file, ok(c, args)).unwrap();
        let report = json(c, &["verify", file.to_str().unwrap()]);
        assert!(report["checked"].as_u64().unwrap() >= 1, "{args:?}");
        assert_eq!(report["checked"], report["accepted"], "{args:?}");
    }

    let file = c.join("tampered.json");
    let mut w = json(c, &["param", "det", "hypercube", "-n", "4", "--witness"]);
    w["witness"]["vertices"] = serde_json::json!([0, 1]);
    w["value"] = 2.into();
    fs::write(&file, w.to_string()).unwrap();
    assert_eq!(code(c, &["verify", file.to_str().unwrap()]), 3);

    let empty = c.join("empty.json");
    fs::write(&empty, "{}").unwrap();
    assert_eq!(code(c, &["verify", empty.to_str().unwrap()]), 1);
}

#[test]
fn constructions() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let fq = json(c, &["construct", "fq-dist-class", "-n", "4"]);
    assert_eq!(fq["verified"], true);
    assert_eq!(fq["size"], 8);
    let aq = json(c, &["construct", "aq-cost-class", "-n", "5"]);
    assert_eq!(aq["vertices"], serde_json::json!(["00000", "10001", "01110"]));
    let h = json(c, &["construct", "hamming-det", "-m", "3", "-n", "3"]);
    assert_eq!((h["value"].as_u64(), h["s_r_m"].as_str(), h["s_r_m1"].as_str()), (Some(3), Some("1"), Some("3")));
    assert_eq!(json(c, &["construct", "enhanced-det", "-n", "6", "-k", "2"])["value"], 5);
    assert_eq!(json(c, &["construct", "hamming-cost", "-m", "3", "-n", "3"])["bounds"]["kind"], "range");
    // The class part of the squared-cube witness does not hold at n = 4.
    assert_eq!(code(c, &["construct", "q2-witnesses", "-n", "4"]), 3);
}

#[test]
fn tables() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    let t = json(c, &["tables", "enhanced-dist", "--n-max", "5", "--format", "json"]);
    let cells = t["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 10);
    let at = |n: u64, k: u64| {
        cells.iter().find(|x| x["n"] == n && x["k"] == k).map(|x| (x["value"].as_u64(), x["source"].clone())).unwrap()
    };
    assert_eq!(at(2, 1), (Some(4), "searched".into()));
    assert_eq!(at(3, 1), (Some(5), "searched".into()));
    assert_eq!(at(5, 4), (Some(2), "searched".into()));

    let t = json(c, &["tables", "transitivity", "--n", "3", "--format", "json"]);
    let q3 = &t["rows"][0];
    assert_eq!(q3["name"], "Q3");
    for key in ["vertex_transitive", "edge_transitive", "arc_transitive", "distance_transitive"] {
        assert_eq!(q3[key], true);
    }
    let text = ok(c, &["tables", "transitivity", "--n", "3"]);
    assert!(text.lines().any(|l| l.starts_with("LTQ3")));
}

#[test]
fn export_formats() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    ok(c, &["param", "det", "hypercube", "-n", "4"]);
    ok(c, &["param", "transitivity", "hypercube", "-n", "3"]);
    let all = json(c, &["export"]);
    assert_eq!(all.as_array().unwrap().len(), 2);
    let csv = ok(c, &["export", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "family,params,parameter,value,method,group_order,elapsed_ms");
    assert!(lines.iter().any(|l| l.starts_with("hypercube,n=4,det,3,structured,384,")));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let c = dir.path();
    assert_eq!(code(c, &["param", "det", "enhanced", "-n", "4"]), 1);
    assert_eq!(code(c, &["param", "det", "enhanced", "-n", "4", "-k", "4"]), 1);
    assert_eq!(code(c, &["gen", "cube", "-n", "3"]), 1);
    assert_eq!(code(c, &["--help"]), 0);
    assert_eq!(code(c, &["--version"]), 0);
    assert_eq!(code(c, &["--max-vertices", "8", "gen", "hypercube", "-n", "4"]), 2);
    assert_eq!(code(c, &["param", "det", "hypercube", "-n", "7", "--oracle", "--no-cache"]), 2);
    assert_eq!(code(c, &["param", "det", "hamming", "-m", "3", "-n", "6", "--node-budget", "1000", "--no-cache"]), 2);
    assert_eq!(code(c, &["param", "transitivity", "hypercube", "-n", "3", "--oracle"]), 1);
    assert_eq!(code(c, &["--threads", "2", "--seed", "7", "param", "det", "hypercube", "-n", "3"]), 0);
}
