use std::sync::Arc;

use super::*;
use crate::autgroup::{automorphism_group, search_automorphisms, structured_group};
use crate::family::{build_family, FamilySpec};
use crate::graph::{complete_graph, cycle_graph, path_graph, Graph};

fn group(spec: FamilySpec) -> PermGroup {
    automorphism_group(Arc::new(build_family(&spec).unwrap())).unwrap()
}

fn searched(g: Graph) -> PermGroup {
    search_automorphisms(Arc::new(g)).unwrap()
}

fn words(g: &PermGroup, labels: &[&str]) -> Vec<u32> {
    labels.iter().map(|l| g.graph().parse_vertex(l).unwrap()).collect()
}

/// All k-subsets of 0..n in lexicographic order.
fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn first_lex(g: &PermGroup, test: impl Fn(&[u32]) -> bool) -> Vec<u32> {
    let n = g.graph().vertex_count() as u32;
    (0..=n as usize).find_map(|k| subsets(n, k).into_iter().find(|s| test(s))).unwrap()
}

#[test]
fn coloring_helpers() {
    let c = Coloring::from_class(5, &[1, 3]).unwrap();
    assert_eq!(c.classes(), vec![vec![0, 2, 4], vec![1, 3]]);
    assert!(Coloring::new(vec![1, 4], 3).is_err());
    assert_eq!(Coloring::new(vec![1, 1, 3], 3).unwrap().unused_colors(), vec![2]);
}

#[test]
fn determining_numbers() {
    assert_eq!(determining_number(&group(FamilySpec::Hypercube { n: 4 })).unwrap().value, 3);
    assert_eq!(determining_number(&group(FamilySpec::Folded { n: 3 })).unwrap().value, 6);
    assert_eq!(determining_number(&group(FamilySpec::HypercubePower { n: 4, k: 2 })).unwrap().value, 4);
    assert_eq!(determining_number(&group(FamilySpec::Augmented { n: 3 })).unwrap().value, 4);
    assert_eq!(determining_number(&searched(complete_graph(4))).unwrap().value, 3);
    let trivial = determining_number(&searched(path_graph(1))).unwrap();
    assert_eq!(trivial.value, 0);
}

#[test]
fn distinguishing_numbers() {
    assert_eq!(distinguishing_number(&group(FamilySpec::Hypercube { n: 3 })).unwrap().value, 3);
    assert_eq!(distinguishing_number(&group(FamilySpec::Folded { n: 2 })).unwrap().value, 4);
    assert_eq!(distinguishing_number(&group(FamilySpec::Enhanced { n: 2, k: 1 })).unwrap().value, 4);
    assert_eq!(distinguishing_number(&group(FamilySpec::Augmented { n: 3 })).unwrap().value, 3);
    assert_eq!(distinguishing_number(&group(FamilySpec::Hypercube { n: 4 })).unwrap().value, 2);
    assert_eq!(distinguishing_number(&searched(path_graph(1))).unwrap().value, 1);
    assert_eq!(distinguishing_number(&searched(cycle_graph(5))).unwrap().value, 3);
    assert_eq!(distinguishing_number(&searched(cycle_graph(6))).unwrap().value, 2);
}

#[test]
fn costs() {
    assert_eq!(cost_2dist(&group(FamilySpec::Hypercube { n: 4 })).unwrap().value, 5);
    assert_eq!(cost_2dist(&group(FamilySpec::Augmented { n: 4 })).unwrap().value, 3);
    assert_eq!(cost_2dist(&group(FamilySpec::LocallyTwisted { n: 4 })).unwrap().value, 1);
    assert_eq!(cost_2dist(&group(FamilySpec::Hypercube { n: 3 })), Err(Error::NotTwoDistinguishable));
    assert_eq!(cost_2dist(&searched(path_graph(1))), Err(Error::NotTwoDistinguishable));
}

#[test]
fn witnesses_are_lex_least() {
    let graphs = [
        group(FamilySpec::Hypercube { n: 3 }),
        group(FamilySpec::Hypercube { n: 4 }),
        group(FamilySpec::Augmented { n: 3 }),
        group(FamilySpec::LocallyTwisted { n: 3 }),
        searched(cycle_graph(7)),
        searched(path_graph(6)),
    ];
    for g in &graphs {
        let det = determining_number(g).unwrap();
        let expected = first_lex(g, |s| is_determining_set(g, s).unwrap());
        assert_eq!(det.witness.certificate, Certificate::DeterminingSet { vertices: expected });
        if let Ok(cost) = cost_2dist(g) {
            let n = g.graph().vertex_count() as u32;
            let expected = (1..=n as usize / 2)
                .find_map(|k| subsets(n, k).into_iter().find(|s| is_distinguishing_class(g, s).unwrap()))
                .unwrap();
            assert_eq!(cost.witness.certificate, Certificate::CostClass { vertices: expected });
        }
    }
}

#[test]
fn checkers() {
    let g = group(FamilySpec::HypercubePower { n: 4, k: 2 });
    let all: Vec<u32> = (0..16).collect();
    assert!(is_determining_set(&g, &all).unwrap());
    let s = words(&g, &["0000", "1000", "1100", "1110"]);
    assert!(is_determining_set(&g, &s).unwrap());
    // with a pendant at 1110 the two middle vertices can still be swapped
    let t = words(&g, &["0000", "1000", "1100", "1110", "0111"]);
    assert!(!is_distinguishing(&g, &Coloring::from_class(16, &t).unwrap()).unwrap());
    assert!(!is_distinguishing(&g, &Coloring::uniform(16)).unwrap());
    let g5 = group(FamilySpec::HypercubePower { n: 5, k: 2 });
    let t = words(&g5, &["00000", "10000", "11000", "11100", "11110", "01111"]);
    assert!(is_distinguishing(&g5, &Coloring::from_class(32, &t).unwrap()).unwrap());
    let aq6 = group(FamilySpec::Augmented { n: 6 });
    assert!(is_determining_set(&aq6, &words(&aq6, &["000000", "111001"])).unwrap());
    assert!(is_distinguishing(&aq6, &Coloring::new((1..=64).collect(), 64).unwrap()).unwrap());
}

#[test]
fn asymmetry() {
    assert!(is_asymmetric(&path_graph(1)).unwrap());
    assert!(!is_asymmetric(&path_graph(3)).unwrap());
    let fq6 = build_family(&FamilySpec::Folded { n: 6 }).unwrap();
    let mut set: Vec<u32> = ["101010", "100010", "110010", "110011", "111011", "111111", "111101", "111100", "000000"]
        .iter()
        .map(|l| fq6.parse_vertex(l).unwrap())
        .collect();
    assert!(is_asymmetric(&fq6.induced_subgraph(&set).unwrap()).unwrap());
    set.pop();
    assert!(!is_asymmetric(&fq6.induced_subgraph(&set).unwrap()).unwrap());
}

#[test]
fn transitivity() {
    let all = TransitivityReport {
        vertex_transitive: true,
        edge_transitive: true,
        arc_transitive: true,
        distance_transitive: true,
    };
    assert_eq!(transitivity_report(&group(FamilySpec::Hypercube { n: 3 })).unwrap(), all);
    assert_eq!(transitivity_report(&group(FamilySpec::Folded { n: 3 })).unwrap(), all);
    let aq = transitivity_report(&group(FamilySpec::Augmented { n: 4 })).unwrap();
    assert!(aq.vertex_transitive && !aq.edge_transitive && !aq.arc_transitive && !aq.distance_transitive);
    let p3 = transitivity_report(&searched(path_graph(3))).unwrap();
    assert!(!p3.vertex_transitive && p3.edge_transitive && !p3.arc_transitive);
}

#[test]
fn structured_and_searched_agree() {
    for spec in [
        FamilySpec::Hypercube { n: 4 },
        FamilySpec::Folded { n: 4 },
        FamilySpec::Augmented { n: 4 },
        FamilySpec::Enhanced { n: 5, k: 2 },
        FamilySpec::LocallyTwisted { n: 4 },
    ] {
        let graph = Arc::new(build_family(&spec).unwrap());
        let s = structured_group(Arc::clone(&graph)).unwrap();
        let t = search_automorphisms(graph).unwrap();
        let (a, b) = (Solver::new(&s), Solver::new(&t));
        assert_eq!(a.determining_number().unwrap().witness.certificate, b.determining_number().unwrap().witness.certificate);
        assert_eq!(a.distinguishing_number().unwrap().value, b.distinguishing_number().unwrap().value, "{spec}");
    }
}

#[test]
fn report_json() {
    let g = group(FamilySpec::LocallyTwisted { n: 4 });
    let r = determining_number(&g).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["parameter"], "det");
    assert_eq!(json["value"], 1);
    assert_eq!(json["witness"]["kind"], "determining_set");
    assert_eq!(json["witness"]["vertices"], serde_json::json!([0]));
    assert_eq!(json["verified_by"], "structured");
    let back: SymmetryReport = serde_json::from_value(json).unwrap();
    assert_eq!(back, r);
}
