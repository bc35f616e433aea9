mod common;

use std::sync::Arc;

use cubesym_core::oracle::{
    enumerate_automorphisms_naive, oracle_cost, oracle_determining_number, oracle_distinguishing_number,
};
use cubesym_core::{
    automorphism_group, build_family, search_automorphisms, structured_group, Error, Graph, Solver,
};

fn solver_values(g: &Graph) -> (u64, u64, Option<u64>) {
    let group = automorphism_group(Arc::new(g.clone())).unwrap();
    let s = Solver::new(&group);
    let cost = match s.cost() {
        Ok(r) => Some(r.value),
        Err(Error::NotTwoDistinguishable) => None,
        Err(e) => panic!("{e}"),
    };
    (s.determining_number().unwrap().value, s.distinguishing_number().unwrap().value, cost)
}

fn oracle_values(g: &Graph) -> (u64, u64, Option<u64>) {
    let cost = match oracle_cost(g) {
        Ok(r) => Some(r.value),
        Err(Error::NotTwoDistinguishable) => None,
        Err(e) => panic!("{e}"),
    };
    (oracle_determining_number(g).unwrap().value, oracle_distinguishing_number(g).unwrap().value, cost)
}

#[test]
fn solver_matches_oracle() {
    for spec in common::corpus() {
        let g = build_family(&spec).unwrap();
        assert_eq!(solver_values(&g), oracle_values(&g), "{spec}");
    }
}

#[test]
fn complement_has_same_parameters() {
    for spec in common::corpus() {
        let g = build_family(&spec).unwrap();
        let c = g.complement().unwrap();
        let (det, dist, _) = solver_values(&g);
        let (cdet, cdist, _) = solver_values(&c);
        assert_eq!((det, dist), (cdet, cdist), "{spec}");
        let (odet, odist, _) = oracle_values(&c);
        assert_eq!((det, dist), (odet, odist), "{spec} complement oracle");
    }
}

#[test]
fn group_orders_agree() {
    for spec in common::corpus() {
        let g = Arc::new(build_family(&spec).unwrap());
        let naive = enumerate_automorphisms_naive(&g).unwrap().len() as u128;
        assert_eq!(search_automorphisms(Arc::clone(&g)).unwrap().order().unwrap(), naive, "{spec}");
        if let Ok(s) = structured_group(Arc::clone(&g)) {
            assert_eq!(s.order().unwrap(), naive, "{spec} structured");
        }
    }
}
