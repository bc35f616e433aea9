//! Brute-force reference computations.
//!
//! Nothing here uses the refinement search, the structured groups or the
//! symmetry solvers: automorphisms come from plain backtracking over vertex
//! images and every parameter from direct enumeration. Meant for graphs with
//! a few dozen vertices.

use serde::{Deserialize, Serialize};

use crate::autgroup::Method;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{Certificate, Coloring, Witness};

/// Largest graph accepted for automorphism enumeration.
pub const MAX_AUTOMORPHISM_VERTICES: usize = 64;
/// Largest graph accepted for parameter enumeration.
pub const MAX_PARAMETER_VERTICES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub value: u64,
    pub witness: Witness,
    pub nodes_explored: u64,
}

fn guard(g: &Graph, cap: usize, what: &str) -> Result<()> {
    let n = g.vertex_count();
    if n > cap {
        return Err(Error::SizeGuard { what: what.into(), size: n as u128, cap: cap as u128 });
    }
    Ok(())
}

/// All automorphisms as image arrays, in lexicographic order.
pub fn enumerate_automorphisms_naive(g: &Graph) -> Result<Vec<Vec<u32>>> {
    guard(g, MAX_AUTOMORPHISM_VERTICES, "naive automorphism enumeration")?;
    let n = g.vertex_count();
    let mut image = vec![0u32; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(g, 0, &mut image, &mut used, &mut out);
    Ok(out)
}

fn extend(g: &Graph, v: usize, image: &mut [u32], used: &mut [bool], out: &mut Vec<Vec<u32>>) {
    let n = image.len();
    if v == n {
        out.push(image.to_vec());
        return;
    }
    for w in 0..n {
        if used[w] || g.degree(v as u32) != g.degree(w as u32) {
            continue;
        }
        let consistent = (0..v).all(|u| g.has_edge(u as u32, v as u32) == g.has_edge(image[u], w as u32));
        if consistent {
            image[v] = w as u32;
            used[w] = true;
            extend(g, v + 1, image, used, out);
            used[w] = false;
        }
    }
}

fn nontrivial(g: &Graph) -> Result<Vec<Vec<u32>>> {
    Ok(enumerate_automorphisms_naive(g)?
        .into_iter()
        .filter(|a| a.iter().enumerate().any(|(v, &w)| v as u32 != w))
        .collect())
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order until it returns true.
fn first_subset(n: usize, k: usize, nodes: &mut u64, f: &mut dyn FnMut(&[u32]) -> bool) -> Option<Vec<u32>> {
    let mut set: Vec<u32> = (0..k as u32).collect();
    if k > n {
        return None;
    }
    loop {
        *nodes += 1;
        if f(&set) {
            return Some(set);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if (set[i] as usize) < n - k + i {
                break;
            }
        }
        set[i] += 1;
        for j in i + 1..k {
            set[j] = set[j - 1] + 1;
        }
    }
}

fn result(value: u64, certificate: Certificate, nodes: u64) -> OracleResult {
    OracleResult { value, witness: Witness { certificate, verified_by: Method::Oracle }, nodes_explored: nodes }
}

/// Smallest set fixed pointwise only by the identity, checked against every automorphism.
pub fn oracle_determining_number(g: &Graph) -> Result<OracleResult> {
    guard(g, MAX_PARAMETER_VERTICES, "oracle determining number")?;
    let auts = nontrivial(g)?;
    let mut nodes = 0;
    for k in 0..=g.vertex_count() {
        let found = first_subset(g.vertex_count(), k, &mut nodes, &mut |s| {
            auts.iter().all(|a| s.iter().any(|&v| a[v as usize] != v))
        });
        if let Some(set) = found {
            return Ok(result(k as u64, Certificate::DeterminingSet { vertices: set }, nodes));
        }
    }
    Err(Error::Inconsistent("no determining set".into()))
}

/// Smallest `d` admitting a coloring preserved only by the identity. Colorings
/// are enumerated as restricted growth strings, so vertex 0 always gets color 1.
pub fn oracle_distinguishing_number(g: &Graph) -> Result<OracleResult> {
    guard(g, MAX_PARAMETER_VERTICES, "oracle distinguishing number")?;
    let n = g.vertex_count();
    let auts = nontrivial(g)?;
    let mut nodes = 0;
    for d in 1..=n.max(1) as u32 {
        let mut colors = vec![1u32; n];
        let mut found = false;
        loop {
            nodes += 1;
            if auts.iter().all(|a| (0..n).any(|v| colors[a[v] as usize] != colors[v])) {
                found = true;
                break;
            }
            if !next_rgs(&mut colors, d) {
                break;
            }
        }
        if found {
            let coloring = Coloring::new(colors, d)?;
            return Ok(result(u64::from(d), Certificate::DistinguishingColoring { coloring }, nodes));
        }
    }
    Err(Error::Inconsistent("no distinguishing coloring".into()))
}

/// Next restricted growth string with values in `1..=d`, in lexicographic order.
fn next_rgs(colors: &mut [u32], d: u32) -> bool {
    for i in (1..colors.len()).rev() {
        let prefix_max = colors[..i].iter().copied().max().unwrap_or(0);
        if colors[i] < d && colors[i] <= prefix_max {
            colors[i] += 1;
            for c in &mut colors[i + 1..] {
                *c = 1;
            }
            return true;
        }
    }
    false
}

/// Smallest class whose setwise stabilizer is trivial.
pub fn oracle_cost(g: &Graph) -> Result<OracleResult> {
    guard(g, MAX_PARAMETER_VERTICES, "oracle cost")?;
    let n = g.vertex_count();
    let auts = nontrivial(g)?;
    if auts.is_empty() {
        return Err(Error::NotTwoDistinguishable);
    }
    let mut nodes = 0;
    for k in 1..=n / 2 {
        let found = first_subset(n, k, &mut nodes, &mut |s| {
            let mut member = vec![false; n];
            for &v in s {
                member[v as usize] = true;
            }
            auts.iter().all(|a| s.iter().any(|&v| !member[a[v as usize] as usize]))
        });
        if let Some(set) = found {
            return Ok(result(k as u64, Certificate::CostClass { vertices: set }, nodes));
        }
    }
    Err(Error::NotTwoDistinguishable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::complete_graph;

    fn family(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(enumerate_automorphisms_naive(&complete_graph(3)).unwrap().len(), 6);
        assert_eq!(enumerate_automorphisms_naive(&family(FamilySpec::Hypercube { n: 3 })).unwrap().len(), 48);
        assert_eq!(enumerate_automorphisms_naive(&family(FamilySpec::Augmented { n: 4 })).unwrap().len(), 128);
    }

    #[test]
    fn parameters() {
        assert_eq!(oracle_determining_number(&complete_graph(4)).unwrap().value, 3);
        assert_eq!(oracle_determining_number(&family(FamilySpec::Augmented { n: 3 })).unwrap().value, 4);
        assert_eq!(oracle_distinguishing_number(&complete_graph(2)).unwrap().value, 2);
        assert_eq!(oracle_distinguishing_number(&family(FamilySpec::Folded { n: 3 })).unwrap().value, 5);
        // K_2 times K_{4,4}: two colors give at most four combined colors per copy of K_{4,4}.
        assert_eq!(oracle_distinguishing_number(&family(FamilySpec::Enhanced { n: 4, k: 2 })).unwrap().value, 3);
        assert_eq!(oracle_cost(&family(FamilySpec::LocallyTwisted { n: 4 })).unwrap().value, 1);
        assert_eq!(oracle_cost(&family(FamilySpec::Augmented { n: 4 })).unwrap().value, 3);
        assert_eq!(oracle_cost(&family(FamilySpec::Hypercube { n: 4 })).unwrap().value, 5);
        assert_eq!(oracle_cost(&complete_graph(3)), Err(Error::NotTwoDistinguishable));
    }

    #[test]
    fn subsets_and_strings() {
        let mut seen = Vec::new();
        let mut nodes = 0;
        first_subset(4, 2, &mut nodes, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut c = vec![1, 1, 1];
        let mut all = vec![c.clone()];
        while next_rgs(&mut c, 2) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![vec![1, 1, 1], vec![1, 1, 2], vec![1, 2, 1], vec![1, 2, 2]]);
    }
}
