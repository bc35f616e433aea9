use serde::{Deserialize, Serialize};

use crate::autgroup::PermGroup;
use crate::error::{Error, Result};

/// Distance-transitivity uses the usual definition: for each distance, the
/// ordered pairs at that distance form one orbit. Arc-transitivity implies
/// vertex-transitivity only without isolated vertices, which is when it is
/// checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TransitivityReport {
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub arc_transitive: bool,
    pub distance_transitive: bool,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }

    fn classes(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

pub fn transitivity_report(group: &PermGroup) -> Result<TransitivityReport> {
    let graph = group.graph();
    let n = graph.vertex_count();
    let vertex_transitive = group.orbits()?.len() <= 1;

    let arcs: Vec<(u32, u32)> =
        (0..n as u32).flat_map(|u| graph.neighbors(u).iter().map(move |&v| (u, v))).collect();
    let mut arc_orbits = UnionFind::new(arcs.len());
    for g in group.generator_images()? {
        for (i, &(u, v)) in arcs.iter().enumerate() {
            let j = graph
                .arc_index(g[u as usize], g[v as usize])
                .ok_or_else(|| Error::Inconsistent("generator does not preserve adjacency".into()))?;
            arc_orbits.union(i, j);
        }
    }
    let arc_transitive = arcs.is_empty() || arc_orbits.classes() == 1;
    for (i, &(u, v)) in arcs.iter().enumerate() {
        arc_orbits.union(i, graph.arc_index(v, u).expect("symmetric adjacency"));
    }
    let edge_transitive = arcs.is_empty() || arc_orbits.classes() == 1;

    let distance_transitive = vertex_transitive && n > 0 && {
        let mut layers = graph.distances_from(0);
        layers.sort_unstable();
        layers.dedup();
        group.pointwise_stabilizer(&[0])?.orbits()?.len() == layers.len()
    };

    let report = TransitivityReport { vertex_transitive, edge_transitive, arc_transitive, distance_transitive };
    let no_isolated = (0..n as u32).all(|v| graph.degree(v) > 0);
    if (arc_transitive && no_isolated && !(vertex_transitive && edge_transitive))
        || (distance_transitive && !arc_transitive)
    {
        return Err(Error::Inconsistent(format!("transitivity implications violated: {report:?}")));
    }
    Ok(report)
}
