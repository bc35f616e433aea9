//! Simple undirected graphs with sorted adjacency lists and, for graphs up to
//! [`DENSE_ROW_LIMIT`] vertices, dense bitset rows.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::vertex::{format_word, word_count, BitVertex};

/// Graphs with at most this many vertices also carry bitset adjacency rows.
pub const DENSE_ROW_LIMIT: usize = 1 << 13;

/// How vertex indices are shown to users.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Labeling {
    /// Vertex `i` is the word of `n` digits over `alphabet` with value `i`.
    Words { n: u32, alphabet: u32 },
    /// Plain decimal indices.
    Indices,
}

#[derive(Debug, Clone)]
pub struct Graph {
    family: FamilySpec,
    labeling: Labeling,
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
    rows: Option<Vec<u64>>,
    row_words: usize,
    origin: Option<Vec<u32>>,
}

impl PartialEq for Graph {
    /// Equality of vertex sets and edge sets; family metadata is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.offsets == other.offsets && self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Loops are rejected, parallel edges merged.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
        family: FamilySpec,
        labeling: Labeling,
    ) -> Result<Self> {
        let mut lists = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange(u64::from(w)));
                }
            }
            if u == v {
                return Err(Error::Parse(format!("loop at vertex {u}")));
            }
            lists[u as usize].push(v);
            lists[v as usize].push(u);
        }
        Ok(Self::from_lists(lists, family, labeling))
    }

    pub(crate) fn from_lists(
        mut lists: Vec<Vec<u32>>,
        family: FamilySpec,
        labeling: Labeling,
    ) -> Self {
        let n = lists.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut neighbors = Vec::new();
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        let row_words = n.div_ceil(64);
        let rows = (n <= DENSE_ROW_LIMIT).then(|| {
            let mut rows = vec![0u64; n * row_words];
            for v in 0..n {
                for &u in &neighbors[offsets[v]..offsets[v + 1]] {
                    rows[v * row_words + (u as usize >> 6)] |= 1 << (u & 63);
                }
            }
            rows
        });
        Self { family, labeling, offsets, neighbors, rows, row_words, origin: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn family(&self) -> &FamilySpec {
        &self.family
    }

    pub fn labeling(&self) -> Labeling {
        self.labeling
    }

    /// For induced subgraphs: the vertex of the parent graph behind each vertex.
    pub fn origin(&self) -> Option<&[u32]> {
        self.origin.as_deref()
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Index of the arc `(u, v)` among all `2|E|` arcs, if it exists.
    pub fn arc_index(&self, u: u32, v: u32) -> Option<usize> {
        let u = u as usize;
        self.neighbors[self.offsets[u]..self.offsets[u + 1]]
            .binary_search(&v)
            .ok()
            .map(|i| self.offsets[u] + i)
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        match &self.rows {
            Some(rows) => {
                rows[u as usize * self.row_words + (v as usize >> 6)] >> (v & 63) & 1 == 1
            }
            None => self.neighbors(u).binary_search(&v).is_ok(),
        }
    }

    /// Bitset row of `v` when dense rows are present.
    pub fn row(&self, v: u32) -> Option<&[u64]> {
        self.rows
            .as_ref()
            .map(|rows| &rows[v as usize * self.row_words..(v as usize + 1) * self.row_words])
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.vertex_count() as u32)
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (0..self.vertex_count() as u32).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn label(&self, v: u32) -> String {
        match self.labeling {
            Labeling::Words { n, alphabet } => format_word(u64::from(v), n, alphabet),
            Labeling::Indices => v.to_string(),
        }
    }

    pub fn vertex(&self, v: u32) -> Result<BitVertex> {
        match self.labeling {
            Labeling::Words { n, alphabet } => BitVertex::new(u64::from(v), n, alphabet),
            Labeling::Indices => Err(Error::DimensionMismatch {
                expected: "word-labelled graph".into(),
                got: "index-labelled graph".into(),
            }),
        }
    }

    pub fn index_of(&self, v: &BitVertex) -> Result<u32> {
        match self.labeling {
            Labeling::Words { n, alphabet } if n == v.n && alphabet == v.alphabet => Ok(v.word as u32),
            Labeling::Words { n, alphabet } => Err(Error::DimensionMismatch {
                expected: format!("n={n}, alphabet={alphabet}"),
                got: format!("n={}, alphabet={}", v.n, v.alphabet),
            }),
            Labeling::Indices => Err(Error::DimensionMismatch {
                expected: "index label".into(),
                got: v.label(),
            }),
        }
    }

    /// Parses a vertex given either as a word label or a decimal index.
    pub fn parse_vertex(&self, text: &str) -> Result<u32> {
        let text = text.trim();
        let v = match self.labeling {
            Labeling::Words { n, alphabet } => {
                let parsed = BitVertex::parse(text, alphabet)?;
                if parsed.n != n {
                    return Err(Error::DimensionMismatch {
                        expected: format!("{n} positions"),
                        got: format!("{text:?}"),
                    });
                }
                parsed.word as u32
            }
            Labeling::Indices => text
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("{text:?}: {e}")))?,
        };
        if v as usize >= self.vertex_count() {
            return Err(Error::VertexOutOfRange(u64::from(v)));
        }
        Ok(v)
    }

    /// BFS distances from `source`; unreachable vertices get `u32::MAX`.
    pub fn distances_from(&self, source: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source as usize] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize] + 1;
            for &u in self.neighbors(v) {
                if dist[u as usize] == u32::MAX {
                    dist[u as usize] = d;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v as usize >= self.vertex_count() {
            return Err(Error::VertexOutOfRange(u64::from(v)));
        }
        Ok(())
    }

    pub fn graph_distance(&self, u: u32, v: u32) -> Result<u32> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.distances_from(u)[v as usize] {
            u32::MAX => Err(Error::Unreachable(u64::from(u), u64::from(v))),
            d => Ok(d),
        }
    }

    /// Subgraph induced by `vertices`, in the given order. `origin()` of the
    /// result maps back to the indices of `self`.
    pub fn induced_subgraph(&self, vertices: &[u32]) -> Result<Graph> {
        let mut position = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            if position.insert(v, i as u32).is_some() {
                return Err(Error::DuplicateVertex(u64::from(v)));
            }
        }
        let lists = vertices
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter_map(|u| position.get(u).copied())
                    .collect()
            })
            .collect();
        let mut g = Graph::from_lists(
            lists,
            FamilySpec::Explicit { name: format!("induced({})", self.family.name()) },
            Labeling::Indices,
        );
        g.origin = Some(vertices.to_vec());
        Ok(g)
    }

    pub fn complement(&self) -> Result<Graph> {
        let n = self.vertex_count();
        if n > DENSE_ROW_LIMIT * 2 {
            return Err(Error::SizeGuard {
                what: "complement".into(),
                size: n as u128,
                cap: (DENSE_ROW_LIMIT * 2) as u128,
            });
        }
        let lists = (0..n as u32)
            .map(|v| (0..n as u32).filter(|&u| u != v && !self.has_edge(v, u)).collect())
            .collect();
        Ok(Graph::from_lists(
            lists,
            FamilySpec::Explicit { name: format!("complement({})", self.family.name()) },
            self.labeling,
        ))
    }

    /// Cartesian product. Vertex `(g, h)` gets index `g * |H| + h`, which for
    /// two word-labelled factors over the same alphabet is the concatenated word.
    pub fn cartesian_product(&self, other: &Graph, max_vertices: usize) -> Result<Graph> {
        let (a, b) = (self.vertex_count(), other.vertex_count());
        let size = a as u128 * b as u128;
        if size > max_vertices as u128 {
            return Err(Error::SizeGuard { what: "cartesian product".into(), size, cap: max_vertices as u128 });
        }
        let mut lists = vec![Vec::new(); a * b];
        for g in 0..a as u32 {
            for h in 0..b as u32 {
                let v = g as usize * b + h as usize;
                let list = &mut lists[v];
                for &g2 in self.neighbors(g) {
                    list.push(g2 * b as u32 + h);
                }
                for &h2 in other.neighbors(h) {
                    list.push(g * b as u32 + h2);
                }
            }
        }
        let labeling = match (self.labeling, other.labeling) {
            (Labeling::Words { n: n1, alphabet: a1 }, Labeling::Words { n: n2, alphabet: a2 }) if a1 == a2 => {
                Labeling::Words { n: n1 + n2, alphabet: a1 }
            }
            _ => Labeling::Indices,
        };
        Ok(Graph::from_lists(
            lists,
            FamilySpec::Explicit {
                name: format!("{} x {}", self.family.name(), other.family.name()),
            },
            labeling,
        ))
    }

    /// Relabels `self` so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[u32]) -> Graph {
        let n = self.vertex_count();
        let mut lists = vec![Vec::new(); n];
        for v in 0..n as u32 {
            lists[perm[v as usize] as usize] = self.neighbors(v).iter().map(|&u| perm[u as usize]).collect();
        }
        Graph::from_lists(lists, self.family.clone(), self.labeling)
    }

    pub fn with_family(mut self, family: FamilySpec) -> Self {
        self.family = family;
        self
    }
}

/// Complete graph on `n` vertices with index labels.
pub fn complete_graph(n: usize) -> Graph {
    let lists = (0..n as u32)
        .map(|v| (0..n as u32).filter(|&u| u != v).collect())
        .collect();
    Graph::from_lists(lists, FamilySpec::Explicit { name: format!("K{n}") }, Labeling::Indices)
}

pub fn cycle_graph(n: usize) -> Graph {
    let n32 = n as u32;
    Graph::from_edges(
        n,
        (0..n32).map(|i| (i, (i + 1) % n32)),
        FamilySpec::Explicit { name: format!("C{n}") },
        Labeling::Indices,
    )
    .expect("cycle edges in range")
}

pub fn path_graph(n: usize) -> Graph {
    let n32 = n as u32;
    Graph::from_edges(
        n,
        (1..n32).map(|i| (i - 1, i)),
        FamilySpec::Explicit { name: format!("P{n}") },
        Labeling::Indices,
    )
    .expect("path edges in range")
}

/// `alphabet^n` as a vertex count, checked against `cap`.
pub(crate) fn checked_size(n: u32, alphabet: u32, cap: usize) -> Result<usize> {
    let size = word_count(n, alphabet).unwrap_or(u128::MAX);
    if size > cap as u128 {
        return Err(Error::SizeGuard { what: format!("{alphabet}^{n} vertices"), size, cap: cap as u128 });
    }
    Ok(size as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};

    #[test]
    fn induced_path_in_q3() {
        let q3 = build_family(&FamilySpec::Hypercube { n: 3 }).unwrap();
        let s: Vec<u32> = ["000", "100", "110"].iter().map(|l| q3.parse_vertex(l).unwrap()).collect();
        let h = q3.induced_subgraph(&s).unwrap();
        assert_eq!(h, path_graph(3));
        assert_eq!(h.origin().unwrap(), &s[..]);
    }

    #[test]
    fn induced_subgraph_errors() {
        let q3 = build_family(&FamilySpec::Hypercube { n: 3 }).unwrap();
        assert_eq!(q3.induced_subgraph(&[1, 1]).unwrap_err(), Error::DuplicateVertex(1));
        assert_eq!(q3.induced_subgraph(&[9]).unwrap_err(), Error::VertexOutOfRange(9));
    }

    #[test]
    fn complement_examples() {
        let k4 = complete_graph(4);
        let empty = k4.complement().unwrap();
        assert_eq!(empty.edge_count(), 0);
        let q3 = build_family(&FamilySpec::Hypercube { n: 3 }).unwrap();
        assert_eq!(q3.complement().unwrap().complement().unwrap(), q3);
    }

    #[test]
    fn augmented_three_complement_is_two_squares() {
        let aq3 = build_family(&FamilySpec::Augmented { n: 3 }).unwrap();
        let c = aq3.complement().unwrap();
        assert_eq!(c.regular_degree(), Some(2));
        let comp: Vec<u32> = ["000", "101", "110", "011"].iter().map(|l| c.parse_vertex(l).unwrap()).collect();
        let cycle = c.induced_subgraph(&comp).unwrap();
        assert_eq!(cycle.edge_count(), 4);
        assert_eq!(cycle.regular_degree(), Some(2));
        // No edges leave the 4-set.
        for &v in &comp {
            assert!(c.neighbors(v).iter().all(|u| comp.contains(u)));
        }
    }

    #[test]
    fn products() {
        let k2 = complete_graph(2);
        let c4 = k2.cartesian_product(&k2, 1 << 20).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4.regular_degree(), Some(2));
        let q2 = build_family(&FamilySpec::Hypercube { n: 2 }).unwrap();
        let fq2 = build_family(&FamilySpec::Folded { n: 2 }).unwrap();
        let prod = q2.cartesian_product(&fq2, 1 << 20).unwrap();
        let q43 = build_family(&FamilySpec::Enhanced { n: 4, k: 3 }).unwrap();
        assert_eq!(prod, q43);
        let k3 = build_family(&FamilySpec::Hamming { m: 3, n: 1 }).unwrap();
        let h32 = build_family(&FamilySpec::Hamming { m: 3, n: 2 }).unwrap();
        assert_eq!(k3.cartesian_product(&k3, 1 << 20).unwrap(), h32);
        assert!(matches!(q2.cartesian_product(&q2, 8), Err(Error::SizeGuard { .. })));
    }

    #[test]
    fn distances() {
        let q3 = build_family(&FamilySpec::Hypercube { n: 3 }).unwrap();
        assert_eq!(q3.graph_distance(0, 7).unwrap(), 3);
        let q42 = build_family(&FamilySpec::HypercubePower { n: 4, k: 2 }).unwrap();
        assert_eq!(q42.graph_distance(0, 15).unwrap(), 2);
        let fq4 = build_family(&FamilySpec::Folded { n: 4 }).unwrap();
        assert_eq!(fq4.graph_distance(0, 15).unwrap(), 1);
        let two = Graph::from_edges(3, [(0, 1)], FamilySpec::Explicit { name: "x".into() }, Labeling::Indices).unwrap();
        assert_eq!(two.graph_distance(0, 2).unwrap_err(), Error::Unreachable(0, 2));
    }
}
