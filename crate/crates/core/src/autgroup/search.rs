//! Automorphism groups of vertex-colored graphs by equitable partition
//! refinement, individualization and backtracking.
//!
//! The first path of the search tree individualizes the smallest vertex of
//! the first smallest non-singleton cell until the partition is discrete.
//! Levels are then processed deepest first: for level `d` every vertex of
//! the target cell that is not yet known to share an orbit with the base
//! point is tried, and a matching leaf yields a new generator. When level
//! `d` is done the generators found so far generate the pointwise
//! stabilizer of the first `d` base points, so the group order is the
//! product of the basic orbit lengths.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of search tree nodes visited outside the first path.
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { node_budget: 100_000_000 }
    }
}

/// One level of the stabilizer chain.
#[derive(Debug, Clone)]
pub(crate) struct Level {
    pub base: u32,
    /// Orbit of `base` under the pointwise stabilizer of earlier base points.
    pub orbit: Vec<u32>,
    /// Generators `0..gens` lie in that stabilizer.
    pub gens: usize,
}

#[derive(Debug, Clone)]
pub(crate) struct SearchResult {
    pub generators: Vec<Vec<u32>>,
    pub levels: Vec<Level>,
    pub nodes: u64,
}

impl SearchResult {
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, l| acc.saturating_mul(l.orbit.len() as u128))
    }
}

/// Ordered partition of the vertex set. A cell is identified by the
/// position of its first element.
#[derive(Debug, Clone)]
struct Partition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    cell: Vec<u32>,
    end: Vec<u32>,
    cells: usize,
}

impl Partition {
    /// Cells are the color classes, in increasing color order.
    fn from_colors(colors: &[u32]) -> (Self, Vec<u32>) {
        let n = colors.len();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (colors[v as usize], v));
        let mut pos = vec![0u32; n];
        let mut cell = vec![0u32; n];
        let mut end = vec![0u32; n];
        let mut starts = Vec::new();
        let mut s = 0usize;
        while s < n {
            let color = colors[elems[s] as usize];
            let mut e = s;
            while e < n && colors[elems[e] as usize] == color {
                pos[elems[e] as usize] = e as u32;
                cell[elems[e] as usize] = s as u32;
                e += 1;
            }
            end[s] = e as u32;
            starts.push(s as u32);
            s = e;
        }
        let cells = starts.len();
        (Self { elems, pos, cell, end, cells }, starts)
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    fn cell_members(&self, s: u32) -> Vec<u32> {
        let mut m = self.elems[s as usize..self.end[s as usize] as usize].to_vec();
        m.sort_unstable();
        m
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut s = 0u32;
        while (s as usize) < self.elems.len() {
            let e = self.end[s as usize];
            let size = e - s;
            if size > 1 && best.is_none_or(|(_, b)| size < b) {
                best = Some((s, size));
                if size == 2 {
                    break;
                }
            }
            s = e;
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell and returns the new singleton.
    fn individualize(&mut self, v: u32) -> u32 {
        let s = self.cell[v as usize];
        let e = self.end[s as usize];
        let p = self.pos[v as usize];
        let u = self.elems[s as usize];
        self.elems.swap(s as usize, p as usize);
        self.pos[u as usize] = p;
        self.pos[v as usize] = s;
        if e - s > 1 {
            self.end[s as usize] = s + 1;
            self.end[s as usize + 1] = e;
            for i in s + 1..e {
                self.cell[self.elems[i as usize] as usize] = s + 1;
            }
            self.cells += 1;
        }
        s
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h ^ x).wrapping_mul(0x0100_0000_01b3).rotate_left(17)
}

struct Refiner<'g> {
    g: &'g Graph,
    count: Vec<u32>,
    touched: Vec<u32>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
    by_cell: Vec<(u32, u32)>,
}

impl<'g> Refiner<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            count: vec![0; n],
            touched: Vec::new(),
            in_queue: vec![false; n],
            queue: VecDeque::new(),
            by_cell: Vec::new(),
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using
    /// the given cells as initial splitters. Returns a hash of the splits
    /// performed, which any isomorphism of search nodes preserves.
    fn refine(&mut self, p: &mut Partition, splitters: &[u32], mut trace: u64) -> u64 {
        for &s in splitters {
            if !self.in_queue[s as usize] {
                self.in_queue[s as usize] = true;
                self.queue.push_back(s);
            }
        }
        while let Some(w) = self.queue.pop_front() {
            self.in_queue[w as usize] = false;
            if p.is_discrete() {
                continue;
            }
            let (ws, we) = (w as usize, p.end[w as usize] as usize);
            for i in ws..we {
                let x = p.elems[i];
                for &y in self.g.neighbors(x) {
                    if self.count[y as usize] == 0 {
                        self.touched.push(y);
                    }
                    self.count[y as usize] += 1;
                }
            }
            trace = mix(trace, (u64::from(w) << 32) | self.touched.len() as u64);
            self.by_cell.clear();
            for &y in &self.touched {
                self.by_cell.push((p.cell[y as usize], y));
            }
            self.by_cell.sort_unstable_by_key(|&(c, y)| (c, self.count[y as usize], y));
            let mut i = 0;
            while i < self.by_cell.len() {
                let c = self.by_cell[i].0;
                let mut j = i;
                while j < self.by_cell.len() && self.by_cell[j].0 == c {
                    j += 1;
                }
                trace = self.split(p, c, i, j, trace);
                i = j;
            }
            for &y in &self.touched {
                self.count[y as usize] = 0;
            }
            self.touched.clear();
        }
        trace
    }

    /// Splits cell `c` by neighbor counts: untouched vertices first, then
    /// touched ones by increasing count. `by_cell[i..j]` lists the touched
    /// vertices of `c`, sorted by count.
    fn split(&mut self, p: &mut Partition, c: u32, i: usize, j: usize, mut trace: u64) -> u64 {
        let (s, e) = (c as usize, p.end[c as usize] as usize);
        let k = j - i;
        let first_count = self.count[self.by_cell[i].1 as usize];
        let last_count = self.count[self.by_cell[j - 1].1 as usize];
        if k == e - s && first_count == last_count {
            return mix(trace, ((c as u64) << 40) | ((first_count as u64) << 20) | k as u64);
        }
        // move the touched vertices to the back, in sorted order
        let back = e - k;
        for (offset, idx) in (i..j).enumerate() {
            let v = self.by_cell[idx].1;
            let target = back + offset;
            let from = p.pos[v as usize] as usize;
            let u = p.elems[target];
            p.elems.swap(from, target);
            p.pos[u as usize] = from as u32;
            p.pos[v as usize] = target as u32;
        }
        // fragment boundaries
        let mut fragments: Vec<(usize, usize, u32)> = Vec::new();
        if back > s {
            fragments.push((s, back, 0));
        }
        let mut f = back;
        while f < e {
            let cnt = self.count[p.elems[f] as usize];
            let mut g = f;
            while g < e && self.count[p.elems[g] as usize] == cnt {
                g += 1;
            }
            fragments.push((f, g, cnt));
            f = g;
        }
        for &(fs, fe, cnt) in &fragments {
            trace = mix(trace, ((fs as u64) << 40) | ((cnt as u64) << 20) | (fe - fs) as u64);
        }
        for &(fs, fe, _) in &fragments[1..] {
            for x in fs..fe {
                p.cell[p.elems[x] as usize] = fs as u32;
            }
        }
        for &(fs, fe, _) in &fragments {
            p.end[fs] = fe as u32;
        }
        p.cells += fragments.len() - 1;
        if self.in_queue[s] {
            for &(fs, _, _) in &fragments[1..] {
                self.in_queue[fs] = true;
                self.queue.push_back(fs as u32);
            }
        } else {
            let largest = fragments
                .iter()
                .enumerate()
                .max_by_key(|&(idx, &(fs, fe, _))| (fe - fs, std::cmp::Reverse(idx)))
                .map(|(idx, _)| idx)
                .expect("at least two fragments");
            for (idx, &(fs, _, _)) in fragments.iter().enumerate() {
                if idx != largest {
                    self.in_queue[fs] = true;
                    self.queue.push_back(fs as u32);
                }
            }
        }
        trace
    }
}

struct Node {
    part: Partition,
    target: u32,
    cell: Vec<u32>,
    base: u32,
    trace: u64,
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let parent = self.0[x as usize];
            self.0[x as usize] = self.0[parent as usize];
            x = parent;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi as usize] = lo;
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    refiner: Refiner<'g>,
    path: Vec<Node>,
    first_leaf: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn child(&mut self, part: &Partition, v: u32) -> (Partition, u64) {
        let mut p = part.clone();
        let s = p.individualize(v);
        let size = part.end[s as usize] - s;
        let trace = self.refiner.refine(&mut p, &[s], mix(u64::from(s), u64::from(size)));
        (p, trace)
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Looks for an automorphism fixing the first `d` base points and
    /// sending base point `d` to `x`.
    fn find(&mut self, d: usize, x: u32) -> Result<Option<Vec<u32>>> {
        self.tick()?;
        let part = self.path[d].part.clone();
        let (p, trace) = self.child(&part, x);
        if trace != self.path[d].trace {
            return Ok(None);
        }
        self.descend(p, d + 1)
    }

    fn descend(&mut self, p: Partition, depth: usize) -> Result<Option<Vec<u32>>> {
        if depth == self.path.len() {
            if !p.is_discrete() {
                return Ok(None);
            }
            let mut perm = vec![0u32; p.elems.len()];
            for (i, &v) in self.first_leaf.iter().enumerate() {
                perm[v as usize] = p.elems[i];
            }
            let g = self.g;
            let ok = (0..perm.len() as u32)
                .all(|v| g.neighbors(v).iter().all(|&u| g.has_edge(perm[v as usize], perm[u as usize])));
            return Ok(ok.then_some(perm));
        }
        let s = self.path[depth].target;
        if p.end[s as usize] - s != self.path[depth].cell.len() as u32 {
            return Ok(None);
        }
        for y in p.cell_members(s) {
            self.tick()?;
            let (child, trace) = self.child(&p, y);
            if trace != self.path[depth].trace {
                continue;
            }
            if let Some(perm) = self.descend(child, depth + 1)? {
                return Ok(Some(perm));
            }
        }
        Ok(None)
    }
}

/// Computes `Aut(g, colors)`: the automorphisms of `g` preserving every
/// color class.
pub(crate) fn search(g: &Graph, colors: &[u32], options: &SearchOptions) -> Result<SearchResult> {
    let n = g.vertex_count();
    debug_assert_eq!(colors.len(), n);
    let mut refiner = Refiner::new(g);
    let (mut root, starts) = Partition::from_colors(colors);
    refiner.refine(&mut root, &starts, 0);
    let mut path = Vec::new();
    let mut p = root;
    let mut search = Search { g, refiner, path: Vec::new(), first_leaf: Vec::new(), nodes: 0, budget: options.node_budget };
    while let Some(s) = p.target_cell() {
        let cell = p.cell_members(s);
        let base = cell[0];
        let (child, trace) = search.child(&p, base);
        path.push(Node { part: p, target: s, cell, base, trace });
        p = child;
    }
    search.first_leaf = p.elems;
    search.path = path;

    let mut uf = UnionFind((0..n as u32).collect());
    let mut generators: Vec<Vec<u32>> = Vec::new();
    let mut levels = Vec::with_capacity(search.path.len());
    for d in (0..search.path.len()).rev() {
        let base = search.path[d].base;
        let cell = search.path[d].cell.clone();
        let mut failed: Vec<u32> = Vec::new();
        for &x in &cell {
            if uf.find(x) == uf.find(base) || failed.iter().any(|&f| uf.find(f) == uf.find(x)) {
                continue;
            }
            match search.find(d, x)? {
                Some(perm) => {
                    for (v, &w) in perm.iter().enumerate() {
                        uf.union(v as u32, w);
                    }
                    generators.push(perm);
                }
                None => failed.push(x),
            }
        }
        let root = uf.find(base);
        let orbit: Vec<u32> = cell.iter().copied().filter(|&v| uf.find(v) == root).collect();
        levels.push(Level { base, orbit, gens: generators.len() });
    }
    levels.reverse();
    Ok(SearchResult { generators, levels, nodes: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::automorphism::is_automorphism;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    fn order(g: &Graph) -> u128 {
        let r = search(g, &vec![0; g.vertex_count()], &SearchOptions::default()).unwrap();
        for gen in &r.generators {
            assert!(is_automorphism(g, gen));
        }
        r.order()
    }

    #[test]
    fn small_graph_orders() {
        assert_eq!(order(&cycle_graph(4)), 8);
        assert_eq!(order(&cycle_graph(7)), 14);
        assert_eq!(order(&complete_graph(5)), 120);
        assert_eq!(order(&path_graph(3)), 2);
        assert_eq!(order(&path_graph(1)), 1);
        assert_eq!(order(&complete_graph(0)), 1);
    }

    #[test]
    fn family_orders() {
        let cases = [
            (FamilySpec::Hypercube { n: 3 }, 48),
            (FamilySpec::Hypercube { n: 4 }, 384),
            (FamilySpec::Hypercube { n: 5 }, 3840),
            (FamilySpec::Folded { n: 3 }, 2 * 24 * 24),
            (FamilySpec::Folded { n: 4 }, 1920),
            (FamilySpec::Augmented { n: 4 }, 128),
            (FamilySpec::LocallyTwisted { n: 3 }, 16),
            (FamilySpec::LocallyTwisted { n: 4 }, 8),
            (FamilySpec::Hamming { m: 3, n: 2 }, 72),
        ];
        for (spec, expected) in cases {
            assert_eq!(order(&build_family(&spec).unwrap()), expected, "{spec}");
        }
    }

    #[test]
    fn colors_restrict_the_group() {
        let c4 = cycle_graph(4);
        let r = search(&c4, &[1, 0, 0, 0], &SearchOptions::default()).unwrap();
        assert_eq!(r.order(), 2);
        let r = search(&c4, &[1, 2, 0, 0], &SearchOptions::default()).unwrap();
        assert_eq!(r.order(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let g = build_family(&FamilySpec::Hypercube { n: 4 }).unwrap();
        let err = search(&g, &[0; 16], &SearchOptions { node_budget: 2 }).unwrap_err();
        assert_eq!(err, Error::SearchBudgetExceeded(2));
    }
}
