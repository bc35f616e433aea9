//! Lexicographic searches behind the symmetry solvers.
//!
//! Sets are grown in increasing vertex order starting from the minimum of a
//! vertex orbit. The nonidentity elements of the stabilizer of that first
//! vertex are kept as a survivor list, filtered as vertices are added, so a
//! prefix with an empty list already has a trivial pointwise stabilizer.
//! A candidate is only tried when it is the least vertex of its orbit under
//! the current survivors, which keeps the first set found lex-least.

use std::collections::VecDeque;
use std::sync::atomic::Ordering;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::autgroup::{Constraint, GroupLimits, PermGroup};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Mode {
    Pointwise,
    Setwise,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome<T> {
    Found(T),
    Exhausted,
    Budget,
}

/// Permutations of `0..n` stored back to back.
struct Perms {
    n: usize,
    data: Vec<u32>,
}

impl Perms {
    fn len(&self) -> usize {
        self.data.len().checked_div(self.n).unwrap_or(0)
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.n..(i + 1) * self.n]
    }
}

/// Nonidentity elements of `group`, if they fit in `entries` stored images.
fn nonidentity_elements(group: &PermGroup, entries: usize) -> Result<Option<Perms>> {
    let n = group.graph().vertex_count();
    let order = group.order()?;
    if order.saturating_mul(n as u128) > entries as u128 {
        return Ok(None);
    }
    let group = group.clone().with_limits(GroupLimits { enumeration_cap: order, ..group.limits() });
    let mut data = Vec::with_capacity((order as usize - 1) * n);
    group.for_each_element(&mut |e| {
        if e.iter().enumerate().any(|(i, &x)| x as usize != i) {
            data.extend_from_slice(e);
        }
    })?;
    Ok(Some(Perms { n, data }))
}

struct Anchor {
    vertex: u32,
    stab: Perms,
    /// Schreier tree of the orbit of `vertex`: predecessor and generator.
    tree: Vec<Option<(u32, u32)>>,
}

impl Anchor {
    /// `t_b^{-1}(x)` for the tree element `t_b` mapping the anchor to `b`.
    fn inverse_apply(&self, inverse_gens: &[Vec<u32>], mut b: u32, mut x: u32) -> u32 {
        while b != self.vertex {
            let (prev, gen) = self.tree[b as usize].expect("vertex in the anchor orbit");
            x = inverse_gens[gen as usize][x as usize];
            b = prev;
        }
        x
    }
}

/// Orbit data of the group generated by a survivor list.
struct OrbitInfo {
    min: Vec<u32>,
    size: Vec<u32>,
    largest: u32,
}

impl OrbitInfo {
    fn of(stab: &Perms, surv: &[u32]) -> Self {
        let n = stab.n;
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        for &h in surv {
            for (v, &w) in stab.get(h as usize).iter().enumerate() {
                if v as u32 != w {
                    let (a, b) = (find(&mut parent, v as u32), find(&mut parent, w));
                    if a != b {
                        parent[a.max(b) as usize] = a.min(b);
                    }
                }
            }
        }
        let mut size = vec![0u32; n];
        let min: Vec<u32> = (0..n as u32).map(|v| find(&mut parent, v)).collect();
        for &m in &min {
            size[m as usize] += 1;
        }
        let largest = size.iter().copied().max().unwrap_or(1);
        let size = min.iter().map(|&m| size[m as usize]).collect();
        Self { min, size, largest }
    }
}

pub(crate) struct SetSearch<'a> {
    group: &'a PermGroup,
    n: usize,
    orbit_of: Vec<u32>,
    anchors: Option<Vec<Anchor>>,
    inverse_gens: Vec<Vec<u32>>,
    distances: OnceLock<Option<Vec<u8>>>,
    /// Search nodes visited, summed over all calls.
    pub nodes: std::sync::atomic::AtomicU64,
}

/// Largest all-pairs distance table kept in memory.
const DISTANCE_TABLE_VERTICES: usize = 4096;

impl<'a> SetSearch<'a> {
    pub fn new(group: &'a PermGroup, stored_entries: usize) -> Result<Self> {
        let n = group.graph().vertex_count();
        let orbits = group.orbits()?;
        let mut orbit_of = vec![0u32; n];
        for orbit in &orbits {
            for &v in orbit {
                orbit_of[v as usize] = orbit[0];
            }
        }
        let gens = group.generator_images()?;
        let inverse_gens: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| {
                let mut inv = vec![0u32; n];
                for (v, &w) in g.iter().enumerate() {
                    inv[w as usize] = v as u32;
                }
                inv
            })
            .collect();
        let mut anchors = Some(Vec::with_capacity(orbits.len()));
        for orbit in &orbits {
            let a = orbit[0];
            let Some(stab) = nonidentity_elements(&group.pointwise_stabilizer(&[a])?, stored_entries)? else {
                anchors = None;
                break;
            };
            let mut tree = vec![None; n];
            let mut seen = vec![false; n];
            seen[a as usize] = true;
            let mut queue = VecDeque::from([a]);
            while let Some(x) = queue.pop_front() {
                for (gi, g) in gens.iter().enumerate() {
                    let y = g[x as usize];
                    if !seen[y as usize] {
                        seen[y as usize] = true;
                        tree[y as usize] = Some((x, gi as u32));
                        queue.push_back(y);
                    }
                }
            }
            anchors.as_mut().unwrap().push(Anchor { vertex: a, stab, tree });
        }
        Ok(Self {
            group,
            n,
            orbit_of,
            anchors,
            inverse_gens,
            distances: OnceLock::new(),
            nodes: Default::default(),
        })
    }

    /// The lex-least set of `size` vertices whose pointwise (or setwise)
    /// stabilizer is trivial. Pointwise searches assume no smaller set works.
    pub fn find(&self, size: usize, mode: Mode, budget: u64) -> Result<Outcome<Vec<u32>>> {
        if size == 0 || size > self.n {
            return Ok(Outcome::Exhausted);
        }
        let Some(anchors) = &self.anchors else {
            return self.query_find(size, mode, budget);
        };
        for anchor in anchors {
            let all: Vec<u32> = (0..anchor.stab.len() as u32).collect();
            if size == 1 {
                let mut budget = budget;
                match self.dfs(anchor, &mut vec![anchor.vertex], &all, size, mode, &mut budget) {
                    Outcome::Exhausted => continue,
                    other => return Ok(other),
                }
            }
            let candidates = self.candidates(anchor, &[anchor.vertex], &all, size, mode);
            let found = candidates.par_iter().find_map_first(|&v| {
                let mut budget = budget;
                let surv: Vec<u32> =
                    all.iter().copied().filter(|&h| anchor.stab.get(h as usize)[v as usize] == v).collect();
                match self.dfs(anchor, &mut vec![anchor.vertex, v], &surv, size, mode, &mut budget) {
                    Outcome::Exhausted => None,
                    other => Some(other),
                }
            });
            if let Some(outcome) = found {
                return Ok(outcome);
            }
        }
        Ok(Outcome::Exhausted)
    }

    fn candidates(&self, anchor: &Anchor, prefix: &[u32], surv: &[u32], size: usize, mode: Mode) -> Vec<u32> {
        let last = *prefix.last().unwrap();
        let remaining = size - prefix.len();
        let upper = (self.n - remaining + 1) as u32;
        if surv.is_empty() {
            return (last + 1..upper).collect();
        }
        let info = OrbitInfo::of(&anchor.stab, surv);
        let needed = surv.len() as u128 + 1;
        if (info.largest as u128).saturating_pow(remaining as u32) < needed {
            return Vec::new();
        }
        (last + 1..upper)
            .filter(|&v| info.min[v as usize] == v && (mode == Mode::Setwise || info.size[v as usize] > 1))
            .collect()
    }

    fn dfs(
        &self,
        anchor: &Anchor,
        prefix: &mut Vec<u32>,
        surv: &[u32],
        size: usize,
        mode: Mode,
        budget: &mut u64,
    ) -> Outcome<Vec<u32>> {
        if *budget == 0 {
            return Outcome::Budget;
        }
        *budget -= 1;
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if prefix.len() == size {
            return match (surv.is_empty(), mode) {
                (false, _) => Outcome::Exhausted,
                (true, Mode::Pointwise) => Outcome::Found(prefix.clone()),
                (true, Mode::Setwise) if self.setwise_trivial(anchor, prefix) => Outcome::Found(prefix.clone()),
                (true, Mode::Setwise) => Outcome::Exhausted,
            };
        }
        if surv.is_empty() && mode == Mode::Pointwise {
            let last = *prefix.last().unwrap();
            let extra = size - prefix.len();
            if (last as usize) + extra >= self.n {
                return Outcome::Exhausted;
            }
            let mut set = prefix.clone();
            set.extend(last + 1..=last + extra as u32);
            return Outcome::Found(set);
        }
        for v in self.candidates(anchor, prefix, surv, size, mode) {
            let next: Vec<u32> = surv.iter().copied().filter(|&h| anchor.stab.get(h as usize)[v as usize] == v).collect();
            prefix.push(v);
            let outcome = self.dfs(anchor, prefix, &next, size, mode, budget);
            prefix.pop();
            if outcome != Outcome::Exhausted {
                return outcome;
            }
        }
        Outcome::Exhausted
    }

    fn distance_table(&self) -> Option<&Vec<u8>> {
        self.distances
            .get_or_init(|| {
                (self.n <= DISTANCE_TABLE_VERTICES).then(|| {
                    let graph = self.group.graph();
                    (0..self.n as u32)
                        .into_par_iter()
                        .flat_map_iter(|v| graph.distances_from(v).into_iter().map(|d| d.min(255) as u8))
                        .collect()
                })
            })
            .as_ref()
    }

    fn pair_distances(&self, set: &[u32]) -> Vec<Vec<u32>> {
        match self.distance_table() {
            Some(table) => set
                .iter()
                .map(|&a| set.iter().map(|&b| u32::from(table[a as usize * self.n + b as usize])).collect())
                .collect(),
            None => set
                .iter()
                .map(|&a| {
                    let d = self.group.graph().distances_from(a);
                    set.iter().map(|&b| d[b as usize]).collect()
                })
                .collect(),
        }
    }

    /// Whether only the identity maps `set` onto itself. `set[0]` is the anchor.
    /// Candidate permutations of the set must preserve pairwise distances and
    /// orbits; each survivor is tested for extension to a group element.
    fn setwise_trivial(&self, anchor: &Anchor, set: &[u32]) -> bool {
        let k = set.len();
        let dist = self.pair_distances(set);
        let profile: Vec<Vec<u32>> = dist
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.sort_unstable();
                r
            })
            .collect();
        let options: Vec<Vec<usize>> = (0..k)
            .map(|i| {
                (0..k)
                    .filter(|&j| {
                        self.orbit_of[set[i] as usize] == self.orbit_of[set[j] as usize] && profile[i] == profile[j]
                    })
                    .collect()
            })
            .collect();
        let mut image = vec![usize::MAX; k];
        let mut used = vec![false; k];
        !self.extendable_permutation(anchor, set, &dist, &options, &mut image, &mut used, 0)
    }

    #[allow(clippy::too_many_arguments)]
    fn extendable_permutation(
        &self,
        anchor: &Anchor,
        set: &[u32],
        dist: &[Vec<u32>],
        options: &[Vec<usize>],
        image: &mut [usize],
        used: &mut [bool],
        i: usize,
    ) -> bool {
        let k = set.len();
        if i == k {
            if image.iter().enumerate().all(|(a, &b)| a == b) {
                return false;
            }
            return self.extends(anchor, set, image);
        }
        for &j in &options[i] {
            if used[j] || (0..i).any(|p| dist[i][p] != dist[j][image[p]]) {
                continue;
            }
            image[i] = j;
            used[j] = true;
            let hit = self.extendable_permutation(anchor, set, dist, options, image, used, i + 1);
            used[j] = false;
            if hit {
                return true;
            }
        }
        image[i] = usize::MAX;
        false
    }

    fn extends(&self, anchor: &Anchor, set: &[u32], image: &[usize]) -> bool {
        let b = set[image[0]];
        if b != anchor.vertex && anchor.tree[b as usize].is_none() {
            return false;
        }
        let targets: Vec<u32> =
            image.iter().map(|&j| anchor.inverse_apply(&self.inverse_gens, b, set[j])).collect();
        if targets.as_slice() == set {
            return true;
        }
        (0..anchor.stab.len()).any(|h| {
            let e = anchor.stab.get(h);
            set.iter().zip(&targets).all(|(&s, &t)| e[s as usize] == t)
        })
    }

    /// Fallback when stabilizers are too large to enumerate: plain increasing
    /// enumeration with each candidate tested through group queries.
    fn query_find(&self, size: usize, mode: Mode, budget: u64) -> Result<Outcome<Vec<u32>>> {
        let mut budget = budget;
        let mut firsts: Vec<u32> = self.orbit_of.clone();
        firsts.sort_unstable();
        firsts.dedup();
        for a in firsts {
            let mut prefix = vec![a];
            match self.query_dfs(&mut prefix, size, mode, &mut budget)? {
                Outcome::Exhausted => {}
                other => return Ok(other),
            }
        }
        Ok(Outcome::Exhausted)
    }

    fn query_dfs(&self, prefix: &mut Vec<u32>, size: usize, mode: Mode, budget: &mut u64) -> Result<Outcome<Vec<u32>>> {
        if *budget == 0 {
            return Ok(Outcome::Budget);
        }
        *budget -= 1;
        self.nodes.fetch_add(1, Ordering::Relaxed);
        if prefix.len() == size {
            // A leaf runs a refinement search, so it is charged like a pass over the graph.
            let cost = self.n as u64;
            if *budget < cost {
                return Ok(Outcome::Budget);
            }
            *budget -= cost;
            let trivial = match mode {
                Mode::Pointwise => self.group.pointwise_stabilizer(prefix)?.is_trivial()?,
                Mode::Setwise => self.group.setwise_stabilizer(prefix)?.is_trivial()?,
            };
            return Ok(if trivial { Outcome::Found(prefix.clone()) } else { Outcome::Exhausted });
        }
        let last = *prefix.last().unwrap();
        let upper = (self.n - (size - prefix.len()) + 1) as u32;
        for v in last + 1..upper {
            prefix.push(v);
            let outcome = self.query_dfs(prefix, size, mode, budget)?;
            prefix.pop();
            if outcome != Outcome::Exhausted {
                return Ok(outcome);
            }
        }
        Ok(Outcome::Exhausted)
    }
}

/// The lex-least coloring with at most `d` colors, as a restricted growth
/// string over vertex order, preserved by no nonidentity element.
pub(crate) fn coloring_search(
    group: &PermGroup,
    d: u32,
    node_budget: u64,
    stored_entries: usize,
) -> Result<Outcome<Vec<u32>>> {
    let n = group.graph().vertex_count();
    let Some(elements) = nonidentity_elements(group, stored_entries / 2)? else {
        return Err(Error::SizeGuard {
            what: "coloring search group".into(),
            size: group.order()?,
            cap: (stored_entries / 2 / n.max(1)) as u128,
        });
    };
    let mut inverse = Perms { n, data: vec![0; elements.data.len()] };
    for i in 0..elements.len() {
        let (e, base) = (elements.get(i), i * n);
        for (v, &w) in e.iter().enumerate() {
            inverse.data[base + w as usize] = v as u32;
        }
    }
    let mut colors = vec![0u32; n];
    let surv: Vec<u32> = (0..elements.len() as u32).collect();
    let mut budget = node_budget;
    Ok(rgs(&elements, &inverse, &mut colors, 0, 0, d, &surv, &mut budget))
}

#[allow(clippy::too_many_arguments)]
fn rgs(
    elements: &Perms,
    inverse: &Perms,
    colors: &mut [u32],
    v: usize,
    used: u32,
    d: u32,
    surv: &[u32],
    budget: &mut u64,
) -> Outcome<Vec<u32>> {
    if surv.is_empty() {
        let mut out = colors.to_vec();
        for c in &mut out[v..] {
            *c = 1;
        }
        return Outcome::Found(out);
    }
    if v == colors.len() {
        return Outcome::Exhausted;
    }
    if *budget == 0 {
        return Outcome::Budget;
    }
    *budget -= 1;
    for c in 1..=(used + 1).min(d) {
        colors[v] = c;
        let consistent = |other: u32| colors[other as usize] == 0 || colors[other as usize] == c;
        let next: Vec<u32> = surv
            .iter()
            .copied()
            .filter(|&g| {
                consistent(elements.get(g as usize)[v]) && consistent(inverse.get(g as usize)[v])
            })
            .collect();
        let outcome = rgs(elements, inverse, colors, v + 1, used.max(c), d, &next, budget);
        if outcome != Outcome::Exhausted {
            colors[v] = 0;
            return outcome;
        }
    }
    colors[v] = 0;
    Outcome::Exhausted
}

/// Whether the coloring given by `colors` is preserved only by the identity.
pub(crate) fn coloring_is_distinguishing(group: &PermGroup, colors: &[u32]) -> Result<bool> {
    group.stabilizer(&Constraint::from_colors(colors))?.is_trivial()
}
