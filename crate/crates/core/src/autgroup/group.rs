//! Permutation groups acting on the vertices of a graph.
//!
//! A [`PermGroup`] is always the full group of automorphisms of its graph
//! that preserve a [`Constraint`], so a stabilizer is just the same group
//! with a finer constraint.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::autgroup::automorphism::{is_automorphism, Automorphism};
use crate::autgroup::search::{search, SearchOptions, SearchResult};
use crate::autgroup::structured::{linear_pointwise_order, solve, ClassView, SElem, StructuredForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A vertex coloring given by its explicit classes. Every vertex not listed
/// belongs to one further background class.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constraint {
    classes: Vec<Vec<u32>>,
}

impl Constraint {
    pub fn none() -> Self {
        Self::default()
    }

    /// Every vertex of `vertices` in a class of its own.
    pub fn pointwise(vertices: &[u32]) -> Self {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        Self { classes: v.into_iter().map(|x| vec![x]).collect() }
    }

    /// `vertices` as one class.
    pub fn setwise(vertices: &[u32]) -> Self {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Self::none();
        }
        Self { classes: vec![v] }
    }

    /// Explicit classes, which must be disjoint. Empty classes are dropped.
    pub fn from_classes(classes: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(classes.len());
        for mut class in classes {
            class.sort_unstable();
            for &v in &class {
                if !seen.insert(v) {
                    return Err(Error::DuplicateVertex(u64::from(v)));
                }
            }
            if !class.is_empty() {
                out.push(class);
            }
        }
        out.sort_unstable_by_key(|c| c[0]);
        Ok(Self { classes: out })
    }

    /// From a dense coloring. The most frequent color becomes the background.
    pub fn from_colors(colors: &[u32]) -> Self {
        let mut by_color: HashMap<u32, Vec<u32>> = HashMap::new();
        for (v, &c) in colors.iter().enumerate() {
            by_color.entry(c).or_default().push(v as u32);
        }
        let background = by_color
            .iter()
            .max_by_key(|(&c, members)| (members.len(), std::cmp::Reverse(c)))
            .map(|(&c, _)| c);
        let mut classes: Vec<Vec<u32>> = by_color
            .into_iter()
            .filter(|(c, _)| Some(*c) != background)
            .map(|(_, members)| members)
            .collect();
        classes.sort_unstable_by_key(|c| c[0]);
        Self { classes }
    }

    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// True when every explicit class is a single vertex.
    pub fn is_pointwise(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Common refinement of two colorings.
    pub fn refine(&self, other: &Constraint) -> Constraint {
        if self.is_empty() {
            return other.clone();
        }
        if other.is_empty() {
            return self.clone();
        }
        let index = |c: &Constraint| -> HashMap<u32, usize> {
            c.classes.iter().enumerate().flat_map(|(i, cl)| cl.iter().map(move |&v| (v, i))).collect()
        };
        let (a, b) = (index(self), index(other));
        let mut groups: HashMap<(Option<usize>, Option<usize>), Vec<u32>> = HashMap::new();
        for &v in a.keys().chain(b.keys()) {
            groups.entry((a.get(&v).copied(), b.get(&v).copied())).or_default().push(v);
        }
        let classes = groups
            .into_values()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        Constraint::from_classes(classes).expect("refinement classes are disjoint")
    }

    /// Dense colors: background 0, explicit class `i` gets `i + 1`.
    pub fn dense(&self, vertex_count: usize) -> Vec<u32> {
        let mut colors = vec![0u32; vertex_count];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colors[v as usize] = i as u32 + 1;
            }
        }
        colors
    }

    fn check(&self, vertex_count: usize) -> Result<()> {
        match self.classes.iter().flatten().find(|&&v| v as usize >= vertex_count) {
            Some(&v) => Err(Error::VertexOutOfRange(u64::from(v))),
            None => Ok(()),
        }
    }

    /// Whether `images` maps every class onto itself.
    pub fn is_preserved_by(&self, images: &[u32]) -> bool {
        self.classes.iter().all(|class| class.iter().all(|&v| class.binary_search(&images[v as usize]).is_ok()))
    }
}

/// How a group was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Structured,
    Searched,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Structured => "structured",
            Method::Searched => "searched",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLimits {
    /// Largest graph handed to the refinement search.
    pub search_vertices: usize,
    /// Node budget for searches and constraint solving.
    pub node_budget: u64,
    /// Largest group that is enumerated element by element.
    pub enumeration_cap: u128,
}

impl Default for GroupLimits {
    fn default() -> Self {
        Self { search_vertices: 4096, node_budget: 100_000_000, enumeration_cap: 2_000_000 }
    }
}

#[derive(Debug, Clone)]
enum Source {
    Structured(Arc<StructuredForm>),
    Searched(Arc<SearchResult>),
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    graph: Arc<Graph>,
    source: Source,
    constraint: Constraint,
    limits: GroupLimits,
}

/// JSON form of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub method: Method,
    pub order: u128,
    pub generators: Vec<Vec<u32>>,
}

/// The closed-form group of a family graph.
pub fn structured_group(graph: impl Into<Arc<Graph>>) -> Result<PermGroup> {
    let graph = graph.into();
    let form = StructuredForm::for_family(graph.family())?;
    if graph.vertex_count() as u64 != 1u64 << form.positions() {
        return Err(Error::NoStructuredForm(format!("{} with {} vertices", graph.family(), graph.vertex_count())));
    }
    Ok(PermGroup {
        graph,
        source: Source::Structured(Arc::new(form)),
        constraint: Constraint::none(),
        limits: GroupLimits::default(),
    })
}

/// `Aut(G)` by refinement search, with default limits.
pub fn search_automorphisms(graph: impl Into<Arc<Graph>>) -> Result<PermGroup> {
    search_automorphisms_with(graph, GroupLimits::default())
}

pub fn search_automorphisms_with(graph: impl Into<Arc<Graph>>, limits: GroupLimits) -> Result<PermGroup> {
    searched(graph.into(), Constraint::none(), limits)
}

/// The structured group when the family has one, else the searched group.
pub fn automorphism_group(graph: impl Into<Arc<Graph>>) -> Result<PermGroup> {
    automorphism_group_with(graph, GroupLimits::default())
}

pub fn automorphism_group_with(graph: impl Into<Arc<Graph>>, limits: GroupLimits) -> Result<PermGroup> {
    let graph = graph.into();
    match structured_group(Arc::clone(&graph)) {
        Ok(g) => Ok(g.with_limits(limits)),
        Err(Error::NoStructuredForm(_)) => search_automorphisms_with(graph, limits),
        Err(e) => Err(e),
    }
}

fn searched(graph: Arc<Graph>, constraint: Constraint, limits: GroupLimits) -> Result<PermGroup> {
    let n = graph.vertex_count();
    if n > limits.search_vertices {
        return Err(Error::SizeGuard {
            what: format!("automorphism search on {}", graph.family()),
            size: n as u128,
            cap: limits.search_vertices as u128,
        });
    }
    constraint.check(n)?;
    let result = search(&graph, &constraint.dense(n), &SearchOptions { node_budget: limits.node_budget })?;
    Ok(PermGroup { graph, source: Source::Searched(Arc::new(result)), constraint, limits })
}

impl PermGroup {
    pub fn with_limits(mut self, limits: GroupLimits) -> Self {
        self.limits = limits;
        self
    }

    pub fn limits(&self) -> GroupLimits {
        self.limits
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn constraint(&self) -> &Constraint {
        &self.constraint
    }

    /// Search tree size, for searched groups.
    pub fn search_nodes(&self) -> Option<u64> {
        match &self.source {
            Source::Searched(r) => Some(r.nodes),
            Source::Structured(_) => None,
        }
    }

    pub fn method(&self) -> Method {
        match self.source {
            Source::Structured(_) => Method::Structured,
            Source::Searched(_) => Method::Searched,
        }
    }

    pub fn order(&self) -> Result<u128> {
        match &self.source {
            Source::Searched(r) => Ok(r.order()),
            Source::Structured(form) => {
                if self.constraint.is_empty() {
                    return Ok(form.order());
                }
                if let (StructuredForm::Linear { n, blocks }, true) = (form.as_ref(), self.constraint.is_pointwise()) {
                    let fixed: Vec<u64> = self.constraint.classes.iter().map(|c| u64::from(c[0])).collect();
                    return Ok(linear_pointwise_order(*n, blocks, &fixed));
                }
                let mut count = 0u128;
                self.solve(&mut |_| {
                    count += 1;
                    true
                })?;
                Ok(count)
            }
        }
    }

    fn solve(&self, visit: &mut dyn FnMut(SElem) -> bool) -> Result<bool> {
        match &self.source {
            Source::Structured(form) => {
                let view = ClassView::new(&self.constraint.classes);
                solve(form, &view, self.limits.node_budget, visit)
            }
            Source::Searched(_) => unreachable!("solver is only used for structured groups"),
        }
    }

    /// Whether the identity is the only element.
    pub fn is_trivial(&self) -> Result<bool> {
        Ok(self.find_nontrivial()?.is_none())
    }

    /// Some non-identity element, if any.
    pub fn find_nontrivial(&self) -> Result<Option<Automorphism>> {
        match &self.source {
            Source::Searched(r) => Ok(r.generators.first().map(|g| Automorphism::ExplicitPerm { images: g.clone() })),
            Source::Structured(form) => {
                let n = form.positions();
                if let (StructuredForm::Linear { n, blocks }, true) = (form.as_ref(), self.constraint.is_pointwise()) {
                    if !self.constraint.is_empty() {
                        let fixed: Vec<u64> = self.constraint.classes.iter().map(|c| u64::from(c[0])).collect();
                        if linear_pointwise_order(*n, blocks, &fixed) == 1 {
                            return Ok(None);
                        }
                    }
                }
                let mut found = None;
                self.solve(&mut |e| {
                    if e.is_identity() {
                        true
                    } else {
                        found = Some(e);
                        false
                    }
                })?;
                Ok(found.map(|e| e.into_automorphism(n)))
            }
        }
    }

    /// Calls `f` on the image array of every element, in no particular order.
    pub fn for_each_element(&self, f: &mut dyn FnMut(&[u32])) -> Result<()> {
        let order = self.order()?;
        if order > self.limits.enumeration_cap {
            return Err(Error::SizeGuard {
                what: "group enumeration".into(),
                size: order,
                cap: self.limits.enumeration_cap,
            });
        }
        match &self.source {
            Source::Structured(form) => {
                let n = form.positions();
                self.solve(&mut |e| {
                    f(&e.into_automorphism(n).images());
                    true
                })?;
            }
            Source::Searched(r) => {
                let transversals = transversals(r, self.graph.vertex_count());
                let identity: Vec<u32> = (0..self.graph.vertex_count() as u32).collect();
                walk(&transversals, 0, &identity, f);
            }
        }
        Ok(())
    }

    /// All elements as image arrays, sorted.
    pub fn elements(&self) -> Result<Vec<Vec<u32>>> {
        let mut out = Vec::new();
        self.for_each_element(&mut |e| out.push(e.to_vec()))?;
        out.sort_unstable();
        Ok(out)
    }

    /// A generating set, as automorphisms.
    pub fn generators(&self) -> Result<Vec<Automorphism>> {
        match &self.source {
            Source::Searched(r) => {
                Ok(r.generators.iter().map(|g| Automorphism::ExplicitPerm { images: g.clone() }).collect())
            }
            Source::Structured(form) if self.constraint.is_empty() => Ok(form.generators()),
            Source::Structured(_) => {
                let elements = self.elements()?;
                Ok(greedy_generators(&elements)
                    .into_iter()
                    .map(|images| Automorphism::ExplicitPerm { images })
                    .collect())
            }
        }
    }

    /// Generators as image arrays, sorted lexicographically.
    pub fn generator_images(&self) -> Result<Vec<Vec<u32>>> {
        let mut gens: Vec<Vec<u32>> = self.generators()?.iter().map(Automorphism::images).collect();
        gens.sort_unstable();
        Ok(gens)
    }

    /// Membership test. Valid because the group is the full automorphism
    /// group of the constrained graph.
    pub fn contains(&self, images: &[u32]) -> bool {
        is_automorphism(&self.graph, images) && self.constraint.is_preserved_by(images)
    }

    /// The subgroup preserving `extra` as well.
    pub fn stabilizer(&self, extra: &Constraint) -> Result<PermGroup> {
        extra.check(self.graph.vertex_count())?;
        let constraint = self.constraint.refine(extra);
        match &self.source {
            Source::Structured(form) => Ok(PermGroup {
                graph: Arc::clone(&self.graph),
                source: Source::Structured(Arc::clone(form)),
                constraint,
                limits: self.limits,
            }),
            Source::Searched(_) => searched(Arc::clone(&self.graph), constraint, self.limits),
        }
    }

    pub fn pointwise_stabilizer(&self, vertices: &[u32]) -> Result<PermGroup> {
        self.stabilizer(&Constraint::pointwise(vertices))
    }

    pub fn setwise_stabilizer(&self, vertices: &[u32]) -> Result<PermGroup> {
        self.stabilizer(&Constraint::setwise(vertices))
    }

    /// Vertex orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Result<Vec<Vec<u32>>> {
        let n = self.graph.vertex_count();
        if let Source::Structured(form) = &self.source {
            if self.constraint.is_empty() {
                return Ok(if form.is_transitive() {
                    vec![(0..n as u32).collect()]
                } else {
                    (0..2u32).map(|bit| (0..n as u32).filter(|v| v & 1 == bit).collect()).collect()
                });
            }
        }
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut merge = |images: &[u32]| {
            for (v, &w) in images.iter().enumerate() {
                let (a, b) = (find(&mut parent, v as u32), find(&mut parent, w));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        };
        match &self.source {
            Source::Structured(_) => self.for_each_element(&mut |e| merge(e))?,
            Source::Searched(r) => r.generators.iter().for_each(|g| merge(g)),
        }
        let mut groups: HashMap<u32, Vec<u32>> = HashMap::new();
        for v in 0..n as u32 {
            groups.entry(find(&mut parent, v)).or_default().push(v);
        }
        let mut orbits: Vec<Vec<u32>> = groups.into_values().collect();
        orbits.sort_unstable_by_key(|o| o[0]);
        Ok(orbits)
    }

    pub fn is_transitive(&self) -> Result<bool> {
        Ok(self.orbits()?.len() <= 1)
    }

    pub fn summary(&self) -> Result<GroupSummary> {
        Ok(GroupSummary { method: self.method(), order: self.order()?, generators: self.generator_images()? })
    }
}

/// Coset representatives for each level of a searched stabilizer chain.
fn transversals(r: &SearchResult, n: usize) -> Vec<Vec<Vec<u32>>> {
    r.levels
        .iter()
        .map(|level| {
            let gens = &r.generators[..level.gens];
            let mut reps: HashMap<u32, Vec<u32>> = HashMap::new();
            reps.insert(level.base, (0..n as u32).collect());
            let mut queue = VecDeque::from([level.base]);
            while let Some(p) = queue.pop_front() {
                let t = reps[&p].clone();
                for s in gens {
                    let q = s[p as usize];
                    if let std::collections::hash_map::Entry::Vacant(slot) = reps.entry(q) {
                        slot.insert(t.iter().map(|&x| s[x as usize]).collect());
                        queue.push_back(q);
                    }
                }
            }
            debug_assert_eq!(reps.len(), level.orbit.len());
            let mut out: Vec<(u32, Vec<u32>)> = reps.into_iter().collect();
            out.sort_unstable_by_key(|(p, _)| *p);
            out.into_iter().map(|(_, t)| t).collect()
        })
        .collect()
}

fn walk(transversals: &[Vec<Vec<u32>>], level: usize, acc: &[u32], f: &mut dyn FnMut(&[u32])) {
    if level == transversals.len() {
        f(acc);
        return;
    }
    for t in &transversals[level] {
        let next: Vec<u32> = t.iter().map(|&x| acc[x as usize]).collect();
        walk(transversals, level + 1, &next, f);
    }
}

/// Picks elements in order, keeping each one not generated by those before.
fn greedy_generators(elements: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let identity: Vec<u32> = (0..first.len() as u32).collect();
    let mut closure: HashSet<Vec<u32>> = HashSet::from([identity]);
    let mut gens: Vec<Vec<u32>> = Vec::new();
    for e in elements {
        if closure.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let mut queue: VecDeque<Vec<u32>> = closure.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y: Vec<u32> = x.iter().map(|&v| g[v as usize]).collect();
                if closure.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::{complete_graph, cycle_graph};

    fn family(spec: FamilySpec) -> Arc<Graph> {
        Arc::new(build_family(&spec).unwrap())
    }

    #[test]
    fn constraint_refinement() {
        let a = Constraint::setwise(&[1, 2, 3]);
        let b = Constraint::setwise(&[3, 4]);
        let r = a.refine(&b);
        assert_eq!(r.classes(), &[vec![1, 2], vec![3], vec![4]]);
        assert!(Constraint::from_classes(vec![vec![1], vec![1, 2]]).is_err());
        let dense = Constraint::from_colors(&[0, 1, 1, 1, 2]);
        assert_eq!(dense.classes(), &[vec![0], vec![4]]);
        assert!(Constraint::pointwise(&[5, 2]).is_pointwise());
    }

    #[test]
    fn trivial_and_full_stabilizers() {
        let g = search_automorphisms(Arc::new(cycle_graph(6))).unwrap();
        assert_eq!(g.order().unwrap(), 12);
        let all: Vec<u32> = (0..6).collect();
        assert_eq!(g.pointwise_stabilizer(&all).unwrap().order().unwrap(), 1);
        assert_eq!(g.setwise_stabilizer(&[]).unwrap().order().unwrap(), 12);
        assert_eq!(g.setwise_stabilizer(&all).unwrap().order().unwrap(), 12);
        let k4 = search_automorphisms(Arc::new(complete_graph(4))).unwrap();
        assert!(k4.pointwise_stabilizer(&[0, 1, 2]).unwrap().is_trivial().unwrap());
        assert!(!k4.pointwise_stabilizer(&[0, 1]).unwrap().is_trivial().unwrap());
    }

    #[test]
    fn structured_and_searched_element_sets_coincide() {
        for spec in [
            FamilySpec::Hypercube { n: 3 },
            FamilySpec::Hypercube { n: 4 },
            FamilySpec::Folded { n: 4 },
            FamilySpec::Augmented { n: 4 },
            FamilySpec::Augmented { n: 5 },
            FamilySpec::LocallyTwisted { n: 4 },
            FamilySpec::LocallyTwisted { n: 5 },
            FamilySpec::Enhanced { n: 5, k: 2 },
            FamilySpec::Enhanced { n: 5, k: 4 },
            FamilySpec::Enhanced { n: 6, k: 3 },
        ] {
            let g = family(spec.clone());
            let s = structured_group(Arc::clone(&g)).unwrap();
            let t = search_automorphisms(g).unwrap();
            assert_eq!(s.order().unwrap(), t.order().unwrap(), "{spec}");
            assert_eq!(s.elements().unwrap(), t.elements().unwrap(), "{spec}");
        }
    }

    #[test]
    fn augmented_stabilizers() {
        let g = structured_group(family(FamilySpec::Augmented { n: 4 })).unwrap();
        let stab = g.pointwise_stabilizer(&[0]).unwrap();
        let mut expected: Vec<Vec<u32>> = (1..=8)
            .map(|i| crate::autgroup::aq_base(4, i).unwrap().images())
            .collect();
        expected.sort_unstable();
        assert_eq!(stab.elements().unwrap(), expected);
        // any two vertices can be swapped
        for b in 1..16 {
            assert!(!g.setwise_stabilizer(&[0, b]).unwrap().is_trivial().unwrap());
        }
        assert!(g.setwise_stabilizer(&[0b0000, 0b1001, 0b0110]).unwrap().is_trivial().unwrap());
        let g6 = structured_group(family(FamilySpec::Augmented { n: 6 })).unwrap();
        assert!(g6.pointwise_stabilizer(&[0, 0b111001]).unwrap().is_trivial().unwrap());
    }

    #[test]
    fn pointwise_within_setwise() {
        let g = structured_group(family(FamilySpec::Folded { n: 4 })).unwrap();
        for s in [vec![0u32, 3, 5], vec![1, 2, 4, 8], vec![0, 15]] {
            let point = g.pointwise_stabilizer(&s).unwrap().elements().unwrap();
            let set = g.setwise_stabilizer(&s).unwrap();
            for e in &point {
                assert!(set.contains(e));
            }
            assert!(set.order().unwrap() >= point.len() as u128);
        }
    }

    #[test]
    fn searched_stabilizers_match_structured() {
        let graph = family(FamilySpec::Folded { n: 5 });
        let s = structured_group(Arc::clone(&graph)).unwrap();
        let t = search_automorphisms(graph).unwrap();
        for set in [vec![0u32], vec![0, 7], vec![0, 7, 25], vec![3, 12, 17, 30]] {
            for c in [Constraint::pointwise(&set), Constraint::setwise(&set)] {
                let a = s.stabilizer(&c).unwrap();
                let b = t.stabilizer(&c).unwrap();
                assert_eq!(a.order().unwrap(), b.order().unwrap(), "{c:?}");
                assert_eq!(a.is_trivial().unwrap(), b.is_trivial().unwrap());
            }
        }
    }

    #[test]
    fn generators_and_orbits() {
        let g = structured_group(family(FamilySpec::LocallyTwisted { n: 4 })).unwrap();
        assert_eq!(g.orbits().unwrap().len(), 2);
        let stab = structured_group(family(FamilySpec::Hypercube { n: 3 }))
            .unwrap()
            .pointwise_stabilizer(&[0])
            .unwrap();
        let gens = stab.generators().unwrap();
        assert!(gens.len() <= 3);
        let orbits = stab.orbits().unwrap();
        assert_eq!(orbits, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6], vec![7]]);
        let summary = stab.summary().unwrap();
        assert_eq!(summary.order, 6);
        let json = serde_json::to_string(&summary).unwrap();
        assert!(json.contains("\"order\":6"));
    }

    #[test]
    fn enumeration_cap() {
        let g = structured_group(family(FamilySpec::Hypercube { n: 12 }))
            .unwrap()
            .with_limits(GroupLimits { enumeration_cap: 1000, ..GroupLimits::default() });
        assert!(matches!(g.elements(), Err(Error::SizeGuard { .. })));
    }
}
