//! The seven hypercube-variant families and their edge rules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{checked_size, Graph, Labeling};
use crate::vertex::{all_ones, position_bit};

/// Default vertex cap for generated families.
pub const DEFAULT_MAX_VERTICES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// `Q_n`.
    Hypercube { n: u32 },
    /// `Q_n^k`: vertices at hypercube distance at most `k` are adjacent.
    HypercubePower { n: u32, k: u32 },
    /// `H(m, n)`, the Cartesian product of `n` copies of `K_m`.
    Hamming { m: u32, n: u32 },
    /// `FQ_n`.
    Folded { n: u32 },
    /// `Q_{n,k}`.
    Enhanced { n: u32, k: u32 },
    /// `AQ_n`.
    Augmented { n: u32 },
    /// `LTQ_n`.
    LocallyTwisted { n: u32 },
    /// Anything else (products, complements, parsed files).
    Explicit { name: String },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterOutOfRange(msg));
        match *self {
            FamilySpec::Hypercube { n }
            | FamilySpec::Folded { n }
            | FamilySpec::Augmented { n } if n == 0 => bad(format!("{} requires n >= 1", self.name())),
            FamilySpec::HypercubePower { n, k } if n == 0 || k == 0 => {
                bad(format!("hypercube power requires n >= 1 and k >= 1, got n={n}, k={k}"))
            }
            FamilySpec::Hamming { m, n } if m < 2 || n == 0 => {
                bad(format!("Hamming graph requires m >= 2 and n >= 1, got m={m}, n={n}"))
            }
            FamilySpec::Enhanced { n, k } if k < 1 || k + 1 > n => {
                bad(format!("enhanced hypercube requires 1 <= k <= n-1, got n={n}, k={k}"))
            }
            FamilySpec::LocallyTwisted { n } if n < 2 => {
                bad(format!("locally twisted hypercube requires n >= 2, got n={n}"))
            }
            _ => match self.positions() {
                Some(n) if n > 63 => bad(format!("n={n} exceeds 63 positions")),
                _ => Ok(()),
            },
        }
    }

    /// Number of positions `n` of a vertex word.
    pub fn positions(&self) -> Option<u32> {
        match *self {
            FamilySpec::Hypercube { n }
            | FamilySpec::HypercubePower { n, .. }
            | FamilySpec::Hamming { n, .. }
            | FamilySpec::Folded { n }
            | FamilySpec::Enhanced { n, .. }
            | FamilySpec::Augmented { n }
            | FamilySpec::LocallyTwisted { n } => Some(n),
            FamilySpec::Explicit { .. } => None,
        }
    }

    pub fn alphabet(&self) -> u32 {
        match *self {
            FamilySpec::Hamming { m, .. } => m,
            _ => 2,
        }
    }

    /// Short name used in file names, cache keys and reports.
    pub fn name(&self) -> String {
        match self {
            FamilySpec::Hypercube { n } => format!("Q{n}"),
            FamilySpec::HypercubePower { n, k } => format!("Q{n}^{k}"),
            FamilySpec::Hamming { m, n } => format!("H({m},{n})"),
            FamilySpec::Folded { n } => format!("FQ{n}"),
            FamilySpec::Enhanced { n, k } => format!("Q{n},{k}"),
            FamilySpec::Augmented { n } => format!("AQ{n}"),
            FamilySpec::LocallyTwisted { n } => format!("LTQ{n}"),
            FamilySpec::Explicit { name } => name.clone(),
        }
    }

    /// The degree every vertex of the family has.
    pub fn expected_degree(&self) -> Option<u64> {
        let binom = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
        Some(match *self {
            FamilySpec::Hypercube { n } => u64::from(n),
            FamilySpec::HypercubePower { n, k } => (1..=k.min(n)).map(|i| binom(u64::from(n), u64::from(i))).sum(),
            FamilySpec::Hamming { m, n } => u64::from(n) * u64::from(m - 1),
            FamilySpec::Folded { n: 1 } => 1,
            FamilySpec::Folded { n } | FamilySpec::Enhanced { n, .. } => u64::from(n) + 1,
            FamilySpec::Augmented { n } => 2 * u64::from(n) - 1,
            FamilySpec::LocallyTwisted { n } => u64::from(n),
            FamilySpec::Explicit { .. } => return None,
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    build_family_capped(spec, DEFAULT_MAX_VERTICES)
}

/// Builds the family graph, refusing anything above `max_vertices` vertices.
pub fn build_family_capped(spec: &FamilySpec, max_vertices: usize) -> Result<Graph> {
    spec.validate()?;
    let n = match spec.positions() {
        Some(n) => n,
        None => return Err(Error::ParameterOutOfRange("explicit graphs are not generated".into())),
    };
    let size = checked_size(n, spec.alphabet(), max_vertices)?;
    let labeling = Labeling::Words { n, alphabet: spec.alphabet() };
    let lists = match *spec {
        FamilySpec::Hamming { m, n } => hamming_lists(m, n, size),
        FamilySpec::LocallyTwisted { n } => locally_twisted_lists(n),
        _ => {
            let masks = xor_masks(spec);
            (0..size as u64)
                .map(|v| masks.iter().map(|&m| (v ^ m) as u32).collect())
                .collect()
        }
    };
    let g = Graph::from_lists(lists, spec.clone(), labeling);
    Ok(g)
}

/// Families that are Cayley graphs of `Z_2^n`: the connection set.
pub fn xor_masks(spec: &FamilySpec) -> Vec<u64> {
    let mut masks: Vec<u64> = match *spec {
        FamilySpec::Hypercube { n } => (1..=n).map(|i| position_bit(n, i)).collect(),
        FamilySpec::HypercubePower { n, k } => {
            (1..=all_ones(n)).filter(|m| m.count_ones() <= k).collect()
        }
        FamilySpec::Folded { n } => {
            let mut m: Vec<u64> = (1..=n).map(|i| position_bit(n, i)).collect();
            m.push(all_ones(n));
            m
        }
        // Positions k..n complemented together.
        FamilySpec::Enhanced { n, k } => {
            let mut m: Vec<u64> = (1..=n).map(|i| position_bit(n, i)).collect();
            m.push(all_ones(n - k + 1));
            m
        }
        // A common prefix of length l <= n-2, then a fully complemented suffix.
        FamilySpec::Augmented { n } => {
            let mut m: Vec<u64> = (1..=n).map(|i| position_bit(n, i)).collect();
            m.extend((2..=n).map(all_ones));
            m
        }
        _ => Vec::new(),
    };
    masks.sort_unstable();
    masks.dedup();
    masks
}

fn hamming_lists(m: u32, n: u32, size: usize) -> Vec<Vec<u32>> {
    let m = u64::from(m);
    (0..size as u64)
        .map(|v| {
            let mut list = Vec::new();
            let mut place = 1u64;
            for _ in 0..n {
                let digit = (v / place) % m;
                for d in 0..m {
                    if d != digit {
                        list.push((v - digit * place + d * place) as u32);
                    }
                }
                place *= m;
            }
            list
        })
        .collect()
}

/// `LTQ_n` by the two-copy recursion starting from `LTQ_2 = Q_2`: the new
/// copy gets prefix 1, and `0 x_2 x_3 .. x_j` is joined to
/// `1 (x_2 + x_j) x_3 .. x_j`.
fn locally_twisted_lists(n: u32) -> Vec<Vec<u32>> {
    let mut edges: Vec<(u32, u32)> = vec![(0, 1), (0, 2), (1, 3), (2, 3)];
    for j in 3..=n {
        let top = 1u32 << (j - 1);
        let mut next = Vec::with_capacity(edges.len() * 2 + top as usize);
        for &(a, b) in &edges {
            next.push((a, b));
            next.push((a | top, b | top));
        }
        for x in 0..top {
            let twisted = x ^ ((x & 1) << (j - 2));
            next.push((x, top | twisted));
        }
        edges = next;
    }
    let mut lists = vec![Vec::new(); 1 << n];
    for (a, b) in edges {
        lists[a as usize].push(b);
        lists[b as usize].push(a);
    }
    lists
}

/// Pairwise edge rule of each family, written directly from its definition.
pub fn family_adjacent(spec: &FamilySpec, u: u64, v: u64) -> bool {
    if u == v {
        return false;
    }
    let x = u ^ v;
    match *spec {
        FamilySpec::Hypercube { .. } => x.count_ones() == 1,
        FamilySpec::HypercubePower { k, .. } => x.count_ones() <= k,
        FamilySpec::Folded { n } => x.count_ones() == 1 || x.count_ones() == n,
        FamilySpec::Enhanced { n, k } => {
            // y_i = x_i for i < k and y_i = 1 + x_i for k <= i <= n
            let same_prefix = (1..k).all(|i| x & position_bit(n, i) == 0);
            let flipped_suffix = (k..=n).all(|i| x & position_bit(n, i) != 0);
            x.count_ones() == 1 || (same_prefix && flipped_suffix)
        }
        FamilySpec::Augmented { n } => {
            x.count_ones() == 1
                || (0..=n.saturating_sub(2)).any(|l| {
                    (1..=l).all(|i| x & position_bit(n, i) == 0)
                        && (l + 1..=n).all(|i| x & position_bit(n, i) != 0)
                })
        }
        FamilySpec::LocallyTwisted { n } => ltq_adjacent(n, u, v),
        FamilySpec::Hamming { m, n } => {
            let m = u64::from(m);
            let (mut a, mut b, mut diff) = (u, v, 0);
            for _ in 0..n {
                if a % m != b % m {
                    diff += 1;
                }
                a /= m;
                b /= m;
            }
            diff == 1
        }
        FamilySpec::Explicit { .. } => false,
    }
}

fn ltq_adjacent(n: u32, u: u64, v: u64) -> bool {
    if n == 2 {
        return (u ^ v).count_ones() == 1;
    }
    let top = 1u64 << (n - 1);
    let rest = top - 1;
    match (u & top != 0, v & top != 0) {
        (false, false) | (true, true) => ltq_adjacent(n - 1, u & rest, v & rest),
        (a_top, _) => {
            let (zero, one) = if a_top { (v, u) } else { (u, v) };
            let x = zero & rest;
            (one & rest) == x ^ ((x & 1) << (n - 2))
        }
    }
}

/// `AQ_n` by the two-copy recursion, starting from `AQ_1 = K_2`.
pub fn augmented_recursive(n: u32) -> Result<Graph> {
    let spec = FamilySpec::Augmented { n };
    spec.validate()?;
    checked_size(n, 2, DEFAULT_MAX_VERTICES)?;
    let mut edges: Vec<(u32, u32)> = vec![(0, 1)];
    for j in 2..=n {
        let top = 1u32 << (j - 1);
        let low = top - 1;
        let mut next = Vec::with_capacity(edges.len() * 2 + 2 * top as usize);
        for &(a, b) in &edges {
            next.push((a, b));
            next.push((a | top, b | top));
        }
        for a in 0..top {
            next.push((a, top | a));
            next.push((a, top | (!a & low)));
        }
        edges = next;
    }
    Graph::from_edges(1 << n, edges, spec, Labeling::Words { n, alphabet: 2 })
}
