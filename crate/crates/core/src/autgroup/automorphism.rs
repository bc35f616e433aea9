//! Automorphisms, stored either structurally or as image arrays.
//!
//! Composition follows the usual convention `(s ∘ t)(v) = s(t(v))`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex::{all_ones, position_bit, BitVertex};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Automorphism {
    /// `images[v]` is the image of vertex `v`.
    ExplicitPerm { images: Vec<u32> },
    /// `v -> c + (v_{pi(1)} ... v_{pi(n)})`, `pi` given 1-based.
    HypercubeAff { n: u32, c: u64, pi: Vec<u32> },
    /// `v -> c + sum v_i phi(e_i)` where `phi` permutes the symbols
    /// `e_1, ..., e_n` (numbered `1..=n`) and the all-ones word (numbered `n + 1`).
    FoldedAff { n: u32, c: u64, phi: Vec<u32> },
    /// `v -> c + sum v_i images[i-1]` for an arbitrary linear part.
    BlockAff { n: u32, c: u64, images: Vec<u64> },
    /// `v -> c + phi_base(v)` with `phi_base` one of the eight maps fixing
    /// the zero word of the augmented cube.
    AugmentedAff { n: u32, c: u64, base: u8 },
    /// Translation by a word whose last position is 0.
    LtqTranslation { n: u32, c: u64 },
}

impl Automorphism {
    pub fn identity_on(vertex_count: usize) -> Self {
        Automorphism::ExplicitPerm { images: (0..vertex_count as u32).collect() }
    }

    /// Number of positions, for the structured variants.
    pub fn positions(&self) -> Option<u32> {
        match *self {
            Automorphism::ExplicitPerm { .. } => None,
            Automorphism::HypercubeAff { n, .. }
            | Automorphism::FoldedAff { n, .. }
            | Automorphism::BlockAff { n, .. }
            | Automorphism::AugmentedAff { n, .. }
            | Automorphism::LtqTranslation { n, .. } => Some(n),
        }
    }

    /// Size of the vertex set the map acts on.
    pub fn vertex_count(&self) -> usize {
        match self {
            Automorphism::ExplicitPerm { images } => images.len(),
            other => 1usize << other.positions().expect("structured"),
        }
    }

    /// Linear part as images of `e_1, ..., e_n`, for affine variants.
    pub fn linear_images(&self) -> Option<Vec<u64>> {
        match self {
            Automorphism::HypercubeAff { n, pi, .. } => {
                let mut images = vec![0; *n as usize];
                // output position i reads input position pi(i)
                for (i, &p) in pi.iter().enumerate() {
                    images[p as usize - 1] = position_bit(*n, i as u32 + 1);
                }
                Some(images)
            }
            Automorphism::FoldedAff { n, phi, .. } => {
                let symbol = |s: u32| if s == n + 1 { all_ones(*n) } else { position_bit(*n, s) };
                Some(phi[..*n as usize].iter().map(|&s| symbol(s)).collect())
            }
            Automorphism::BlockAff { images, .. } => Some(images.clone()),
            Automorphism::LtqTranslation { n, .. } => {
                Some((1..=*n).map(|i| position_bit(*n, i)).collect())
            }
            _ => None,
        }
    }

    fn translation(&self) -> u64 {
        match *self {
            Automorphism::ExplicitPerm { .. } => 0,
            Automorphism::HypercubeAff { c, .. }
            | Automorphism::FoldedAff { c, .. }
            | Automorphism::BlockAff { c, .. }
            | Automorphism::AugmentedAff { c, .. }
            | Automorphism::LtqTranslation { c, .. } => c,
        }
    }

    /// Image of the vertex with index `v`.
    pub fn apply_index(&self, v: u64) -> u64 {
        match self {
            Automorphism::ExplicitPerm { images } => u64::from(images[v as usize]),
            Automorphism::HypercubeAff { n, c, pi } => {
                let mut out = 0;
                for (i, &p) in pi.iter().enumerate() {
                    if v & position_bit(*n, p) != 0 {
                        out |= position_bit(*n, i as u32 + 1);
                    }
                }
                c ^ out
            }
            Automorphism::LtqTranslation { c, .. } => c ^ v,
            Automorphism::AugmentedAff { n, c, base } => c ^ aq_apply(*n, *base, v),
            Automorphism::FoldedAff { .. } | Automorphism::BlockAff { .. } => {
                let n = self.positions().expect("structured");
                let images = self.linear_images().expect("affine");
                self.translation() ^ apply_linear(n, &images, v)
            }
        }
    }

    pub fn apply(&self, v: &BitVertex) -> Result<BitVertex> {
        match self.positions() {
            Some(n) if v.n == n && v.alphabet == 2 => BitVertex::binary(self.apply_index(v.word), n),
            Some(n) => Err(Error::DimensionMismatch {
                expected: format!("binary word of length {n}"),
                got: format!("{} positions over alphabet {}", v.n, v.alphabet),
            }),
            None if (v.word as usize) < self.vertex_count() => {
                BitVertex::new(self.apply_index(v.word), v.n, v.alphabet)
            }
            None => Err(Error::VertexOutOfRange(v.word)),
        }
    }

    /// Image array over all vertices.
    pub fn images(&self) -> Vec<u32> {
        match self {
            Automorphism::ExplicitPerm { images } => images.clone(),
            Automorphism::AugmentedAff { .. } | Automorphism::LtqTranslation { .. } => {
                (0..self.vertex_count() as u64).map(|v| self.apply_index(v) as u32).collect()
            }
            _ => {
                let n = self.positions().expect("structured");
                let images = self.linear_images().expect("affine");
                affine_images(n, self.translation(), &images)
            }
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Automorphism::ExplicitPerm { images } => images.iter().enumerate().all(|(i, &v)| i as u32 == v),
            Automorphism::AugmentedAff { c, base, .. } => *c == 0 && *base == 1,
            Automorphism::LtqTranslation { c, .. } => *c == 0,
            other => {
                let n = other.positions().expect("structured");
                other.translation() == 0
                    && other
                        .linear_images()
                        .expect("affine")
                        .iter()
                        .enumerate()
                        .all(|(i, &img)| img == position_bit(n, i as u32 + 1))
            }
        }
    }

    /// `self ∘ other`. Affine maps compose structurally; anything else falls
    /// back to image arrays.
    pub fn compose(&self, other: &Automorphism) -> Result<Automorphism> {
        if self.vertex_count() != other.vertex_count() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} vertices", self.vertex_count()),
                got: format!("{} vertices", other.vertex_count()),
            });
        }
        if let (Automorphism::LtqTranslation { n, c: a }, Automorphism::LtqTranslation { c: b, .. }) = (self, other) {
            return Ok(Automorphism::LtqTranslation { n: *n, c: a ^ b });
        }
        if let (Some(n), Some(outer), Some(inner)) = (self.positions(), self.linear_images(), other.linear_images()) {
            let c = self.translation() ^ apply_linear(n, &outer, other.translation());
            let images = inner.iter().map(|&w| apply_linear(n, &outer, w)).collect();
            return Ok(Automorphism::BlockAff { n, c, images });
        }
        let (s, t) = (self.images(), other.images());
        Ok(Automorphism::ExplicitPerm { images: t.iter().map(|&v| s[v as usize]).collect() })
    }

    pub fn inverse(&self) -> Automorphism {
        let images = self.images();
        let mut inv = vec![0u32; images.len()];
        for (v, &w) in images.iter().enumerate() {
            inv[w as usize] = v as u32;
        }
        Automorphism::ExplicitPerm { images: inv }
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.vertex_count() == g.vertex_count() && is_automorphism(g, &self.images())
    }
}

/// `sum v_i images[i-1]` over the positions `i` where `v` has a 1.
#[inline]
pub(crate) fn apply_linear(n: u32, images: &[u64], v: u64) -> u64 {
    let mut out = 0;
    let mut rest = v;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        out ^= images[(n - 1 - bit) as usize];
        rest &= rest - 1;
    }
    out
}

/// Image array of `v -> c + L(v)`, built in Gray-code order.
pub(crate) fn affine_images(n: u32, c: u64, images: &[u64]) -> Vec<u32> {
    let size = 1usize << n;
    let mut out = vec![0u32; size];
    let mut value = c;
    let mut v = 0usize;
    out[0] = c as u32;
    for step in 1..size {
        let bit = step.trailing_zeros();
        v ^= 1 << bit;
        value ^= images[(n - 1 - bit) as usize];
        out[v] = value as u32;
    }
    out
}

/// True iff `map` is a bijection of `V(g)` preserving adjacency and
/// non-adjacency.
pub fn is_automorphism(g: &Graph, map: &[u32]) -> bool {
    let n = g.vertex_count();
    if map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &w in map {
        if w as usize >= n || std::mem::replace(&mut seen[w as usize], true) {
            return false;
        }
    }
    // A bijection sending every edge to an edge is onto the edge set.
    (0..n as u32).all(|v| {
        g.degree(map[v as usize]) == g.degree(v)
            && g.neighbors(v).iter().all(|&u| g.has_edge(map[v as usize], map[u as usize]))
    })
}

/// Affine automorphism of `FQ_n` induced by a permutation `phi` of the
/// symbols `e_1, ..., e_n, 1`, numbered `1..=n+1`, with no translation.
pub fn fq_phi_extend(n: u32, phi: &[u32]) -> Result<Automorphism> {
    let mut sorted = phi.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n + 1).collect::<Vec<_>>() {
        return Err(Error::ParameterOutOfRange(format!(
            "{phi:?} is not a permutation of 1..={}",
            n + 1
        )));
    }
    Ok(Automorphism::FoldedAff { n, c: 0, phi: phi.to_vec() })
}

/// Targets of the eight maps fixing `0` in `AQ_n`, one row per source
/// pattern `0A00, 0A01, 0A10, 0A11, 1A00, 1A01, 1A10, 1A11`. `A'` is the
/// complement of `A`, `AR` its reversal. Under `phi_2` the source `1A10`
/// goes to `1A'01`, not `1A'10`, which is already the image of `1A01`.
const AQ_TABLE: [[&str; 8]; 8] = [
    ["0A00", "0A01", "0A10", "0A11", "1A00", "1A01", "1A10", "1A11"],
    ["0A00", "0A01", "0A10", "0A11", "1A'11", "1A'10", "1A'01", "1A'00"],
    ["0A00", "0A10", "0A01", "0A11", "1A00", "1A10", "1A01", "1A11"],
    ["0A00", "0A10", "0A01", "0A11", "1A'11", "1A'01", "1A'10", "1A'00"],
    ["0AR00", "1A'R11", "1AR00", "0A'R11", "0AR10", "1A'R01", "1AR10", "0A'R01"],
    ["0AR00", "1A'R11", "1AR00", "0A'R11", "0AR01", "1A'R10", "1AR01", "0A'R10"],
    ["0AR00", "1AR00", "1A'R11", "0A'R11", "0AR10", "1AR10", "1A'R01", "0A'R01"],
    ["0AR00", "1AR00", "1A'R11", "0A'R11", "0AR01", "1AR01", "1A'R10", "0A'R10"],
];

/// `phi_base(v)` for the augmented cube `AQ_n`, `n >= 3`.
pub(crate) fn aq_apply(n: u32, base: u8, v: u64) -> u64 {
    let len = n - 3;
    let first = (v >> (n - 1)) & 1;
    let tail = v & 3;
    let a = (v >> 2) & all_ones(len);
    let target = AQ_TABLE[base as usize - 1][(first * 4 + tail) as usize].as_bytes();
    let bit = |b: u8| u64::from(b - b'0');
    let mut middle = a;
    let mut rest = &target[2..];
    if rest[0] == b'\'' {
        middle = !middle & all_ones(len);
        rest = &rest[1..];
    }
    if rest[0] == b'R' {
        if len > 0 {
            middle = middle.reverse_bits() >> (64 - len);
        }
        rest = &rest[1..];
    }
    (bit(target[0]) << (n - 1)) | (middle << 2) | (bit(rest[0]) << 1) | bit(rest[1])
}

/// One of the eight automorphisms of `AQ_n` fixing `0`, `idx` in `1..=8`.
pub fn aq_base(n: u32, idx: u8) -> Result<Automorphism> {
    if n < 4 {
        return Err(Error::ParameterOutOfRange(format!("aq_base needs n >= 4, got {n}")));
    }
    if !(1..=8).contains(&idx) {
        return Err(Error::ParameterOutOfRange(format!("aq_base index {idx} outside 1..=8")));
    }
    Ok(Automorphism::AugmentedAff { n, c: 0, base: idx })
}
