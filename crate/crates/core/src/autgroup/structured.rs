//! Automorphism groups known in closed form.
//!
//! Every structured group consists of maps `v -> c + L(v)`. For the linear
//! families `L` is a product of blocks acting on disjoint position sets:
//! a permutation block permutes the unit vectors of its positions, a folded
//! block permutes those unit vectors together with the block's all-ones
//! word. The augmented cube uses the eight maps fixing `0`, the locally
//! twisted cube only translations with last position 0.
//!
//! Internally linear parts are indexed by bit (bit `b` is position `n - b`).

use std::collections::HashMap;

use crate::autgroup::automorphism::{aq_apply, Automorphism};
use crate::error::{Error, Result};
use crate::family::FamilySpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum BlockKind {
    Perm,
    Folded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Block {
    pub kind: BlockKind,
    pub bits: Vec<u32>,
    pub symbols: Vec<u64>,
}

impl Block {
    fn new(kind: BlockKind, bits: Vec<u32>) -> Self {
        let mut symbols: Vec<u64> = bits.iter().map(|&b| 1u64 << b).collect();
        if kind == BlockKind::Folded {
            symbols.push(symbols.iter().fold(0, |acc, s| acc | s));
        }
        Self { kind, bits, symbols }
    }

    fn order(&self) -> u128 {
        factorial(self.symbols.len() as u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum StructuredForm {
    Linear { n: u32, blocks: Vec<Block> },
    Augmented { n: u32 },
    Ltq { n: u32 },
}

pub(crate) fn factorial(k: u32) -> u128 {
    (1..=u128::from(k)).fold(1u128, |acc, x| acc.saturating_mul(x))
}

fn hypercube(n: u32) -> StructuredForm {
    StructuredForm::Linear { n, blocks: vec![Block::new(BlockKind::Perm, (0..n).collect())] }
}

impl StructuredForm {
    pub fn for_family(spec: &FamilySpec) -> Result<Self> {
        spec.validate()?;
        let none = || Err(Error::NoStructuredForm(spec.name()));
        match *spec {
            FamilySpec::Hypercube { n } | FamilySpec::Hamming { m: 2, n } | FamilySpec::Folded { n: n @ 1 } => {
                Ok(hypercube(n))
            }
            FamilySpec::HypercubePower { n, k } if k == 1 || (k % 2 == 1 && k + 2 <= n) => Ok(hypercube(n)),
            FamilySpec::Folded { n } | FamilySpec::Enhanced { n, k: 1 } if n == 2 || n >= 4 => {
                Ok(StructuredForm::Linear { n, blocks: vec![Block::new(BlockKind::Folded, (0..n).collect())] })
            }
            FamilySpec::Enhanced { n, k } if n - k + 1 != 3 && k > 1 => {
                let l = n - k + 1;
                Ok(StructuredForm::Linear {
                    n,
                    blocks: vec![
                        Block::new(BlockKind::Perm, (l..n).collect()),
                        Block::new(BlockKind::Folded, (0..l).collect()),
                    ],
                })
            }
            FamilySpec::Augmented { n } if n >= 4 => Ok(StructuredForm::Augmented { n }),
            FamilySpec::LocallyTwisted { n } if n >= 4 => Ok(StructuredForm::Ltq { n }),
            _ => none(),
        }
    }

    pub fn positions(&self) -> u32 {
        match *self {
            StructuredForm::Linear { n, .. } | StructuredForm::Augmented { n } | StructuredForm::Ltq { n } => n,
        }
    }

    pub fn order(&self) -> u128 {
        match self {
            StructuredForm::Linear { n, blocks } => {
                blocks.iter().fold(1u128 << n, |acc, b| acc.saturating_mul(b.order()))
            }
            StructuredForm::Augmented { n } => 8u128 << n,
            StructuredForm::Ltq { n } => 1u128 << (n - 1),
        }
    }

    /// Translations form a subgroup acting transitively except for `LTQ_n`,
    /// which has the two orbits given by the last position.
    pub fn is_transitive(&self) -> bool {
        !matches!(self, StructuredForm::Ltq { .. })
    }

    /// Generators: unit translations and, per block, transpositions of
    /// consecutive symbols.
    pub fn generators(&self) -> Vec<Automorphism> {
        let n = self.positions();
        match self {
            StructuredForm::Linear { blocks, .. } => {
                let identity: Vec<u64> = (0..n).map(|b| 1u64 << b).collect();
                let mut gens: Vec<Automorphism> = (0..n)
                    .map(|b| SElem::Linear { c: 1 << b, images: identity.clone() }.into_automorphism(n))
                    .collect();
                for block in blocks {
                    for w in block.symbols.windows(2) {
                        let images = identity
                            .iter()
                            .map(|&img| {
                                if img == w[0] {
                                    w[1]
                                } else if img == w[1] {
                                    w[0]
                                } else {
                                    img
                                }
                            })
                            .collect();
                        gens.push(SElem::Linear { c: 0, images }.into_automorphism(n));
                    }
                }
                gens
            }
            StructuredForm::Augmented { .. } => {
                let mut gens: Vec<Automorphism> =
                    (0..n).map(|b| Automorphism::AugmentedAff { n, c: 1 << b, base: 1 }).collect();
                gens.extend((2..=8).map(|base| Automorphism::AugmentedAff { n, c: 0, base }));
                gens
            }
            StructuredForm::Ltq { .. } => {
                (1..n).map(|b| Automorphism::LtqTranslation { n, c: 1 << b }).collect()
            }
        }
    }
}

/// An element produced by the solver. `images` are indexed by bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum SElem {
    Linear { c: u64, images: Vec<u64> },
    Augmented { c: u64, base: u8 },
    Ltq { c: u64 },
}

impl SElem {
    #[cfg(test)]
    pub fn apply(&self, n: u32, v: u64) -> u64 {
        match self {
            SElem::Linear { c, images } => {
                let mut out = *c;
                let mut rest = v;
                while rest != 0 {
                    out ^= images[rest.trailing_zeros() as usize];
                    rest &= rest - 1;
                }
                out
            }
            SElem::Augmented { c, base } => c ^ aq_apply(n, *base, v),
            SElem::Ltq { c } => c ^ v,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            SElem::Linear { c, images } => *c == 0 && images.iter().enumerate().all(|(b, &img)| img == 1 << b),
            SElem::Augmented { c, base } => *c == 0 && *base == 1,
            SElem::Ltq { c } => *c == 0,
        }
    }

    pub fn into_automorphism(self, n: u32) -> Automorphism {
        match self {
            SElem::Linear { c, images } => {
                // position i is bit n - i
                let by_position = (1..=n).map(|i| images[(n - i) as usize]).collect();
                Automorphism::BlockAff { n, c, images: by_position }
            }
            SElem::Augmented { c, base } => Automorphism::AugmentedAff { n, c, base },
            SElem::Ltq { c } => Automorphism::LtqTranslation { n, c },
        }
    }
}

/// Explicit classes of a coloring; every other vertex shares one background
/// class.
pub(crate) struct ClassView<'a> {
    pub classes: &'a [Vec<u32>],
    pub class_of: HashMap<u32, u32>,
}

impl<'a> ClassView<'a> {
    pub fn new(classes: &'a [Vec<u32>]) -> Self {
        let class_of = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |&v| (v, i as u32)))
            .collect();
        Self { classes, class_of }
    }

    fn anchor_class(&self) -> Option<usize> {
        (0..self.classes.len()).min_by_key(|&i| (self.classes[i].len(), i))
    }
}

/// Calls `visit` on every group element preserving all classes, stopping
/// when it returns `false`. Returns whether the enumeration ran to the end.
pub(crate) fn solve(
    form: &StructuredForm,
    view: &ClassView<'_>,
    budget: u64,
    visit: &mut dyn FnMut(SElem) -> bool,
) -> Result<bool> {
    let n = form.positions();
    let size = 1u64 << n;
    let mut nodes = 0u64;
    let mut tick = move || {
        nodes += 1;
        if nodes > budget {
            Err(Error::SearchBudgetExceeded(budget))
        } else {
            Ok(())
        }
    };
    // anchor a and its candidate images t
    let (a, targets): (u64, Vec<u64>) = match view.anchor_class() {
        Some(i) => (u64::from(view.classes[i][0]), view.classes[i].iter().map(|&v| u64::from(v)).collect()),
        None => (0, (0..size).collect()),
    };
    let preserves = |g: &dyn Fn(u64) -> u64| {
        view.class_of.iter().all(|(&v, &cls)| view.class_of.get(&(g(u64::from(v)) as u32)) == Some(&cls))
    };
    match form {
        StructuredForm::Ltq { .. } => {
            for &t in &targets {
                tick()?;
                let c = t ^ a;
                if c & 1 == 0 && preserves(&|v| v ^ c) && !visit(SElem::Ltq { c }) {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        StructuredForm::Augmented { n } => {
            for base in 1..=8u8 {
                for &t in &targets {
                    tick()?;
                    let c = t ^ aq_apply(*n, base, a);
                    if preserves(&|v| c ^ aq_apply(*n, base, v)) && !visit(SElem::Augmented { c, base }) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        StructuredForm::Linear { n, blocks } => {
            let rows: Vec<(u64, u32)> = view.class_of.iter().map(|(&v, &cls)| (u64::from(v) ^ a, cls)).collect();
            let plan = Plan::new(*n, blocks, &rows);
            for &t in &targets {
                let mut state = LinearState {
                    plan: &plan,
                    view,
                    t,
                    images: vec![0; *n as usize],
                    used: blocks.iter().map(|b| vec![false; b.symbols.len()]).collect(),
                };
                if !state.run(0, &mut tick, a, visit)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Bit order for the linear backtracking and the rows completed at each step.
struct Plan<'b> {
    order: Vec<u32>,
    block_of: Vec<usize>,
    blocks: &'b [Block],
    /// `complete[j]` holds rows `(u, class)` whose support lies in `order[..=j]`.
    complete: Vec<Vec<(u64, u32)>>,
}

impl<'b> Plan<'b> {
    fn new(n: u32, blocks: &'b [Block], rows: &[(u64, u32)]) -> Self {
        let mut block_of = vec![0usize; n as usize];
        for (i, b) in blocks.iter().enumerate() {
            for &bit in &b.bits {
                block_of[bit as usize] = i;
            }
        }
        let mut chosen = 0u64;
        let mut order = Vec::with_capacity(n as usize);
        let mut complete = Vec::with_capacity(n as usize);
        let mut pending: Vec<(u64, u32)> = rows.iter().copied().filter(|&(u, _)| u != 0).collect();
        for _ in 0..n {
            let best = (0..n)
                .filter(|&b| chosen >> b & 1 == 0)
                .max_by_key(|&b| {
                    let with = chosen | 1 << b;
                    let done = pending.iter().filter(|&&(u, _)| u & !with == 0).count();
                    let freq = pending.iter().filter(|&&(u, _)| u >> b & 1 == 1).count();
                    (done, freq, std::cmp::Reverse(b))
                })
                .expect("a free bit remains");
            chosen |= 1 << best;
            let (now, later): (Vec<_>, Vec<_>) = pending.into_iter().partition(|&(u, _)| u & !chosen == 0);
            pending = later;
            order.push(best);
            complete.push(now);
        }
        Self { order, block_of, blocks, complete }
    }
}

struct LinearState<'p, 'v> {
    plan: &'p Plan<'p>,
    view: &'p ClassView<'v>,
    t: u64,
    images: Vec<u64>,
    used: Vec<Vec<bool>>,
}

impl LinearState<'_, '_> {
    fn run(
        &mut self,
        step: usize,
        tick: &mut dyn FnMut() -> Result<()>,
        a: u64,
        visit: &mut dyn FnMut(SElem) -> bool,
    ) -> Result<bool> {
        if step == self.plan.order.len() {
            // g(v) = t + L(v + a) = (t + L(a)) + L(v)
            let c = self.t ^ apply_by_bit(&self.images, a);
            return Ok(visit(SElem::Linear { c, images: self.images.clone() }));
        }
        let bit = self.plan.order[step] as usize;
        let block = self.plan.block_of[bit];
        for s in 0..self.plan.blocks[block].symbols.len() {
            if self.used[block][s] {
                continue;
            }
            tick()?;
            self.images[bit] = self.plan.blocks[block].symbols[s];
            let ok = self.plan.complete[step].iter().all(|&(u, cls)| {
                let image = self.t ^ apply_by_bit(&self.images, u);
                self.view.class_of.get(&(image as u32)) == Some(&cls)
            });
            if ok {
                self.used[block][s] = true;
                let go_on = self.run(step + 1, tick, a, visit)?;
                self.used[block][s] = false;
                if !go_on {
                    return Ok(false);
                }
            }
        }
        self.images[bit] = 0;
        Ok(true)
    }
}

#[inline]
fn apply_by_bit(images: &[u64], v: u64) -> u64 {
    let mut out = 0;
    let mut rest = v;
    while rest != 0 {
        out ^= images[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    out
}

/// Order of the pointwise stabilizer of `fixed` in a linear form, without
/// enumeration.
///
/// Writing `g(v) = a + L(v + a)` with `a` in `fixed`, `g` fixes `fixed`
/// pointwise iff `L(u) = u` for every `u` in `U = fixed + a`. Blocks act on
/// disjoint positions, so the count is a product over blocks. Within a block
/// let `col_j` be the column of position `j` over the rows of `U`:
/// - a permutation of unit vectors fixes `U` iff it maps each column to an
///   equal column;
/// - a folded map with `e_i -> 1`, `1 -> e_p` and `e_j -> e_sigma(j)`
///   fixes `U` iff `col_p = col_i` and `col_sigma(j) = col_j + col_i`.
pub(crate) fn linear_pointwise_order(n: u32, blocks: &[Block], fixed: &[u64]) -> u128 {
    let Some(&a) = fixed.first() else {
        return StructuredForm::Linear { n, blocks: blocks.to_vec() }.order();
    };
    let rows: Vec<u64> = fixed.iter().map(|&v| v ^ a).collect();
    let words = rows.len().div_ceil(64);
    let column = |bit: u32| -> Vec<u64> {
        let mut col = vec![0u64; words];
        for (r, &u) in rows.iter().enumerate() {
            if u >> bit & 1 == 1 {
                col[r / 64] |= 1 << (r % 64);
            }
        }
        col
    };
    let mut total = 1u128;
    for block in blocks {
        let cols: Vec<Vec<u64>> = block.bits.iter().map(|&b| column(b)).collect();
        let mut count = matching_count(&cols, &cols);
        if block.kind == BlockKind::Folded {
            for i in 0..cols.len() {
                let shifted: Vec<Vec<u64>> = (0..cols.len())
                    .filter(|&j| j != i)
                    .map(|j| cols[j].iter().zip(&cols[i]).map(|(x, y)| x ^ y).collect())
                    .collect();
                for p in (0..cols.len()).filter(|&p| cols[p] == cols[i]) {
                    let rest: Vec<Vec<u64>> =
                        (0..cols.len()).filter(|&q| q != p).map(|q| cols[q].clone()).collect();
                    count = count.saturating_add(matching_count(&shifted, &rest));
                }
            }
        }
        total = total.saturating_mul(count);
    }
    total
}

/// Number of bijections between two lists of columns that match equal
/// columns: zero unless the multisets agree, else the product of
/// multiplicity factorials.
fn matching_count(from: &[Vec<u64>], to: &[Vec<u64>]) -> u128 {
    let mut x = from.to_vec();
    let mut y = to.to_vec();
    x.sort_unstable();
    y.sort_unstable();
    if x != y {
        return 0;
    }
    let mut count = 1u128;
    let mut i = 0;
    while i < x.len() {
        let mut j = i;
        while j < x.len() && x[j] == x[i] {
            j += 1;
        }
        count = count.saturating_mul(factorial((j - i) as u32));
        i = j;
    }
    count
}
