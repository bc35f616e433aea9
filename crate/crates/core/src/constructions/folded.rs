use std::collections::HashSet;
use std::sync::Arc;

use crate::autgroup::{search_automorphisms, Method};
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::oracle::oracle_determining_number;
use crate::symmetry::{is_determining_set, Certificate};
use crate::vertex::{all_ones, position_bit, BitVertex};

use super::{ceil_lg, family_group, induced_by_words, is_asymmetric_graph, require, Construction};

/// Asymmetric-induced determining sets of `FQ_4` and `FQ_5`, lex-least, found by exhaustive search.
pub const FQ_DIST_CLASS_4: &[&str] = &["0000", "0001", "0010", "0011", "0100", "0101", "1000", "1011"];
pub const FQ_DIST_CLASS_5: &[&str] = &["00000", "00001", "00010", "00011", "00100", "01001", "10100"];

/// Asymmetric induced trees for `4 <= n <= 8`.
pub const TREE_SETS: [(u32, &[&str]); 5] = [
    (4, &["1111", "0000", "1000", "1010", "0010", "0110", "1100"]),
    (5, &["10101", "10001", "11001", "11101", "11111", "11110", "00000", "01000"]),
    (6, &["101010", "100010", "110010", "110011", "111011", "111111", "111101", "111100", "000000"]),
    (
        7,
        &[
            "1010101", "1110101", "1100101", "1100111", "1100110", "1110110", "1111110", "1111100", "1111000",
            "1111111", "0000000", "1000000",
        ],
    ),
    (
        8,
        &[
            "10101010", "11101010", "11001010", "11001110", "11001100", "11101100", "11111100", "11110100",
            "11110000", "11111110", "11111111", "00000000",
        ],
    ),
];

fn parse_words(labels: &[&str]) -> Result<Vec<u64>> {
    labels.iter().map(|l| BitVertex::parse(l, 2).map(|v| v.word)).collect()
}

/// `n = 2^m - 1` or `2^m - 3` with `m >= 3`.
pub fn fq_is_exceptional(n: u32) -> bool {
    n >= 5 && n % 2 == 1 && ((n + 1).is_power_of_two() || (n + 3).is_power_of_two())
}

/// Determining number of `FQ_n` by the case formula.
pub fn det_fq(n: u32) -> u32 {
    match n {
        0 => 0,
        1 => 1,
        2 => 3,
        3 => 6,
        _ if fq_is_exceptional(n) => ceil_lg(u64::from(n)) + 2,
        _ => ceil_lg(u64::from(n) + 1) + 1,
    }
}

/// `V_i` alternates runs of `2^(i-1)` ones and zeros starting with ones, cut to length `n`.
pub(crate) fn alternating_word(n: u32, i: u32) -> u64 {
    (1..=n).filter(|&p| ((p - 1) >> (i - 1)) & 1 == 0).map(|p| position_bit(n, p)).sum()
}

/// `{V_0, V_1, ..., V_r}` with `r = ceil(lg n)`, a minimum determining set of `Q_n`.
pub(crate) fn hypercube_det_words(n: u32) -> Vec<u64> {
    let r = ceil_lg(u64::from(n));
    std::iter::once(0).chain((1..=r).map(|i| alternating_word(n, i))).collect()
}

fn columns(words: &[u64], n: u32) -> Vec<Vec<bool>> {
    (1..=n).map(|p| words.iter().map(|&w| w & position_bit(n, p) != 0).collect()).collect()
}

fn xor(a: &[bool], b: &[bool]) -> Vec<bool> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

/// Exact matrix test for `n >= 4`. After translating the first word to `0`,
/// the set is determining iff the columns are distinct and nonzero and no
/// position `i` lets every other column pair off with a partner summing to column `i`.
pub fn fq_determining_by_matrix(words: &[u64], n: u32) -> Result<bool> {
    require(n >= 4, || format!("matrix test for FQ_n needs n >= 4, got {n}"))?;
    let Some(&first) = words.first() else { return Ok(false) };
    let shifted: Vec<u64> = words.iter().map(|&w| w ^ first).collect();
    let cols = columns(&shifted, n);
    let set: HashSet<&Vec<bool>> = cols.iter().collect();
    if set.len() != cols.len() || cols.iter().any(|c| c.iter().all(|b| !b)) {
        return Ok(false);
    }
    let fixed_by_fold = (0..cols.len()).any(|i| {
        (0..cols.len()).filter(|&j| j != i).all(|j| set.contains(&xor(&cols[i], &cols[j])))
    });
    Ok(!fixed_by_fold)
}

/// The sufficient column-sum condition for a matrix with a zero row and
/// distinct nonzero columns: always true for even `n`; for `n = 1 mod 4` the
/// column sum is not a column; for `n = 3 mod 4` it is nonzero.
pub fn fq_column_sum_condition(words: &[u64], n: u32) -> bool {
    let cols = columns(words, n);
    let sum = cols.iter().fold(vec![false; words.len()], |acc, c| xor(&acc, c));
    match n % 4 {
        1 => !cols.contains(&sum),
        3 => sum.iter().any(|&b| b),
        _ => true,
    }
}

/// Odd-case column labels of length `len`: `c_1` all ones, `c_{2t}` the binary
/// form of `t`, `c_{2t+1}` its complement.
fn c_vector(i: u64, len: u32) -> u64 {
    if i == 1 {
        all_ones(len)
    } else if i.is_multiple_of(2) {
        i / 2
    } else {
        !(i / 2) & all_ones(len)
    }
}

/// Words from a matrix given column by column; entry `(row, col)` is bit `row` of `cols[col]`
/// counted from the top of an `rows`-row column.
fn words_from_columns(cols: &[u64], rows: u32, n: u32) -> Vec<u64> {
    (0..rows)
        .map(|row| {
            cols.iter()
                .enumerate()
                .filter(|(_, &c)| (c >> (rows - 1 - row)) & 1 == 1)
                .map(|(j, _)| position_bit(n, j as u32 + 1))
                .sum()
        })
        .collect()
}

fn fq_det_words(n: u32) -> Vec<u64> {
    let m = ceil_lg(u64::from(n) + 1);
    if fq_is_exceptional(n) {
        let mut w = hypercube_det_words(n);
        w.push(all_ones(n));
        return w;
    }
    let cols: Vec<u64> = if n.is_multiple_of(2) {
        (1..=u64::from(n)).collect()
    } else {
        // Rows: zero, then a row of ones over the first block, then c-vectors of length m-1.
        let len = m - 1;
        let half = 1u64 << len;
        let q = u64::from(n) - half;
        let first = (1..half).map(|i| (1 << len) | c_vector(i, len));
        let second = (1..=q + 1).map(|i| c_vector(i, len));
        first.chain(second).collect()
    };
    words_from_columns(&cols, m + 1, n)
}

/// A minimum determining set of `FQ_n`. Sizes follow the case formula; `n <= 3` comes from the oracle.
pub fn fq_det_set(n: u32) -> Result<Construction> {
    require((1..=64).contains(&n), || format!("FQ_n needs 1 <= n <= 64, got {n}"))?;
    let spec = FamilySpec::Folded { n };
    if n <= 3 {
        let g = build_family(&spec)?;
        let found = oracle_determining_number(&g)?;
        let Certificate::DeterminingSet { vertices } = found.witness.certificate else {
            return Err(Error::Inconsistent("oracle returned a non-set witness".into()));
        };
        let mut c = Construction::new(spec, n, vertices.iter().map(|&v| u64::from(v)).collect(), Method::Oracle);
        c.check("size matches formula", c.size as u32 == det_fq(n));
        return Ok(c);
    }
    let words = fq_det_words(n);
    let group = family_group(&spec)?;
    let method = group.as_ref().map_or(Method::Structured, |g| g.method());
    let mut c = Construction::new(spec, n, words, method);
    c.check("size matches formula", c.size as u32 == det_fq(n));
    c.check("matrix criterion", fq_determining_by_matrix(&c.words, n)?);
    if let Some(g) = group {
        c.check("pointwise stabilizer trivial", is_determining_set(&g, &c.indices())?);
    }
    Ok(c)
}

/// The walk `V_1 ... V_r` of the general construction, flipping differing positions left to right.
/// For some `n` that are not powers of two the walk revisits a vertex.
pub fn fq_dist_walk(n: u32) -> Vec<u64> {
    let r = ceil_lg(u64::from(n));
    let mut walk = vec![alternating_word(n, 1)];
    for i in 1..r {
        let target = alternating_word(n, i + 1);
        let mut cur = alternating_word(n, i);
        for p in 1..=n {
            let bit = position_bit(n, p);
            if (cur ^ target) & bit != 0 {
                cur ^= bit;
                walk.push(cur);
            }
        }
    }
    walk
}

fn fq_adjacent(n: u32) -> impl Fn(u64, u64) -> bool {
    move |a, b| {
        let d = a ^ b;
        d.count_ones() == 1 || d == all_ones(n)
    }
}

fn induced_order(words: &[u64], n: u32) -> Result<u128> {
    search_automorphisms(Arc::new(induced_by_words(words, fq_adjacent(n))?))?.order()
}

/// Tree construction: the walk through `V_1 ... V_r` (repeated vertices kept
/// once), a branch from the vertex closest to `1` up to `1`, then `0`, then
/// `10...0` if the tree is symmetric. Returns the words and whether a repair was needed.
fn general_dist_words(n: u32) -> Result<(Vec<u64>, bool)> {
    let mut words = Vec::new();
    for w in fq_dist_walk(n) {
        if !words.contains(&w) {
            words.push(w);
        }
    }
    let ones = all_ones(n);
    let hub = *words
        .iter()
        .min_by_key(|&&w| (w ^ ones).count_ones())
        .expect("walk is nonempty");
    let mut cur = hub;
    for p in 1..=n {
        let bit = position_bit(n, p);
        if cur & bit == 0 {
            cur |= bit;
            words.push(cur);
        }
    }
    words.push(0);
    if induced_order(&words, n)? > 1 {
        words.push(position_bit(n, 1));
    }
    let mut order = induced_order(&words, n)?;
    let repaired = order > 1;
    while order > 1 {
        // Add the neighbor of the set that most reduces the symmetry, lex-least on ties.
        let mut candidates: Vec<u64> = words
            .iter()
            .flat_map(|&w| (1..=n).map(move |p| w ^ position_bit(n, p)).chain(std::iter::once(w ^ ones)))
            .filter(|v| !words.contains(v))
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        let mut best: Option<(u64, u128)> = None;
        for v in candidates {
            words.push(v);
            let o = induced_order(&words, n)?;
            words.pop();
            if o < best.map_or(order, |b| b.1) {
                best = Some((v, o));
            }
        }
        let (v, o) = best.ok_or_else(|| Error::Inconsistent(format!("no vertex breaks the symmetry of the FQ_{n} tree")))?;
        words.push(v);
        order = o;
    }
    Ok((words, repaired))
}

/// A determining set of `FQ_n` whose induced subgraph is asymmetric, hence a
/// 2-distinguishing class. The fixed trees are used for `n = 6, 7`, searched
/// sets for `n = 4, 5`, the path-and-tree construction from `n = 8` on.
pub fn fq_dist_class(n: u32) -> Result<Construction> {
    require((4..=64).contains(&n), || format!("FQ_n is 2-distinguishable only for n >= 4, got {n}"))?;
    let spec = FamilySpec::Folded { n };
    let group = family_group(&spec)?;
    let group_method = group.as_ref().map_or(Method::Structured, |g| g.method());
    let mut notes = Vec::new();
    let (words, method) = match n {
        4 => (parse_words(FQ_DIST_CLASS_4)?, Method::Oracle),
        5 => (parse_words(FQ_DIST_CLASS_5)?, Method::Oracle),
        6 | 7 => (parse_words(TREE_SETS[n as usize - 4].1)?, group_method),
        _ => {
            let (words, repaired) = general_dist_words(n)?;
            if repaired {
                notes.push("tree construction was symmetric; extended greedily".to_string());
            }
            (words, group_method)
        }
    };
    let mut c = Construction::new(spec, n, words, method);
    c.notes = notes;
    c.check("matrix criterion", fq_determining_by_matrix(&c.words, n)?);
    c.check("asymmetric induced subgraph", is_asymmetric_graph(induced_by_words(&c.words, fq_adjacent(n))?)?);
    if n >= 8 {
        let r = u64::from(ceil_lg(u64::from(n)));
        let n64 = u64::from(n);
        c.check("size bound", 4 * c.size as u64 <= 16 + 2 * (r - 1) * n64 + n64);
    }
    if let Some(g) = group {
        c.check("pointwise stabilizer trivial", is_determining_set(&g, &c.indices())?);
    }
    Ok(c)
}
