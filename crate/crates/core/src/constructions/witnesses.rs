use serde::{Deserialize, Serialize};

use crate::autgroup::{Method, PermGroup};
use crate::error::{Error, Result};
use crate::family::{build_family, FamilySpec};
use crate::oracle::{oracle_cost, oracle_determining_number};
use crate::symmetry::{is_determining_set, is_distinguishing_class, Certificate};
use crate::vertex::{all_ones, position_bit};

use super::folded::{det_fq, hypercube_det_words};
use super::matrix::{char_matrix_is_determining, characteristic_matrix};
use super::{ceil_lg, family_group, induced_by_words, is_asymmetric_graph, require, Construction};

/// `det(Q_n) = ceil(lg n) + 1`, and `0` for the single vertex `Q_0`.
pub fn det_hypercube(n: u32) -> u32 {
    if n == 0 {
        0
    } else {
        ceil_lg(u64::from(n)) + 1
    }
}

fn det_aq(n: u32) -> u32 {
    match n {
        1 => 1,
        2 => 3,
        3 => 4,
        4 | 5 => 3,
        _ => 2,
    }
}

fn method_of(group: &Option<PermGroup>) -> Method {
    group.as_ref().map_or(Method::Structured, |g| g.method())
}

fn oracle_set(spec: &FamilySpec, n: u32, cost: bool) -> Result<Construction> {
    let g = build_family(spec)?;
    let found = if cost { oracle_cost(&g)? } else { oracle_determining_number(&g)? };
    let vertices = match found.witness.certificate {
        Certificate::DeterminingSet { vertices } | Certificate::CostClass { vertices } => vertices,
        Certificate::DistinguishingColoring { .. } => {
            return Err(Error::Inconsistent("oracle returned a coloring for a set parameter".into()))
        }
    };
    Ok(Construction::new(spec.clone(), n, vertices.iter().map(|&v| u64::from(v)).collect(), Method::Oracle))
}

fn check_pointwise(c: &mut Construction, group: &Option<PermGroup>) -> Result<()> {
    if let Some(g) = group {
        let ok = is_determining_set(g, &c.indices())?;
        c.check("pointwise stabilizer trivial", ok);
    }
    Ok(())
}

fn check_setwise(c: &mut Construction, group: &Option<PermGroup>) -> Result<()> {
    if let Some(g) = group {
        let ok = is_distinguishing_class(g, &c.indices())?;
        c.check("setwise stabilizer trivial", ok);
    }
    Ok(())
}

/// `{V_0, ..., V_r}`: `V_0 = 0` and `V_i` alternates runs of `2^(i-1)` ones and zeros.
pub fn hypercube_det_set(n: u32) -> Result<Construction> {
    require((1..=64).contains(&n), || format!("Q_n needs 1 <= n <= 64, got {n}"))?;
    let spec = FamilySpec::Hypercube { n };
    let group = family_group(&spec)?;
    let mut c = Construction::new(spec, n, hypercube_det_words(n), method_of(&group));
    c.check("size matches formula", c.size as u32 == det_hypercube(n));
    c.check("matrix criterion", char_matrix_is_determining(&characteristic_matrix(&c.words, n, 2)?));
    check_pointwise(&mut c, &group)?;
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Q2Witnesses {
    /// `U_0, ..., U_{n-1}`, where `U_i` has ones in positions `1..=i`.
    pub determining: Construction,
    /// The same set plus `w = 01...1`.
    pub class: Construction,
}

/// Witnesses for the square of `Q_n`.
pub fn q2_witnesses(n: u32) -> Result<Q2Witnesses> {
    require((4..=32).contains(&n), || format!("Q_n^2 witnesses need 4 <= n <= 32, got {n}"))?;
    let spec = FamilySpec::HypercubePower { n, k: 2 };
    let u: Vec<u64> = (0..n).map(|i| (1..=i).map(|p| position_bit(n, p)).sum()).collect();
    let w = all_ones(n) ^ position_bit(n, 1);
    let near = |a: u64, b: u64| (a ^ b).count_ones() <= 2;

    let group = family_group(&spec)?;
    let method = method_of(&group);
    let mut s = Construction::new(spec.clone(), n, u.clone(), method);
    let square_of_path =
        (0..u.len()).all(|i| (i + 1..u.len()).all(|j| near(u[i], u[j]) == (j - i <= 2)));
    s.check("induced subgraph is a squared path", square_of_path);
    check_pointwise(&mut s, &group)?;

    let mut t_words = u;
    t_words.push(w);
    let mut t = Construction::new(spec, n, t_words, method);
    t.check("asymmetric induced subgraph", is_asymmetric_graph(induced_by_words(&t.words, near)?)?);
    check_pointwise(&mut t, &group)?;
    check_setwise(&mut t, &group)?;
    Ok(Q2Witnesses { determining: s, class: t })
}

/// `det(Q_{n,k}) = max(det(Q_{k-1}), det(FQ_{n-k+1}))`.
pub fn enhanced_det_number(n: u32, k: u32) -> Result<u32> {
    require(n >= 2 && k >= 1 && k < n, || format!("Q_(n,k) needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"))?;
    Ok(det_hypercube(k - 1).max(det_fq(n - k + 1)))
}

/// Checks that no set of size `size - 1` containing `0` is determining (or a
/// distinguishing class, when `setwise`). Relies on vertex-transitivity.
fn no_smaller_set(group: &PermGroup, size: usize, setwise: bool) -> Result<bool> {
    let n = group.graph().vertex_count() as u32;
    let test = |set: &[u32]| -> Result<bool> {
        if setwise {
            is_distinguishing_class(group, set)
        } else {
            is_determining_set(group, set)
        }
    };
    match size {
        0 | 1 => Ok(true),
        2 => Ok(!test(&[0])?),
        3 => {
            for b in 1..n {
                if test(&[0, b])? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        _ => Err(Error::ParameterOutOfRange(format!("minimality check for size {size} not supported"))),
    }
}

/// Minimality check for augmented cubes, run on graphs with at most this many vertices.
const MINIMALITY_VERTEX_LIMIT: usize = 1 << 10;

/// `{0, 1A01}` with `A = 1^(n-4)0` for `n >= 6`; `{x, x_1, x_n}` with `x = 0` for `n = 4, 5`.
pub fn aq_det_witness(n: u32) -> Result<Construction> {
    require((1..=64).contains(&n), || format!("AQ_n needs 1 <= n <= 64, got {n}"))?;
    let spec = FamilySpec::Augmented { n };
    if n <= 3 {
        let mut c = oracle_set(&spec, n, false)?;
        c.check("size matches formula", c.size as u32 == det_aq(n));
        return Ok(c);
    }
    let words = if n <= 5 {
        vec![0, position_bit(n, 1), position_bit(n, n)]
    } else {
        let a: u64 = (2..=n - 3).map(|p| position_bit(n, p)).sum();
        vec![0, position_bit(n, 1) | a | position_bit(n, n)]
    };
    let group = family_group(&spec)?;
    let mut c = Construction::new(spec, n, words, method_of(&group));
    c.check("size matches formula", c.size as u32 == det_aq(n));
    check_pointwise(&mut c, &group)?;
    if let Some(g) = group.as_ref().filter(|g| g.graph().vertex_count() <= MINIMALITY_VERTEX_LIMIT) {
        c.check("no smaller determining set", no_smaller_set(g, c.size, false)?);
    }
    Ok(c)
}

/// `{0, 1B1, 0B'0}` where `B` is `n-2` zeros and `B'` its complement.
pub fn aq_cost_class(n: u32) -> Result<Construction> {
    require((1..=64).contains(&n), || format!("AQ_n needs 1 <= n <= 64, got {n}"))?;
    let spec = FamilySpec::Augmented { n };
    if n <= 3 {
        return oracle_set(&spec, n, true);
    }
    let outer = position_bit(n, 1) | position_bit(n, n);
    let words = vec![0, outer, all_ones(n) ^ outer];
    let group = family_group(&spec)?;
    let mut c = Construction::new(spec, n, words, method_of(&group));
    check_setwise(&mut c, &group)?;
    if let Some(g) = group.as_ref().filter(|g| g.graph().vertex_count() <= MINIMALITY_VERTEX_LIMIT) {
        c.check("no 2-vertex class", no_smaller_set(g, 3, true)?);
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtqWitnesses {
    pub determining: Construction,
    pub class: Construction,
}

/// `({0}, {0})` for `n >= 4`, where only translations of the first `n-1` bits act.
pub fn ltq_witnesses(n: u32) -> Result<LtqWitnesses> {
    require((2..=64).contains(&n), || format!("LTQ_n needs 2 <= n <= 64, got {n}"))?;
    let spec = FamilySpec::LocallyTwisted { n };
    if n <= 3 {
        return Ok(LtqWitnesses { determining: oracle_set(&spec, n, false)?, class: oracle_set(&spec, n, true)? });
    }
    let group = family_group(&spec)?;
    let mut determining = Construction::new(spec.clone(), n, vec![0], method_of(&group));
    check_pointwise(&mut determining, &group)?;
    let mut class = Construction::new(spec, n, vec![0], method_of(&group));
    check_setwise(&mut class, &group)?;
    Ok(LtqWitnesses { determining, class })
}
