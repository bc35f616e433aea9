use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stirling number of the second kind by the recurrence
/// `S(r, m) = m S(r-1, m) + S(r-1, m-1)`.
pub fn stirling2(r: u32, m: u32) -> BigUint {
    if m > r {
        return BigUint::zero();
    }
    let mut row = vec![BigUint::zero(); m as usize + 1];
    row[0] = BigUint::one();
    for i in 1..=r as usize {
        for j in (1..=m.min(i as u32) as usize).rev() {
            row[j] = &row[j] * j + &row[j - 1];
        }
        row[0] = BigUint::zero();
    }
    row[m as usize].clone()
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn signed(i: u32) -> BigInt {
    if i.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn to_unsigned(x: BigInt) -> Result<BigUint> {
    x.to_biguint().ok_or_else(|| Error::Inconsistent(format!("negative Stirling value {x}")))
}

/// `S(r, m)` by inclusion-exclusion, `(1/m!) sum_{i<m} (-1)^i C(m,i) (m-i)^r`.
/// The dropped `i = m` term vanishes for `r >= 1`; `r = 0` is handled directly.
pub fn stirling2_sum(r: u32, m: u32) -> Result<BigUint> {
    if r == 0 {
        return Ok(if m == 0 { BigUint::one() } else { BigUint::zero() });
    }
    if m == 0 {
        return Ok(BigUint::zero());
    }
    let total: BigInt =
        (0..m).map(|i| signed(i) * binomial(m, i) * BigInt::from(m - i).pow(r)).sum();
    let f = factorial(m);
    if (&total % &f) != BigInt::zero() {
        return Err(Error::Inconsistent(format!("S({r},{m}) sum not divisible by {m}!")));
    }
    to_unsigned(total / f)
}

/// `S(r, m) + S(r, m-1)` in closed form, valid for `r >= 1`, `m >= 2`.
fn closed_form(r: u32, m: u32) -> Result<BigUint> {
    let mut total = signed(m - 1);
    for i in 0..=m - 2 {
        let a = BigInt::from(m - i).pow(r - 1);
        let b = BigInt::from(m - i - 1).pow(r);
        total += signed(i) * binomial(m - 1, i) * (a + b);
    }
    let f = factorial(m - 1);
    if (&total % &f) != BigInt::zero() {
        return Err(Error::Inconsistent(format!("closed form at r={r}, m={m} not divisible by {}!", m - 1)));
    }
    to_unsigned(total / f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HammingDet {
    pub m: u32,
    pub n: u64,
    pub value: u32,
    /// `S(value, m)`, decimal.
    pub s_r_m: String,
    /// `S(value, m-1)`, decimal.
    pub s_r_m1: String,
}

/// For `r = 1, 2, ...`, the count `S(r,m) + S(r,m-1)` of admissible columns,
/// from both the recurrence and the closed form, until it reaches `limit`.
pub fn hamming_det_thresholds(m: u32, limit: u64) -> Result<Vec<u64>> {
    if m < 2 {
        return Err(Error::ParameterOutOfRange(format!("Hamming factor K_{m} needs m >= 2")));
    }
    let limit = BigUint::from(limit);
    let mut out = Vec::new();
    for r in 1.. {
        let rec = stirling2(r, m) + stirling2(r, m - 1);
        let closed = closed_form(r, m)?;
        if rec != closed {
            return Err(Error::Inconsistent(format!("S({r},{m})+S({r},{}) = {rec}, closed form {closed}", m - 1)));
        }
        out.push(rec.to_u64().unwrap_or(u64::MAX));
        if rec >= limit {
            break;
        }
    }
    Ok(out)
}

/// Smallest `r` with `n <= S(r,m) + S(r,m-1)`, the determining number of `H(m,n)`.
pub fn hamming_det_number(m: u32, n: u64) -> Result<HammingDet> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("Hamming graph needs n >= 1".into()));
    }
    let thresholds = hamming_det_thresholds(m, n)?;
    let value = thresholds.len() as u32;
    Ok(HammingDet {
        m,
        n,
        value,
        s_r_m: stirling2(value, m).to_string(),
        s_r_m1: stirling2(value, m - 1).to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CostBounds {
    Range { lo: u32, hi: u32 },
    NotApplicable { reason: String },
}

/// Whether `H(m,n)` is 2-distinguishable, by the known classification.
fn hamming_two_distinguishable(m: u32, n: u32) -> bool {
    (m == 2 && n >= 4) || (m == 3 && n >= 3) || (m >= 4 && n >= 2)
}

/// `rho(H(m,n))` is `det` or `det + 1` when the graph is 2-distinguishable and `2 <= m-1 <= n`.
pub fn hamming_cost_bounds(m: u32, n: u32) -> Result<CostBounds> {
    if m < 2 || n == 0 {
        return Err(Error::ParameterOutOfRange(format!("H({m},{n}) needs m >= 2, n >= 1")));
    }
    if !hamming_two_distinguishable(m, n) {
        return Ok(CostBounds::NotApplicable { reason: format!("H({m},{n}) is not 2-distinguishable") });
    }
    if m - 1 < 2 {
        return Ok(CostBounds::NotApplicable { reason: format!("m-1 = {} < 2", m - 1) });
    }
    if m - 1 > n {
        return Ok(CostBounds::NotApplicable { reason: format!("m-1 = {} > n = {n}", m - 1) });
    }
    let det = hamming_det_number(m, u64::from(n))?.value;
    Ok(CostBounds::Range { lo: det, hi: det + 1 })
}
