//! Vertex labels.
//!
//! A vertex of a generated family is a word of `n` positions over an alphabet
//! of size `alphabet` (2 for every binary family, `m` for Hamming graphs).
//! Position 1 is the leftmost, most significant digit: the word
//! `v_1 v_2 ... v_n` is stored as the integer `sum v_i * alphabet^(n-i)`.
//! For binary words position `i` therefore lives in bit `n - i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitVertex {
    pub word: u64,
    pub n: u32,
    pub alphabet: u32,
}

impl BitVertex {
    pub fn binary(word: u64, n: u32) -> Result<Self> {
        Self::new(word, n, 2)
    }

    pub fn new(word: u64, n: u32, alphabet: u32) -> Result<Self> {
        if alphabet < 2 {
            return Err(Error::ParameterOutOfRange(format!("alphabet {alphabet} < 2")));
        }
        let count = word_count(n, alphabet)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("{alphabet}^{n} overflows")))?;
        if u128::from(word) >= count {
            return Err(Error::VertexOutOfRange(word));
        }
        Ok(Self { word, n, alphabet })
    }

    /// Parses a label such as `0110` (binary) or `0212` (base 3).
    pub fn parse(label: &str, alphabet: u32) -> Result<Self> {
        let mut word: u64 = 0;
        let mut n = 0u32;
        for ch in label.chars() {
            let d = ch
                .to_digit(36)
                .filter(|&d| d < alphabet)
                .ok_or_else(|| Error::Parse(format!("bad digit {ch:?} in {label:?}")))?;
            word = word
                .checked_mul(u64::from(alphabet))
                .and_then(|w| w.checked_add(u64::from(d)))
                .ok_or_else(|| Error::Parse(format!("label {label:?} too long")))?;
            n += 1;
        }
        if n == 0 {
            return Err(Error::Parse("empty label".into()));
        }
        Self::new(word, n, alphabet)
    }

    /// Digit at 1-based position `i` (leftmost is 1).
    pub fn position(&self, i: u32) -> u32 {
        assert!(i >= 1 && i <= self.n, "position {i} outside 1..={}", self.n);
        let shift = u64::from(self.alphabet).pow(self.n - i);
        ((self.word / shift) % u64::from(self.alphabet)) as u32
    }

    pub fn digits(&self) -> Vec<u32> {
        (1..=self.n).map(|i| self.position(i)).collect()
    }

    fn check_compatible(&self, other: &BitVertex) -> Result<()> {
        if self.n != other.n || self.alphabet != other.alphabet {
            return Err(Error::DimensionMismatch {
                expected: format!("n={}, alphabet={}", self.n, self.alphabet),
                got: format!("n={}, alphabet={}", other.n, other.alphabet),
            });
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        format_word(self.word, self.n, self.alphabet)
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Number of positions in which `u` and `v` differ.
pub fn hamming_distance(u: &BitVertex, v: &BitVertex) -> Result<u32> {
    u.check_compatible(v)?;
    if u.alphabet == 2 {
        return Ok((u.word ^ v.word).count_ones());
    }
    Ok(u.digits()
        .iter()
        .zip(v.digits())
        .filter(|(a, b)| **a != *b)
        .count() as u32)
}

/// `alphabet^n`, or `None` on overflow.
pub fn word_count(n: u32, alphabet: u32) -> Option<u128> {
    u128::from(alphabet).checked_pow(n)
}

pub fn format_word(word: u64, n: u32, alphabet: u32) -> String {
    let mut digits = vec![0u32; n as usize];
    let mut w = word;
    for slot in digits.iter_mut().rev() {
        *slot = (w % u64::from(alphabet)) as u32;
        w /= u64::from(alphabet);
    }
    digits
        .into_iter()
        .map(|d| std::char::from_digit(d, 36).expect("digit below 36"))
        .collect()
}

/// Binary mask with a single 1 at 1-based position `i` of an `n`-bit word.
#[inline]
pub fn position_bit(n: u32, i: u32) -> u64 {
    debug_assert!(i >= 1 && i <= n);
    1u64 << (n - i)
}

#[inline]
pub fn all_ones(n: u32) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BitVertex {
        BitVertex::parse(s, 2).unwrap()
    }

    #[test]
    fn leftmost_position_is_most_significant() {
        let v = b("1000");
        assert_eq!(v.word, 8);
        assert_eq!(v.position(1), 1);
        assert_eq!(v.position(4), 0);
        assert_eq!(position_bit(4, 1), 8);
        assert_eq!(v.label(), "1000");
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_distance(&b("0000"), &b("0000")).unwrap(), 0);
        assert_eq!(hamming_distance(&b("0101"), &b("1010")).unwrap(), 4);
        assert_eq!(hamming_distance(&b("10101010"), &b("11101010")).unwrap(), 1);
    }

    #[test]
    fn hamming_base_m() {
        let u = BitVertex::parse("0112", 3).unwrap();
        let v = BitVertex::parse("1012", 3).unwrap();
        assert_eq!(hamming_distance(&u, &v).unwrap(), 2);
        assert_eq!(u.word, 9 + 3 + 2);
    }

    #[test]
    fn mismatched_dimensions_rejected() {
        let err = hamming_distance(&b("010"), &b("0100")).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }

    #[test]
    fn bad_labels() {
        assert!(BitVertex::parse("0120", 2).is_err());
        assert!(BitVertex::parse("", 2).is_err());
        assert!(BitVertex::binary(16, 4).is_err());
    }
}
