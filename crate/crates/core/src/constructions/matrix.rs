use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex::BitVertex;

/// Rows are the vertices of a set, columns the Cartesian factors `K_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharMatrix {
    pub entries: Vec<Vec<u32>>,
    /// Number of factors.
    pub n: u32,
    /// Size of each complete factor.
    pub alphabet: u32,
}

impl CharMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    /// Column `j`, 0-based.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.entries.iter().map(|row| row[j]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.n as usize).map(|j| self.column(j)).collect()
    }
}

/// Characteristic matrix of `set` in `K_alphabet^n`, one row per word.
pub fn characteristic_matrix(set: &[u64], n: u32, alphabet: u32) -> Result<CharMatrix> {
    let entries = set
        .iter()
        .map(|&w| {
            BitVertex::new(w, n, alphabet)
                .map(|v| v.digits())
                .map_err(|_| Error::DimensionMismatch {
                    expected: format!("word of {n} symbols over {alphabet}"),
                    got: w.to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharMatrix { entries, n, alphabet })
}

/// Canonical relabeling: symbols renamed in order of first appearance.
fn partition_key(col: &[u32]) -> Vec<u32> {
    let mut names: Vec<(u32, u32)> = Vec::new();
    col.iter()
        .map(|&s| match names.iter().find(|(sym, _)| *sym == s) {
            Some(&(_, id)) => id,
            None => {
                let id = names.len() as u32;
                names.push((s, id));
                id
            }
        })
        .collect()
}

/// Whether some automorphism of the complete factor maps one column onto the
/// other. For `K_m` that is equality of the induced partitions of row indices,
/// which for `K_2` means equal or complementary.
pub fn columns_isomorphic(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && partition_key(a) == partition_key(b)
}

/// Pairwise non-isomorphic columns, each using at least `m - 1` symbols.
pub fn char_matrix_is_determining(x: &CharMatrix) -> bool {
    let cols = x.columns();
    let need = x.alphabet as usize - 1;
    let enough = cols.iter().all(|c| {
        let mut s = c.clone();
        s.sort_unstable();
        s.dedup();
        s.len() >= need.max(1)
    });
    let keys: Vec<_> = cols.iter().map(|c| partition_key(c)).collect();
    let distinct = keys.iter().enumerate().all(|(i, k)| keys[..i].iter().all(|o| o != k));
    enough && distinct
}
