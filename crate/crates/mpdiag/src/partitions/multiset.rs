//! Multiset partitions: the index set `Π̃_{2(r),k}` of the bases of the
//! multiset partition algebra. A vertex value is a color in `1..=k`; the row
//! says whether it is unbarred, barred, or double-barred.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partitions::setpart::{active_rows, row_bit, THREE_ROWS, TWO_ROWS};
use crate::partitions::vertex::{canonicalize, format_blocks, parse_blocks};
use crate::partitions::{Composition, Row, Vertex};
use crate::scalars::factorial;

/// A canonical multiset partition with `r` entries in each active row and
/// colors in `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetPartition {
    r: usize,
    k: usize,
    rows: u8,
    blocks: Vec<Vec<Vertex>>,
}

/// Multiplicity data used by the change-of-basis scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityStats {
    /// `m(π̃)! = Π` over distinct blocks of (multiplicity)!.
    pub m_factorial: BigInt,
    /// Multiplicity of each distinct block.
    pub block_mults: BTreeMap<Vec<Vertex>, usize>,
    /// `Π_{B̃ ∈ π̃} m(B̃|bottom)!` over all blocks (with repetition).
    pub per_block_bottom_factorials: BigInt,
}

/// `m(S)!` of a multiset: product of the factorials of its multiplicities.
pub fn multiset_factorial<T: Ord + Clone>(items: &[T]) -> BigInt {
    let mut counts: BTreeMap<T, usize> = BTreeMap::new();
    for it in items {
        *counts.entry(it.clone()).or_default() += 1;
    }
    counts.values().map(|&m| factorial(m)).product()
}

impl MultisetPartition {
    /// Validates and canonicalizes.
    pub fn new(r: usize, k: usize, rows: u8, mut blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut counts = [0usize; 3];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            for v in b {
                if row_bit(v.row) & rows == 0 {
                    return Err(Error::Mismatch(format!(
                        "entry {v} lies in an inactive row"
                    )));
                }
                if v.value == 0 || v.value as usize > k {
                    return Err(Error::Mismatch(format!("color {v} out of range 1..={k}")));
                }
                counts[v.row as usize] += 1;
            }
        }
        for row in active_rows(rows) {
            if counts[row as usize] != r {
                return Err(Error::Mismatch(format!(
                    "row {row:?} has {} entries, expected {r}",
                    counts[row as usize]
                )));
            }
        }
        canonicalize(&mut blocks);
        Ok(MultisetPartition { r, k, rows, blocks })
    }

    /// Two-row multiset partition from signed colors.
    pub fn from_signed(r: usize, k: usize, blocks: &[&[i32]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|&v| Vertex::from_signed(v)).collect())
            .collect();
        MultisetPartition::new(r, k, TWO_ROWS, blocks)
    }

    /// Parses `[[1,1,-2],[2]]`. `r` is inferred from the number of unbarred
    /// entries; `k` is the given value or else the largest color present.
    pub fn parse(text: &str, k: Option<usize>) -> Result<Self> {
        let blocks = parse_blocks(text, '[', ']')?;
        let r = blocks
            .iter()
            .flatten()
            .filter(|v| v.row == Row::Top)
            .count();
        let kmax = blocks
            .iter()
            .flatten()
            .map(|v| v.value as usize)
            .max()
            .unwrap_or(1);
        let k = k.unwrap_or(kmax);
        let rows = if blocks.iter().flatten().any(|v| v.row == Row::Lower) {
            THREE_ROWS
        } else {
            TWO_ROWS
        };
        MultisetPartition::new(r, k, rows, blocks)
            .map_err(|e| Error::parse(0, format!("invalid multiset partition: {e}")))
    }

    /// Construction without validation, for internal hot paths whose inputs
    /// are correct by construction.
    pub(crate) fn from_raw(r: usize, k: usize, rows: u8, mut blocks: Vec<Vec<Vertex>>) -> Self {
        canonicalize(&mut blocks);
        MultisetPartition { r, k, rows, blocks }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> u8 {
        self.rows
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// Number of blocks `ℓ(π̃)`.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Color multiplicities of one row.
    pub fn composition(&self, row: Row) -> Composition {
        Composition::from_colors(
            self.blocks
                .iter()
                .flatten()
                .filter(|v| v.row == row)
                .map(|v| v.value),
            self.k,
        )
    }

    /// Color multiplicities of the unbarred entries.
    pub fn top_composition(&self) -> Composition {
        self.composition(Row::Top)
    }

    /// Color multiplicities of the barred entries.
    pub fn bottom_composition(&self) -> Composition {
        self.composition(Row::Bottom)
    }

    /// Each block intersected with the kept rows; empty blocks dropped.
    pub fn restrict(&self, keep: u8) -> MultisetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|v| row_bit(v.row) & keep != 0)
                    .collect()
            })
            .collect();
        MultisetPartition::from_raw(self.r, self.k, self.rows & keep, blocks)
    }

    /// Applies a vertex map to every entry and re-canonicalizes.
    pub fn map_vertices(&self, rows: u8, f: impl Fn(Vertex) -> Vertex) -> MultisetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| f(v)).collect())
            .collect();
        MultisetPartition::from_raw(self.r, self.k, rows, blocks)
    }

    /// Swaps unbarred and barred entries (the top–bottom flip involution).
    pub fn flip(&self) -> MultisetPartition {
        self.map_vertices(self.rows, |v| match v.row {
            Row::Top => Vertex::bottom(v.value),
            Row::Bottom => Vertex::top(v.value),
            Row::Lower => v,
        })
    }

    /// Multiplicity statistics `m(π̃)!` and `Π m(B̃|bottom)!`.
    pub fn multiplicity_stats(&self) -> MultiplicityStats {
        let mut block_mults: BTreeMap<Vec<Vertex>, usize> = BTreeMap::new();
        for b in &self.blocks {
            *block_mults.entry(b.clone()).or_default() += 1;
        }
        let m_factorial = block_mults.values().map(|&m| factorial(m)).product();
        let per_block_bottom_factorials = self
            .blocks
            .iter()
            .map(|b| {
                let bottom: Vec<u32> = b
                    .iter()
                    .filter(|v| v.row == Row::Bottom)
                    .map(|v| v.value)
                    .collect();
                multiset_factorial(&bottom)
            })
            .product();
        MultiplicityStats {
            m_factorial,
            block_mults,
            per_block_bottom_factorials,
        }
    }

    /// `m(π̃)!` alone.
    pub fn m_factorial(&self) -> BigInt {
        multiset_factorial(&self.blocks)
    }

    /// Text form `[[1,1,-2],[2]]`.
    pub fn to_text(&self) -> String {
        format_blocks(&self.blocks, '[', ']')
    }
}

impl fmt::Display for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::setpart::BOTTOM;

    #[test]
    fn parse_print_round_trip() {
        for s in ["[[1,1,-2],[2,-1,-2]]", "[[1,-1]]", "[[1,=1],[-1]]"] {
            assert_eq!(MultisetPartition::parse(s, None).unwrap().to_text(), s);
        }
    }

    #[test]
    fn restriction_example() {
        let p = MultisetPartition::from_signed(3, 2, &[&[1, -1, -1], &[1, 2, -2]]).unwrap();
        assert_eq!(p.restrict(BOTTOM).to_text(), "[[-1,-1],[-2]]");
    }

    #[test]
    fn stats() {
        let p =
            MultisetPartition::from_signed(4, 2, &[&[1, -1], &[1, -1], &[2, 2, -1, -2]]).unwrap();
        let s = p.multiplicity_stats();
        assert_eq!(s.m_factorial, BigInt::from(2));
        assert_eq!(s.per_block_bottom_factorials, BigInt::from(1));
    }
}
