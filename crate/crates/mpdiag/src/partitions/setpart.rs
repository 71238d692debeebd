//! Set partitions of `[r] ∪ [r̄]` (optionally with a third, double-barred
//! row): the index set of the diagram and orbit bases of the partition
//! algebra.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::vertex::{canonicalize, format_blocks, parse_blocks};
use crate::partitions::{Permutation, Row, Vertex};

/// Bit mask of active rows.
pub const TOP: u8 = 0b001;
pub const BOTTOM: u8 = 0b010;
pub const LOWER: u8 = 0b100;
/// The usual two-row diagram alphabet `[r] ∪ [r̄]`.
pub const TWO_ROWS: u8 = TOP | BOTTOM;
/// The three-row alphabet `[r] ∪ [r̄] ∪ [r̿]`.
pub const THREE_ROWS: u8 = TOP | BOTTOM | LOWER;

pub(crate) fn row_bit(row: Row) -> u8 {
    match row {
        Row::Top => TOP,
        Row::Bottom => BOTTOM,
        Row::Lower => LOWER,
    }
}

/// A canonical set partition.
///
/// Every active row contains each of `1..=r` exactly once. Blocks are sorted
/// internally and among themselves, so derived equality, ordering and
/// hashing are those of the underlying partition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    r: usize,
    rows: u8,
    blocks: Vec<Vec<Vertex>>,
}

impl SetPartition {
    /// Validates and canonicalizes.
    pub fn new(r: usize, rows: u8, mut blocks: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::Domain("empty block".into()));
            }
            for v in b {
                if row_bit(v.row) & rows == 0 {
                    return Err(Error::Mismatch(format!(
                        "vertex {v} lies in an inactive row"
                    )));
                }
                if v.value == 0 || v.value as usize > r {
                    return Err(Error::Mismatch(format!("vertex {v} out of range 1..={r}")));
                }
                if !seen.insert(*v) {
                    return Err(Error::Mismatch(format!("vertex {v} appears twice")));
                }
            }
        }
        let expected = r * rows.count_ones() as usize;
        if seen.len() != expected {
            return Err(Error::Mismatch(format!(
                "blocks cover {} vertices, expected {expected}",
                seen.len()
            )));
        }
        canonicalize(&mut blocks);
        Ok(SetPartition { r, rows, blocks })
    }

    /// Two-row partition from signed vertices (positive top, negative
    /// bottom), e.g. `&[&[1, 2, -1], &[-2]]`.
    pub fn from_signed(r: usize, blocks: &[&[i32]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|&v| Vertex::from_signed(v)).collect())
            .collect();
        SetPartition::new(r, TWO_ROWS, blocks)
    }

    /// Parses `{{1,2,-1},{-2}}`; `r` is inferred from the top row and the
    /// presence of `=` entries selects the three-row alphabet.
    pub fn parse(text: &str) -> Result<Self> {
        let blocks = parse_blocks(text, '{', '}')?;
        let r = blocks
            .iter()
            .flatten()
            .filter(|v| v.row == Row::Top)
            .count();
        let rows = if blocks.iter().flatten().any(|v| v.row == Row::Lower) {
            THREE_ROWS
        } else {
            TWO_ROWS
        };
        SetPartition::new(r, rows, blocks)
            .map_err(|e| Error::parse(0, format!("invalid set partition: {e}")))
    }

    /// Builds a partition from a block label per vertex index
    /// (see [`Vertex::index`]).
    pub fn from_labels(r: usize, rows: u8, labels: &[usize]) -> Self {
        let nblocks = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); nblocks];
        let active = active_rows(rows);
        let mut idx = 0;
        for row in active {
            for value in 1..=r as u32 {
                blocks[labels[idx]].push(Vertex { row, value });
                idx += 1;
            }
        }
        canonicalize(&mut blocks);
        SetPartition { r, rows, blocks }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn rows(&self) -> u8 {
        self.rows
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of vertices `r · (#active rows)`.
    pub fn num_vertices(&self) -> usize {
        self.r * self.rows.count_ones() as usize
    }

    /// Position of a vertex among the active rows, in row order.
    pub fn dense_index(&self, v: &Vertex) -> usize {
        let before = active_rows(self.rows)
            .iter()
            .take_while(|&&row| row != v.row)
            .count();
        before * self.r + v.value as usize - 1
    }

    /// Block label of each vertex, indexed by [`SetPartition::dense_index`].
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.num_vertices()];
        for (b, block) in self.blocks.iter().enumerate() {
            for v in block {
                labels[self.dense_index(v)] = b;
            }
        }
        labels
    }

    /// Each block intersected with the kept rows; empty blocks dropped.
    pub fn restrict(&self, keep: u8) -> SetPartition {
        let mut blocks: Vec<Vec<Vertex>> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|v| row_bit(v.row) & keep != 0)
                    .collect()
            })
            .collect();
        canonicalize(&mut blocks);
        SetPartition {
            r: self.r,
            rows: self.rows & keep,
            blocks,
        }
    }

    /// Applies a row/value map to every vertex and re-canonicalizes.
    pub fn map_vertices(&self, rows: u8, f: impl Fn(Vertex) -> Vertex) -> Result<SetPartition> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| f(v)).collect())
            .collect();
        SetPartition::new(self.r, rows, blocks)
    }

    /// `σ1 · π · σ2`: top `i ↦ σ1(i)`, bottom `ī ↦ σ2⁻¹(i)`.
    pub fn act(&self, s1: &Permutation, s2: &Permutation) -> Result<SetPartition> {
        if s1.degree() != self.r || s2.degree() != self.r {
            return Err(Error::Mismatch(format!(
                "permutation degrees {}, {} do not match r = {}",
                s1.degree(),
                s2.degree(),
                self.r
            )));
        }
        let s2inv = s2.inverse();
        let mut blocks = self.blocks.clone();
        for b in blocks.iter_mut() {
            for v in b.iter_mut() {
                match v.row {
                    Row::Top => v.value = s1.apply(v.value as usize) as u32,
                    Row::Bottom => v.value = s2inv.apply(v.value as usize) as u32,
                    Row::Lower => {}
                }
            }
        }
        canonicalize(&mut blocks);
        Ok(SetPartition {
            r: self.r,
            rows: self.rows,
            blocks,
        })
    }

    /// True if `self` is obtained by merging blocks of `finer`
    /// (every block of `finer` lies inside a block of `self`).
    pub fn is_coarsening_of(&self, finer: &SetPartition) -> bool {
        if self.r != finer.r || self.rows != finer.rows {
            return false;
        }
        let labels = self.labels();
        finer.blocks.iter().all(|b| {
            let l = labels[self.dense_index(&b[0])];
            b.iter().all(|v| labels[self.dense_index(v)] == l)
        })
    }

    /// Text form `{{1,2,-1},{-2}}`.
    pub fn to_text(&self) -> String {
        format_blocks(&self.blocks, '{', '}')
    }
}

/// Active rows in canonical order.
pub(crate) fn active_rows(rows: u8) -> Vec<Row> {
    [Row::Top, Row::Bottom, Row::Lower]
        .into_iter()
        .filter(|&row| row_bit(row) & rows != 0)
        .collect()
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_round_trip() {
        for s in ["{{1,2,-1},{-2}}", "{{1,=1},{-1}}", "{{1,-1},{2,-2}}"] {
            let p = SetPartition::parse(s).unwrap();
            assert_eq!(p.to_text(), s);
        }
        let p = SetPartition::parse("{ {-2}, {2,1,-1} }").unwrap();
        assert_eq!(p.to_text(), "{{1,2,-1},{-2}}");
    }

    #[test]
    fn restriction_example() {
        let p = SetPartition::from_signed(4, &[&[1, 3], &[2, 4, -1, -2], &[-3, -4]]).unwrap();
        assert_eq!(p.restrict(TOP).to_text(), "{{1,3},{2,4}}");
        assert_eq!(p.restrict(TWO_ROWS), p);
    }

    #[test]
    fn rejects_bad_cover() {
        assert!(SetPartition::from_signed(2, &[&[1, -1]]).is_err());
        assert!(SetPartition::parse("{{1,1,-1}}").is_err());
    }
}
