//! Vertices of diagrams and the shared text grammar for blocks.
//!
//! A vertex is a value in one of three rows: unbarred (top), barred
//! (bottom), or double-barred (lower, used only by three-row partitions).
//! Text encodes them as `3`, `-3`, and `=3` respectively.

use std::fmt;

use crate::error::{Error, Result};

/// Row of a vertex. The derived order (top < bottom < lower) is the order
/// used inside canonical blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Row {
    Top,
    Bottom,
    Lower,
}

/// A vertex: a positive `value` (a position for set partitions, a color for
/// multiset partitions) in a given row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: Row,
    pub value: u32,
}

impl Vertex {
    pub fn top(value: u32) -> Self {
        Vertex {
            row: Row::Top,
            value,
        }
    }

    pub fn bottom(value: u32) -> Self {
        Vertex {
            row: Row::Bottom,
            value,
        }
    }

    pub fn lower(value: u32) -> Self {
        Vertex {
            row: Row::Lower,
            value,
        }
    }

    /// Decodes the signed convention: positive is top, negative is bottom.
    pub fn from_signed(v: i32) -> Self {
        assert!(v != 0, "vertex value 0 is not allowed");
        if v > 0 {
            Vertex::top(v as u32)
        } else {
            Vertex::bottom((-v) as u32)
        }
    }

    /// Index of the vertex among the `rows·r` vertices: top first, then
    /// bottom, then lower; positions are 1-based in `value`.
    pub fn index(&self, r: usize) -> usize {
        let base = match self.row {
            Row::Top => 0,
            Row::Bottom => r,
            Row::Lower => 2 * r,
        };
        base + self.value as usize - 1
    }

    /// Inverse of [`Vertex::index`].
    pub fn from_index(i: usize, r: usize) -> Self {
        let value = (i % r + 1) as u32;
        match i / r {
            0 => Vertex::top(value),
            1 => Vertex::bottom(value),
            _ => Vertex::lower(value),
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.row {
            Row::Top => write!(f, "{}", self.value),
            Row::Bottom => write!(f, "-{}", self.value),
            Row::Lower => write!(f, "={}", self.value),
        }
    }
}

/// Canonicalizes a list of blocks in place: each block sorted, blocks sorted
/// lexicographically. This single total order serves hashing, dedup, and
/// printing.
pub(crate) fn canonicalize(blocks: &mut Vec<Vec<Vertex>>) {
    blocks.retain(|b| !b.is_empty());
    for b in blocks.iter_mut() {
        b.sort_unstable();
    }
    blocks.sort_unstable();
}

/// Prints blocks with the given delimiters, e.g. `{{1,-1},{2}}`.
pub(crate) fn format_blocks(blocks: &[Vec<Vertex>], open: char, close: char) -> String {
    let mut s = String::new();
    s.push(open);
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push(open);
        for (j, v) in b.iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            s.push_str(&v.to_string());
        }
        s.push(close);
    }
    s.push(close);
    s
}

/// Parses `{{1,2,-1},{-2}}` (or with `[`/`]`) into raw blocks. Whitespace is
/// ignored. Errors carry the byte position of the problem.
pub(crate) fn parse_blocks(text: &str, open: char, close: char) -> Result<Vec<Vec<Vertex>>> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let end = text.len();
    let mut i = 0;
    let pos = |i: usize| chars.get(i).map(|p| p.0).unwrap_or(end);
    let expect = |i: usize, want: char| -> Result<()> {
        match chars.get(i) {
            Some(&(_, c)) if c == want => Ok(()),
            _ => Err(Error::parse(pos(i), format!("expected '{want}'"))),
        }
    };
    expect(i, open)?;
    i += 1;
    let mut blocks = Vec::new();
    if chars.get(i).map(|p| p.1) == Some(close) {
        i += 1;
    } else {
        loop {
            expect(i, open)?;
            i += 1;
            let mut block = Vec::new();
            if chars.get(i).map(|p| p.1) == Some(close) {
                return Err(Error::parse(pos(i), "empty block"));
            }
            loop {
                let start = i;
                let row = match chars.get(i).map(|p| p.1) {
                    Some('-') => {
                        i += 1;
                        Row::Bottom
                    }
                    Some('=') => {
                        i += 1;
                        Row::Lower
                    }
                    _ => Row::Top,
                };
                let digits_start = i;
                while chars.get(i).is_some_and(|p| p.1.is_ascii_digit()) {
                    i += 1;
                }
                if i == digits_start {
                    return Err(Error::parse(pos(start), "expected a vertex"));
                }
                let s: String = chars[digits_start..i].iter().map(|p| p.1).collect();
                let value: u32 = s
                    .parse()
                    .map_err(|_| Error::parse(pos(digits_start), "vertex value out of range"))?;
                if value == 0 {
                    return Err(Error::parse(pos(digits_start), "vertex values start at 1"));
                }
                block.push(Vertex { row, value });
                match chars.get(i).map(|p| p.1) {
                    Some(',') => i += 1,
                    Some(c) if c == close => {
                        i += 1;
                        break;
                    }
                    _ => return Err(Error::parse(pos(i), format!("expected ',' or '{close}'"))),
                }
            }
            blocks.push(block);
            match chars.get(i).map(|p| p.1) {
                Some(',') => i += 1,
                Some(c) if c == close => {
                    i += 1;
                    break;
                }
                _ => return Err(Error::parse(pos(i), format!("expected ',' or '{close}'"))),
            }
        }
    }
    if i != chars.len() {
        return Err(Error::parse(pos(i), "trailing characters"));
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reports_position() {
        let err = parse_blocks("{{1,x}}", '{', '}').unwrap_err();
        assert_eq!(err, Error::parse(4, "expected a vertex"));
        assert!(parse_blocks("{{1},{}}", '{', '}').is_err());
        assert!(parse_blocks("{{1}}}", '{', '}').is_err());
    }

    #[test]
    fn grammar_round_trip() {
        for (s, o, c) in [
            ("[[1,1,-2],[2]]", '[', ']'),
            ("{{1,2,-1},{-2}}", '{', '}'),
            ("{{1,=1},{-1}}", '{', '}'),
        ] {
            assert_eq!(format_blocks(&parse_blocks(s, o, c).unwrap(), o, c), s);
        }
    }

    #[test]
    fn vertex_index_round_trip() {
        for i in 0..9 {
            assert_eq!(Vertex::from_index(i, 3).index(3), i);
        }
    }
}
