//! Set partition tableaux and multiset partition tableaux, their
//! (semi)standardness predicates and enumeration, straightening, and the
//! irreducible modules `P_r^λ` and `MP_{r,k}^λ` as explicit matrices.
//!
//! Two representations are used:
//!
//! * [`Filling`] is a literal filling of a Young diagram, rows listed from
//!   the bottom, each cell a block or empty. The predicates
//!   [`Filling::is_standard`] and [`Filling::is_semistandard`] work on it.
//! * [`Tableau`] is the canonical form used as a module basis label: the
//!   rows above the first keep their positions (they carry sign under
//!   straightening), while the first row is symmetrized, so only the set of
//!   its non-empty blocks is stored, in last-letter order.

mod modules;
mod straighten;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{last_letter_compare, set_partition_labels, Composition, Vertex};

pub use modules::{
    act_mp, act_on_spt, act_p, module_matrix_mp, module_matrix_p, w_vector, ActionResult, MPModule,
    ModuleVector, PModule,
};
pub use straighten::{straighten, Straightener};

/// A partition `λ = (λ_1 ≥ λ_2 ≥ …)` of `n` with positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(IntegerPartition { parts })
    }

    /// `λ = (n − |μ|, μ)`; errors if the first part would be smaller than
    /// the second.
    pub fn with_first_row(n: usize, star: &[usize]) -> Result<Self> {
        let rest: usize = star.iter().sum();
        if rest > n {
            return Err(Error::Domain(format!("|λ*| = {rest} exceeds n = {n}")));
        }
        let mut parts = vec![n - rest];
        parts.extend_from_slice(star);
        parts.retain(|&p| p > 0);
        IntegerPartition::new(parts)
    }

    /// Parses `(5,2,1)` or `5,2,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        let mut offset = 0;
        for piece in inner.split(',') {
            let t = piece.trim();
            if !t.is_empty() {
                parts.push(
                    t.parse()
                        .map_err(|_| Error::parse(offset, format!("bad part {t:?}")))?,
                );
            }
            offset += piece.len() + 1;
        }
        IntegerPartition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ*`: all parts after the first.
    pub fn star(&self) -> &[usize] {
        self.parts.get(1..).unwrap_or(&[])
    }

    /// `|λ*|`.
    pub fn star_size(&self) -> usize {
        self.star().iter().sum()
    }

    /// All partitions of `m` in reverse lexicographic order.
    pub fn all(m: usize) -> Vec<IntegerPartition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
            if rem == 0 {
                out.push(IntegerPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(m, m, &mut Vec::new(), &mut out);
        out
    }

    /// Candidate shapes for tableaux with `r` entries and `n` boxes: every
    /// `λ ⊢ n` with `|λ*| ≤ r`.
    pub fn shapes(n: usize, r: usize) -> Vec<IntegerPartition> {
        (0..=r.min(n))
            .flat_map(IntegerPartition::all)
            .filter_map(|mu| IntegerPartition::with_first_row(n, &mu.parts).ok())
            .collect()
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One box of a [`Filling`]: a block (sorted entries) or empty.
pub type Cell = Option<Vec<u32>>;

/// Last-letter order on cells, with the empty cell smallest.
pub fn cell_compare(a: &Cell, b: &Cell) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => last_letter_compare(x, y),
    }
}

/// A literal filling of a Young diagram; `rows[0]` is the bottom row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Filling {
    pub rows: Vec<Vec<Cell>>,
}

impl Filling {
    /// Row lengths from the bottom.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    fn has_valid_shape(&self) -> bool {
        !self.rows.is_empty()
            && self.rows.iter().all(|r| !r.is_empty())
            && self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
            && self.rows[1..].iter().flatten().all(Option::is_some)
    }

    fn entries(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flatten()
            .flatten()
            .flatten()
            .copied()
            .collect()
    }

    /// A set partition tableau: a valid shape, empty boxes only in the first
    /// row, and the non-empty boxes partition `[r]`.
    pub fn is_set_partition_tableau(&self, r: usize) -> bool {
        let mut e = self.entries();
        e.sort_unstable();
        self.has_valid_shape() && e == (1..=r as u32).collect::<Vec<_>>()
    }

    /// A multiset partition tableau with `r` entries from `[k]`.
    pub fn is_multiset_partition_tableau(&self, r: usize, k: usize) -> bool {
        let e = self.entries();
        self.has_valid_shape() && e.len() == r && e.iter().all(|&c| c >= 1 && c as usize <= k)
    }

    /// Rows increase to the right (`strict`) or weakly, empty boxes aside,
    /// and columns strictly increase upward, all in last-letter order.
    fn ordered(&self, strict: bool) -> bool {
        let rows_ok = self.rows.iter().all(|row| {
            row.windows(2).all(|w| match cell_compare(&w[0], &w[1]) {
                Ordering::Less => true,
                Ordering::Equal => w[0].is_none() || !strict,
                Ordering::Greater => false,
            })
        });
        let cols_ok = self.rows.windows(2).all(|w| {
            w[1].iter()
                .enumerate()
                .all(|(j, c)| cell_compare(&w[0][j], c) == Ordering::Less)
        });
        rows_ok && cols_ok
    }

    /// Standard set partition tableau with content a set partition of `[r]`.
    pub fn is_standard(&self, r: usize) -> bool {
        self.is_set_partition_tableau(r) && self.ordered(true)
    }

    /// Semistandard multiset partition tableau with `r` entries from `[k]`.
    pub fn is_semistandard(&self, r: usize, k: usize) -> bool {
        self.is_multiset_partition_tableau(r, k) && self.ordered(false)
    }

    /// Parses `(([], [], [2,2], [3]) / ([1,1], [1,1]) / ([1,2]))`, rows from
    /// the bottom. A cell is `[…]`; `[]` or a blank cell is empty.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let base = text.len() - text.trim_start().len();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(base, "tableau must be wrapped in parentheses"))?;
        let mut rows = Vec::new();
        let mut offset = base + 1;
        for row_text in inner.split('/') {
            rows.push(parse_row(row_text, offset)?);
            offset += row_text.len() + 1;
        }
        let f = Filling { rows };
        if !f.has_valid_shape() {
            return Err(Error::parse(
                base,
                "rows must be non-empty, weakly shorter going up, with empty boxes only in the first row",
            ));
        }
        Ok(f)
    }

    pub fn to_text(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(format_cell).collect();
                format!("({})", cells.join(", "))
            })
            .collect();
        format!("({})", rows.join(" / "))
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn format_cell(c: &Cell) -> String {
    match c {
        None => "[]".into(),
        Some(b) => {
            let s: Vec<String> = b.iter().map(ToString::to_string).collect();
            format!("[{}]", s.join(","))
        }
    }
}

fn parse_row(text: &str, offset: usize) -> Result<Vec<Cell>> {
    let lead = text.len() - text.trim_start().len();
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::parse(offset + lead, "row must be wrapped in parentheses"))?;
    let mut cells = Vec::new();
    let mut pos = offset + lead + 1;
    let mut rest = inner;
    loop {
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        rest = trimmed;
        if let Some(body) = rest.strip_prefix('[') {
            let close = body
                .find(']')
                .ok_or_else(|| Error::parse(pos, "unclosed '['"))?;
            let mut block = Vec::new();
            for num in body[..close].split(',') {
                let n = num.trim();
                if n.is_empty() {
                    continue;
                }
                let v: u32 = n
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad entry {n:?}")))?;
                if v == 0 {
                    return Err(Error::parse(pos, "entries are positive"));
                }
                block.push(v);
            }
            block.sort_unstable();
            cells.push((!block.is_empty()).then_some(block));
            pos += close + 2;
            rest = &body[close + 1..];
        } else {
            // a blank cell
            cells.push(None);
        }
        let trimmed = rest.trim_start();
        pos += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix(',')
            .ok_or_else(|| Error::parse(pos, "expected ',' between cells"))?;
        pos += 1;
    }
    Ok(cells)
}

/// A tableau in canonical form: `n` boxes, the rows above the first
/// (`upper[0]` is the second row), and the non-empty blocks of the first row
/// sorted in last-letter order. The remaining first-row boxes are empty.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    n: usize,
    upper: Vec<Vec<Vec<u32>>>,
    first: Vec<Vec<u32>>,
}

fn sort_last_letter(blocks: &mut [Vec<u32>]) {
    blocks.sort_by(|a, b| last_letter_compare(a, b).then_with(|| a.cmp(b)));
}

impl Tableau {
    /// Builds a tableau with `n` boxes; blocks are sorted internally and the
    /// first-row blocks put in last-letter order.
    pub fn new(n: usize, upper: Vec<Vec<Vec<u32>>>, mut first: Vec<Vec<u32>>) -> Result<Self> {
        let mut upper = upper;
        for b in upper.iter_mut().flatten().chain(first.iter_mut()) {
            if b.is_empty() {
                return Err(Error::Domain("blocks are non-empty".into()));
            }
            b.sort_unstable();
        }
        if upper.iter().any(Vec::is_empty) || upper.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Domain(
                "rows above the first must be non-empty and weakly shorter going up".into(),
            ));
        }
        let star: usize = upper.iter().map(Vec::len).sum();
        let row1 = n.checked_sub(star).ok_or_else(|| {
            Error::Domain(format!("{star} boxes above the first row exceed n = {n}"))
        })?;
        if upper.first().is_some_and(|r2| r2.len() > row1) {
            return Err(Error::Domain(
                "the first row is shorter than the second".into(),
            ));
        }
        if first.len() > row1 {
            return Err(Error::Domain(format!(
                "{} blocks do not fit in a first row of length {row1}",
                first.len()
            )));
        }
        sort_last_letter(&mut first);
        Ok(Tableau { n, upper, first })
    }

    pub(crate) fn from_parts_unchecked(
        n: usize,
        upper: Vec<Vec<Vec<u32>>>,
        mut first: Vec<Vec<u32>>,
    ) -> Self {
        sort_last_letter(&mut first);
        Tableau { n, upper, first }
    }

    /// Reads a filling; the arrangement of the first row is forgotten.
    pub fn from_filling(f: &Filling) -> Result<Self> {
        if !f.has_valid_shape() {
            return Err(Error::Domain("not a valid tableau shape".into()));
        }
        let n = f.rows.iter().map(Vec::len).sum();
        let upper = f.rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.clone().expect("checked non-empty"))
                    .collect()
            })
            .collect();
        let first = f.rows[0].iter().flatten().cloned().collect();
        Tableau::new(n, upper, first)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Tableau::from_filling(&Filling::parse(text)?).map_err(|e| Error::parse(0, e.to_string()))
    }

    /// The canonical filling: empty boxes first in the first row.
    pub fn to_filling(&self) -> Filling {
        let row1_len = self.n - self.star_size();
        let mut row1: Vec<Cell> = vec![None; row1_len - self.first.len()];
        row1.extend(self.first.iter().cloned().map(Some));
        let mut rows = vec![row1];
        rows.extend(
            self.upper
                .iter()
                .map(|row| row.iter().cloned().map(Some).collect()),
        );
        Filling { rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn upper(&self) -> &[Vec<Vec<u32>>] {
        &self.upper
    }

    pub fn first_row_blocks(&self) -> &[Vec<u32>] {
        &self.first
    }

    fn star_size(&self) -> usize {
        self.upper.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> IntegerPartition {
        let star: Vec<usize> = self.upper.iter().map(Vec::len).collect();
        IntegerPartition::with_first_row(self.n, &star).expect("validated on construction")
    }

    /// All non-empty blocks: rows above the first, then the first row.
    pub fn content(&self) -> Vec<Vec<u32>> {
        self.upper
            .iter()
            .flatten()
            .chain(&self.first)
            .cloned()
            .collect()
    }

    /// Total number of entries.
    pub fn r(&self) -> usize {
        self.content().iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self, r: usize) -> bool {
        self.to_filling().is_standard(r)
    }

    pub fn is_semistandard(&self, r: usize, k: usize) -> bool {
        self.to_filling().is_semistandard(r, k)
    }

    /// Multiplicities of the entries `1..=k` (the content composition of a
    /// multiset partition tableau).
    pub fn content_composition(&self, k: usize) -> Composition {
        Composition::from_colors(self.content().into_iter().flatten(), k)
    }

    /// Applies `f` to every entry.
    pub fn map_entries(&self, f: impl Fn(u32) -> u32) -> Tableau {
        let map = |b: &Vec<u32>| {
            let mut v: Vec<u32> = b.iter().map(|&x| f(x)).collect();
            v.sort_unstable();
            v
        };
        Tableau::from_parts_unchecked(
            self.n,
            self.upper
                .iter()
                .map(|row| row.iter().map(map).collect())
                .collect(),
            self.first.iter().map(map).collect(),
        )
    }

    /// The coloring map `κ_a`: entry `i` becomes the `i`-th color of `a`.
    pub fn color(&self, a: &Composition) -> Tableau {
        let colors = a.colors();
        self.map_entries(|i| colors[i as usize - 1])
    }

    pub fn to_text(&self) -> String {
        self.to_filling().to_text()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Multiset partitions of a multiset of `r` entries from `[k]`, each as a
/// list of sorted blocks in non-decreasing order.
fn multiset_contents(r: usize, k: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = Vec::new();
    for c in Composition::all(r, k) {
        let mut types = Vec::new();
        let mut avail = Vec::new();
        for (j, &m) in c.parts.iter().enumerate() {
            if m > 0 {
                types.push(Vertex::top(j as u32 + 1));
                avail.push(m);
            }
        }
        crate::partitions::multiset_partitions_rec(
            &types,
            &mut avail,
            &mut Vec::new(),
            &mut |bs| {
                out.push(
                    bs.iter()
                        .map(|b| b.iter().map(|v| v.value).collect())
                        .collect(),
                );
            },
        );
    }
    out
}

/// Set partitions of `[r]` as lists of sorted blocks.
fn set_contents(r: usize) -> Vec<Vec<Vec<u32>>> {
    set_partition_labels(r)
        .iter()
        .map(|labels| {
            let nb = labels.iter().max().map_or(0, |m| m + 1);
            let mut blocks = vec![Vec::new(); nb];
            for (i, &l) in labels.iter().enumerate() {
                blocks[l].push(i as u32 + 1);
            }
            blocks
        })
        .collect()
}

/// All placements of the given content in shape `λ` (rows above the first
/// receive an ordered selection of blocks, the first row the rest) that
/// satisfy `keep`, deduplicated.
fn fill_shape(
    lambda: &IntegerPartition,
    contents: &[Vec<Vec<u32>>],
    keep: impl Fn(&Tableau) -> bool,
) -> Vec<Tableau> {
    let star = lambda.star();
    let m = lambda.star_size();
    let mut out = BTreeSet::new();
    for content in contents {
        if content.len() < m || content.len() - m > lambda.parts()[0] {
            continue;
        }
        // ordered selections of m distinct block indices
        let mut chosen = Vec::with_capacity(m);
        let mut used = vec![false; content.len()];
        select(content, m, &mut chosen, &mut used, &mut |sel, used| {
            let mut upper = Vec::new();
            let mut it = sel.iter();
            for &len in star {
                upper.push(it.by_ref().take(len).map(|&i| content[i].clone()).collect());
            }
            let first = (0..content.len())
                .filter(|&i| !used[i])
                .map(|i| content[i].clone())
                .collect();
            if let Ok(t) = Tableau::new(lambda.n(), upper, first) {
                if keep(&t) {
                    out.insert(t);
                }
            }
        });
    }
    out.into_iter().collect()
}

fn select(
    content: &[Vec<u32>],
    m: usize,
    chosen: &mut Vec<usize>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[usize], &[bool]),
) {
    if chosen.len() == m {
        emit(chosen, used);
        return;
    }
    for i in 0..content.len() {
        // equal blocks are interchangeable: take the first unused copy only
        if used[i] || (0..i).any(|j| !used[j] && content[j] == content[i]) {
            continue;
        }
        used[i] = true;
        chosen.push(i);
        select(content, m, chosen, used, emit);
        chosen.pop();
        used[i] = false;
    }
}

/// `SSPT_{λ,r}`: all standard set partition tableaux of shape `λ` whose
/// content is a set partition of `[r]`, sorted.
pub fn enumerate_sspt(lambda: &IntegerPartition, r: usize) -> Result<Vec<Tableau>> {
    crate::limits::check_vertices(r)?;
    Ok(fill_shape(lambda, &set_contents(r), |t| t.is_standard(r)))
}

/// `SSMPT_{λ,r,k}`: all semistandard multiset partition tableaux of shape
/// `λ` with `r` entries from `[k]`, sorted.
pub fn enumerate_ssmpt(lambda: &IntegerPartition, r: usize, k: usize) -> Result<Vec<Tableau>> {
    crate::limits::check_vertices(r)?;
    Ok(fill_shape(lambda, &multiset_contents(r, k), |t| {
        t.is_semistandard(r, k)
    }))
}

/// `Λ^{P_r(n)}`: shapes `λ ⊢ n` with at least one standard tableau.
pub fn shapes_p(n: usize, r: usize) -> Result<Vec<IntegerPartition>> {
    let mut out = Vec::new();
    for l in IntegerPartition::shapes(n, r) {
        if !enumerate_sspt(&l, r)?.is_empty() {
            out.push(l);
        }
    }
    Ok(out)
}

/// `Λ^{MP_{r,k}(n)}`: shapes `λ ⊢ n` with at least one semistandard tableau.
pub fn shapes_mp(n: usize, r: usize, k: usize) -> Result<Vec<IntegerPartition>> {
    let mut out = Vec::new();
    for l in IntegerPartition::shapes(n, r) {
        if !enumerate_ssmpt(&l, r, k)?.is_empty() {
            out.push(l);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_set_partition_tableau_examples() {
        let good = Filling::parse("(([], [], [], [2,4], [9]) / ([3,5], [6,8]) / ([1,7]))").unwrap();
        assert!(good.is_standard(9));
        let bad = Filling::parse("(([], [], [], [2,4], [9]) / ([1,7], [6,8]) / ([3,5]))").unwrap();
        assert!(bad.is_set_partition_tableau(9));
        assert!(!bad.is_standard(9));
        let not_spt =
            Filling::parse("(([], [], [], [2,4], [1,9]) / ([3,5], [6,8]) / ([2,7]))").unwrap();
        assert!(!not_spt.is_set_partition_tableau(9));
    }

    #[test]
    fn semistandard_multiset_tableau_examples() {
        let good = Filling::parse("(([], [], [2,2], [3]) / ([1,1], [1,1]) / ([1,2]) / ([1,1,2]))")
            .unwrap();
        assert!(good.is_semistandard(12, 3));
        let bad =
            Filling::parse("(([], [], [], [2,2], [3]) / ([1,1], [1,2]) / ([1,1]) / ([1,1,2]))")
                .unwrap();
        assert!(bad.is_multiset_partition_tableau(12, 3));
        assert!(!bad.is_semistandard(12, 3));
    }

    #[test]
    fn blank_cells_parse_as_empty() {
        let f = Filling::parse("((, [], [2,2], [3]) / ([1,1], [1,1]))").unwrap();
        assert_eq!(f.rows[0][0], None);
        assert_eq!(f.to_text(), "(([], [], [2,2], [3]) / ([1,1], [1,1]))");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            Filling::parse("(([1,2) / ([3]))"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Filling::parse("([1] / [2])"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn tableau_round_trip() {
        let t = Tableau::parse("(([], [], [5], [1,4]) / ([2], [3]))").unwrap();
        assert_eq!(t.shape(), IntegerPartition::new(vec![4, 2]).unwrap());
        assert_eq!(Tableau::parse(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn coloring_example() {
        let a = Composition::new(vec![3, 1]);
        let s1 = Tableau::parse("(([], []) / ([1], [4]) / ([2,3]))").unwrap();
        let s2 = Tableau::parse("(([], []) / ([3], [4]) / ([1,2]))").unwrap();
        let target = Tableau::parse("(([], []) / ([1], [2]) / ([1,1]))").unwrap();
        assert_eq!(s1.color(&a), target);
        assert_eq!(s2.color(&a), target);
    }

    #[test]
    fn single_shape_of_zero_content() {
        let l = IntegerPartition::new(vec![4]).unwrap();
        let ts = enumerate_sspt(&l, 0).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].to_text(), "(([], [], [], []))");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..8).map(|m| IntegerPartition::all(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}
