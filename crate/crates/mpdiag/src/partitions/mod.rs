//! Canonical combinatorial objects: set partitions of barred alphabets,
//! colored multiset partitions, weak compositions and permutations, together
//! with the last-letter order, coarsening enumeration, and the coloring maps
//! `κ` that relate set partitions to multiset partitions.

mod composition;
mod multiset;
mod permutation;
mod setpart;
mod vertex;

use std::cmp::Ordering;
use std::collections::BTreeSet;

pub use composition::Composition;
pub use multiset::{multiset_factorial, MultiplicityStats, MultisetPartition};
pub use permutation::{young_subgroup, Permutation};
pub(crate) use setpart::active_rows;
pub use setpart::{SetPartition, BOTTOM, LOWER, THREE_ROWS, TOP, TWO_ROWS};
pub use vertex::{Row, Vertex};

use crate::error::{Error, Result};
use crate::limits::check_vertices;

/// Last-letter order on multisets of integers: the empty multiset is
/// smallest; otherwise compare maxima, and on a tie remove one copy of the
/// maximum from each side and recurse.
pub fn last_letter_compare(s: &[u32], r: &[u32]) -> Ordering {
    let mut a = s.to_vec();
    let mut b = r.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    // Descending sequences compared lexicographically, with a proper prefix
    // smaller, is exactly the recursive definition.
    a.cmp(&b)
}

/// All set partitions of `{0, …, n−1}` as restricted growth strings:
/// `labels[i]` is the block of element `i`, and blocks are numbered in order
/// of first appearance.
pub fn set_partition_labels(n: usize) -> Vec<Vec<usize>> {
    fn rec(i: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max {
            cur.push(l);
            rec(i + 1, n, if l == max { max + 1 } else { max }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All of `Π_{2(r)}` in canonical form, without duplicates; `Bell(2r)` of
/// them.
pub fn enumerate_set_partitions(r: usize) -> Result<Vec<SetPartition>> {
    check_vertices(2 * r)?;
    let mut out: Vec<SetPartition> = set_partition_labels(2 * r)
        .iter()
        .map(|l| SetPartition::from_labels(r, TWO_ROWS, l))
        .collect();
    out.sort();
    Ok(out)
}

/// All three-row set partitions of `[r] ∪ [r̄] ∪ [r̿]`.
pub fn enumerate_three_row_set_partitions(r: usize) -> Result<Vec<SetPartition>> {
    check_vertices(3 * r)?;
    Ok(set_partition_labels(3 * r)
        .iter()
        .map(|l| SetPartition::from_labels(r, THREE_ROWS, l))
        .collect())
}

/// All of `Π̃_{2(r),k}`, generated directly as multiset partitions of each
/// colored vertex multiset (blocks chosen in non-decreasing canonical order,
/// so each multiset partition appears exactly once).
pub fn enumerate_msp(r: usize, k: usize) -> Result<Vec<MultisetPartition>> {
    check_vertices(2 * r)?;
    let mut out = Vec::new();
    for a in Composition::all(r, k) {
        for b in Composition::all(r, k) {
            out.extend(enumerate_msp_with(&a, &b));
        }
    }
    out.sort();
    Ok(out)
}

/// The same set as [`enumerate_msp`], computed independently as the images
/// of all set partitions under every coloring map `κ_{a,b}`.
pub fn enumerate_msp_via_kappa(r: usize, k: usize) -> Result<Vec<MultisetPartition>> {
    let sps = enumerate_set_partitions(r)?;
    let mut set = BTreeSet::new();
    for a in Composition::all(r, k) {
        for b in Composition::all(r, k) {
            for p in &sps {
                set.insert(kappa(&a, &b, p)?);
            }
        }
    }
    Ok(set.into_iter().collect())
}

/// Multiset partitions with top colors `a` and bottom colors `b`.
pub fn enumerate_msp_with(a: &Composition, b: &Composition) -> Vec<MultisetPartition> {
    let k = a.k();
    let r = a.total();
    // Distinct vertex types and their available multiplicities.
    let mut types = Vec::new();
    let mut avail = Vec::new();
    for (j, &m) in a.parts.iter().enumerate() {
        if m > 0 {
            types.push(Vertex::top(j as u32 + 1));
            avail.push(m);
        }
    }
    for (j, &m) in b.parts.iter().enumerate() {
        if m > 0 {
            types.push(Vertex::bottom(j as u32 + 1));
            avail.push(m);
        }
    }
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    multiset_partitions_rec(&types, &mut avail, &mut blocks, &mut |blocks| {
        out.push(MultisetPartition::from_raw(r, k, TWO_ROWS, blocks.to_vec()));
    });
    out
}

/// Three-row multiset partitions with top colors `a`, middle (barred)
/// colors `b` and lower (double-barred) colors `c`.
pub fn enumerate_three_row_msp(
    a: &Composition,
    b: &Composition,
    c: &Composition,
) -> Vec<MultisetPartition> {
    let k = a.k();
    let r = a.total();
    let mut types = Vec::new();
    let mut avail = Vec::new();
    for (comp, make) in [
        (a, Vertex::top as fn(u32) -> Vertex),
        (b, Vertex::bottom),
        (c, Vertex::lower),
    ] {
        for (j, &m) in comp.parts.iter().enumerate() {
            if m > 0 {
                types.push(make(j as u32 + 1));
                avail.push(m);
            }
        }
    }
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    multiset_partitions_rec(&types, &mut avail, &mut blocks, &mut |blocks| {
        out.push(MultisetPartition::from_raw(
            r,
            k,
            THREE_ROWS,
            blocks.to_vec(),
        ));
    });
    out
}

/// Enumerates multiset partitions of the multiset `types^avail` as
/// non-decreasing sequences of non-empty sub-multisets.
pub(crate) fn multiset_partitions_rec(
    types: &[Vertex],
    avail: &mut [usize],
    blocks: &mut Vec<Vec<Vertex>>,
    emit: &mut dyn FnMut(&[Vec<Vertex>]),
) {
    if avail.iter().all(|&m| m == 0) {
        emit(blocks);
        return;
    }
    // Enumerate all non-empty sub-multisets (as multiplicity vectors) that
    // are >= the previous block in canonical order.
    let mut take = vec![0usize; types.len()];
    loop {
        // odometer increment
        let mut i = 0;
        loop {
            if i == types.len() {
                return;
            }
            if take[i] < avail[i] {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
        let block: Vec<Vertex> = types
            .iter()
            .zip(&take)
            .flat_map(|(&t, &m)| std::iter::repeat_n(t, m))
            .collect();
        if blocks.last().is_some_and(|last| &block < last) {
            continue;
        }
        for (a, t) in avail.iter_mut().zip(&take) {
            *a -= t;
        }
        blocks.push(block);
        multiset_partitions_rec(types, avail, blocks, emit);
        blocks.pop();
        for (a, t) in avail.iter_mut().zip(&take) {
            *a += t;
        }
    }
}

/// All coarsenings of a set partition (including itself), sorted.
pub fn coarsenings_sp(p: &SetPartition) -> Vec<SetPartition> {
    let m = p.num_blocks();
    let mut out: Vec<SetPartition> = set_partition_labels(m)
        .iter()
        .map(|groups| {
            let ng = groups.iter().max().map_or(0, |x| x + 1);
            let mut merged = vec![Vec::new(); ng];
            for (bi, &g) in groups.iter().enumerate() {
                merged[g].extend_from_slice(&p.blocks()[bi]);
            }
            SetPartition::new(p.r(), p.rows(), merged).expect("merging blocks preserves validity")
        })
        .collect();
    out.sort();
    out
}

/// All distinct coarsenings of a multiset partition (including itself),
/// sorted. Different groupings of block indices may give equal results; they
/// are deduplicated.
pub fn coarsenings_msp(p: &MultisetPartition) -> Vec<MultisetPartition> {
    let m = p.len();
    let set: BTreeSet<MultisetPartition> = set_partition_labels(m)
        .iter()
        .map(|groups| {
            let ng = groups.iter().max().map_or(0, |x| x + 1);
            let mut merged = vec![Vec::new(); ng];
            for (bi, &g) in groups.iter().enumerate() {
                merged[g].extend_from_slice(&p.blocks()[bi]);
            }
            MultisetPartition::from_raw(p.r(), p.k(), p.rows(), merged)
        })
        .collect();
    set.into_iter().collect()
}

/// True if `coarse` is obtained from `fine` by merging blocks.
pub fn is_coarsening_msp(coarse: &MultisetPartition, fine: &MultisetPartition) -> bool {
    coarse.len() <= fine.len() && coarsenings_msp(fine).binary_search(coarse).is_ok()
}

fn check_composition(c: &Composition, r: usize, what: &str) -> Result<()> {
    if c.total() != r {
        return Err(Error::Mismatch(format!(
            "{what} composition {c} does not sum to r = {r}"
        )));
    }
    Ok(())
}

/// The coloring map `κ_{a,b}`: position `i` of the top row gets the `i`-th
/// color of `a`, and likewise for the bottom row with `b`.
pub fn kappa(a: &Composition, b: &Composition, p: &SetPartition) -> Result<MultisetPartition> {
    kappa3(a, b, None, p)
}

/// The coloring map on three-row partitions, `κ_{a,b,c}`.
pub fn kappa3(
    a: &Composition,
    b: &Composition,
    c: Option<&Composition>,
    p: &SetPartition,
) -> Result<MultisetPartition> {
    let r = p.r();
    check_composition(a, r, "top")?;
    check_composition(b, r, "bottom")?;
    if a.k() != b.k() {
        return Err(Error::Mismatch(
            "compositions have different numbers of colors".into(),
        ));
    }
    let lower = match (p.rows() & LOWER != 0, c) {
        (true, Some(c)) => {
            check_composition(c, r, "lower")?;
            c.colors()
        }
        (true, None) => return Err(Error::Mismatch("three-row partition needs c".into())),
        (false, _) => Vec::new(),
    };
    let (ca, cb) = (a.colors(), b.colors());
    let blocks = p
        .blocks()
        .iter()
        .map(|blk| {
            blk.iter()
                .map(|v| {
                    let i = v.value as usize - 1;
                    let value = match v.row {
                        Row::Top => ca[i],
                        Row::Bottom => cb[i],
                        Row::Lower => lower[i],
                    };
                    Vertex { row: v.row, value }
                })
                .collect()
        })
        .collect();
    Ok(MultisetPartition::from_raw(r, a.k(), p.rows(), blocks))
}

/// A set partition in the fiber of `κ_{a,b}` over `pt`, where `a`, `b` are
/// the top and bottom color multiplicities of `pt` (positions of each color
/// are handed out left to right in block order).
pub fn fiber_representative(pt: &MultisetPartition) -> SetPartition {
    let r = pt.r();
    let rows = active_rows(pt.rows());
    // next free position for each (row, color)
    let mut next = std::collections::BTreeMap::new();
    for row in &rows {
        let comp = pt.composition(*row);
        let mut start = 1u32;
        for (j, &m) in comp.parts.iter().enumerate() {
            next.insert((*row, j as u32 + 1), start);
            start += m as u32;
        }
    }
    let blocks = pt
        .blocks()
        .iter()
        .map(|b| {
            b.iter()
                .map(|v| {
                    let slot = next.get_mut(&(v.row, v.value)).expect("color present");
                    let out = Vertex {
                        row: v.row,
                        value: *slot,
                    };
                    *slot += 1;
                    out
                })
                .collect()
        })
        .collect();
    SetPartition::new(r, pt.rows(), blocks).expect("representative is a valid set partition")
}

/// The `𝔖_a × 𝔖_b` orbit of a two-row set partition.
pub fn orbit(p: &SetPartition, a: &Composition, b: &Composition) -> Result<BTreeSet<SetPartition>> {
    let ga = young_subgroup(a)?;
    let gb = young_subgroup(b)?;
    let mut out = BTreeSet::new();
    for s1 in &ga {
        for s2 in &gb {
            out.insert(p.act(s1, s2)?);
        }
    }
    Ok(out)
}

/// All set partitions `π` with `κ_{a,b}(π) = pt`: exactly one
/// `𝔖_a × 𝔖_b`-orbit.
pub fn kappa_fiber(
    pt: &MultisetPartition,
    a: &Composition,
    b: &Composition,
) -> Result<Vec<SetPartition>> {
    if &pt.top_composition() != a || &pt.bottom_composition() != b {
        return Err(Error::Mismatch(format!(
            "{pt} has color multiplicities {} / {}, not {a} / {b}",
            pt.top_composition(),
            pt.bottom_composition()
        )));
    }
    Ok(orbit(&fiber_representative(pt), a, b)?
        .into_iter()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn last_letter_examples() {
        assert_eq!(last_letter_compare(&[1, 3], &[1, 1, 3]), Ordering::Less);
        assert_eq!(last_letter_compare(&[1, 1, 1, 2], &[3]), Ordering::Less);
        assert_eq!(last_letter_compare(&[2, 5], &[5, 2]), Ordering::Equal);
        assert_eq!(last_letter_compare(&[], &[1]), Ordering::Less);
    }

    #[test]
    fn bell_counts() {
        let counts: Vec<usize> = (0..7).map(|n| set_partition_labels(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn msp_small_counts() {
        assert_eq!(enumerate_msp(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate_msp(1, 2).unwrap().len(), 8);
        assert_eq!(
            enumerate_msp(2, 2).unwrap(),
            enumerate_msp_via_kappa(2, 2).unwrap()
        );
    }

    #[test]
    fn coarsening_examples() {
        let p = SetPartition::from_signed(1, &[&[1], &[-1]]).unwrap();
        let c = coarsenings_sp(&p);
        assert_eq!(c.len(), 2);
        let fine = MultisetPartition::from_signed(
            6,
            3,
            &[&[1, 3], &[1, 3], &[2], &[3], &[-1, -1, -1, -1, -1, -1]],
        )
        .unwrap();
        let coarse = MultisetPartition::from_signed(
            6,
            3,
            &[&[1, 1, 3, 3], &[2, 3], &[-1, -1, -1, -1, -1, -1]],
        )
        .unwrap();
        assert!(is_coarsening_msp(&coarse, &fine));
        assert!(!is_coarsening_msp(&fine, &coarse));
    }

    #[test]
    fn fiber_is_an_orbit() {
        let pt = MultisetPartition::from_signed(3, 2, &[&[1, 1, -1], &[2, -2], &[-1]]).unwrap();
        let (a, b) = (pt.top_composition(), pt.bottom_composition());
        let fiber = kappa_fiber(&pt, &a, &b).unwrap();
        let brute: Vec<SetPartition> = enumerate_set_partitions(3)
            .unwrap()
            .into_iter()
            .filter(|p| kappa(&a, &b, p).unwrap() == pt)
            .collect();
        assert_eq!(fiber, brute);
    }
}
