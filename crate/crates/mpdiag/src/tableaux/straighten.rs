//! Straightening in the Specht module: a tableau of shape `μ` filled with
//! distinct letters is rewritten as a signed rational combination of
//! standard tableaux using column antisymmetry and Garnir relations.
//!
//! For set partition tableaux this is applied to the rows above the first,
//! with the blocks as letters in last-letter order; the first row is inert.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::partitions::{last_letter_compare, Permutation};
use crate::scalars::Rational;
use crate::tableaux::{ModuleVector, Tableau};

/// Rows of a letter tableau; `rows[0]` is the longest row, and columns must
/// increase from `rows[0]` upward.
type Letters = Vec<Vec<usize>>;

/// Memoized straightening of letter tableaux. Results depend only on the
/// relative order of letters, so one memo serves every content.
#[derive(Default)]
pub struct Straightener {
    memo: HashMap<Letters, BTreeMap<Letters, Rational>>,
}

fn column_len(t: &Letters, j: usize) -> usize {
    t.iter().take_while(|row| row.len() > j).count()
}

/// Sorts every column increasingly upward; returns the sign of the column
/// permutation used.
fn column_sort(t: &mut Letters) -> i32 {
    let mut sign = 1;
    let width = t.first().map_or(0, Vec::len);
    for j in 0..width {
        let h = column_len(t, j);
        let col: Vec<usize> = (0..h).map(|i| t[i][j]).collect();
        let mut idx: Vec<usize> = (0..h).collect();
        idx.sort_by_key(|&i| col[i]);
        let perm = Permutation::from_images(&idx.iter().map(|&i| i + 1).collect::<Vec<_>>())
            .expect("a sorting order is a permutation");
        sign *= perm.sign();
        for (i, &src) in idx.iter().enumerate() {
            t[i][j] = col[src];
        }
    }
    sign
}

/// Σ letter·column over all cells. Every Garnir rewrite moves a set of
/// larger letters one column right and as many smaller letters one column
/// left, so this strictly increases and bounds the recursion depth.
fn measure(t: &Letters) -> usize {
    t.iter()
        .flat_map(|row| row.iter().enumerate().map(|(j, &v)| v * j))
        .sum()
}

fn first_row_descent(t: &Letters) -> Option<(usize, usize)> {
    for (i, row) in t.iter().enumerate() {
        for j in 0..row.len().saturating_sub(1) {
            if row[j] > row[j + 1] {
                return Some((i, j));
            }
        }
    }
    None
}

/// All `m`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < m - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, m, &mut Vec::new(), &mut out);
    out
}

impl Straightener {
    pub fn new() -> Self {
        Self::default()
    }

    /// Expansion of the polytabloid of `t` in standard polytabloids.
    fn letters(&mut self, t: &Letters) -> BTreeMap<Letters, Rational> {
        let mut sorted = t.clone();
        let sign = column_sort(&mut sorted);
        let base = self.sorted(&sorted);
        if sign == 1 {
            base
        } else {
            base.into_iter().map(|(k, v)| (k, -v)).collect()
        }
    }

    /// Same, for a column-sorted tableau.
    fn sorted(&mut self, t: &Letters) -> BTreeMap<Letters, Rational> {
        if let Some(v) = self.memo.get(t) {
            return v.clone();
        }
        let out = match first_row_descent(t) {
            None => BTreeMap::from([(t.clone(), Rational::one())]),
            Some((i, j)) => self.garnir(t, i, j),
        };
        self.memo.insert(t.clone(), out.clone());
        out
    }

    /// Garnir relation at a row descent `t[i][j] > t[i][j+1]`: with `A` the
    /// cells of column `j` from row `i` up and `B` the cells of column `j+1`
    /// up to row `i`, the signed sum over coset representatives of
    /// `S_A × S_B` in `S_{A∪B}` vanishes, so `e_t` is minus the sum of the
    /// non-identity terms.
    fn garnir(&mut self, t: &Letters, i: usize, j: usize) -> BTreeMap<Letters, Rational> {
        let cells: Vec<(usize, usize)> = (i..column_len(t, j))
            .map(|row| (row, j))
            .chain((0..=i).map(|row| (row, j + 1)))
            .collect();
        let a_len = column_len(t, j) - i;
        let old: Vec<usize> = cells.iter().map(|&(r, c)| t[r][c]).collect();
        let mut values = old.clone();
        values.sort_unstable();
        let mut a_vals: Vec<usize> = old[..a_len].to_vec();
        a_vals.sort_unstable();
        let before = measure(t);
        let mut out: BTreeMap<Letters, Rational> = BTreeMap::new();
        for pick in subsets(values.len(), a_len) {
            let in_a: Vec<usize> = pick.iter().map(|&p| values[p]).collect();
            if in_a == a_vals {
                continue;
            }
            let in_b: Vec<usize> = values
                .iter()
                .copied()
                .filter(|v| !in_a.contains(v))
                .collect();
            let new: Vec<usize> = in_a.iter().chain(&in_b).copied().collect();
            // sign of the letter permutation old[p] ↦ new[p]
            let images: Vec<usize> = new
                .iter()
                .map(|v| old.iter().position(|o| o == v).expect("same letters") + 1)
                .collect();
            let sign = Permutation::from_images(&images).expect("bijection").sign();
            let mut t2 = t.clone();
            for (&(r, c), &v) in cells.iter().zip(&new) {
                t2[r][c] = v;
            }
            let s2 = column_sort(&mut t2);
            assert!(
                measure(&t2) > before,
                "Garnir rewrite must increase the column measure"
            );
            let coeff = -Rational::from_integer((sign * s2).into());
            for (k, v) in self.sorted(&t2) {
                let e = out.entry(k).or_insert_with(Rational::zero);
                *e += &coeff * v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Expands `t` in standard tableaux of the same shape and first row:
    /// the rows above the first are straightened with their blocks as
    /// letters, ordered by the last-letter order.
    pub fn straighten(&mut self, t: &Tableau) -> ModuleVector {
        let mut blocks: Vec<Vec<u32>> = t.upper().iter().flatten().cloned().collect();
        blocks.sort_by(|a, b| last_letter_compare(a, b).then_with(|| a.cmp(b)));
        let rank = |b: &Vec<u32>| blocks.iter().position(|x| x == b).expect("block present");
        let letters: Letters = t
            .upper()
            .iter()
            .map(|row| row.iter().map(rank).collect())
            .collect();
        self.letters(&letters)
            .into_iter()
            .map(|(l, c)| {
                let upper = l
                    .iter()
                    .map(|row| row.iter().map(|&x| blocks[x].clone()).collect())
                    .collect();
                (
                    Tableau::from_parts_unchecked(t.n(), upper, t.first_row_blocks().to_vec()),
                    c,
                )
            })
            .collect()
    }
}

/// One-shot straightening with a fresh memo.
pub fn straighten(t: &Tableau) -> ModuleVector {
    Straightener::new().straighten(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::Tableau;

    #[test]
    fn standard_is_fixed() {
        let t = Tableau::parse("(([], [], [], [2,4], [9]) / ([3,5], [6,8]) / ([1,7]))").unwrap();
        assert_eq!(
            straighten(&t),
            ModuleVector::from([(t.clone(), Rational::one())])
        );
    }

    #[test]
    fn column_swap_changes_sign() {
        let t = Tableau::parse("(([], [], [1], [4]) / ([2], [5]) / ([3]))").unwrap();
        let swapped = Tableau::parse("(([], [], [1], [4]) / ([3], [5]) / ([2]))").unwrap();
        let neg: ModuleVector = straighten(&t).into_iter().map(|(k, v)| (k, -v)).collect();
        assert_eq!(straighten(&swapped), neg);
    }

    #[test]
    fn two_row_garnir() {
        // Shape (2,1) on letters: [[1,0],[2]] has a row descent. In the
        // Specht module S^(2,1): e_{(2 1 / 3)} = e_{(1 2 / 3)} − e_{(1 3 / 2)}
        // (English rows listed bottom-up here).
        let mut s = Straightener::new();
        let out = s.letters(&vec![vec![1, 0], vec![2]]);
        let expected = BTreeMap::from([
            (vec![vec![0, 1], vec![2]], Rational::one()),
            (vec![vec![0, 2], vec![1]], -Rational::one()),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn standard_outputs_only() {
        let mut s = Straightener::new();
        let t = vec![vec![4, 3, 1], vec![2, 0], vec![5]];
        for k in s.letters(&t).keys() {
            assert!(first_row_descent(k).is_none());
            for j in 0..k[0].len() {
                let h = column_len(k, j);
                assert!((1..h).all(|i| k[i - 1][j] < k[i][j]));
            }
        }
    }
}
