//! Stabilizer subgroups of the middle row of `π ∗ ν` and the size of the
//! fibers of `Γ^π_ν` over a colored three-row partition, each computed by
//! brute force next to its closed form.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::msp_algebra::kappa_three;
use crate::partition_algebra::{gamma_set, row_as_bottom, star};
use crate::partitions::{
    kappa, multiset_factorial, young_subgroup, Composition, MultisetPartition, Permutation, Row,
    SetPartition, Vertex,
};
use crate::scalars::Rational;

/// Sizes of the subgroups attached to a pair `(π, ν)` with
/// `ρ = π|bottom = ν|top`, by enumeration (`*_size`) and by closed form
/// (`*_formula`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    /// `|𝔖_b^ρ|`: elements of `𝔖_b` fixing `ρ`.
    pub stabilizer_size: usize,
    /// `|X_b^ρ|`: stabilizer elements permuting whole blocks of `ρ`
    /// (order-preserving on each block).
    pub x_size: usize,
    /// `|Y_b^ρ|`: stabilizer elements fixing every block of `ρ`.
    pub y_size: usize,
    /// `|A^π_{a,b}|`.
    pub a_size: usize,
    /// `|B^ν_{b,c}|`.
    pub b_size: usize,
    /// `|A ∩ B|`.
    pub ab_size: usize,
    pub x_formula: BigInt,
    pub y_formula: BigInt,
    pub a_formula: Rational,
    pub b_formula: Rational,
    pub ab_formula: Rational,
}

impl SubgroupReport {
    /// True iff every closed form matches its enumeration and
    /// `|𝔖_b^ρ| = |X|·|Y|`.
    pub fn holds(&self) -> bool {
        let int = |n: usize| Rational::from_integer(BigInt::from(n));
        self.stabilizer_size == self.x_size * self.y_size
            && BigInt::from(self.x_size) == self.x_formula
            && BigInt::from(self.y_size) == self.y_formula
            && int(self.a_size) == self.a_formula
            && int(self.b_size) == self.b_formula
            && int(self.ab_size) == self.ab_formula
    }
}

/// Blocks of a one-row set partition as sorted lists of positions.
fn row_blocks(p: &SetPartition) -> Vec<Vec<usize>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|v| v.value as usize).collect())
        .collect()
}

fn fixes_partition(s: &Permutation, blocks: &[Vec<usize>]) -> bool {
    let mut image: Vec<Vec<usize>> = blocks
        .iter()
        .map(|b| {
            let mut m: Vec<usize> = b.iter().map(|&i| s.apply(i)).collect();
            m.sort_unstable();
            m
        })
        .collect();
    image.sort();
    let mut orig = blocks.to_vec();
    orig.sort();
    image == orig
}

fn order_preserving_on_blocks(s: &Permutation, blocks: &[Vec<usize>]) -> bool {
    blocks
        .iter()
        .all(|b| b.windows(2).all(|w| s.apply(w[0]) < s.apply(w[1])))
}

fn fixes_each_block(s: &Permutation, blocks: &[Vec<usize>]) -> bool {
    blocks
        .iter()
        .all(|b| b.iter().all(|&i| b.contains(&s.apply(i))))
}

/// For `σ` fixing `ρ`, writes `σ = within ∘ across` where `across` maps each
/// block of `ρ` onto its image order-preservingly (an element of `X`) and
/// `within` fixes every block (an element of `Y`).
pub fn factor_stabilizer_element(
    s: &Permutation,
    rho: &[Vec<usize>],
) -> Result<(Permutation, Permutation)> {
    if !fixes_partition(s, rho) {
        return Err(Error::Domain(
            "permutation does not fix the partition".into(),
        ));
    }
    let r = s.degree();
    let mut across = vec![0usize; r];
    for b in rho {
        let mut img: Vec<usize> = b.iter().map(|&i| s.apply(i)).collect();
        img.sort_unstable();
        for (&i, &j) in b.iter().zip(&img) {
            across[i - 1] = j;
        }
    }
    let across = Permutation::from_images(&across)?;
    let within = s.compose(&across.inverse());
    Ok((within, across))
}

/// Whether `σ` (acting on the shared row) only sends a block of `p` to a
/// block with the same coloring: for all blocks `S, T`, `S|row = σ(T|row)`
/// implies `κ(S) = κ(T)`.
fn respects_painting(
    s: &Permutation,
    p: &SetPartition,
    row: Row,
    painted: &dyn Fn(&[Vertex]) -> Vec<Vertex>,
) -> bool {
    let restricted: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .map(|b| {
            let mut v: Vec<usize> = b
                .iter()
                .filter(|v| v.row == row)
                .map(|v| v.value as usize)
                .collect();
            v.sort_unstable();
            v
        })
        .collect();
    for (ti, t) in p.blocks().iter().enumerate() {
        if restricted[ti].is_empty() {
            continue;
        }
        let mut img: Vec<usize> = restricted[ti].iter().map(|&i| s.apply(i)).collect();
        img.sort_unstable();
        for (si, sb) in p.blocks().iter().enumerate() {
            if restricted[si] == img && painted(sb) != painted(t) {
                return false;
            }
        }
    }
    true
}

fn paint(a: &[u32], b: &[u32], blk: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = blk
        .iter()
        .map(|v| {
            let i = v.value as usize - 1;
            Vertex {
                row: v.row,
                value: if v.row == Row::Top { a[i] } else { b[i] },
            }
        })
        .collect();
    out.sort();
    out
}

fn m_factorial_of_blocks(blocks: &[&Vec<Vertex>]) -> BigInt {
    multiset_factorial(blocks)
}

/// Enumerates the subgroups for `(π, ν)` and compares with the closed forms.
pub fn subgroup_report(
    pi: &SetPartition,
    nu: &SetPartition,
    a: &Composition,
    b: &Composition,
    c: &Composition,
) -> Result<SubgroupReport> {
    let rho_sp = row_as_bottom(pi, Row::Bottom);
    if rho_sp != row_as_bottom(nu, Row::Top) {
        return Err(Error::Domain(format!(
            "{pi} restricted to the bottom differs from {nu} restricted to the top"
        )));
    }
    let rho = row_blocks(&rho_sp);
    let group = young_subgroup(b)?;
    let stab: Vec<&Permutation> = group.iter().filter(|s| fixes_partition(s, &rho)).collect();
    let xs: Vec<&Permutation> = stab
        .iter()
        .copied()
        .filter(|s| order_preserving_on_blocks(s, &rho))
        .collect();
    let y_size = stab.iter().filter(|s| fixes_each_block(s, &rho)).count();
    let (ca, cb, cc) = (a.colors(), b.colors(), c.colors());
    let paint_pi = |blk: &[Vertex]| paint(&ca, &cb, blk);
    let paint_nu = |blk: &[Vertex]| paint(&cb, &cc, blk);
    let in_a: Vec<bool> = xs
        .iter()
        .map(|s| respects_painting(s, pi, Row::Bottom, &paint_pi))
        .collect();
    let in_b: Vec<bool> = xs
        .iter()
        .map(|s| respects_painting(s, nu, Row::Top, &paint_nu))
        .collect();

    // Closed forms.
    let pt = kappa(a, b, pi)?;
    let nt = kappa(b, c, nu)?;
    let rho_colored: Vec<Vec<u32>> = rho
        .iter()
        .map(|blk| {
            let mut v: Vec<u32> = blk.iter().map(|&i| cb[i - 1]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let x_formula = multiset_factorial(&rho_colored);
    let y_formula: BigInt = rho_colored.iter().map(|v| multiset_factorial(v)).product();
    let only = |p: &MultisetPartition, row: Row| -> BigInt {
        let blocks: Vec<&Vec<Vertex>> = p
            .blocks()
            .iter()
            .filter(|b| b.iter().all(|v| v.row == row))
            .collect();
        m_factorial_of_blocks(&blocks)
    };
    let ratio = |n: BigInt, d: BigInt| Rational::new(n, d);
    let a_formula = ratio(pt.m_factorial(), only(&pt, Row::Top));
    let b_formula = ratio(nt.m_factorial(), only(&nt, Row::Bottom));
    let gt = kappa_three(a, b, c, &star(pi, nu)?)?;
    let outer_only: Vec<&Vec<Vertex>> = gt
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row != Row::Bottom))
        .collect();
    let ab_formula = ratio(gt.m_factorial(), m_factorial_of_blocks(&outer_only));

    Ok(SubgroupReport {
        stabilizer_size: stab.len(),
        x_size: xs.len(),
        y_size,
        a_size: in_a.iter().filter(|&&t| t).count(),
        b_size: in_b.iter().filter(|&&t| t).count(),
        ab_size: in_a.iter().zip(&in_b).filter(|(x, y)| **x && **y).count(),
        x_formula,
        y_formula,
        a_formula,
        b_formula,
        ab_formula,
    })
}

/// `|Γ^π_ν(μ̃)|`: the number of `γ ∈ Γ^π_ν` with `κ_{a,b,c}(γ) = μ̃`, by
/// enumeration.
pub fn gamma_fiber_size(
    pi: &SetPartition,
    nu: &SetPartition,
    mu: &MultisetPartition,
    a: &Composition,
    b: &Composition,
    c: &Composition,
) -> Result<usize> {
    let mut count = 0;
    for g in gamma_set(pi, nu)? {
        if kappa_three(a, b, c, &g)? == *mu {
            count += 1;
        }
    }
    Ok(count)
}

/// The closed form `m(π̃₊)! · m(ν̃₋)! / m(μ̃±)!` for a non-empty fiber.
pub fn gamma_fiber_size_formula(
    pi: &SetPartition,
    nu: &SetPartition,
    mu: &MultisetPartition,
    a: &Composition,
    b: &Composition,
    c: &Composition,
) -> Result<Rational> {
    let pt = kappa(a, b, pi)?;
    let nt = kappa(b, c, nu)?;
    let mf = |blocks: Vec<&Vec<Vertex>>| multiset_factorial(&blocks);
    let plus = mf(pt
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Top))
        .collect());
    let minus = mf(nt
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Bottom))
        .collect());
    let pm = mf(mu
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row != Row::Bottom))
        .collect());
    Ok(Rational::new(plus * minus, pm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_of_a_stabilizer_element() {
        let rho = vec![vec![1, 2, 4], vec![3, 5, 6], vec![8], vec![7, 9]];
        let s = Permutation::from_cycles(9, &[&[3, 4], &[1, 5], &[2, 6], &[7, 9]]).unwrap();
        let (within, across) = factor_stabilizer_element(&s, &rho).unwrap();
        assert_eq!(
            within,
            Permutation::from_cycles(9, &[&[1, 4, 2], &[3, 5, 6], &[7, 9]]).unwrap()
        );
        assert_eq!(
            across,
            Permutation::from_cycles(9, &[&[1, 3], &[2, 5], &[4, 6]]).unwrap()
        );
        assert!(order_preserving_on_blocks(&across, &rho));
        assert!(fixes_each_block(&within, &rho));
    }

    #[test]
    fn trivial_case() {
        let pi = SetPartition::from_signed(2, &[&[1], &[2], &[-1], &[-2]]).unwrap();
        let one = Composition::new(vec![1, 1]);
        let rep = subgroup_report(&pi, &pi, &one, &one, &one).unwrap();
        assert!(rep.holds());
        assert_eq!((rep.stabilizer_size, rep.a_size, rep.ab_size), (1, 1, 1));
    }
}
