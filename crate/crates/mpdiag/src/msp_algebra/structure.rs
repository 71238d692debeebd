//! Nonbasic weight, the order `≺`, factorization at a nonbasic block, and
//! the generators `P`, `R` and `Q`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::msp_algebra::{multiply_mp, MPBasis, MPElement};
use crate::partitions::{Composition, MultisetPartition, Row, Vertex, TWO_ROWS};
use crate::scalars::Poly;

/// Vertical-bar and nonbasic-block statistics of a multiset partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonbasicProfile {
    /// Total size of the nonbasic blocks.
    pub nbw: usize,
    /// Number of vertical bars `{i, ī}`.
    pub vb: usize,
    /// The nonbasic blocks (sorted, with repetition).
    pub nonbasic_blocks: Vec<Vec<Vertex>>,
}

fn is_vertical_bar(b: &[Vertex]) -> bool {
    b.len() == 2 && b[0].row == Row::Top && b[1].row == Row::Bottom && b[0].value == b[1].value
}

fn is_nonbasic(b: &[Vertex]) -> bool {
    b.len() > 1 && !is_vertical_bar(b)
}

/// Splits the blocks into vertical bars, singletons and nonbasic blocks.
pub fn nonbasic_profile(p: &MultisetPartition) -> NonbasicProfile {
    let nonbasic_blocks: Vec<Vec<Vertex>> = p
        .blocks()
        .iter()
        .filter(|b| is_nonbasic(b))
        .cloned()
        .collect();
    NonbasicProfile {
        nbw: nonbasic_blocks.iter().map(Vec::len).sum(),
        vb: p.blocks().iter().filter(|b| is_vertical_bar(b)).count(),
        nonbasic_blocks,
    }
}

/// Outcome of comparing two multiset partitions under `≺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrecOrdering {
    /// `p ≺ q`.
    Less,
    /// `q ≺ p`.
    Greater,
    /// `p = q`.
    Equal,
    /// Distinct with equal `(nbw, vb)`.
    Incomparable,
}

/// `p ≺ q` iff `nbw(p) < nbw(q)`, or the weights agree and `p` has fewer
/// vertical bars.
pub fn prec_compare(p: &MultisetPartition, q: &MultisetPartition) -> PrecOrdering {
    if p == q {
        return PrecOrdering::Equal;
    }
    let (sp, sq) = (nonbasic_profile(p), nonbasic_profile(q));
    match (sp.nbw, sp.vb).cmp(&(sq.nbw, sq.vb)) {
        Ordering::Less => PrecOrdering::Less,
        Ordering::Greater => PrecOrdering::Greater,
        Ordering::Equal => PrecOrdering::Incomparable,
    }
}

/// The multiset partition consisting only of vertical bars with colors `a`.
pub fn vertical_bars(a: &Composition) -> MultisetPartition {
    let blocks = a
        .colors()
        .into_iter()
        .map(|c| vec![Vertex::top(c), Vertex::bottom(c)])
        .collect();
    MultisetPartition::from_raw(a.total(), a.k(), TWO_ROWS, blocks)
}

fn bars_blocks(a: &Composition) -> Vec<Vec<Vertex>> {
    vertical_bars(a).blocks().to_vec()
}

fn check_color(c: u32, k: usize) -> Result<()> {
    if c == 0 || c as usize > k {
        return Err(Error::Domain(format!("color {c} is not in 1..={k}")));
    }
    Ok(())
}

/// `P_{i,j,a}`: singletons `{i}` and `{j̄}` plus vertical bars with color
/// multiplicities `a ∈ W_{r−1,k}`.
pub fn generator_p(i: u32, j: u32, a: &Composition) -> Result<MultisetPartition> {
    let k = a.k();
    check_color(i, k)?;
    check_color(j, k)?;
    let mut blocks = bars_blocks(a);
    blocks.push(vec![Vertex::top(i)]);
    blocks.push(vec![Vertex::bottom(j)]);
    MultisetPartition::new(a.total() + 1, k, TWO_ROWS, blocks)
}

/// `R_{a,b,c}`: one block with top colors `a` and bottom colors `b`
/// (`a, b ∈ W_{i,k}`, `i ≥ 1`) plus vertical bars with multiplicities `c`.
pub fn generator_r(a: &Composition, b: &Composition, c: &Composition) -> Result<MultisetPartition> {
    if a.k() != b.k() || a.k() != c.k() {
        return Err(Error::Domain(
            "compositions have different numbers of colors".into(),
        ));
    }
    if a.total() != b.total() || a.total() == 0 {
        return Err(Error::Domain(format!(
            "top {a} and bottom {b} must have the same positive size"
        )));
    }
    let mut big: Vec<Vertex> = a.colors().into_iter().map(Vertex::top).collect();
    big.extend(b.colors().into_iter().map(Vertex::bottom));
    let mut blocks = bars_blocks(c);
    blocks.push(big);
    MultisetPartition::new(a.total() + c.total(), a.k(), TWO_ROWS, blocks)
}

/// `Q_m` for `b ∈ W_{r,k}`: `m` pairs of singletons `{1}`, `{1̄}` together
/// with vertical bars `{1,1̄}^{b₁−m}, {2,2̄}^{b₂}, …`.
pub fn generator_q(b: &Composition, m: usize) -> Result<MultisetPartition> {
    if b.k() == 0 || m > b.parts[0] {
        return Err(Error::Domain(format!(
            "m = {m} exceeds the first part of {b}"
        )));
    }
    let mut bars = b.clone();
    bars.parts[0] -= m;
    let mut blocks = bars_blocks(&bars);
    for _ in 0..m {
        blocks.push(vec![Vertex::top(1)]);
        blocks.push(vec![Vertex::bottom(1)]);
    }
    MultisetPartition::new(b.total(), b.k(), TWO_ROWS, blocks)
}

/// The generating set `Θ`: every `P_{i,j,a}` and every `R_{a,b,c}`, one
/// entry per parameter choice. An all-vertical-bar diagram arises from
/// several parameter choices and is listed once for each.
pub fn theta_generators(r: usize, k: usize) -> Result<Vec<MultisetPartition>> {
    if r == 0 || k == 0 {
        return Err(Error::Domain("Θ needs r, k ≥ 1".into()));
    }
    let mut out = Vec::new();
    for a in Composition::all(r - 1, k) {
        for i in 1..=k as u32 {
            for j in 1..=k as u32 {
                out.push(generator_p(i, j, &a)?);
            }
        }
    }
    for size in 1..=r {
        for c in Composition::all(r - size, k) {
            for a in Composition::all(size, k) {
                for b in Composition::all(size, k) {
                    out.push(generator_r(&a, &b, &c)?);
                }
            }
        }
    }
    Ok(out)
}

/// A factorization of `D_π̃` at a nonbasic block `B̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    /// `π̃|_B̃`: `B̃`, a vertical bar for every other top entry, and padding
    /// singletons.
    pub restricted: MultisetPartition,
    /// `π̃/B̃`: the other blocks, a vertical bar for every bottom entry of
    /// `B̃`, and padding singletons.
    pub quotient: MultisetPartition,
    /// True when `B̃` has more barred than unbarred entries; the
    /// construction is then carried out on the flipped diagram, and the
    /// product order is `quotient · restricted`.
    pub mirrored: bool,
}

impl Factorization {
    /// The two factors in product order.
    pub fn in_order(&self) -> (&MultisetPartition, &MultisetPartition) {
        if self.mirrored {
            (&self.quotient, &self.restricted)
        } else {
            (&self.restricted, &self.quotient)
        }
    }
}

fn row_colors(b: &[Vertex], row: Row) -> Vec<u32> {
    b.iter().filter(|v| v.row == row).map(|v| v.value).collect()
}

/// Factors `π̃` at the nonbasic block `B̃` (given as a list of signed
/// entries in the usual vertex form).
pub fn factor_at_block(p: &MultisetPartition, block: &[Vertex]) -> Result<Factorization> {
    let mut b = block.to_vec();
    b.sort();
    if !p.blocks().contains(&b) {
        return Err(Error::Domain(format!("block is not a block of {p}")));
    }
    if !is_nonbasic(&b) {
        return Err(Error::Domain(
            "block is a singleton or a vertical bar".into(),
        ));
    }
    let t = row_colors(&b, Row::Top).len();
    let s = row_colors(&b, Row::Bottom).len();
    if s > t {
        let flipped_block: Vec<Vertex> = b
            .iter()
            .map(|v| match v.row {
                Row::Top => Vertex::bottom(v.value),
                _ => Vertex::top(v.value),
            })
            .collect();
        let f = factor_at_block(&p.flip(), &flipped_block)?;
        return Ok(Factorization {
            restricted: f.restricted.flip(),
            quotient: f.quotient.flip(),
            mirrored: true,
        });
    }
    let (r, k) = (p.r(), p.k());
    // Remove one copy of B̃ from π̃.
    let mut others = p.blocks().to_vec();
    let pos = others.iter().position(|x| *x == b).expect("block present");
    others.remove(pos);

    let mut restricted = vec![b.clone()];
    for blk in &others {
        for c in row_colors(blk, Row::Top) {
            restricted.push(vec![Vertex::top(c), Vertex::bottom(c)]);
        }
    }
    for _ in s..t {
        restricted.push(vec![Vertex::bottom(1)]);
    }

    let mut quotient = others;
    for c in row_colors(&b, Row::Bottom) {
        quotient.push(vec![Vertex::top(c), Vertex::bottom(c)]);
    }
    for _ in s..t {
        quotient.push(vec![Vertex::top(1)]);
    }
    Ok(Factorization {
        restricted: MultisetPartition::new(r, k, TWO_ROWS, restricted)?,
        quotient: MultisetPartition::new(r, k, TWO_ROWS, quotient)?,
        mirrored: false,
    })
}

/// Result of checking the factorization lemma on one block.
#[derive(Clone, Debug)]
pub struct FactorCheck {
    pub factorization: Factorization,
    /// The product of the two factors in the diagram-like basis.
    pub product: MPElement,
    /// Coefficient of `D_π̃` in the product; the lemma's constant is its
    /// reciprocal (a rational function of `x` in general).
    pub coefficient: Poly,
    /// True iff the coefficient is non-zero and every other term `ν̃` of the
    /// product satisfies `ν̃ ≺ π̃`.
    pub holds: bool,
}

/// Multiplies the two factors and checks that `D_π̃` appears and every other
/// term is smaller in `≺`.
pub fn factor_lemma_check(p: &MultisetPartition, block: &[Vertex]) -> Result<FactorCheck> {
    let factorization = factor_at_block(p, block)?;
    let (left, right) = factorization.in_order();
    let product = multiply_mp(
        &MPElement::basis_element(MPBasis::DiagramLike, left.clone()),
        &MPElement::basis_element(MPBasis::DiagramLike, right.clone()),
    )?;
    let coefficient = product.coeff(p);
    let holds = !coefficient.is_zero()
        && product
            .terms()
            .keys()
            .all(|nu| nu == p || prec_compare(nu, p) == PrecOrdering::Less);
    Ok(FactorCheck {
        factorization,
        product,
        coefficient,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn msp(s: &str, k: usize) -> MultisetPartition {
        MultisetPartition::parse(s, Some(k)).unwrap()
    }

    #[test]
    fn nbw_examples() {
        let p = msp("[[1,-1],[1,1,-2,-2],[2,2,2,-2],[-2,-2]]", 2);
        assert_eq!(nonbasic_profile(&p).nbw, 10);
        let q = msp("[[1],[1,-1],[1,-2,-2],[2,2],[2,-2,-2,-2]]", 2);
        assert_eq!(nonbasic_profile(&q).nbw, 9);
        assert_eq!(prec_compare(&q, &p), PrecOrdering::Less);
        assert_eq!(prec_compare(&p, &p), PrecOrdering::Equal);
    }

    #[test]
    fn generator_examples() {
        let p = generator_p(2, 1, &Composition::new(vec![2, 0, 1, 2])).unwrap();
        assert_eq!(p, msp("[[2],[-1],[1,-1],[1,-1],[3,-3],[4,-4],[4,-4]]", 4));
        let r = generator_r(
            &Composition::new(vec![2, 0, 1]),
            &Composition::new(vec![0, 2, 1]),
            &Composition::new(vec![0, 0, 2]),
        )
        .unwrap();
        assert_eq!(r, msp("[[1,1,3,-2,-2,-3],[3,-3],[3,-3]]", 3));
        assert_eq!(theta_generators(3, 2).unwrap().len(), 58);
    }

    #[test]
    fn factor_example() {
        let p = msp("[[1,-1],[1,2,2,3,-1,-2],[3,-2,-2],[-2]]", 3);
        let b: Vec<Vertex> = [1, 2, 2, 3, -1, -2]
            .iter()
            .map(|&v| Vertex::from_signed(v))
            .collect();
        let f = factor_at_block(&p, &b).unwrap();
        assert_eq!(
            f.restricted,
            msp("[[1,2,2,3,-1,-2],[1,-1],[3,-3],[-1],[-1]]", 3)
        );
        assert_eq!(
            f.quotient,
            msp("[[1,-1],[1,-1],[2,-2],[3,-2,-2],[-2],[1],[1]]", 3)
        );
        assert!(!f.mirrored);
    }
}
