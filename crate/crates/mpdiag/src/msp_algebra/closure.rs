//! Dimension of the subalgebra generated by a set of elements.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::{PolyEchelon, PolyVec};
use crate::lincomb::LinComb;
use crate::msp_algebra::{multiply_mp_memo, vertical_bars, MPBasis, MPElement};
use crate::partitions::{enumerate_msp_with, Composition, MultisetPartition};
use crate::scalars::Poly;

/// Result of [`span_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    /// Dimension over `Q(x)` of the generated subalgebra.
    pub dimension: usize,
    /// `|Π̃_{2(r),k}|`, the dimension of the whole algebra.
    pub full_dimension: usize,
    /// True when the value was certified by a specialization `x = t`
    /// reaching the full dimension (specializing can only lower the rank,
    /// and the rank is at most the full dimension).
    pub certified_by_specialization: bool,
}

type Memo = HashMap<(MultisetPartition, MultisetPartition), LinComb<MultisetPartition>>;

/// Assigns dense column indices to multiset partitions on demand.
#[derive(Default)]
struct Indexer {
    index: HashMap<MultisetPartition, usize>,
}

impl Indexer {
    fn vector(&mut self, e: &MPElement) -> PolyVec {
        let mut out = PolyVec::new();
        for (p, c) in e.terms().iter() {
            let next = self.index.len();
            let i = *self.index.entry(p.clone()).or_insert(next);
            out.insert(i, c.clone());
        }
        out
    }
}

fn homogeneous_degree(e: &MPElement) -> Option<(Composition, Composition)> {
    let mut it = e
        .terms()
        .keys()
        .map(|p| (p.top_composition(), p.bottom_composition()));
    let first = it.next()?;
    it.all(|d| d == first).then_some(first)
}

fn specialize(e: MPElement, at: Option<i64>) -> MPElement {
    match at {
        None => e,
        Some(t) => {
            let mut terms = LinComb::new();
            for (p, c) in e.terms().iter() {
                terms.add_term(p.clone(), &Poly::constant(c.evaluate(t)));
            }
            MPElement::from_terms_unchecked(e.r(), e.k(), e.basis(), terms)
        }
    }
}

fn check_gens(gens: &[MPElement], r: usize, k: usize) -> Result<Vec<MPElement>> {
    let mut out = Vec::new();
    for g in gens {
        if (g.r(), g.k()) != (r, k) {
            return Err(Error::Mismatch(format!(
                "generator lies in MP_{{{},{}}}, not MP_{{{r},{k}}}",
                g.r(),
                g.k()
            )));
        }
        out.push(crate::msp_algebra::convert_mp(g, MPBasis::DiagramLike)?);
    }
    crate::limits::check_vertices(2 * r)?;
    Ok(out)
}

/// Closure engine. With `at = Some(t)` every product is specialized at
/// `x = t` before elimination, so the result is the dimension of the
/// generated subalgebra of the specialized algebra.
fn closure(gens: &[MPElement], r: usize, k: usize, at: Option<i64>) -> Result<usize> {
    let gens: Vec<MPElement> = check_gens(gens, r, k)?
        .into_iter()
        .map(|g| specialize(g, at))
        .filter(|g| !g.is_zero())
        .collect();
    let mut memo = Memo::new();
    let mut indexer = Indexer::default();
    let identity = MPElement::identity(r, k, MPBasis::DiagramLike);

    let degrees: Option<Vec<(Composition, Composition)>> =
        gens.iter().map(homogeneous_degree).collect();
    let Some(degrees) = degrees else {
        // Some generator mixes degrees: work with whole vectors.
        let mut ech = PolyEchelon::new();
        ech.insert(indexer.vector(&identity));
        let mut queue = VecDeque::from([identity]);
        while let Some(v) = queue.pop_front() {
            for g in &gens {
                let w = specialize(multiply_mp_memo(&v, g, &mut memo)?, at);
                if ech.insert(indexer.vector(&w)) {
                    queue.push_back(w);
                }
            }
        }
        return Ok(ech.rank());
    };

    // Homogeneous generators: words are homogeneous, so eliminate one
    // (top, bottom) block at a time and stop filling a block once full.
    let mut blocks: BTreeMap<(Composition, Composition), (PolyEchelon, usize)> = BTreeMap::new();
    let block =
        |deg: &(Composition, Composition)| -> usize { enumerate_msp_with(&deg.0, &deg.1).len() };
    let mut queue: VecDeque<(MPElement, (Composition, Composition))> = VecDeque::new();
    let try_insert = |w: MPElement,
                      deg: (Composition, Composition),
                      blocks: &mut BTreeMap<(Composition, Composition), (PolyEchelon, usize)>,
                      queue: &mut VecDeque<(MPElement, (Composition, Composition))>,
                      indexer: &mut Indexer| {
        if w.is_zero() {
            return;
        }
        let entry = blocks
            .entry(deg.clone())
            .or_insert_with(|| (PolyEchelon::new(), block(&deg)));
        if entry.0.rank() == entry.1 {
            return;
        }
        if entry.0.insert(indexer.vector(&w)) {
            queue.push_back((w, deg));
        }
    };
    for (g, d) in gens.iter().zip(&degrees) {
        try_insert(g.clone(), d.clone(), &mut blocks, &mut queue, &mut indexer);
    }
    while let Some((v, deg)) = queue.pop_front() {
        for (g, gd) in gens.iter().zip(&degrees) {
            if gd.0 != deg.1 {
                continue;
            }
            let w = specialize(multiply_mp_memo(&v, g, &mut memo)?, at);
            try_insert(
                w,
                (deg.0.clone(), gd.1.clone()),
                &mut blocks,
                &mut queue,
                &mut indexer,
            );
        }
    }
    let words: usize = blocks.values().map(|(e, _)| e.rank()).sum();
    // The identity Σ_a D_{bars(a)} lies in the graded span iff each of its
    // components does.
    let identity_in_span = Composition::all(r, k).iter().all(|a| {
        let e = MPElement::basis_element(MPBasis::DiagramLike, vertical_bars(a));
        blocks
            .get(&(a.clone(), a.clone()))
            .is_some_and(|(ech, _)| ech.contains(indexer.vector(&e)))
    });
    Ok(words + usize::from(!identity_in_span))
}

/// Dimension over `Q(x)` of the smallest subspace containing the identity
/// and the generators and closed under multiplication, by fraction-free
/// elimination with polynomial coefficients.
pub fn span_closure_symbolic(gens: &[MPElement], r: usize, k: usize) -> Result<usize> {
    closure(gens, r, k, None)
}

/// The same closure with every coefficient specialized at `x = t`.
pub fn span_closure_at(gens: &[MPElement], r: usize, k: usize, t: i64) -> Result<usize> {
    closure(gens, r, k, Some(t))
}

/// Specialization used for the fast path of [`span_closure`].
const CERTIFY_AT: i64 = 1009;

/// Dimension of the generated subalgebra over `Q(x)`.
///
/// First runs the closure at `x = 1009`. The rank of any family can only
/// drop under specialization and never exceeds `|Π̃_{2(r),k}|`, so reaching
/// the full dimension there certifies the generic answer. Otherwise the
/// symbolic closure decides.
pub fn span_closure(gens: &[MPElement], r: usize, k: usize) -> Result<ClosureReport> {
    let full_dimension = crate::partitions::enumerate_msp(r, k)?.len();
    let special = span_closure_at(gens, r, k, CERTIFY_AT)?;
    if special == full_dimension {
        return Ok(ClosureReport {
            dimension: special,
            full_dimension,
            certified_by_specialization: true,
        });
    }
    Ok(ClosureReport {
        dimension: span_closure_symbolic(gens, r, k)?,
        full_dimension,
        certified_by_specialization: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::msp_algebra::theta_generators;

    #[test]
    fn identity_generates_one_dimension() {
        for (r, k) in [(1, 1), (2, 2)] {
            let id = MPElement::identity(r, k, MPBasis::DiagramLike);
            assert_eq!(span_closure_symbolic(&[id], r, k).unwrap(), 1);
        }
    }

    #[test]
    fn theta_generates_r2k1() {
        let gens: Vec<MPElement> = theta_generators(2, 1)
            .unwrap()
            .into_iter()
            .map(|p| MPElement::basis_element(MPBasis::DiagramLike, p))
            .collect();
        assert_eq!(span_closure_symbolic(&gens, 2, 1).unwrap(), 9);
    }
}
