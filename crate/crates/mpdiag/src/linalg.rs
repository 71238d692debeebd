//! Exact linear algebra: incremental echelon forms over `Q` and over
//! `Q(x)` (fraction-free, with polynomial rows), and small dense rational
//! matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::scalars::{Poly, Rational};

/// A sparse vector over `Q`.
pub type SparseVec = BTreeMap<usize, Rational>;

/// Incremental row echelon form over `Q`. Each stored row has leading entry
/// `1` at its pivot column.
#[derive(Clone, Debug, Default)]
pub struct RationalEchelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl RationalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows until its leading column is not a
    /// pivot (or it vanishes).
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        v.retain(|_, c| !c.is_zero());
        while let Some((&c, lead)) = v.iter().next() {
            let Some(row) = self.rows.get(&c) else { break };
            let f = lead.clone();
            for (j, x) in row {
                let e = v.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(j);
                }
            }
        }
        v
    }

    /// Adds `v` to the row space; returns true if it was independent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        let Some((&c, lead)) = v.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let row = v.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        self.rows.insert(c, row);
        true
    }

    /// True if `v` lies in the row space.
    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a list of sparse rational rows.
pub fn rank_rational(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = RationalEchelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Expresses vectors in terms of an independent family over `Q`: each
/// stored row remembers which combination of inserted vectors it is.
#[derive(Clone, Debug, Default)]
pub struct SpanSolver {
    rows: BTreeMap<usize, (SparseVec, SparseVec)>,
}

fn axpy(v: &mut SparseVec, f: &Rational, w: &SparseVec) {
    for (j, x) in w {
        let e = v.entry(*j).or_insert_with(Rational::zero);
        *e -= f * x;
        if e.is_zero() {
            v.remove(j);
        }
    }
}

impl SpanSolver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`, returning the remainder and the combination `c` with
    /// `v = remainder + Σ c_t · (vector tagged t)`.
    fn reduce(&self, mut v: SparseVec) -> (SparseVec, SparseVec) {
        v.retain(|_, c| !c.is_zero());
        let mut used = SparseVec::new();
        while let Some((&c, lead)) = v.iter().next() {
            let Some((row, comb)) = self.rows.get(&c) else {
                break;
            };
            let f = lead.clone();
            axpy(&mut v, &f, row);
            axpy(&mut used, &-f, comb);
        }
        (v, used)
    }

    /// Adds `v` under `tag`; returns false (and stores nothing) if `v` is
    /// already in the span.
    pub fn insert(&mut self, v: SparseVec, tag: usize) -> bool {
        let (rem, used) = self.reduce(v);
        let Some((&c, lead)) = rem.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        let mut comb = SparseVec::from([(tag, Rational::one())]);
        axpy(&mut comb, &Rational::one(), &used);
        let scale = |m: SparseVec| m.into_iter().map(|(j, x)| (j, x * &inv)).collect();
        self.rows.insert(c, (scale(rem), scale(comb)));
        true
    }

    /// Coefficients `c_t` with `v = Σ c_t · (vector tagged t)`, or `None`
    /// if `v` is outside the span.
    pub fn solve(&self, v: SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.reduce(v);
        rem.is_empty().then_some(used)
    }
}

/// A sparse vector over `Q[x]`, read in `Q(x)`.
pub type PolyVec = BTreeMap<usize, Poly>;

/// Incremental row echelon form over the field `Q(x)`, kept fraction-free:
/// rows have polynomial entries, elimination cross-multiplies, and every
/// row is divided by the gcd of its entries (its content).
#[derive(Clone, Debug, Default)]
pub struct PolyEchelon {
    rows: BTreeMap<usize, PolyVec>,
}

fn normalize_content(v: &mut PolyVec) {
    let mut g = Poly::zero();
    for c in v.values() {
        g = g.gcd(c);
        if g.degree() == Some(0) {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    let g = g.monic();
    for c in v.values_mut() {
        *c = c.exact_div(&g).expect("content divides every entry");
    }
    // Make the leading entry monic.
    let inv = v.values().next().expect("non-empty").leading().recip();
    for c in v.values_mut() {
        *c = c.scale(&inv);
    }
}

impl PolyEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: PolyVec) -> PolyVec {
        v.retain(|_, c| !c.is_zero());
        while let Some((&c, lead)) = v.iter().next() {
            let Some(row) = self.rows.get(&c) else { break };
            let f = lead.clone();
            let pivot = row[&c].clone();
            // v := pivot·v − f·row
            let mut out = PolyVec::new();
            for (j, x) in &v {
                let y = x * &pivot;
                if !y.is_zero() {
                    out.insert(*j, y);
                }
            }
            for (j, x) in row {
                let e = out.entry(*j).or_insert_with(Poly::zero);
                *e -= &(x * &f);
                if e.is_zero() {
                    out.remove(j);
                }
            }
            v = out;
            if !v.is_empty() {
                normalize_content(&mut v);
            }
        }
        v
    }

    /// Adds `v` to the row space; returns true if it was independent.
    pub fn insert(&mut self, v: PolyVec) -> bool {
        let mut v = self.reduce(v);
        let Some(&c) = v.keys().next() else {
            return false;
        };
        normalize_content(&mut v);
        self.rows.insert(c, v);
        true
    }

    pub fn contains(&self, v: PolyVec) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank over `Q(x)` of a list of polynomial rows.
pub fn rank_poly(rows: impl IntoIterator<Item = PolyVec>) -> usize {
    let mut e = PolyEchelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A dense matrix over `Q`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch"
        );
        Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Entries read row by row as a sparse vector (for rank computations
    /// over sets of matrices).
    pub fn flatten(&self) -> SparseVec {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect()
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseVec {
        (0..self.rows)
            .filter(|&i| !self[(i, j)].is_zero())
            .map(|i| (i, self[(i, j)].clone()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        rank_rational((0..self.rows).map(|i| {
            (0..self.cols)
                .filter(|&j| !self[(i, j)].is_zero())
                .map(|j| (j, self[(i, j)].clone()))
                .collect()
        }))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| crate::scalars::fmt_rational(&self[(i, j)]))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rint;

    fn pv(entries: &[(usize, Poly)]) -> PolyVec {
        entries.iter().cloned().collect()
    }

    #[test]
    fn rational_rank() {
        let rows = vec![
            SparseVec::from([(0, rint(1)), (1, rint(2))]),
            SparseVec::from([(0, rint(2)), (1, rint(4))]),
            SparseVec::from([(1, rint(1))]),
        ];
        assert_eq!(rank_rational(rows), 2);
    }

    #[test]
    fn poly_rank_is_generic() {
        // [[1, x], [x, x^2]] has rank 1; [[1, x], [1, 2]] has rank 2 over Q(x)
        // even though it drops to 1 at x = 2.
        let x = Poly::x();
        let r1 = rank_poly(vec![
            pv(&[(0, Poly::one()), (1, x.clone())]),
            pv(&[(0, x.clone()), (1, &x * &x)]),
        ]);
        assert_eq!(r1, 1);
        let r2 = rank_poly(vec![
            pv(&[(0, Poly::one()), (1, x.clone())]),
            pv(&[(0, Poly::one()), (1, Poly::int(2))]),
        ]);
        assert_eq!(r2, 2);
    }

    #[test]
    fn span_solver_coordinates() {
        let mut s = SpanSolver::new();
        let b0 = SparseVec::from([(0, rint(1)), (1, rint(1))]);
        let b1 = SparseVec::from([(1, rint(2)), (2, rint(1))]);
        assert!(s.insert(b0, 10));
        assert!(s.insert(b1, 11));
        assert!(!s.insert(
            SparseVec::from([(0, rint(1)), (1, rint(3)), (2, rint(1))]),
            12
        ));
        // 3·b0 − b1
        let v = SparseVec::from([(0, rint(3)), (1, rint(1)), (2, rint(-1))]);
        assert_eq!(
            s.solve(v),
            Some(SparseVec::from([(10, rint(3)), (11, rint(-1))]))
        );
        assert_eq!(s.solve(SparseVec::from([(2, rint(1)), (3, rint(1))])), None);
    }

    #[test]
    fn matrix_product() {
        let mut a = Matrix::zeros(2, 2);
        a[(0, 1)] = rint(1);
        let b = &a * &a;
        assert!(b.is_zero());
        assert_eq!(&Matrix::identity(2) * &a, a);
    }
}
