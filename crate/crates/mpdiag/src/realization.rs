//! Concrete matrices for the algebras at `x = n`.
//!
//! * The partition algebra acts on `V_n^{⊗r}` with basis `e_i`,
//!   `i ∈ [n]^r` in lexicographic order.
//! * The multiset partition algebra acts on degree-`r` polynomials in the
//!   variables `x_{ij}` (`i ∈ [n]`, `j ∈ [k]`), with the monomial basis in
//!   sorted order.
//!
//! Orientation: rows are indexed by the top of a diagram and columns by the
//! bottom, so a matrix sends the basis vector of its column to its column,
//! and `matrix(π)·matrix(ν)` realizes the product `π·ν` (π stacked on ν).
//! The symmetric group `𝔖_n` acts by permuting the values `i`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::limits::check_tensor_dim;
use crate::linalg::{Matrix, RationalEchelon, SparseVec};
use crate::partitions::{
    fiber_representative, Composition, MultisetPartition, Permutation, SetPartition, TWO_ROWS,
};
use crate::scalars::{fmt_rational, Rational};

/// All `i ∈ [n]^r` (entries `1..=n`) in lexicographic order.
pub fn tensor_indices(n: usize, r: usize) -> Result<Vec<Vec<usize>>> {
    check_tensor_dim(n, r)?;
    let mut out = vec![Vec::new()];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (1..=n).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    Ok(out)
}

/// The set partition of `[r] ∪ [r̄]` recording which entries of the joint
/// tuple `(top, bottom)` are equal.
pub fn equality_pattern(top: &[usize], bottom: &[usize]) -> SetPartition {
    let r = top.len();
    let mut seen: Vec<usize> = Vec::new();
    let labels: Vec<usize> = top
        .iter()
        .chain(bottom)
        .map(|v| match seen.iter().position(|s| s == v) {
            Some(p) => p,
            None => {
                seen.push(*v);
                seen.len() - 1
            }
        })
        .collect();
    SetPartition::from_labels(r, TWO_ROWS, &labels)
}

/// True if the joint tuple is constant on every block of `π` (its equality
/// pattern is a coarsening of `π`).
fn constant_on_blocks(pi: &SetPartition, top: &[usize], bottom: &[usize]) -> bool {
    pi.blocks().iter().all(|b| {
        let value = |v: &crate::partitions::Vertex| {
            let i = v.value as usize - 1;
            if v.row == crate::partitions::Row::Top {
                top[i]
            } else {
                bottom[i]
            }
        };
        let first = value(&b[0]);
        b[1..].iter().all(|v| value(v) == first)
    })
}

fn check_two_row(pi: &SetPartition) -> Result<()> {
    if pi.rows() != TWO_ROWS {
        return Err(Error::Mismatch(format!("{pi} is not a two-row diagram")));
    }
    Ok(())
}

fn tensor_matrix(
    pi: &SetPartition,
    n: usize,
    entry: impl Fn(&[usize], &[usize]) -> bool,
) -> Result<Matrix> {
    check_two_row(pi)?;
    let idx = tensor_indices(n, pi.r())?;
    let mut m = Matrix::zeros(idx.len(), idx.len());
    for (a, i) in idx.iter().enumerate() {
        for (b, j) in idx.iter().enumerate() {
            if entry(i, j) {
                m[(a, b)] = Rational::one();
            }
        }
    }
    Ok(m)
}

/// The orbit basis element `T_π` on `V_n^{⊗r}`: entry `(i, j)` is 1 exactly
/// when the equality pattern of `(i, j)` is `π`.
pub fn orbit_matrix(pi: &SetPartition, n: usize) -> Result<Matrix> {
    tensor_matrix(pi, n, |i, j| equality_pattern(i, j) == *pi)
}

/// The diagram basis element `L_π` on `V_n^{⊗r}`: the sum of the orbit
/// matrices of all coarsenings of `π`; entry `(i, j)` is 1 exactly when
/// `(i, j)` is constant on the blocks of `π`.
pub fn diagram_matrix(pi: &SetPartition, n: usize) -> Result<Matrix> {
    tensor_matrix(pi, n, |i, j| constant_on_blocks(pi, i, j))
}

/// The action of `g ∈ 𝔖_n` on `V_n^{⊗r}`: `e_i ↦ e_{g(i_1)…g(i_r)}`.
pub fn sn_tensor_matrix(g: &Permutation, r: usize) -> Result<Matrix> {
    let n = g.degree();
    let idx = tensor_indices(n, r)?;
    let pos: HashMap<&Vec<usize>, usize> = idx.iter().enumerate().map(|(a, i)| (i, a)).collect();
    let mut m = Matrix::zeros(idx.len(), idx.len());
    for (b, j) in idx.iter().enumerate() {
        let image: Vec<usize> = j.iter().map(|&v| g.apply(v)).collect();
        m[(pos[&image], b)] = Rational::one();
    }
    Ok(m)
}

/// A monomial `x_{i_1 j_1} ⋯ x_{i_r j_r}`, stored as its sorted list of
/// variables `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    vars: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn new(mut vars: Vec<(usize, u32)>) -> Self {
        vars.sort_unstable();
        Monomial { vars }
    }

    pub fn vars(&self) -> &[(usize, u32)] {
        &self.vars
    }

    /// Column multiplicities: the `a` with this monomial in `U_a`.
    pub fn composition(&self, k: usize) -> Composition {
        Composition::from_colors(self.vars.iter().map(|&(_, j)| j), k)
    }

    /// `g` acting on the row indices.
    pub fn permute_rows(&self, g: &Permutation) -> Monomial {
        Monomial::new(self.vars.iter().map(|&(i, j)| (g.apply(i), j)).collect())
    }

    /// `x[1,1]^2*x[2,1]`.
    pub fn to_text(&self) -> String {
        let mut counts: BTreeMap<(usize, u32), usize> = BTreeMap::new();
        for v in &self.vars {
            *counts.entry(*v).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .iter()
            .map(|(&(i, j), &d)| {
                if d == 1 {
                    format!("x[{i},{j}]")
                } else {
                    format!("x[{i},{j}]^{d}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// `Φ_a(e_i)`: position `m` of the tensor contributes `x_{i_m, c_m}` where
/// `c = a.colors()`.
pub fn phi(a: &Composition, i: &[usize]) -> Monomial {
    Monomial::new(i.iter().copied().zip(a.colors()).collect())
}

/// All degree-`r` monomials in `n × k` variables, sorted.
pub fn monomials(n: usize, r: usize, k: usize) -> Result<Vec<Monomial>> {
    check_tensor_dim(n * k, r)?;
    fn rec(
        vars: &[(usize, u32)],
        start: usize,
        left: usize,
        cur: &mut Vec<(usize, u32)>,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for s in start..vars.len() {
            cur.push(vars[s]);
            rec(vars, s, left - 1, cur, out);
            cur.pop();
        }
    }
    let vars: Vec<(usize, u32)> = (1..=n)
        .flat_map(|i| (1..=k as u32).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    rec(&vars, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Index of monomials of `P^r(V_{n,k})`.
pub struct MonomialBasis {
    n: usize,
    r: usize,
    k: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(n: usize, r: usize, k: usize) -> Result<Self> {
        let monomials = monomials(n, r, k)?;
        let index = monomials
            .iter()
            .cloned()
            .enumerate()
            .map(|(a, m)| (m, a))
            .collect();
        Ok(MonomialBasis {
            n,
            r,
            k,
            monomials,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `g ∈ 𝔖_n` permuting the row index of every variable.
    pub fn sn_matrix(&self, g: &Permutation) -> Result<Matrix> {
        if g.degree() != self.n {
            return Err(Error::Mismatch(format!(
                "permutation of degree {} on n = {}",
                g.degree(),
                self.n
            )));
        }
        let d = self.len();
        let mut m = Matrix::zeros(d, d);
        for (b, mono) in self.monomials.iter().enumerate() {
            m[(self.index[&mono.permute_rows(g)], b)] = Rational::one();
        }
        Ok(m)
    }

    /// The matrix of `D_p = s_a L_π s_b` transported through `Φ`.
    ///
    /// The vector `s_b e_j` depends only on `m = Φ_b(e_j)` and is identified
    /// with `m`; it is the average of `e_{j'}` over the fiber of `m`. Since
    /// `s_a e_i` likewise depends only on `Φ_a(e_i)`, the entry at
    /// `(m', m)` is `(1/|fiber(m)|) Σ_{i ∈ fiber(m')} Σ_{j ∈ fiber(m)} L_π[i, j]`.
    pub fn mp_matrix(&self, p: &MultisetPartition) -> Result<Matrix> {
        if (p.r(), p.k()) != (self.r, self.k) {
            return Err(Error::Mismatch(format!(
                "{p} is not in MP_{{{},{}}}",
                self.r, self.k
            )));
        }
        let (a, b) = (p.top_composition(), p.bottom_composition());
        let pi = fiber_representative(p);
        let idx = tensor_indices(self.n, self.r)?;
        let top: Vec<usize> = idx.iter().map(|i| self.index[&phi(&a, i)]).collect();
        let bottom: Vec<usize> = idx.iter().map(|j| self.index[&phi(&b, j)]).collect();
        let mut fiber_size: HashMap<usize, usize> = HashMap::new();
        for &m in &bottom {
            *fiber_size.entry(m).or_default() += 1;
        }
        let d = self.len();
        let mut counts = vec![0usize; d * d];
        for (x, i) in idx.iter().enumerate() {
            for (y, j) in idx.iter().enumerate() {
                if constant_on_blocks(&pi, i, j) {
                    counts[top[x] * d + bottom[y]] += 1;
                }
            }
        }
        let mut m = Matrix::zeros(d, d);
        for row in 0..d {
            for col in 0..d {
                let c = counts[row * d + col];
                if c > 0 {
                    m[(row, col)] = Rational::new(c.into(), fiber_size[&col].into());
                }
            }
        }
        Ok(m)
    }
}

/// The matrix of `D_p` on the monomials of `P^r(V_{n,k})`.
pub fn mp_matrix(p: &MultisetPartition, n: usize) -> Result<Matrix> {
    MonomialBasis::new(n, p.r(), p.k())?.mp_matrix(p)
}

/// Adjacent transpositions `(s s+1)` generating `𝔖_n`.
fn transpositions(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|s| Permutation::from_cycles(n, &[&[s, s + 1]]).expect("valid transposition"))
        .collect()
}

/// True iff `m` (indexed by the monomials of `P^r(V_{n,k})`) commutes with
/// every adjacent transposition of `𝔖_n`.
pub fn centralizer_check(m: &Matrix, n: usize, r: usize, k: usize) -> Result<bool> {
    let basis = MonomialBasis::new(n, r, k)?;
    if (m.rows(), m.cols()) != (basis.len(), basis.len()) {
        return Err(Error::Mismatch(format!(
            "matrix is {}x{}, the monomial space has dimension {}",
            m.rows(),
            m.cols(),
            basis.len()
        )));
    }
    for g in transpositions(n) {
        let pg = basis.sn_matrix(&g)?;
        if &pg * m != m * &pg {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of `End_{𝔖_n}(P^r(V_{n,k}))`: the unknown matrix `M` must
/// satisfy `M P_g = P_g M` for each adjacent transposition `g`; the
/// solution space of this sparse system is found by exact elimination.
pub fn centralizer_dimension(n: usize, r: usize, k: usize) -> Result<usize> {
    let basis = MonomialBasis::new(n, r, k)?;
    let d = basis.len();
    let mut ech = RationalEchelon::new();
    for g in transpositions(n) {
        // (M P_g)[x, y] = M[x, g y] and (P_g M)[x, y] = M[g⁻¹ x, y]
        let image: Vec<usize> = basis
            .monomials()
            .iter()
            .map(|m| basis.index[&m.permute_rows(&g)])
            .collect();
        let inv = g.inverse();
        let preimage: Vec<usize> = basis
            .monomials()
            .iter()
            .map(|m| basis.index[&m.permute_rows(&inv)])
            .collect();
        for (x, &px) in preimage.iter().enumerate() {
            for (y, &gy) in image.iter().enumerate() {
                let u = x * d + gy;
                let v = px * d + y;
                if u != v {
                    ech.insert(SparseVec::from([
                        (u, Rational::one()),
                        (v, -Rational::one()),
                    ]));
                }
            }
        }
    }
    Ok(d * d - ech.rank())
}

/// Matrix entries as a JSON array of rows of rational strings.
pub fn matrix_to_json(m: &Matrix) -> serde_json::Value {
    serde_json::Value::Array(
        (0..m.rows())
            .map(|i| {
                serde_json::Value::Array(
                    (0..m.cols())
                        .map(|j| serde_json::Value::String(fmt_rational(&m[(i, j)])))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Inverse of [`matrix_to_json`].
pub fn matrix_from_json(v: &serde_json::Value) -> Result<Matrix> {
    let rows = v
        .as_array()
        .ok_or_else(|| Error::Domain("matrix JSON must be an array of rows".into()))?;
    let cols = rows.first().and_then(|r| r.as_array()).map_or(0, Vec::len);
    let mut m = Matrix::zeros(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .filter(|r| r.len() == cols)
            .ok_or_else(|| Error::Domain("ragged matrix JSON".into()))?;
        for (j, x) in row.iter().enumerate() {
            let s = x
                .as_str()
                .ok_or_else(|| Error::Domain("matrix entries must be strings".into()))?;
            m[(i, j)] = crate::scalars::parse_rational(s)?;
        }
    }
    Ok(m)
}

/// True if every entry is zero outside the rows of `U_a` and columns of
/// `U_b` (used to check the block structure of realized `D_p`).
pub fn supported_in_block(
    m: &Matrix,
    basis: &MonomialBasis,
    a: &Composition,
    b: &Composition,
) -> bool {
    let k = basis.k;
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            m[(i, j)].is_zero()
                || (&basis.monomials[i].composition(k) == a
                    && &basis.monomials[j].composition(k) == b)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_algebra::perm_diagram;
    use crate::partitions::enumerate_set_partitions;

    #[test]
    fn r1_identity_pattern() {
        let bar = SetPartition::parse("{{1,-1}}").unwrap();
        assert_eq!(orbit_matrix(&bar, 2).unwrap(), Matrix::identity(2));
        assert_eq!(diagram_matrix(&bar, 2).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn orbit_matrices_partition_the_ones_matrix() {
        let n = 3;
        let mut sum = Matrix::zeros(9, 9);
        for p in enumerate_set_partitions(2).unwrap() {
            sum = sum.add(&orbit_matrix(&p, n).unwrap());
        }
        assert!((0..9).all(|i| (0..9).all(|j| sum[(i, j)] == Rational::one())));
    }

    #[test]
    fn permutation_diagrams_permute_slots() {
        let s = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let m = diagram_matrix(&perm_diagram(&s), 2).unwrap();
        let idx = tensor_indices(2, 3).unwrap();
        for (b, j) in idx.iter().enumerate() {
            // e_j ↦ the tensor with slot s(t) holding j_t
            let mut image = vec![0; 3];
            for t in 1..=3 {
                image[s.apply(t) - 1] = j[t - 1];
            }
            let a = idx.iter().position(|i| *i == image).unwrap();
            assert_eq!(m.column(b), SparseVec::from([(a, Rational::one())]));
        }
    }

    #[test]
    fn phi_collapses_same_color_swaps() {
        let a = Composition::new(vec![1, 2, 2]);
        assert_eq!(phi(&a, &[2, 2, 1, 1, 2]), phi(&a, &[2, 1, 2, 1, 2]));
        assert_eq!(
            phi(&a, &[2, 2, 1, 1, 2]).to_text(),
            "x[1,2]*x[1,3]*x[2,1]*x[2,2]*x[2,3]"
        );
    }

    #[test]
    fn centralizer_small() {
        assert_eq!(centralizer_dimension(5, 1, 2).unwrap(), 8);
        let d = MonomialBasis::new(3, 1, 1).unwrap().len();
        assert!(centralizer_check(&Matrix::identity(d), 3, 1, 1).unwrap());
        let mut unit = Matrix::zeros(d, d);
        unit[(0, 1)] = Rational::one();
        assert!(!centralizer_check(&unit, 3, 1, 1).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let p = MultisetPartition::parse("[[1,-1],[2,-2]]", None).unwrap();
        let m = mp_matrix(&p, 2).unwrap();
        assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }
}
