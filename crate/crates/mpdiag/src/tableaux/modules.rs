//! The diagram action on set partition tableaux and the modules built from
//! it: `P_r^λ` with basis `{v_T : T ∈ SSPT_{λ,r}}` and its painted version
//! `MP_{r,k}^λ = ⊕_a s_a P_r^λ` with basis `{w_T̃ : T̃ ∈ SSMPT_{λ,r,k}}`.
//!
//! Vectors of `P_r^λ` are [`ModuleVector`]s keyed by tableaux whose rows
//! above the first are standard. The first row is symmetric: its blocks are
//! summed over all values freely, so a component of the first-row content
//! that no longer reaches the top of the diagram contributes a factor `n`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SpanSolver, SparseVec};
use crate::partition_algebra::UnionFind;
use crate::partitions::{
    fiber_representative, young_subgroup, Composition, MultisetPartition, Row, SetPartition,
    TWO_ROWS,
};
use crate::scalars::Rational;
use crate::tableaux::{enumerate_ssmpt, enumerate_sspt, IntegerPartition, Straightener, Tableau};

/// A vector of `P_r^λ`: coefficients on tableaux with standard upper rows
/// (or on basis tableaux of `MP_{r,k}^λ`, where stated).
pub type ModuleVector = BTreeMap<Tableau, Rational>;

/// Outcome of a diagram acting on one tableau before straightening.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionResult {
    /// `n^e`, where `e` counts first-row components that lost the top.
    pub coefficient: Rational,
    /// The new tableau; its upper rows need not be standard.
    pub tableau: Tableau,
}

fn add_scaled(out: &mut ModuleVector, v: &ModuleVector, c: &Rational) {
    for (t, x) in v {
        let e = out.entry(t.clone()).or_insert_with(Rational::zero);
        *e += c * x;
    }
    out.retain(|_, x| !x.is_zero());
}

/// `L_π` applied to a single tableau `T` whose content is a set partition
/// of `[r]`.
///
/// The content is placed under `π` (entry `i` at bottom vertex `i`). For
/// each connected component: a box above the first row whose component
/// reaches no top vertex, or two such boxes in one component, make the
/// result zero; otherwise that box receives the component's top vertices.
/// First-row content with top vertices becomes a first-row block, without
/// top vertices it contributes a factor `n`, and blocks of `π` lying
/// entirely in the top row become new first-row blocks.
pub fn act_on_spt(pi: &SetPartition, t: &Tableau) -> Result<Option<ActionResult>> {
    let r = pi.r();
    if pi.rows() != TWO_ROWS {
        return Err(Error::Mismatch(format!("{pi} is not a two-row diagram")));
    }
    if !t.to_filling().is_set_partition_tableau(r) {
        return Err(Error::Mismatch(format!(
            "{t} is not a set partition tableau of [{r}]"
        )));
    }
    // vertices: top 0..r, bottom r..2r
    let mut uf = UnionFind::new(2 * r);
    let idx = |v: &crate::partitions::Vertex| match v.row {
        Row::Top => v.value as usize - 1,
        _ => r + v.value as usize - 1,
    };
    for b in pi.blocks() {
        for v in &b[1..] {
            uf.union(idx(&b[0]), idx(v));
        }
    }
    let content_root = |uf: &mut UnionFind, b: &[u32]| {
        let root = uf.find(r + b[0] as usize - 1);
        for &i in &b[1..] {
            uf.union(root, r + i as usize - 1);
        }
        uf.find(root)
    };
    let mut upper_roots = Vec::new();
    for row in t.upper() {
        let mut out = Vec::new();
        for b in row {
            out.push(content_root(&mut uf, b));
        }
        upper_roots.push(out);
    }
    let mut first_roots = Vec::new();
    for b in t.first_row_blocks() {
        first_roots.push(content_root(&mut uf, b));
    }
    // roots may have moved while uniting
    for row in &mut upper_roots {
        for x in row.iter_mut() {
            *x = uf.find(*x);
        }
    }
    for x in &mut first_roots {
        *x = uf.find(*x);
    }
    let mut tops: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for i in 0..r {
        tops.entry(uf.find(i)).or_default().push(i as u32 + 1);
    }
    let mut upper_count: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in upper_roots.iter().flatten() {
        *upper_count.entry(x).or_default() += 1;
    }
    if upper_count.values().any(|&c| c > 1) {
        return Ok(None);
    }
    let mut upper = Vec::new();
    for row in &upper_roots {
        let mut out = Vec::new();
        for x in row {
            match tops.get(x) {
                Some(top) => out.push(top.clone()),
                None => return Ok(None),
            }
        }
        upper.push(out);
    }
    let mut first = Vec::new();
    let mut lost = 0u32;
    let mut seen = std::collections::BTreeSet::new();
    for &x in &first_roots {
        if upper_count.contains_key(&x) || !seen.insert(x) {
            continue;
        }
        match tops.get(&x) {
            Some(top) => first.push(top.clone()),
            None => lost += 1,
        }
    }
    // components consisting of top vertices only
    let with_content: std::collections::BTreeSet<usize> = upper_roots
        .iter()
        .flatten()
        .chain(&first_roots)
        .copied()
        .collect();
    for (root, top) in &tops {
        let has_bottom = (r..2 * r).any(|i| uf.find(i) == *root);
        if !has_bottom && !with_content.contains(root) {
            first.push(top.clone());
        }
    }
    let tableau = Tableau::new(t.n(), upper, first)?;
    Ok(Some(ActionResult {
        coefficient: Rational::from_integer(BigInt::from(t.n()).pow(lost)),
        tableau,
    }))
}

/// `L_π v` for a vector of `P_r^λ`, straightened.
fn act_with(s: &mut Straightener, pi: &SetPartition, v: &ModuleVector) -> Result<ModuleVector> {
    let mut out = ModuleVector::new();
    for (t, c) in v {
        if let Some(res) = act_on_spt(pi, t)? {
            let coeff = c * &res.coefficient;
            add_scaled(&mut out, &s.straighten(&res.tableau), &coeff);
        }
    }
    Ok(out)
}

/// `L_π v` for a vector of `P_r^λ`, with the result straightened.
pub fn act_p(pi: &SetPartition, v: &ModuleVector) -> Result<ModuleVector> {
    act_with(&mut Straightener::new(), pi, v)
}

/// A set partition tableau `T` with `κ_c(T) = T̃`: the positions of each
/// color are handed out in reading order (rows above the first, bottom-up,
/// then the first row).
fn representative(tt: &Tableau, c: &Composition) -> Tableau {
    let mut next: Vec<u32> = Vec::with_capacity(c.parts.len());
    let mut start = 1u32;
    for &m in &c.parts {
        next.push(start);
        start += m as u32;
    }
    let mut assign = |b: &Vec<u32>| -> Vec<u32> {
        b.iter()
            .map(|&color| {
                let slot = &mut next[color as usize - 1];
                *slot += 1;
                *slot - 1
            })
            .collect()
    };
    let upper = tt
        .upper()
        .iter()
        .map(|row| row.iter().map(&mut assign).collect())
        .collect();
    let first = tt.first_row_blocks().iter().map(&mut assign).collect();
    Tableau::from_parts_unchecked(tt.n(), upper, first)
}

/// `s_a v`: the average of `σ.v` over the Young subgroup `𝔖_a`.
fn project_with(s: &mut Straightener, a: &Composition, v: &ModuleVector) -> Result<ModuleVector> {
    let group = young_subgroup(a)?;
    let inv = Rational::new(BigInt::one(), BigInt::from(group.len()));
    let mut out = ModuleVector::new();
    for sigma in &group {
        for (t, c) in v {
            let moved = t.map_entries(|i| sigma.apply(i as usize) as u32);
            add_scaled(&mut out, &s.straighten(&moved), &(c * &inv));
        }
    }
    Ok(out)
}

fn check_mpt(tt: &Tableau, k: usize) -> Result<Composition> {
    let r = tt.r();
    if !tt.to_filling().is_multiset_partition_tableau(r, k) {
        return Err(Error::Mismatch(format!(
            "{tt} is not a multiset partition tableau over [{k}]"
        )));
    }
    Ok(tt.content_composition(k))
}

fn w_with(s: &mut Straightener, tt: &Tableau, k: usize) -> Result<ModuleVector> {
    let c = check_mpt(tt, k)?;
    let t = representative(tt, &c);
    project_with(s, &c, &ModuleVector::from([(t, Rational::one())]))
}

/// `w_T̃ = s_c v_T` for any `T` with `κ_c(T) = T̃`, where `c` is the
/// content composition of `T̃`, as a straightened vector of `P_r^λ`.
pub fn w_vector(tt: &Tableau, k: usize) -> Result<ModuleVector> {
    w_with(&mut Straightener::new(), tt, k)
}

fn act_mp_with(s: &mut Straightener, p: &MultisetPartition, tt: &Tableau) -> Result<ModuleVector> {
    if p.r() != tt.r() {
        return Err(Error::Mismatch(format!(
            "{p} has r = {}, {tt} has r = {}",
            p.r(),
            tt.r()
        )));
    }
    let c = check_mpt(tt, p.k())?;
    if p.bottom_composition() != c {
        return Ok(ModuleVector::new());
    }
    let w = w_with(s, tt, p.k())?;
    let moved = act_with(s, &fiber_representative(p), &w)?;
    project_with(s, &p.top_composition(), &moved)
}

/// `D_p.w_T̃ = δ_{b,c} s_a L_π w_T̃` as a straightened vector of `P_r^λ`,
/// where `π` is any set partition colored to `p` by `κ_{a,b}`.
pub fn act_mp(p: &MultisetPartition, tt: &Tableau) -> Result<ModuleVector> {
    act_mp_with(&mut Straightener::new(), p, tt)
}

fn check_module_shape(lambda: &IntegerPartition, r: usize) -> Result<()> {
    if lambda.n() < 2 * r {
        return Err(Error::Domain(format!(
            "modules are built for n >= 2r; {lambda} has n = {} < {}",
            lambda.n(),
            2 * r
        )));
    }
    Ok(())
}

/// The irreducible module `P_r^λ` (`n = |λ| ≥ 2r`) with its standard basis.
pub struct PModule {
    lambda: IntegerPartition,
    r: usize,
    basis: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
    straightener: Straightener,
}

impl PModule {
    pub fn new(lambda: &IntegerPartition, r: usize) -> Result<Self> {
        check_module_shape(lambda, r)?;
        let basis = enumerate_sspt(lambda, r)?;
        if basis.is_empty() {
            return Err(Error::Domain(format!(
                "{lambda} admits no standard tableau with r = {r}"
            )));
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        Ok(PModule {
            lambda: lambda.clone(),
            r,
            basis,
            index,
            straightener: Straightener::new(),
        })
    }

    pub fn lambda(&self) -> &IntegerPartition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// `L_π v`, straightened.
    pub fn act(&mut self, pi: &SetPartition, v: &ModuleVector) -> Result<ModuleVector> {
        act_with(&mut self.straightener, pi, v)
    }

    /// Coordinates of a straightened vector in the standard basis.
    pub fn coordinates(&self, v: &ModuleVector) -> Result<SparseVec> {
        v.iter()
            .map(|(t, c)| {
                self.index
                    .get(t)
                    .map(|&i| (i, c.clone()))
                    .ok_or_else(|| Error::Domain(format!("{t} is not a standard basis tableau")))
            })
            .collect()
    }

    /// Matrix of `L_π`: column `j` holds the coordinates of `L_π v_{T_j}`.
    pub fn matrix(&mut self, pi: &SetPartition) -> Result<Matrix> {
        if pi.r() != self.r {
            return Err(Error::Mismatch(format!(
                "{pi} does not have r = {}",
                self.r
            )));
        }
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let v = ModuleVector::from([(self.basis[j].clone(), Rational::one())]);
            let image = self.act(pi, &v)?;
            for (i, c) in self.coordinates(&image)? {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }
}

/// Matrix of `L_π` on `P_r^λ`.
pub fn module_matrix_p(pi: &SetPartition, lambda: &IntegerPartition) -> Result<Matrix> {
    PModule::new(lambda, pi.r())?.matrix(pi)
}

/// The irreducible module `MP_{r,k}^λ` (`n = |λ| ≥ 2r`) with basis
/// `{w_T̃ : T̃ ∈ SSMPT_{λ,r,k}}`. Vectors are computed inside `P_r^λ` and
/// read back in the `w` basis by exact elimination, one content
/// composition at a time.
pub struct MPModule {
    lambda: IntegerPartition,
    r: usize,
    k: usize,
    basis: Vec<Tableau>,
    p: PModule,
    solvers: HashMap<Composition, SpanSolver>,
    w_cache: HashMap<Tableau, ModuleVector>,
}

impl MPModule {
    pub fn new(lambda: &IntegerPartition, r: usize, k: usize) -> Result<Self> {
        check_module_shape(lambda, r)?;
        let basis = enumerate_ssmpt(lambda, r, k)?;
        if basis.is_empty() {
            return Err(Error::Domain(format!(
                "{lambda} admits no semistandard tableau with r = {r}, k = {k}"
            )));
        }
        let mut m = MPModule {
            lambda: lambda.clone(),
            r,
            k,
            basis: basis.clone(),
            p: PModule::new(lambda, r)?,
            solvers: HashMap::new(),
            w_cache: HashMap::new(),
        };
        for (i, tt) in basis.iter().enumerate() {
            let w = m.w(tt)?;
            let coords = m.p.coordinates(&w)?;
            let c = tt.content_composition(k);
            if !m.solvers.entry(c).or_default().insert(coords, i) {
                return Err(Error::Domain(format!(
                    "w vectors of shape {lambda} are linearly dependent at {tt}"
                )));
            }
        }
        Ok(m)
    }

    pub fn lambda(&self) -> &IntegerPartition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Tableau] {
        &self.basis
    }

    /// `w_T̃` in `P_r^λ`, cached.
    pub fn w(&mut self, tt: &Tableau) -> Result<ModuleVector> {
        if let Some(v) = self.w_cache.get(tt) {
            return Ok(v.clone());
        }
        let v = w_with(&mut self.p.straightener, tt, self.k)?;
        self.w_cache.insert(tt.clone(), v.clone());
        Ok(v)
    }

    /// Coordinates in the `w` basis of a vector of `s_a P_r^λ`.
    fn w_coordinates(&self, a: &Composition, v: &ModuleVector) -> Result<SparseVec> {
        if v.is_empty() {
            return Ok(SparseVec::new());
        }
        let coords = self.p.coordinates(v)?;
        self.solvers
            .get(a)
            .and_then(|s| s.solve(coords))
            .ok_or_else(|| Error::Domain(format!("vector outside the span of the w basis for {a}")))
    }

    /// `D_p.w_T̃` in the `w` basis (keys index [`MPModule::basis`]).
    pub fn act(&mut self, p: &MultisetPartition, tt: &Tableau) -> Result<SparseVec> {
        if (p.r(), p.k()) != (self.r, self.k) {
            return Err(Error::Mismatch(format!(
                "{p} is not in MP_{{{},{}}}",
                self.r, self.k
            )));
        }
        let v = act_mp_with(&mut self.p.straightener, p, tt)?;
        self.w_coordinates(&p.top_composition(), &v)
    }

    /// Matrix of `D_p`: column `j` holds the coordinates of `D_p.w_{T̃_j}`.
    pub fn matrix(&mut self, p: &MultisetPartition) -> Result<Matrix> {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let tt = self.basis[j].clone();
            for (i, c) in self.act(p, &tt)? {
                m[(i, j)] = c;
            }
        }
        Ok(m)
    }
}

/// Matrix of `D_p` on `MP_{r,k}^λ`.
pub fn module_matrix_mp(p: &MultisetPartition, lambda: &IntegerPartition) -> Result<Matrix> {
    MPModule::new(lambda, p.r(), p.k())?.matrix(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_algebra::{diagram_product_single, perm_diagram};
    use crate::partitions::{enumerate_set_partitions, Permutation};
    use crate::scalars::rint;

    fn tab(s: &str) -> Tableau {
        Tableau::parse(s).unwrap()
    }

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    const T: &str = "(([], [], [5]) / ([1,2], [4]) / ([3]))";

    #[test]
    fn action_can_merge_with_first_row() {
        let pi = sp("{{2,-3},{3,-2},{5,-4,-5},{1},{4},{-1}}");
        let res = act_on_spt(&pi, &tab(T)).unwrap().unwrap();
        assert_eq!(res.coefficient, rint(1));
        assert_eq!(res.tableau, tab("(([], [1], [4]) / ([3], [5]) / ([2]))"));
        let straight = act_p(&pi, &ModuleVector::from([(tab(T), rint(1))])).unwrap();
        assert_eq!(
            straight,
            ModuleVector::from([(tab("(([], [1], [4]) / ([2], [5]) / ([3]))"), rint(-1))])
        );
    }

    #[test]
    fn action_zero_cases() {
        let lost = sp("{{1,2,-3},{4,5,-4},{3},{-1},{-2},{-5}}");
        assert_eq!(act_on_spt(&lost, &tab(T)).unwrap(), None);
        let merged = sp("{{1,-1},{2,-2,-3},{3,-4,-5},{4,5}}");
        assert_eq!(act_on_spt(&merged, &tab(T)).unwrap(), None);
    }

    #[test]
    fn identity_acts_trivially() {
        let id = perm_diagram(&Permutation::identity(5));
        let res = act_on_spt(&id, &tab(T)).unwrap().unwrap();
        assert_eq!(res.tableau, tab(T));
        assert_eq!(res.coefficient, rint(1));
    }

    #[test]
    fn representation_r2() {
        let r = 2;
        let n = 5;
        let all = enumerate_set_partitions(r).unwrap();
        for lambda in crate::tableaux::shapes_p(n, r).unwrap() {
            let mut m = PModule::new(&lambda, r).unwrap();
            let mats: Vec<Matrix> = all.iter().map(|p| m.matrix(p).unwrap()).collect();
            for (i, p) in all.iter().enumerate() {
                for (j, q) in all.iter().enumerate() {
                    let (c, g) = diagram_product_single(p, q).unwrap();
                    let gi = all.binary_search(&g).unwrap();
                    let lhs = &mats[i] * &mats[j];
                    let rhs = mats[gi].scale(&rint((n as i64).pow(c as u32)));
                    assert_eq!(lhs, rhs, "{lambda}: {p} * {q}");
                }
            }
        }
    }

    #[test]
    fn column_repeat_gives_zero_w() {
        let tt = tab("(([], [], [], [2]) / ([1]) / ([1]))");
        assert!(w_vector(&tt, 2).unwrap().is_empty());
    }

    #[test]
    fn distinct_singletons_give_single_tableau() {
        let tt = tab("(([], [], [], [2]) / ([1]) / ([3]))");
        let w = w_vector(&tt, 3).unwrap();
        assert_eq!(w, ModuleVector::from([(tt.clone(), rint(1))]));
    }
}
