//! The partition algebra `P_r(x)`: diagram basis `L`, orbit basis `T`,
//! their products, the change of basis in both directions, the symmetric
//! group inside it, and the Young symmetrizers `s_a`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincomb::{format_terms, LinComb};
use crate::partitions::{
    coarsenings_sp, enumerate_three_row_set_partitions, fiber_representative, orbit,
    young_subgroup, Composition, MultisetPartition, Permutation, Row, SetPartition, Vertex, BOTTOM,
    LOWER, TOP, TWO_ROWS,
};
use crate::scalars::{falling_factorial, rat, Poly, PolyJson, Rational};

/// Which basis an element is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PABasis {
    /// Diagram basis `L_π`.
    Diagram,
    /// Orbit basis `T_π`.
    Orbit,
}

impl PABasis {
    /// One-letter tag used in text and JSON: `L` or `T`.
    pub fn tag(self) -> &'static str {
        match self {
            PABasis::Diagram => "L",
            PABasis::Orbit => "T",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(PABasis::Diagram),
            "T" => Ok(PABasis::Orbit),
            _ => Err(Error::Usage(format!(
                "unknown partition-algebra basis {s:?} (use L or T)"
            ))),
        }
    }
}

/// An element of `P_r(x)`: a sparse combination of basis elements indexed
/// by two-row set partitions, tagged with its basis.
#[derive(Clone, PartialEq, Eq)]
pub struct PAElement {
    r: usize,
    basis: PABasis,
    terms: LinComb<SetPartition>,
}

impl PAElement {
    pub fn zero(r: usize, basis: PABasis) -> Self {
        PAElement {
            r,
            basis,
            terms: LinComb::new(),
        }
    }

    /// The basis element indexed by `p`.
    pub fn basis_element(basis: PABasis, p: SetPartition) -> Self {
        let r = p.r();
        PAElement {
            r,
            basis,
            terms: LinComb::single(p, Poly::one()),
        }
    }

    /// Builds an element from terms, checking that every key is a two-row
    /// partition of the right size.
    pub fn from_terms(r: usize, basis: PABasis, terms: LinComb<SetPartition>) -> Result<Self> {
        for p in terms.keys() {
            if p.r() != r || p.rows() != TWO_ROWS {
                return Err(Error::Mismatch(format!("term {p} does not lie in P_{r}")));
            }
        }
        Ok(PAElement { r, basis, terms })
    }

    pub(crate) fn from_terms_unchecked(
        r: usize,
        basis: PABasis,
        terms: LinComb<SetPartition>,
    ) -> Self {
        PAElement { r, basis, terms }
    }

    /// The identity: `L` of the identity permutation (equivalently the sum
    /// of `T` over its coarsenings).
    pub fn identity(r: usize, basis: PABasis) -> Self {
        let e = PAElement::basis_element(PABasis::Diagram, perm_diagram(&Permutation::identity(r)));
        match basis {
            PABasis::Diagram => e,
            PABasis::Orbit => diagram_to_orbit(&e).expect("diagram basis"),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn basis(&self) -> PABasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<SetPartition> {
        &self.terms
    }

    pub fn coeff(&self, p: &SetPartition) -> Poly {
        self.terms.coeff(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &PAElement) -> Result<()> {
        if self.r != other.r {
            return Err(Error::Mismatch(format!("P_{} vs P_{}", self.r, other.r)));
        }
        if self.basis != other.basis {
            return Err(Error::WrongBasis {
                expected: self.basis.tag().into(),
                found: other.basis.tag().into(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &PAElement) -> Result<PAElement> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        terms.add_assign(&other.terms);
        Ok(PAElement {
            terms,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &PAElement) -> Result<PAElement> {
        self.check_same(other)?;
        Ok(PAElement {
            terms: self.terms.sub(&other.terms),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Poly) -> PAElement {
        PAElement {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    /// Coefficients specialized at `x = n`.
    pub fn evaluate(&self, n: i64) -> BTreeMap<SetPartition, Rational> {
        self.terms.evaluate(n)
    }

    /// `c * {{..}} + ...`, or `0`.
    pub fn to_text(&self) -> String {
        format_terms(&self.terms, |p| p.to_text())
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            algebra: "P".into(),
            r: self.r,
            k: None,
            basis: self.basis.tag().into(),
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermJson {
                    key: p.to_text(),
                    coeff: c.to_json(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &ElementJson) -> Result<PAElement> {
        if j.algebra != "P" {
            return Err(Error::parse(
                0,
                format!("expected algebra \"P\", found {:?}", j.algebra),
            ));
        }
        let basis = PABasis::from_tag(&j.basis)?;
        let mut terms = LinComb::new();
        for t in &j.terms {
            terms.add_term(SetPartition::parse(&t.key)?, &Poly::from_json(&t.coeff)?);
        }
        PAElement::from_terms(j.r, basis, terms)
    }
}

impl fmt::Display for PAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for PAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.basis.tag(), self.to_text())
    }
}

/// JSON form of an algebra element (shared by both algebras; `k` is present
/// only for the multiset partition algebra).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: String,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub basis: String,
    pub terms: Vec<TermJson>,
}

/// One `coeff · key` term; the key is serialized as `sp` (set partition) or
/// `msp` (multiset partition).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(alias = "sp", alias = "msp", rename(serialize = "sp"))]
    pub key: String,
    pub coeff: PolyJson,
}

// ---------------------------------------------------------------------------
// Stacking diagrams
// ---------------------------------------------------------------------------

/// Minimal union–find on `0..n`.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

fn check_two_row_pair(p: &SetPartition, q: &SetPartition) -> Result<usize> {
    if p.r() != q.r() {
        return Err(Error::Mismatch(format!(
            "cannot stack r = {} over r = {}",
            p.r(),
            q.r()
        )));
    }
    if p.rows() != TWO_ROWS || q.rows() != TWO_ROWS {
        return Err(Error::Mismatch("stacking needs two-row partitions".into()));
    }
    Ok(p.r())
}

/// Places `p` over `q`, identifying the bottom of `p` with the top of `q`.
/// Returns the three-row partition given by connected components: the top
/// of `p` is the top row, the shared vertices are the middle row (`Bottom`),
/// and the bottom of `q` is the lower row.
pub fn three_tier(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    let r = check_two_row_pair(p, q)?;
    let mut uf = UnionFind::new(3 * r);
    let idx_p = |v: &Vertex| match v.row {
        Row::Top => v.value as usize - 1,
        _ => r + v.value as usize - 1,
    };
    let idx_q = |v: &Vertex| match v.row {
        Row::Top => r + v.value as usize - 1,
        _ => 2 * r + v.value as usize - 1,
    };
    for b in p.blocks() {
        let first = idx_p(&b[0]);
        for v in &b[1..] {
            uf.union(first, idx_p(v));
        }
    }
    for b in q.blocks() {
        let first = idx_q(&b[0]);
        for v in &b[1..] {
            uf.union(first, idx_q(v));
        }
    }
    let mut comp: BTreeMap<usize, usize> = BTreeMap::new();
    let labels: Vec<usize> = (0..3 * r)
        .map(|i| {
            let root = uf.find(i);
            let next = comp.len();
            *comp.entry(root).or_insert(next)
        })
        .collect();
    Ok(SetPartition::from_labels(r, TOP | BOTTOM | LOWER, &labels))
}

/// The outer restriction of a three-row partition, read as a two-row
/// partition (lower row becomes the bottom row).
pub fn outer_restriction(g: &SetPartition) -> SetPartition {
    g.restrict(TOP | LOWER)
        .map_vertices(TWO_ROWS, |v| match v.row {
            Row::Lower => Vertex::bottom(v.value),
            _ => v,
        })
        .expect("restriction of a three-row partition is valid")
}

/// Stacks `p` over `q`: returns `c`, the number of components lying
/// entirely in the middle row, and the induced diagram on the outer rows.
/// `L_p · L_q = x^c · L_g`.
pub fn diagram_product_single(p: &SetPartition, q: &SetPartition) -> Result<(usize, SetPartition)> {
    let g = three_tier(p, q)?;
    let middle_only = g
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Bottom))
        .count();
    Ok((middle_only, outer_restriction(&g)))
}

/// `π ∗ ν`: the three-row partition obtained by stacking, defined when the
/// bottom of `π` and the top of `ν` induce the same partition of the middle.
pub fn star(p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
    check_two_row_pair(p, q)?;
    if !middles_agree(p, q) {
        return Err(Error::Domain(format!(
            "{p} restricted to the bottom differs from {q} restricted to the top"
        )));
    }
    three_tier(p, q)
}

fn middles_agree(p: &SetPartition, q: &SetPartition) -> bool {
    let pb = p.restrict(BOTTOM);
    let qt = q
        .restrict(TOP)
        .map_vertices(BOTTOM, |v| Vertex::bottom(v.value))
        .expect("relabeling a restriction is valid");
    pb == qt
}

/// `Γ^π_ν`: all three-row partitions `γ` with `γ` restricted to the top and
/// middle equal to `π` and to the middle and lower rows equal to `ν`.
///
/// Built from `π ∗ ν` by additionally merging some blocks lying only in the
/// top row with blocks lying only in the lower row (a partial matching).
pub fn gamma_set(p: &SetPartition, q: &SetPartition) -> Result<Vec<SetPartition>> {
    check_two_row_pair(p, q)?;
    if !middles_agree(p, q) {
        return Ok(Vec::new());
    }
    let s = three_tier(p, q)?;
    let tops: Vec<&Vec<Vertex>> = s
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Top))
        .collect();
    let lowers: Vec<&Vec<Vertex>> = s
        .blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Lower))
        .collect();
    let fixed: Vec<Vec<Vertex>> = s
        .blocks()
        .iter()
        .filter(|b| b.iter().any(|v| v.row == Row::Bottom))
        .cloned()
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; lowers.len()];
    let mut chosen: Vec<Option<usize>> = Vec::new();
    fn rec(
        i: usize,
        tops: &[&Vec<Vertex>],
        lowers: &[&Vec<Vertex>],
        used: &mut [bool],
        chosen: &mut Vec<Option<usize>>,
        emit: &mut dyn FnMut(&[Option<usize>]),
    ) {
        if i == tops.len() {
            emit(chosen);
            return;
        }
        chosen.push(None);
        rec(i + 1, tops, lowers, used, chosen, emit);
        chosen.pop();
        for j in 0..lowers.len() {
            if !used[j] {
                used[j] = true;
                chosen.push(Some(j));
                rec(i + 1, tops, lowers, used, chosen, emit);
                chosen.pop();
                used[j] = false;
            }
        }
    }
    let r = p.r();
    rec(0, &tops, &lowers, &mut used, &mut chosen, &mut |choice| {
        let mut blocks = fixed.clone();
        let mut lower_used = vec![false; lowers.len()];
        for (t, c) in tops.iter().zip(choice) {
            let mut b = (*t).clone();
            if let Some(j) = c {
                b.extend_from_slice(lowers[*j]);
                lower_used[*j] = true;
            }
            blocks.push(b);
        }
        for (j, l) in lowers.iter().enumerate() {
            if !lower_used[j] {
                blocks.push((*l).clone());
            }
        }
        out.push(SetPartition::new(r, TOP | BOTTOM | LOWER, blocks).expect("valid merge"));
    });
    out.sort();
    Ok(out)
}

/// `Γ^π_ν` by brute force: every three-row set partition, filtered by the
/// two restriction conditions. Exponential; a reference for small `r`.
pub fn gamma_set_brute_force(p: &SetPartition, q: &SetPartition) -> Result<Vec<SetPartition>> {
    let r = check_two_row_pair(p, q)?;
    let q_lowered = q
        .map_vertices(BOTTOM | LOWER, |v| match v.row {
            Row::Top => Vertex::bottom(v.value),
            _ => Vertex::lower(v.value),
        })
        .expect("relabeling is valid");
    let mut out: Vec<SetPartition> = enumerate_three_row_set_partitions(r)?
        .into_iter()
        .filter(|g| g.restrict(TOP | BOTTOM) == *p && g.restrict(BOTTOM | LOWER) == q_lowered)
        .collect();
    out.sort();
    Ok(out)
}

/// Blocks of `γ` contained in the middle row (`β_γ`).
pub fn middle_only_blocks(g: &SetPartition) -> usize {
    g.blocks()
        .iter()
        .filter(|b| b.iter().all(|v| v.row == Row::Bottom))
        .count()
}

/// `b_γ(x) = (x − ℓ(γ|outer))_{ℓ(β_γ)}`.
pub fn b_gamma(g: &SetPartition) -> Poly {
    let beta = middle_only_blocks(g);
    let outer = g.num_blocks() - beta;
    falling_factorial(&(&Poly::x() - &Poly::int(outer as i64)), beta)
}

/// `T_π · T_ν = Σ_{γ ∈ Γ^π_ν} b_γ(x) T_{γ|outer}`.
pub fn orbit_product_single(p: &SetPartition, q: &SetPartition) -> Result<LinComb<SetPartition>> {
    let mut out = LinComb::new();
    for g in gamma_set(p, q)? {
        out.add_term(outer_restriction(&g), &b_gamma(&g));
    }
    Ok(out)
}

fn product_of_basis(
    basis: PABasis,
    p: &SetPartition,
    q: &SetPartition,
) -> Result<LinComb<SetPartition>> {
    match basis {
        PABasis::Diagram => {
            let (c, g) = diagram_product_single(p, q)?;
            Ok(LinComb::single(g, Poly::x_pow(c)))
        }
        PABasis::Orbit => orbit_product_single(p, q),
    }
}

/// Product of two elements written in the same basis.
pub fn multiply(e1: &PAElement, e2: &PAElement) -> Result<PAElement> {
    e1.check_same(e2)?;
    let mut out = LinComb::new();
    for (p, c1) in e1.terms.iter() {
        for (q, c2) in e2.terms.iter() {
            let prod = product_of_basis(e1.basis, p, q)?;
            out.add_scaled(&prod, &(c1 * c2));
        }
    }
    Ok(PAElement::from_terms_unchecked(e1.r, e1.basis, out))
}

/// [`multiply`] with the term pairs distributed over threads. Coefficient
/// addition is exact, so the result is identical to the sequential one.
pub fn multiply_par(e1: &PAElement, e2: &PAElement) -> Result<PAElement> {
    e1.check_same(e2)?;
    let pairs: Vec<(&SetPartition, &Poly, &SetPartition, &Poly)> = e1
        .terms
        .iter()
        .flat_map(|(p, c1)| e2.terms.iter().map(move |(q, c2)| (p, c1, q, c2)))
        .collect();
    let out = pairs
        .par_iter()
        .map(|(p, c1, q, c2)| product_of_basis(e1.basis, p, q).map(|prod| prod.scale(&(*c1 * *c2))))
        .try_reduce(LinComb::new, |mut a, b| {
            a.add_assign(&b);
            Ok(a)
        })?;
    Ok(PAElement::from_terms_unchecked(e1.r, e1.basis, out))
}

// ---------------------------------------------------------------------------
// Change of basis
// ---------------------------------------------------------------------------

/// `L_π ↦ Σ_{ν ≤ π} T_ν`.
pub fn diagram_to_orbit(e: &PAElement) -> Result<PAElement> {
    if e.basis != PABasis::Diagram {
        return Err(Error::WrongBasis {
            expected: "L".into(),
            found: e.basis.tag().into(),
        });
    }
    let mut out = LinComb::new();
    for (p, c) in e.terms.iter() {
        for nu in coarsenings_sp(p) {
            out.add_term(nu, c);
        }
    }
    Ok(PAElement::from_terms_unchecked(e.r, PABasis::Orbit, out))
}

/// `T_π` in the diagram basis by the triangular solve
/// `T_π = L_π − Σ_{ν < π} T_ν` over the coarsening order, memoized.
pub(crate) fn orbit_in_diagram(
    p: &SetPartition,
    memo: &mut HashMap<SetPartition, LinComb<SetPartition>>,
) -> LinComb<SetPartition> {
    if let Some(v) = memo.get(p) {
        return v.clone();
    }
    let mut out = LinComb::single(p.clone(), Poly::one());
    for nu in coarsenings_sp(p) {
        if &nu != p {
            let t = orbit_in_diagram(&nu, memo);
            out.add_scaled(&t, &Poly::int(-1));
        }
    }
    memo.insert(p.clone(), out.clone());
    out
}

/// Inverse of [`diagram_to_orbit`].
pub fn orbit_to_diagram(e: &PAElement) -> Result<PAElement> {
    if e.basis != PABasis::Orbit {
        return Err(Error::WrongBasis {
            expected: "T".into(),
            found: e.basis.tag().into(),
        });
    }
    let mut memo = HashMap::new();
    let mut out = LinComb::new();
    for (p, c) in e.terms.iter() {
        out.add_scaled(&orbit_in_diagram(p, &mut memo), c);
    }
    Ok(PAElement::from_terms_unchecked(e.r, PABasis::Diagram, out))
}

/// Converts to the requested basis (no-op if already there).
pub fn convert(e: &PAElement, to: PABasis) -> Result<PAElement> {
    match (e.basis, to) {
        (a, b) if a == b => Ok(e.clone()),
        (PABasis::Diagram, PABasis::Orbit) => diagram_to_orbit(e),
        _ => orbit_to_diagram(e),
    }
}

// ---------------------------------------------------------------------------
// Symmetric group and symmetrizers
// ---------------------------------------------------------------------------

/// The diagram of a permutation: blocks `{σ(i), ī}`.
pub fn perm_diagram(s: &Permutation) -> SetPartition {
    let blocks = (1..=s.degree())
        .map(|i| vec![Vertex::top(s.apply(i) as u32), Vertex::bottom(i as u32)])
        .collect();
    SetPartition::new(s.degree(), TWO_ROWS, blocks).expect("permutation diagram is valid")
}

/// `s_a = (1/|𝔖_a|) Σ_{σ ∈ 𝔖_a} L_σ`, in the diagram basis.
pub fn idempotent_s(a: &Composition) -> Result<PAElement> {
    let group = young_subgroup(a)?;
    let c = Poly::constant(rat(1, group.len() as i64));
    let mut terms = LinComb::new();
    for s in &group {
        terms.add_term(perm_diagram(s), &c);
    }
    Ok(PAElement::from_terms_unchecked(
        a.total(),
        PABasis::Diagram,
        terms,
    ))
}

/// Orbit average `(1/|O|) Σ_{ν ∈ O} e_ν` of the `𝔖_a × 𝔖_b` orbit of `p`.
pub(crate) fn orbit_average(
    p: &SetPartition,
    a: &Composition,
    b: &Composition,
) -> Result<LinComb<SetPartition>> {
    let orb = orbit(p, a, b)?;
    let c = Poly::constant(rat(1, orb.len() as i64));
    let mut out = LinComb::new();
    for nu in orb {
        out.add_term(nu, &c);
    }
    Ok(out)
}

/// `s_a · L_π · s_b` for any `π` with `κ_{a,b}(π) = pt`: the average of the
/// diagram basis over the `𝔖_a × 𝔖_b`-orbit of `π`.
pub fn project_diagram_like(pt: &MultisetPartition) -> Result<PAElement> {
    project_with_basis(pt, PABasis::Diagram)
}

/// `s_a · T_π · s_b`, the orbit-like element, in the orbit basis of `P_r`.
pub fn project_orbit_like(pt: &MultisetPartition) -> Result<PAElement> {
    project_with_basis(pt, PABasis::Orbit)
}

fn project_with_basis(pt: &MultisetPartition, basis: PABasis) -> Result<PAElement> {
    if pt.rows() != TWO_ROWS {
        return Err(Error::Mismatch(
            "projection needs a two-row multiset partition".into(),
        ));
    }
    let p = fiber_representative(pt);
    let terms = orbit_average(&p, &pt.top_composition(), &pt.bottom_composition())?;
    Ok(PAElement::from_terms_unchecked(pt.r(), basis, terms))
}

/// Restricts a set partition to one row and relabels it onto the bottom row
/// (used to compare bottoms with tops).
pub(crate) fn row_as_bottom(p: &SetPartition, row: Row) -> SetPartition {
    p.restrict(match row {
        Row::Top => TOP,
        Row::Bottom => BOTTOM,
        Row::Lower => LOWER,
    })
    .map_vertices(BOTTOM, |v| Vertex::bottom(v.value))
    .expect("relabeling a restriction is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SetPartition {
        SetPartition::parse(s).unwrap()
    }

    #[test]
    fn r1_orbit_square() {
        let s = PAElement::basis_element(PABasis::Orbit, sp("{{1},{-1}}"));
        let sq = multiply(&s, &s).unwrap();
        assert_eq!(sq.to_text(), "(x - 2) * {{1},{-1}} + (x - 1) * {{1,-1}}");
        let id = PAElement::basis_element(PABasis::Orbit, sp("{{1,-1}}"));
        assert_eq!(multiply(&id, &id).unwrap(), id);
    }

    #[test]
    fn r1_diagram_square() {
        let (c, g) = diagram_product_single(&sp("{{1},{-1}}"), &sp("{{1},{-1}}")).unwrap();
        assert_eq!((c, g.to_text().as_str()), (1, "{{1},{-1}}"));
    }

    #[test]
    fn conversions_r1() {
        let l = PAElement::basis_element(PABasis::Diagram, sp("{{1},{-1}}"));
        let t = diagram_to_orbit(&l).unwrap();
        assert_eq!(t.to_text(), "1 * {{1},{-1}} + 1 * {{1,-1}}");
        let back =
            orbit_to_diagram(&PAElement::basis_element(PABasis::Orbit, sp("{{1},{-1}}"))).unwrap();
        assert_eq!(back.to_text(), "1 * {{1},{-1}} + -1 * {{1,-1}}");
    }

    #[test]
    fn transposition_diagram() {
        let s = Permutation::from_images(&[2, 1]).unwrap();
        assert_eq!(perm_diagram(&s).to_text(), "{{1,-2},{2,-1}}");
    }

    #[test]
    fn gamma_matches_brute_force_r2() {
        let all = crate::partitions::enumerate_set_partitions(2).unwrap();
        for p in &all {
            for q in &all {
                assert_eq!(
                    gamma_set(p, q).unwrap(),
                    gamma_set_brute_force(p, q).unwrap()
                );
            }
        }
    }
}
