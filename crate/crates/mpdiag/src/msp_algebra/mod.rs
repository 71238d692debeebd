//! The multiset partition algebra `MP_{r,k}(x)`.
//!
//! It is realized inside the partition algebra as `⊕_{a,b} s_a P_r(x) s_b`.
//! Three bases are indexed by multiset partitions:
//!
//! * the diagram-like basis `D_π̃ = s_a L_π s_b`,
//! * the orbit-like basis `O_π̃ = s_a T_π s_b`,
//! * the orbit basis `X_π̃ = O_π̃ / ω(π̃)`, whose structure constants are given
//!   directly by the three-row multiset construction in
//!   [`oz_orbit_product`].
//!
//! Here `π` is any set partition with `κ_{a,b}(π) = π̃`.

mod closure;
mod structure;
mod subgroups;

pub use closure::{span_closure, span_closure_at, span_closure_symbolic, ClosureReport};
pub use structure::{
    factor_at_block, factor_lemma_check, generator_p, generator_q, generator_r, nonbasic_profile,
    prec_compare, theta_generators, vertical_bars, FactorCheck, Factorization, NonbasicProfile,
    PrecOrdering,
};
pub use subgroups::{
    factor_stabilizer_element, gamma_fiber_size, gamma_fiber_size_formula, subgroup_report,
    SubgroupReport,
};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lincomb::{format_terms, LinComb};
use crate::partition_algebra::{
    b_gamma, diagram_product_single, gamma_set, multiply, orbit_in_diagram, outer_restriction,
    project_diagram_like, project_orbit_like, ElementJson, PABasis, PAElement, TermJson,
};
use crate::partitions::{
    coarsenings_sp, enumerate_three_row_msp, fiber_representative, kappa, kappa3, kappa_fiber,
    multiset_factorial, young_subgroup, Composition, MultisetPartition, Permutation, Row,
    SetPartition, Vertex, BOTTOM, LOWER, THREE_ROWS, TOP, TWO_ROWS,
};
use crate::scalars::{falling_factorial, Poly, Rational};

/// Which basis an element of `MP_{r,k}(x)` is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MPBasis {
    /// Diagram-like basis `D`.
    DiagramLike,
    /// Orbit-like basis `O`.
    OrbitLike,
    /// Orbit basis `X`.
    Orbit,
}

impl MPBasis {
    /// One-letter tag used in text and JSON: `D`, `O` or `X`.
    pub fn tag(self) -> &'static str {
        match self {
            MPBasis::DiagramLike => "D",
            MPBasis::OrbitLike => "O",
            MPBasis::Orbit => "X",
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(MPBasis::DiagramLike),
            "O" => Ok(MPBasis::OrbitLike),
            "X" => Ok(MPBasis::Orbit),
            _ => Err(Error::Usage(format!(
                "unknown multiset-partition-algebra basis {s:?} (use D, O or X)"
            ))),
        }
    }
}

/// An element of `MP_{r,k}(x)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MPElement {
    r: usize,
    k: usize,
    basis: MPBasis,
    terms: LinComb<MultisetPartition>,
}

impl MPElement {
    pub fn zero(r: usize, k: usize, basis: MPBasis) -> Self {
        MPElement {
            r,
            k,
            basis,
            terms: LinComb::new(),
        }
    }

    pub fn basis_element(basis: MPBasis, p: MultisetPartition) -> Self {
        MPElement {
            r: p.r(),
            k: p.k(),
            basis,
            terms: LinComb::single(p, Poly::one()),
        }
    }

    /// Builds an element, checking that every key is a two-row multiset
    /// partition in `Π̃_{2(r),k}`.
    pub fn from_terms(
        r: usize,
        k: usize,
        basis: MPBasis,
        terms: LinComb<MultisetPartition>,
    ) -> Result<Self> {
        for p in terms.keys() {
            if p.r() != r || p.k() != k || p.rows() != TWO_ROWS {
                return Err(Error::Mismatch(format!(
                    "term {p} does not lie in MP_{{{r},{k}}}"
                )));
            }
        }
        Ok(MPElement { r, k, basis, terms })
    }

    pub(crate) fn from_terms_unchecked(
        r: usize,
        k: usize,
        basis: MPBasis,
        terms: LinComb<MultisetPartition>,
    ) -> Self {
        MPElement { r, k, basis, terms }
    }

    /// The identity `Σ_a D_{bars(a)}`, expressed in `basis`.
    pub fn identity(r: usize, k: usize, basis: MPBasis) -> Self {
        let mut terms = LinComb::new();
        for a in Composition::all(r, k) {
            terms.add_term(vertical_bars(&a), &Poly::one());
        }
        let e = MPElement::from_terms_unchecked(r, k, MPBasis::DiagramLike, terms);
        convert_mp(&e, basis).expect("conversion of the identity")
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn basis(&self) -> MPBasis {
        self.basis
    }

    pub fn terms(&self) -> &LinComb<MultisetPartition> {
        &self.terms
    }

    pub fn coeff(&self, p: &MultisetPartition) -> Poly {
        self.terms.coeff(p)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &MPElement) -> Result<()> {
        if (self.r, self.k) != (other.r, other.k) {
            return Err(Error::Mismatch(format!(
                "MP_{{{},{}}} vs MP_{{{},{}}}",
                self.r, self.k, other.r, other.k
            )));
        }
        if self.basis != other.basis {
            return Err(Error::WrongBasis {
                expected: self.basis.tag().into(),
                found: other.basis.tag().into(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MPElement) -> Result<MPElement> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        terms.add_assign(&other.terms);
        Ok(MPElement {
            terms,
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &MPElement) -> Result<MPElement> {
        self.check_same(other)?;
        Ok(MPElement {
            terms: self.terms.sub(&other.terms),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Poly) -> MPElement {
        MPElement {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    pub fn evaluate(&self, n: i64) -> BTreeMap<MultisetPartition, Rational> {
        self.terms.evaluate(n)
    }

    /// `c * [[..]] + ...`, or `0`.
    pub fn to_text(&self) -> String {
        format_terms(&self.terms, |p| p.to_text())
    }

    pub fn to_json(&self) -> ElementJson {
        ElementJson {
            algebra: "MP".into(),
            r: self.r,
            k: Some(self.k),
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

    /// JSON text with multiset keys under `msp`.
    pub fn to_json_string(&self) -> String {
        let j = self.to_json();
        let v = serde_json::json!({
            "algebra": j.algebra,
            "r": j.r,
            "k": j.k,
            "basis": j.basis,
            "terms": j.terms.iter().map(|t| serde_json::json!({"msp": t.key, "coeff": t.coeff})).collect::<Vec<_>>(),
        });
        v.to_string()
    }

    pub fn from_json(j: &ElementJson) -> Result<MPElement> {
        if j.algebra != "MP" {
            return Err(Error::parse(
                0,
                format!("expected algebra \"MP\", found {:?}", j.algebra),
            ));
        }
        let k =
            j.k.ok_or_else(|| Error::parse(0, "MP element needs \"k\""))?;
        let basis = MPBasis::from_tag(&j.basis)?;
        let mut terms = LinComb::new();
        for t in &j.terms {
            terms.add_term(
                MultisetPartition::parse(&t.key, Some(k))?,
                &Poly::from_json(&t.coeff)?,
            );
        }
        MPElement::from_terms(j.r, k, basis, terms)
    }
}

impl fmt::Display for MPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MPElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.basis.tag(), self.to_text())
    }
}

fn check_pair(p: &MultisetPartition, q: &MultisetPartition) -> Result<()> {
    if (p.r(), p.k()) != (q.r(), q.k()) {
        return Err(Error::Mismatch(format!(
            "{p} lies in MP_{{{},{}}} but {q} in MP_{{{},{}}}",
            p.r(),
            p.k(),
            q.r(),
            q.k()
        )));
    }
    if p.rows() != TWO_ROWS || q.rows() != TWO_ROWS {
        return Err(Error::Mismatch(
            "products need two-row multiset partitions".into(),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Snapshots and the diagram-like product
// ---------------------------------------------------------------------------

/// A pair of set partitions representing a product `D_p̃ · D_q̃`: `top`
/// colors to `p̃` and `bottom` colors to `q̃`, with the shared middle row
/// colored by `mid_composition`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snapshot {
    pub top: SetPartition,
    pub bottom: SetPartition,
    pub mid_composition: Composition,
}

impl Snapshot {
    /// The snapshot built from the standard fiber representatives; `None`
    /// when the middle color multiplicities differ.
    pub fn representative(
        p: &MultisetPartition,
        q: &MultisetPartition,
    ) -> Result<Option<Snapshot>> {
        check_pair(p, q)?;
        let b = p.bottom_composition();
        if b != q.top_composition() {
            return Ok(None);
        }
        Ok(Some(Snapshot {
            top: fiber_representative(p),
            bottom: fiber_representative(q),
            mid_composition: b,
        }))
    }
}

/// Evaluates `(1/|𝔖_b|) Σ_{σ ∈ 𝔖_b} x^{c_σ} D_{κ_{a,c}(γ_σ)}` where
/// `L_π · L_{σ.ν} = x^{c_σ} L_{γ_σ}` for the snapshot `(π, ν)`.
pub fn snapshot_product(s: &Snapshot, a: &Composition, c: &Composition) -> Result<MPElement> {
    let group = young_subgroup(&s.mid_composition)?;
    let id = Permutation::identity(s.top.r());
    let terms = group
        .par_iter()
        .map(|sigma| -> Result<LinComb<MultisetPartition>> {
            let nu = s.bottom.act(sigma, &id)?;
            let (cnt, g) = diagram_product_single(&s.top, &nu)?;
            Ok(LinComb::single(kappa(a, c, &g)?, Poly::x_pow(cnt)))
        })
        .try_reduce(LinComb::new, |mut x, y| {
            x.add_assign(&y);
            Ok(x)
        })?;
    let scale = Poly::constant(Rational::new(1.into(), BigInt::from(group.len())));
    Ok(MPElement::from_terms_unchecked(
        s.top.r(),
        a.k(),
        MPBasis::DiagramLike,
        terms.scale(&scale),
    ))
}

/// `D_p · D_q`, zero unless the bottom colors of `p` equal the top colors
/// of `q`.
pub fn dlike_product(p: &MultisetPartition, q: &MultisetPartition) -> Result<MPElement> {
    match Snapshot::representative(p, q)? {
        None => Ok(MPElement::zero(p.r(), p.k(), MPBasis::DiagramLike)),
        Some(s) => snapshot_product(&s, &p.top_composition(), &q.bottom_composition()),
    }
}

/// `D_p · D_q` computed entirely inside `P_r(x)`: the orbit averages
/// `s_a L_π s_b` and `s_b L_ν s_c` are multiplied term by term and the
/// result is read back in the diagram-like basis. A slow reference for
/// [`dlike_product`].
pub fn dlike_product_via_projection(
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<MPElement> {
    check_pair(p, q)?;
    if p.bottom_composition() != q.top_composition() {
        return Ok(MPElement::zero(p.r(), p.k(), MPBasis::DiagramLike));
    }
    let prod = multiply(&project_diagram_like(p)?, &project_diagram_like(q)?)?;
    pa_to_mp(
        &prod,
        &p.top_composition(),
        &q.bottom_composition(),
        MPBasis::DiagramLike,
    )
}

/// True iff every snapshot `(π, ν)` in the fibers of `p` and `q` gives the
/// same product as the standard one.
pub fn snapshot_independence_check(p: &MultisetPartition, q: &MultisetPartition) -> Result<bool> {
    let reference = dlike_product(p, q)?;
    let Some(rep) = Snapshot::representative(p, q)? else {
        return Ok(true);
    };
    let (a, b, c) = (
        p.top_composition(),
        rep.mid_composition.clone(),
        q.bottom_composition(),
    );
    let pis = kappa_fiber(p, &a, &b)?;
    let nus = kappa_fiber(q, &b, &c)?;
    crate::limits::check_group_order(pis.len().saturating_mul(nus.len()))?;
    for pi in &pis {
        for nu in &nus {
            let s = Snapshot {
                top: pi.clone(),
                bottom: nu.clone(),
                mid_composition: b.clone(),
            };
            if snapshot_product(&s, &a, &c)? != reference {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Orbit-like and orbit bases
// ---------------------------------------------------------------------------

/// `O_p · O_q = (1/|𝔖_b|) Σ_σ Σ_{γ ∈ Γ^π_{σ.ν}} b_γ(x) O_{κ_{a,c}(γ)}`.
pub fn olike_product(p: &MultisetPartition, q: &MultisetPartition) -> Result<MPElement> {
    let Some(s) = Snapshot::representative(p, q)? else {
        return Ok(MPElement::zero(p.r(), p.k(), MPBasis::OrbitLike));
    };
    let (a, c) = (p.top_composition(), q.bottom_composition());
    let group = young_subgroup(&s.mid_composition)?;
    let id = Permutation::identity(p.r());
    let terms = group
        .par_iter()
        .map(|sigma| -> Result<LinComb<MultisetPartition>> {
            let nu = s.bottom.act(sigma, &id)?;
            let mut out = LinComb::new();
            for g in gamma_set(&s.top, &nu)? {
                out.add_term(kappa(&a, &c, &outer_restriction(&g))?, &b_gamma(&g));
            }
            Ok(out)
        })
        .try_reduce(LinComb::new, |mut x, y| {
            x.add_assign(&y);
            Ok(x)
        })?;
    let scale = Poly::constant(Rational::new(1.into(), BigInt::from(group.len())));
    Ok(MPElement::from_terms_unchecked(
        p.r(),
        p.k(),
        MPBasis::OrbitLike,
        terms.scale(&scale),
    ))
}

/// `O_p · O_q` computed inside `P_r(x)` from the orbit-basis product of the
/// projected elements. A slow reference for [`olike_product`].
pub fn olike_product_via_projection(
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<MPElement> {
    check_pair(p, q)?;
    if p.bottom_composition() != q.top_composition() {
        return Ok(MPElement::zero(p.r(), p.k(), MPBasis::OrbitLike));
    }
    let prod = multiply(&project_orbit_like(p)?, &project_orbit_like(q)?)?;
    pa_to_mp(
        &prod,
        &p.top_composition(),
        &q.bottom_composition(),
        MPBasis::OrbitLike,
    )
}

/// `ω(π̃) = m(π̃)! · Π_{B̃} m(B̃|bottom)! / |𝔖_b|`, with `b` the bottom color
/// multiplicities. `O_π̃ = ω(π̃) X_π̃`.
pub fn omega(p: &MultisetPartition) -> Rational {
    let st = p.multiplicity_stats();
    Rational::new(
        st.m_factorial * st.per_block_bottom_factorials,
        p.bottom_composition().young_order(),
    )
}

/// The variant of [`omega`] normalized by the top Young subgroup `|𝔖_a|`.
/// It differs from [`omega`] by the factor `|𝔖_b|/|𝔖_a|`, which cancels in
/// every structure constant, so it defines the same orbit basis product.
pub fn omega_top_normalized(p: &MultisetPartition) -> Rational {
    let st = p.multiplicity_stats();
    Rational::new(
        st.m_factorial * st.per_block_bottom_factorials,
        p.top_composition().young_order(),
    )
}

/// Blocks of a two-row multiset partition split by which rows they touch.
struct BlockSplit {
    /// Blocks meeting the given row.
    touching: Vec<Vec<Vertex>>,
    /// Blocks lying entirely in the other row.
    other_only: Vec<Vec<Vertex>>,
}

fn split_blocks(p: &MultisetPartition, row: Row) -> BlockSplit {
    let (touching, other_only) = p
        .blocks()
        .iter()
        .cloned()
        .partition(|b: &Vec<Vertex>| b.iter().any(|v| v.row == row));
    BlockSplit {
        touching,
        other_only,
    }
}

fn colors_in(b: &[Vertex], row: Row) -> Vec<u32> {
    b.iter().filter(|v| v.row == row).map(|v| v.value).collect()
}

/// `Γ̃^p_q`: three-row multiset partitions `γ̃` with `γ̃` restricted to the
/// top and middle equal to `p` and restricted to the middle and lower rows
/// equal to `q` (moved down one row).
///
/// Each block of `p` meeting the bottom is glued to a block of `q` meeting
/// the top with the same middle colors (a perfect matching), and some
/// blocks of `p` lying only in the top are merged with blocks of `q` lying
/// only in the bottom (a partial matching). Different matchings may give
/// the same `γ̃`; the result is deduplicated and sorted.
pub fn gamma_tilde_set(
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<Vec<MultisetPartition>> {
    check_pair(p, q)?;
    let ps = split_blocks(p, Row::Bottom);
    let qs = split_blocks(q, Row::Top);
    if ps.touching.len() != qs.touching.len() {
        return Ok(Vec::new());
    }
    // q's blocks moved down: top -> middle, bottom -> lower.
    let lower = |b: &Vec<Vertex>| -> Vec<Vertex> {
        b.iter()
            .map(|v| match v.row {
                Row::Top => Vertex::bottom(v.value),
                _ => Vertex::lower(v.value),
            })
            .collect()
    };
    let q_touch: Vec<Vec<Vertex>> = qs.touching.iter().map(lower).collect();
    let q_lower_only: Vec<Vec<Vertex>> = qs.other_only.iter().map(lower).collect();
    let p_mid: Vec<Vec<u32>> = ps
        .touching
        .iter()
        .map(|b| colors_in(b, Row::Bottom))
        .collect();
    let q_mid: Vec<Vec<u32>> = q_touch.iter().map(|b| colors_in(b, Row::Bottom)).collect();

    let mut glued_choices: Vec<Vec<Vec<Vertex>>> = Vec::new();
    let mut used = vec![false; q_touch.len()];
    let mut cur: Vec<Vec<Vertex>> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn perfect(
        i: usize,
        p_touch: &[Vec<Vertex>],
        p_mid: &[Vec<u32>],
        q_touch: &[Vec<Vertex>],
        q_mid: &[Vec<u32>],
        used: &mut [bool],
        cur: &mut Vec<Vec<Vertex>>,
        out: &mut Vec<Vec<Vec<Vertex>>>,
    ) {
        if i == p_touch.len() {
            out.push(cur.clone());
            return;
        }
        let mut tried: BTreeSet<&Vec<Vertex>> = BTreeSet::new();
        for j in 0..q_touch.len() {
            if used[j] || q_mid[j] != p_mid[i] || !tried.insert(&q_touch[j]) {
                continue;
            }
            used[j] = true;
            let mut b = p_touch[i].clone();
            b.extend(q_touch[j].iter().filter(|v| v.row == Row::Lower));
            cur.push(b);
            perfect(i + 1, p_touch, p_mid, q_touch, q_mid, used, cur, out);
            cur.pop();
            used[j] = false;
        }
    }
    perfect(
        0,
        &ps.touching,
        &p_mid,
        &q_touch,
        &q_mid,
        &mut used,
        &mut cur,
        &mut glued_choices,
    );
    let glued_set: BTreeSet<Vec<Vec<Vertex>>> = glued_choices
        .into_iter()
        .map(|mut g| {
            g.sort();
            g
        })
        .collect();

    // Partial matchings of top-only blocks of p with lower-only blocks of q.
    let mut outer_choices: BTreeSet<Vec<Vec<Vertex>>> = BTreeSet::new();
    let mut used = vec![false; q_lower_only.len()];
    fn partial(
        i: usize,
        tops: &[Vec<Vertex>],
        lowers: &[Vec<Vertex>],
        used: &mut [bool],
        cur: &mut Vec<Vec<Vertex>>,
        out: &mut BTreeSet<Vec<Vec<Vertex>>>,
    ) {
        if i == tops.len() {
            let mut blocks = cur.clone();
            for (j, l) in lowers.iter().enumerate() {
                if !used[j] {
                    blocks.push(l.clone());
                }
            }
            blocks.sort();
            out.insert(blocks);
            return;
        }
        cur.push(tops[i].clone());
        partial(i + 1, tops, lowers, used, cur, out);
        cur.pop();
        let mut tried: BTreeSet<&Vec<Vertex>> = BTreeSet::new();
        for j in 0..lowers.len() {
            if used[j] || !tried.insert(&lowers[j]) {
                continue;
            }
            used[j] = true;
            let mut b = tops[i].clone();
            b.extend_from_slice(&lowers[j]);
            cur.push(b);
            partial(i + 1, tops, lowers, used, cur, out);
            cur.pop();
            used[j] = false;
        }
    }
    let mut cur = Vec::new();
    partial(
        0,
        &ps.other_only,
        &q_lower_only,
        &mut used,
        &mut cur,
        &mut outer_choices,
    );

    let mut out: BTreeSet<MultisetPartition> = BTreeSet::new();
    for g in &glued_set {
        for o in &outer_choices {
            let mut blocks = g.clone();
            blocks.extend(o.iter().cloned());
            out.insert(MultisetPartition::from_raw(
                p.r(),
                p.k(),
                THREE_ROWS,
                blocks,
            ));
        }
    }
    Ok(out.into_iter().collect())
}

/// `Γ̃^p_q` by brute force: every three-row multiset partition with the
/// right colors, filtered by the two restriction conditions.
pub fn gamma_tilde_set_brute_force(
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<Vec<MultisetPartition>> {
    check_pair(p, q)?;
    if p.bottom_composition() != q.top_composition() {
        return Ok(Vec::new());
    }
    let q_low = lower_msp(q);
    let mut out: Vec<MultisetPartition> = enumerate_three_row_msp(
        &p.top_composition(),
        &p.bottom_composition(),
        &q.bottom_composition(),
    )
    .into_iter()
    .filter(|g| g.restrict(TOP | BOTTOM) == *p && g.restrict(BOTTOM | LOWER) == q_low)
    .collect();
    out.sort();
    Ok(out)
}

/// Moves a two-row multiset partition down one row.
fn lower_msp(q: &MultisetPartition) -> MultisetPartition {
    q.map_vertices(BOTTOM | LOWER, |v| match v.row {
        Row::Top => Vertex::bottom(v.value),
        _ => Vertex::lower(v.value),
    })
}

/// The outer restriction of a three-row multiset partition as a two-row
/// multiset partition.
pub fn outer_restriction_msp(g: &MultisetPartition) -> MultisetPartition {
    g.restrict(TOP | LOWER)
        .map_vertices(TWO_ROWS, |v| match v.row {
            Row::Lower => Vertex::bottom(v.value),
            _ => v,
        })
}

/// `ã_γ̃ · b̃_γ̃(x)`, the coefficient of `X_{γ̃|outer}` contributed by `γ̃`.
pub fn gamma_tilde_coefficient(g: &MultisetPartition) -> Poly {
    let (beta, outer): (Vec<&Vec<Vertex>>, Vec<&Vec<Vertex>>) = g
        .blocks()
        .iter()
        .partition(|b| b.iter().all(|v| v.row == Row::Bottom));
    let beta_m = multiset_factorial(&beta);
    let bt = falling_factorial(&(&Poly::x() - &Poly::int(outer.len() as i64)), beta.len());
    // ã: group blocks by their outer restriction.
    let mut groups: BTreeMap<Vec<Vertex>, Vec<&Vec<Vertex>>> = BTreeMap::new();
    for b in outer {
        let s: Vec<Vertex> = b.iter().copied().filter(|v| v.row != Row::Bottom).collect();
        groups.entry(s).or_default().push(b);
    }
    let mut a = Rational::from_integer(1.into());
    for members in groups.values() {
        a *= Rational::new(
            crate::scalars::factorial(members.len()),
            multiset_factorial(members),
        );
    }
    bt.scale(&(a / Rational::from_integer(beta_m)))
}

/// `X_p · X_q = Σ_{γ̃ ∈ Γ̃^p_q} ã_γ̃ b̃_γ̃(x) X_{γ̃|outer}`.
pub fn oz_orbit_product(p: &MultisetPartition, q: &MultisetPartition) -> Result<MPElement> {
    let mut terms = LinComb::new();
    for g in gamma_tilde_set(p, q)? {
        terms.add_term(outer_restriction_msp(&g), &gamma_tilde_coefficient(&g));
    }
    Ok(MPElement::from_terms_unchecked(
        p.r(),
        p.k(),
        MPBasis::Orbit,
        terms,
    ))
}

/// [`oz_orbit_product`] with `Γ̃` from the brute-force filter.
pub fn oz_orbit_product_brute_force(
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<MPElement> {
    let mut terms = LinComb::new();
    for g in gamma_tilde_set_brute_force(p, q)? {
        terms.add_term(outer_restriction_msp(&g), &gamma_tilde_coefficient(&g));
    }
    Ok(MPElement::from_terms_unchecked(
        p.r(),
        p.k(),
        MPBasis::Orbit,
        terms,
    ))
}

fn product_of_basis(
    basis: MPBasis,
    p: &MultisetPartition,
    q: &MultisetPartition,
) -> Result<MPElement> {
    match basis {
        MPBasis::DiagramLike => dlike_product(p, q),
        MPBasis::OrbitLike => olike_product(p, q),
        MPBasis::Orbit => oz_orbit_product(p, q),
    }
}

/// Product of two elements written in the same basis.
pub fn multiply_mp(e1: &MPElement, e2: &MPElement) -> Result<MPElement> {
    e1.check_same(e2)?;
    let mut out = LinComb::new();
    for (p, c1) in e1.terms.iter() {
        for (q, c2) in e2.terms.iter() {
            if p.bottom_composition() != q.top_composition() {
                continue;
            }
            let prod = product_of_basis(e1.basis, p, q)?;
            out.add_scaled(&prod.terms, &(c1 * c2));
        }
    }
    Ok(MPElement::from_terms_unchecked(e1.r, e1.k, e1.basis, out))
}

/// [`multiply_mp`] with a memo table of basis products, for callers that
/// multiply many elements sharing terms.
pub(crate) fn multiply_mp_memo(
    e1: &MPElement,
    e2: &MPElement,
    memo: &mut HashMap<(MultisetPartition, MultisetPartition), LinComb<MultisetPartition>>,
) -> Result<MPElement> {
    e1.check_same(e2)?;
    let mut out = LinComb::new();
    for (p, c1) in e1.terms.iter() {
        for (q, c2) in e2.terms.iter() {
            if p.bottom_composition() != q.top_composition() {
                continue;
            }
            let key = (p.clone(), q.clone());
            if !memo.contains_key(&key) {
                let prod = product_of_basis(e1.basis, p, q)?;
                memo.insert(key.clone(), prod.terms);
            }
            out.add_scaled(&memo[&key], &(c1 * c2));
        }
    }
    Ok(MPElement::from_terms_unchecked(e1.r, e1.k, e1.basis, out))
}

// ---------------------------------------------------------------------------
// Passing between MP and P
// ---------------------------------------------------------------------------

/// The image of an element in `P_r(x)`: `D_π̃ ↦ s_a L_π s_b` (diagram basis)
/// and `O_π̃ ↦ s_a T_π s_b` (orbit basis). `X` elements go through `O`.
pub fn mp_to_pa(e: &MPElement) -> Result<PAElement> {
    let (e, basis) = match e.basis {
        MPBasis::DiagramLike => (e.clone(), PABasis::Diagram),
        MPBasis::OrbitLike => (e.clone(), PABasis::Orbit),
        MPBasis::Orbit => (x_to_o(e)?, PABasis::Orbit),
    };
    let mut out = PAElement::zero(e.r, basis);
    for (p, c) in e.terms.iter() {
        let img = match basis {
            PABasis::Diagram => project_diagram_like(p)?,
            PABasis::Orbit => project_orbit_like(p)?,
        };
        out = out.add(&img.scale(c))?;
    }
    Ok(out)
}

/// Reads an element of `s_a P_r(x) s_c` in the diagram-like (from the
/// diagram basis) or orbit-like (from the orbit basis) basis. The
/// coefficient of `D_μ̃` is the sum of the coefficients over the fiber of
/// `μ̃`, which is exact for `𝔖_a × 𝔖_c`-invariant input.
pub fn pa_to_mp(
    e: &PAElement,
    a: &Composition,
    c: &Composition,
    basis: MPBasis,
) -> Result<MPElement> {
    let expected = match basis {
        MPBasis::DiagramLike => PABasis::Diagram,
        MPBasis::OrbitLike => PABasis::Orbit,
        MPBasis::Orbit => {
            return Err(Error::Usage(
                "read back in D or O, then convert to X".into(),
            ));
        }
    };
    if e.basis() != expected {
        return Err(Error::WrongBasis {
            expected: expected.tag().into(),
            found: e.basis().tag().into(),
        });
    }
    let mut terms = LinComb::new();
    for (g, coeff) in e.terms().iter() {
        terms.add_term(kappa(a, c, g)?, coeff);
    }
    Ok(MPElement::from_terms_unchecked(e.r(), a.k(), basis, terms))
}

// ---------------------------------------------------------------------------
// Change of basis
// ---------------------------------------------------------------------------

fn require(e: &MPElement, basis: MPBasis) -> Result<()> {
    if e.basis != basis {
        return Err(Error::WrongBasis {
            expected: basis.tag().into(),
            found: e.basis.tag().into(),
        });
    }
    Ok(())
}

/// `D_π̃ = Σ_{ν ≤ π} O_{κ(ν)}` over the coarsenings of one representative.
pub fn d_to_o(e: &MPElement) -> Result<MPElement> {
    require(e, MPBasis::DiagramLike)?;
    let mut terms = LinComb::new();
    for (p, c) in e.terms.iter() {
        let (a, b) = (p.top_composition(), p.bottom_composition());
        for nu in coarsenings_sp(&fiber_representative(p)) {
            terms.add_term(kappa(&a, &b, &nu)?, c);
        }
    }
    Ok(MPElement::from_terms_unchecked(
        e.r,
        e.k,
        MPBasis::OrbitLike,
        terms,
    ))
}

/// `O_π̃ = s_a T_π s_b` with `T_π` written in the diagram basis.
pub fn o_to_d(e: &MPElement) -> Result<MPElement> {
    require(e, MPBasis::OrbitLike)?;
    let mut memo = HashMap::new();
    let mut terms = LinComb::new();
    for (p, c) in e.terms.iter() {
        let (a, b) = (p.top_composition(), p.bottom_composition());
        for (g, cg) in orbit_in_diagram(&fiber_representative(p), &mut memo).iter() {
            terms.add_term(kappa(&a, &b, g)?, &(cg * c));
        }
    }
    Ok(MPElement::from_terms_unchecked(
        e.r,
        e.k,
        MPBasis::DiagramLike,
        terms,
    ))
}

/// `φ`: `O_π̃ ↦ ω(π̃) X_π̃`.
pub fn o_to_x(e: &MPElement) -> Result<MPElement> {
    require(e, MPBasis::OrbitLike)?;
    let mut terms = LinComb::new();
    for (p, c) in e.terms.iter() {
        terms.add_term(p.clone(), &c.scale(&omega(p)));
    }
    Ok(MPElement::from_terms_unchecked(
        e.r,
        e.k,
        MPBasis::Orbit,
        terms,
    ))
}

/// `φ⁻¹`: `X_π̃ ↦ O_π̃ / ω(π̃)`.
pub fn x_to_o(e: &MPElement) -> Result<MPElement> {
    require(e, MPBasis::Orbit)?;
    let mut terms = LinComb::new();
    for (p, c) in e.terms.iter() {
        terms.add_term(p.clone(), &c.scale(&omega(p).recip()));
    }
    Ok(MPElement::from_terms_unchecked(
        e.r,
        e.k,
        MPBasis::OrbitLike,
        terms,
    ))
}

/// `D_π̃ ↦ Σ_{ν̃} c_{ν̃,π̃} ω(ν̃) X_ν̃`.
pub fn d_to_x(e: &MPElement) -> Result<MPElement> {
    o_to_x(&d_to_o(e)?)
}

/// Inverse of [`d_to_x`].
pub fn x_to_d(e: &MPElement) -> Result<MPElement> {
    o_to_d(&x_to_o(e)?)
}

/// Converts to the requested basis (no-op if already there).
pub fn convert_mp(e: &MPElement, to: MPBasis) -> Result<MPElement> {
    use MPBasis::*;
    match (e.basis, to) {
        (a, b) if a == b => Ok(e.clone()),
        (DiagramLike, OrbitLike) => d_to_o(e),
        (DiagramLike, Orbit) => d_to_x(e),
        (OrbitLike, DiagramLike) => o_to_d(e),
        (OrbitLike, Orbit) => o_to_x(e),
        (Orbit, OrbitLike) => x_to_o(e),
        (Orbit, DiagramLike) => x_to_d(e),
        _ => unreachable!("all basis pairs are covered"),
    }
}

/// `c_{ν̃,π̃}` for every `ν̃`, computed from a chosen representative `π` of
/// `π̃`: the number of coarsenings `ν ≤ π` with `κ(ν) = ν̃`.
pub fn coarsening_counts(
    pt: &MultisetPartition,
    pi: &SetPartition,
) -> Result<BTreeMap<MultisetPartition, usize>> {
    let (a, b) = (pt.top_composition(), pt.bottom_composition());
    if kappa(&a, &b, pi)? != *pt {
        return Err(Error::Mismatch(format!("{pi} does not color to {pt}")));
    }
    let mut out = BTreeMap::new();
    for nu in coarsenings_sp(pi) {
        *out.entry(kappa(&a, &b, &nu)?).or_insert(0) += 1;
    }
    Ok(out)
}

/// `κ_{a,b,c}` of `π ∗ ν` etc. is used by the subgroup module; re-exported
/// here for convenience.
pub(crate) fn kappa_three(
    a: &Composition,
    b: &Composition,
    c: &Composition,
    g: &SetPartition,
) -> Result<MultisetPartition> {
    kappa3(a, b, Some(c), g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_msp;

    fn msp(s: &str, k: usize) -> MultisetPartition {
        MultisetPartition::parse(s, Some(k)).unwrap()
    }

    #[test]
    fn identity_bar_squares_to_itself() {
        let p = msp("[[1,-1]]", 1);
        let d = dlike_product(&p, &p).unwrap();
        assert_eq!(d.to_text(), "1 * [[1,-1]]");
    }

    #[test]
    fn mismatch_is_zero() {
        let p = msp("[[1,-1]]", 2);
        let q = msp("[[2,-2]]", 2);
        assert!(dlike_product(&p, &q).unwrap().is_zero());
        assert!(olike_product(&p, &q).unwrap().is_zero());
        assert!(oz_orbit_product(&p, &q).unwrap().is_zero());
    }

    #[test]
    fn orbit_square_r1() {
        let s = msp("[[1],[-1]]", 1);
        let x = oz_orbit_product(&s, &s).unwrap();
        assert_eq!(x.to_text(), "(x - 2) * [[1],[-1]] + (x - 1) * [[1,-1]]");
    }

    #[test]
    fn d_product_matches_projection_r2k2() {
        let all = enumerate_msp(2, 2).unwrap();
        for p in &all {
            for q in &all {
                assert_eq!(
                    dlike_product(p, q).unwrap(),
                    dlike_product_via_projection(p, q).unwrap(),
                    "{p} * {q}"
                );
            }
        }
    }

    #[test]
    fn conversions_round_trip() {
        for p in enumerate_msp(2, 2).unwrap() {
            let d = MPElement::basis_element(MPBasis::DiagramLike, p);
            assert_eq!(x_to_d(&d_to_x(&d).unwrap()).unwrap(), d);
        }
    }
}
