//! Verification suites: each compares a construction of the crate with an
//! independent one over an exhaustive range or a seeded random sample, and
//! reports every disagreement.
//!
//! The suites back the `verify` command of the binary and the acceptance
//! run; they are ordinary library functions so that callers can drive them
//! with their own sizes and seeds.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{rank_rational, Matrix};
use crate::msp_algebra::{
    dlike_product, gamma_fiber_size, gamma_fiber_size_formula, multiply_mp, nonbasic_profile,
    o_to_x, olike_product, snapshot_independence_check, span_closure, subgroup_report,
    theta_generators, MPBasis, MPElement,
};
use crate::partition_algebra::gamma_set;
use crate::partitions::{
    enumerate_msp, enumerate_msp_with, kappa3, Composition, MultisetPartition, SetPartition,
    Vertex, TWO_ROWS,
};
use crate::realization::{centralizer_check, centralizer_dimension, MonomialBasis};
use crate::scalars::Rational;
use crate::tableaux::{enumerate_ssmpt, shapes_mp, MPModule};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20240611;

/// Failures kept verbatim in a report; the rest are only counted.
const MAX_LISTED_FAILURES: usize = 10;

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    /// Number of individual checks performed.
    pub checked: usize,
    /// Number of checks that failed.
    pub failed: usize,
    /// Descriptions of the first failures.
    pub failures: Vec<String>,
    /// Short summary of what was checked.
    pub summary: String,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_LISTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} ({} checks",
            self.name, self.summary, self.checked
        )?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        write!(f, ")")?;
        for line in &self.failures {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// The names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "change-of-basis",
    "snapshot",
    "dimension",
    "generators",
    "realization",
    "modules",
    "nbw",
    "subgroups",
    "gamma-fibers",
    "associativity",
];

/// Parameters shared by the suites; each suite reads the ones it needs.
#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub r: usize,
    pub k: usize,
    pub n: usize,
    pub seed: u64,
    /// Sample size for sampled suites; `None` means the suite default
    /// (exhaustive where that is feasible).
    pub samples: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            r: 2,
            k: 2,
            n: 5,
            seed: DEFAULT_SEED,
            samples: None,
        }
    }
}

/// Runs the named suite.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "change-of-basis" => change_of_basis(p.r, p.k, sample_plan(p, 2)),
        "snapshot" => snapshot_independence(p.r, p.k, sample_plan(p, 2)),
        "dimension" => dimension_identity(p.r, p.k),
        "generators" => generators(p.r, p.k),
        "realization" => realization(p.n, p.r, p.k),
        "modules" => modules(p.n, p.r, p.k),
        "nbw" => nbw_subadditivity(p.r, p.k),
        "subgroups" => subgroup_sizes(p.samples.unwrap_or(50), p.r, p.seed),
        "gamma-fibers" => gamma_fibers(p.samples.unwrap_or(50), p.r, p.seed),
        "associativity" => associativity(p.r, p.k, p.samples.unwrap_or(200), p.seed),
        _ => Err(Error::Usage(format!(
            "unknown suite {name:?}; available: {}",
            SUITES.join(", ")
        ))),
    }
}

/// Exhaustive for `r` up to `exhaustive_r` unless a sample size is given.
fn sample_plan(p: &SuiteParams, exhaustive_r: usize) -> Option<(usize, u64)> {
    match p.samples {
        Some(s) => Some((s, p.seed)),
        None if p.r <= exhaustive_r => None,
        None => Some((200, p.seed)),
    }
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// A seeded generator for the random instances used by the suites.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random composition of `r` into `k` parts (each unit placed in a
/// uniformly chosen part).
pub fn random_composition(rng: &mut impl Rng, r: usize, k: usize) -> Composition {
    let mut parts = vec![0; k];
    for _ in 0..r {
        parts[rng.gen_range(0..k)] += 1;
    }
    Composition::new(parts)
}

/// A random set partition of `len` points as a restricted growth string.
fn random_labels(rng: &mut impl Rng, len: usize) -> Vec<usize> {
    let mut labels = Vec::with_capacity(len);
    let mut next = 0;
    for _ in 0..len {
        let l = rng.gen_range(0..=next);
        if l == next {
            next += 1;
        }
        labels.push(l);
    }
    labels
}

/// A random two-row set partition of `[r] ∪ [r̄]`.
pub fn random_set_partition(rng: &mut impl Rng, r: usize) -> SetPartition {
    SetPartition::from_labels(r, TWO_ROWS, &random_labels(rng, 2 * r))
}

/// A random `ν` whose top restriction equals the bottom restriction of
/// `pi`: the bottom row gets a random partition, and every block of the
/// shared row either stays alone or joins a distinct bottom group.
pub fn random_compatible(rng: &mut impl Rng, pi: &SetPartition) -> SetPartition {
    let r = pi.r();
    let pi_labels = pi.labels();
    // groups of the middle row, in order of first appearance
    let mut mid: Vec<usize> = Vec::new();
    let mid_group: Vec<usize> = pi_labels[r..]
        .iter()
        .map(|l| match mid.iter().position(|m| m == l) {
            Some(p) => p,
            None => {
                mid.push(*l);
                mid.len() - 1
            }
        })
        .collect();
    let bottom = random_labels(rng, r);
    let bottom_groups = bottom.iter().max().map_or(0, |m| m + 1);
    let mut free: Vec<usize> = (0..bottom_groups).collect();
    free.shuffle(rng);
    let mut target = Vec::with_capacity(mid.len());
    for _ in 0..mid.len() {
        if !free.is_empty() && rng.gen_bool(0.5) {
            target.push(free.pop().expect("non-empty"));
        } else {
            target.push(bottom_groups + target.len());
        }
    }
    let labels: Vec<usize> = mid_group
        .iter()
        .map(|&g| target[g])
        .chain(bottom.iter().copied())
        .collect();
    SetPartition::from_labels(r, TWO_ROWS, &labels)
}

/// A uniformly random element of `enumerate_msp_with(a, b)`.
fn random_msp_with(rng: &mut impl Rng, a: &Composition, b: &Composition) -> MultisetPartition {
    enumerate_msp_with(a, b)
        .choose(rng)
        .expect("every pair of compositions of r has a multiset partition")
        .clone()
}

/// `count` pairs `(p, q)` with `q` composable after `p`, or every pair of
/// `Π̃_{2(r),k}` when `plan` is `None`.
fn pairs(
    r: usize,
    k: usize,
    plan: Option<(usize, u64)>,
) -> Result<Vec<(MultisetPartition, MultisetPartition)>> {
    let all = enumerate_msp(r, k)?;
    Ok(match plan {
        None => all
            .iter()
            .flat_map(|p| all.iter().map(move |q| (p.clone(), q.clone())))
            .collect(),
        Some((count, seed)) => {
            let mut rng = rng(seed);
            (0..count)
                .map(|_| {
                    let p = all.choose(&mut rng).expect("non-empty").clone();
                    let c = random_composition(&mut rng, r, k);
                    let q = random_msp_with(&mut rng, &p.bottom_composition(), &c);
                    (p, q)
                })
                .collect()
        }
    })
}

fn scope(plan: Option<(usize, u64)>, r: usize, k: usize) -> String {
    match plan {
        None => format!("all pairs at (r,k) = ({r},{k})"),
        Some((count, seed)) => format!("{count} random pairs at (r,k) = ({r},{k}), seed {seed}"),
    }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// `φ(O_p·O_q) = φ(O_p)·φ(O_q)` with `φ(O_p) = ω(p) X_p`.
pub fn change_of_basis(r: usize, k: usize, plan: Option<(usize, u64)>) -> Result<SuiteReport> {
    let pairs = pairs(r, k, plan)?;
    let results: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|(p, q)| {
            let lhs = o_to_x(&olike_product(p, q)?)?;
            let fp = o_to_x(&MPElement::basis_element(MPBasis::OrbitLike, p.clone()))?;
            let fq = o_to_x(&MPElement::basis_element(MPBasis::OrbitLike, q.clone()))?;
            Ok(lhs == multiply_mp(&fp, &fq)?)
        })
        .collect();
    let mut rep = SuiteReport::new("change-of-basis");
    for ((p, q), ok) in pairs.iter().zip(results) {
        rep.check(ok?, || {
            format!("φ(O_p O_q) ≠ φ(O_p) φ(O_q) for p = {p}, q = {q}")
        });
    }
    rep.summary = scope(plan, r, k);
    Ok(rep)
}

/// Every snapshot of `D_p·D_q` gives the same product.
pub fn snapshot_independence(
    r: usize,
    k: usize,
    plan: Option<(usize, u64)>,
) -> Result<SuiteReport> {
    let pairs = pairs(r, k, plan)?;
    let results: Vec<Result<bool>> = pairs
        .par_iter()
        .map(|(p, q)| snapshot_independence_check(p, q))
        .collect();
    let mut rep = SuiteReport::new("snapshot");
    for ((p, q), ok) in pairs.iter().zip(results) {
        rep.check(ok?, || format!("snapshots disagree for p = {p}, q = {q}"));
    }
    rep.summary = scope(plan, r, k);
    Ok(rep)
}

/// `|Π̃_{2(r),k}| = Σ_λ (#SSMPT_{λ,r,k})²` with `n = 2r`.
pub fn dimension_identity(r: usize, k: usize) -> Result<SuiteReport> {
    let dim = enumerate_msp(r, k)?.len();
    let mut sum = 0;
    for lambda in shapes_mp(2 * r, r, k)? {
        sum += enumerate_ssmpt(&lambda, r, k)?.len().pow(2);
    }
    let mut rep = SuiteReport::new("dimension");
    rep.check(dim == sum, || format!("|Π̃| = {dim} but Σ d² = {sum}"));
    rep.summary = format!("(r,k) = ({r},{k}): |Π̃| = {dim}, Σ_λ d_λ² = {sum}");
    Ok(rep)
}

/// The generating set spans the whole algebra.
pub fn generators(r: usize, k: usize) -> Result<SuiteReport> {
    let gens: Vec<MPElement> = theta_generators(r, k)?
        .into_iter()
        .map(|p| MPElement::basis_element(MPBasis::DiagramLike, p))
        .collect();
    let closure = span_closure(&gens, r, k)?;
    let mut rep = SuiteReport::new("generators");
    rep.check(closure.dimension == closure.full_dimension, || {
        format!(
            "closure has dimension {} of {}",
            closure.dimension, closure.full_dimension
        )
    });
    rep.summary = format!(
        "(r,k) = ({r},{k}): {} generators span {} of {}",
        gens.len(),
        closure.dimension,
        closure.full_dimension
    );
    Ok(rep)
}

fn evaluate_combination(
    e: &MPElement,
    n: usize,
    index: &BTreeMap<MultisetPartition, usize>,
    mats: &[Matrix],
    d: usize,
) -> Matrix {
    let mut out = Matrix::zeros(d, d);
    for (t, c) in e.evaluate(n as i64) {
        out = out.add(&mats[index[&t]].scale(&c));
    }
    out
}

/// The monomial realization at `x = n`: injective on the diagram-like
/// basis, multiplicative, inside the centralizer of `𝔖_n`, and the
/// centralizer has the dimension of the algebra.
pub fn realization(n: usize, r: usize, k: usize) -> Result<SuiteReport> {
    let all = enumerate_msp(r, k)?;
    let basis = MonomialBasis::new(n, r, k)?;
    let d = basis.len();
    let mats: Vec<Matrix> = all
        .par_iter()
        .map(|p| basis.mp_matrix(p))
        .collect::<Result<_>>()?;
    let index: BTreeMap<MultisetPartition, usize> = all
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let mut rep = SuiteReport::new("realization");

    let rank = rank_rational(mats.iter().map(Matrix::flatten));
    rep.check(rank == all.len(), || {
        format!("images have rank {rank} of {}", all.len())
    });

    let products: Vec<Result<bool>> = (0..all.len() * all.len())
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / all.len(), ij % all.len());
            let prod = dlike_product(&all[i], &all[j])?;
            Ok(&mats[i] * &mats[j] == evaluate_combination(&prod, n, &index, &mats, d))
        })
        .collect();
    for (ij, ok) in products.into_iter().enumerate() {
        let (i, j) = (ij / all.len(), ij % all.len());
        rep.check(ok?, || {
            format!("M(p)M(q) ≠ M(pq) for p = {}, q = {}", all[i], all[j])
        });
    }

    for (p, m) in all.iter().zip(&mats) {
        rep.check(centralizer_check(m, n, r, k)?, || {
            format!("M({p}) does not commute with 𝔖_{n}")
        });
    }
    let cdim = centralizer_dimension(n, r, k)?;
    rep.check(cdim == all.len(), || {
        format!("centralizer dimension {cdim} ≠ {}", all.len())
    });
    rep.summary = format!(
        "(n,r,k) = ({n},{r},{k}): {} matrices of size {d}, rank {rank}, centralizer dimension {cdim}",
        all.len()
    );
    Ok(rep)
}

/// The irreducible modules at `x = n`: every module matrix table respects
/// the products, the images are full matrix algebras, and the dimensions
/// square-sum to the algebra dimension.
pub fn modules(n: usize, r: usize, k: usize) -> Result<SuiteReport> {
    let all = enumerate_msp(r, k)?;
    let index: BTreeMap<MultisetPartition, usize> = all
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let products: Vec<MPElement> = (0..all.len() * all.len())
        .into_par_iter()
        .map(|ij| dlike_product(&all[ij / all.len()], &all[ij % all.len()]))
        .collect::<Result<_>>()?;
    let mut rep = SuiteReport::new("modules");
    let mut dims = Vec::new();
    for lambda in shapes_mp(n, r, k)? {
        let mut module = MPModule::new(&lambda, r, k)?;
        let d = module.dim();
        dims.push(format!("{lambda}:{d}"));
        let mats: Vec<Matrix> = all
            .iter()
            .map(|p| module.matrix(p))
            .collect::<Result<_>>()?;
        let rank = rank_rational(mats.iter().map(Matrix::flatten));
        rep.check(rank == d * d, || {
            format!("{lambda}: image has dimension {rank}, expected {}", d * d)
        });
        for (ij, prod) in products.iter().enumerate() {
            let (i, j) = (ij / all.len(), ij % all.len());
            let ok = &mats[i] * &mats[j] == evaluate_combination(prod, n, &index, &mats, d);
            rep.check(ok, || {
                format!("{lambda}: table fails for {} · {}", all[i], all[j])
            });
        }
    }
    let total: usize = dims
        .iter()
        .map(|s| {
            s.rsplit(':')
                .next()
                .and_then(|d| d.parse::<usize>().ok())
                .unwrap_or(0)
                .pow(2)
        })
        .sum();
    rep.check(total == all.len(), || {
        format!("Σ d² = {total} ≠ {}", all.len())
    });
    rep.summary = format!(
        "(n,r,k) = ({n},{r},{k}): dimensions {} with Σ d² = {total}",
        dims.join(" ")
    );
    Ok(rep)
}

/// Nonbasic blocks as a sorted multiset.
fn nonbasic_multiset(p: &MultisetPartition) -> Vec<Vec<Vertex>> {
    let mut blocks = nonbasic_profile(p).nonbasic_blocks;
    blocks.sort();
    blocks
}

/// Every `D_ν` in `D_p·D_q` has `nbw(ν) ≤ nbw(p) + nbw(q)`, with equality
/// exactly when the nonbasic blocks of `ν` are those of `p` and `q`
/// together. Exhaustive over composable pairs.
pub fn nbw_subadditivity(r: usize, k: usize) -> Result<SuiteReport> {
    let all = enumerate_msp(r, k)?;
    let mut by_top: BTreeMap<Composition, Vec<&MultisetPartition>> = BTreeMap::new();
    for q in &all {
        by_top.entry(q.top_composition()).or_default().push(q);
    }
    let pairs: Vec<(&MultisetPartition, &MultisetPartition)> = all
        .iter()
        .flat_map(|p| by_top[&p.bottom_composition()].iter().map(move |q| (p, *q)))
        .collect();
    let outcomes: Vec<Result<Vec<String>>> = pairs
        .par_iter()
        .map(|(p, q)| {
            let bound = nonbasic_profile(p).nbw + nonbasic_profile(q).nbw;
            let mut union = nonbasic_multiset(p);
            union.extend(nonbasic_multiset(q));
            union.sort();
            let mut bad = Vec::new();
            for nu in dlike_product(p, q)?.terms().keys() {
                let w = nonbasic_profile(nu).nbw;
                let same = nonbasic_multiset(nu) == union;
                if w > bound || (w == bound) != same {
                    bad.push(format!(
                        "{p} · {q} ∋ {nu}: nbw {w}, bound {bound}, N-equality {same}"
                    ));
                }
            }
            Ok(bad)
        })
        .collect();
    let mut rep = SuiteReport::new("nbw");
    for bad in outcomes {
        let bad = bad?;
        if bad.is_empty() {
            rep.check(true, String::new);
        }
        for b in bad {
            rep.check(false, || b);
        }
    }
    rep.summary = format!("all {} composable pairs at (r,k) = ({r},{k})", pairs.len());
    Ok(rep)
}

/// The six subgroup size formulas on random instances with `1 ≤ r ≤ max_r`
/// and `k ∈ {1, 2, 3}`.
pub fn subgroup_sizes(count: usize, max_r: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut rep = SuiteReport::new("subgroups");
    for _ in 0..count {
        let r = rng.gen_range(1..=max_r.max(1));
        let k = rng.gen_range(1..=3);
        let pi = random_set_partition(&mut rng, r);
        let nu = random_compatible(&mut rng, &pi);
        let (a, b, c) = (
            random_composition(&mut rng, r, k),
            random_composition(&mut rng, r, k),
            random_composition(&mut rng, r, k),
        );
        let report = subgroup_report(&pi, &nu, &a, &b, &c)?;
        rep.check(report.holds(), || {
            format!("π = {pi}, ν = {nu}, a = {a:?}, b = {b:?}, c = {c:?}: {report:?}")
        });
    }
    rep.summary = format!("{count} random instances with r ≤ {max_r}, seed {seed}");
    Ok(rep)
}

/// The fiber size formula of `κ_{a,b,c}` on `Γ^π_ν` on random non-empty
/// fibers (the fiber of the image of a random `γ ∈ Γ^π_ν`).
pub fn gamma_fibers(count: usize, max_r: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = rng(seed);
    let mut rep = SuiteReport::new("gamma-fibers");
    for _ in 0..count {
        let r = rng.gen_range(1..=max_r.max(1));
        let k = rng.gen_range(1..=3);
        let pi = random_set_partition(&mut rng, r);
        let nu = random_compatible(&mut rng, &pi);
        let (a, b, c) = (
            random_composition(&mut rng, r, k),
            random_composition(&mut rng, r, k),
            random_composition(&mut rng, r, k),
        );
        let gammas = gamma_set(&pi, &nu)?;
        let g = gammas.choose(&mut rng).expect("Γ contains π ∗ ν");
        let mu = kappa3(&a, &b, Some(&c), g)?;
        let size = gamma_fiber_size(&pi, &nu, &mu, &a, &b, &c)?;
        let formula = gamma_fiber_size_formula(&pi, &nu, &mu, &a, &b, &c)?;
        rep.check(Rational::from_integer(size.into()) == formula, || {
            format!("π = {pi}, ν = {nu}, μ = {mu}: counted {size}, formula {formula}")
        });
    }
    rep.summary = format!("{count} random non-empty fibers with r ≤ {max_r}, seed {seed}");
    Ok(rep)
}

/// `(pq)s = p(qs)` in each of the three bases on random composable triples.
pub fn associativity(r: usize, k: usize, count: usize, seed: u64) -> Result<SuiteReport> {
    let all = enumerate_msp(r, k)?;
    let mut rng = rng(seed);
    let triples: Vec<[MultisetPartition; 3]> = (0..count)
        .map(|_| {
            let p = all.choose(&mut rng).expect("non-empty").clone();
            let c = random_composition(&mut rng, r, k);
            let q = random_msp_with(&mut rng, &p.bottom_composition(), &c);
            let d = random_composition(&mut rng, r, k);
            let s = random_msp_with(&mut rng, &c, &d);
            [p, q, s]
        })
        .collect();
    let bases = [MPBasis::DiagramLike, MPBasis::OrbitLike, MPBasis::Orbit];
    let outcomes: Vec<Result<[bool; 3]>> = triples
        .par_iter()
        .map(|t| {
            let mut out = [false; 3];
            for (slot, basis) in out.iter_mut().zip(bases) {
                let [p, q, s] = t.clone().map(|x| MPElement::basis_element(basis, x));
                let left = multiply_mp(&multiply_mp(&p, &q)?, &s)?;
                let right = multiply_mp(&p, &multiply_mp(&q, &s)?)?;
                *slot = left == right;
            }
            Ok(out)
        })
        .collect();
    let mut rep = SuiteReport::new("associativity");
    for (t, ok) in triples.iter().zip(outcomes) {
        for (basis, good) in bases.iter().zip(ok?) {
            rep.check(good, || {
                format!(
                    "basis {}: ({} {}) {} differs",
                    basis.tag(),
                    t[0],
                    t[1],
                    t[2]
                )
            });
        }
    }
    rep.summary = format!("{count} random triples at (r,k) = ({r},{k}) in D, O and X, seed {seed}");
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition_algebra::row_as_bottom;
    use crate::partitions::Row;

    #[test]
    fn random_compatible_matches_middle_row() {
        let mut g = rng(7);
        for _ in 0..200 {
            let r = g.gen_range(1..=4);
            let pi = random_set_partition(&mut g, r);
            let nu = random_compatible(&mut g, &pi);
            assert_eq!(
                row_as_bottom(&pi, Row::Bottom),
                row_as_bottom(&nu, Row::Top)
            );
        }
    }

    #[test]
    fn small_suites_pass() {
        assert!(change_of_basis(1, 2, None).unwrap().passed());
        assert!(dimension_identity(2, 1).unwrap().passed());
        assert!(nbw_subadditivity(2, 1).unwrap().passed());
        assert!(realization(2, 1, 2).unwrap().passed());
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        assert!(run_suite("nope", &SuiteParams::default())
            .unwrap_err()
            .is_usage());
    }
}
