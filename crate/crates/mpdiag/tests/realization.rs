//! Tensor and polynomial realizations checked against the abstract
//! products, and the centralizer dimension against an orbit count.

use std::collections::BTreeSet;

use mpdiag::linalg::Matrix;
use mpdiag::msp_algebra::dlike_product;
use mpdiag::partition_algebra::{diagram_product_single, orbit_product_single};
use mpdiag::partitions::{enumerate_msp, enumerate_set_partitions, Composition, Permutation};
use mpdiag::realization::*;
use mpdiag::scalars::rint;

#[test]
fn orbit_matrices_multiply_like_the_orbit_basis() {
    let all = enumerate_set_partitions(2).unwrap();
    for n in [4usize, 5] {
        let mats: Vec<Matrix> = all.iter().map(|p| orbit_matrix(p, n).unwrap()).collect();
        for (i, p) in all.iter().enumerate() {
            for (j, q) in all.iter().enumerate() {
                let mut rhs = Matrix::zeros(n * n, n * n);
                for (g, c) in orbit_product_single(p, q).unwrap().iter() {
                    let gi = all.binary_search(g).unwrap();
                    rhs = rhs.add(&mats[gi].scale(&c.evaluate(n as i64)));
                }
                assert_eq!(&mats[i] * &mats[j], rhs, "n = {n}: {p} * {q}");
            }
        }
    }
}

#[test]
fn diagram_matrices_multiply_like_diagrams() {
    let n = 5;
    let all = enumerate_set_partitions(2).unwrap();
    let mats: Vec<Matrix> = all.iter().map(|p| diagram_matrix(p, n).unwrap()).collect();
    for (i, p) in all.iter().enumerate() {
        for (j, q) in all.iter().enumerate() {
            let (c, g) = diagram_product_single(p, q).unwrap();
            let gi = all.binary_search(&g).unwrap();
            assert_eq!(
                &mats[i] * &mats[j],
                mats[gi].scale(&rint(5i64.pow(c as u32)))
            );
        }
    }
}

#[test]
fn diagram_matrices_commute_with_sn() {
    let (n, r) = (3, 2);
    let gens: Vec<Matrix> = (1..n)
        .map(|s| {
            sn_tensor_matrix(&Permutation::from_cycles(n, &[&[s, s + 1]]).unwrap(), r).unwrap()
        })
        .collect();
    for p in enumerate_set_partitions(r).unwrap() {
        let m = diagram_matrix(&p, n).unwrap();
        for g in &gens {
            assert_eq!(g * &m, &m * g, "{p}");
        }
    }
}

#[test]
fn one_color_recovers_the_symmetric_power() {
    // With k = 1 the monomials of degree r are the S_r-orbits of tensors,
    // and D for the all-bars diagram is the identity.
    let (n, r) = (3, 2);
    let basis = MonomialBasis::new(n, r, 1).unwrap();
    let bars = mpdiag::msp_algebra::vertical_bars(&Composition::new(vec![r]));
    assert_eq!(
        basis.mp_matrix(&bars).unwrap(),
        Matrix::identity(basis.len())
    );
    assert_eq!(basis.len(), 6);
}

#[test]
fn realization_is_multiplicative_at_n4_r2_k1() {
    let (n, r, k) = (4usize, 2usize, 1usize);
    let all = enumerate_msp(r, k).unwrap();
    let basis = MonomialBasis::new(n, r, k).unwrap();
    let mats: Vec<Matrix> = all.iter().map(|p| basis.mp_matrix(p).unwrap()).collect();
    for (i, p) in all.iter().enumerate() {
        for (j, q) in all.iter().enumerate() {
            let mut rhs = Matrix::zeros(basis.len(), basis.len());
            for (t, c) in dlike_product(p, q).unwrap().evaluate(n as i64) {
                rhs = rhs.add(&mats[all.binary_search(&t).unwrap()].scale(&c));
            }
            assert_eq!(&mats[i] * &mats[j], rhs, "{p} * {q}");
        }
        assert!(supported_in_block(
            &mats[i],
            &basis,
            &p.top_composition(),
            &p.bottom_composition()
        ));
    }
}

/// Number of `𝔖_n`-orbits on pairs of monomials: the dimension of the
/// centralizer of a permutation representation.
fn orbit_pairs(n: usize, r: usize, k: usize) -> usize {
    let basis = MonomialBasis::new(n, r, k).unwrap();
    let group = Permutation::all(n).unwrap();
    let monos = basis.monomials();
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for x in monos {
        for y in monos {
            if seen.contains(&(x.clone(), y.clone())) {
                continue;
            }
            orbits += 1;
            for g in &group {
                seen.insert((x.permute_rows(g), y.permute_rows(g)));
            }
        }
    }
    orbits
}

#[test]
fn centralizer_dimension_matches_orbit_count() {
    for (n, r, k) in [(5, 1, 2), (4, 2, 1), (3, 2, 2)] {
        assert_eq!(
            centralizer_dimension(n, r, k).unwrap(),
            orbit_pairs(n, r, k),
            "({n},{r},{k})"
        );
    }
    assert_eq!(
        centralizer_dimension(4, 2, 1).unwrap(),
        enumerate_msp(2, 1).unwrap().len()
    );
}

#[test]
fn tensor_bound_is_enforced() {
    let err = tensor_indices(9, 4).unwrap_err();
    assert!(matches!(err, mpdiag::Error::Bound { .. }));
}
