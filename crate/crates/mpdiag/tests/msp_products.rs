//! Products in the multiset partition algebra checked against independent
//! constructions: projection inside the partition algebra, brute-force
//! three-row filters, and transport through the change of basis.

use mpdiag::msp_algebra::*;
use mpdiag::partitions::{
    enumerate_msp, fiber_representative, kappa_fiber, MultisetPartition, SetPartition,
};
use mpdiag::scalars::{rat, Poly};

fn msp(s: &str, k: usize) -> MultisetPartition {
    MultisetPartition::parse(s, Some(k)).unwrap()
}

fn d(p: &MultisetPartition) -> MPElement {
    MPElement::basis_element(MPBasis::DiagramLike, p.clone())
}

#[test]
fn worked_snapshot_product() {
    let p = msp("[[1,1,-1],[-1,-2],[1],[2,-2]]", 2);
    let q = msp("[[1,-2,-2],[2,-2,-2],[1],[2]]", 2);
    let prod = dlike_product(&p, &q).unwrap();
    let quarter = Poly::constant(rat(1, 4));
    let mut expected = MPElement::zero(4, 2, MPBasis::DiagramLike);
    for (key, c) in [
        ("[[1,1,-2,-2],[2,-2,-2],[1]]", &Poly::x() * &quarter),
        ("[[1,1],[-2,-2],[2,-2,-2],[1]]", quarter.clone()),
        ("[[1,1,-2,-2],[-2,-2],[1],[2]]", quarter.clone()),
        ("[[1,1],[-2,-2,-2,-2],[1],[2]]", quarter.clone()),
    ] {
        expected = expected.add(&d(&msp(key, 2)).scale(&c)).unwrap();
    }
    assert_eq!(prod, expected);
    assert_eq!(prod, dlike_product_via_projection(&p, &q).unwrap());
}

#[test]
fn displayed_snapshots_agree() {
    let p = msp("[[1,1,-1],[-1,-2],[1],[2,-2]]", 2);
    let q = msp("[[1,-2,-2],[2,-2,-2],[1],[2]]", 2);
    let (a, b, c) = (
        p.top_composition(),
        p.bottom_composition(),
        q.bottom_composition(),
    );
    let reference = dlike_product(&p, &q).unwrap();
    for (pi, nu) in [
        (
            "{{1,2,-1},{-2,-3},{4,-4},{3}}",
            "{{1,-1,-2},{4,-3,-4},{2},{3}}",
        ),
        (
            "{{1,2,-1},{-2,-4},{4,-3},{3}}",
            "{{2,-1,-2},{4,-3,-4},{1},{3}}",
        ),
    ] {
        let s = Snapshot {
            top: SetPartition::parse(pi).unwrap(),
            bottom: SetPartition::parse(nu).unwrap(),
            mid_composition: b.clone(),
        };
        assert_eq!(snapshot_product(&s, &a, &c).unwrap(), reference);
    }
    assert!(snapshot_independence_check(&p, &q).unwrap());
}

#[test]
fn snapshot_independence_r2k2() {
    let all = enumerate_msp(2, 2).unwrap();
    for p in &all {
        for q in &all {
            assert!(snapshot_independence_check(p, q).unwrap(), "{p} {q}");
        }
    }
}

#[test]
fn change_of_basis_example() {
    let p = msp("[[1,-1],[1,-1],[2,2,-1,-2]]", 2);
    let x = d_to_x(&d(&p)).unwrap();
    let expected = [
        ("[[1,-1],[1,-1],[2,2,-1,-2]]", rat(1, 3)),
        ("[[1,1,-1,-1],[2,2,-1,-2]]", rat(1, 3)),
        ("[[1,-1],[1,2,2,-1,-1,-2]]", rat(2, 3)),
        ("[[1,1,2,2,-1,-1,-1,-2]]", rat(1, 1)),
    ];
    assert_eq!(x.terms().len(), expected.len());
    for (key, c) in expected {
        assert_eq!(x.coeff(&msp(key, 2)), Poly::constant(c), "{key}");
    }
    assert_eq!(omega(&msp("[[1,1,2,2,-1,-1,-1,-2]]", 2)), rat(1, 1));
}

#[test]
fn coarsening_counts_do_not_depend_on_representative() {
    for p in enumerate_msp(2, 2).unwrap() {
        let (a, b) = (p.top_composition(), p.bottom_composition());
        let reference = coarsening_counts(&p, &fiber_representative(&p)).unwrap();
        for pi in kappa_fiber(&p, &a, &b).unwrap() {
            assert_eq!(coarsening_counts(&p, &pi).unwrap(), reference);
        }
    }
}

#[test]
fn orbit_products_match_filters_and_transport() {
    for (r, k) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let all = enumerate_msp(r, k).unwrap();
        for p in &all {
            for q in &all {
                let direct = oz_orbit_product(p, q).unwrap();
                assert_eq!(
                    gamma_tilde_set(p, q).unwrap(),
                    gamma_tilde_set_brute_force(p, q).unwrap(),
                    "{p} {q}"
                );
                assert_eq!(direct, oz_orbit_product_brute_force(p, q).unwrap());
                // X_p X_q = φ(O_p O_q) / (ω(p) ω(q))
                let o = olike_product(p, q).unwrap();
                assert_eq!(o, olike_product_via_projection(p, q).unwrap(), "{p} {q}");
                let scale = (omega(p) * omega(q)).recip();
                let transported = o_to_x(&o).unwrap().scale(&Poly::constant(scale));
                assert_eq!(direct, transported, "{p} * {q}");
            }
        }
    }
}

#[test]
fn k1_orbit_products_match_partition_algebra() {
    use mpdiag::partition_algebra::orbit_product_single;
    let s = msp("[[1],[-1]]", 1);
    let bar = msp("[[1,-1]]", 1);
    for (p, q) in [(&s, &s), (&bar, &bar), (&s, &bar)] {
        let x = oz_orbit_product(p, q).unwrap();
        let t = orbit_product_single(&fiber_representative(p), &fiber_representative(q)).unwrap();
        assert_eq!(x.terms().len(), t.len());
        for (sp, c) in t.iter() {
            let key = mpdiag::partitions::kappa(&p.top_composition(), &q.bottom_composition(), sp)
                .unwrap();
            assert_eq!(&x.coeff(&key), c);
        }
    }
}

#[test]
fn q_ladder() {
    let b = mpdiag::partitions::Composition::new(vec![4, 0, 2]);
    let q1 = generator_q(&b, 1).unwrap();
    assert_eq!(
        q1,
        generator_p(1, 1, &mpdiag::partitions::Composition::new(vec![3, 0, 2])).unwrap()
    );
    for m in 1..=2usize {
        let qm = generator_q(&b, m).unwrap();
        let next = generator_q(&b, m + 1).unwrap();
        let lhs = dlike_product(&q1, &qm).unwrap();
        let rhs = d(&qm)
            .scale(&Poly::x().scale(&rat(m as i64, 4)))
            .add(&d(&next).scale(&Poly::constant(rat(4 - m as i64, 4))))
            .unwrap();
        assert_eq!(lhs, rhs, "m = {m}");
    }
}

#[test]
fn factorization_of_a_worked_example() {
    let p = msp("[[1,-1],[1,2,2,3,-1,-2],[3,-2,-2],[-2]]", 3);
    let b: Vec<_> = [1, 2, 2, 3, -1, -2]
        .iter()
        .map(|&v| mpdiag::partitions::Vertex::from_signed(v))
        .collect();
    let check = factor_lemma_check(&p, &b).unwrap();
    assert!(check.holds, "{}", check.product);
}
