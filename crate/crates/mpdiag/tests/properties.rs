//! Property tests for the structural invariants of both algebras.

use proptest::prelude::*;

use mpdiag::msp_algebra::*;
use mpdiag::partition_algebra::{self as pa, PABasis, PAElement};
use mpdiag::partitions::{kappa, Composition, MultisetPartition, SetPartition, TWO_ROWS};
use mpdiag::scalars::{rint, Poly};

/// Relabel arbitrary labels by order of first appearance.
fn normalize(raw: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    raw.iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(p) => p,
            None => {
                seen.push(*l);
                seen.len() - 1
            }
        })
        .collect()
}

fn set_partition(r: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0..2 * r, 2 * r)
        .prop_map(move |raw| SetPartition::from_labels(r, TWO_ROWS, &normalize(&raw)))
}

fn composition(r: usize, k: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=k as u32, r).prop_map(move |colors| {
        let mut colors = colors;
        colors.sort_unstable();
        Composition::from_colors(colors, k)
    })
}

/// A multiset partition with prescribed top composition `a` and random
/// bottom composition.
fn msp_with_top(a: Composition, r: usize, k: usize) -> impl Strategy<Value = MultisetPartition> {
    (composition(r, k), set_partition(r))
        .prop_map(move |(b, p)| kappa(&a, &b, &p).expect("valid coloring"))
}

/// Three multiset partitions that can be multiplied in sequence.
fn msp_chain(
    r: usize,
    k: usize,
) -> impl Strategy<Value = (MultisetPartition, MultisetPartition, MultisetPartition)> {
    composition(r, k)
        .prop_flat_map(move |a| msp_with_top(a, r, k))
        .prop_flat_map(move |p| (Just(p.clone()), msp_with_top(p.bottom_composition(), r, k)))
        .prop_flat_map(move |(p, q)| {
            (
                Just(p),
                Just(q.clone()),
                msp_with_top(q.bottom_composition(), r, k),
            )
        })
}

fn d(p: &MultisetPartition) -> MPElement {
    MPElement::basis_element(MPBasis::DiagramLike, p.clone())
}

fn l(p: &SetPartition) -> PAElement {
    PAElement::basis_element(PABasis::Diagram, p.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pa_diagram_product_is_associative(p in set_partition(3), q in set_partition(3), s in set_partition(3)) {
        let left = pa::multiply(&pa::multiply(&l(&p), &l(&q)).unwrap(), &l(&s)).unwrap();
        let right = pa::multiply(&l(&p), &pa::multiply(&l(&q), &l(&s)).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn pa_orbit_conversion_is_a_homomorphism(p in set_partition(3), q in set_partition(3)) {
        let direct = pa::diagram_to_orbit(&pa::multiply(&l(&p), &l(&q)).unwrap()).unwrap();
        let via_orbit = pa::multiply(
            &pa::diagram_to_orbit(&l(&p)).unwrap(),
            &pa::diagram_to_orbit(&l(&q)).unwrap(),
        ).unwrap();
        prop_assert_eq!(direct, via_orbit);
    }

    #[test]
    fn pa_conversions_are_inverse(p in set_partition(3)) {
        let t = pa::diagram_to_orbit(&l(&p)).unwrap();
        prop_assert_eq!(pa::orbit_to_diagram(&t).unwrap(), l(&p));
    }

    #[test]
    fn kappa_has_the_requested_compositions(
        a in composition(4, 3),
        b in composition(4, 3),
        p in set_partition(4),
    ) {
        let m = kappa(&a, &b, &p).unwrap();
        prop_assert_eq!(m.top_composition(), a);
        prop_assert_eq!(m.bottom_composition(), b);
    }

    #[test]
    fn mp_product_is_associative((p, q, s) in msp_chain(3, 2)) {
        let left = multiply_mp(&dlike_product(&p, &q).unwrap(), &d(&s)).unwrap();
        let right = multiply_mp(&d(&p), &dlike_product(&q, &s).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mp_product_matches_the_projection((p, q, _s) in msp_chain(3, 2)) {
        prop_assert_eq!(dlike_product(&p, &q).unwrap(), dlike_product_via_projection(&p, &q).unwrap());
        prop_assert_eq!(olike_product(&p, &q).unwrap(), olike_product_via_projection(&p, &q).unwrap());
        prop_assert!(snapshot_independence_check(&p, &q).unwrap());
    }

    #[test]
    fn mp_change_of_basis_is_a_homomorphism((p, q, _s) in msp_chain(3, 2)) {
        let direct = d_to_x(&dlike_product(&p, &q).unwrap()).unwrap();
        let via_x = multiply_mp(&d_to_x(&d(&p)).unwrap(), &d_to_x(&d(&q)).unwrap()).unwrap();
        prop_assert_eq!(direct, via_x);
    }

    #[test]
    fn mp_conversions_round_trip((p, _q, _s) in msp_chain(3, 3)) {
        let x = d_to_x(&d(&p)).unwrap();
        prop_assert_eq!(x_to_d(&x).unwrap(), d(&p));
        let o = d_to_o(&d(&p)).unwrap();
        prop_assert_eq!(o_to_d(&o).unwrap(), d(&p));
    }

    #[test]
    fn gamma_tilde_set_matches_brute_force((p, q, _s) in msp_chain(3, 2)) {
        prop_assert_eq!(gamma_tilde_set(&p, &q).unwrap(), gamma_tilde_set_brute_force(&p, &q).unwrap());
    }

    #[test]
    fn poly_division_identity(
        a in prop::collection::vec(-20i64..20, 0..6),
        b in prop::collection::vec(-20i64..20, 1..4),
    ) {
        let (a, b) = (Poly::from_ints(&a), Poly::from_ints(&b));
        prop_assume!(!b.is_zero());
        let (q, rem) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &rem, a.clone());
        prop_assert!(rem.degree() < b.degree() || rem.is_zero());
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(a.div_rem(&g).1.is_zero() && b.div_rem(&g).1.is_zero());
        }
    }

    #[test]
    fn poly_evaluation_is_a_ring_map(
        a in prop::collection::vec(-9i64..9, 0..5),
        b in prop::collection::vec(-9i64..9, 0..5),
        t in -6i64..6,
    ) {
        let (a, b) = (Poly::from_ints(&a), Poly::from_ints(&b));
        prop_assert_eq!((&a * &b).evaluate(t), a.evaluate(t) * b.evaluate(t));
        prop_assert_eq!((&a + &b).evaluate(t), a.evaluate(t) + b.evaluate(t));
        prop_assert_eq!(Poly::int(t).evaluate(0), rint(t));
    }
}
