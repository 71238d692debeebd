//! Tableau enumeration counts and the module structure of `P_r^λ` and
//! `MP_{r,k}^λ`, checked against the algebra products.

use mpdiag::linalg::rank_rational;
use mpdiag::msp_algebra::dlike_product;
use mpdiag::partitions::{enumerate_msp, enumerate_set_partitions, Composition};
use mpdiag::scalars::{rat, Rational};
use mpdiag::tableaux::*;

fn tab(s: &str) -> Tableau {
    Tableau::parse(s).unwrap()
}

/// Number of standard Young tableaux by the hook length formula.
fn hook_count(shape: &[usize]) -> u64 {
    let n: usize = shape.iter().sum();
    let mut num: u64 = (1..=n as u64).product();
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
            num /= (arm + leg + 1) as u64;
        }
    }
    num
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn sspt_counts_by_double_count() {
    // choose a content ρ, then which |λ*| of its blocks go above the first
    // row, then a standard Young tableau of shape λ* on them
    for r in 1..=4usize {
        let n = 2 * r;
        let stirling: Vec<u64> = {
            let mut s = vec![0u64; r + 1];
            for labels in mpdiag::partitions::set_partition_labels(r) {
                s[labels.iter().max().map_or(0, |m| m + 1)] += 1;
            }
            s
        };
        for lambda in IntegerPartition::shapes(n, r) {
            let m = lambda.star_size() as u64;
            let expected: u64 = (0..=r)
                .map(|l| {
                    stirling[l]
                        * if (l as u64) >= m {
                            binomial(l as u64, m)
                        } else {
                            0
                        }
                })
                .sum::<u64>()
                * hook_count(lambda.star());
            assert_eq!(
                enumerate_sspt(&lambda, r).unwrap().len() as u64,
                expected,
                "{lambda}"
            );
        }
    }
}

#[test]
fn squares_sum_to_bell() {
    for r in 1..=4usize {
        let total: usize = shapes_p(2 * r, r)
            .unwrap()
            .iter()
            .map(|l| enumerate_sspt(l, r).unwrap().len().pow(2))
            .sum();
        assert_eq!(total, enumerate_set_partitions(r).unwrap().len());
    }
}

#[test]
fn k1_semistandard_counts_match_standard_quotient() {
    // With one color every entry is 1, so a semistandard tableau is a
    // partition of r into block sizes placed with strictly increasing
    // columns; it is the image of the standard tableaux under κ_(r) with
    // column repeats removed.
    for r in 1..=4usize {
        for lambda in IntegerPartition::shapes(2 * r, r) {
            let a = Composition::new(vec![r]);
            let images: std::collections::BTreeSet<Tableau> = enumerate_sspt(&lambda, r)
                .unwrap()
                .iter()
                .map(|t| t.color(&a))
                .filter(|t| t.is_semistandard(r, 1))
                .collect();
            let direct = enumerate_ssmpt(&lambda, r, 1).unwrap();
            assert_eq!(images.into_iter().collect::<Vec<_>>(), direct, "{lambda}");
        }
    }
}

#[test]
fn dimension_identity() {
    for (r, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (2, 3)] {
        let total: usize = shapes_mp(2 * r, r, k)
            .unwrap()
            .iter()
            .map(|l| enumerate_ssmpt(l, r, k).unwrap().len().pow(2))
            .sum();
        assert_eq!(
            total,
            enumerate_msp(r, k).unwrap().len(),
            "r = {r}, k = {k}"
        );
    }
}

#[test]
fn coloring_example_gives_equal_w() {
    let a = Composition::new(vec![3, 1]);
    let s1 = tab("(([], [], [], []) / ([1], [4]) / ([2,3]))");
    let s2 = tab("(([], [], [], []) / ([3], [4]) / ([1,2]))");
    assert_eq!(s1.color(&a), s2.color(&a));
    let w = w_vector(&s1.color(&a), 2).unwrap();
    assert!(!w.is_empty());
}

#[test]
fn mp_module_is_a_representation_r2k2() {
    let (r, k, n) = (2usize, 2usize, 5i64);
    let all = enumerate_msp(r, k).unwrap();
    let mut total_sq = 0;
    for lambda in shapes_mp(n as usize, r, k).unwrap() {
        let mut m = MPModule::new(&lambda, r, k).unwrap();
        let d = m.dim();
        total_sq += d * d;
        let mats: Vec<_> = all.iter().map(|p| m.matrix(p).unwrap()).collect();
        // image spans all d×d matrices
        assert_eq!(
            rank_rational(mats.iter().map(|x| x.flatten())),
            d * d,
            "{lambda}"
        );
        for (i, p) in all.iter().enumerate() {
            for (j, q) in all.iter().enumerate() {
                let prod = dlike_product(p, q).unwrap();
                let mut rhs = mpdiag::linalg::Matrix::zeros(d, d);
                for (t, c) in prod.terms().iter() {
                    let ti = all.binary_search(t).unwrap();
                    rhs = rhs.add(&mats[ti].scale(&c.evaluate(n)));
                }
                assert_eq!(&mats[i] * &mats[j], rhs, "{lambda}: {p} * {q}");
            }
        }
    }
    assert_eq!(total_sq, all.len());
}

#[test]
fn painted_action_example() {
    let p =
        mpdiag::partitions::MultisetPartition::parse("[[1,1,-1],[1,-2],[-1],[-1],[2]]", Some(2))
            .unwrap();
    // shape as displayed (n = 4) and with n = 2r = 8
    for n_extra in [0usize, 4] {
        let pad = "[], ".repeat(n_extra);
        let tt = tab(&format!("(({pad}[], [1]) / ([1]) / ([1,2]))"));
        let target = tab(&format!("(({pad}[], [2]) / ([1]) / ([1,1]))"));
        let n = tt.n() as i64;
        let result = act_mp(&p, &tt).unwrap();
        let w = w_vector(&target, 2).unwrap();
        let c: Rational = rat(-n, 3);
        let expected: ModuleVector = w.iter().map(|(t, x)| (t.clone(), x * &c)).collect();
        assert_eq!(result, expected, "n = {n}");
    }
}
