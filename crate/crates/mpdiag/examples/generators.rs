//! Generators of the multiset partition algebra: the Q ladder, factoring a
//! diagram at a nonbasic block, and the span of the generating set.
//!
//! Run with `cargo run --release --example generators`.

use mpdiag::msp_algebra::{
    dlike_product, factor_lemma_check, generator_q, nonbasic_profile, span_closure,
    theta_generators, MPBasis, MPElement,
};
use mpdiag::partitions::{Composition, MultisetPartition, Vertex};

fn main() -> mpdiag::Result<()> {
    // Q_1 · Q_m = (m/b_1) x Q_m + ((b_1 - m)/b_1) Q_{m+1}
    let b = Composition::new(vec![4, 0, 2]);
    let q1 = generator_q(&b, 1)?;
    for m in 1..=3 {
        let qm = generator_q(&b, m)?;
        println!("Q_1 · Q_{m} = {}", dlike_product(&q1, &qm)?);
    }

    // Factor a diagram at a block with more than one unbarred and barred
    // entry; the product of the factors is D_p plus smaller terms.
    let p = MultisetPartition::parse("[[1,1,-1,-2],[2,2,-1,-2]]", Some(2))?;
    println!("\n{p}: nonbasic weight {}", nonbasic_profile(&p).nbw);
    let block: Vec<Vertex> = [1, 1, -1, -2]
        .into_iter()
        .map(Vertex::from_signed)
        .collect();
    let check = factor_lemma_check(&p, &block)?;
    let (left, right) = check.factorization.in_order();
    println!("  factors {left} · {right}");
    println!("  product {}", check.product);
    println!(
        "  coefficient of D_p: {}; other terms smaller: {}",
        check.coefficient, check.holds
    );

    // The generating set spans the whole algebra.
    for (r, k) in [(2, 2), (3, 2)] {
        let gens: Vec<MPElement> = theta_generators(r, k)?
            .into_iter()
            .map(|g| MPElement::basis_element(MPBasis::DiagramLike, g))
            .collect();
        let report = span_closure(&gens, r, k)?;
        println!(
            "\n(r, k) = ({r}, {k}): {} generators span dimension {} of {}",
            gens.len(),
            report.dimension,
            report.full_dimension
        );
    }
    Ok(())
}
