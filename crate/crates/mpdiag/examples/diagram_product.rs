//! Diagram multiplication in the partition algebra, and the same product in
//! the orbit basis.
//!
//! Run with `cargo run --example diagram_product`.

use mpdiag::partition_algebra::{self as pa, diagram_product_single, PABasis, PAElement};
use mpdiag::partitions::SetPartition;

fn main() -> mpdiag::Result<()> {
    // Stacking p over q leaves two components trapped in the middle row,
    // so the product is n^2 times a single diagram.
    let p = SetPartition::parse("{{1,2,-1},{3,-2},{4,5,-4},{6},{7,-7},{-3,-5},{-6}}")?;
    let q = SetPartition::parse("{{1,-1,-2},{2,4},{3,5},{-3,-4,-5},{6},{7,-6,-7}}")?;
    let (loops, g) = diagram_product_single(&p, &q)?;
    println!("L_p · L_q = n^{loops} L_{g}");

    // The orbit basis multiplies with falling-factorial coefficients.
    let s = SetPartition::parse("{{1,-1},{2,-2}}")?;
    let t = SetPartition::parse("{{1,2,-1,-2}}")?;
    for (x, y) in [(&s, &s), (&s, &t), (&t, &t)] {
        let prod = pa::multiply(
            &PAElement::basis_element(PABasis::Orbit, x.clone()),
            &PAElement::basis_element(PABasis::Orbit, y.clone()),
        )?;
        println!("T_{x} · T_{y} = {prod}");
    }

    // Changing basis is Möbius inversion on the refinement order.
    let l = PAElement::basis_element(PABasis::Diagram, s.clone());
    let in_orbit = pa::diagram_to_orbit(&l)?;
    println!("\nL_{s} = {in_orbit}");
    let back = pa::orbit_to_diagram(&PAElement::basis_element(PABasis::Orbit, s))?;
    println!("T_{{{{1,-1}},{{2,-2}}}} = {back}");

    // The diagram basis product, evaluated at n = 3.
    let sq = pa::multiply(
        &PAElement::basis_element(PABasis::Diagram, t.clone()),
        &PAElement::basis_element(PABasis::Diagram, t),
    )?;
    for (d, c) in sq.evaluate(3) {
        println!("at n = 3: L·L has coefficient {c} on {d}");
    }
    Ok(())
}
