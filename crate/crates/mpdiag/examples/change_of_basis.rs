//! The three bases of the multiset partition algebra: diagram-like D,
//! orbit-like O, and the orbit basis X with its integral structure
//! constants.
//!
//! Run with `cargo run --example change_of_basis`.

use mpdiag::msp_algebra::{d_to_o, d_to_x, multiply_mp, o_to_x, omega, x_to_d, MPBasis, MPElement};
use mpdiag::partitions::MultisetPartition;
use mpdiag::scalars::fmt_rational;

fn main() -> mpdiag::Result<()> {
    let p = MultisetPartition::parse("[[1,-1],[1,-1],[2,2,-1,-2]]", Some(2))?;
    let dp = MPElement::basis_element(MPBasis::DiagramLike, p.clone());
    println!("D = {dp}");
    println!("  in O: {}", d_to_o(&dp)?);
    println!("  in X: {}", d_to_x(&dp)?);
    println!("  back: {}", x_to_d(&d_to_x(&dp)?)?);

    // X_p is O_p rescaled by ω(p).
    let op = MPElement::basis_element(MPBasis::OrbitLike, p.clone());
    println!(
        "\nω(p) = {}; O_p = {}",
        fmt_rational(&omega(&p)),
        o_to_x(&op)?
    );

    // Converting is multiplicative: both routes agree.
    let q = MultisetPartition::parse("[[1,1,-1],[1,-2],[2,-1],[-2]]", Some(2))?;
    let dq = MPElement::basis_element(MPBasis::DiagramLike, q);
    let direct = d_to_x(&multiply_mp(&dp, &dq)?)?;
    let via_x = multiply_mp(&d_to_x(&dp)?, &d_to_x(&dq)?)?;
    println!("\nX-coordinates of D_p · D_q:\n  {direct}");
    println!(
        "agrees with the product of X-coordinates: {}",
        direct == via_x
    );
    Ok(())
}
