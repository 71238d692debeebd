//! Multiplying multiset partition diagrams through a snapshot: a pair of
//! set partitions that color to the two factors, multiplied in the
//! partition algebra and averaged over the middle Young subgroup.
//!
//! Run with `cargo run --example snapshot_product`.

use mpdiag::msp_algebra::{
    dlike_product, dlike_product_via_projection, olike_product, snapshot_independence_check,
    Snapshot,
};
use mpdiag::partitions::MultisetPartition;

fn main() -> mpdiag::Result<()> {
    let p = MultisetPartition::parse("[[1,1,-1],[-1,-2],[1],[2,-2]]", Some(2))?;
    let q = MultisetPartition::parse("[[1,-2,-2],[2,-2,-2],[1],[2]]", Some(2))?;

    let snapshot = Snapshot::representative(&p, &q)?.expect("the middle compositions agree");
    println!("snapshot of ({p}, {q}):");
    println!("  top    {}", snapshot.top);
    println!("  bottom {}", snapshot.bottom);

    let d = dlike_product(&p, &q)?;
    println!("\nD_p · D_q = {d}");
    println!(
        "same as the projection of the partition algebra product: {}",
        d == dlike_product_via_projection(&p, &q)?
    );
    println!(
        "independent of the snapshot chosen: {}",
        snapshot_independence_check(&p, &q)?
    );

    println!("\nO_p · O_q = {}", olike_product(&p, &q)?);

    // Diagrams whose middle compositions differ multiply to zero.
    let r = MultisetPartition::parse("[[1,1,-1,-1]]", Some(2))?;
    let s = MultisetPartition::parse("[[2,2,-2,-2]]", Some(2))?;
    println!("\nD_{r} · D_{s} = {}", dlike_product(&r, &s)?);
    Ok(())
}
