//! Enumerating set partitions and multiset partitions, and the coloring map
//! that collapses one onto the other.
//!
//! Run with `cargo run --example enumerate`.

use mpdiag::partitions::{
    enumerate_msp, enumerate_set_partitions, kappa, orbit, Composition, SetPartition,
};

fn main() -> mpdiag::Result<()> {
    println!("r  |Π_2r| (Bell numbers B(2r))");
    for r in 1..=4 {
        println!("{r}  {}", enumerate_set_partitions(r)?.len());
    }

    println!("\n|Π̃_2(r),k|: multiset partitions of two rows of r colored points");
    println!("r\\k  1     2     3");
    for r in 1..=3 {
        let counts: Vec<String> = (1..=3)
            .map(|k| format!("{:<5}", enumerate_msp(r, k).unwrap().len()))
            .collect();
        println!("{r}    {}", counts.join(" "));
    }

    // κ_{a,b} colors the top row by a and the bottom row by b; its fibers
    // are orbits of the Young subgroup S_a × S_b.
    let a = Composition::new(vec![2, 1]);
    let b = Composition::new(vec![1, 2]);
    let p = SetPartition::parse("{{1,2,-1},{3,-2},{-3}}")?;
    let colored = kappa(&a, &b, &p)?;
    println!("\nκ_{{{a},{b}}}({p}) = {colored}");
    let fiber = orbit(&p, &a, &b)?;
    println!("its fiber has {} set partitions:", fiber.len());
    for q in &fiber {
        println!("  {q}");
    }
    Ok(())
}
