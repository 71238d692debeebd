//! Irreducible modules: tableaux, straightening, and the action of
//! diagrams on set partition and multiset partition tableaux.
//!
//! Run with `cargo run --release --example modules`.

use mpdiag::msp_algebra::dlike_product;
use mpdiag::partitions::{enumerate_msp, MultisetPartition, SetPartition};
use mpdiag::scalars::fmt_rational;
use mpdiag::tableaux::{act_on_spt, shapes_mp, straighten, IntegerPartition, MPModule, Tableau};

fn main() -> mpdiag::Result<()> {
    // A non-standard tableau is a combination of standard ones.
    let t = Tableau::parse("(([], [], []) / ([2], [3]) / ([1]))")?;
    println!("{t} straightens to:");
    for (s, c) in straighten(&t) {
        println!("  {} * {s}", fmt_rational(&c));
    }

    // Diagrams acting on set partition tableaux: a permutation relabels the
    // content (and the result is straightened); a diagram that leaves a box
    // above the first row without a top vertex kills the tableau.
    let spt = Tableau::parse("(([], [], []) / ([1], [3]) / ([2]))")?;
    let swap = SetPartition::parse("{{1,-2},{2,-1},{3,-3}}")?;
    if let Some(res) = act_on_spt(&swap, &spt)? {
        println!(
            "\nL_{swap} · {spt} = {} * {}",
            fmt_rational(&res.coefficient),
            res.tableau
        );
        for (s, c) in straighten(&res.tableau) {
            println!("  = {} * {s}", fmt_rational(&(&c * &res.coefficient)));
        }
    }
    let spt = Tableau::parse("(([], [], [5]) / ([1,2], [4]) / ([3]))")?;
    let pi = SetPartition::parse("{{1,2,-3},{4,5,-4},{3},{-1},{-2},{-5}}")?;
    println!(
        "L_{pi} · {spt} vanishes: {}",
        act_on_spt(&pi, &spt)?.is_none()
    );

    // Dimensions of the irreducible modules of MP_{2,2}(5), and the matrix
    // of one diagram on the largest of them.
    let (n, r, k) = (5, 2, 2);
    let mut total = 0;
    for lambda in shapes_mp(n, r, k)? {
        let module = MPModule::new(&lambda, r, k)?;
        total += module.dim() * module.dim();
        println!("λ = {lambda}: dimension {}", module.dim());
    }
    println!(
        "Σ dim² = {total} = |Π̃_2(2),2| = {}",
        enumerate_msp(r, k)?.len()
    );

    let lambda = IntegerPartition::new(vec![4, 1])?;
    let mut module = MPModule::new(&lambda, r, k)?;
    let p = MultisetPartition::parse("[[1,2,-1],[-2]]", Some(k))?;
    let m = module.matrix(&p)?;
    println!(
        "\nD_{p} on MP^{lambda}: a {}×{} matrix of rank {}",
        m.rows(),
        m.cols(),
        m.rank()
    );
    // The module is a representation: D_p is idempotent, and so is its matrix.
    println!("D_p · D_p = {}", dlike_product(&p, &p)?);
    println!("M · M = M: {}", &m * &m == m);
    Ok(())
}
