//! Concrete realizations: partition diagrams acting on tensors, and
//! multiset partition diagrams acting on polynomials, commuting with the
//! symmetric group.
//!
//! Run with `cargo run --release --example realization`.

use mpdiag::partitions::{MultisetPartition, Permutation, SetPartition};
use mpdiag::realization::{
    centralizer_check, centralizer_dimension, diagram_matrix, orbit_matrix, MonomialBasis,
};
use mpdiag::scalars::{fmt_rational, rint};

fn main() -> mpdiag::Result<()> {
    // On V^{⊗2} with dim V = 3: the diagram {{1,2,-1,-2}} is the projection
    // onto equal-index tensors, the orbit matrix keeps the pattern exactly.
    let p = SetPartition::parse("{{1,2,-1,-2}}")?;
    let l = diagram_matrix(&p, 3)?;
    let t = orbit_matrix(&SetPartition::parse("{{1,-1},{2,-2}}")?, 3)?;
    println!("L_{p} on (C^3)^⊗2: rank {}", l.rank());
    println!(
        "T_{{{{1,-1}},{{2,-2}}}}: rank {} (tensors with distinct indices)",
        t.rank()
    );

    // Monomials of degree r in n × k variables x[i,j].
    let (n, r, k) = (3, 2, 2);
    let basis = MonomialBasis::new(n, r, k)?;
    println!(
        "\n{} monomials of degree {r} in {n}×{k} variables, e.g.",
        basis.len()
    );
    for m in basis.monomials().iter().take(4) {
        println!("  {}", m.to_text());
    }
    let q = MultisetPartition::parse("[[1,2,-1,-2]]", Some(k))?;
    let m = basis.mp_matrix(&q)?;
    println!("D_{q}: nonzero entries");
    for (i, row) in basis.monomials().iter().enumerate() {
        for (j, col) in basis.monomials().iter().enumerate() {
            let c = &m[(i, j)];
            if *c != rint(0) {
                println!(
                    "  [{}, {}] = {}",
                    row.to_text(),
                    col.to_text(),
                    fmt_rational(c)
                );
            }
        }
    }

    // Every diagram matrix commutes with S_n.
    println!("\ncommutes with S_{n}: {}", centralizer_check(&m, n, r, k)?);
    let swap = Permutation::from_cycles(n, &[&[1, 2]])?;
    let g = basis.sn_matrix(&swap)?;
    println!("(1 2) acts by a permutation matrix of size {}", g.rows());
    println!(
        "centralizer dimension at (n, r, k) = ({n}, {r}, {k}): {}",
        centralizer_dimension(n, r, k)?
    );
    Ok(())
}
