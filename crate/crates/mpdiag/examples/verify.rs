//! Running the built-in verification suites.
//!
//! Run with `cargo run --release --example verify`.

use mpdiag::verify::{run_suite, SuiteParams, SUITES};

fn main() -> mpdiag::Result<()> {
    let params = SuiteParams::default();
    let mut failed = 0;
    for name in SUITES {
        let report = run_suite(name, &params)?;
        println!("{report}");
        for f in &report.failures {
            println!("  {f}");
        }
        failed += usize::from(!report.passed());
    }
    println!(
        "\n{} of {} suites passed",
        SUITES.len() - failed,
        SUITES.len()
    );
    Ok(())
}
