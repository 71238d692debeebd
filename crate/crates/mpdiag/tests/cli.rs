//! Command-line behaviour: outputs, exit codes and determinism.

use std::process::Command;

use mpdiag::cli::{run, Outcome};
use mpdiag::msp_algebra::MPElement;

fn mpdiag(args: &[&str]) -> Outcome {
    run(std::iter::once("mpdiag").chain(args.iter().copied()))
}

#[test]
fn multiply_identity() {
    let out = mpdiag(&["multiply", "[[1,-1]]", "[[1,-1]]", "-k", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "1 * [[1,-1]]\n");
}

#[test]
fn orbit_basis_product_can_vanish() {
    let out = mpdiag(&[
        "multiply",
        "--algebra",
        "P",
        "--basis",
        "T",
        "{{1,-1},{2,-2}}",
        "{{1,2,-1,-2}}",
    ]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "0\n"));
}

#[test]
fn convert_to_orbit_basis() {
    let out = mpdiag(&[
        "convert",
        "--to",
        "X",
        "[[1,-1],[1,-1],[2,2,-1,-2]]",
        "-k",
        "2",
    ]);
    assert_eq!(out.code, 0);
    for term in [
        "1 * [[1,1,2,2,-1,-1,-1,-2]]",
        "1/3 * [[1,1,-1,-1],[2,2,-1,-2]]",
        "2/3 * [[1,2,2,-1,-1,-2],[1,-1]]",
        "1/3 * [[1,-1],[1,-1],[2,2,-1,-2]]",
    ] {
        assert!(
            out.stdout.contains(term),
            "{term} missing from {}",
            out.stdout
        );
    }
}

#[test]
fn dims_reports_sum_of_squares() {
    let out = mpdiag(&["dims", "-r", "2", "-k", "2", "-n", "5"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("dimension 95"));
    assert!(out.stdout.contains("sum of squares: 95"));
}

#[test]
fn verify_suite_passes() {
    let out = mpdiag(&["verify", "--suite", "change-of-basis", "-r", "2", "-k", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.starts_with("PASS change-of-basis"));
}

#[test]
fn parse_errors_are_usage_errors_with_position() {
    let out = mpdiag(&["multiply", "[[1,1,-1", "[[1,-1]]"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("position 8"), "{}", out.stderr);
}

#[test]
fn bound_errors_name_the_override() {
    let out = mpdiag(&["enumerate", "--what", "sp", "-r", "9"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("MPDIAG_MAX_VERTICES"));
}

#[test]
fn unknown_verb_is_a_usage_error() {
    assert_eq!(mpdiag(&["frobnicate"]).code, 2);
    assert_eq!(mpdiag(&["verify", "--suite", "nonsense"]).code, 2);
}

#[test]
fn json_output_parses_back() {
    let out = mpdiag(&[
        "--json",
        "multiply",
        "[[1,1,-1],[-1,-2],[1],[2,-2]]",
        "[[1,-2,-2],[2,-2,-2],[1],[2]]",
    ]);
    assert_eq!(out.code, 0);
    let e = MPElement::from_json(&serde_json::from_str(out.stdout.trim()).unwrap()).unwrap();
    assert_eq!(e.terms().len(), 4);
    // JSON input is accepted wherever diagram text is
    let again = mpdiag(&["convert", "--to", "D", out.stdout.trim()]);
    assert_eq!(again.code, 0, "{}", again.stderr);
}

#[test]
fn binary_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_mpdiag");
    let args = [
        "multiply",
        "[[1,1,-1],[-1,-2],[1],[2,-2]]",
        "[[1,-2,-2],[2,-2,-2],[1],[2]]",
    ];
    let first = Command::new(bin).args(args).output().unwrap();
    let second = Command::new(bin).args(args).output().unwrap();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        String::from_utf8(first.stdout).unwrap(),
        mpdiag(&args).stdout
    );
}
