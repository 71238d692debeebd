//! Command-line front end.
//!
//! [`run`] parses an argument vector and returns the exit code with the text
//! written to standard output and standard error, so the binary is a thin
//! wrapper and the behaviour is testable in-process.
//!
//! Exit codes: `0` success, `1` domain error (or a failed verification),
//! `2` usage error (bad flags or malformed diagram text).

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::{Error, Result};
use crate::msp_algebra::{
    convert_mp, factor_at_block, factor_lemma_check, multiply_mp, nonbasic_profile, MPBasis,
    MPElement,
};
use crate::partition_algebra::{convert, multiply, ElementJson, PABasis, PAElement};
use crate::partitions::{
    enumerate_msp, enumerate_set_partitions, MultisetPartition, SetPartition, Vertex,
};
use crate::scalars::{fmt_rational, Rational};
use crate::tableaux::{
    act_on_spt, enumerate_ssmpt, enumerate_sspt, shapes_mp, shapes_p, straighten, IntegerPartition,
    MPModule, ModuleVector, Tableau,
};
use crate::verify::{run_suite, SuiteParams, DEFAULT_SEED, SUITES};

/// Which algebra a command works in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    /// The partition algebra `P_r(x)` (bases `L`, `T`).
    #[value(name = "P")]
    P,
    /// The multiset partition algebra `MP_{r,k}(x)` (bases `D`, `O`, `X`).
    #[value(name = "MP")]
    Mp,
}

#[derive(Parser, Debug)]
#[command(
    name = "mpdiag",
    version,
    about = "Exact computation in partition and multiset partition algebras"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Multiply two elements (diagram text or element JSON).
    Multiply {
        #[arg(long, value_enum, default_value = "MP")]
        algebra: Algebra,
        /// Basis tag of both factors: L or T for P; D, O or X for MP.
        #[arg(long)]
        basis: Option<String>,
        left: String,
        right: String,
        #[arg(short = 'r')]
        r: Option<usize>,
        #[arg(short = 'k')]
        k: Option<usize>,
        /// Specialize the parameter at x = n.
        #[arg(short = 'n')]
        n: Option<i64>,
    },
    /// Rewrite an element in another basis.
    Convert {
        #[arg(long, value_enum, default_value = "MP")]
        algebra: Algebra,
        /// Basis of the input.
        #[arg(long)]
        basis: Option<String>,
        /// Target basis.
        #[arg(long)]
        to: String,
        element: String,
        #[arg(short = 'r')]
        r: Option<usize>,
        #[arg(short = 'k')]
        k: Option<usize>,
        #[arg(short = 'n')]
        n: Option<i64>,
    },
    /// Algebra dimension and irreducible dimensions per shape.
    Dims {
        #[arg(long, value_enum, default_value = "MP")]
        algebra: Algebra,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
        /// Size of the symmetric group (default 2r).
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// List diagrams, shapes, or tableaux of a shape.
    Enumerate {
        #[arg(long, value_enum)]
        what: Enumerable,
        #[arg(short = 'r')]
        r: usize,
        #[arg(short = 'k', default_value_t = 1)]
        k: usize,
        #[arg(short = 'n')]
        n: Option<usize>,
        /// Shape such as (4,2,1), for tableaux.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Act with a diagram on a tableau of an irreducible module.
    Act {
        #[arg(long, value_enum, default_value = "MP")]
        algebra: Algebra,
        diagram: String,
        tableau: String,
        #[arg(short = 'k')]
        k: Option<usize>,
    },
    /// Run verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(short = 'r', default_value_t = 2)]
        r: usize,
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        #[arg(short = 'n', default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sample size for sampled suites.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Factor a diagram-like basis element at its nonbasic blocks.
    Factor {
        diagram: String,
        #[arg(short = 'k')]
        k: Option<usize>,
        /// One block, e.g. [1,2,-1]; default: every nonbasic block.
        #[arg(long)]
        block: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Enumerable {
    /// Two-row set partitions of [r] ∪ [r̄].
    Sp,
    /// Two-row multiset partitions with r entries of k colors per row.
    Msp,
    /// Shapes λ ⊢ n with |λ*| ≤ r indexing irreducibles.
    Shapes,
    /// Standard set partition tableaux of a shape.
    Sspt,
    /// Semistandard multiset partition tableaux of a shape.
    Ssmpt,
}

/// Result of running the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((ok, stdout)) => Outcome {
            code: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: if e.is_usage() { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<(bool, String)> {
    let json = cli.json;
    match &cli.command {
        Command::Multiply {
            algebra,
            basis,
            left,
            right,
            r,
            k,
            n,
        } => {
            let (ok, out) = match algebra {
                Algebra::P => {
                    let a = parse_pa(left, basis.as_deref(), *r)?;
                    let b = parse_pa(right, basis.as_deref(), *r)?;
                    (true, emit_pa(&multiply(&a, &b)?, *n, json))
                }
                Algebra::Mp => {
                    let a = parse_mp(left, basis.as_deref(), *r, *k)?;
                    let b = parse_mp(right, basis.as_deref(), *r, *k)?;
                    (true, emit_mp(&multiply_mp(&a, &b)?, *n, json))
                }
            };
            Ok((ok, out))
        }
        Command::Convert {
            algebra,
            basis,
            to,
            element,
            r,
            k,
            n,
        } => Ok((
            true,
            match algebra {
                Algebra::P => {
                    let e = parse_pa(element, basis.as_deref(), *r)?;
                    emit_pa(&convert(&e, PABasis::from_tag(to)?)?, *n, json)
                }
                Algebra::Mp => {
                    let e = parse_mp(element, basis.as_deref(), *r, *k)?;
                    emit_mp(&convert_mp(&e, MPBasis::from_tag(to)?)?, *n, json)
                }
            },
        )),
        Command::Dims { algebra, r, k, n } => {
            dims(*algebra, *r, *k, n.unwrap_or(2 * r), json).map(|s| (true, s))
        }
        Command::Enumerate {
            what,
            r,
            k,
            n,
            shape,
        } => {
            enumerate(*what, *r, *k, n.unwrap_or(2 * r), shape.as_deref(), json).map(|s| (true, s))
        }
        Command::Act {
            algebra,
            diagram,
            tableau,
            k,
        } => act(*algebra, diagram, tableau, *k, json).map(|s| (true, s)),
        Command::Verify {
            suite,
            r,
            k,
            n,
            seed,
            samples,
        } => {
            let params = SuiteParams {
                r: *r,
                k: *k,
                n: *n,
                seed: *seed,
                samples: *samples,
            };
            verify(suite, &params, json)
        }
        Command::Factor { diagram, k, block } => factor(diagram, *k, block.as_deref(), json),
    }
}

// ---------------------------------------------------------------------------
// Element input and output
// ---------------------------------------------------------------------------

fn looks_like_json(s: &str) -> bool {
    let t = s.trim_start();
    t.starts_with('{') && t[1..].trim_start().starts_with('"')
}

fn parse_element_json(s: &str) -> Result<ElementJson> {
    serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column().saturating_sub(1),
        msg: format!("bad element JSON: {e}"),
    })
}

fn check_r(r_flag: Option<usize>, r: usize) -> Result<()> {
    match r_flag {
        Some(want) if want != r => Err(Error::Mismatch(format!(
            "element has r = {r} but -r {want} was given"
        ))),
        _ => Ok(()),
    }
}

fn parse_pa(s: &str, basis: Option<&str>, r: Option<usize>) -> Result<PAElement> {
    let e = if looks_like_json(s) {
        PAElement::from_json(&parse_element_json(s)?)?
    } else {
        let tag = basis.unwrap_or("L");
        PAElement::basis_element(PABasis::from_tag(tag)?, SetPartition::parse(s)?)
    };
    if let Some(tag) = basis {
        let want = PABasis::from_tag(tag)?;
        if want != e.basis() {
            return Err(Error::WrongBasis {
                expected: tag.into(),
                found: e.basis().tag().into(),
            });
        }
    }
    check_r(r, e.r())?;
    Ok(e)
}

fn parse_mp(s: &str, basis: Option<&str>, r: Option<usize>, k: Option<usize>) -> Result<MPElement> {
    let e = if looks_like_json(s) {
        MPElement::from_json(&parse_element_json(s)?)?
    } else {
        let tag = basis.unwrap_or("D");
        MPElement::basis_element(MPBasis::from_tag(tag)?, MultisetPartition::parse(s, k)?)
    };
    if let Some(tag) = basis {
        let want = MPBasis::from_tag(tag)?;
        if want != e.basis() {
            return Err(Error::WrongBasis {
                expected: tag.into(),
                found: e.basis().tag().into(),
            });
        }
    }
    check_r(r, e.r())?;
    if let Some(k) = k {
        if k != e.k() {
            return Err(Error::Mismatch(format!(
                "element has k = {} but -k {k} was given",
                e.k()
            )));
        }
    }
    Ok(e)
}

/// `c * key + ...` with exact rational coefficients, or `0`.
fn format_rational_terms<'a>(terms: impl IntoIterator<Item = (String, &'a Rational)>) -> String {
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(key, c)| format!("{} * {key}", fmt_rational(c)))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn evaluated_json(algebra: &str, basis: &str, n: i64, terms: Vec<(String, &Rational)>) -> String {
    let key = if algebra == "P" { "sp" } else { "msp" };
    json!({
        "algebra": algebra,
        "basis": basis,
        "x": n,
        "terms": terms.iter().map(|(k, c)| json!({key: k, "coeff": fmt_rational(c)})).collect::<Vec<_>>(),
    })
    .to_string()
}

fn emit_pa(e: &PAElement, n: Option<i64>, json: bool) -> String {
    let text = match (n, json) {
        (None, false) => e.to_text(),
        (None, true) => serde_json::to_string(&e.to_json()).expect("serializable"),
        (Some(n), json) => {
            let vals = e.evaluate(n);
            let terms: Vec<(String, &Rational)> =
                vals.iter().map(|(p, c)| (p.to_text(), c)).collect();
            if json {
                evaluated_json("P", e.basis().tag(), n, terms)
            } else {
                format_rational_terms(terms)
            }
        }
    };
    text + "\n"
}

fn emit_mp(e: &MPElement, n: Option<i64>, json: bool) -> String {
    let text = match (n, json) {
        (None, false) => e.to_text(),
        (None, true) => e.to_json_string(),
        (Some(n), json) => {
            let vals = e.evaluate(n);
            let terms: Vec<(String, &Rational)> =
                vals.iter().map(|(p, c)| (p.to_text(), c)).collect();
            if json {
                evaluated_json("MP", e.basis().tag(), n, terms)
            } else {
                format_rational_terms(terms)
            }
        }
    };
    text + "\n"
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn dims(algebra: Algebra, r: usize, k: usize, n: usize, json: bool) -> Result<String> {
    let (name, total, rows) = match algebra {
        Algebra::P => {
            let total = enumerate_set_partitions(r)?.len();
            let mut rows = Vec::new();
            for lambda in shapes_p(n, r)? {
                rows.push((lambda.clone(), enumerate_sspt(&lambda, r)?.len()));
            }
            (format!("P_{r}({n})"), total, rows)
        }
        Algebra::Mp => {
            let total = enumerate_msp(r, k)?.len();
            let mut rows = Vec::new();
            for lambda in shapes_mp(n, r, k)? {
                rows.push((lambda.clone(), enumerate_ssmpt(&lambda, r, k)?.len()));
            }
            (format!("MP_{{{r},{k}}}({n})"), total, rows)
        }
    };
    let squares: usize = rows.iter().map(|(_, d)| d * d).sum();
    if json {
        return Ok(json!({
            "algebra": name,
            "r": r,
            "k": k,
            "n": n,
            "dimension": total,
            "irreducibles": rows.iter().map(|(l, d)| json!({"shape": l.to_string(), "dim": d})).collect::<Vec<_>>(),
            "sum_of_squares": squares,
        })
        .to_string()
            + "\n");
    }
    let width = rows
        .iter()
        .map(|(l, _)| l.to_string().len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = String::new();
    writeln!(out, "{name}: dimension {total}").unwrap();
    writeln!(out, "{:<width$}  dim", "shape").unwrap();
    for (l, d) in &rows {
        writeln!(out, "{:<width$}  {d}", l.to_string()).unwrap();
    }
    writeln!(out, "sum of squares: {squares}").unwrap();
    Ok(out)
}

fn parse_shape(shape: Option<&str>) -> Result<IntegerPartition> {
    IntegerPartition::parse(shape.ok_or_else(|| Error::Usage("tableaux need --shape".into()))?)
}

fn enumerate(
    what: Enumerable,
    r: usize,
    k: usize,
    n: usize,
    shape: Option<&str>,
    json: bool,
) -> Result<String> {
    let items: Vec<String> = match what {
        Enumerable::Sp => enumerate_set_partitions(r)?
            .iter()
            .map(|p| p.to_text())
            .collect(),
        Enumerable::Msp => enumerate_msp(r, k)?.iter().map(|p| p.to_text()).collect(),
        Enumerable::Shapes => shapes_mp(n, r, k)?.iter().map(|l| l.to_string()).collect(),
        Enumerable::Sspt => enumerate_sspt(&parse_shape(shape)?, r)?
            .iter()
            .map(|t| t.to_text())
            .collect(),
        Enumerable::Ssmpt => enumerate_ssmpt(&parse_shape(shape)?, r, k)?
            .iter()
            .map(|t| t.to_text())
            .collect(),
    };
    Ok(if json {
        serde_json::to_string(&items).expect("serializable") + "\n"
    } else {
        items.iter().map(|s| format!("{s}\n")).collect()
    })
}

fn act(
    algebra: Algebra,
    diagram: &str,
    tableau: &str,
    k: Option<usize>,
    json: bool,
) -> Result<String> {
    let t = Tableau::parse(tableau)?;
    let terms: Vec<(String, Rational)> = match algebra {
        Algebra::P => {
            let pi = SetPartition::parse(diagram)?;
            let v: ModuleVector = match act_on_spt(&pi, &t)? {
                None => ModuleVector::new(),
                Some(res) => straighten(&res.tableau)
                    .into_iter()
                    .map(|(s, c)| (s, c * &res.coefficient))
                    .collect(),
            };
            v.into_iter().map(|(s, c)| (s.to_text(), c)).collect()
        }
        Algebra::Mp => {
            let p = MultisetPartition::parse(diagram, k)?;
            let mut module = MPModule::new(&t.shape(), p.r(), p.k())?;
            let coords = module.act(&p, &t)?;
            coords
                .into_iter()
                .map(|(i, c)| (format!("w{}", module.basis()[i].to_text()), c))
                .collect()
        }
    };
    Ok(if json {
        json!(terms
            .iter()
            .map(|(t, c)| json!({"tableau": t, "coeff": fmt_rational(c)}))
            .collect::<Vec<_>>())
        .to_string()
            + "\n"
    } else {
        format_rational_terms(terms.iter().map(|(t, c)| (t.clone(), c))) + "\n"
    })
}

fn verify(suite: &str, params: &SuiteParams, json: bool) -> Result<(bool, String)> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, params)?);
    }
    let ok = reports.iter().all(|r| r.passed());
    let out = if json {
        json!(reports
            .iter()
            .map(|r| json!({
                "suite": r.name,
                "passed": r.passed(),
                "checked": r.checked,
                "failed": r.failed,
                "summary": r.summary,
                "failures": r.failures,
            }))
            .collect::<Vec<_>>())
        .to_string()
            + "\n"
    } else {
        reports.iter().map(|r| format!("{r}\n")).collect()
    };
    Ok((ok, out))
}

fn parse_block(s: &str) -> Result<Vec<Vertex>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "block must look like [1,2,-1]".into(),
        })?;
    let mut out = Vec::new();
    let mut pos = 1;
    for piece in inner.split(',') {
        let v: i32 = piece.trim().parse().map_err(|_| Error::Parse {
            pos,
            msg: format!("bad entry {:?}", piece.trim()),
        })?;
        if v == 0 {
            return Err(Error::Parse {
                pos,
                msg: "entries are non-zero colors".into(),
            });
        }
        out.push(Vertex::from_signed(v));
        pos += piece.len() + 1;
    }
    Ok(out)
}

fn factor(
    diagram: &str,
    k: Option<usize>,
    block: Option<&str>,
    json: bool,
) -> Result<(bool, String)> {
    let p = MultisetPartition::parse(diagram, k)?;
    let blocks: Vec<Vec<Vertex>> = match block {
        Some(b) => vec![parse_block(b)?],
        None => {
            let mut bs = nonbasic_profile(&p).nonbasic_blocks;
            bs.dedup();
            bs
        }
    };
    if blocks.is_empty() {
        return Err(Error::Domain(format!("{p} has no nonbasic block")));
    }
    let mut ok = true;
    let mut text = String::new();
    let mut entries = Vec::new();
    for b in &blocks {
        let f = factor_at_block(&p, b)?;
        let check = factor_lemma_check(&p, b)?;
        ok &= check.holds;
        let (left, right) = f.in_order();
        let block_text = format!(
            "[{}]",
            b.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        writeln!(text, "block {block_text}: {left} · {right}").unwrap();
        writeln!(text, "  product = {}", check.product).unwrap();
        writeln!(
            text,
            "  coefficient of {p}: {}; lower terms only: {}",
            check.coefficient.to_text(),
            if check.holds { "yes" } else { "no" }
        )
        .unwrap();
        entries.push(json!({
            "block": block_text,
            "left": left.to_text(),
            "right": right.to_text(),
            "product": check.product.to_text(),
            "coefficient": check.coefficient.to_text(),
            "holds": check.holds,
        }));
    }
    Ok((
        ok,
        if json {
            json!(entries).to_string() + "\n"
        } else {
            text
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("mpdiag").chain(args.iter().copied()))
    }

    #[test]
    fn identity_product() {
        let o = run_args(&[
            "multiply",
            "--algebra",
            "MP",
            "--basis",
            "D",
            "[[1,-1]]",
            "[[1,-1]]",
            "-r",
            "1",
            "-k",
            "1",
        ]);
        assert_eq!((o.code, o.stdout.as_str()), (0, "1 * [[1,-1]]\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["multiply", "[[1,-1]", "[[1,-1]]"]).code, 2);
        assert_eq!(run_args(&["frobnicate"]).code, 2);
        assert_eq!(
            run_args(&["multiply", "[[1,-1]]", "[[1,-1]]", "-r", "2"]).code,
            1
        );
    }
}
