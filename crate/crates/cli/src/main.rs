use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qschur::qsym::{char_map, expand_in_power_sums, q_series, schur_q, shifted_tableaux_count};
use qschur::rational::format_rational;
use qschur::spectra::eigen_check;
use qschur::verify::{run_suite, Suite, VerifyOptions};
use qschur::{OddCycleType, Operator, Polynomial, StrictPartition};
use serde_json::{json, Value};

const MAX_N: usize = 6;
const MAX_DEGREE: u32 = 12;

#[derive(Parser)]
#[command(name = "qschur", version, about = "Exact Schur Q-functions and their eigenoperators")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Allow n > 6 or degree > 12.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// q_0 .. q_K.
    Qk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: u32,
    },
    /// Q_λ in n variables.
    Qfun {
        #[arg(long)]
        lambda: StrictPartition,
        #[arg(long)]
        n: usize,
    },
    /// Applies an operator to Q_λ.
    Apply {
        #[arg(long)]
        op: Operator,
        #[arg(long)]
        lambda: StrictPartition,
        #[arg(long)]
        n: usize,
    },
    /// Checks whether Q_λ is an eigenfunction of an operator.
    Eigen {
        #[arg(long)]
        lambda: StrictPartition,
        #[arg(long)]
        op: Operator,
        #[arg(long)]
        n: usize,
    },
    /// Runs a verification sweep; exits 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max: u32,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// 2^{l(ν)} p_ν.
    CharMap {
        #[arg(long)]
        nu: OddCycleType,
        #[arg(long)]
        n: usize,
    },
    /// Number of standard shifted tableaux of shape λ.
    Tableaux {
        #[arg(long)]
        lambda: StrictPartition,
    },
    /// Q_λ in odd power sums, weights up to W.
    Expand {
        #[arg(long)]
        lambda: StrictPartition,
        #[arg(long)]
        max: u32,
    },
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn guard(force: bool, n: usize, degree: u32) -> Result<(), Failure> {
    if force || (n <= MAX_N && degree <= MAX_DEGREE) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "n = {n}, degree = {degree} exceeds the desk-scale limit (n <= {MAX_N}, degree <= {MAX_DEGREE}); pass --force to run anyway"
        )))
    }
}

fn usage<E: ToString>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let all = std::iter::once(header.iter().map(|s| s.to_string()).collect::<Vec<_>>()).chain(rows.iter().cloned());
    for row in all {
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

fn poly_json(p: &Polynomial) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

fn run(cli: Cli) -> Result<String, Failure> {
    let text = cli.format == Format::Text;
    let out = match cli.command {
        Command::Qk { n, max } => {
            guard(cli.force, n, max)?;
            let q = q_series(n, max as usize);
            if text {
                q.iter().enumerate().map(|(k, p)| format!("q{k} = {p}\n")).collect()
            } else {
                json!({ "n": n, "q": q.iter().map(poly_json).collect::<Vec<_>>() }).to_string()
            }
        }
        Command::Qfun { lambda, n } => {
            guard(cli.force, n, lambda.weight())?;
            let q = schur_q(&lambda, n);
            if text {
                q.to_string()
            } else {
                poly_json(&q).to_string()
            }
        }
        Command::Apply { op, lambda, n } => {
            guard(cli.force, n, lambda.weight())?;
            let image = op.apply_poly(&schur_q(&lambda, n)).map_err(usage)?;
            if text {
                image.to_string()
            } else {
                let mut v = json!({
                    "partition": lambda.to_string(),
                    "operator": op.to_string(),
                    "numerator": poly_json(image.numerator()),
                });
                if !image.is_polynomial() {
                    v["denominator"] = json!(image.denominator_string());
                }
                v.to_string()
            }
        }
        Command::Eigen { lambda, op, n } => {
            guard(cli.force, n, lambda.weight())?;
            let r = eigen_check(&lambda, op, n).map_err(usage)?;
            if text {
                table(
                    &["partition", "operator", "eigenvalue", "isEigen"],
                    &[vec![r.partition.to_string(), r.operator.to_string(), format_rational(&r.eigenvalue), r.is_eigen.to_string()]],
                )
            } else {
                serde_json::to_string(&r).expect("reports serialize")
            }
        }
        Command::Verify { suite, n, max, inject_failure } => {
            guard(cli.force, n, max)?;
            let r = run_suite(suite, n, max, VerifyOptions { inject_failure }).map_err(usage)?;
            let body = if text {
                let mut s = format!(
                    "suite {} n={} max={}: {} checked, {} failed, {}\n",
                    r.suite,
                    r.n,
                    r.max,
                    r.checked,
                    r.failures.len(),
                    if r.passed { "PASS" } else { "FAIL" }
                );
                if !r.failures.is_empty() {
                    let rows: Vec<Vec<String>> = r.failures.iter().map(|f| vec![f.input.clone(), f.detail.clone()]).collect();
                    s.push_str(&table(&["input", "detail"], &rows));
                }
                s
            } else {
                serde_json::to_string(&r).expect("reports serialize")
            };
            if !r.passed {
                return Err(Failure::Verification(body));
            }
            body
        }
        Command::CharMap { nu, n } => {
            guard(cli.force, n, nu.weight())?;
            let p = char_map(&nu, n);
            if text {
                p.to_string()
            } else {
                poly_json(&p).to_string()
            }
        }
        Command::Tableaux { lambda } => shifted_tableaux_count(&lambda).to_string(),
        Command::Expand { lambda, max } => {
            let n = lambda.weight().max(1) as usize;
            guard(cli.force, n, lambda.weight().max(max))?;
            let x = expand_in_power_sums(&schur_q(&lambda, n), max as usize).map_err(usage)?;
            if text {
                let rows: Vec<Vec<String>> =
                    x.terms().iter().rev().map(|(nu, c)| vec![format!("p_({nu})"), format_rational(c)]).collect();
                table(&["term", "coefficient"], &rows)
            } else {
                serde_json::to_string(&x).expect("expansions serialize")
            }
        }
    };
    Ok(out)
}

fn emit(s: &str) {
    if s.ends_with('\n') {
        print!("{s}");
    } else {
        println!("{s}");
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(s) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(s)) => {
            emit(&s);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
