//! Named verification sweeps behind `qschur verify`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::OperatorError;
use crate::laplace::{self, Operator};
use crate::partition::{partitions_of, StrictPartition};
use crate::poly::{Assign, Monomial, Polynomial};
use crate::qsym::{is_supersymmetric, q_series, q_two_from, schur_q};
use crate::ratfunc::RationalFunction;
use crate::rational::{format_rational, rat};
use crate::spectra::{self, hc_eigenvalue_omega3};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Skew,
    Supersym,
    Stability,
    Lemma121,
    Lemma123i,
    Lemma123ii,
    Lemma123iii,
    Aux35,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Skew,
        Suite::Supersym,
        Suite::Stability,
        Suite::Lemma121,
        Suite::Lemma123i,
        Suite::Lemma123ii,
        Suite::Lemma123iii,
        Suite::Aux35,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Skew => "skew",
            Suite::Supersym => "supersym",
            Suite::Stability => "stability",
            Suite::Lemma121 => "lemma121",
            Suite::Lemma123i => "lemma123i",
            Suite::Lemma123ii => "lemma123ii",
            Suite::Lemma123iii => "lemma123iii",
            Suite::Aux35 => "aux35",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = OperatorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| OperatorError::UnknownOperator(format!("suite {s}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub n: usize,
    pub max: u32,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Replaces the first check's outcome with a failure, to exercise the
    /// reporting and exit-code path.
    pub inject_failure: bool,
}

type Check = (String, Option<String>);

fn report(suite: Suite, n: usize, max: u32, checks: Vec<Check>, opts: VerifyOptions) -> SuiteReport {
    let checked = checks.len();
    let mut failures: Vec<Failure> =
        checks.into_iter().filter_map(|(input, bad)| bad.map(|detail| Failure { input, detail })).collect();
    if opts.inject_failure {
        failures.insert(0, Failure { input: "injected".into(), detail: "seeded failure".into() });
    }
    SuiteReport { suite: suite.name().into(), n, max, checked, passed: failures.is_empty(), failures }
}

fn nonzero(what: &str, r: &RationalFunction) -> Option<String> {
    (!r.is_zero()).then(|| format!("{what} residual {r}"))
}

pub fn run_suite(suite: Suite, n: usize, max: u32, opts: VerifyOptions) -> Result<SuiteReport, OperatorError> {
    let checks = match suite {
        Suite::Skew => skew(n, max),
        Suite::Supersym => supersym(n, max)?,
        Suite::Stability => stability(n, max)?,
        Suite::Lemma121 => {
            let r = spectra::lemma_121_sweep(n, max)?;
            let mut checks: Vec<Check> = vec![(format!("{} basis elements", r.checked), None); r.checked];
            if let Some(f) = r.first_failure {
                checks[0] = (format!("m_{:?}", f.input), Some(f.relation));
            }
            checks
        }
        Suite::Lemma123i => conjugation(n, max)?,
        Suite::Lemma123ii => eigenfunctions(n, max)?,
        Suite::Lemma123iii => uniqueness(n, max)?,
        Suite::Aux35 => (0..n)
            .map(|i| Ok((format!("i={}", i + 1), nonzero("aux", &laplace::auxiliary_identity_residual(i, n)?))))
            .collect::<Result<_, OperatorError>>()?,
    };
    Ok(report(suite, n, max, checks, opts))
}

/// `Q_{k,l} + Q_{l,k} = 0` for `0 < k + l`, `k, l <= max`.
fn skew(n: usize, max: u32) -> Vec<Check> {
    let max = max as usize;
    let q = q_series(n, 2 * max);
    (0..=max)
        .cartesian_product(0..=max)
        .filter(|&(k, l)| k + l > 0 && k <= l)
        .collect_vec()
        .into_par_iter()
        .map(|(k, l)| {
            let s = &q_two_from(&q, k, l) + &q_two_from(&q, l, k);
            (format!("k={k},l={l}"), (!s.is_zero()).then(|| format!("Q_kl + Q_lk = {s}")))
        })
        .collect()
}

fn partitions(n: usize, max: u32) -> Vec<StrictPartition> {
    StrictPartition::all_up_to(max, n)
}

fn supersym(n: usize, max: u32) -> Result<Vec<Check>, OperatorError> {
    partitions(n, max)
        .par_iter()
        .map(|l| {
            let ok = is_supersymmetric(&schur_q(l, n))?;
            Ok((format!("({l})"), (!ok).then(|| "depends on t after x1 = t, x2 = -t".to_string())))
        })
        .collect()
}

/// `Q_λ(x_1..x_n, 0) = Q_λ(x_1..x_n)`, including `λ` of length `n + 1`
/// where both sides vanish.
fn stability(n: usize, max: u32) -> Result<Vec<Check>, OperatorError> {
    partitions(n + 1, max)
        .par_iter()
        .map(|l| {
            let restricted = schur_q(l, n + 1).substitute(&[(n, Assign::Value(rat(0)))])?;
            let diff = &restricted - &schur_q(l, n);
            Ok((format!("({l})"), (!diff.is_zero()).then(|| format!("difference {diff}"))))
        })
        .collect()
}

/// `δ^{-1} Ω_3 δ f = (sum d_i^3 - (sum d_i)^2) f` on monomials of degree `<= max`,
/// and `(sum d_i^3) δ^{-1} = 0`.
fn conjugation(n: usize, max: u32) -> Result<Vec<Check>, OperatorError> {
    let monomials: Vec<Vec<u32>> = (0..=max)
        .flat_map(|d| partitions_of(d, n))
        .flat_map(|mu| {
            let mut e = mu.clone();
            e.resize(n, 0);
            e.into_iter().permutations(n).unique().collect_vec()
        })
        .sorted()
        .collect();
    let mut checks: Vec<Check> = monomials
        .par_iter()
        .map(|e| {
            let f = RationalFunction::from_polynomial(Polynomial::monomial(Monomial::from_exponents(e), rat(1)));
            let lhs = laplace::conjugated_apply(Operator::Omega(3), &f)?;
            let rhs = Operator::EulerCubes.apply(&f)?;
            Ok((format!("x^{e:?}"), nonzero("conjugation", &(&lhs - &rhs))))
        })
        .collect::<Result<_, OperatorError>>()?;
    let inv = laplace::delta_inverse(n);
    let cubes = (0..n).try_fold(RationalFunction::zero(n), |acc, i| -> Result<_, OperatorError> {
        let d3 = inv.euler_derivative(i)?.euler_derivative(i)?.euler_derivative(i)?;
        Ok(&acc + &d3)
    })?;
    checks.push(("sum d_i^3 (delta^-1)".into(), nonzero("cubes", &cubes)));
    Ok(checks)
}

/// `Ω_3 Q_λ = (sum λ^3 - |λ|^2) Q_λ`, `Ω_1 Q_λ = |λ| Q_λ`, and `Q_λ` is an
/// eigenfunction of `Ω_5`.
fn eigenfunctions(n: usize, max: u32) -> Result<Vec<Check>, OperatorError> {
    partitions(n, max)
        .par_iter()
        .map(|l| {
            let q = schur_q(l, n);
            let mut bad = Vec::new();
            let expected = [(1, Some(rat(l.weight() as i64))), (3, Some(hc_eigenvalue_omega3(l))), (5, None)];
            for (k, want) in expected {
                let image = Operator::Omega(k)
                    .apply_poly(&q)?
                    .into_polynomial()
                    .map_err(|r| OperatorError::NotPolynomial(r.denominator_string()))?;
                let (c, residual) = spectra::fit_eigenvalue(&q, &image);
                if !residual.is_zero() {
                    bad.push(format!("omega{k}: not an eigenfunction"));
                } else if let Some(w) = want.filter(|w| *w != c) {
                    bad.push(format!("omega{k}: eigenvalue {} expected {}", format_rational(&c), format_rational(&w)));
                }
            }
            Ok((format!("({l})"), (!bad.is_empty()).then(|| bad.join("; "))))
        })
        .collect()
}

/// Joint eigenspaces of `Ω_1..Ω_7` per degree, and a separating `r` in `R_n` for
/// every distinct pair.
fn uniqueness(n: usize, max: u32) -> Result<Vec<Check>, OperatorError> {
    let sweep = spectra::uniqueness_sweep(n, max);
    let mut checks: Vec<Check> =
        sweep.degrees.into_iter().map(|d| (format!("degree {}", d.degree), d.detail.filter(|_| !d.ok))).collect();
    let parts = partitions(n, max);
    let pairs: Vec<[&StrictPartition; 2]> = parts.iter().array_combinations().collect();
    let sep: Vec<Check> = pairs
        .par_iter()
        .map(|[a, b]| {
            let bad = spectra::separation_check(a, b, n, 2 * max + 1).err().map(|e| e.to_string());
            (format!("({a}) vs ({b})"), bad)
        })
        .collect();
    checks.extend(sep);
    Ok(checks)
}
