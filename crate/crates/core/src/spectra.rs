//! Eigenvalue extraction, the `R_n` action on Q-functions, and the desk-scale
//! uniqueness sweeps.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::OperatorError;
use crate::laplace::Operator;
use crate::linalg::{self, Matrix};
use crate::partition::{partitions_of, OddCycleType, StrictPartition};
use crate::poly::{Assign, Monomial, Polynomial};
use crate::qsym::{power_sum, schur_q};
use crate::rational::{format_rational, Rational};

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EigenReport {
    pub partition: StrictPartition,
    #[serde(serialize_with = "ser_operator")]
    pub operator: Operator,
    #[serde(serialize_with = "ser_rational")]
    pub eigenvalue: Rational,
    pub is_eigen: bool,
    #[serde(skip)]
    pub residual: Polynomial,
}

fn ser_operator<S: serde::Serializer>(op: &Operator, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&op.to_string())
}

/// Fits `c` with `image = c f` from the grevlex-leading monomial of `f`, then
/// checks every monomial. The residual is `image - c f`.
pub fn fit_eigenvalue(f: &Polynomial, image: &Polynomial) -> (Rational, Polynomial) {
    let c = match f.leading_term() {
        Some((m, lead)) => image.coefficient(m) / lead,
        None => Rational::zero(),
    };
    let residual = image - &f.scale(&c);
    (c, residual)
}

fn check_length(lambda: &StrictPartition, n: usize) -> Result<(), OperatorError> {
    if lambda.len() > n {
        Err(OperatorError::TooLong { partition: lambda.to_string(), n })
    } else {
        Ok(())
    }
}

pub fn eigen_check(lambda: &StrictPartition, op: Operator, n: usize) -> Result<EigenReport, OperatorError> {
    check_length(lambda, n)?;
    let q = schur_q(lambda, n);
    eigen_check_on(lambda, &q, op)
}

fn eigen_check_on(lambda: &StrictPartition, q: &Polynomial, op: Operator) -> Result<EigenReport, OperatorError> {
    let image = op
        .apply_poly(q)?
        .into_polynomial()
        .map_err(|r| OperatorError::NotPolynomial(r.denominator_string()))?;
    let (eigenvalue, residual) = fit_eigenvalue(q, &image);
    Ok(EigenReport { partition: lambda.clone(), operator: op, eigenvalue, is_eigen: residual.is_zero(), residual })
}

/// `sum λ_i^3 - (sum λ_i)^2`.
pub fn hc_eigenvalue_omega3(lambda: &StrictPartition) -> Rational {
    let cubes: BigInt = lambda.parts().iter().map(|&p| BigInt::from(p).pow(3)).sum();
    let w = BigInt::from(lambda.weight());
    Rational::from_integer(cubes - &w * &w)
}

/// A symmetric polynomial `r(t_1..t_n)` that is free of `s` after
/// `t_1 = s, t_2 = -s` with the remaining variables left free.
#[derive(Clone, Debug, PartialEq)]
pub struct RnPolynomial(Polynomial);

impl RnPolynomial {
    pub fn new(p: Polynomial) -> Result<Self, OperatorError> {
        if !p.is_symmetric() {
            return Err(OperatorError::NotInRn("not symmetric".into()));
        }
        if p.n() >= 2 {
            let s = p.substitute(&[(0, Assign::T), (1, Assign::MinusT)]).map_err(crate::error::SymError::from)?;
            if s.degree_in(s.n() - 1) > 0 {
                return Err(OperatorError::NotInRn("depends on s after t_i = s, t_j = -s".into()));
            }
        }
        Ok(RnPolynomial(p))
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    /// `sum t_i^3 - (sum t_i)^2`.
    pub fn hc_omega3(n: usize) -> Self {
        let p1 = power_sum(1, n).expect("positive index");
        let p3 = power_sum(3, n).expect("positive index");
        RnPolynomial::new(&p3 - &(&p1 * &p1)).expect("odd power sums lie in R_n")
    }

    /// Product of odd power sums `p_ν`.
    pub fn odd_power_product(nu: &OddCycleType, n: usize) -> Self {
        let p = nu.parts().iter().fold(Polynomial::one(n), |acc, &k| &acc * &power_sum(k, n).expect("positive"));
        RnPolynomial::new(p).expect("odd power sums lie in R_n")
    }
}

/// `r(λ)`, with `λ` padded by zeros to `r`'s variable count.
pub fn rn_eigenvalue(r: &RnPolynomial, lambda: &StrictPartition) -> Result<Rational, OperatorError> {
    check_length(lambda, r.n())?;
    let point: Vec<Rational> =
        lambda.padded(r.n()).into_iter().map(|p| Rational::from_integer(BigInt::from(p))).collect();
    Ok(r.0.eval(&point).map_err(crate::error::SymError::from)?)
}

/// Finds `r` in `R_n` with `r(λ) != r(μ)`, trying `Σt³ - (Σt)²` first and then
/// products of odd power sums by increasing degree.
pub fn separation_check(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    n: usize,
    max_degree: u32,
) -> Result<RnPolynomial, OperatorError> {
    if lambda == mu {
        return Err(OperatorError::SamePartition);
    }
    check_length(lambda, n)?;
    check_length(mu, n)?;
    let separates = |r: &RnPolynomial| -> Result<bool, OperatorError> {
        Ok(rn_eigenvalue(r, lambda)? != rn_eigenvalue(r, mu)?)
    };
    let hc = RnPolynomial::hc_omega3(n);
    if separates(&hc)? {
        return Ok(hc);
    }
    for d in 1..=max_degree {
        for nu in OddCycleType::all_of_weight(d) {
            let r = RnPolynomial::odd_power_product(&nu, n);
            if separates(&r)? {
                return Ok(r);
            }
        }
    }
    Err(OperatorError::Inseparable(max_degree as usize))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegreeReport {
    pub degree: u32,
    pub basis: Vec<StrictPartition>,
    /// Operators applied, in order, until every joint eigenspace had dimension one.
    pub operators: Vec<String>,
    pub eigenspace_dims: Vec<usize>,
    pub ok: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UniquenessReport {
    pub n: usize,
    pub max_degree: u32,
    pub degrees: Vec<DegreeReport>,
    pub ok: bool,
}

/// Matrix of `op` on the basis `qs`: column `j` holds the coordinates of `op(qs[j])`.
pub fn operator_matrix(op: Operator, qs: &[Polynomial]) -> Result<Matrix, String> {
    let k = qs.len();
    let cols: Vec<Vec<Rational>> = qs
        .par_iter()
        .map(|q| {
            let image = op
                .apply_poly(q)
                .map_err(|e| e.to_string())?
                .into_polynomial()
                .map_err(|r| format!("{op} image has denominator {}", r.denominator_string()))?;
            linalg::express_in_basis(&image, qs).ok_or_else(|| format!("{op} image leaves the Q-span"))
        })
        .collect::<Result<_, _>>()?;
    Ok((0..k).map(|i| (0..k).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Splits each subspace (given by basis vectors as columns) along the
/// eigenspaces of `m`. Candidate eigenvalues are the diagonal entries; the
/// split must account for the full dimension of each piece.
fn split_by_eigenspaces(m: &Matrix, spaces: &[Vec<Vec<Rational>>]) -> Result<Vec<Vec<Vec<Rational>>>, String> {
    let dim = m.len();
    let mut candidates: Vec<Rational> = (0..dim).map(|i| m[i][i].clone()).collect();
    candidates.sort();
    candidates.dedup();
    let mut out = Vec::new();
    for space in spaces {
        let mut covered = 0;
        for c in &candidates {
            // (m - c) B y = 0
            let shifted: Matrix =
                (0..dim).map(|i| (0..dim).map(|j| if i == j { &m[i][j] - c } else { m[i][j].clone() }).collect()).collect();
            let b: Matrix = (0..dim).map(|i| space.iter().map(|v| v[i].clone()).collect()).collect();
            let image = linalg::mat_mul(&shifted, &b);
            let ys = linalg::nullspace(&image, space.len());
            if ys.is_empty() {
                continue;
            }
            covered += ys.len();
            let piece: Vec<Vec<Rational>> = ys
                .iter()
                .map(|y| (0..dim).map(|i| space.iter().zip(y).map(|(v, yk)| &v[i] * yk).sum()).collect())
                .collect();
            out.push(piece);
        }
        if covered != space.len() {
            return Err(format!("eigenspaces cover {covered} of {} dimensions", space.len()));
        }
    }
    Ok(out)
}

fn uniqueness_in_degree(n: usize, d: u32) -> DegreeReport {
    let basis = StrictPartition::all_of_weight(d, n);
    let qs: Vec<Polynomial> = basis.iter().map(|l| schur_q(l, n)).collect();
    let dim = qs.len();
    let mut report =
        DegreeReport { degree: d, basis: basis.clone(), operators: Vec::new(), eigenspace_dims: vec![dim], ok: false, detail: None };
    let mut spaces: Vec<Vec<Vec<Rational>>> = vec![linalg::identity(dim)];
    for k in [1, 3, 5, 7] {
        if spaces.iter().all(|s| s.len() <= 1) {
            break;
        }
        let op = Operator::Omega(k);
        report.operators.push(op.to_string());
        let m = match operator_matrix(op, &qs) {
            Ok(m) => m,
            Err(e) => {
                report.detail = Some(e);
                return report;
            }
        };
        spaces = match split_by_eigenspaces(&m, &spaces) {
            Ok(s) => s,
            Err(e) => {
                report.detail = Some(format!("{op}: {e}"));
                return report;
            }
        };
        report.eigenspace_dims = spaces.iter().map(Vec::len).collect();
    }
    if let Some(big) = spaces.iter().find(|s| s.len() > 1) {
        report.detail = Some(format!("joint eigenspace of dimension {} after omega7", big.len()));
        return report;
    }
    // each line must be spanned by a single Q_λ
    for s in &spaces {
        let nonzero: Vec<usize> = (0..dim).filter(|&i| !s[0][i].is_zero()).collect();
        if nonzero.len() != 1 {
            report.detail = Some(format!("eigenline is not a single Q_λ: support {nonzero:?}"));
            return report;
        }
    }
    report.ok = true;
    report
}

/// Joint eigenspaces of `Ω_1, Ω_3, Ω_5, Ω_7` on the Q-span, degree by degree.
pub fn uniqueness_sweep(n: usize, max_degree: u32) -> UniquenessReport {
    let degrees: Vec<DegreeReport> = (0..=max_degree).into_par_iter().map(|d| uniqueness_in_degree(n, d)).collect();
    let ok = degrees.iter().all(|d| d.ok);
    UniquenessReport { n, max_degree, degrees, ok }
}

/// Monomial symmetric polynomial `m_μ` in `n` variables.
pub fn monomial_symmetric(mu: &[u32], n: usize) -> Polynomial {
    let mut exps = mu.to_vec();
    exps.resize(n, 0);
    exps.sort_unstable();
    let mut terms = Vec::new();
    loop {
        terms.push((Monomial::from_exponents(&exps), Rational::one()));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Polynomial::from_terms(n, terms).expect("n exponents")
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { return false };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The symmetric monomial basis of degree `<= max_degree` in `n` variables.
pub fn symmetric_monomial_basis(n: usize, max_degree: u32) -> Vec<(Vec<u32>, Polynomial)> {
    (0..=max_degree)
        .flat_map(|d| partitions_of(d, n))
        .map(|mu| {
            let p = monomial_symmetric(&mu, n);
            (mu, p)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationFailure {
    pub relation: String,
    pub input: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub max_degree: u32,
    pub checked: usize,
    pub first_failure: Option<RelationFailure>,
    pub ok: bool,
}

/// The four linear relations between `Ω~_k` and `Ω_k`, tested on every
/// symmetric monomial basis element.
pub fn lemma_121_sweep(n: usize, max_degree: u32) -> Result<RelationReport, OperatorError> {
    let basis = symmetric_monomial_basis(n, max_degree);
    let results: Vec<Option<RelationFailure>> = basis
        .par_iter()
        .map(|(mu, f)| -> Result<Option<RelationFailure>, OperatorError> {
            let f = crate::ratfunc::RationalFunction::from_polynomial(f.clone());
            let om1 = Operator::Omega(1).apply(&f)?;
            let om3 = Operator::Omega(3).apply(&f)?;
            let fam = crate::laplace::TildeDerivativeFamily::first(&f);
            let t1 = fam.sum();
            let fam = fam.step();
            let t2 = fam.sum();
            let fam = fam.step();
            let t3 = fam.sum();
            let t4 = fam.step().sum();
            let two = Rational::from_integer(2.into());
            let four = Rational::from_integer(4.into());
            let checks = [
                ("tilde-omega1 = 2 omega1", &t1 - &om1.scale(&two)),
                ("tilde-omega2 = 2 omega1", &t2 - &om1.scale(&two)),
                ("tilde-omega3 = 2 omega3 + 2 omega1", &(&t3 - &om3.scale(&two)) - &om1.scale(&two)),
                ("tilde-omega4 = 4 omega3 + 2 omega1", &(&t4 - &om3.scale(&four)) - &om1.scale(&two)),
            ];
            Ok(checks
                .into_iter()
                .find(|(_, r)| !r.is_zero())
                .map(|(rel, _)| RelationFailure { relation: rel.to_string(), input: mu.clone() }))
        })
        .collect::<Result<_, _>>()?;
    let first_failure = results.into_iter().flatten().next();
    Ok(RelationReport { n, max_degree, checked: basis.len(), ok: first_failure.is_none(), first_failure })
}

/// Eigenvalues of `op` on every `Q_λ`, `|λ| <= max_weight`, `len(λ) <= n`.
pub fn eigen_sweep(n: usize, max_weight: u32, op: Operator) -> Result<Vec<EigenReport>, OperatorError> {
    StrictPartition::all_up_to(max_weight, n).par_iter().map(|l| eigen_check(l, op, n)).collect()
}

/// Operator eigenvalues keyed by partition, merged in partition order.
pub fn eigenvalue_table(reports: &[EigenReport]) -> BTreeMap<String, String> {
    reports.iter().map(|r| (r.partition.to_string(), format_rational(&r.eigenvalue))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn eigen_check_examples() {
        let r = eigen_check(&sp("2"), Operator::Omega(3), 2).unwrap();
        assert!(r.is_eigen);
        assert_eq!(r.eigenvalue, rat(4));
        let r = eigen_check(&sp("1"), Operator::Omega(1), 3).unwrap();
        assert_eq!((r.is_eigen, r.eigenvalue), (true, rat(1)));
        let r = eigen_check(&sp("2,1"), Operator::Omega(3), 3).unwrap();
        assert_eq!((r.is_eigen, r.eigenvalue), (true, rat(0)));
        assert!(matches!(eigen_check(&sp("3,2,1"), Operator::Omega(3), 2), Err(OperatorError::TooLong { .. })));
        assert_eq!(
            serde_json::to_value(eigen_check(&sp("2,1"), Operator::Omega(3), 3).unwrap()).unwrap(),
            serde_json::json!({"partition": "2,1", "operator": "omega3", "eigenvalue": "0", "isEigen": true})
        );
    }

    #[test]
    fn non_eigenfunction_reports_residual() {
        // eigenvalues 18 and 0
        let f = &schur_q(&sp("3"), 2) + &schur_q(&sp("2,1"), 2);
        let image = Operator::Omega(3).apply_poly(&f).unwrap();
        let (_, residual) = fit_eigenvalue(&f, image.as_polynomial().unwrap());
        assert!(!residual.is_zero());
    }

    #[test]
    fn hc_values() {
        assert_eq!(hc_eigenvalue_omega3(&sp("1")), rat(0));
        assert_eq!(hc_eigenvalue_omega3(&sp("3")), rat(18));
        assert_eq!(hc_eigenvalue_omega3(&sp("3,2,1")), rat(0));
    }

    #[test]
    fn rn_membership_and_evaluation() {
        let hc = RnPolynomial::hc_omega3(3);
        assert_eq!(rn_eigenvalue(&hc, &sp("2")).unwrap(), rat(4));
        let one = RnPolynomial::new(Polynomial::one(3)).unwrap();
        assert_eq!(rn_eigenvalue(&one, &sp("4,1")).unwrap(), rat(1));
        // p_1 cancels under t_i = s, t_j = -s; p_2 does not
        assert!(RnPolynomial::new(power_sum(1, 3).unwrap()).is_ok());
        assert!(matches!(RnPolynomial::new(power_sum(2, 3).unwrap()), Err(OperatorError::NotInRn(_))));
        assert!(RnPolynomial::new(Polynomial::var(2, 0)).is_err());
    }

    #[test]
    fn separation_examples() {
        let r = separation_check(&sp("3"), &sp("2,1"), 3, 9).unwrap();
        assert_ne!(rn_eigenvalue(&r, &sp("3")).unwrap(), rn_eigenvalue(&r, &sp("2,1")).unwrap());
        let r = separation_check(&sp("1"), &sp("2"), 2, 9).unwrap();
        assert_eq!(r, RnPolynomial::hc_omega3(2));
        // (1) and (3,2,1) share hc eigenvalue 0 and need a power sum
        assert!(separation_check(&sp("1"), &sp("3,2,1"), 3, 9).is_ok());
        assert_eq!(separation_check(&sp("1"), &sp("1"), 2, 9), Err(OperatorError::SamePartition));
    }

    #[test]
    fn uniqueness_small() {
        let r = uniqueness_in_degree(2, 3);
        assert!(r.ok, "{r:?}");
        assert_eq!(r.basis, vec![sp("3"), sp("2,1")]);
        assert_eq!(r.operators, vec!["omega1", "omega3"]);
        let r = uniqueness_in_degree(1, 5);
        assert!(r.ok && r.operators.is_empty());
    }

    #[test]
    fn monomial_symmetric_functions() {
        let m = monomial_symmetric(&[2, 1], 3);
        assert_eq!(m.len(), 6);
        assert!(m.is_symmetric());
        assert_eq!(monomial_symmetric(&[1, 1], 2), &Polynomial::var(2, 0) * &Polynomial::var(2, 1));
        assert_eq!(symmetric_monomial_basis(2, 2).len(), 4);
    }
}
