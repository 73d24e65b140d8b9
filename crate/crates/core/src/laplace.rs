//! The radial-part operator families and their sums.
//!
//! Operators are evaluated on concrete functions: a family at level `k` is
//! the vector `(d_i^{(k)} f)_i`, and each level is computed from the previous
//! vector, never by composing operator expressions. Every entry is reduced
//! as soon as it is produced.
//!
//! Coordinates are `x_i = e^{ε_i}`; the half-angle ratios of the exponential
//! form become `x_i/(x_i - x_j)` and `x_i/(x_i + x_j)`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::OperatorError;
use crate::poly::Polynomial;
use crate::ratfunc::{FactorId, RationalFunction};
use crate::rational::rat;

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i)
}

/// `num / ((x_i - x_j)(x_i + x_j))` for an ordered pair.
fn over_square_diff(num: Polynomial, i: usize, j: usize) -> RationalFunction {
    let (d, s) = FactorId::diff(i, j);
    let num = if s < 0 { -num } else { num };
    RationalFunction::new(num, [(d, 1), (FactorId::sum(i, j), 1)]).expect("indices in range")
}

/// `2 x_i x_j / (x_i^2 - x_j^2)`.
fn pair_coeff(n: usize, i: usize, j: usize) -> RationalFunction {
    over_square_diff((&x(n, i) * &x(n, j)).scale(&rat(2)), i, j)
}

/// `2 x_i^2 / (x_i^2 - x_j^2)`.
fn pair_coeff_sq(n: usize, i: usize, j: usize) -> RationalFunction {
    over_square_diff(x(n, i).pow(2).scale(&rat(2)), i, j)
}

/// `x_i / (x_i - x_j)`.
fn half_diff(n: usize, i: usize, j: usize) -> RationalFunction {
    RationalFunction::over_diff(x(n, i), i, j)
}

/// `x_i / (x_i + x_j)`.
fn half_sum(n: usize, i: usize, j: usize) -> RationalFunction {
    RationalFunction::new(x(n, i), [(FactorId::sum(i, j), 1)]).expect("indices in range")
}

fn euler(f: &RationalFunction, i: usize) -> RationalFunction {
    f.euler_derivative(i).expect("index below n")
}

fn sum_all(values: &[RationalFunction], n: usize) -> RationalFunction {
    values.iter().fold(RationalFunction::zero(n), |acc, v| &acc + v)
}

/// `(d_i^{(k)} f)_i` for one input `f`.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeFamily {
    level: usize,
    values: Vec<RationalFunction>,
}

impl DerivativeFamily {
    /// Level 1: the Euler derivatives `x_i df/dx_i`.
    pub fn first(f: &RationalFunction) -> Self {
        DerivativeFamily { level: 1, values: (0..f.n()).map(|i| euler(f, i)).collect() }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Next level. Odd levels add `sum_j c_ij (v_i - v_j)`; even levels use
    /// `(d_i - 1) v_i + sum_j (c_ij v_i - e_ij v_j)` with
    /// `c_ij = 2 x_i x_j / (x_i^2 - x_j^2)` and `e_ij = 2 x_i^2 / (x_i^2 - x_j^2)`.
    pub fn step(&self) -> DerivativeFamily {
        let n = self.n();
        let level = self.level + 1;
        let prev = &self.values;
        let values = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut v = euler(&prev[i], i);
                if level.is_multiple_of(2) {
                    v = &v - &prev[i];
                }
                for j in (0..n).filter(|&j| j != i) {
                    let c = pair_coeff(n, i, j);
                    let term = if level % 2 == 1 {
                        &c * &(&prev[i] - &prev[j])
                    } else {
                        &(&c * &prev[i]) - &(&pair_coeff_sq(n, i, j) * &prev[j])
                    };
                    v = &v + &term;
                }
                v
            })
            .collect();
        DerivativeFamily { level, values }
    }

    pub fn at_level(f: &RationalFunction, k: usize) -> Result<Self, OperatorError> {
        if k == 0 {
            return Err(OperatorError::ZeroLevel);
        }
        let mut fam = Self::first(f);
        while fam.level < k {
            fam = fam.step();
        }
        Ok(fam)
    }

    pub fn sum(&self) -> RationalFunction {
        let n = self.values.first().map_or(0, RationalFunction::n);
        sum_all(&self.values, n)
    }
}

/// `(d~_i^{(k)} f)_i` and `(d~_{ī}^{(k)} f)_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct TildeDerivativeFamily {
    level: usize,
    plain: Vec<RationalFunction>,
    barred: Vec<RationalFunction>,
}

impl TildeDerivativeFamily {
    pub fn first(f: &RationalFunction) -> Self {
        let d: Vec<RationalFunction> = (0..f.n()).map(|i| euler(f, i)).collect();
        TildeDerivativeFamily { level: 1, plain: d.clone(), barred: d }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn plain(&self) -> &[RationalFunction] {
        &self.plain
    }

    pub fn barred(&self) -> &[RationalFunction] {
        &self.barred
    }

    pub fn n(&self) -> usize {
        self.plain.len()
    }

    /// `Δ_i^+ = plain_i + barred_i`.
    pub fn delta_plus(&self, i: usize) -> RationalFunction {
        &self.plain[i] + &self.barred[i]
    }

    /// `Δ_i^- = plain_i - barred_i`.
    pub fn delta_minus(&self, i: usize) -> RationalFunction {
        &self.plain[i] - &self.barred[i]
    }

    /// With `a_ij = x_i/(x_i - x_j)` and `b_ij = x_i/(x_i + x_j)`:
    ///
    /// ```text
    /// plain_i'  =  d_i plain_i  + sum_{j!=i} [ a_ij (plain_i - plain_j)   - b_ij (plain_i + barred_j) ]
    /// barred_i' = -d_i barred_i - sum_{j!=i}   a_ij (barred_i - barred_j) + sum_j b_ij (barred_i + plain_j)
    /// ```
    ///
    /// The last sum also runs over `j = i`, where its term is taken as
    /// `barred_i + plain_i`. That term is what makes `Δ^±` obey
    /// `Δ^{(k)+} - Δ^{(k-1)+} = d_i Δ^- + sum_j c_ij (Δ_i^- - Δ_j^-)` and
    /// `Δ^{(k)-} = (d_i - 1) Δ^+ + sum_j (c_ij Δ_i^+ - e_ij Δ_j^+)`.
    pub fn step(&self) -> TildeDerivativeFamily {
        let n = self.n();
        let (p, b) = (&self.plain, &self.barred);
        let (plain, barred): (Vec<_>, Vec<_>) = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut np = euler(&p[i], i);
                let mut nb = -euler(&b[i], i);
                for j in (0..n).filter(|&j| j != i) {
                    let a = half_diff(n, i, j);
                    let s = half_sum(n, i, j);
                    np = &np + &(&(&a * &(&p[i] - &p[j])) - &(&s * &(&p[i] + &b[j])));
                    nb = &nb + &(&(&s * &(&b[i] + &p[j])) - &(&a * &(&b[i] - &b[j])));
                }
                nb = &nb + &(&b[i] + &p[i]);
                (np, nb)
            })
            .unzip();
        TildeDerivativeFamily { level: self.level + 1, plain, barred }
    }

    pub fn at_level(f: &RationalFunction, k: usize) -> Result<Self, OperatorError> {
        if k == 0 {
            return Err(OperatorError::ZeroLevel);
        }
        let mut fam = Self::first(f);
        while fam.level < k {
            fam = fam.step();
        }
        Ok(fam)
    }

    pub fn sum(&self) -> RationalFunction {
        let n = self.n();
        &sum_all(&self.plain, n) + &sum_all(&self.barred, n)
    }
}

/// Residuals of the two `Δ^±` recursions between consecutive tilde levels,
/// one pair per index; all zero when the recursions hold.
pub fn delta_recursion_residuals(
    prev: &TildeDerivativeFamily,
    next: &TildeDerivativeFamily,
) -> Vec<(RationalFunction, RationalFunction)> {
    let n = prev.n();
    (0..n)
        .map(|i| {
            let mut plus_rhs = euler(&prev.delta_minus(i), i);
            let mut minus_rhs = &euler(&prev.delta_plus(i), i) - &prev.delta_plus(i);
            for j in (0..n).filter(|&j| j != i) {
                let c = pair_coeff(n, i, j);
                plus_rhs = &plus_rhs + &(&c * &(&prev.delta_minus(i) - &prev.delta_minus(j)));
                minus_rhs = &minus_rhs + &(&(&c * &prev.delta_plus(i)) - &(&pair_coeff_sq(n, i, j) * &prev.delta_plus(j)));
            }
            let plus = &(&next.delta_plus(i) - &prev.delta_plus(i)) - &plus_rhs;
            let minus = &next.delta_minus(i) - &minus_rhs;
            (plus, minus)
        })
        .collect()
}

/// `Ω_k f = sum_i d_i^{(k)} f` for odd `k`.
pub fn omega(f: &RationalFunction, k: usize) -> Result<RationalFunction, OperatorError> {
    if k.is_multiple_of(2) {
        return Err(OperatorError::EvenLevel(k));
    }
    Ok(DerivativeFamily::at_level(f, k)?.sum())
}

/// `Ω~_k f = sum_i (d~_i^{(k)} + d~_{ī}^{(k)}) f`.
pub fn tilde_omega(f: &RationalFunction, k: usize) -> Result<RationalFunction, OperatorError> {
    Ok(TildeDerivativeFamily::at_level(f, k)?.sum())
}

/// `sum_i d_i^3 f - (sum_i d_i)^2 f` with the plain Euler operators.
pub fn euler_cubes(f: &RationalFunction) -> RationalFunction {
    let n = f.n();
    let cubes = sum_all(&(0..n).map(|i| euler(&euler(&euler(f, i), i), i)).collect::<Vec<_>>(), n);
    let first = sum_all(&(0..n).map(|i| euler(f, i)).collect::<Vec<_>>(), n);
    let square = sum_all(&(0..n).map(|i| euler(&first, i)).collect::<Vec<_>>(), n);
    &cubes - &square
}

/// Ω_3 written out with explicit coefficients:
///
/// ```text
/// sum d_i^3 + 6 sum_{i<j} x_i x_j/(x_i^2 - x_j^2) (d_i^2 - d_j^2)
///           - 6 sum_{i<j} x_i x_j/(x_i + x_j)^2 (d_i + d_j)
///           + 24 sum_{i<j<k} x_i x_j x_k / ((x_i^2 - x_j^2)(x_i^2 - x_k^2)(x_j^2 - x_k^2))
///                 * (x_i (x_j^2 - x_k^2) d_i - x_j (x_i^2 - x_k^2) d_j + x_k (x_i^2 - x_j^2) d_k)
///           - (sum d_i)^2
/// ```
pub fn omega3_closed(f: &RationalFunction) -> RationalFunction {
    let n = f.n();
    let d1: Vec<RationalFunction> = (0..n).map(|i| euler(f, i)).collect();
    let d2: Vec<RationalFunction> = (0..n).map(|i| euler(&d1[i], i)).collect();
    let d3: Vec<RationalFunction> = (0..n).map(|i| euler(&d2[i], i)).collect();
    let mut acc = sum_all(&d3, n);
    for [i, j] in (0..n).array_combinations() {
        let xij = &x(n, i) * &x(n, j);
        let phi = over_square_diff(xij.scale(&rat(6)), i, j);
        let psi = RationalFunction::new(xij.scale(&rat(6)), [(FactorId::sum(i, j), 2)]).expect("indices in range");
        acc = &acc + &(&phi * &(&d2[i] - &d2[j]));
        acc = &acc - &(&psi * &(&d1[i] + &d1[j]));
    }
    let sq = |a: usize| x(n, a).pow(2);
    for [i, j, k] in (0..n).array_combinations() {
        let num = (&(&x(n, i) * &x(n, j)) * &x(n, k)).scale(&rat(24));
        let den = [
            (FactorId::Diff(i, j), 1),
            (FactorId::Sum(i, j), 1),
            (FactorId::Diff(i, k), 1),
            (FactorId::Sum(i, k), 1),
            (FactorId::Diff(j, k), 1),
            (FactorId::Sum(j, k), 1),
        ];
        let pre = RationalFunction::new(num, den).expect("indices in range");
        let inner = &(&d1[i].mul_polynomial(&(&x(n, i) * &(&sq(j) - &sq(k))))
            - &d1[j].mul_polynomial(&(&x(n, j) * &(&sq(i) - &sq(k)))))
            + &d1[k].mul_polynomial(&(&x(n, k) * &(&sq(i) - &sq(j))));
        acc = &acc + &(&pre * &inner);
    }
    let first = sum_all(&d1, n);
    let square = sum_all(&(0..n).map(|i| euler(&first, i)).collect::<Vec<_>>(), n);
    &acc - &square
}

/// `δ = prod_{i<j} (x_i + x_j)/(x_i - x_j)`.
pub fn delta(n: usize) -> RationalFunction {
    let num = (0..n).array_combinations().fold(Polynomial::one(n), |acc, [i, j]| &acc * &(&x(n, i) + &x(n, j)));
    RationalFunction::new(num, (0..n).array_combinations().map(|[i, j]| (FactorId::Diff(i, j), 1)))
        .expect("indices in range")
}

pub fn delta_inverse(n: usize) -> RationalFunction {
    let num = (0..n).array_combinations().fold(Polynomial::one(n), |acc, [i, j]| &acc * &(&x(n, i) - &x(n, j)));
    RationalFunction::new(num, (0..n).array_combinations().map(|[i, j]| (FactorId::Sum(i, j), 1)))
        .expect("indices in range")
}

/// `δ^{-1} · op(δ · f)`.
pub fn conjugated_apply(op: Operator, f: &RationalFunction) -> Result<RationalFunction, OperatorError> {
    let n = f.n();
    let inner = op.apply(&(&delta(n) * f))?;
    Ok(&delta_inverse(n) * &inner)
}

/// `φ_i`, `ψ_i`, `Θ_i` over the positive roots `ε_a - ε_b`, `a < b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Auxiliary {
    pub phi: RationalFunction,
    pub psi: RationalFunction,
    pub theta: RationalFunction,
}

pub fn auxiliary_functions(i: usize, n: usize) -> Result<Auxiliary, OperatorError> {
    if i >= n {
        return Err(crate::error::AlgebraError::IndexOutOfRange { index: i, n }.into());
    }
    let roots: Vec<(usize, usize)> = (0..n).array_combinations().map(|[a, b]| (a, b)).collect();
    let on_i = |&(a, b): &(usize, usize)| -> i64 {
        if a == i {
            1
        } else if b == i {
            -1
        } else {
            0
        }
    };
    // 1/(Δ+ Δ-) = x_a x_b / (x_a^2 - x_b^2)
    let inv_pm = |&(a, b): &(usize, usize)| over_square_diff(&x(n, a) * &x(n, b), a, b);
    let mut phi = RationalFunction::zero(n);
    let mut psi = RationalFunction::zero(n);
    for r in &roots {
        let c = on_i(r);
        if c == 0 {
            continue;
        }
        phi = &phi + &inv_pm(r).scale(&rat(c));
        let (a, b) = *r;
        let inv_plus_sq =
            RationalFunction::new(&x(n, a) * &x(n, b), [(FactorId::sum(a, b), 2)]).expect("indices in range");
        psi = &psi + &inv_plus_sq.scale(&rat(c * c));
    }
    let mut theta = RationalFunction::zero(n);
    for [r, s] in roots.iter().array_combinations() {
        let c = on_i(r) * on_i(s);
        if c != 0 {
            theta = &theta + &(&inv_pm(r) * &inv_pm(s)).scale(&rat(c));
        }
    }
    Ok(Auxiliary { phi, psi, theta })
}

/// `24 Θ_i - 6 ψ_i - 12 φ_i^2 - 6 d_i(φ_i)`, which vanishes identically.
pub fn auxiliary_identity_residual(i: usize, n: usize) -> Result<RationalFunction, OperatorError> {
    let Auxiliary { phi, psi, theta } = auxiliary_functions(i, n)?;
    let d_phi = euler(&phi, i);
    Ok(&(&(&theta.scale(&rat(24)) - &psi.scale(&rat(6))) - &(&phi * &phi).scale(&rat(12))) - &d_phi.scale(&rat(6)))
}

/// Named operators accepted by the command line and the sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Operator {
    /// `Ω_k`, odd `k`.
    Omega(usize),
    /// `Ω~_k`, `k >= 1`.
    TildeOmega(usize),
    Omega3Closed,
    /// `sum d_i^3 - (sum d_i)^2`.
    EulerCubes,
}

impl Operator {
    pub fn apply(&self, f: &RationalFunction) -> Result<RationalFunction, OperatorError> {
        match *self {
            Operator::Omega(k) => omega(f, k),
            Operator::TildeOmega(k) => tilde_omega(f, k),
            Operator::Omega3Closed => Ok(omega3_closed(f)),
            Operator::EulerCubes => Ok(euler_cubes(f)),
        }
    }

    pub fn apply_poly(&self, f: &Polynomial) -> Result<RationalFunction, OperatorError> {
        self.apply(&RationalFunction::from_polynomial(f.clone()))
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operator::Omega(k) => write!(f, "omega{k}"),
            Operator::TildeOmega(k) => write!(f, "tilde-omega{k}"),
            Operator::Omega3Closed => write!(f, "omega3-closed"),
            Operator::EulerCubes => write!(f, "euler-cubes"),
        }
    }
}

impl FromStr for Operator {
    type Err = OperatorError;
    fn from_str(s: &str) -> Result<Self, OperatorError> {
        let unknown = || OperatorError::UnknownOperator(s.to_string());
        let level = |digits: &str| -> Result<usize, OperatorError> {
            let k: usize = digits.parse().map_err(|_| unknown())?;
            if k == 0 {
                Err(OperatorError::ZeroLevel)
            } else {
                Ok(k)
            }
        };
        match s {
            "omega3-closed" => Ok(Operator::Omega3Closed),
            "euler-cubes" => Ok(Operator::EulerCubes),
            _ => {
                if let Some(d) = s.strip_prefix("tilde-omega") {
                    Ok(Operator::TildeOmega(level(d)?))
                } else if let Some(d) = s.strip_prefix("omega") {
                    let k = level(d)?;
                    if k.is_multiple_of(2) {
                        Err(OperatorError::EvenLevel(k))
                    } else {
                        Ok(Operator::Omega(k))
                    }
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsym::schur_q;

    fn rf(p: Polynomial) -> RationalFunction {
        RationalFunction::from_polynomial(p)
    }

    fn q(s: &str, n: usize) -> RationalFunction {
        rf(schur_q(&s.parse().unwrap(), n))
    }

    #[test]
    fn one_variable_levels() {
        // f = x^m: levels give m, m(m-1), m^2(m-1)
        for m in 0..6i64 {
            let f = rf(x(1, 0).pow(m as u32));
            let fam = DerivativeFamily::first(&f);
            assert_eq!(fam.values()[0], f.scale(&rat(m)));
            let fam = fam.step();
            assert_eq!(fam.values()[0], f.scale(&rat(m * (m - 1))));
            let fam = fam.step();
            assert_eq!(fam.values()[0], f.scale(&rat(m * m * (m - 1))));
        }
    }

    #[test]
    fn constant_input_vanishes() {
        let f = RationalFunction::one(3);
        let fam = DerivativeFamily::at_level(&f, 5).unwrap();
        assert!(fam.values().iter().all(RationalFunction::is_zero));
        assert!(omega3_closed(&f).is_zero());
        assert!(euler_cubes(&RationalFunction::one(2).scale(&rat(7))).is_zero());
    }

    #[test]
    fn omega_eigenvalues_small() {
        assert!(omega(&q("1", 2), 3).unwrap().is_zero());
        assert_eq!(omega(&q("2", 3), 3).unwrap(), q("2", 3).scale(&rat(4)));
        assert!(omega(&q("2,1", 3), 3).unwrap().is_zero());
        assert_eq!(omega(&q("3,1", 2), 1).unwrap(), q("3,1", 2).scale(&rat(4)));
        assert_eq!(omega(&q("1", 2), 2), Err(OperatorError::EvenLevel(2)));
    }

    #[test]
    fn closed_form_agrees_with_recursion() {
        for (lam, n) in [("2", 2), ("2,1", 3), ("3", 3)] {
            assert_eq!(omega3_closed(&q(lam, n)), omega(&q(lam, n), 3).unwrap(), "{lam} n={n}");
        }
        assert_eq!(omega3_closed(&q("3", 3)), q("3", 3).scale(&rat(18)));
        // agreement is an operator identity, not only on eigenfunctions
        let f = rf(&x(3, 0).pow(2) * &x(3, 1));
        assert_eq!(omega3_closed(&f), omega(&f, 3).unwrap());
    }

    #[test]
    fn tilde_relations_on_q2() {
        let f = q("2", 2);
        let om = |k| omega(&f, k).unwrap();
        let tom = |k| tilde_omega(&f, k).unwrap();
        assert_eq!(tom(1), om(1).scale(&rat(2)));
        assert_eq!(tom(2), om(1).scale(&rat(2)));
        assert_eq!(tom(3), &om(3).scale(&rat(2)) + &om(1).scale(&rat(2)));
        assert_eq!(tom(4), &om(3).scale(&rat(4)) + &om(1).scale(&rat(2)));
    }

    #[test]
    fn delta_recursions_hold() {
        let f = q("2", 2);
        let mut fam = TildeDerivativeFamily::first(&f);
        assert_eq!(fam.plain(), fam.barred());
        for _ in 1..4 {
            let next = fam.step();
            for (p, m) in delta_recursion_residuals(&fam, &next) {
                assert!(p.is_zero() && m.is_zero());
            }
            fam = next;
        }
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta(1), RationalFunction::one(1));
        let d2 = RationalFunction::new(&x(2, 0) + &x(2, 1), [(FactorId::Diff(0, 1), 1)]).unwrap();
        assert_eq!(delta(2), d2);
        assert_eq!(&delta(2) * &delta_inverse(2), RationalFunction::one(2));
        assert_eq!(&delta(3) * &delta_inverse(3), RationalFunction::one(3));
        assert_eq!(delta(3).denominator().len(), 3);
    }

    #[test]
    fn conjugation_on_a_monomial() {
        let f = rf(&x(2, 0) * &x(2, 1));
        let lhs = conjugated_apply(Operator::Omega3Closed, &f).unwrap();
        assert_eq!(lhs, euler_cubes(&f));
        assert!(conjugated_apply(Operator::Omega3Closed, &RationalFunction::one(2)).unwrap().is_zero());
    }

    #[test]
    fn auxiliary_two_variables() {
        let aux = auxiliary_functions(0, 2).unwrap();
        let want = over_square_diff(&x(2, 0) * &x(2, 1), 0, 1);
        assert_eq!(aux.phi, want);
        assert!(aux.theta.is_zero());
        assert!(auxiliary_identity_residual(0, 2).unwrap().is_zero());
        assert!(auxiliary_identity_residual(0, 3).unwrap().is_zero());
        assert!(auxiliary_functions(2, 2).is_err());
    }

    #[test]
    fn euler_derivative_quotient_example() {
        let f = RationalFunction::over_diff(x(2, 0), 0, 1);
        let got = euler(&f, 0);
        let want = RationalFunction::new(-(&x(2, 0) * &x(2, 1)), [(FactorId::Diff(0, 1), 2)]).unwrap();
        assert_eq!(got, want);
    }

    #[test]
    fn operator_names() {
        for s in ["omega1", "omega3", "omega5", "tilde-omega1", "tilde-omega4", "omega3-closed", "euler-cubes"] {
            assert_eq!(s.parse::<Operator>().unwrap().to_string(), s);
        }
        assert_eq!("omega2".parse::<Operator>(), Err(OperatorError::EvenLevel(2)));
        assert!("omega".parse::<Operator>().is_err());
        assert!("laplace".parse::<Operator>().is_err());
        assert_eq!("tilde-omega0".parse::<Operator>(), Err(OperatorError::ZeroLevel));
    }
}
