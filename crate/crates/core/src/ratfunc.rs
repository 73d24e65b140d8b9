//! Rational functions whose denominators factor over the fixed family
//! `{x_i, x_i - x_j, x_i + x_j}`.
//!
//! Denominators are stored as factor multisets, so a common denominator is
//! the componentwise maximum of multiplicities and reduction is trial
//! division by each stored factor. No multivariate gcd is ever needed.
//! Because the factors are pairwise non-associate irreducibles, a reduced
//! value has a unique representation and structural equality is equality
//! of functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Denominator atom. `Diff` and `Sum` always store `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorId {
    Var(usize),
    Diff(usize, usize),
    Sum(usize, usize),
}

impl FactorId {
    /// `x_i - x_j` as a canonical factor and the sign it carries.
    pub fn diff(i: usize, j: usize) -> (FactorId, i32) {
        assert_ne!(i, j, "x_i - x_i is not a factor");
        if i < j {
            (FactorId::Diff(i, j), 1)
        } else {
            (FactorId::Diff(j, i), -1)
        }
    }

    pub fn sum(i: usize, j: usize) -> FactorId {
        assert_ne!(i, j, "x_i + x_i is not a factor");
        FactorId::Sum(i.min(j), i.max(j))
    }

    fn max_index(&self) -> usize {
        match *self {
            FactorId::Var(i) => i,
            FactorId::Diff(_, j) | FactorId::Sum(_, j) => j,
        }
    }

    pub fn involves(&self, k: usize) -> bool {
        match *self {
            FactorId::Var(i) => i == k,
            FactorId::Diff(i, j) | FactorId::Sum(i, j) => i == k || j == k,
        }
    }

    pub fn to_polynomial(&self, n: usize) -> Polynomial {
        match *self {
            FactorId::Var(i) => Polynomial::var(n, i),
            FactorId::Diff(i, j) => &Polynomial::var(n, i) - &Polynomial::var(n, j),
            FactorId::Sum(i, j) => &Polynomial::var(n, i) + &Polynomial::var(n, j),
        }
    }

    /// `x_k * d/dx_k` applied to the factor itself.
    fn euler_derivative(&self, n: usize, k: usize) -> Polynomial {
        match *self {
            FactorId::Var(i) if i == k => Polynomial::var(n, k),
            FactorId::Diff(i, _) if i == k => Polynomial::var(n, k),
            FactorId::Diff(_, j) if j == k => -Polynomial::var(n, k),
            FactorId::Sum(i, j) if i == k || j == k => Polynomial::var(n, k),
            _ => Polynomial::zero(n),
        }
    }
}

impl fmt::Display for FactorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FactorId::Var(i) => write!(f, "x{}", i + 1),
            FactorId::Diff(i, j) => write!(f, "(x{} - x{})", i + 1, j + 1),
            FactorId::Sum(i, j) => write!(f, "(x{} + x{})", i + 1, j + 1),
        }
    }
}

/// Exact division of `p` by a factor; `None` when the factor does not divide.
pub fn exact_divide(p: &Polynomial, f: FactorId) -> Option<Polynomial> {
    let n = p.n();
    if f.max_index() >= n {
        return None;
    }
    if p.is_zero() {
        return Some(Polynomial::zero(n));
    }
    match f {
        FactorId::Var(i) => {
            if p.terms().any(|(m, _)| m.exponent(i) == 0) {
                return None;
            }
            Polynomial::from_terms(n, p.terms().map(|(m, c)| (m.shift(i, -1).unwrap(), c.clone()))).ok()
        }
        FactorId::Diff(i, j) => divide_linear(p, i, j, true),
        FactorId::Sum(i, j) => divide_linear(p, i, j, false),
    }
}

/// Divides by `x_i - x_j` (`minus`) or `x_i + x_j` with Horner's scheme in `x_i`.
fn divide_linear(p: &Polynomial, i: usize, j: usize, minus: bool) -> Option<Polynomial> {
    let n = p.n();
    let coeffs = p.coefficients_in(i);
    let d = coeffs.len() - 1;
    if d == 0 {
        return None;
    }
    let xj = if minus { Polynomial::var(n, j) } else { -Polynomial::var(n, j) };
    // q[k] is the coefficient of x_i^k in the quotient.
    let mut q = vec![Polynomial::zero(n); d];
    q[d - 1] = coeffs[d].clone();
    for k in (1..d).rev() {
        q[k - 1] = &coeffs[k] + &(&xj * &q[k]);
    }
    let rem = &coeffs[0] + &(&xj * &q[0]);
    if !rem.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    for (k, qk) in q.into_iter().enumerate() {
        for (m, c) in qk.terms() {
            out.push((m.shift(i, k as i64).unwrap(), c.clone()));
        }
    }
    Polynomial::from_terms(n, out).ok()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: BTreeMap<FactorId, u32>,
}

impl RationalFunction {
    pub fn zero(n: usize) -> Self {
        Self::from_polynomial(Polynomial::zero(n))
    }

    pub fn one(n: usize) -> Self {
        Self::from_polynomial(Polynomial::one(n))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalFunction { num: p, den: BTreeMap::new() }
    }

    /// `num / prod(f^m)`, reduced.
    pub fn new<I>(num: Polynomial, den: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (FactorId, u32)>,
    {
        let n = num.n();
        let mut d = BTreeMap::new();
        for (f, m) in den {
            if f.max_index() >= n {
                return Err(AlgebraError::IndexOutOfRange { index: f.max_index(), n });
            }
            if m > 0 {
                *d.entry(f).or_insert(0) += m;
            }
        }
        let mut r = RationalFunction { num, den: d };
        r.reduce();
        Ok(r)
    }

    /// `num` over `x_i - x_j` for any ordered pair, with the sign absorbed.
    pub fn over_diff(num: Polynomial, i: usize, j: usize) -> Self {
        let (f, s) = FactorId::diff(i, j);
        let num = if s < 0 { -num } else { num };
        Self::new(num, [(f, 1)]).expect("indices checked by caller")
    }

    pub fn n(&self) -> usize {
        self.num.n()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<FactorId, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn into_polynomial(self) -> Result<Polynomial, Self> {
        if self.den.is_empty() {
            Ok(self.num)
        } else {
            Err(self)
        }
    }

    pub fn denominator_polynomial(&self) -> Polynomial {
        let n = self.n();
        self.den.iter().fold(Polynomial::one(n), |acc, (f, &m)| &acc * &f.to_polynomial(n).pow(m))
    }

    pub fn denominator_string(&self) -> String {
        self.den
            .iter()
            .map(|(f, &m)| if m == 1 { f.to_string() } else { format!("{f}^{m}") })
            .collect::<Vec<_>>()
            .join("*")
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let factors: Vec<FactorId> = self.den.keys().copied().collect();
        for f in factors {
            let m = self.den.get_mut(&f).unwrap();
            while *m > 0 {
                match exact_divide(&self.num, f) {
                    Some(q) => {
                        self.num = q;
                        *m -= 1;
                    }
                    None => break,
                }
            }
            if *m == 0 {
                self.den.remove(&f);
            }
        }
    }

    fn check_n(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.n() != other.n() {
            Err(AlgebraError::VariableCountMismatch { left: self.n(), right: other.n() })
        } else {
            Ok(())
        }
    }

    /// Numerators of `self` and `other` over their least common factor multiset.
    fn over_common(&self, other: &Self) -> (Polynomial, Polynomial, BTreeMap<FactorId, u32>) {
        let n = self.n();
        let mut common = self.den.clone();
        for (f, &m) in &other.den {
            let e = common.entry(*f).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &RationalFunction| {
            let mut p = r.num.clone();
            for (f, &m) in &common {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have {
                    p = &p * &f.to_polynomial(n).pow(m - have);
                }
            }
            p
        };
        (lift(self), lift(other), common)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_n(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let (a, b, den) = self.over_common(other);
        let mut r = RationalFunction { num: &a + &b, den };
        r.reduce();
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_n(other)?;
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_n(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.n()));
        }
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(*f).or_insert(0) += m;
        }
        let mut r = RationalFunction { num: &self.num * &other.num, den };
        r.reduce();
        Ok(r)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_polynomial(&self, p: &Polynomial) -> Self {
        let mut r = RationalFunction { num: &self.num * p, den: self.den.clone() };
        r.reduce();
        r
    }

    /// `x_i * d/dx_i` by the quotient rule over the factored denominator:
    /// `d(N/D) = dN/D - N * sum_f m_f * df/f / D`.
    pub fn euler_derivative(&self, i: usize) -> Result<Self, AlgebraError> {
        let n = self.n();
        let d_num = self.num.euler_derivative(i)?;
        let touching: Vec<(FactorId, u32)> =
            self.den.iter().filter(|(f, _)| f.involves(i)).map(|(f, &m)| (*f, m)).collect();
        if touching.is_empty() {
            let mut r = RationalFunction { num: d_num, den: self.den.clone() };
            r.reduce();
            return Ok(r);
        }
        // Var(i) has x_i f'/f = 1, so it contributes without raising the denominator.
        let var_mult = touching.iter().find(|(f, _)| *f == FactorId::Var(i)).map(|(_, m)| *m).unwrap_or(0);
        let linear: Vec<(FactorId, u32)> = touching.into_iter().filter(|(f, _)| *f != FactorId::Var(i)).collect();
        let polys: Vec<Polynomial> = linear.iter().map(|(f, _)| f.to_polynomial(n)).collect();
        let all = polys.iter().fold(Polynomial::one(n), |acc, p| &acc * p);

        let mut num = &d_num - &self.num.scale(&Rational::from_integer(var_mult.into()));
        num = &num * &all;
        for (k, (f, m)) in linear.iter().enumerate() {
            let others = polys
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .fold(Polynomial::one(n), |acc, (_, p)| &acc * p);
            let term = &(&self.num * &f.euler_derivative(n, i)) * &others;
            num = &num - &term.scale(&Rational::from_integer((*m).into()));
        }
        let mut den = self.den.clone();
        for (f, _) in &linear {
            *den.get_mut(f).unwrap() += 1;
        }
        let mut r = RationalFunction { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Option<Rational>, AlgebraError> {
        let d = self.denominator_polynomial().eval(point)?;
        if d.is_zero() {
            return Ok(None);
        }
        Ok(Some(self.num.eval(point)? / d))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.denominator_string())
        }
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs).expect("rational function variable counts differ")
            }
        }
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}
