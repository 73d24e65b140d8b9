//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are indexed from 0 in the API and printed from 1 (`x1`, `x2`, ...).
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is the
//! graded reverse-lexicographic order, so iteration is ascending grevlex and
//! the leading term is the last entry.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::AlgebraError;
use crate::rational::{format_rational, parse_rational, Rational};

pub type Exponents = SmallVec<[u32; 6]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Returns the monomial with `x_i`'s exponent changed by `delta`, or
    /// `None` if it would go negative.
    pub fn shift(&self, i: usize, delta: i64) -> Option<Monomial> {
        let e = self.0[i] as i64 + delta;
        if e < 0 {
            return None;
        }
        let mut out = self.clone();
        out.0[i] = e as u32;
        Some(out)
    }

    fn swapped(&self, i: usize, j: usize) -> Monomial {
        let mut out = self.clone();
        out.0.swap(i, j);
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n(), other.n());
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        // Tie: the smaller exponent in the last differing variable wins.
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

/// Value assigned to a variable by [`Polynomial::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Assign {
    Value(Rational),
    T,
    MinusT,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(n), c);
        }
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n = m.n();
        let mut p = Self::zero(n);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, merging
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(AlgebraError::VariableCountMismatch { left: n, right: m.n() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant value if the polynomial has no variables in any term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub fn degree_in(&self, i: usize) -> i64 {
        self.terms.keys().map(|m| m.exponent(i) as i64).max().unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Grevlex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_n(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.n != other.n {
            Err(AlgebraError::VariableCountMismatch { left: self.n, right: other.n })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check_n(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.n));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        Ok(Polynomial { n: self.n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.n);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `x_i * d/dx_i`.
    pub fn euler_derivative(&self, i: usize) -> Result<Polynomial, AlgebraError> {
        if i >= self.n {
            return Err(AlgebraError::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(i) > 0)
                .map(|(m, c)| (m.clone(), c * Rational::from_integer(m.exponent(i).into())))
                .collect(),
        })
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.swapped(i, j), c.clone())).collect() }
    }

    /// Symmetric under all permutations of the variables (checked on the
    /// adjacent transpositions, which generate the symmetric group).
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| &self.swap_vars(i, i + 1) == self)
    }

    /// Appends `extra` variables that do not occur.
    pub fn with_extra_vars(&self, extra: usize) -> Polynomial {
        let n = self.n + extra;
        Polynomial {
            n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(n, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        if point.len() != self.n {
            return Err(AlgebraError::VariableCountMismatch { left: self.n, right: point.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes the assigned variables. The result's variables are the
    /// unassigned ones in their original order, followed by a new variable
    /// `t` when some assignment uses `t` or `-t`.
    pub fn substitute(&self, assignment: &[(usize, Assign)]) -> Result<Polynomial, AlgebraError> {
        let mut slot: Vec<Option<&Assign>> = vec![None; self.n];
        for (i, a) in assignment {
            if *i >= self.n {
                return Err(AlgebraError::IndexOutOfRange { index: *i, n: self.n });
            }
            if slot[*i].replace(a).is_some() {
                return Err(AlgebraError::BadSubstitution(format!("x{} assigned twice", i + 1)));
            }
        }
        let uses_t = assignment.iter().any(|(_, a)| matches!(a, Assign::T | Assign::MinusT));
        let free: Vec<usize> = (0..self.n).filter(|&i| slot[i].is_none()).collect();
        let out_n = free.len() + uses_t as usize;
        let mut out = Polynomial::zero(out_n);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut t_exp = 0u32;
            for (i, a) in slot.iter().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                match a {
                    None => {}
                    Some(Assign::Value(v)) => coeff *= num_traits::pow(v.clone(), e as usize),
                    Some(Assign::T) => t_exp += e,
                    Some(Assign::MinusT) => {
                        t_exp += e;
                        if e % 2 == 1 {
                            coeff = -coeff;
                        }
                    }
                }
                if coeff.is_zero() {
                    break;
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let mut exps: Exponents = free.iter().map(|&i| m.exponent(i)).collect();
            if uses_t {
                exps.push(t_exp);
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }

    /// Splits the polynomial by powers of `x_i`: entry `k` holds the
    /// coefficient of `x_i^k` (with `x_i` absent).
    pub(crate) fn coefficients_in(&self, i: usize) -> Vec<Polynomial> {
        let d = self.degree_in(i);
        let mut out = vec![Polynomial::zero(self.n); (d + 1).max(0) as usize];
        for (m, c) in &self.terms {
            let k = m.exponent(i) as usize;
            let mut mm = m.clone();
            mm.0[i] = 0;
            out[k].terms.insert(mm, c.clone());
        }
        out
    }

    /// Canonical text form, terms in descending grevlex order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            n: self.n,
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermRepr { exp: m.exponents().to_vec(), coeff: format_rational(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let terms = repr
            .terms
            .into_iter()
            .map(|t| Ok((Monomial::from_exponents(&t.exp), parse_rational(&t.coeff)?)))
            .collect::<Result<Vec<_>, AlgebraError>>()
            .map_err(D::Error::custom)?;
        Polynomial::from_terms(repr.n, terms).map_err(D::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial variable counts differ")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
