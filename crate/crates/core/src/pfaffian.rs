//! Pfaffians of skew-symmetric matrices over an arbitrary commutative ring,
//! by recursive expansion along the first row (no division).

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ratfunc::RationalFunction;

/// Arithmetic needed by ring-generic routines. The ring is a value so that
/// polynomial rings can carry their variable count.
pub trait Ring {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
}

pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;
    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
}

/// Polynomials in a fixed number of variables.
pub struct PolyRing(pub usize);

impl Ring for PolyRing {
    type Elem = Polynomial;
    fn zero(&self) -> Polynomial {
        Polynomial::zero(self.0)
    }
    fn one(&self) -> Polynomial {
        Polynomial::one(self.0)
    }
    fn is_zero(&self, a: &Polynomial) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }
    fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a - b
    }
    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a * b
    }
    fn neg(&self, a: &Polynomial) -> Polynomial {
        -a
    }
}

pub struct RatFuncRing(pub usize);

impl Ring for RatFuncRing {
    type Elem = RationalFunction;
    fn zero(&self) -> RationalFunction {
        RationalFunction::zero(self.0)
    }
    fn one(&self) -> RationalFunction {
        RationalFunction::one(self.0)
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a - b
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
}

/// `Pf(A) = sum_{j>=2} (-1)^j A_1j Pf(A without rows/cols 1, j)` (1-based),
/// with `Pf` of the empty matrix equal to one.
pub fn pfaffian<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> Result<R::Elem, AlgebraError> {
    let size = a.len();
    if let Some(row) = a.iter().find(|r| r.len() != size) {
        return Err(AlgebraError::BadPfaffianShape { rows: size, cols: row.len() });
    }
    if size % 2 == 1 {
        return Err(AlgebraError::BadPfaffianShape { rows: size, cols: size });
    }
    for i in 0..size {
        if !ring.is_zero(&a[i][i]) {
            return Err(AlgebraError::NotSkewSymmetric);
        }
        for j in i + 1..size {
            if ring.neg(&a[i][j]) != a[j][i] {
                return Err(AlgebraError::NotSkewSymmetric);
            }
        }
    }
    let idx: Vec<usize> = (0..size).collect();
    Ok(expand(ring, a, &idx))
}

fn expand<R: Ring>(ring: &R, a: &[Vec<R::Elem>], idx: &[usize]) -> R::Elem {
    if idx.is_empty() {
        return ring.one();
    }
    let first = idx[0];
    let mut acc = ring.zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = &a[first][j];
        if ring.is_zero(entry) {
            continue;
        }
        let rest: Vec<usize> = idx.iter().copied().filter(|&k| k != first && k != j).collect();
        let term = ring.mul(entry, &expand(ring, a, &rest));
        // pos is 0-based, so the 1-based column is pos + 1 and the sign is (-1)^(pos+1+1).
        acc = if pos % 2 == 1 { ring.add(&acc, &term) } else { ring.sub(&acc, &term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn skew(upper: &[(usize, usize, i64)], size: usize) -> Vec<Vec<Rational>> {
        let mut m = vec![vec![rat(0); size]; size];
        for &(i, j, v) in upper {
            m[i][j] = rat(v);
            m[j][i] = rat(-v);
        }
        m
    }

    #[test]
    fn two_by_two() {
        assert_eq!(pfaffian(&Rationals, &skew(&[(0, 1, 7)], 2)).unwrap(), rat(7));
    }

    #[test]
    fn empty_is_one() {
        assert_eq!(pfaffian(&Rationals, &[]).unwrap(), rat(1));
    }

    #[test]
    fn four_by_four_symbolic() {
        // entries a_ij as independent variables
        let n = 6;
        let vars = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut m = vec![vec![Polynomial::zero(n); 4]; 4];
        for (k, &(i, j)) in vars.iter().enumerate() {
            m[i][j] = Polynomial::var(n, k);
            m[j][i] = -Polynomial::var(n, k);
        }
        let a = |k: usize| Polynomial::var(n, k);
        let want = &(&(&a(0) * &a(5)) - &(&a(1) * &a(4))) + &(&a(2) * &a(3));
        assert_eq!(pfaffian(&PolyRing(n), &m).unwrap(), want);
    }

    #[test]
    fn rejects_bad_input() {
        let mut m = skew(&[(0, 1, 1)], 2);
        m[0][1] = rat(2);
        assert_eq!(pfaffian(&Rationals, &m), Err(AlgebraError::NotSkewSymmetric));
        let odd = vec![vec![rat(0); 3]; 3];
        assert!(matches!(pfaffian(&Rationals, &odd), Err(AlgebraError::BadPfaffianShape { .. })));
        let ragged = vec![vec![rat(0); 2], vec![rat(0); 1]];
        assert!(pfaffian(&Rationals, &ragged).is_err());
    }
}
