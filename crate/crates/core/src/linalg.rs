//! Dense exact linear algebra over the rationals.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(size: usize) -> Matrix {
    (0..size).map(|i| (0..size).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect()
}

/// Reduced row echelon form and the pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : m v = 0}`.
pub fn nullspace(m: &Matrix, cols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[row][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = b`. Returns `None` if inconsistent; free variables are set to zero.
pub fn solve(m: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = m.first().map_or(0, Vec::len);
    let aug: Matrix = m.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[row][cols].clone();
    }
    Some(x)
}

/// Determinant by fraction-ful Gaussian elimination.
pub fn determinant(m: &Matrix) -> Rational {
    let mut a = m.clone();
    let size = a.len();
    let mut det = Rational::one();
    for c in 0..size {
        let Some(p) = (c..size).find(|&i| !a[i][c].is_zero()) else { return Rational::zero() };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..size {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..size {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    det
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Coefficient matrix of `polys` against the union of their monomials:
/// one row per monomial (descending grevlex), one column per polynomial.
pub fn coefficient_matrix(polys: &[&Polynomial]) -> (Vec<Monomial>, Matrix) {
    let monos: BTreeSet<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    let monos: Vec<Monomial> = monos.into_iter().rev().collect();
    let m = monos.iter().map(|mono| polys.iter().map(|p| p.coefficient(mono)).collect()).collect();
    (monos, m)
}

/// Coordinates of `target` in the span of `basis`, if it lies there.
pub fn express_in_basis(target: &Polynomial, basis: &[Polynomial]) -> Option<Vec<Rational>> {
    let mut all: Vec<&Polynomial> = basis.iter().collect();
    all.push(target);
    let (_, m) = coefficient_matrix(&all);
    let k = basis.len();
    let a: Matrix = m.iter().map(|row| row[..k].to_vec()).collect();
    let b: Vec<Rational> = m.iter().map(|row| row[k].clone()).collect();
    if a.is_empty() {
        // target and basis are all zero
        return Some(vec![Rational::zero(); k]);
    }
    solve(&a, &b)
}
