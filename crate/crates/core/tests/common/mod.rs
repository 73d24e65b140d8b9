//! Independent reference computations for the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_traits::{One, Zero};
use qschur::rational::{rat, Rational};
use qschur::{Monomial, Polynomial};

fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=d)
        .flat_map(|first| {
            exponent_vectors(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Complete homogeneous symmetric polynomial.
pub fn h(k: u32, n: usize) -> Polynomial {
    Polynomial::from_terms(n, exponent_vectors(n, k).into_iter().map(|e| (Monomial::from_exponents(&e), rat(1))))
        .unwrap()
}

/// Elementary symmetric polynomial.
pub fn e(k: u32, n: usize) -> Polynomial {
    let terms = exponent_vectors(n, k)
        .into_iter()
        .filter(|v| v.iter().all(|&x| x <= 1))
        .map(|v| (Monomial::from_exponents(&v), rat(1)));
    Polynomial::from_terms(n, terms).unwrap()
}

/// `q_k = sum_{a+b=k} e_a h_b`, from `prod (1 + x t)/(1 - x t) = E(t) H(t)`.
pub fn q_oracle(k: u32, n: usize) -> Polynomial {
    (0..=k).fold(Polynomial::zero(n), |acc, a| &acc + &(&e(a, n) * &h(k - a, n)))
}

pub fn q_two_oracle(k: u32, l: u32, n: usize) -> Polynomial {
    let mut acc = &q_oracle(k, n) * &q_oracle(l, n);
    for p in 1..=l {
        let t = (&q_oracle(k + p, n) * &q_oracle(l - p, n)).scale(&rat(2 * if p % 2 == 1 { -1 } else { 1 }));
        acc = &acc + &t;
    }
    acc
}

/// `Q_λ` for up to four parts by explicit Pfaffian expansion.
pub fn schur_q_oracle(parts: &[u32], n: usize) -> Polynomial {
    let qq = |a: u32, b: u32| q_two_oracle(a, b, n);
    match *parts {
        [] => Polynomial::one(n),
        [a] => q_oracle(a, n),
        [a, b] => qq(a, b),
        [a, b, c] => &(&(&q_oracle(a, n) * &qq(b, c)) - &(&q_oracle(b, n) * &qq(a, c))) + &(&q_oracle(c, n) * &qq(a, b)),
        [a, b, c, d] => &(&(&qq(a, b) * &qq(c, d)) - &(&qq(a, c) * &qq(b, d))) + &(&qq(a, d) * &qq(b, c)),
        _ => panic!("oracle covers at most four parts"),
    }
}

/// Standard shifted tableaux, counted by removing the largest entry from
/// every corner that leaves a strict shape.
pub fn count_shifted_tableaux(parts: &[u32]) -> u64 {
    fn go(shape: Vec<u32>, memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        if shape.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(&shape) {
            return v;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let mut next = shape.clone();
            next[i] -= 1;
            let strict = next.get(i + 1).is_none_or(|&below| next[i] > below);
            if strict {
                if next[i] == 0 {
                    next.pop();
                }
                total += go(next, memo);
            }
        }
        memo.insert(shape, total);
        total
    }
    go(parts.to_vec(), &mut HashMap::new())
}

/// Pfaffian as a signed sum over perfect matchings.
pub fn pfaffian_by_matchings(a: &[Vec<Rational>]) -> Rational {
    fn go(a: &[Vec<Rational>], idx: &[usize]) -> Rational {
        if idx.is_empty() {
            return Rational::one();
        }
        let (first, rest) = (idx[0], &idx[1..]);
        let mut total = Rational::zero();
        for (pos, &j) in rest.iter().enumerate() {
            let remaining: Vec<usize> = rest.iter().copied().filter(|&x| x != j).collect();
            let term = &a[first][j] * &go(a, &remaining);
            if pos % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    let idx: Vec<usize> = (0..a.len()).collect();
    go(a, &idx)
}

/// Determinant by Leibniz expansion along the first row.
pub fn determinant_by_minors(a: &[Vec<Rational>]) -> Rational {
    if a.is_empty() {
        return Rational::one();
    }
    (0..a.len())
        .filter(|&j| !a[0][j].is_zero())
        .map(|j| {
            let minor: Vec<Vec<Rational>> =
                a[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect()).collect();
            let t = &a[0][j] * &determinant_by_minors(&minor);
            if j % 2 == 0 { t } else { -t }
        })
        .fold(Rational::zero(), |acc, t| acc + t)
}
