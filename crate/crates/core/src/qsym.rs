//! Projective Schur Q-functions, power sums, the characteristic map and
//! shifted tableaux counts.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::SymError;
use crate::linalg;
use crate::partition::{OddCycleType, StrictPartition};
use crate::pfaffian::{pfaffian, PolyRing};
use crate::poly::{Assign, Monomial, Polynomial};
use crate::rational::{format_rational, rat, Rational};

/// `q_0, ..., q_maxdeg`: coefficients of `t^k` in `prod (1 + x_i t) / (1 - x_i t)`.
pub fn q_series(n: usize, maxdeg: usize) -> Vec<Polynomial> {
    let mut series = vec![Polynomial::zero(n); maxdeg + 1];
    series[0] = Polynomial::one(n);
    // each factor is 1 + 2 sum_{j>=1} x_i^j t^j
    for i in 0..n {
        let powers: Vec<Polynomial> =
            (0..=maxdeg).map(|j| Polynomial::monomial(pow_var(n, i, j as u32), rat(2))).collect();
        let mut next = series.clone();
        for k in 1..=maxdeg {
            for j in 1..=k {
                if !series[k - j].is_zero() {
                    next[k] = &next[k] + &(&series[k - j] * &powers[j]);
                }
            }
        }
        series = next;
    }
    series
}

fn pow_var(n: usize, i: usize, e: u32) -> Monomial {
    let mut exps = vec![0; n];
    exps[i] = e;
    Monomial::from_exponents(&exps)
}

/// `Q_{k,l} = q_k q_l + 2 sum_{p=1}^{l} (-1)^p q_{k+p} q_{l-p}` from a
/// precomputed series (which must reach degree `k + l`).
pub fn q_two_from(q: &[Polynomial], k: usize, l: usize) -> Polynomial {
    let mut acc = &q[k] * &q[l];
    for p in 1..=l {
        let term = (&q[k + p] * &q[l - p]).scale(&rat(2));
        acc = if p % 2 == 1 { &acc - &term } else { &acc + &term };
    }
    acc
}

pub fn q_two(k: usize, l: usize, n: usize) -> Polynomial {
    q_two_from(&q_series(n, k + l), k, l)
}

/// `Q_λ` as the Pfaffian of `(Q_{λ_i λ_j})`, bordering odd-length `λ` with a zero part.
pub fn schur_q(lambda: &StrictPartition, n: usize) -> Polynomial {
    let mut parts: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let top = parts.iter().take(2).sum::<usize>();
    let q = q_series(n, top);
    let m = parts.len();
    let mut a = vec![vec![Polynomial::zero(n); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let e = q_two_from(&q, parts[i], parts[j]);
            a[j][i] = -&e;
            a[i][j] = e;
        }
    }
    pfaffian(&PolyRing(n), &a).expect("Q matrix is skew-symmetric by construction")
}

/// `p_l = sum_i x_i^l`.
pub fn power_sum(l: u32, n: usize) -> Result<Polynomial, SymError> {
    if l == 0 {
        return Err(SymError::ZeroPowerSum);
    }
    Ok(Polynomial::from_terms(n, (0..n).map(|i| (pow_var(n, i, l), Rational::one())))
        .expect("monomials built with n variables"))
}

fn power_sum_product(nu: &OddCycleType, n: usize) -> Polynomial {
    nu.parts()
        .iter()
        .fold(Polynomial::one(n), |acc, &p| &acc * &power_sum(p, n).expect("odd parts are positive"))
}

/// `ch(ν) = 2^{l(ν)} p_ν`.
pub fn char_map(nu: &OddCycleType, n: usize) -> Polynomial {
    let two_pow = Rational::from_integer(BigInt::one() << nu.len());
    power_sum_product(nu, n).scale(&two_pow)
}

/// `sum c_ν p_ν` over odd cycle types.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PowerSumExpansion(BTreeMap<OddCycleType, Rational>);

impl PowerSumExpansion {
    pub fn terms(&self) -> &BTreeMap<OddCycleType, Rational> {
        &self.0
    }

    pub fn get(&self, nu: &OddCycleType) -> Rational {
        self.0.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    /// Rebuilds the polynomial in `n` variables.
    pub fn to_polynomial(&self, n: usize) -> Polynomial {
        self.0.iter().fold(Polynomial::zero(n), |acc, (nu, c)| &acc + &power_sum_product(nu, n).scale(c))
    }
}

impl Serialize for PowerSumExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (nu, c) in self.0.iter().rev() {
            map.serialize_entry(&nu.to_string(), &format_rational(c))?;
        }
        map.end()
    }
}

/// Expresses a symmetric polynomial in odd power sums by an exact linear
/// solve, one homogeneous degree at a time.
pub fn expand_in_power_sums(p: &Polynomial, maxweight: usize) -> Result<PowerSumExpansion, SymError> {
    let n = p.n();
    if !p.is_symmetric() {
        return Err(SymError::NotSymmetric);
    }
    let deg = p.degree();
    if deg > maxweight as i64 {
        return Err(SymError::DegreeTooLarge { degree: deg as usize, max: maxweight });
    }
    let mut out = BTreeMap::new();
    for d in 0..=deg.max(0) as u32 {
        let part = p.homogeneous_part(d);
        if part.is_zero() {
            continue;
        }
        if (n as u32) < d {
            return Err(SymError::TooFewVariables { degree: d as usize, n });
        }
        let types = OddCycleType::all_of_weight(d);
        let basis: Vec<Polynomial> = types.iter().map(|nu| power_sum_product(nu, n)).collect();
        let coords = linalg::express_in_basis(&part, &basis).ok_or(SymError::NotInSpan { degree: d as usize })?;
        for (nu, c) in types.into_iter().zip(coords) {
            if !c.is_zero() {
                out.insert(nu, c);
            }
        }
    }
    Ok(PowerSumExpansion(out))
}

/// Whether `p(t, -t, x_3, ...)` is free of `t`. Symmetry makes one pair enough.
pub fn is_supersymmetric(p: &Polynomial) -> Result<bool, SymError> {
    if !p.is_symmetric() {
        return Err(SymError::NotSymmetric);
    }
    if p.n() < 2 {
        return Ok(true);
    }
    let s = p.substitute(&[(0, Assign::T), (1, Assign::MinusT)])?;
    let t = s.n() - 1;
    Ok(s.degree_in(t) <= 0)
}

/// Number of standard shifted tableaux of shape `λ`:
/// `|λ|! / prod λ_i! * prod_{i<j} (λ_i - λ_j) / (λ_i + λ_j)`.
pub fn shifted_tableaux_count(lambda: &StrictPartition) -> BigUint {
    let fact = |k: u32| (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    let parts = lambda.parts();
    let mut value = Rational::from_integer(fact(lambda.weight()));
    for &p in parts {
        value /= Rational::from_integer(fact(p));
    }
    for (i, &a) in parts.iter().enumerate() {
        for &b in &parts[i + 1..] {
            value *= Rational::new(BigInt::from(a - b), BigInt::from(a + b));
        }
    }
    debug_assert!(value.is_integer());
    value.to_integer().to_biguint().expect("count is non-negative")
}

pub fn shifted_tableaux_count_u64(lambda: &StrictPartition) -> Option<u64> {
    shifted_tableaux_count(lambda).to_u64()
}
