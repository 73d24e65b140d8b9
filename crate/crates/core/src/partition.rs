//! Strict partitions and odd cycle types.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::SymError;

/// `λ_1 > λ_2 > ... > λ_m > 0`. The empty partition is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Vec<u32>);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        let strict = parts.windows(2).all(|w| w[0] > w[1]) && parts.last().is_none_or(|&p| p > 0);
        if strict {
            Ok(StrictPartition(parts))
        } else {
            Err(SymError::NotStrict(parts))
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to `n` entries.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All strict partitions of `weight` with at most `max_len` parts, in
    /// reverse lexicographic order (`(6), (5,1), (4,2), (3,2,1)`).
    pub fn all_of_weight(weight: u32, max_len: usize) -> Vec<StrictPartition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_strict(weight, weight, max_len, &mut cur, &mut out);
        out.into_iter().map(StrictPartition).collect()
    }

    /// All strict partitions with weight in `0..=max_weight`, by weight then reverse lex.
    pub fn all_up_to(max_weight: u32, max_len: usize) -> Vec<StrictPartition> {
        (0..=max_weight).flat_map(|w| Self::all_of_weight(w, max_len)).collect()
    }
}

fn fill_strict(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        cur.push(p);
        fill_strict(rest - p, p - 1, max_len, cur, out);
        cur.pop();
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.0))
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn parse_parts(s: &str) -> Result<Vec<u32>, SymError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| SymError::Algebra(crate::error::AlgebraError::Parse(format!("bad part {p:?} in {s:?}"))))
        })
        .collect()
}

impl FromStr for StrictPartition {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Cycle type with odd parts, stored weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddCycleType(Vec<u32>);

impl OddCycleType {
    /// Sorts the parts; fails on any even or zero part.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, SymError> {
        if parts.iter().any(|&p| p % 2 == 0) {
            return Err(SymError::NotOddCycleType(parts));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OddCycleType(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Cycle type of a product of permutations on disjoint supports.
    pub fn union(&self, other: &OddCycleType) -> OddCycleType {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        OddCycleType::new(parts).expect("union of odd parts is odd")
    }

    /// All odd cycle types of `weight`, reverse lexicographic.
    pub fn all_of_weight(weight: u32) -> Vec<OddCycleType> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_odd(weight, weight, &mut cur, &mut out);
        out.into_iter().map(OddCycleType).collect()
    }
}

fn fill_odd(rest: u32, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max_part.min(rest)).rev().filter(|p| p % 2 == 1) {
        cur.push(p);
        fill_odd(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for OddCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", join_parts(&self.0))
    }
}

impl FromStr for OddCycleType {
    type Err = SymError;
    fn from_str(s: &str) -> Result<Self, SymError> {
        OddCycleType::new(parse_parts(s)?)
    }
}

/// Ordinary partitions of `weight` with at most `max_len` parts (weakly decreasing).
pub fn partitions_of(weight: u32, max_len: usize) -> Vec<Vec<u32>> {
    fn go(rest: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_len {
            return;
        }
        for p in (1..=max_part.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weight, weight, max_len, &mut Vec::new(), &mut out);
    out
}
