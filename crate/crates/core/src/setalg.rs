//! Finite integer-set algebra: sumsets, difference sets and difference chains.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("integer set must be nonempty")]
    Empty,
    #[error("difference chain needs count >= 1 and set size >= 1 (got count {count}, size {size})")]
    InvalidChain { count: usize, size: usize },
}

/// A finite nonempty set of non-negative integers, stored sorted ascending.
///
/// Serializes as a JSON array in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct IntSet(Vec<u64>);

impl IntSet {
    /// Builds a set from arbitrary elements; duplicates are dropped.
    pub fn new<I: IntoIterator<Item = u64>>(elements: I) -> Result<Self, SetError> {
        let set: BTreeSet<u64> = elements.into_iter().collect();
        if set.is_empty() {
            return Err(SetError::Empty);
        }
        Ok(IntSet(set.into_iter().collect()))
    }

    pub fn singleton(x: u64) -> Self {
        IntSet(vec![x])
    }

    /// `{0, step, 2*step, ..., (len-1)*step}`.
    pub fn progression(step: u64, len: usize) -> Result<Self, SetError> {
        Self::new((0..len as u64).map(|k| k * step))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn min_element(&self) -> u64 {
        self.0[0]
    }

    pub fn max_element(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// `self + {t}`.
    pub fn translate(&self, t: u64) -> IntSet {
        IntSet(self.0.iter().map(|x| x + t).collect())
    }
}

impl TryFrom<Vec<u64>> for IntSet {
    type Error = SetError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        IntSet::new(v)
    }
}

impl From<IntSet> for Vec<u64> {
    fn from(s: IntSet) -> Self {
        s.0
    }
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// The positive differences between distinct elements of an [`IntSet`].
/// Empty exactly when the source set is a singleton.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DiffSet(Vec<u64>);

impl DiffSet {
    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_disjoint(&self, other: &DiffSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

/// `{x + y : x in a, y in b}`.
pub fn sumset(a: &IntSet, b: &IntSet) -> IntSet {
    let sums: BTreeSet<u64> = a
        .0
        .iter()
        .flat_map(|x| b.0.iter().map(move |y| x + y))
        .collect();
    IntSet(sums.into_iter().collect())
}

pub fn difference_set(a: &IntSet) -> DiffSet {
    let mut diffs = BTreeSet::new();
    for (i, x) in a.0.iter().enumerate() {
        for y in &a.0[i + 1..] {
            diffs.insert(y - x);
        }
    }
    DiffSet(diffs.into_iter().collect())
}

/// True when `|a + b| = |a| * |b|`, i.e. no two pairs share a sum.
///
/// Equivalent to the difference sets of `a` and `b` being disjoint.
pub fn is_strong_pair(a: &IntSet, b: &IntSet) -> bool {
    sumset(a, b).len() == a.len() * b.len()
}

/// Returns `count` distinct sets of `size` elements whose difference sets
/// are pairwise disjoint.
///
/// For `size >= 2` the i-th set is `{0, p, 2p, ..., (size-1)p}` with `p` the
/// i-th prime above `size - 1`; its differences are the multiples `k*p` with
/// `k < p`, so no two sets can share one. Singletons carry empty difference
/// sets, so for `size == 1` the chain is `{0}, {1}, ..., {count-1}`.
pub fn make_difference_chain(count: usize, size: usize) -> Result<Vec<IntSet>, SetError> {
    if count == 0 || size == 0 {
        return Err(SetError::InvalidChain { count, size });
    }
    if size == 1 {
        return Ok((0..count as u64).map(IntSet::singleton).collect());
    }
    primes_above(size as u64 - 1)
        .take(count)
        .map(|p| IntSet::progression(p, size))
        .collect()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Primes strictly greater than `floor`, ascending.
pub fn primes_above(floor: u64) -> impl Iterator<Item = u64> {
    (floor + 1..).filter(|&n| is_prime(n))
}

/// The first `len` terms of the greedy Sidon sequence 1, 2, 4, 8, 13, 21, ...
///
/// Each term is the least integer above its predecessor that keeps every
/// sum `a_i + a_j` (with `i <= j`) distinct.
pub fn sidon_sequence(len: usize) -> Vec<u64> {
    let mut terms: Vec<u64> = Vec::with_capacity(len);
    let mut sums = std::collections::HashSet::new();
    let mut candidate = 1u64;
    while terms.len() < len {
        let clash = terms
            .iter()
            .chain(std::iter::once(&candidate))
            .any(|t| sums.contains(&(t + candidate)));
        if !clash {
            for t in terms.iter().chain(std::iter::once(&candidate)) {
                sums.insert(t + candidate);
            }
            terms.push(candidate);
        }
        candidate += 1;
    }
    terms
}
