//! Integer partitions, cycle types and conjugacy class sizes of `S_n`.
//!
//! Partitions are kept in the canonical order used by every table in this
//! crate: descending lexicographic order on the part lists, so `(n)` comes
//! first and `(1^n)` last.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest `n` accepted unless the caller raises the cap.
pub const DEFAULT_MAX_N: usize = 12;

/// A weakly decreasing list of positive parts.
///
/// The empty partition (weight 0) is allowed; it labels the constant
/// monomial in [`crate::symfunc`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts `values` descending and drops zeros. Any exponent vector becomes
    /// the partition labelling its orbit this way.
    pub fn from_unsorted<I>(values: I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut parts: Vec<usize> = values.into_iter().filter(|&v| v > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to `len` entries. Panics if `len` is shorter
    /// than the partition.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.parts.len(), "cannot pad {self} to {len} entries");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_partition(self)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the `+`-joined text form, e.g. `"3+1+1"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Multiplicity form of a conjugacy class: `m_j` is the number of `j`-cycles.
///
/// `multiplicities[j - 1] = m_j`, with one slot per cycle length `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleType {
    multiplicities: Vec<usize>,
}

impl CycleType {
    /// Builds a cycle type from `m_1, m_2, ...`. Trailing entries may be
    /// omitted; the vector is padded to length `n = sum j * m_j`.
    pub fn from_multiplicities(mut multiplicities: Vec<usize>) -> Self {
        let n: usize = multiplicities.iter().enumerate().map(|(i, m)| (i + 1) * m).sum();
        multiplicities.resize(n.max(multiplicities.len()), 0);
        multiplicities.truncate(n);
        CycleType { multiplicities }
    }

    pub fn from_partition(p: &Partition) -> Self {
        let n = p.weight();
        let mut multiplicities = vec![0; n];
        for &part in p.parts() {
            multiplicities[part - 1] += 1;
        }
        CycleType { multiplicities }
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (j, &m) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(j + 1, m));
        }
        Partition { parts }
    }

    pub fn n(&self) -> usize {
        self.multiplicities.len()
    }

    /// `m_j` for cycle length `j >= 1`; 0 beyond `n`.
    pub fn multiplicity(&self, j: usize) -> usize {
        assert!(j >= 1, "cycle lengths start at 1");
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_partition(), f)
    }
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of permutations in `S_n` with the given cycle type:
/// `n! / prod_j (j^{m_j} m_j!)`.
pub fn class_size(l: &CycleType) -> BigUint {
    let mut denom = BigUint::one();
    for (idx, &m) in l.multiplicities.iter().enumerate() {
        let j = idx + 1;
        denom *= BigUint::from(j).pow(m as u32) * factorial(m);
    }
    let num = factorial(l.n());
    debug_assert!((&num % &denom).is_zero());
    num / denom
}

/// Canonical comparison of two partitions of the same weight.
pub fn compare(a: &Partition, b: &Partition) -> Result<Ordering> {
    if a.weight() != b.weight() {
        return Err(Error::invalid(format!(
            "cannot compare partitions of different weights: {a} ({}) vs {b} ({})",
            a.weight(),
            b.weight()
        )));
    }
    Ok(a.parts.cmp(&b.parts))
}

/// All partitions of `n` in descending lexicographic order, with `n` capped
/// at [`DEFAULT_MAX_N`].
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_with_cap(n, DEFAULT_MAX_N)
}

pub fn partitions_of_with_cap(n: usize, cap: usize) -> Result<Vec<Partition>> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if n > cap {
        return Err(Error::invalid(format!("n = {n} exceeds the configured cap of {cap}")));
    }
    Ok(partitions_bounded(n, n, usize::MAX))
}

/// Partitions of `total` with every part at most `max_part` and at most
/// `max_len` parts, in descending lexicographic order. `total = 0` yields the
/// single empty partition.
pub fn partitions_bounded(total: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(total, max_part.min(total), max_len, &mut current, &mut out);
    out
}

fn fill(rest: usize, max_part: usize, max_len: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        current.push(p);
        fill(rest - p, p, max_len, current, out);
        current.pop();
    }
}

/// Everything about `S_n` that the tables are indexed by.
#[derive(Clone, Debug)]
pub struct SymmetricGroupContext {
    n: usize,
    partitions: Vec<Partition>,
    class_sizes: Vec<BigUint>,
    group_order: BigUint,
    factorials: Vec<BigUint>,
}

impl SymmetricGroupContext {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_MAX_N)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        let partitions = partitions_of_with_cap(n, cap)?;
        let class_sizes = partitions.iter().map(|p| class_size(&p.cycle_type())).collect();
        let mut factorials = Vec::with_capacity(n + 1);
        factorials.push(BigUint::one());
        for i in 1..=n {
            let next = &factorials[i - 1] * i;
            factorials.push(next);
        }
        Ok(SymmetricGroupContext {
            n,
            partitions,
            class_sizes,
            group_order: factorials[n].clone(),
            factorials,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of classes (and of irreducible characters).
    pub fn k(&self) -> usize {
        self.partitions.len()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[BigUint] {
        &self.class_sizes
    }

    pub fn group_order(&self) -> &BigUint {
        &self.group_order
    }

    /// `i!` for `0 <= i <= n`.
    pub fn factorial(&self, i: usize) -> &BigUint {
        &self.factorials[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        // descending order, so search with the comparison reversed
        self.partitions.binary_search_by(|q| p.parts.cmp(&q.parts)).ok()
    }
}

/// Same as [`SymmetricGroupContext::new`].
pub fn build_context(n: usize) -> Result<SymmetricGroupContext> {
    SymmetricGroupContext::new(n)
}
