//! Integer partitions and the counting functions built on them.
//!
//! A [`Partition`] is always stored in canonical form: parts weakly
//! decreasing, strictly positive, no trailing zeros. Equality, hashing and
//! ordering are structural, so partitions can be used directly as map keys.
//! The derived `Ord` is lexicographic on the parts; enumeration order in this
//! crate is the reverse of it.

mod count;
mod enumerate;
mod shape;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{KronError, Result};

pub use count::{
    box_counts, count_distinct_odd_range, count_in_box, count_no_small_parts, distinct_odd_range_counts,
    partition_count,
};
pub use enumerate::{enumerate_partitions, Partitions};
pub use shape::{classify_shape, complement, shortness, BoxFrame, ShapeClass};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(KronError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition. Zeros are discarded.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_canonical(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `rows` rows of length `width`, i.e. `width^rows`.
    pub fn rectangle(width: u32, rows: u32) -> Self {
        if width == 0 || rows == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![width; rows as usize],
        }
    }

    /// The m x m square.
    pub fn square(m: u32) -> Self {
        Partition::rectangle(m, m)
    }

    /// The chopped square `(m^(m-1), m-1)`.
    pub fn chopped_square(m: u32) -> Self {
        assert!(m >= 1);
        let mut parts = vec![m; m as usize - 1];
        parts.push(m - 1);
        Partition::new(parts).expect("chopped square is a partition")
    }

    /// The staircase of odd numbers `(2m-1, 2m-3, ..., 1)`: the principal
    /// hook lengths of the m x m square.
    pub fn odd_staircase(m: u32) -> Self {
        Partition {
            parts: (1..=m).rev().map(|i| 2 * i - 1).collect(),
        }
    }

    /// The near-hook `(n-k-i, i, 1^k)` with `n = m^2`.
    pub fn near_hook(m: u32, i: u32, k: u32) -> Result<Self> {
        let n = m as i64 * m as i64;
        let first = n - k as i64 - i as i64;
        if i == 0 || first < i as i64 {
            return Err(KronError::domain(
                "near_hook",
                format!("(m^2-k-i, i, 1^k) is not a partition for m={m}, i={i}, k={k}"),
            ));
        }
        let mut parts = vec![first as u32, i];
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.parts {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: cols }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Dominance order; both partitions must have the same size.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(KronError::SizeMismatch {
                what: "dominance compares partitions of equal size",
                left: self.size(),
                right: other.size(),
            });
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Side of the largest square contained in the diagram.
    pub fn durfee(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p as usize > *i)
            .count()
    }

    /// Rowwise sum, the shorter partition padded with zeros.
    pub fn horizontal_sum(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition {
            parts: (0..len).map(|i| self.part(i) + other.part(i)).collect(),
        }
    }

    /// Columnwise sum: `(self' +_H other')'`.
    pub fn vertical_sum(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// Rowwise difference `self - other`, if it is again a partition.
    pub fn checked_sub(&self, other: &Partition) -> Option<Partition> {
        if other.len() > self.len() {
            return None;
        }
        let parts: Vec<u32> = (0..self.len())
            .map(|i| self.part(i).checked_sub(other.part(i)))
            .collect::<Option<_>>()?;
        Partition::new(parts).ok()
    }

    /// Young-diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Number of distinct part sizes.
    pub fn distinct_part_count(&self) -> usize {
        let mut count = 0;
        let mut prev = 0;
        for &p in &self.parts {
            if p != prev {
                count += 1;
                prev = p;
            }
        }
        count
    }

    /// Multiplicity of each part size, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Lengths of the principal hooks of a self-conjugate partition:
    /// `(2 mu_1 - 1, 2 mu_2 - 3, ...)`, one per diagonal cell.
    pub fn principal_hooks(&self) -> Result<Partition> {
        if !self.is_self_conjugate() {
            return Err(KronError::NotSelfConjugate(self.clone()));
        }
        let d = self.durfee();
        let parts = (0..d).map(|i| 2 * self.parts[i] - (2 * i as u32 + 1)).collect();
        Ok(Partition::from_canonical(parts))
    }

    /// `max(self, self')` in lexicographic order.
    pub fn conjugacy_representative(&self) -> Partition {
        let c = self.conjugate();
        if c > *self {
            c
        } else {
            self.clone()
        }
    }

    pub fn is_rectangle(&self) -> bool {
        self.distinct_part_count() == 1
    }

    /// `(width, rows)` when the partition is a nonempty rectangle.
    pub fn as_rectangle(&self) -> Option<(u32, u32)> {
        self.is_rectangle().then(|| (self.first(), self.len() as u32))
    }

    /// Side length when the partition is a nonempty square.
    pub fn as_square(&self) -> Option<u32> {
        self.as_rectangle().filter(|(w, h)| w == h).map(|(w, _)| w)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Accepts `5,3,2`, exponent shorthand `4^3` and mixtures such as `4^2,2,1^3`.
/// The empty string is the empty partition.
impl FromStr for Partition {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: String| KronError::Parse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: u32 = base
                .parse()
                .map_err(|_| err(format!("{token:?} is not a part")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| err(format!("{token:?} has a bad exponent")))?;
            if base == 0 {
                return Err(err("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|_| err("parts must be weakly decreasing".into()))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `p(&[5, 3, 2])`.
pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("not a partition")
}
