//! Irreducible characters of symmetric groups by the Murnaghan–Nakayama
//! rule.
//!
//! Two evaluation paths share one recursion. Shapes whose first row plus
//! length fit in 128 bits use bead masks and `i128` arithmetic; anything
//! wider, or any value that overflows, is recomputed over partitions and
//! `BigInt`. Both paths give the same answer.

pub mod beads;
mod column;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{KronError, Result};
use crate::partition::Partition;
use beads::Mask;

pub use column::{character_column, character_column_cached, CharacterColumn};

/// The shape left after removing one border strip, and the strip's height
/// (rows spanned minus one).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BorderStripRemoval {
    pub shape: Partition,
    pub height: u32,
}

fn beta_set(lambda: &Partition) -> Vec<u64> {
    let l = lambda.len() as u64;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &p)| p as u64 + l - 1 - j as u64)
        .collect()
}

fn from_beta(mut beta: Vec<u64>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u64;
    let parts = beta
        .iter()
        .enumerate()
        .map(|(j, &b)| (b + j as u64 + 1 - l) as u32)
        .collect();
    Partition::new(parts).expect("beta sets decode to partitions")
}

/// All ways to remove a border strip of size `k` from `lambda`, one per row
/// that can hold the strip's top cell, ordered by resulting shape
/// (reverse-lexicographic).
pub fn border_strip_removals(lambda: &Partition, k: usize) -> Vec<BorderStripRemoval> {
    if k == 0 {
        return Vec::new();
    }
    let beta = beta_set(lambda);
    let k = k as u64;
    let mut out = Vec::new();
    for (j, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        // beta is strictly decreasing; jumped beads sit in rows after j
        let height = beta[j + 1..].iter().take_while(|&&x| x > target).count() as u32;
        let mut next = beta.clone();
        next[j] = target;
        out.push(BorderStripRemoval {
            shape: from_beta(next),
            height,
        });
    }
    out.sort_by(|a, b| b.shape.cmp(&a.shape));
    out
}

fn check_sizes(lambda: &Partition, alpha: &Partition) -> Result<()> {
    if lambda.size() != alpha.size() {
        return Err(KronError::SizeMismatch {
            what: "shape and cycle type",
            left: lambda.size(),
            right: alpha.size(),
        });
    }
    Ok(())
}

/// Memo for character values at one fixed cycle type `alpha`.
///
/// The recursion consumes the parts of `alpha` largest-first. Since all
/// parts are positive, the size of the current shape determines how many
/// parts have been consumed, so the shape alone is the key.
#[derive(Clone, Debug)]
pub struct CharCache {
    alpha: Vec<u32>,
    /// `suffix[size]` = index of the next part to consume at that size.
    suffix: FxHashMap<usize, usize>,
    small: FxHashMap<Mask, i128>,
    big: FxHashMap<Partition, BigInt>,
}

impl CharCache {
    pub fn new(alpha: &Partition) -> Self {
        let parts = alpha.parts().to_vec();
        let mut suffix = FxHashMap::default();
        let mut rest = alpha.size();
        for (i, &p) in parts.iter().enumerate() {
            suffix.insert(rest, i);
            rest -= p as usize;
        }
        suffix.insert(0, parts.len());
        CharCache {
            alpha: parts,
            suffix,
            small: FxHashMap::default(),
            big: FxHashMap::default(),
        }
    }

    pub fn alpha(&self) -> Partition {
        Partition::from_canonical(self.alpha.clone())
    }

    pub fn len(&self) -> usize {
        self.small.len() + self.big.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `chi^lambda` at this cache's cycle type.
    pub fn value(&mut self, lambda: &Partition) -> Result<BigInt> {
        check_sizes(lambda, &self.alpha())?;
        if let Some(mask) = beads::partition_mask(lambda) {
            if let Some(v) = self.small_rec(mask, lambda.size()) {
                return Ok(BigInt::from(v));
            }
        }
        Ok(self.big_rec(lambda))
    }

    fn small_rec(&mut self, mask: Mask, size: usize) -> Option<i128> {
        if size == 0 {
            return Some(1);
        }
        if let Some(&v) = self.small.get(&mask) {
            return Some(v);
        }
        let idx = self.suffix[&size];
        let k = self.alpha[idx];
        let mut next = Vec::new();
        beads::remove_strips(mask, k, |m, h| next.push((m, h)));
        let mut acc: i128 = 0;
        for (m, h) in next {
            let v = self.small_rec(m, size - k as usize)?;
            acc = if h % 2 == 0 { acc.checked_add(v)? } else { acc.checked_sub(v)? };
        }
        self.small.insert(mask, acc);
        Some(acc)
    }

    fn big_rec(&mut self, lambda: &Partition) -> BigInt {
        let size = lambda.size();
        if size == 0 {
            return BigInt::one();
        }
        if let Some(v) = self.big.get(lambda) {
            return v.clone();
        }
        let k = self.alpha[self.suffix[&size]];
        let mut acc = BigInt::zero();
        for r in border_strip_removals(lambda, k as usize) {
            let v = self.big_rec(&r.shape);
            if r.height % 2 == 0 {
                acc += v;
            } else {
                acc -= v;
            }
        }
        self.big.insert(lambda.clone(), acc.clone());
        acc
    }
}

/// `chi^lambda(alpha)` using (and filling) `cache`, which must belong to
/// `alpha`.
pub fn chi(lambda: &Partition, alpha: &Partition, cache: &mut CharCache) -> Result<BigInt> {
    check_sizes(lambda, alpha)?;
    if cache.alpha != alpha.parts() {
        return Err(KronError::domain(
            "chi",
            format!("cache belongs to cycle type ({}), not ({alpha})", cache.alpha()),
        ));
    }
    cache.value(lambda)
}

/// `chi^lambda(alpha)` with a throwaway cache.
pub fn character(lambda: &Partition, alpha: &Partition) -> Result<BigInt> {
    chi(lambda, alpha, &mut CharCache::new(alpha))
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of standard Young tableaux, by the hook length formula.
pub fn dimension(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = conj.part(j) as usize - i - 1;
            hooks *= (arm + leg + 1) as u64;
        }
    }
    factorial(lambda.size()) / hooks
}

/// `z_alpha = prod_i i^{m_i} m_i!`.
pub fn centralizer_order(alpha: &Partition) -> BigUint {
    alpha
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| {
            acc * BigUint::from(part).pow(mult as u32) * factorial(mult)
        })
}

/// `n! / z_alpha`, the size of the conjugacy class.
pub fn class_size(alpha: &Partition) -> BigUint {
    factorial(alpha.size()) / centralizer_order(alpha)
}

/// Rim-hook tableaux of shape `lambda` and type `alpha`, with parts placed
/// largest-first: `(signed count, unsigned count)`. The signed count is
/// `chi^lambda(alpha)`.
pub fn count_rim_hook_tableaux(lambda: &Partition, alpha: &Partition) -> Result<(BigInt, BigUint)> {
    check_sizes(lambda, alpha)?;
    let mut memo: FxHashMap<Partition, (BigInt, BigUint)> = FxHashMap::default();
    fn rec(
        shape: &Partition,
        parts: &[u32],
        memo: &mut FxHashMap<Partition, (BigInt, BigUint)>,
    ) -> (BigInt, BigUint) {
        let Some((&k, rest)) = parts.split_first() else {
            return (BigInt::one(), BigUint::one());
        };
        if let Some(v) = memo.get(shape) {
            return v.clone();
        }
        let mut signed = BigInt::zero();
        let mut unsigned = BigUint::zero();
        for r in border_strip_removals(shape, k as usize) {
            let (s, u) = rec(&r.shape, rest, memo);
            if r.height % 2 == 0 {
                signed += s;
            } else {
                signed -= s;
            }
            unsigned += u;
        }
        memo.insert(shape.clone(), (signed.clone(), unsigned.clone()));
        (signed, unsigned)
    }
    Ok(rec(lambda, alpha.parts(), &mut memo))
}
