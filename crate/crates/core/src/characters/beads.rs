//! Abacus encoding of partitions as `u128` bead masks.
//!
//! Row `j` (0-based) of a partition with `l` parts puts a bead at position
//! `lambda_j + l - 1 - j`. Padding with zero parts shifts the mask left and
//! sets bit 0, so a mask is canonical once its trailing ones are stripped.
//! The empty partition is mask 0. Moving a bead down by `k` removes a
//! border strip of size `k`; its height is the number of beads jumped over.

use crate::partition::Partition;

pub type Mask = u128;

/// Canonical mask of `lambda`, or `None` if it needs more than 128 positions.
pub fn partition_mask(lambda: &Partition) -> Option<Mask> {
    let l = lambda.len();
    if lambda.first() as usize + l > 128 {
        return None;
    }
    let mut mask = 0u128;
    for (j, &p) in lambda.parts().iter().enumerate() {
        mask |= 1u128 << (p as usize + l - 1 - j);
    }
    Some(canonical(mask))
}

pub fn mask_to_partition(mask: Mask) -> Partition {
    let mask = canonical(mask);
    let mut parts = Vec::with_capacity(mask.count_ones() as usize);
    let mut below = 0u32;
    for pos in 0..128u32 {
        if mask >> pos & 1 == 1 {
            parts.push(pos - below);
            below += 1;
        }
    }
    parts.reverse();
    Partition::new(parts).expect("bead masks decode to partitions")
}

#[inline]
pub fn canonical(mask: Mask) -> Mask {
    mask >> mask.trailing_ones()
}

#[inline]
fn between(mask: Mask, lo: u32, hi: u32) -> u32 {
    // beads strictly between positions lo < hi
    let upper = if hi >= 128 { !0u128 } else { (1u128 << hi) - 1 };
    let lower = (1u128 << (lo + 1)) - 1;
    (mask & upper & !lower).count_ones()
}

/// Every removal of a `k`-strip: `(new canonical mask, height)`.
#[inline]
pub fn remove_strips(mask: Mask, k: u32, mut f: impl FnMut(Mask, u32)) {
    let mut beads = mask >> k << k;
    while beads != 0 {
        let p = 127 - beads.leading_zeros();
        beads &= !(1u128 << p);
        let q = p - k;
        if mask >> q & 1 == 0 {
            let next = mask ^ (1u128 << p) ^ (1u128 << q);
            f(canonical(next), between(mask, q, p));
        }
    }
}

/// Every addition of a `k`-strip: `(new canonical mask, height)`. `None`
/// if the result would not fit in 128 positions.
#[inline]
pub fn add_strips(mask: Mask, k: u32, mut f: impl FnMut(Mask, u32)) -> Option<()> {
    let top = 128 - mask.leading_zeros();
    if top + 2 * k > 128 {
        return None;
    }
    let padded = (mask << k) | ((1u128 << k) - 1);
    let mut beads = padded;
    while beads != 0 {
        let p = beads.trailing_zeros();
        beads &= beads - 1;
        let q = p + k;
        if padded >> q & 1 == 0 {
            let next = padded ^ (1u128 << p) ^ (1u128 << q);
            f(canonical(next), between(padded, p, q));
        }
    }
    Some(())
}
