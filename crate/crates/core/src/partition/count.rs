use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Coefficients of the Gaussian binomial `[a+b choose a]_q`: entry `k` is
/// the number of partitions of `k` with at most `a` parts, each at most `b`.
///
/// Dense table over the parts bound, using
/// `p(k; a, b) = p(k; a, b-1) + p(k-b; a-1, b)`.
pub fn box_counts(a: usize, b: usize) -> Vec<BigUint> {
    // table[i] holds the polynomial for (i parts, current width).
    let mut table: Vec<Vec<BigUint>> = vec![vec![BigUint::one()]; a + 1];
    for width in 1..=b {
        // Ascending in parts so table[i-1] already uses `width`.
        for i in 1..=a {
            let (lower, upper) = table.split_at_mut(i);
            let poly = &mut upper[0];
            poly.resize(i * width + 1, BigUint::zero());
            for (j, c) in lower[i - 1].iter().enumerate() {
                poly[j + width] += c;
            }
        }
    }
    let mut out = table.swap_remove(a);
    out.resize(a * b + 1, BigUint::zero());
    out
}

/// `p_k(a,b)`; zero for `k < 0` or `k > ab`.
pub fn count_in_box(k: i64, a: usize, b: usize) -> BigUint {
    if k < 0 || k as u128 > (a as u128) * (b as u128) {
        return BigUint::zero();
    }
    box_counts(a, b).swap_remove(k as usize)
}

fn restricted_counts(n: usize, parts: impl Iterator<Item = usize>, distinct: bool) -> Vec<BigUint> {
    let mut ways = vec![BigUint::zero(); n + 1];
    ways[0] = BigUint::one();
    for p in parts {
        if p == 0 || p > n {
            continue;
        }
        if distinct {
            for s in (p..=n).rev() {
                let prev = ways[s - p].clone();
                ways[s] += prev;
            }
        } else {
            for s in p..=n {
                let prev = ways[s - p].clone();
                ways[s] += prev;
            }
        }
    }
    ways
}

/// The number of partitions of `n`.
pub fn partition_count(n: usize) -> BigUint {
    restricted_counts(n, 1..=n, false).swap_remove(n)
}

/// Partitions of `k` all of whose parts are at least 3.
pub fn count_no_small_parts(k: usize) -> BigUint {
    restricted_counts(k, 3..=k.max(3), false).swap_remove(k)
}

/// Subset-sum counts over `R(m) = {5, 7, ..., 2m-1}` for every total
/// `0..=m^2-4`.
pub fn distinct_odd_range_counts(m: u32) -> Vec<BigUint> {
    let total = (m as usize * m as usize).saturating_sub(4);
    restricted_counts(total, (3..=m as usize).map(|i| 2 * i - 1), true)
}

/// `P_{R(m)}(k)`: ways to write `k` as a sum of distinct elements of
/// `{5, 7, ..., 2m-1}`. Zero for negative `k`.
pub fn count_distinct_odd_range(k: i64, m: u32) -> BigUint {
    if k < 0 {
        return BigUint::zero();
    }
    distinct_odd_range_counts(m)
        .get(k as usize)
        .cloned()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, BoxFrame};

    fn n(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn box_examples() {
        assert_eq!(count_in_box(2, 2, 2), n(2));
        assert_eq!(count_in_box(-1, 4, 4), n(0));
        assert_eq!(count_in_box(5, 2, 2), n(0));
        let total: BigUint = box_counts(2, 2).iter().sum();
        assert_eq!(total, n(6));
        assert_eq!(count_in_box(3, 4, 4), n(3));
        assert_eq!(count_in_box(0, 0, 5), n(1));
        assert_eq!(box_counts(0, 0), vec![n(1)]);
    }

    #[test]
    fn box_matches_enumeration() {
        for a in 1..=4 {
            for b in 1..=4 {
                for k in 0..=(a * b) {
                    let brute = enumerate_partitions(k, Some(BoxFrame::new(a, b).unwrap())).count();
                    assert_eq!(count_in_box(k as i64, a, b), n(brute as u64), "k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn no_small_parts() {
        assert_eq!(count_no_small_parts(0), n(1));
        assert_eq!(count_no_small_parts(1), n(0));
        assert_eq!(count_no_small_parts(2), n(0));
        assert_eq!(count_no_small_parts(5), n(1));
        assert_eq!(count_no_small_parts(6), n(2));
        assert_eq!(count_no_small_parts(7), n(2));
    }

    #[test]
    fn odd_range() {
        assert_eq!(count_distinct_odd_range(12, 5), n(1));
        assert_eq!(count_distinct_odd_range(-2, 5), n(0));
        assert_eq!(count_distinct_odd_range(0, 5), n(1));
        assert_eq!(count_distinct_odd_range(2, 5), n(0));
        let c = distinct_odd_range_counts(6);
        assert_eq!(c.len(), 33);
        for k in 0..c.len() {
            assert_eq!(c[k], c[c.len() - 1 - k]);
        }
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_count(0), n(1));
        assert_eq!(partition_count(4), n(5));
        assert_eq!(partition_count(25), n(1958));
        assert_eq!(partition_count(36), n(17977));
    }
}
