//! Zero and positivity statements for `g(sq_m, sq_m, nu)` and relatives.
//!
//! Each predicate answers only inside the hypotheses it was proven under and
//! returns [`KronError::OutOfDomain`] elsewhere; none extrapolates.

use crate::error::{KronError, Result};
use crate::partition::Partition;

fn require(ok: bool, op: &'static str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(KronError::domain(op, detail()))
    }
}

fn square_size(m: u32) -> i64 {
    m as i64 * m as i64
}

/// `g(sq_m, sq_m, (m^2-k, k)) > 0`, for `m >= 7` and `0 <= k <= m^2/2`:
/// positive exactly when `k != 1`.
pub fn two_row_positive(m: u32, k: i64) -> Result<bool> {
    require(m >= 7 && k >= 0 && 2 * k <= square_size(m), "two_row_positive", || {
        format!("valid for m >= 7 and 0 <= k <= m^2/2, got m={m}, k={k}")
    })?;
    Ok(k != 1)
}

/// `g(sq_m, sq_m, (m^2-k, k-1, 1)) = 0`, which holds exactly when `k <= 4`.
/// Valid for `2 <= k <= m`, and for every `k >= 2` with
/// `(m^2-k, k-1, 1)` a partition once `m >= 5`.
pub fn near_two_row_zero(m: u32, k: i64) -> Result<bool> {
    let short = 2 <= k && k <= m as i64;
    let long = m >= 5 && k >= 2 && square_size(m) - k >= k - 1;
    require(short || long, "near_two_row_zero", || {
        format!("valid for 2 <= k <= m, or m >= 5 and 2 <= k <= (m^2+1)/2; got m={m}, k={k}")
    })?;
    Ok(k <= 4)
}

/// `g((mb-k, 1^k), b x m, b x m) = 0`, for `b >= 7`, `m >= b` and
/// `0 <= k <= mb-1`. Positive exactly on `[0, b^2-1]` minus
/// `{1, 2, 4, 6, b^2-2, b^2-3, b^2-5, b^2-7}`.
pub fn hook_zero(b: u32, m: u32, k: i64) -> Result<bool> {
    let n = b as i64 * m as i64;
    require(b >= 7 && m >= b && 0 <= k && k < n, "hook_zero", || {
        format!("valid for b >= 7, m >= b, 0 <= k <= mb-1; got b={b}, m={m}, k={k}")
    })?;
    let bb = square_size(b);
    let exceptions = [1, 2, 4, 6, bb - 2, bb - 3, bb - 5, bb - 7];
    Ok(k > bb - 1 || exceptions.contains(&k))
}

/// The set `S = {(m^2-3,2,1), (m^2-4,3,1), (m^2-j,1^j) : j in {1,2,4,6}}`.
pub fn conjectured_zero_list(m: u32) -> Result<Vec<Partition>> {
    require(m >= 7, "conjectured_zero_list", || format!("stated for m >= 7, got m={m}"))?;
    let n = m * m;
    let hook = |j: u32| {
        let mut parts = vec![n - j];
        parts.extend(std::iter::repeat_n(1, j as usize));
        Partition::from_canonical(parts)
    };
    Ok(vec![
        Partition::from_canonical(vec![n - 3, 2, 1]),
        Partition::from_canonical(vec![n - 4, 3, 1]),
        hook(1),
        hook(2),
        hook(4),
        hook(6),
    ])
}

/// `mu` or `mu'` lies in [`conjectured_zero_list`]. Every such `mu` is a
/// proven zero; that these are the only zeros is open.
pub fn conjectured_zero_set(m: u32, mu: &Partition) -> Result<bool> {
    let list = conjectured_zero_list(m)?;
    require(mu.size() as i64 == square_size(m), "conjectured_zero_set", || {
        format!("({mu}) is not a partition of m^2 = {}", m * m)
    })?;
    let conj = mu.conjugate();
    Ok(list.iter().any(|s| s == mu || *s == conj))
}

/// `NK_2(m) = {1, 2, 4, 6, 8, m^2-12, m^2-10, m^2-8, m^2-6, m^2-5}`, as
/// published; see [`nk2`].
pub fn nk2_set(m: u32) -> Vec<i64> {
    let n = square_size(m);
    vec![1, 2, 4, 6, 8, n - 12, n - 10, n - 8, n - 6, n - 5]
}

/// `NK_3(m) = {1, 3, m^2-10, m^2-8}`.
pub fn nk3_set(m: u32) -> Vec<i64> {
    let n = square_size(m);
    vec![1, 3, n - 10, n - 8]
}

/// `k` lies in the published `NK_2(m)`. The `i = 2` near-hook character on
/// `alpha_m` vanishes on this set except at `k = 2` and `k = m^2-6`, where
/// it is `-1`. Valid for `m >= 8`, `0 <= k <= m^2-4`.
pub fn nk2(m: u32, k: i64) -> Result<bool> {
    require(m >= 8 && 0 <= k && k <= square_size(m) - 4, "nk2", || {
        format!("valid for m >= 8 and 0 <= k <= m^2-4, got m={m}, k={k}")
    })?;
    Ok(nk2_set(m).contains(&k))
}

/// `k` lies in `NK_3(m)`, i.e. the `i = 3` near-hook character on
/// `alpha_m` vanishes. Valid for `m >= 7`, `0 <= k <= m^2-7`; at `m = 5, 6`
/// the character has further zeros, so those are refused.
pub fn nk3(m: u32, k: i64) -> Result<bool> {
    require(m >= 7 && 0 <= k && k <= square_size(m) - 7, "nk3", || {
        format!("valid for m >= 7 and 0 <= k <= m^2-7, got m={m}, k={k}")
    })?;
    Ok(nk3_set(m).contains(&k))
}

/// `g((n,n), (n,n), mu) > 0` with `|mu| = 2n`: either `l(mu) <= 4` with
/// all parts even, or `l(mu) = 4` with all parts odd.
pub fn thm_nn(mu: &Partition) -> Result<bool> {
    require(mu.size().is_multiple_of(2), "thm_nn", || format!("|({mu})| = {} is odd", mu.size()))?;
    let parts = mu.parts();
    let all_even = parts.iter().all(|p| p % 2 == 0);
    let all_odd = parts.iter().all(|p| p % 2 == 1);
    Ok((parts.len() <= 4 && all_even) || (parts.len() == 4 && all_odd))
}

/// `g(sq_m, sq_m, (m^2-k-2, 2, 1^k)) > 0` iff `k` not in `{1, m^2-5}`,
/// for `m >= 8`, `0 <= k <= m^2-4`.
pub fn mu2_positive(m: u32, k: i64) -> Result<bool> {
    let n = square_size(m);
    require(m >= 8 && 0 <= k && k <= n - 4, "mu2_positive", || {
        format!("valid for m >= 8 and 0 <= k <= m^2-4, got m={m}, k={k}")
    })?;
    Ok(k != 1 && k != n - 5)
}

/// `g(sq_m, sq_m, (m^2-k-3, 3, 1^k)) > 0` iff `k != 1`, for `m >= 7`,
/// `0 <= k <= m^2-6`.
pub fn mu3_positive(m: u32, k: i64) -> Result<bool> {
    require(m >= 7 && 0 <= k && k <= square_size(m) - 6, "mu3_positive", || {
        format!("valid for m >= 7 and 0 <= k <= m^2-6, got m={m}, k={k}")
    })?;
    Ok(k != 1)
}

/// `g(sq_m, sq_m, (m^2-k-i, i, 1^k)) > 0` for `i >= 8`, `m >= 20` and every
/// `k` making the shape a partition.
pub fn near_hook_wide_positive(m: u32, i: u32, k: i64) -> Result<bool> {
    let first = square_size(m) - k - i as i64;
    require(i >= 8 && m >= 20 && k >= 0 && first >= i as i64, "near_hook_wide_positive", || {
        format!("valid for i >= 8, m >= 20 and a genuine near-hook; got m={m}, i={i}, k={k}")
    })?;
    Ok(true)
}

/// The stated exceptions for near-hooks with second row `i` in `[2, 7]`
/// and `m >= 7`: `(i, k) = (2, 1), (2, m^2-5), (3, 1)`, each a zero.
///
/// The accompanying positivity claim is not transcribed, because the range
/// of `k` it covers is not recoverable from its statement. `false` means
/// only "not one of the listed exceptions".
pub fn square_near_hook_exception(m: u32, i: u32, k: i64) -> Result<bool> {
    let first = square_size(m) - k - i as i64;
    require(m >= 7 && (2..=7).contains(&i) && k >= 0 && first >= i as i64, "square_near_hook_exception", || {
        format!("valid for m >= 7, 2 <= i <= 7 and a genuine near-hook; got m={m}, i={i}, k={k}")
    })?;
    Ok((i == 2 && (k == 1 || k == square_size(m) - 5)) || (i == 3 && k == 1))
}

/// `g(sq_m, sq_m, mu) > 0` for three-row `mu |- m^2` with `mu_3 >= 2`, for
/// `m >= 5`.
pub fn three_row_positive(m: u32, mu: &Partition) -> Result<bool> {
    require(
        m >= 5 && mu.size() as i64 == square_size(m) && mu.len() == 3 && mu.part(2) >= 2,
        "three_row_positive",
        || format!("valid for m >= 5 and three-row ({mu}) |- m^2 with third row >= 2; got m={m}"),
    )?;
    Ok(true)
}

/// For `m >= 7` and `mu |- m^2` with at most three rows:
/// `g(sq_m, sq_m, mu) > 0` unless `mu` is one of
/// `(m^2-3,2,1), (m^2-4,3,1), (m^2-2,1,1), (m^2-1,1)`.
pub fn at_most_three_rows_positive(m: u32, mu: &Partition) -> Result<bool> {
    let n = m * m;
    require(
        m >= 7 && mu.size() == n as usize && mu.len() <= 3,
        "at_most_three_rows_positive",
        || format!("valid for m >= 7 and ({mu}) |- m^2 with at most 3 rows; got m={m}"),
    )?;
    let zeros: [&[u32]; 4] = [&[n - 3, 2, 1], &[n - 4, 3, 1], &[n - 2, 1, 1], &[n - 1, 1]];
    Ok(!zeros.contains(&mu.parts()))
}
