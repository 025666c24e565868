//! Closed forms for special families of Kronecker coefficients and
//! character values.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Provenance;
use crate::characters::character;
use crate::error::{KronError, Result};
use crate::partition::{count_distinct_odd_range, count_in_box, count_no_small_parts, enumerate_partitions, Partition};

/// `g(m^l, m^l, (lm-k, k)) = p_k(l,m) - p_{k-1}(l,m)` for `0 <= k <= lm/2`,
/// where `p_k(l,m)` counts partitions of `k` in an `l x m` box.
pub fn two_row_formula(l: u32, m: u32, k: i64) -> Result<BigInt> {
    let n = l as i64 * m as i64;
    if l == 0 || m == 0 || k < 0 || 2 * k > n {
        return Err(KronError::domain(
            "two_row_formula",
            format!("need l, m >= 1 and 0 <= k <= lm/2, got l={l}, m={m}, k={k}"),
        ));
    }
    let (l, m) = (l as usize, m as usize);
    Ok(BigInt::from(count_in_box(k, l, m)) - BigInt::from(count_in_box(k - 1, l, m)))
}

/// `sum over alpha |- j with alpha_1 = alpha_2 of l1(alpha)`, where `l1`
/// counts distinct part sizes.
pub(crate) fn equal_top_rows_weight(j: usize) -> u64 {
    enumerate_partitions(j, None)
        .filter(|a| a.len() >= 2 && a.part(0) == a.part(1))
        .map(|a| a.distinct_part_count() as u64)
        .sum()
}

/// `g(sq_m, sq_m, (m^2-k, k-1, 1))` for `2 <= k <= m`:
/// `sum_{alpha |- k-1, alpha_1 = alpha_2} l1(alpha) - f(k)`, with `f(k)` the
/// number of partitions of `k` into parts of size at least 3.
pub fn near_two_row_formula(m: u32, k: i64) -> Result<BigInt> {
    if k < 2 || k > m as i64 {
        return Err(KronError::domain(
            "near_two_row_formula",
            format!("need 2 <= k <= m, got m={m}, k={k}"),
        ));
    }
    let k = k as usize;
    Ok(BigInt::from(equal_top_rows_weight(k - 1)) - BigInt::from(count_no_small_parts(k)))
}

/// `chi^{mu_i(k,m)}(alpha_m)` for the near-hook `mu_i(k,m) = (m^2-k-i, i, 1^k)`
/// and `alpha_m = (2m-1, 2m-3, ..., 1)`, via subset-sum counts `P_R` over
/// `R(m) = {5, 7, ..., 2m-1}`:
///
/// - `i = 2`: `-(P_R(k) + P_R(k+2) + P_R(k-2))`, `0 <= k <= m^2-4`
/// - `i = 3`: `P_R(k) + P_R(k+3)`, `0 <= k <= m^2-6`
pub fn near_hook_character(m: u32, i: u32, k: i64) -> Result<BigInt> {
    let n = m as i64 * m as i64;
    let max_k = match i {
        2 => n - 4,
        3 => n - 6,
        _ => {
            return Err(KronError::domain(
                "near_hook_character",
                format!("closed forms exist only for i in {{2, 3}}, got {i}"),
            ))
        }
    };
    if m < 2 || k < 0 || k > max_k {
        return Err(KronError::domain(
            "near_hook_character",
            format!("need m >= 2 and 0 <= k <= {max_k}, got m={m}, k={k}"),
        ));
    }
    let pr = |j: i64| BigInt::from(count_distinct_odd_range(j, m));
    Ok(match i {
        2 => -(pr(k) + pr(k + 2) + pr(k - 2)),
        _ => pr(k) + pr(k + 3),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SaxlOutcome {
    /// `g(mu, mu, lambda) > 0` is proven.
    Positive,
    /// The criterion says nothing.
    Inconclusive,
}

/// For self-conjugate `mu`: if `chi^lambda` is nonzero on the class of
/// principal hook lengths of `mu`, then `lambda` occurs in the tensor
/// square of `mu`. Never claims a zero.
pub fn saxl_criterion(mu: &Partition, lambda: &Partition) -> Result<SaxlOutcome> {
    let hooks = mu.principal_hooks()?;
    super::check_same_size(&[mu, lambda])?;
    Ok(if character(lambda, &hooks)?.is_zero() {
        SaxlOutcome::Inconclusive
    } else {
        SaxlOutcome::Positive
    })
}

fn as_two_row(nu: &Partition) -> Option<i64> {
    (nu.len() <= 2).then(|| nu.part(1) as i64)
}

/// A closed-form value for `g(lambda, mu, nu)` when some argument order
/// puts the triple in a family with a formula; `None` otherwise.
pub fn formula_value(lambda: &Partition, mu: &Partition, nu: &Partition) -> Option<(BigInt, Provenance)> {
    if lambda.size() != mu.size() || mu.size() != nu.size() || lambda.is_empty() {
        return None;
    }
    let orders = [(lambda, mu, nu), (lambda, nu, mu), (mu, nu, lambda)];
    for (a, b, c) in orders {
        if a != b {
            continue;
        }
        let Some((width, rows)) = a.as_rectangle() else {
            continue;
        };
        if let Some(k) = as_two_row(c) {
            if let Ok(v) = two_row_formula(rows, width, k) {
                return Some((v, Provenance::FormulaTwoRow));
            }
        }
        if width == rows && c.len() == 3 && c.part(2) == 1 {
            let k = c.part(1) as i64 + 1;
            if let Ok(v) = near_two_row_formula(width, k) {
                return Some((v, Provenance::FormulaNearTwoRow));
            }
        }
    }
    None
}
