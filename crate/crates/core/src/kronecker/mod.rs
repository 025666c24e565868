//! Kronecker coefficients: the character-sum oracle, whole-table scans,
//! the paper-derived closed formulas and the zero/positivity predicates.

mod formulas;
pub mod predicates;
mod table;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::characters::{class_size, factorial, CharCache};
use crate::error::{KronError, Result};
use crate::partition::{enumerate_partitions, Partition};

pub use formulas::{
    formula_value, near_hook_character, near_two_row_formula, saxl_criterion, two_row_formula, SaxlOutcome,
};
pub use table::{kronecker_table, MISSING_BUDGET_M, missing_partitions, tensor_square_support, KroneckerTable, ScanOptions, TableEntry};

/// Where a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Oracle,
    FormulaTwoRow,
    FormulaNearTwoRow,
    CharacterCriterion,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Oracle => "oracle",
            Provenance::FormulaTwoRow => "formula-two-row",
            Provenance::FormulaNearTwoRow => "formula-near-two-row",
            Provenance::CharacterCriterion => "character-criterion",
        }
    }
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn check_same_size(parts: &[&Partition]) -> Result<usize> {
    let n = parts[0].size();
    for p in &parts[1..] {
        if p.size() != n {
            return Err(KronError::SizeMismatch {
                what: "Kronecker triples need partitions of one size",
                left: n,
                right: p.size(),
            });
        }
    }
    Ok(n)
}

/// Divides an accumulated `sum_alpha (n!/z_alpha) chi chi chi` by `n!`,
/// insisting on an exact nonnegative quotient.
pub(crate) fn finish_sum(total: BigInt, n: usize, what: impl FnOnce() -> String) -> Result<BigUint> {
    let (q, r) = total.div_rem(&BigInt::from(factorial(n)));
    if !r.is_zero() || q.is_negative() {
        return Err(KronError::Internal(format!(
            "character sum for {} is not a nonnegative multiple of {n}!",
            what()
        )));
    }
    Ok(q.magnitude().clone())
}

/// `g(lambda, mu, nu)` by the character inner product
/// `(1/n!) sum_alpha (n!/z_alpha) chi^lambda(alpha) chi^mu(alpha) chi^nu(alpha)`.
pub fn kron(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<BigUint> {
    let n = check_same_size(&[lambda, mu, nu])?;
    let mut total = BigInt::zero();
    for alpha in enumerate_partitions(n, None) {
        let mut cache = CharCache::new(&alpha);
        let a = cache.value(lambda)?;
        if a.is_zero() {
            continue;
        }
        let b = cache.value(mu)?;
        if b.is_zero() {
            continue;
        }
        let c = cache.value(nu)?;
        if c.is_zero() {
            continue;
        }
        total += BigInt::from(class_size(&alpha)) * a * b * c;
    }
    finish_sum(total, n, || format!("({lambda}), ({mu}), ({nu})"))
}
