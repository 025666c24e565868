use std::fmt::Write as _;
use std::path::PathBuf;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{check_same_size, finish_sum, Provenance};
use crate::characters::{beads, character_column_cached, class_size, dimension, CharCache};
use crate::error::{KronError, Result};
use crate::partition::{enumerate_partitions, partition_count, BoxFrame, Partition};

/// Largest side length `missing_partitions` runs without the override.
pub const MISSING_BUDGET_M: u32 = 5;

/// Knobs for whole-table scans. Results never depend on them.
#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Directory for persisted character columns.
    pub cache_dir: Option<PathBuf>,
    /// Restrict the third argument to partitions fitting this frame.
    pub frame: Option<BoxFrame>,
}

impl ScanOptions {
    /// Reads `KRON_CACHE_DIR` from the environment.
    pub fn from_env() -> Self {
        ScanOptions {
            cache_dir: std::env::var_os("KRON_CACHE_DIR").map(PathBuf::from),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub nu: Partition,
    #[serde(with = "json_number")]
    pub g: BigUint,
    pub by: Provenance,
}

/// `g(lambda, mu, nu)` for fixed `lambda, mu` and every `nu` of the same
/// size, in reverse-lexicographic order of `nu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KroneckerTable {
    pub lhs: (Partition, Partition),
    pub entries: Vec<TableEntry>,
}

impl KroneckerTable {
    pub fn size(&self) -> usize {
        self.lhs.0.size()
    }

    pub fn get(&self, nu: &Partition) -> Option<&BigUint> {
        self.entries.iter().find(|e| &e.nu == nu).map(|e| &e.g)
    }

    /// Every partition of `n` has an entry.
    pub fn is_complete(&self) -> bool {
        BigUint::from(self.entries.len()) == partition_count(self.size())
    }

    pub fn zeros(&self) -> impl Iterator<Item = &Partition> {
        self.entries.iter().filter(|e| e.g.is_zero()).map(|e| &e.nu)
    }

    /// `sum_nu g dim(nu) == dim(lambda) dim(mu)`; meaningful only for a
    /// complete table.
    pub fn dimension_identity_holds(&self) -> bool {
        let lhs: BigUint = self.entries.iter().map(|e| &e.g * dimension(&e.nu)).sum();
        lhs == dimension(&self.lhs.0) * dimension(&self.lhs.1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| KronError::Parse {
            input: "table JSON".into(),
            reason: e.to_string(),
        })
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("nu\tg\tby\n");
        for e in &self.entries {
            let _ = writeln!(out, "{}\t{}\t{}", e.nu, e.g, e.by);
        }
        out
    }
}

pub(crate) mod json_number {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::ser::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        let n: serde_json::Number = v.to_string().parse().map_err(S::Error::custom)?;
        n.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let n = serde_json::Number::deserialize(d)?;
        n.to_string().parse().map_err(D::Error::custom)
    }
}

/// Exact accumulator that stays in `i128` until it cannot.
#[derive(Clone, Debug)]
enum Acc {
    Small(i128),
    Big(BigInt),
}

impl Acc {
    fn add_product(&mut self, w_small: Option<i128>, w: &BigInt, c: i128) {
        if let (Acc::Small(s), Some(ws)) = (&mut *self, w_small) {
            if let Some(v) = ws.checked_mul(c).and_then(|t| s.checked_add(t)) {
                *s = v;
                return;
            }
        }
        let cur = self.take_big();
        *self = Acc::Big(cur + w * c);
    }

    fn take_big(&mut self) -> BigInt {
        match std::mem::replace(self, Acc::Small(0)) {
            Acc::Small(s) => BigInt::from(s),
            Acc::Big(b) => b,
        }
    }

    fn merge(mut self, mut other: Acc) -> Acc {
        if let (Acc::Small(a), Acc::Small(b)) = (&self, &other) {
            if let Some(v) = a.checked_add(*b) {
                return Acc::Small(v);
            }
        }
        Acc::Big(self.take_big() + other.take_big())
    }

    fn into_big(mut self) -> BigInt {
        self.take_big()
    }
}

fn run_in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| KronError::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// `g(lambda, mu, nu)` for every `nu |- n` (fitting `opts.frame`, if set).
///
/// Cycle types are distributed over workers. For each `alpha` with
/// `chi^lambda(alpha) chi^mu(alpha) != 0`, one character column gives
/// `chi^nu(alpha)` for all `nu` at once. Sums are exact, so the table is
/// identical for every worker count.
pub fn kronecker_table(lambda: &Partition, mu: &Partition, opts: &ScanOptions) -> Result<KroneckerTable> {
    let n = check_same_size(&[lambda, mu])?;
    let nus: Vec<Partition> = enumerate_partitions(n, opts.frame).collect();
    let mut index: FxHashMap<beads::Mask, usize> = FxHashMap::default();
    for (i, nu) in nus.iter().enumerate() {
        let mask = beads::partition_mask(nu).ok_or_else(|| {
            KronError::domain("kronecker_table", format!("n = {n} is too large for a table scan"))
        })?;
        index.insert(mask, i);
    }
    let alphas: Vec<Partition> = enumerate_partitions(n, None).collect();
    let dir = opts.cache_dir.as_deref();
    let zero = || vec![Acc::Small(0); nus.len()];

    let sums = run_in_pool(opts.jobs, || {
        alphas
            .par_iter()
            .try_fold(zero, |mut acc, alpha| -> Result<Vec<Acc>> {
                let mut cache = CharCache::new(alpha);
                let a = cache.value(lambda)?;
                if a.is_zero() {
                    return Ok(acc);
                }
                let b = cache.value(mu)?;
                if b.is_zero() {
                    return Ok(acc);
                }
                let w = BigInt::from(class_size(alpha)) * a * b;
                let w_small = w.to_i128();
                let col = character_column_cached(alpha, dir)?;
                for (mask, c) in col.iter() {
                    if let Some(&i) = index.get(&mask) {
                        acc[i].add_product(w_small, &w, c);
                    }
                }
                Ok(acc)
            })
            .try_reduce(zero, |a, b| Ok(a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()))
    })??;

    let mut entries = Vec::with_capacity(nus.len());
    for (nu, s) in nus.into_iter().zip(sums) {
        let g = finish_sum(s.into_big(), n, || format!("({lambda}), ({mu}), ({nu})"))?;
        entries.push(TableEntry {
            nu,
            g,
            by: Provenance::Oracle,
        });
    }
    Ok(KroneckerTable {
        lhs: (lambda.clone(), mu.clone()),
        entries,
    })
}

/// The complete table of `g(lambda, lambda, nu)`.
pub fn tensor_square_support(lambda: &Partition, frame: Option<BoxFrame>) -> Result<KroneckerTable> {
    kronecker_table(
        lambda,
        lambda,
        &ScanOptions {
            frame,
            ..ScanOptions::from_env()
        },
    )
}

/// Every `nu` with `g(square_m, square_m, nu) = 0`, one per conjugate pair
/// (the lexicographically larger one), in reverse-lexicographic order.
///
/// Side lengths above [`MISSING_BUDGET_M`] need `budget_override`.
pub fn missing_partitions(m: u32, opts: &ScanOptions, budget_override: bool) -> Result<Vec<Partition>> {
    if m < 2 {
        return Err(KronError::domain("missing_partitions", format!("m must be at least 2, got {m}")));
    }
    if m > MISSING_BUDGET_M && !budget_override {
        return Err(KronError::BudgetExceeded {
            op: "missing_partitions",
            m,
        });
    }
    let sq = Partition::square(m);
    let opts = ScanOptions {
        frame: None,
        ..opts.clone()
    };
    let table = kronecker_table(&sq, &sq, &opts)?;
    Ok(table
        .zeros()
        .filter(|nu| **nu >= nu.conjugate())
        .cloned()
        .collect())
}
