//! Positivity certificates built from the semigroup property.
//!
//! A certificate is a tree. Leaves name a triple and a witness that makes
//! `g > 0` checkable on its own; inner nodes combine their children:
//!
//! - `HHH`: horizontal sum in all three coordinates;
//! - `VVH`: vertical sum in the first two, horizontal in the third;
//! - `SYM`: one child whose triple is a symmetry image of the claim
//!   (argument permutation, and/or conjugating two of the arguments).
//!
//! [`verify_certificate`] rechecks everything. [`certify`] searches for a
//! certificate with a list of [`Strategy`]s; not finding one says nothing
//! about `g` being zero.

mod search;
mod strategies;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::KronError;
use crate::kronecker::{self, formula_value, predicates, saxl_criterion, Provenance, SaxlOutcome};
use crate::partition::Partition;

pub use search::{certify, CertifyOutcome, SearchOptions};
pub use strategies::{builtin_strategies, strategies_by_name, Plan, Strategy, STRATEGY_NAMES};

/// `(lambda, mu, nu)`, standing for the claim `g(lambda, mu, nu) > 0`.
pub type Triple = [Partition; 3];

/// Largest `n` for which an `oracle` leaf is re-evaluated by default.
pub const DEFAULT_ORACLE_CAP: usize = 25;

pub(crate) fn fmt_triple(t: &Triple) -> String {
    format!("({}), ({}), ({})", t[0], t[1], t[2])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    FormulaTwoRow,
    FormulaNearTwoRow,
    ThmNn,
    CharacterCriterion,
    #[serde(rename = "lemma-3k")]
    Lemma3k,
    LemmaMultipleof4,
    ThmHookpos,
    Oracle,
}

impl Witness {
    /// Cheapest first; the search tries leaves in this order.
    pub const PREFERENCE: [Witness; 8] = [
        Witness::FormulaTwoRow,
        Witness::FormulaNearTwoRow,
        Witness::ThmNn,
        Witness::CharacterCriterion,
        Witness::Lemma3k,
        Witness::LemmaMultipleof4,
        Witness::ThmHookpos,
        Witness::Oracle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Witness::FormulaTwoRow => "formula-two-row",
            Witness::FormulaNearTwoRow => "formula-near-two-row",
            Witness::ThmNn => "thm-nn",
            Witness::CharacterCriterion => "character-criterion",
            Witness::Lemma3k => "lemma-3k",
            Witness::LemmaMultipleof4 => "lemma-multipleof4",
            Witness::ThmHookpos => "thm-hookpos",
            Witness::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Combiner {
    #[serde(rename = "HHH")]
    Hhh,
    #[serde(rename = "VVH")]
    Vvh,
    #[serde(rename = "SYM")]
    Sym,
}

impl fmt::Display for Combiner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Combiner::Hhh => "HHH",
            Combiner::Vvh => "VVH",
            Combiner::Sym => "SYM",
        })
    }
}

impl Combiner {
    /// Componentwise combination of two or more triples (not `SYM`).
    pub fn combine<'a>(self, mut triples: impl Iterator<Item = &'a Triple>) -> Option<Triple> {
        let first = triples.next()?.clone();
        let mut count = 1;
        let out = triples.fold(first, |[a, b, c], [x, y, z]| {
            count += 1;
            match self {
                Combiner::Hhh => [a.horizontal_sum(x), b.horizontal_sum(y), c.horizontal_sum(z)],
                _ => [a.vertical_sum(x), b.vertical_sum(y), c.horizontal_sum(z)],
            }
        });
        (self != Combiner::Sym && count >= 2).then_some(out)
    }
}

/// The 24 images of `t` under argument permutations and conjugation of an
/// even number of arguments, each of which has the same coefficient.
pub fn symmetry_orbit(t: &Triple) -> Vec<Triple> {
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let conj: Vec<Partition> = t.iter().map(Partition::conjugate).collect();
    let mut out = Vec::with_capacity(24);
    for flips in [[false, false, false], [true, true, false], [true, false, true], [false, true, true]] {
        for p in PERMS {
            let pick = |i: usize| if flips[i] { conj[p[i]].clone() } else { t[p[i]].clone() };
            let img = [pick(0), pick(1), pick(2)];
            if !out.contains(&img) {
                out.push(img);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Node {
    pub combiner: Combiner,
    pub children: Vec<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Leaf { leaf: Triple, witness: Witness },
    Node { claim: Triple, node: Node },
}

impl Certificate {
    pub fn leaf(t: Triple, witness: Witness) -> Self {
        Certificate::Leaf { leaf: t, witness }
    }

    /// A node claiming the combination of its children; `None` if the
    /// children do not combine.
    pub fn combine(combiner: Combiner, children: Vec<Certificate>) -> Option<Self> {
        let claim = combiner.combine(children.iter().map(Certificate::claim))?;
        Some(Certificate::Node {
            claim,
            node: Node { combiner, children },
        })
    }

    pub fn sym(claim: Triple, child: Certificate) -> Self {
        Certificate::Node {
            claim,
            node: Node {
                combiner: Combiner::Sym,
                children: vec![child],
            },
        }
    }

    pub fn claim(&self) -> &Triple {
        match self {
            Certificate::Leaf { leaf, .. } => leaf,
            Certificate::Node { claim, .. } => claim,
        }
    }

    /// Leaves have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 0,
            Certificate::Node { node, .. } => 1 + node.children.iter().map(Certificate::depth).max().unwrap_or(0),
        }
    }

    pub fn leaves(&self) -> Vec<(&Triple, Witness)> {
        fn walk<'a>(c: &'a Certificate, out: &mut Vec<(&'a Triple, Witness)>) {
            match c {
                Certificate::Leaf { leaf, witness } => out.push((leaf, *witness)),
                Certificate::Node { node, .. } => node.children.iter().for_each(|ch| walk(ch, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, CertError> {
        serde_json::from_str(s).map_err(|e| CertError::Malformed(format!("not a certificate: {e}")))
    }
}

#[derive(Debug, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("combine mismatch at a {combiner} node: claimed {claimed}, children give {combined}")]
    CombineMismatch {
        combiner: Combiner,
        claimed: String,
        combined: String,
    },
    #[error("witness {witness} does not apply to {triple}: {reason}")]
    WitnessInapplicable {
        witness: Witness,
        triple: String,
        reason: String,
    },
    #[error("witness {witness} evaluates to zero on {triple}")]
    LeafNotPositive { witness: Witness, triple: String },
    #[error("oracle leaf of size {n} exceeds the verification cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error(transparent)]
    Kron(#[from] KronError),
}

impl CertError {
    /// Stable short name of the failure kind.
    pub fn kind(&self) -> &'static str {
        match self {
            CertError::Malformed(_) => "malformed",
            CertError::CombineMismatch { .. } => "combine-mismatch",
            CertError::WitnessInapplicable { .. } => "witness-inapplicable",
            CertError::LeafNotPositive { .. } => "leaf-not-positive",
            CertError::OracleCapExceeded { .. } => "oracle-cap-exceeded",
            CertError::Kron(_) => "evaluation-error",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub oracle_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertStats {
    pub depth: usize,
    pub leaves: usize,
    pub nodes: usize,
}

fn inapplicable(witness: Witness, t: &Triple, reason: impl Into<String>) -> CertError {
    CertError::WitnessInapplicable {
        witness,
        triple: fmt_triple(t),
        reason: reason.into(),
    }
}

/// Some argument order `(x, x, y)`; the coefficient is symmetric.
fn equal_pair(t: &Triple) -> Option<(&Partition, &Partition)> {
    if t[0] == t[1] {
        Some((&t[0], &t[2]))
    } else if t[0] == t[2] {
        Some((&t[0], &t[1]))
    } else if t[1] == t[2] {
        Some((&t[1], &t[0]))
    } else {
        None
    }
}

/// The hook `(n-k, 1^k)` as `k`.
fn hook_leg(p: &Partition) -> Option<usize> {
    (p.len() <= 1 || p.parts()[1..].iter().all(|&x| x == 1)).then(|| p.len().saturating_sub(1))
}

/// Re-evaluates one leaf. `Ok` means the witness applies and shows
/// `g > 0`.
pub fn check_witness(t: &Triple, witness: Witness, oracle_cap: usize) -> Result<(), CertError> {
    let n = t[0].size();
    if t.iter().any(|p| p.size() != n) {
        return Err(CertError::Malformed(format!("sizes differ in {}", fmt_triple(t))));
    }
    let not_positive = || CertError::LeafNotPositive {
        witness,
        triple: fmt_triple(t),
    };
    match witness {
        Witness::FormulaTwoRow | Witness::FormulaNearTwoRow => {
            let want = if witness == Witness::FormulaTwoRow {
                Provenance::FormulaTwoRow
            } else {
                Provenance::FormulaNearTwoRow
            };
            match formula_value(&t[0], &t[1], &t[2]) {
                Some((v, by)) if by == want => {
                    if v > num_bigint::BigInt::zero() {
                        Ok(())
                    } else {
                        Err(not_positive())
                    }
                }
                _ => Err(inapplicable(witness, t, "outside the formula's family")),
            }
        }
        Witness::ThmNn => {
            let (x, y) = equal_pair(t).ok_or_else(|| inapplicable(witness, t, "no repeated argument"))?;
            if x.len() != 2 || x.part(0) != x.part(1) {
                return Err(inapplicable(witness, t, "repeated argument is not (n,n)"));
            }
            if predicates::thm_nn(y)? {
                Ok(())
            } else {
                Err(not_positive())
            }
        }
        Witness::CharacterCriterion => {
            let (x, y) = equal_pair(t).ok_or_else(|| inapplicable(witness, t, "no repeated argument"))?;
            if !x.is_self_conjugate() {
                return Err(inapplicable(witness, t, "repeated argument is not self-conjugate"));
            }
            match saxl_criterion(x, y)? {
                SaxlOutcome::Positive => Ok(()),
                SaxlOutcome::Inconclusive => Err(not_positive()),
            }
        }
        Witness::Lemma3k => {
            let (x, y) = equal_pair(t).ok_or_else(|| inapplicable(witness, t, "no repeated argument"))?;
            let (w, h) = y.as_rectangle().ok_or_else(|| inapplicable(witness, t, "not k^3 shaped"))?;
            let ok = h == 3 && w >= 3 && (x == y || x.as_rectangle() == Some((3, w)));
            if ok {
                Ok(())
            } else {
                Err(inapplicable(witness, t, "needs (k^3, k^3, k^3) or (3^k, 3^k, k^3) with k >= 3"))
            }
        }
        Witness::LemmaMultipleof4 => {
            let (x, y) = equal_pair(t).ok_or_else(|| inapplicable(witness, t, "no repeated argument"))?;
            let ok = match x.as_rectangle() {
                Some((w, 4)) | Some((4, w)) => w >= 2 && y.parts() == [2 * w, 2 * w],
                _ => false,
            };
            if ok {
                Ok(())
            } else {
                Err(inapplicable(witness, t, "needs (m^4, m^4, (2m, 2m)) with m >= 2"))
            }
        }
        Witness::ThmHookpos => {
            let (x, y) = equal_pair(t).ok_or_else(|| inapplicable(witness, t, "no repeated argument"))?;
            let (w, h) = x.as_rectangle().ok_or_else(|| inapplicable(witness, t, "not a rectangle"))?;
            let k = hook_leg(y).ok_or_else(|| inapplicable(witness, t, "third argument is not a hook"))?;
            let (b, m) = (w.min(h), w.max(h));
            match predicates::hook_zero(b, m, k as i64) {
                Ok(false) => Ok(()),
                Ok(true) => Err(not_positive()),
                Err(e) => Err(inapplicable(witness, t, e.to_string())),
            }
        }
        Witness::Oracle => {
            if n > oracle_cap {
                return Err(CertError::OracleCapExceeded { n, cap: oracle_cap });
            }
            if kronecker::kron(&t[0], &t[1], &t[2])?.is_zero() {
                Err(not_positive())
            } else {
                Ok(())
            }
        }
    }
}

/// Checks every node's combination and re-evaluates every leaf.
pub fn verify_certificate(c: &Certificate, opts: &VerifyOptions) -> Result<CertStats, CertError> {
    let mut stats = CertStats {
        depth: c.depth(),
        leaves: 0,
        nodes: 0,
    };
    verify_rec(c, opts, &mut stats)?;
    Ok(stats)
}

fn verify_rec(c: &Certificate, opts: &VerifyOptions, stats: &mut CertStats) -> Result<(), CertError> {
    match c {
        Certificate::Leaf { leaf, witness } => {
            stats.leaves += 1;
            check_witness(leaf, *witness, opts.oracle_cap)
        }
        Certificate::Node { claim, node } => {
            stats.nodes += 1;
            let n = claim[0].size();
            if claim.iter().any(|p| p.size() != n) {
                return Err(CertError::Malformed(format!("sizes differ in claim {}", fmt_triple(claim))));
            }
            match node.combiner {
                Combiner::Sym => {
                    let [child] = node.children.as_slice() else {
                        return Err(CertError::Malformed(format!(
                            "SYM node needs exactly one child, found {}",
                            node.children.len()
                        )));
                    };
                    if !symmetry_orbit(child.claim()).contains(claim) {
                        return Err(CertError::CombineMismatch {
                            combiner: Combiner::Sym,
                            claimed: fmt_triple(claim),
                            combined: format!("{} (not a symmetry image)", fmt_triple(child.claim())),
                        });
                    }
                }
                comb => {
                    if node.children.len() < 2 {
                        return Err(CertError::Malformed(format!(
                            "{comb} node needs at least two children, found {}",
                            node.children.len()
                        )));
                    }
                    let got = comb
                        .combine(node.children.iter().map(Certificate::claim))
                        .expect("two or more children");
                    if &got != claim {
                        return Err(CertError::CombineMismatch {
                            combiner: comb,
                            claimed: fmt_triple(claim),
                            combined: fmt_triple(&got),
                        });
                    }
                }
            }
            node.children.iter().try_for_each(|ch| verify_rec(ch, opts, stats))
        }
    }
}
