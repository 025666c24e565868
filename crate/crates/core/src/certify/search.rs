use std::collections::{HashMap, HashSet};

use num_traits::Zero;

use super::strategies::{Plan, Strategy};
use super::{check_witness, symmetry_orbit, CertError, Certificate, Triple, Witness, DEFAULT_ORACLE_CAP};
use crate::kronecker::{self, check_same_size, formula_value, kronecker_table, KroneckerTable, ScanOptions};
use crate::partition::Partition;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of strategy expansions.
    pub budget: usize,
    /// Maximum nesting of strategy expansions.
    pub max_depth: usize,
    /// Largest `n` at which the oracle may be used for a leaf.
    pub oracle_cap: usize,
    /// Leaf witnesses the search may use, tried in [`Witness::PREFERENCE`]
    /// order.
    pub witnesses: Vec<Witness>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 10_000,
            max_depth: 6,
            oracle_cap: DEFAULT_ORACLE_CAP,
            witnesses: Witness::PREFERENCE.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertifyOutcome {
    Found(Certificate),
    /// No certificate within the limits. Says nothing about `g`.
    NotFound { explored: usize, budget_exhausted: bool },
}

enum Stop {
    Budget,
    Failed(CertError),
}

impl From<CertError> for Stop {
    fn from(e: CertError) -> Self {
        Stop::Failed(e)
    }
}

struct Searcher<'a> {
    strategies: &'a [Box<dyn Strategy>],
    opts: SearchOptions,
    explored: usize,
    proven: HashMap<Triple, Certificate>,
    /// Deepest budget at which a triple has already failed.
    failed: HashMap<Triple, usize>,
    /// Triples known to have `g = 0`.
    zeros: HashSet<Triple>,
    leaves: HashMap<Triple, Option<Certificate>>,
    tables: HashMap<Partition, KroneckerTable>,
}

/// Searches for a certificate of `g(t) > 0` by iterative deepening over
/// strategy nesting. Strategies are tried in list order and candidates in
/// their own order, so the result is reproducible.
pub fn certify(
    target: &Triple,
    strategies: &[Box<dyn Strategy>],
    opts: &SearchOptions,
) -> Result<CertifyOutcome, CertError> {
    check_same_size(&[&target[0], &target[1], &target[2]])?;
    let mut s = Searcher {
        strategies,
        opts: opts.clone(),
        explored: 0,
        proven: HashMap::new(),
        failed: HashMap::new(),
        zeros: HashSet::new(),
        leaves: HashMap::new(),
        tables: HashMap::new(),
    };
    for depth in 0..=opts.max_depth {
        match s.prove(target, depth) {
            Ok(Some(c)) => return Ok(CertifyOutcome::Found(c)),
            Ok(None) if s.zeros.contains(target) => break,
            Ok(None) => {}
            Err(Stop::Budget) => {
                return Ok(CertifyOutcome::NotFound {
                    explored: s.explored,
                    budget_exhausted: true,
                })
            }
            Err(Stop::Failed(e)) => return Err(e),
        }
    }
    Ok(CertifyOutcome::NotFound {
        explored: s.explored,
        budget_exhausted: false,
    })
}

fn wrap(claim: &Triple, c: Certificate) -> Certificate {
    if c.claim() == claim {
        c
    } else {
        Certificate::sym(claim.clone(), c)
    }
}

impl Searcher<'_> {
    fn prove(&mut self, t: &Triple, depth: usize) -> Result<Option<Certificate>, Stop> {
        if let Some(c) = self.proven.get(t) {
            return Ok(Some(c.clone()));
        }
        if self.zeros.contains(t) {
            return Ok(None);
        }
        if let Some(c) = self.leaf(t)? {
            self.proven.insert(t.clone(), c.clone());
            return Ok(Some(c));
        }
        if self.zeros.contains(t) || depth == 0 || self.failed.get(t).is_some_and(|&d| d >= depth) {
            return Ok(None);
        }
        self.explored += 1;
        if self.explored > self.opts.budget {
            return Err(Stop::Budget);
        }
        for form in symmetry_orbit(t).into_iter().filter(|f| f[0] == f[1]) {
            for strategy in self.strategies {
                if !strategy.applies(&form) {
                    continue;
                }
                for plan in strategy.candidates(&form) {
                    if let Some(c) = self.realize(&plan, depth - 1)? {
                        let c = wrap(t, c);
                        self.proven.insert(t.clone(), c.clone());
                        return Ok(Some(c));
                    }
                }
            }
        }
        self.failed.insert(t.clone(), depth);
        Ok(None)
    }

    fn realize(&mut self, plan: &Plan, depth: usize) -> Result<Option<Certificate>, Stop> {
        match plan {
            Plan::Target(t) => self.prove(t, depth),
            Plan::Sym(claim, inner) => Ok(self.realize(inner, depth)?.map(|c| wrap(claim, c))),
            Plan::Combine(comb, kids) => {
                let mut certs = Vec::with_capacity(kids.len());
                for kid in kids {
                    match self.realize(kid, depth)? {
                        Some(c) => certs.push(c),
                        None => return Ok(None),
                    }
                }
                Certificate::combine(*comb, certs)
                    .map(Some)
                    .ok_or_else(|| Stop::Failed(CertError::Malformed("strategy emitted an inconsistent plan".into())))
            }
        }
    }

    /// A one-node certificate, if some witness (after a symmetry) applies.
    /// Exact zeros found on the way are remembered.
    fn leaf(&mut self, t: &Triple) -> Result<Option<Certificate>, Stop> {
        if let Some(c) = self.leaves.get(t) {
            return Ok(c.clone());
        }
        let found = self.find_leaf(t)?;
        self.leaves.insert(t.clone(), found.clone());
        Ok(found)
    }

    fn find_leaf(&mut self, t: &Triple) -> Result<Option<Certificate>, Stop> {
        if let Some((v, _)) = formula_value(&t[0], &t[1], &t[2]) {
            if v.is_zero() {
                self.zeros.insert(t.clone());
                return Ok(None);
            }
        }
        for img in symmetry_orbit(t) {
            for w in Witness::PREFERENCE {
                if w == Witness::Oracle || !self.opts.witnesses.contains(&w) {
                    continue;
                }
                match check_witness(&img, w, self.opts.oracle_cap) {
                    Ok(()) => return Ok(Some(wrap(t, Certificate::leaf(img, w)))),
                    Err(CertError::Kron(e)) if e.is_internal() => return Err(CertError::Kron(e).into()),
                    Err(_) => {}
                }
            }
        }
        if t[0].size() > self.opts.oracle_cap || !self.opts.witnesses.contains(&Witness::Oracle) {
            return Ok(None);
        }
        if self.oracle_is_zero(t)? {
            self.zeros.insert(t.clone());
            return Ok(None);
        }
        Ok(Some(Certificate::leaf(t.clone(), Witness::Oracle)))
    }

    /// Repeated arguments share one table scan.
    fn oracle_is_zero(&mut self, t: &Triple) -> Result<bool, CertError> {
        let pair = if t[0] == t[1] {
            Some((&t[0], &t[2]))
        } else if t[0] == t[2] {
            Some((&t[0], &t[1]))
        } else if t[1] == t[2] {
            Some((&t[1], &t[0]))
        } else {
            None
        };
        match pair {
            Some((x, y)) => {
                if !self.tables.contains_key(x) {
                    let table = kronecker_table(x, x, &ScanOptions::from_env())?;
                    self.tables.insert(x.clone(), table);
                }
                let g = self.tables[x].get(y).expect("tables are complete");
                Ok(g.is_zero())
            }
            None => Ok(kronecker::kron(&t[0], &t[1], &t[2])?.is_zero()),
        }
    }
}
