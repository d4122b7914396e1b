//! Brute-force reference implementations, straight from the definitions.
//!
//! Subsets are `u32` masks swept in ascending order, so every result is
//! reproducible bit for bit. Nothing here is fast.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::mis::OmegaFamily;

/// No oracle runs above this order, whatever the budget says.
pub const HARD_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph of order {n} exceeds the oracle budget of {limit} vertices")]
    Budget { n: usize, limit: usize },
    #[error("independent-set scan stopped after {limit} nodes")]
    Nodes { limit: u64 },
    #[error("independent-set scan handles at most {SCAN_MAX_VERTICES} vertices, got {n}")]
    ScanOrder { n: usize },
    #[error("ker over critical independent sets {independent:?} differs from ker over critical sets {all:?}")]
    KerDisagreement { independent: VertexSet, all: VertexSet },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Max order for the `2^n` subset sweeps.
    pub subset_limit: usize,
    /// Max order for the exhaustive matching search.
    pub matching_limit: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            subset_limit: 16,
            matching_limit: 14,
        }
    }
}

impl OracleBudget {
    /// Both limits set to `n`, clamped to [`HARD_CAP`].
    pub fn uniform(n: usize) -> Self {
        OracleBudget {
            subset_limit: n.min(HARD_CAP),
            matching_limit: n.min(HARD_CAP),
        }
    }

    fn check(limit: usize, n: usize) -> Result<(), OracleError> {
        let limit = limit.min(HARD_CAP);
        if n > limit {
            return Err(OracleError::Budget { n, limit });
        }
        Ok(())
    }

    pub fn check_subsets(&self, n: usize) -> Result<(), OracleError> {
        Self::check(self.subset_limit, n)
    }

    pub fn check_matching(&self, n: usize) -> Result<(), OracleError> {
        Self::check(self.matching_limit, n)
    }
}

/// `N(X)` and independence for every subset `X`.
pub struct SubsetTable {
    n: usize,
    nbr: Vec<u32>,
    independent: Vec<bool>,
}

impl SubsetTable {
    pub fn new(g: &Graph, budget: OracleBudget) -> Result<Self, OracleError> {
        let n = g.order();
        budget.check_subsets(n)?;
        let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
        let size = 1usize << n;
        let mut nbr = vec![0u32; size];
        let mut independent = vec![true; size];
        for x in 1..size {
            let low = x.trailing_zeros() as usize;
            let rest = x & (x - 1);
            nbr[x] = nbr[rest] | adj[low];
            independent[x] = independent[rest] && adj[low] & rest as u32 == 0;
        }
        Ok(SubsetTable { n, nbr, independent })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> std::ops::Range<u32> {
        0..(1u32 << self.n)
    }

    pub fn neighborhood(&self, x: u32) -> u32 {
        self.nbr[x as usize]
    }

    pub fn is_independent(&self, x: u32) -> bool {
        self.independent[x as usize]
    }

    /// `d(X) = |X| - |N(X)|`.
    pub fn difference(&self, x: u32) -> i64 {
        x.count_ones() as i64 - self.nbr[x as usize].count_ones() as i64
    }

    pub fn dc(&self) -> i64 {
        self.masks().map(|x| self.difference(x)).max().unwrap_or(0)
    }

    pub fn critical_sets(&self) -> Vec<u32> {
        let dc = self.dc();
        self.masks().filter(|&x| self.difference(x) == dc).collect()
    }

    pub fn critical_independent_sets(&self) -> Vec<u32> {
        let dc = self.dc();
        self.masks().filter(|&x| self.independent[x as usize] && self.difference(x) == dc).collect()
    }

    pub fn independent_sets(&self) -> Vec<u32> {
        self.masks().filter(|&x| self.independent[x as usize]).collect()
    }
}

fn to_set(mask: u32) -> VertexSet {
    VertexSet::from_mask(mask as u128)
}

fn to_sets(masks: Vec<u32>) -> Vec<VertexSet> {
    masks.into_iter().map(to_set).collect()
}

fn intersect_all(masks: &[u32], n: usize) -> VertexSet {
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    to_set(masks.iter().fold(full, |acc, &m| acc & m))
}

/// `max d(X)` over all subsets.
pub fn oracle_dc(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    Ok(SubsetTable::new(g, budget)?.dc() as usize)
}

/// Every critical set, in ascending mask order.
pub fn oracle_all_critical_sets(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>, OracleError> {
    Ok(to_sets(SubsetTable::new(g, budget)?.critical_sets()))
}

/// Every critical independent set, in ascending mask order.
pub fn oracle_critical_independent_sets(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>, OracleError> {
    Ok(to_sets(SubsetTable::new(g, budget)?.critical_independent_sets()))
}

/// `ker(G)` as the intersection of all critical independent sets and as the
/// intersection of all critical sets, in that order.
pub fn oracle_ker_both(g: &Graph, budget: OracleBudget) -> Result<(VertexSet, VertexSet), OracleError> {
    let t = SubsetTable::new(g, budget)?;
    Ok((
        intersect_all(&t.critical_independent_sets(), t.order()),
        intersect_all(&t.critical_sets(), t.order()),
    ))
}

/// `ker(G)`; the two intersections must agree.
pub fn oracle_ker(g: &Graph, budget: OracleBudget) -> Result<VertexSet, OracleError> {
    let (independent, all) = oracle_ker_both(g, budget)?;
    if independent != all {
        return Err(OracleError::KerDisagreement { independent, all });
    }
    Ok(independent)
}

/// All independent sets, in ascending mask order.
pub fn oracle_independent_sets(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>, OracleError> {
    Ok(to_sets(SubsetTable::new(g, budget)?.independent_sets()))
}

/// `Ω(G)` by scanning every independent set.
pub fn oracle_omega(g: &Graph, budget: OracleBudget) -> Result<OmegaFamily, OracleError> {
    let t = SubsetTable::new(g, budget)?;
    let ind = t.independent_sets();
    let alpha = ind.iter().map(|x| x.count_ones()).max().unwrap_or(0);
    Ok(OmegaFamily::from_sets(
        ind.into_iter().filter(|x| x.count_ones() == alpha).map(to_set).collect(),
    ))
}

pub fn oracle_alpha(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    oracle_omega(g, budget).map(|om| om.alpha)
}

/// `μ(G)`: the lowest free vertex is either left unmatched or matched along
/// one of its edges; memoized on the set of free vertices.
pub fn oracle_mu(g: &Graph, budget: OracleBudget) -> Result<usize, OracleError> {
    budget.check_matching(g.order())?;
    let adj: Vec<u32> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    fn best(free: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if free == 0 {
            return 0;
        }
        if let Some(&b) = memo.get(&free) {
            return b;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut b = best(rest, adj, memo);
        let mut partners = adj[v] & rest;
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            b = b.max(1 + best(rest & !(1 << u), adj, memo));
        }
        memo.insert(free, b);
        b
    }
    let all = if g.order() == 32 { u32::MAX } else { (1u32 << g.order()) - 1 };
    Ok(best(all, &adj, &mut HashMap::new()))
}

/// `|S| <= |N(S)|` for every independent `S`.
pub fn oracle_quasi_regularizable(g: &Graph, budget: OracleBudget) -> Result<bool, OracleError> {
    let t = SubsetTable::new(g, budget)?;
    Ok(t.masks().all(|x| !t.is_independent(x) || t.difference(x) <= 0))
}

/// Critical independent sets of the largest cardinality; `α_c` is their size.
pub fn oracle_max_critical_independent_sets(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>, OracleError> {
    let sets = SubsetTable::new(g, budget)?.critical_independent_sets();
    let top = sets.iter().map(|x| x.count_ones()).max().unwrap_or(0);
    Ok(to_sets(sets.into_iter().filter(|x| x.count_ones() == top).collect()))
}

pub const SCAN_MAX_VERTICES: usize = 64;

/// Result of walking every independent set once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentScan {
    /// `max d(S)` over independent `S`.
    pub idc: i64,
    /// The largest independent sets with `d(S) = idc`, by ascending mask.
    pub maximum: Vec<VertexSet>,
    pub visited: u64,
}

/// Depth-first walk over all independent sets, for orders past the subset
/// table. Cost is the number of independent sets, capped at `node_limit`.
pub fn scan_independent_sets(g: &Graph, node_limit: u64) -> Result<IndependentScan, OracleError> {
    let n = g.order();
    if n > SCAN_MAX_VERTICES {
        return Err(OracleError::ScanOrder { n });
    }
    let adj: Vec<u64> = g.vertices().map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u)).collect();

    struct Walk<'a> {
        adj: &'a [u64],
        limit: u64,
        visited: u64,
        best: (i64, u32),
        maximum: Vec<u64>,
    }

    impl Walk<'_> {
        fn go(&mut self, from: usize, s: u64, nb: u64) -> Result<(), OracleError> {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(OracleError::Nodes { limit: self.limit });
            }
            let key = (s.count_ones() as i64 - nb.count_ones() as i64, s.count_ones());
            if key > self.best {
                self.best = key;
                self.maximum.clear();
            }
            if key == self.best {
                self.maximum.push(s);
            }
            for v in from..self.adj.len() {
                if nb >> v & 1 == 0 {
                    self.go(v + 1, s | 1 << v, nb | self.adj[v])?;
                }
            }
            Ok(())
        }
    }

    let mut w = Walk {
        adj: &adj,
        limit: node_limit,
        visited: 0,
        best: (i64::MIN, 0),
        maximum: Vec::new(),
    };
    w.go(0, 0, 0)?;
    w.maximum.sort_unstable();
    Ok(IndependentScan {
        idc: w.best.0,
        maximum: w.maximum.into_iter().map(|m| VertexSet::from_mask(m as u128)).collect(),
        visited: w.visited,
    })
}
