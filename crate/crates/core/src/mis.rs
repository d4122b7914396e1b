//! Exact maximum independent sets at desk scale: `α(G)`, the family `Ω(G)` of
//! all maximum independent sets, `core(G)` and `corona(G)`.
//!
//! The search works on 128-bit vertex masks, so graphs above 128 vertices are
//! always reported as over budget.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::matching::maximum_matching;

/// Largest order the bitmask search can represent.
pub const MAX_EXACT_VERTICES: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MisError {
    #[error("graph of order {n} exceeds the vertex guard {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("search exceeded the node budget of {limit}")]
    NodeBudget { limit: u64 },
    #[error("set is not independent")]
    NotIndependent,
}

/// Limits for the exponential searches. Exceeding one is an explicit outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Guard {
    pub max_vertices: usize,
    pub max_nodes: u64,
}

impl Guard {
    /// Defaults for computing `α`.
    pub const ALPHA: Guard = Guard {
        max_vertices: 64,
        max_nodes: 50_000_000,
    };

    /// Defaults for enumerating `Ω`.
    pub const ENUMERATION: Guard = Guard {
        max_vertices: 40,
        max_nodes: 1_000_000,
    };

    fn check(&self, n: usize) -> Result<(), MisError> {
        let limit = self.max_vertices.min(MAX_EXACT_VERTICES);
        if n > limit {
            return Err(MisError::TooManyVertices { n, limit });
        }
        Ok(())
    }
}

/// `α(G)`, or bounds when the guard trips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alpha {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl Alpha {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Alpha::Exact(a) => Some(a),
            Alpha::Bounds { .. } => None,
        }
    }
}

/// All maximum independent sets with their intersection and union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaFamily {
    pub alpha: usize,
    /// Sorted.
    pub sets: Vec<VertexSet>,
    pub core: VertexSet,
    pub corona: VertexSet,
}

impl OmegaFamily {
    /// Builds the family from its members; `sets` must be non-empty.
    pub fn from_sets(mut sets: Vec<VertexSet>) -> Self {
        sets.sort();
        let alpha = sets[0].len();
        let core = sets.iter().skip(1).fold(sets[0].clone(), |acc, s| acc.intersection(s));
        let corona = sets.iter().fold(VertexSet::new(), |acc, s| acc.union(s));
        OmegaFamily { alpha, sets, core, corona }
    }

    /// `ξ = |core|`.
    pub fn xi(&self) -> usize {
        self.core.len()
    }

    /// `ζ = |corona|`.
    pub fn zeta(&self) -> usize {
        self.corona.len()
    }
}

struct Masks {
    adj: Vec<u128>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        Masks {
            adj: g.vertices().map(|v| VertexSet::from(g.neighbors(v).to_vec()).to_mask()).collect(),
        }
    }

    fn degree_in(&self, v: usize, cand: u128) -> u32 {
        (self.adj[v] & cand).count_ones()
    }

    /// Number of cliques in a greedy clique cover of `cand`: an upper bound
    /// on the independence number of the induced subgraph.
    fn clique_cover_bound(&self, cand: u128) -> usize {
        let mut rest = cand;
        let mut cliques = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut clique = 1u128 << v;
            let mut ext = rest & self.adj[v];
            while ext != 0 {
                let u = ext.trailing_zeros() as usize;
                clique |= 1u128 << u;
                ext &= self.adj[u];
            }
            rest &= !clique;
            cliques += 1;
        }
        cliques
    }

    fn max_degree_vertex(&self, cand: u128) -> (usize, u32) {
        let mut best = (cand.trailing_zeros() as usize, 0);
        let mut rest = cand;
        let mut first = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = self.degree_in(v, cand);
            if first || d > best.1 {
                best = (v, d);
                first = false;
            }
        }
        best
    }
}

struct AlphaSearch<'a> {
    masks: &'a Masks,
    best: usize,
    best_set: u128,
    nodes: u64,
    limit: u64,
}

impl AlphaSearch<'_> {
    fn run(&mut self, mut cand: u128, mut chosen: u128) -> Result<(), MisError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(MisError::NodeBudget { limit: self.limit });
        }
        // Vertices of degree <= 1 in the candidate graph can always be taken.
        loop {
            let mut changed = false;
            let mut rest = cand;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if cand & (1u128 << v) == 0 {
                    continue;
                }
                if self.masks.degree_in(v, cand) <= 1 {
                    chosen |= 1u128 << v;
                    cand &= !(self.masks.adj[v] | (1u128 << v));
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size > self.best {
                self.best = size;
                self.best_set = chosen;
            }
            return Ok(());
        }
        if size + self.masks.clique_cover_bound(cand) <= self.best {
            return Ok(());
        }
        let (v, _) = self.masks.max_degree_vertex(cand);
        let bit = 1u128 << v;
        self.run(cand & !(self.masks.adj[v] | bit), chosen | bit)?;
        self.run(cand & !bit, chosen)
    }
}

fn search_alpha(g: &Graph, guard: Guard) -> Result<(usize, VertexSet), MisError> {
    guard.check(g.order())?;
    let masks = Masks::new(g);
    let all = if g.order() == 128 { u128::MAX } else { (1u128 << g.order()) - 1 };
    let mut s = AlphaSearch {
        masks: &masks,
        best: 0,
        best_set: 0,
        nodes: 0,
        limit: guard.max_nodes,
    };
    s.run(all, 0)?;
    Ok((s.best, VertexSet::from_mask(s.best_set)))
}

/// Min-degree greedy independent set.
pub fn greedy_independent_set(g: &Graph) -> VertexSet {
    let mut alive = vec![true; g.order()];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut buckets: std::collections::BTreeSet<(usize, usize)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut chosen = Vec::new();
    while let Some((_, v)) = buckets.pop_first() {
        chosen.push(v);
        alive[v] = false;
        for &u in g.neighbors(v) {
            if !alive[u] {
                continue;
            }
            alive[u] = false;
            buckets.remove(&(degree[u], u));
            for &w in g.neighbors(u) {
                if alive[w] {
                    buckets.remove(&(degree[w], w));
                    degree[w] -= 1;
                    buckets.insert((degree[w], w));
                }
            }
        }
    }
    VertexSet::from(chosen)
}

/// `α(G)` by branch and bound. When the guard trips, returns the bounds
/// `[greedy, n - μ(G)]` instead.
pub fn exact_alpha(g: &Graph, guard: Guard) -> Alpha {
    match search_alpha(g, guard) {
        Ok((a, _)) => Alpha::Exact(a),
        Err(_) => Alpha::Bounds {
            lower: greedy_independent_set(g).len(),
            upper: g.order() - maximum_matching(g).size(),
        },
    }
}

/// One maximum independent set, if the guard allows.
pub fn maximum_independent_set(g: &Graph, guard: Guard) -> Result<VertexSet, MisError> {
    search_alpha(g, guard).map(|(_, s)| s)
}

struct EnumSearch<'a> {
    masks: &'a Masks,
    alpha: usize,
    out: Vec<u128>,
    nodes: u64,
    limit: u64,
}

impl EnumSearch<'_> {
    fn run(&mut self, mut cand: u128, mut chosen: u128) -> Result<(), MisError> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(MisError::NodeBudget { limit: self.limit });
        }
        // A vertex isolated among the candidates is in every completion of size α.
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.masks.degree_in(v, cand) == 0 {
                chosen |= 1u128 << v;
                cand &= !(1u128 << v);
            }
        }
        let size = chosen.count_ones() as usize;
        if cand == 0 {
            if size == self.alpha {
                self.out.push(chosen);
            }
            return Ok(());
        }
        if size + self.masks.clique_cover_bound(cand) < self.alpha {
            return Ok(());
        }
        let (v, _) = self.masks.max_degree_vertex(cand);
        let bit = 1u128 << v;
        self.run(cand & !(self.masks.adj[v] | bit), chosen | bit)?;
        self.run(cand & !bit, chosen)
    }
}

/// All of `Ω(G)`, found in two passes: `α` first, then every independent set
/// of that size.
pub fn enumerate_maximum_independent_sets(g: &Graph, guard: Guard) -> Result<OmegaFamily, MisError> {
    let (alpha, _) = search_alpha(g, guard)?;
    let masks = Masks::new(g);
    let all = if g.order() == 128 { u128::MAX } else { (1u128 << g.order()) - 1 };
    let mut s = EnumSearch {
        masks: &masks,
        alpha,
        out: Vec::new(),
        nodes: 0,
        limit: guard.max_nodes,
    };
    s.run(all, 0)?;
    Ok(OmegaFamily::from_sets(s.out.into_iter().map(VertexSet::from_mask).collect()))
}

/// `A ∈ Ω(G[N[A]])`.
pub fn is_local_max_independent_set(g: &Graph, a: &VertexSet, guard: Guard) -> Result<bool, MisError> {
    if !g.is_independent(a) {
        return Err(MisError::NotIndependent);
    }
    let closed = g.closed_neighborhood(a);
    let local = g.induced_subgraph(&closed);
    let (alpha, _) = search_alpha(&local.graph, guard)?;
    Ok(alpha == a.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn alpha_examples() {
        for (name, want) in [("P3", 2), ("G2", 4), ("K23", 3), ("C5", 2), ("G3", 6), ("Gfig3", 8)] {
            let g = fixtures::graph(name).unwrap();
            assert_eq!(exact_alpha(&g, Guard::ALPHA), Alpha::Exact(want), "{name}");
        }
    }

    #[test]
    fn alpha_guard_gives_bounds() {
        let g = fixtures::graph("G2").unwrap();
        let guard = Guard {
            max_vertices: 3,
            max_nodes: 10,
        };
        match exact_alpha(&g, guard) {
            Alpha::Bounds { lower, upper } => {
                assert!(lower <= 4 && 4 <= upper);
                assert_eq!(upper, 7 - 3);
            }
            other => panic!("expected bounds, got {other:?}"),
        }
    }

    #[test]
    fn omega_examples() {
        let g1 = fixtures::graph("G1").unwrap();
        let om = enumerate_maximum_independent_sets(&g1, Guard::ENUMERATION).unwrap();
        let expect = vec![g1.set(&["a", "b", "w"]).unwrap(), g1.set(&["a", "b", "z"]).unwrap()];
        let mut got = om.sets.clone();
        got.sort();
        let mut want = expect.clone();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(om.core, g1.set(&["a", "b"]).unwrap());

        let g2 = fixtures::graph("G2").unwrap();
        let om = enumerate_maximum_independent_sets(&g2, Guard::ENUMERATION).unwrap();
        assert_eq!(om.core, g2.set(&["x", "y", "z"]).unwrap());

        let g = fixtures::graph("Gfig3").unwrap();
        let om = enumerate_maximum_independent_sets(&g, Guard::ENUMERATION).unwrap();
        assert_eq!(om.core, g.set(&["a", "b", "c", "u"]).unwrap());

        let k2 = fixtures::graph("K2").unwrap();
        let om = enumerate_maximum_independent_sets(&k2, Guard::ENUMERATION).unwrap();
        assert_eq!(om.sets.len(), 2);
        assert!(om.core.is_empty());
        assert_eq!(om.zeta(), 2);
    }

    #[test]
    fn enumeration_guard() {
        let g = fixtures::graph("G3").unwrap();
        let tight = Guard {
            max_vertices: 40,
            max_nodes: 2,
        };
        assert!(matches!(
            enumerate_maximum_independent_sets(&g, tight),
            Err(MisError::NodeBudget { .. })
        ));
    }

    #[test]
    fn local_max_examples() {
        let g2 = fixtures::graph("G2").unwrap();
        assert!(is_local_max_independent_set(&g2, &g2.set(&["x"]).unwrap(), Guard::ALPHA).unwrap());
        let p3 = fixtures::graph("P3").unwrap();
        assert!(!is_local_max_independent_set(&p3, &p3.set(&["b"]).unwrap(), Guard::ALPHA).unwrap());
        let g1 = fixtures::graph("G1").unwrap();
        assert!(is_local_max_independent_set(&g1, &g1.set(&["a", "b"]).unwrap(), Guard::ALPHA).unwrap());
        assert!(matches!(
            is_local_max_independent_set(&p3, &p3.set(&["a", "b"]).unwrap(), Guard::ALPHA),
            Err(MisError::NotIndependent)
        ));
    }

    #[test]
    fn greedy_is_independent() {
        for (_, g) in fixtures::all() {
            assert!(g.is_independent(&greedy_independent_set(&g)));
        }
    }
}
