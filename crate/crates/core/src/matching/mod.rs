//! Maximum matching engines.
//!
//! [`hopcroft_karp`] works on explicit bipartite graphs and also exposes the
//! alternating structure of its final matching, which the critical-set code
//! reads directly. [`maximum_matching`] handles general graphs via blossoms.

mod bipartite;
mod blossom;

pub use bipartite::{hopcroft_karp, AlternatingReach, BipartiteGraph, BipartiteMatching};
pub use blossom::maximum_matching;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("sets must be disjoint, both contain vertex {0}")]
    Overlap(Vertex),
}

/// Matching in a general graph, as a partner map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<Vertex>>,
}

impl Matching {
    pub fn from_mates(mate: Vec<Option<Vertex>>) -> Self {
        Matching { mate }
    }

    pub fn empty(n: usize) -> Self {
        Matching { mate: vec![None; n] }
    }

    pub fn mate(&self, v: Vertex) -> Option<Vertex> {
        self.mate[v]
    }

    pub fn is_saturated(&self, v: Vertex) -> bool {
        self.mate[v].is_some()
    }

    pub fn size(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// Symmetric partner map whose pairs are edges of `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.mate.len() == g.order()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v < g.order() && v != u && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

/// Looks for a matching of `g` that saturates every vertex of `a` using only
/// edges between `a` and `b`. Returns the witness pairs `(a_i, b_i)` when one
/// exists.
pub fn saturating_matching(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<Option<Vec<(Vertex, Vertex)>>, MatchingError> {
    if let Some(v) = a.iter().find(|&v| b.contains(v)) {
        return Err(MatchingError::Overlap(v));
    }
    if a.len() > b.len() {
        return Ok(None);
    }
    let right: Vec<Vertex> = b.iter().collect();
    let adj: Vec<Vec<usize>> = a
        .iter()
        .map(|u| {
            g.neighbors(u)
                .iter()
                .filter_map(|&w| right.binary_search(&w).ok())
                .collect()
        })
        .collect();
    let h = BipartiteGraph::from_adjacency(right.len(), adj);
    let m = hopcroft_karp(&h);
    if m.size() < a.len() {
        return Ok(None);
    }
    Ok(Some(m.pairs().map(|(l, r)| (a.as_slice()[l], right[r])).collect()))
}

pub fn has_matching_saturating(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool, MatchingError> {
    saturating_matching(g, a, b).map(|w| w.is_some())
}

/// The graph viewed as bipartite along `side` (false = left). Returns the
/// bipartite graph and the host ids of its left and right vertices.
pub fn as_bipartite(g: &Graph, side: &[bool]) -> (BipartiteGraph, Vec<Vertex>, Vec<Vertex>) {
    let left: Vec<Vertex> = g.vertices().filter(|&v| !side[v]).collect();
    let right: Vec<Vertex> = g.vertices().filter(|&v| side[v]).collect();
    let adj = left
        .iter()
        .map(|&u| g.neighbors(u).iter().map(|w| right.binary_search(w).expect("not a bipartition")).collect())
        .collect();
    (BipartiteGraph::from_adjacency(right.len(), adj), left, right)
}
