//! Critical sets.
//!
//! Everything here runs on one maximum matching of the bipartite double cover
//! `H` (left copy `v1` and right copy `v2` per vertex, `u1 v2` an edge iff `uv`
//! is). For `X ⊆ V`, `N_H(X1) = N(X)2`, so the largest difference over all
//! vertex sets is the matching deficiency of `H`:
//!
//! ```text
//! d_c(G) = max_X (|X| - |N(X)|) = n - μ(H)
//! ```
//!
//! Given a maximum matching `M` of `H`, a set `X` is critical exactly when
//! `X1` contains every `M`-exposed left copy and is closed under
//! `x1 -> y2 -> M(y2)`. The least such set (alternating reach from the exposed
//! left copies) is `ker(G)`; the greatest is the complement of the left copies
//! reachable from exposed right copies.

use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{hopcroft_karp, AlternatingReach, BipartiteGraph, BipartiteMatching};

/// Bipartite double cover. Left and right copies of vertex `v` both have
/// index `v` on their side.
#[derive(Clone, Debug)]
pub struct DoubleCover {
    cover: BipartiteGraph,
}

impl DoubleCover {
    pub fn new(g: &Graph) -> Self {
        DoubleCover {
            cover: BipartiteGraph::from_adjacency(g.order(), g.adjacency().to_vec()),
        }
    }

    pub fn bipartite(&self) -> &BipartiteGraph {
        &self.cover
    }

    pub fn left_copy(&self, v: Vertex) -> usize {
        v
    }

    pub fn right_copy(&self, v: Vertex) -> usize {
        v
    }

    pub fn original_of_left(&self, l: usize) -> Vertex {
        l
    }

    pub fn original_of_right(&self, r: usize) -> Vertex {
        r
    }

    /// `2n`.
    pub fn vertex_count(&self) -> usize {
        self.cover.left_len() + self.cover.right_len()
    }

    /// `2m`.
    pub fn edge_count(&self) -> usize {
        self.cover.edge_count()
    }

    /// `N_H(X1)`, as original vertices.
    pub fn cover_neighborhood(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .flat_map(|v| self.cover.neighbors(self.left_copy(v)).iter().map(|&r| self.original_of_right(r)))
            .collect()
    }
}

pub fn double_cover(g: &Graph) -> DoubleCover {
    DoubleCover::new(g)
}

/// A maximum matching of the double cover together with its alternating
/// structure; every fast-path quantity is read off this.
#[derive(Clone, Debug)]
pub struct CriticalStructure {
    cover: DoubleCover,
    matching: BipartiteMatching,
    reach: AlternatingReach,
}

impl CriticalStructure {
    pub fn new(g: &Graph) -> Self {
        let cover = DoubleCover::new(g);
        let matching = hopcroft_karp(cover.bipartite());
        let reach = matching.alternating_reach(cover.bipartite());
        CriticalStructure { cover, matching, reach }
    }

    pub fn cover(&self) -> &DoubleCover {
        &self.cover
    }

    pub fn matching(&self) -> &BipartiteMatching {
        &self.matching
    }

    pub fn reach(&self) -> &AlternatingReach {
        &self.reach
    }

    /// `μ(H)`.
    pub fn cover_matching_size(&self) -> usize {
        self.matching.size()
    }

    pub fn critical_difference(&self) -> usize {
        self.cover.bipartite().left_len() - self.matching.size()
    }

    /// Least critical set, which is `ker(G)`.
    pub fn ker(&self) -> VertexSet {
        self.reach
            .left
            .iter()
            .enumerate()
            .filter(|(_, &r)| r)
            .map(|(l, _)| self.cover.original_of_left(l))
            .collect()
    }

    /// Greatest critical set (the union of all critical sets).
    pub fn maximum_critical_set(&self) -> VertexSet {
        let h = self.cover.bipartite();
        let n = h.left_len();
        // In the double cover the left neighbors of right copy r are the
        // originals adjacent to r, i.e. the left adjacency of l = r.
        let mut excluded = vec![false; n];
        let mut seen_right = vec![false; n];
        let mut queue: std::collections::VecDeque<usize> =
            (0..n).filter(|&r| self.matching.right_mate(r).is_none()).collect();
        for &r in &queue {
            seen_right[r] = true;
        }
        while let Some(r) = queue.pop_front() {
            for &l in h.neighbors(r) {
                if excluded[l] {
                    continue;
                }
                excluded[l] = true;
                if let Some(next) = self.matching.left_mate(l) {
                    if !seen_right[next] {
                        seen_right[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        (0..n).filter(|&l| !excluded[l]).map(|l| self.cover.original_of_left(l)).collect()
    }
}

/// `d_c(G)`.
pub fn critical_difference(g: &Graph) -> usize {
    CriticalStructure::new(g).critical_difference()
}

/// `ker(G)` from a single matching of the double cover.
pub fn ker_fast(g: &Graph) -> VertexSet {
    CriticalStructure::new(g).ker()
}

/// `ker(G)` by the per-vertex test `v ∈ ker(G) ⇔ μ(H - v1) = μ(H)`, with a
/// fresh matching for every vertex.
pub fn ker_slow(g: &Graph) -> VertexSet {
    let cover = DoubleCover::new(g);
    let full = hopcroft_karp(cover.bipartite()).size();
    g.vertices()
        .filter(|&v| hopcroft_karp(&cover.bipartite().without_left(cover.left_copy(v))).size() == full)
        .collect()
}

/// A critical set: the least one, so `∅` exactly when `d_c = 0`.
pub fn find_critical_set(g: &Graph) -> VertexSet {
    CriticalStructure::new(g).ker()
}

/// The union of all critical sets. Usually not independent.
pub fn greatest_critical_set(g: &Graph) -> VertexSet {
    CriticalStructure::new(g).maximum_critical_set()
}

/// Members of `x` with no neighbor inside `x`. Never has smaller difference
/// than `x`, so it maps critical sets to critical independent sets.
pub fn independent_part(g: &Graph, x: &VertexSet) -> VertexSet {
    x.iter().filter(|&v| g.neighbors(v).iter().all(|&w| !x.contains(w))).collect()
}

/// A critical independent set, built as the independent part of the greatest
/// critical set.
pub fn critical_independent_set(g: &Graph) -> VertexSet {
    independent_part(g, &greatest_critical_set(g))
}

/// `id_c(G)`, realized by [`critical_independent_set`].
pub fn critical_independence_difference(g: &Graph) -> i64 {
    g.difference(&critical_independent_set(g))
}

/// A critical independent set of maximum cardinality.
///
/// Scans vertices in id order and keeps `v` when some critical independent
/// set extends the current choice by `v`. With `G'` the graph left after
/// deleting the closed neighborhoods of the chosen vertices, that holds iff
/// `1 - deg_G'(v) + d_c(G' - N[v]) = d_c(G')`.
pub fn max_critical_independent_set(g: &Graph) -> VertexSet {
    let mut current = g.induced_subgraph(&VertexSet::full(g.order()));
    let mut current_dc = critical_difference(g);
    let mut chosen = Vec::new();
    for v in g.vertices() {
        let Some(local) = current.local(v) else {
            continue;
        };
        let deg = current.graph.degree(local);
        let rest = current.graph.delete_closed_neighborhood(local);
        let rest_dc = critical_difference(&rest.graph);
        if rest_dc + 1 == current_dc + deg {
            chosen.push(v);
            let original = rest.original.iter().map(|&i| current.original[i]).collect();
            current = crate::graph::Subgraph {
                graph: rest.graph,
                original,
            };
            current_dc = rest_dc;
        }
    }
    VertexSet::from(chosen)
}

/// Outcome of the quasi-regularizability test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuasiRegularity {
    pub quasi_regularizable: bool,
    /// The graph has isolated vertices, outside the setting the
    /// characterization is stated for.
    pub assumption_violated: bool,
}

/// `|S| <= |N(S)|` for every independent `S`, i.e. `d_c(G) = 0`.
pub fn is_quasi_regularizable(g: &Graph) -> QuasiRegularity {
    QuasiRegularity {
        quasi_regularizable: critical_difference(g) == 0,
        assumption_violated: g.has_isolated_vertices(),
    }
}

/// All critical-set invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalProfile {
    pub dc: usize,
    pub idc: i64,
    pub ker: VertexSet,
    pub witness: VertexSet,
    /// Maximum critical independent set, when requested.
    pub max_critical: Option<VertexSet>,
}

impl CriticalProfile {
    pub fn compute(g: &Graph, with_max_critical: bool) -> Self {
        let s = CriticalStructure::new(g);
        let witness = independent_part(g, &s.maximum_critical_set());
        CriticalProfile {
            dc: s.critical_difference(),
            idc: g.difference(&witness),
            ker: s.ker(),
            witness,
            max_critical: with_max_critical.then(|| max_critical_independent_set(g)),
        }
    }

    /// `ε = |ker|`.
    pub fn epsilon(&self) -> usize {
        self.ker.len()
    }

    /// `α_c`, when the maximum critical independent set was computed.
    pub fn alpha_c(&self) -> Option<usize> {
        self.max_critical.as_ref().map(VertexSet::len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn set(g: &Graph, labels: &[&str]) -> VertexSet {
        g.set(labels).unwrap()
    }

    #[test]
    fn double_cover_shape() {
        let k2 = fixtures::graph("K2").unwrap();
        let h = double_cover(&k2);
        assert_eq!((h.vertex_count(), h.edge_count()), (4, 2));

        let p3 = fixtures::graph("P3").unwrap();
        let h = double_cover(&p3);
        assert_eq!(h.bipartite().neighbors(0), &[1]);
        assert_eq!(h.bipartite().neighbors(1), &[0, 2]);
        assert_eq!(h.bipartite().neighbors(2), &[1]);

        let g2 = fixtures::graph("G2").unwrap();
        let h = double_cover(&g2);
        assert_eq!((h.vertex_count(), h.edge_count()), (14, 14));
        assert_eq!(hopcroft_karp(h.bipartite()).size(), 6);
        let x = set(&g2, &["x", "y", "z", "p", "q"]);
        assert_eq!(h.cover_neighborhood(&x), g2.neighborhood(&x));
    }

    #[test]
    fn critical_difference_examples() {
        assert_eq!(critical_difference(&fixtures::graph("K2").unwrap()), 0);
        assert_eq!(critical_difference(&fixtures::graph("G2").unwrap()), 1);
        assert_eq!(critical_difference(&fixtures::graph("K23").unwrap()), 1);
        assert_eq!(critical_difference(&fixtures::graph("Gfig3").unwrap()), 2);
        // An isolated vertex alone is critical with difference 1.
        assert_eq!(critical_difference(&Graph::from_edges(1, &[]).unwrap()), 1);
    }

    #[test]
    fn ker_examples() {
        for (name, expected) in [
            ("G1", vec!["a", "b"]),
            ("G2", vec!["x", "y"]),
            ("G3", vec!["u", "v"]),
            ("K2", vec![]),
            ("P3", vec!["a", "c"]),
            ("Gfig3", vec!["a", "b", "c"]),
            ("K23", vec!["c", "d", "e"]),
        ] {
            let g = fixtures::graph(name).unwrap();
            let want = set(&g, &expected);
            assert_eq!(ker_fast(&g), want, "{name} fast");
            assert_eq!(ker_slow(&g), want, "{name} slow");
        }
    }

    #[test]
    fn find_critical_set_examples() {
        assert!(find_critical_set(&fixtures::graph("K2").unwrap()).is_empty());
        for name in ["G1", "G2", "G3", "Gfig3"] {
            let g = fixtures::graph(name).unwrap();
            let x = find_critical_set(&g);
            assert_eq!(g.difference(&x), critical_difference(&g) as i64, "{name}");
        }
        let g2 = fixtures::graph("G2").unwrap();
        assert_eq!(find_critical_set(&g2), set(&g2, &["x", "y"]));
        assert_eq!(greatest_critical_set(&g2), set(&g2, &["x", "y", "z", "b", "p", "q"]));
        assert_eq!(greatest_critical_set(&fixtures::graph("K2").unwrap()).len(), 2);
    }

    #[test]
    fn independent_part_examples() {
        let g2 = fixtures::graph("G2").unwrap();
        let indep = set(&g2, &["x", "y", "z"]);
        assert_eq!(independent_part(&g2, &indep), indep);

        let i = independent_part(&g2, &set(&g2, &["x", "y", "z", "p", "q"]));
        assert_eq!(i, set(&g2, &["x", "y", "z"]));
        assert_eq!(g2.difference(&i), 1);

        let i = independent_part(&g2, &set(&g2, &["x", "y", "z", "b", "p", "q"]));
        assert_eq!(i, set(&g2, &["x", "y"]));
        assert_eq!(g2.difference(&i), 1);
    }

    #[test]
    fn idc_examples() {
        assert_eq!(critical_independence_difference(&fixtures::graph("G2").unwrap()), 1);
        assert_eq!(critical_independence_difference(&fixtures::graph("K2").unwrap()), 0);
        assert_eq!(critical_independence_difference(&fixtures::graph("Gfig3").unwrap()), 2);
    }

    #[test]
    fn max_critical_independent_set_examples() {
        let g = fixtures::graph("Gfig3").unwrap();
        assert_eq!(max_critical_independent_set(&g), set(&g, &["a", "b", "c", "v"]));
        let k23 = fixtures::graph("K23").unwrap();
        assert_eq!(max_critical_independent_set(&k23), set(&k23, &["c", "d", "e"]));
        // d_c(K2) = 0 and a single vertex has difference 0 too.
        let k2 = fixtures::graph("K2").unwrap();
        assert_eq!(max_critical_independent_set(&k2), set(&k2, &["a"]));
        assert!(max_critical_independent_set(&fixtures::graph("C5").unwrap()).is_empty());
    }

    #[test]
    fn quasi_regularizable_examples() {
        for (name, want) in [("C5", true), ("K2", true), ("G1", false), ("G2", false), ("G3", false)] {
            let q = is_quasi_regularizable(&fixtures::graph(name).unwrap());
            assert_eq!(q.quasi_regularizable, want, "{name}");
            assert!(!q.assumption_violated);
        }
        let with_isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let q = is_quasi_regularizable(&with_isolated);
        assert!(!q.quasi_regularizable && q.assumption_violated);
    }
}
