//! Hopcroft–Karp maximum matching on explicit bipartite graphs, plus the
//! alternating-path structure of the final matching.

use std::collections::VecDeque;

/// Bipartite graph given by left-to-right adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    right: usize,
    adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        BipartiteGraph {
            right,
            adj: vec![Vec::new(); left],
        }
    }

    /// Panics if an entry of `adj` is `>= right`.
    pub fn from_adjacency(right: usize, adj: Vec<Vec<usize>>) -> Self {
        assert!(
            adj.iter().flatten().all(|&r| r < right),
            "right endpoint out of range"
        );
        BipartiteGraph { right, adj }
    }

    pub fn add_edge(&mut self, l: usize, r: usize) {
        assert!(l < self.adj.len() && r < self.right, "edge ({l}, {r}) out of range");
        self.adj[l].push(r);
    }

    pub fn left_len(&self) -> usize {
        self.adj.len()
    }

    pub fn right_len(&self) -> usize {
        self.right
    }

    pub fn neighbors(&self, l: usize) -> &[usize] {
        &self.adj[l]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// Same graph with every edge at left vertex `l` removed.
    pub fn without_left(&self, l: usize) -> BipartiteGraph {
        let mut h = self.clone();
        h.adj[l].clear();
        h
    }
}

/// A matching in a [`BipartiteGraph`], stored from both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteMatching {
    left_mate: Vec<Option<usize>>,
    right_mate: Vec<Option<usize>>,
}

/// Vertices reachable from the exposed left vertices by alternating paths
/// (any edge left-to-right, matching edge right-to-left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingReach {
    pub exposed_left: Vec<usize>,
    pub left: Vec<bool>,
    pub right: Vec<bool>,
}

impl BipartiteMatching {
    pub fn empty(h: &BipartiteGraph) -> Self {
        BipartiteMatching {
            left_mate: vec![None; h.left_len()],
            right_mate: vec![None; h.right_len()],
        }
    }

    pub fn size(&self) -> usize {
        self.left_mate.iter().filter(|m| m.is_some()).count()
    }

    pub fn left_mate(&self, l: usize) -> Option<usize> {
        self.left_mate[l]
    }

    pub fn right_mate(&self, r: usize) -> Option<usize> {
        self.right_mate[r]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_mate.iter().enumerate().filter_map(|(l, m)| m.map(|r| (l, r)))
    }

    /// Symmetric, non-incident, and every pair an edge of `h`.
    pub fn is_valid(&self, h: &BipartiteGraph) -> bool {
        if self.left_mate.len() != h.left_len() || self.right_mate.len() != h.right_len() {
            return false;
        }
        let forward = self
            .left_mate
            .iter()
            .enumerate()
            .all(|(l, m)| m.is_none_or(|r| self.right_mate[r] == Some(l) && h.neighbors(l).contains(&r)));
        let backward = self
            .right_mate
            .iter()
            .enumerate()
            .all(|(r, m)| m.is_none_or(|l| self.left_mate[l] == Some(r)));
        forward && backward
    }

    pub fn alternating_reach(&self, h: &BipartiteGraph) -> AlternatingReach {
        let exposed_left: Vec<usize> = (0..h.left_len()).filter(|&l| self.left_mate[l].is_none()).collect();
        let mut left = vec![false; h.left_len()];
        let mut right = vec![false; h.right_len()];
        let mut queue: VecDeque<usize> = exposed_left.iter().copied().collect();
        for &l in &exposed_left {
            left[l] = true;
        }
        while let Some(l) = queue.pop_front() {
            for &r in h.neighbors(l) {
                if right[r] {
                    continue;
                }
                right[r] = true;
                if let Some(next) = self.right_mate[r] {
                    if !left[next] {
                        left[next] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        AlternatingReach { exposed_left, left, right }
    }

    /// Minimum vertex cover read off the alternating structure:
    /// unreached left vertices plus reached right vertices.
    pub fn koenig_cover(&self, h: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
        let reach = self.alternating_reach(h);
        let left = (0..h.left_len()).filter(|&l| !reach.left[l]).collect();
        let right = (0..h.right_len()).filter(|&r| reach.right[r]).collect();
        (left, right)
    }
}

/// Maximum matching in `O(E sqrt(V))`. Deterministic: the result depends only
/// on the adjacency order.
pub fn hopcroft_karp(h: &BipartiteGraph) -> BipartiteMatching {
    const INF: usize = usize::MAX;
    let left_len = h.left_len();
    let mut m = BipartiteMatching::empty(h);

    // Greedy start; does not change the result's optimality.
    for l in 0..left_len {
        if let Some(&r) = h.neighbors(l).iter().find(|&&r| m.right_mate[r].is_none()) {
            m.left_mate[l] = Some(r);
            m.right_mate[r] = Some(l);
        }
    }

    let mut dist = vec![INF; left_len];
    let mut cursor = vec![0usize; left_len];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();

    loop {
        // Layer the left side by alternating BFS from the free left vertices.
        queue.clear();
        for (l, d) in dist.iter_mut().enumerate() {
            if m.left_mate[l].is_none() {
                *d = 0;
                queue.push_back(l);
            } else {
                *d = INF;
            }
        }
        let mut found = false;
        while let Some(l) = queue.pop_front() {
            for &r in h.neighbors(l) {
                match m.right_mate[r] {
                    None => found = true,
                    Some(next) if dist[next] == INF => {
                        dist[next] = dist[l] + 1;
                        queue.push_back(next);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        // Vertex-disjoint shortest augmenting paths, iterative DFS.
        cursor.iter_mut().for_each(|c| *c = 0);
        for root in 0..left_len {
            if m.left_mate[root].is_some() || dist[root] != 0 {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&l) = stack.last() {
                if cursor[l] < h.neighbors(l).len() {
                    let r = h.neighbors(l)[cursor[l]];
                    cursor[l] += 1;
                    match m.right_mate[r] {
                        None => {
                            via.push(r);
                            for (&pl, &pr) in stack.iter().zip(via.iter()) {
                                m.left_mate[pl] = Some(pr);
                                m.right_mate[pr] = Some(pl);
                            }
                            break;
                        }
                        Some(next) if dist[next] != INF && dist[next] == dist[l] + 1 => {
                            via.push(r);
                            stack.push(next);
                        }
                        Some(_) => {}
                    }
                } else {
                    dist[l] = INF;
                    stack.pop();
                    via.pop();
                }
            }
        }
    }
    m
}
