//! Edmonds' blossom algorithm for maximum cardinality matching in general
//! graphs. One alternating-tree search per exposed vertex; per-search state is
//! reset only on the vertices the search touched. Blossom bases live in a
//! union-find, and the Hungarian tree of a failed search is dropped for good:
//! no later augmenting path can pass through it.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

use super::Matching;

const NONE: usize = usize::MAX;

struct Search<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    // union-find over blossoms; `top[root]` is the blossom base
    uf: Vec<usize>,
    top: Vec<usize>,
    used: Vec<bool>,
    dead: Vec<bool>,
    touched: Vec<usize>,
    on_touched: Vec<bool>,
    path_mark: Vec<u32>,
    stamp: u32,
    marked: Vec<usize>,
    queue: VecDeque<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Search {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            uf: (0..n).collect(),
            top: (0..n).collect(),
            used: vec![false; n],
            dead: vec![false; n],
            touched: Vec::new(),
            on_touched: vec![false; n],
            path_mark: vec![0; n],
            stamp: 0,
            marked: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn touch(&mut self, v: usize) {
        if !self.on_touched[v] {
            self.on_touched[v] = true;
            self.touched.push(v);
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.uf[v] != v {
            self.uf[v] = self.uf[self.uf[v]];
            v = self.uf[v];
        }
        v
    }

    fn base(&mut self, v: usize) -> usize {
        let r = self.find(v);
        self.top[r]
    }

    fn reset(&mut self, failed: bool) {
        for &v in &self.touched {
            self.used[v] = false;
            self.parent[v] = NONE;
            self.uf[v] = v;
            self.top[v] = v;
            self.on_touched[v] = false;
            self.dead[v] |= failed;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.stamp += 1;
        let s = self.stamp;
        loop {
            a = self.base(a);
            self.path_mark[a] = s;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base(b);
            if self.path_mark[b] == s {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base(v) != b {
            let bv = self.base(v);
            let bm = self.base(self.mate[v]);
            self.marked.push(bv);
            self.marked.push(bm);
            self.parent[v] = child;
            self.touch(v);
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn contract(&mut self, v: usize, to: usize) {
        let cur = self.lca(v, to);
        self.marked.clear();
        self.mark_path(v, cur, to);
        self.mark_path(to, cur, v);
        let marked = std::mem::take(&mut self.marked);
        for &x in &marked {
            let (rx, rc) = (self.find(x), self.find(cur));
            if rx != rc {
                self.uf[rx] = rc;
            }
            let r = self.find(cur);
            self.top[r] = cur;
            // Only odd singletons are still outside the queue.
            if !self.used[x] {
                self.used[x] = true;
                self.queue.push_back(x);
            }
        }
        self.marked = marked;
    }

    /// Returns the exposed endpoint of an augmenting path from `root`, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        self.used[root] = true;
        self.touch(root);
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for i in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[i];
                if self.dead[to] || self.mate[v] == to || self.base(v) == self.base(to) {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    self.contract(v, to);
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    self.touch(to);
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.touch(next);
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// Maximum cardinality matching of `g`. Deterministic for a given graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.order();
    let mut s = Search::new(g);
    for v in 0..n {
        if s.mate[v] != NONE {
            continue;
        }
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| s.mate[w] == NONE) {
            s.mate[v] = w;
            s.mate[w] = v;
        }
    }
    for root in 0..n {
        if s.mate[root] != NONE || g.degree(root) == 0 {
            continue;
        }
        let end = s.find_path(root);
        if let Some(end) = end {
            s.augment(end);
        }
        s.reset(end.is_none());
    }
    let mate: Vec<Option<Vertex>> = s.mate.into_iter().map(|m| (m != NONE).then_some(m)).collect();
    Matching::from_mates(mate)
}
