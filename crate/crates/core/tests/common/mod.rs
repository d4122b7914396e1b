#![allow(dead_code)]

use critsets::generate::gnp;
use critsets::graph::{Graph, VertexSet};

pub const PROBS: [f64; 4] = [0.1, 0.2, 0.35, 0.5];

/// The seeded G(n, p) corpus: graph `i` has `n = 4 + i % 11`,
/// `p = PROBS[(i / 11) % 4]` and seed `i`.
pub fn gnp_corpus(count: u64) -> impl Iterator<Item = (u64, Graph)> {
    (0..count).map(|i| {
        let n = 4 + (i % 11) as usize;
        let p = PROBS[((i / 11) % 4) as usize];
        (i, gnp(n, p, i).unwrap())
    })
}

pub fn set(g: &Graph, labels: &[&str]) -> VertexSet {
    g.set(labels).unwrap()
}

pub fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}
