//! Seeded random graphs.
//!
//! All models draw from SplitMix64 (Steele, Lea and Flood), seeded with the
//! user seed as its initial state, so a corpus can be regenerated in any
//! language from this description:
//!
//! * uniform float: `(next >> 11) * 2^-53`
//! * integer below `k`: `next % k`
//! * `gnp`: for `i < j` in lexicographic order, edge `ij` iff float `< p`
//! * `gnm`: draw `u = next % n`, then `v = next % n`; skip loops and repeats
//!   until `m` edges are kept
//! * `tree`: vertex `i = 1..n-1` gets parent `next % i`
//!
//! Vertices are labeled `0..n-1`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("n must be at least 1")]
    EmptyGraph,
    #[error("p must lie in [0, 1], got {0}")]
    Probability(f64),
    #[error("m = {m} exceeds the {max} possible edges")]
    TooManyEdges { m: usize, max: usize },
    #[error("bad model `{0}`: expected gnp:N,P, gnm:N,M or tree:N")]
    BadModel(String),
}

pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next_u64() % k
    }
}

/// A random graph model with its parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Model {
    Gnp { n: usize, p: f64 },
    Gnm { n: usize, m: usize },
    Tree { n: usize },
}

impl Model {
    pub fn generate(&self, seed: u64) -> Result<Graph, GenError> {
        match *self {
            Model::Gnp { n, p } => gnp(n, p, seed),
            Model::Gnm { n, m } => gnm(n, m, seed),
            Model::Tree { n } => tree(n, seed),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Gnp { n, p } => write!(f, "gnp:{n},{p}"),
            Model::Gnm { n, m } => write!(f, "gnm:{n},{m}"),
            Model::Tree { n } => write!(f, "tree:{n}"),
        }
    }
}

impl FromStr for Model {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, GenError> {
        let bad = || GenError::BadModel(s.to_string());
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let args: Vec<&str> = args.split(',').map(str::trim).collect();
        let model = match (kind, args.as_slice()) {
            ("gnp", [n, p]) => Model::Gnp {
                n: n.parse().map_err(|_| bad())?,
                p: p.parse().map_err(|_| bad())?,
            },
            ("gnm", [n, m]) => Model::Gnm {
                n: n.parse().map_err(|_| bad())?,
                m: m.parse().map_err(|_| bad())?,
            },
            ("tree", [n]) => Model::Tree {
                n: n.parse().map_err(|_| bad())?,
            },
            _ => return Err(bad()),
        };
        model.validate()?;
        Ok(model)
    }
}

impl Model {
    pub fn validate(&self) -> Result<(), GenError> {
        let n = match *self {
            Model::Gnp { n, p } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(GenError::Probability(p));
                }
                n
            }
            Model::Gnm { n, m } => {
                let max = n * n.saturating_sub(1) / 2;
                if m > max {
                    return Err(GenError::TooManyEdges { m, max });
                }
                n
            }
            Model::Tree { n } => n,
        };
        if n == 0 {
            return Err(GenError::EmptyGraph);
        }
        Ok(())
    }
}

pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    Model::Gnp { n, p }.validate()?;
    let mut rng = Rng::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("simple by construction"))
}

pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph, GenError> {
    Model::Gnm { n, m }.validate()?;
    let mut rng = Rng::new(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.below(n as u64) as usize;
        let v = rng.below(n as u64) as usize;
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("simple by construction"))
}

/// Random recursive tree: each new vertex hangs off a uniformly chosen
/// earlier one.
pub fn tree(n: usize, seed: u64) -> Result<Graph, GenError> {
    Model::Tree { n }.validate()?;
    let mut rng = Rng::new(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.below(i as u64) as usize, i)).collect();
    Ok(Graph::from_edges(n, &edges).expect("simple by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_stream() {
        // Known-answer outputs of SplitMix64 for seed 1234567.
        let mut r = Rng::new(1234567);
        let want = [
            6457827717110365317u64,
            3203168211198807973,
            9817491932198370423,
            4593380528125082431,
            16408922859458223821,
        ];
        for w in want {
            assert_eq!(r.next_u64(), w);
        }
    }

    #[test]
    fn gen_examples() {
        let g = gnp(5, 0.0, 1).unwrap();
        assert_eq!((g.order(), g.size()), (5, 0));
        assert_eq!(g.isolated_vertices().len(), 5);
        let g = gnp(5, 1.0, 1).unwrap();
        assert_eq!(g.size(), 10);
        let t = tree(8, 3).unwrap();
        assert!(t.is_connected() && t.size() == 7 && t.is_tree());
    }

    #[test]
    fn deterministic() {
        assert_eq!(gnp(20, 0.3, 9).unwrap(), gnp(20, 0.3, 9).unwrap());
        assert_eq!(gnm(50, 80, 9).unwrap(), gnm(50, 80, 9).unwrap());
        assert_ne!(gnp(20, 0.3, 9).unwrap(), gnp(20, 0.3, 10).unwrap());
        assert_eq!(gnm(50, 80, 9).unwrap().size(), 80);
    }

    #[test]
    fn model_specs() {
        assert_eq!("gnp:12,0.2".parse::<Model>().unwrap(), Model::Gnp { n: 12, p: 0.2 });
        assert_eq!("tree:30".parse::<Model>().unwrap(), Model::Tree { n: 30 });
        assert_eq!("gnm:10,5".parse::<Model>().unwrap(), Model::Gnm { n: 10, m: 5 });
        assert!("gnp:5,1.5".parse::<Model>().is_err());
        assert!("tree:0".parse::<Model>().is_err());
        assert!("gnm:3,4".parse::<Model>().is_err());
        assert!("grid:3".parse::<Model>().is_err());
    }
}
