//! Simple undirected graphs with labeled vertices, and the set operations the
//! rest of the crate is phrased in: neighborhoods, the difference `|X| - |N(X)|`,
//! induced subgraphs.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Dense vertex id, `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` - `{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex id {0} out of range for a graph of order {1}")]
    OutOfRange(Vertex, usize),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
}

/// Canonical vertex set: strictly increasing ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(vec![v])
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    /// Builds the set whose members are the set bits of `mask`.
    pub fn from_mask(mask: u128) -> Self {
        let mut out = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            out.push(rest.trailing_zeros() as Vertex);
            rest &= rest - 1;
        }
        VertexSet(out)
    }

    /// Bit mask of the set. Panics if a member is >= 128.
    pub fn to_mask(&self) -> u128 {
        self.0.iter().fold(0u128, |acc, &v| {
            assert!(v < 128, "vertex {v} does not fit a 128-bit mask");
            acc | (1u128 << v)
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        VertexSet(out)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn with(&self, v: Vertex) -> VertexSet {
        self.iter().chain(std::iter::once(v)).collect()
    }

    /// Maps every member through `map`, e.g. from subgraph ids back to host ids.
    pub fn map(&self, map: &[Vertex]) -> VertexSet {
        self.iter().map(|v| map[v]).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(v: Vec<Vertex>) -> Self {
        v.into_iter().collect()
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Immutable simple undirected graph.
///
/// Adjacency lists are sorted; labels are unique and map bijectively onto
/// `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Vec<String>,
    ids: HashMap<String, Vertex>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("m", &self.size())
            .field("edges", &self.edges().map(|(u, v)| (self.label(u), self.label(v))).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices labeled `"0"`..`"n-1"`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        Graph::with_labels((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let n = labels.len();
        let mut ids = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if ids.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(labels[u].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(labels[u].clone(), labels[w[0]].clone()));
            }
        }
        Ok(Graph {
            adj,
            labels,
            ids,
            edge_count: edges.len(),
        })
    }

    /// Builds a graph from label pairs; vertex ids follow first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Graph, GraphError> {
        let mut labels: Vec<String> = Vec::new();
        let mut ids: HashMap<String, Vertex> = HashMap::new();
        let mut id_of = |s: &str| -> Vertex {
            *ids.entry(s.to_string()).or_insert_with(|| {
                labels.push(s.to_string());
                labels.len() - 1
            })
        };
        let pairs: Vec<(Vertex, Vertex)> = edges.iter().map(|(a, b)| (id_of(a.as_ref()), id_of(b.as_ref()))).collect();
        Graph::with_labels(labels, &pairs)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn adjacency(&self) -> &[Vec<Vertex>] {
        &self.adj
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.ids.get(label).copied()
    }

    /// Resolves labels into a vertex set.
    pub fn set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet, GraphError> {
        labels
            .iter()
            .map(|l| self.vertex(l.as_ref()).ok_or_else(|| GraphError::UnknownLabel(l.as_ref().to_string())))
            .collect()
    }

    /// Labels of the members of `set`, in id order.
    /// Labels of `set`, sorted.
    pub fn labels_of(&self, set: &VertexSet) -> Vec<String> {
        let mut out: Vec<String> = set.iter().map(|v| self.labels[v].clone()).collect();
        out.sort();
        out
    }

    /// `N(X)`: every vertex with a neighbor in `X`, members of `X` included.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        x.iter().flat_map(|u| self.adj[u].iter().copied()).collect()
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighborhood(&self, x: &VertexSet) -> VertexSet {
        self.neighborhood(x).union(x)
    }

    /// `d(X) = |X| - |N(X)|`.
    pub fn difference(&self, x: &VertexSet) -> i64 {
        x.len() as i64 - self.neighborhood(x).len() as i64
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|u| self.adj[u].iter().all(|&v| !x.contains(v)))
    }

    /// The subgraph spanned by `x`; vertex `i` of the result is `x[i]` here.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Subgraph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, v) in x.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = Vec::with_capacity(x.len());
        let mut edge_count = 0;
        for v in x.iter() {
            let list: Vec<Vertex> = self.adj[v].iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect();
            edge_count += list.len();
            adj.push(list);
        }
        let labels: Vec<String> = x.iter().map(|v| self.labels[v].clone()).collect();
        let ids = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        Subgraph {
            graph: Graph {
                adj,
                labels,
                ids,
                edge_count: edge_count / 2,
            },
            original: x.as_slice().to_vec(),
        }
    }

    /// `G - N[v]`.
    pub fn delete_closed_neighborhood(&self, v: Vertex) -> Subgraph {
        let removed = self.closed_neighborhood(&VertexSet::singleton(v));
        self.induced_subgraph(&VertexSet::full(self.order()).difference(&removed))
    }

    /// Vertices of degree exactly one.
    pub fn pendant_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(|l| l.is_empty())
    }

    /// Component index per vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.order()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    /// Two-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// An induced subgraph together with its id mapping back into the host graph.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `original[i]` is the host id of local vertex `i`.
    pub original: Vec<Vertex>,
}

impl Subgraph {
    pub fn to_host(&self, set: &VertexSet) -> VertexSet {
        set.map(&self.original)
    }

    pub fn local(&self, host: Vertex) -> Option<Vertex> {
        self.original.binary_search(&host).ok()
    }
}
