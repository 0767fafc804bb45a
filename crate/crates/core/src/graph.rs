//! Immutable simple connected graphs with a precomputed distance matrix,
//! plus the metric predicates used throughout the crate.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::GraphError;

pub type Vertex = usize;

/// A simple, connected, unweighted graph over `0..n`.
///
/// All-pairs hop distances are computed once at construction; a graph that
/// is not connected cannot be built.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<Vertex>>,
    adj: Vec<VertexSet>,
    dist: Vec<u32>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops,
    /// out-of-range endpoints and disconnected inputs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let neighbors: Vec<Vec<Vertex>> = adj.iter().map(|s| s.to_vec()).collect();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;

        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let d = row[x] + 1;
                for &y in &neighbors[x] {
                    if row[y] == u32::MAX {
                        row[y] = d;
                        queue.push_back(y);
                    }
                }
            }
            if let Some(v) = row.iter().position(|&d| d == u32::MAX) {
                return Err(GraphError::Disconnected { u: s, v });
            }
        }

        Ok(Graph {
            n,
            neighbors,
            adj,
            dist,
            edge_count,
            labels: None,
        })
    }

    /// Attaches one display label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n {
            return Err(GraphError::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn neighbor_set(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        self.dist[u * self.n + v] as usize
    }

    pub fn distance_matrix(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.dist(u, v)).collect())
            .collect()
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Display label; 1-based index when the graph carries no labels.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        (0..self.n).find(|&v| self.label(v) == label)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n
    }

    /// `{ z : d(u,z) + d(z,v) = d(u,v) }`, the vertices on some u,v-geodesic.
    pub fn interval(&self, u: Vertex, v: Vertex) -> VertexSet {
        let d = self.dist(u, v);
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&z| self.dist(u, z) + self.dist(z, v) == d),
        )
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in increasing
    /// order. Labels are carried over.
    pub fn induced(&self, vertices: &VertexSet) -> Result<Graph, GraphError> {
        let keep = vertices.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|(u, v)| (index[u], index[v]));
        let g = Graph::from_edges(keep.len(), edges)?;
        g.with_labels(keep.iter().map(|&v| self.label(v)).collect())
    }

    /// Vertices whose neighborhood induces a clique.
    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.n,
            (0..self.n).filter(|&v| {
                let nb = &self.neighbors[v];
                nb.iter()
                    .enumerate()
                    .all(|(i, &a)| nb[i + 1..].iter().all(|&b| self.adjacent(a, b)))
            }),
        )
    }

    /// True iff all distinct members of `s` are at distance at least 3.
    pub fn is_two_packing(&self, s: &VertexSet) -> bool {
        let vs = s.to_vec();
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| self.dist(a, b) >= 3))
    }

    /// True iff every geodesic between vertices of `h` stays inside `h`.
    pub fn is_convex_subgraph(&self, h: &VertexSet) -> bool {
        if h.is_empty() {
            return false;
        }
        let vs = h.to_vec();
        vs.iter().enumerate().all(|(i, &a)| {
            vs[i + 1..]
                .iter()
                .all(|&b| self.interval(a, b).is_subset(h))
        })
    }

    /// True iff every vertex `v` has a gate `x` in `h`: a vertex of `h` lying on
    /// a shortest `v,u`-path for every `u` in `h`.
    pub fn is_gated_subgraph(&self, h: &VertexSet) -> bool {
        if h.is_empty() {
            return false;
        }
        let vs = h.to_vec();
        (0..self.n).all(|v| {
            vs.iter().any(|&x| {
                vs.iter()
                    .all(|&u| self.dist(v, x) + self.dist(x, u) == self.dist(v, u))
            })
        })
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

/// An ordered walk without repeated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<Vertex>);

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Path {
        Path(vertices)
    }

    pub fn single(v: Vertex) -> Path {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn join(mut self, other: &Path) -> Path {
        assert_eq!(self.last(), other.first(), "paths do not meet");
        self.0.extend_from_slice(&other.0[1..]);
        self
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Path {
        Path(self.0.iter().map(|&v| f(v)).collect())
    }

    pub fn vertex_set(&self, universe: usize) -> VertexSet {
        VertexSet::from_vertices(universe, self.0.iter().copied())
    }

    /// Consecutive vertices adjacent and no vertex repeated.
    pub fn is_path_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.order()) {
            return false;
        }
        let distinct = self.vertex_set(g.order()).len() == self.0.len();
        distinct && self.0.windows(2).all(|w| g.adjacent(w[0], w[1]))
    }

    pub fn is_geodesic_in(&self, g: &Graph) -> bool {
        self.is_path_in(g) && self.len() == g.dist(self.first(), self.last())
    }
}

impl From<Vec<Vertex>> for Path {
    fn from(v: Vec<Vertex>) -> Self {
        Path(v)
    }
}
