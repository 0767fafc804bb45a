//! Cartesian products with layer bookkeeping.

use crate::bitset::VertexSet;
use crate::error::GraphError;
use crate::graph::{Graph, Path, Vertex};

/// Default cap on the order of a product.
pub const DEFAULT_PRODUCT_LIMIT: usize = 1 << 16;

/// `G □ H` together with its factors.
///
/// Vertex `(g, h)` has index `g * n(H) + h` (row-major in the left factor).
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    left: Graph,
    right: Graph,
}

/// Builds `G □ H`, refusing products larger than [`DEFAULT_PRODUCT_LIMIT`].
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<ProductGraph, GraphError> {
    ProductGraph::with_limit(g, h, DEFAULT_PRODUCT_LIMIT)
}

impl ProductGraph {
    pub fn with_limit(g: &Graph, h: &Graph, limit: usize) -> Result<ProductGraph, GraphError> {
        let (a, b) = (g.order(), h.order());
        let n = a.checked_mul(b).ok_or(GraphError::TooLarge { n: usize::MAX, limit })?;
        if n > limit {
            return Err(GraphError::TooLarge { n, limit });
        }
        let idx = |x: Vertex, y: Vertex| x * b + y;
        let mut edges = Vec::with_capacity(a * h.size() + b * g.size());
        for x in 0..a {
            for (y1, y2) in h.edges() {
                edges.push((idx(x, y1), idx(x, y2)));
            }
        }
        for (x1, x2) in g.edges() {
            for y in 0..b {
                edges.push((idx(x1, y), idx(x2, y)));
            }
        }
        let labels = (0..n)
            .map(|v| format!("({},{})", g.label(v / b), h.label(v % b)))
            .collect();
        let graph = Graph::from_edges(n, edges)?.with_labels(labels)?;
        Ok(ProductGraph {
            graph,
            left: g.clone(),
            right: h.clone(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn left(&self) -> &Graph {
        &self.left
    }

    pub fn right(&self) -> &Graph {
        &self.right
    }

    pub fn vertex(&self, g: Vertex, h: Vertex) -> Vertex {
        debug_assert!(g < self.left.order() && h < self.right.order());
        g * self.right.order() + h
    }

    pub fn coord(&self, v: Vertex) -> (Vertex, Vertex) {
        (v / self.right.order(), v % self.right.order())
    }

    /// The G-layer `G^h = { (x, h) : x in V(G) }`.
    pub fn left_layer(&self, h: Vertex) -> VertexSet {
        VertexSet::from_vertices(
            self.graph.order(),
            (0..self.left.order()).map(|x| self.vertex(x, h)),
        )
    }

    /// The H-layer `^gH = { (g, y) : y in V(H) }`.
    pub fn right_layer(&self, g: Vertex) -> VertexSet {
        VertexSet::from_vertices(
            self.graph.order(),
            (0..self.right.order()).map(|y| self.vertex(g, y)),
        )
    }

    /// `P × {h}` for a path `P` of the left factor.
    pub fn lift_left(&self, p: &Path, h: Vertex) -> Path {
        p.map(|x| self.vertex(x, h))
    }

    /// `{g} × Q` for a path `Q` of the right factor.
    pub fn lift_right(&self, g: Vertex, q: &Path) -> Path {
        q.map(|y| self.vertex(g, y))
    }
}
