//! Lazy enumeration of all shortest paths between two vertices.

use crate::error::GraphError;
use crate::graph::{Graph, Path, Vertex};

/// Default per-pair cap on the number of geodesics.
pub const DEFAULT_GEODESIC_CAP: usize = 1_000_000;

/// Iterator over every `u,v`-geodesic in lexicographic order of vertex
/// sequence.
///
/// The walk follows the BFS DAG towards `v`: every prefix it builds extends
/// to a geodesic, so there is no dead-end backtracking.
pub struct Geodesics<'g> {
    g: &'g Graph,
    target: Vertex,
    path: Vec<Vertex>,
    // cursor[i] = index into neighbors(path[i]) of path[i + 1]
    cursor: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'g> Geodesics<'g> {
    pub fn new(g: &'g Graph, u: Vertex, v: Vertex) -> Self {
        Geodesics {
            g,
            target: v,
            path: vec![u],
            cursor: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn next_step(&self, x: Vertex, from: usize) -> Option<usize> {
        let want = self.g.dist(x, self.target).checked_sub(1)?;
        self.g.neighbors(x)[from..]
            .iter()
            .position(|&y| self.g.dist(y, self.target) == want)
            .map(|p| p + from)
    }

    fn descend(&mut self) {
        while let Some(&x) = self.path.last() {
            if x == self.target {
                break;
            }
            let i = self.next_step(x, 0).expect("BFS DAG always reaches the target");
            self.cursor.push(i);
            self.path.push(self.g.neighbors(x)[i]);
        }
    }
}

impl Iterator for Geodesics<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend();
            return Some(Path::new(self.path.clone()));
        }
        loop {
            let Some(c) = self.cursor.pop() else {
                self.done = true;
                return None;
            };
            self.path.pop();
            let x = *self.path.last().unwrap();
            if let Some(i) = self.next_step(x, c + 1) {
                self.cursor.push(i);
                self.path.push(self.g.neighbors(x)[i]);
                self.descend();
                return Some(Path::new(self.path.clone()));
            }
        }
    }
}

/// All `u,v`-geodesics, lexicographically ordered. More than `cap` of them is
/// an error, never a truncation.
pub fn enumerate_geodesics(
    g: &Graph,
    u: Vertex,
    v: Vertex,
    cap: usize,
) -> Result<Vec<Path>, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut out = Vec::new();
    for p in Geodesics::new(g, u, v) {
        if out.len() == cap {
            return Err(GraphError::GeodesicOverflow { u, v, cap });
        }
        out.push(p);
    }
    Ok(out)
}

/// The lexicographically first `u,v`-geodesic.
pub fn first_geodesic(g: &Graph, u: Vertex, v: Vertex) -> Path {
    Geodesics::new(g, u, v).next().expect("connected graph")
}
