//! Certificates: a vertex set plus one fixed geodesic per unordered pair,
//! covering every vertex.
//!
//! A [`Certificate`] can only be obtained through [`Certificate::new`] (or
//! [`Assignment::finish`]), both of which verify the coverage claim, so any
//! value of this type is a proof that its set is a strong geodetic set.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::CertificateError;
use crate::geodesic::first_geodesic;
use crate::graph::{Graph, Path, Vertex};

/// The geodesic fixed for the pair `{a, b}`, oriented from `a` to `b`, `a < b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPath {
    pub a: Vertex,
    pub b: Vertex,
    pub path: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    set: Vec<Vertex>,
    pairs: Vec<PairPath>,
    covered: VertexSet,
}

impl Certificate {
    /// Verifies and assembles a certificate. `paths` must hold exactly one
    /// geodesic per unordered pair of `set`, in either orientation.
    pub fn new(g: &Graph, set: &[Vertex], paths: Vec<Path>) -> Result<Certificate, CertificateError> {
        let n = g.order();
        if set.is_empty() {
            return Err(CertificateError::EmptySet);
        }
        let mut members = VertexSet::new(n);
        for &v in set {
            if v >= n {
                return Err(CertificateError::VertexOutOfRange { vertex: v, n });
            }
            if !members.insert(v) {
                return Err(CertificateError::DuplicateVertex(v));
            }
        }
        let sorted = members.to_vec();

        let mut by_pair: BTreeMap<(Vertex, Vertex), Path> = BTreeMap::new();
        for p in paths {
            if p.is_empty() {
                return Err(CertificateError::EmptySet);
            }
            let (x, y) = (p.first(), p.last());
            let (a, b) = (x.min(y), x.max(y));
            if a == b || !members.contains(a) || !members.contains(b) {
                return Err(CertificateError::ForeignPair { a, b });
            }
            if !p.is_geodesic_in(g) {
                return Err(CertificateError::NotAGeodesic { a, b });
            }
            let oriented = if x == a { p } else { p.reversed() };
            if by_pair.insert((a, b), oriented).is_some() {
                return Err(CertificateError::DuplicatePair { a, b });
            }
        }

        let mut covered = members.clone();
        let mut pairs = Vec::with_capacity(by_pair.len());
        for (i, &a) in sorted.iter().enumerate() {
            for &b in &sorted[i + 1..] {
                let path = by_pair
                    .remove(&(a, b))
                    .ok_or(CertificateError::MissingPair { a, b })?;
                for &v in path.vertices() {
                    covered.insert(v);
                }
                pairs.push(PairPath { a, b, path });
            }
        }
        if !covered.is_full() {
            return Err(CertificateError::Uncovered(covered.complement().to_vec()));
        }
        Ok(Certificate {
            set: sorted,
            pairs,
            covered,
        })
    }

    /// Members of the strong geodetic set, increasing.
    pub fn set(&self) -> &[Vertex] {
        &self.set
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.covered.universe(), self.set.iter().copied())
    }

    pub fn pairs(&self) -> &[PairPath] {
        &self.pairs
    }

    pub fn covered(&self) -> &VertexSet {
        &self.covered
    }

    /// The fixed geodesic oriented from `x` to `y`.
    pub fn path(&self, x: Vertex, y: Vertex) -> Option<Path> {
        let (a, b) = (x.min(y), x.max(y));
        let p = self.pairs.iter().find(|p| p.a == a && p.b == b)?;
        Some(if x == a { p.path.clone() } else { p.path.reversed() })
    }

    pub fn to_json(&self, g: &Graph) -> CertificateJson {
        CertificateJson {
            n: g.order(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            s: self.set.clone(),
            pairs: self
                .pairs
                .iter()
                .map(|p| PairJson {
                    a: p.a,
                    b: p.b,
                    path: p.path.vertices().to_vec(),
                })
                .collect(),
            covered: self.covered.is_full(),
        }
    }
}

/// Builder used by the constructions: fix some pairs explicitly, let the
/// rest default to their lexicographically first geodesic, then verify.
pub struct Assignment<'g> {
    g: &'g Graph,
    set: VertexSet,
    fixed: BTreeMap<(Vertex, Vertex), Path>,
}

impl<'g> Assignment<'g> {
    pub fn new(g: &'g Graph, set: impl IntoIterator<Item = Vertex>) -> Assignment<'g> {
        Assignment {
            g,
            set: VertexSet::from_vertices(g.order(), set),
            fixed: BTreeMap::new(),
        }
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn fix(&mut self, path: Path) -> Result<(), CertificateError> {
        let (x, y) = (path.first(), path.last());
        let key = (x.min(y), x.max(y));
        if !self.set.contains(key.0) || !self.set.contains(key.1) || key.0 == key.1 {
            return Err(CertificateError::ForeignPair { a: key.0, b: key.1 });
        }
        if self.fixed.contains_key(&key) {
            return Err(CertificateError::DuplicatePair { a: key.0, b: key.1 });
        }
        self.fixed.insert(key, path);
        Ok(())
    }

    pub fn finish(mut self) -> Result<Certificate, CertificateError> {
        let members = self.set.to_vec();
        let mut paths = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                let p = self
                    .fixed
                    .remove(&(a, b))
                    .unwrap_or_else(|| first_geodesic(self.g, a, b));
                paths.push(p);
            }
        }
        Certificate::new(self.g, &members, paths)
    }
}

/// Wire format: `{n, edges, S, pairs: [{a, b, path}], covered}`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(rename = "S")]
    pub s: Vec<Vertex>,
    pub pairs: Vec<PairJson>,
    pub covered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub a: Vertex,
    pub b: Vertex,
    pub path: Vec<Vertex>,
}
