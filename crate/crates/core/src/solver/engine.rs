//! The decision procedure: given `S`, pick one geodesic per pair so that
//! their union covers `V`.
//!
//! Pairs with a single geodesic vertex set are applied up front. The rest are
//! branched on in ascending order of their number of distinct choices. A
//! branch is cut when
//! - the covered set plus every remaining pair's geodesic union misses a vertex,
//! - the remaining pairs cannot add enough new vertices even if each took its
//!   best choice, or
//! - a choice adds a subset of what another choice of the same pair adds.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::Instant;

use super::bits::Bits;
use super::Refutation;
use crate::bitset::VertexSet;
use crate::certificate::Certificate;
use crate::error::{GraphError, SolveError};
use crate::geodesic::Geodesics;
use crate::graph::{Graph, Path, Vertex};

/// Distinct geodesic vertex sets of one pair, each with its
/// lexicographically first representative path.
pub(crate) struct PairChoices<const W: usize> {
    pub sets: Vec<Bits<W>>,
    pub paths: Vec<Path>,
    pub union: Bits<W>,
}

pub(crate) enum Outcome {
    Strong(Vec<usize>),
    Refuted(Refutation),
    Timeout,
}

pub(crate) struct Engine<'g, const W: usize> {
    pub g: &'g Graph,
    cap: usize,
    table: Vec<OnceLock<Result<PairChoices<W>, GraphError>>>,
    pub full: Bits<W>,
    deadline: Option<Instant>,
}

impl<'g, const W: usize> Engine<'g, W> {
    pub fn new(g: &'g Graph, cap: usize, deadline: Option<Instant>) -> Self {
        let n = g.order();
        assert!(n <= W * 64);
        Engine {
            g,
            cap,
            table: (0..n * n).map(|_| OnceLock::new()).collect(),
            full: Bits::full(n),
            deadline,
        }
    }

    pub fn timed_out(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }

    pub fn pair(&self, a: Vertex, b: Vertex) -> Result<&PairChoices<W>, GraphError> {
        let (a, b) = (a.min(b), a.max(b));
        self.table[a * self.g.order() + b]
            .get_or_init(|| self.enumerate(a, b))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn enumerate(&self, a: Vertex, b: Vertex) -> Result<PairChoices<W>, GraphError> {
        let mut seen = HashSet::new();
        let mut sets = Vec::new();
        let mut paths = Vec::new();
        let mut union = Bits::ZERO;
        for (count, p) in Geodesics::new(self.g, a, b).enumerate() {
            if count == self.cap {
                return Err(GraphError::GeodesicOverflow { u: a, v: b, cap: self.cap });
            }
            let s = Bits::from_vertices(p.vertices().iter().copied());
            if seen.insert(s) {
                union = union.or(s);
                sets.push(s);
                paths.push(p);
            }
        }
        Ok(PairChoices { sets, paths, union })
    }

    /// Decides whether `set` (sorted, distinct, at least two vertices) is a
    /// strong geodetic set. On success returns the choice index per pair,
    /// pairs in lexicographic order.
    pub fn decide(&self, set: &[Vertex]) -> Result<Outcome, GraphError> {
        let k = set.len();
        let mut choices: Vec<&PairChoices<W>> = Vec::with_capacity(k * (k - 1) / 2);
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                choices.push(self.pair(a, b)?);
            }
        }
        let mut covered = Bits::from_vertices(set.iter().copied());
        let mut optimistic = covered;
        let mut open = Vec::new();
        for (p, pc) in choices.iter().enumerate() {
            optimistic = optimistic.or(pc.union);
            if pc.sets.len() == 1 {
                covered = covered.or(pc.sets[0]);
            } else {
                open.push(p);
            }
        }
        if optimistic != self.full {
            let missing = self.full.and_not(optimistic);
            return Ok(Outcome::Refuted(Refutation::Uncoverable(VertexSet::from_vertices(
                self.g.order(),
                missing.iter(),
            ))));
        }
        open.sort_by_key(|&p| (choices[p].sets.len(), p));
        let mut suffix = vec![Bits::ZERO; open.len() + 1];
        for d in (0..open.len()).rev() {
            suffix[d] = suffix[d + 1].or(choices[open[d]].union);
        }
        let mut search = Backtrack {
            engine: self,
            choices: &choices,
            open: &open,
            suffix: &suffix,
            chosen: vec![0; choices.len()],
            nodes: 0,
        };
        Ok(match search.run(0, covered) {
            Status::Found => Outcome::Strong(search.chosen),
            Status::Fail => Outcome::Refuted(Refutation::Exhausted { nodes: search.nodes }),
            Status::Timeout => Outcome::Timeout,
        })
    }

    pub fn certificate(&self, set: &[Vertex], chosen: &[usize]) -> Result<Certificate, SolveError> {
        let mut paths = Vec::with_capacity(chosen.len());
        let mut p = 0;
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                paths.push(self.pair(a, b)?.paths[chosen[p]].clone());
                p += 1;
            }
        }
        Ok(Certificate::new(self.g, set, paths)?)
    }
}

enum Status {
    Found,
    Fail,
    Timeout,
}

struct Backtrack<'a, 'g, const W: usize> {
    engine: &'a Engine<'g, W>,
    choices: &'a [&'a PairChoices<W>],
    open: &'a [usize],
    suffix: &'a [Bits<W>],
    chosen: Vec<usize>,
    nodes: u64,
}

const DOMINANCE_LIMIT: usize = 64;

impl<const W: usize> Backtrack<'_, '_, W> {
    fn run(&mut self, depth: usize, covered: Bits<W>) -> Status {
        let full = self.engine.full;
        if covered == full {
            for &p in &self.open[depth..] {
                self.chosen[p] = 0;
            }
            return Status::Found;
        }
        if depth == self.open.len() || covered.or(self.suffix[depth]) != full {
            return Status::Fail;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) && self.engine.timed_out() {
            return Status::Timeout;
        }

        let uncovered = full.and_not(covered);
        let missing = uncovered.count();
        let mut capacity = 0;
        for &p in &self.open[depth..] {
            capacity += self.choices[p]
                .sets
                .iter()
                .map(|s| s.and(uncovered).count())
                .max()
                .unwrap_or(0);
            if capacity >= missing {
                break;
            }
        }
        if capacity < missing {
            return Status::Fail;
        }

        let p = self.open[depth];
        let sets = &self.choices[p].sets;
        for i in 0..sets.len() {
            let new_i = sets[i].and(uncovered);
            if sets.len() <= DOMINANCE_LIMIT && dominated(sets, i, new_i, uncovered) {
                continue;
            }
            self.chosen[p] = i;
            match self.run(depth + 1, covered.or(sets[i])) {
                Status::Fail => {}
                other => return other,
            }
        }
        Status::Fail
    }
}

// Choice i is redundant if some other choice adds a strict superset of its new
// vertices, or an equal set and comes earlier.
fn dominated<const W: usize>(sets: &[Bits<W>], i: usize, new_i: Bits<W>, uncovered: Bits<W>) -> bool {
    sets.iter().enumerate().any(|(j, s)| {
        if j == i {
            return false;
        }
        let new_j = s.and(uncovered);
        new_i.is_subset(&new_j) && (new_i != new_j || j < i)
    })
}
