//! Exact strong geodetic numbers.
//!
//! [`check_strong_geodetic`] decides a single set; [`strong_geodetic_number`]
//! searches sizes upward from [`lower_bound`], enumerating only sets that
//! contain every simplicial vertex. Candidate sets of one size are decided in
//! parallel, and the lexicographically first success wins, so results do not
//! depend on the number of worker threads.

mod bits;
mod engine;

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use self::bits::Bits;
use self::engine::{Engine, Outcome};
use crate::bitset::VertexSet;
use crate::certificate::Certificate;
use crate::error::{CertificateError, GraphError, SolveError};
use crate::geodesic::DEFAULT_GEODESIC_CAP;
use crate::graph::{Graph, Vertex};
use crate::product::ProductGraph;

/// Largest graph the solver accepts.
pub const MAX_SOLVER_ORDER: usize = 512;

const BATCH: usize = 2048;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Per-pair geodesic cap; exceeding it is an error.
    pub geodesic_cap: usize,
    /// Vertices every candidate set must contain, on top of the simplicial ones.
    pub forced: Vec<Vertex>,
    /// Sizes the search skips. Only sound when the caller knows no strong
    /// geodetic set of these sizes exists.
    pub excluded_sizes: Option<RangeInclusive<usize>>,
    /// Wall-clock budget for one call.
    pub time_budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            geodesic_cap: DEFAULT_GEODESIC_CAP,
            forced: Vec::new(),
            excluded_sizes: None,
            time_budget: None,
        }
    }
}

impl SolveOptions {
    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }

    fn deadline(&self) -> Option<Instant> {
        self.time_budget.map(|d| Instant::now() + d)
    }
}

/// Why a set is not a strong geodetic set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// These vertices lie on no geodesic between members of the set.
    Uncoverable(VertexSet),
    /// Every combination of per-pair geodesic choices was ruled out.
    Exhausted { nodes: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Strong(Certificate),
    NotStrong(Refutation),
    /// The time budget ran out before the search finished.
    Indeterminate,
}

impl Decision {
    pub fn is_strong(&self) -> bool {
        matches!(self, Decision::Strong(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SgOutcome {
    Exact { value: usize, certificate: Certificate },
    /// Budget exhausted: every size below `lower` was refuted, `upper` is
    /// known to be attainable.
    Bounded { lower: usize, upper: usize },
}

impl SgOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            SgOutcome::Exact { value, .. } => Some(*value),
            SgOutcome::Bounded { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SgOutcome::Exact { certificate, .. } => Some(certificate),
            SgOutcome::Bounded { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetSearch {
    Found(Certificate),
    NoneOfSize,
    Indeterminate,
}

macro_rules! by_width {
    ($n:expr, $f:ident($($arg:expr),*)) => {
        match $n {
            0..=64 => $f::<1>($($arg),*),
            65..=128 => $f::<2>($($arg),*),
            129..=256 => $f::<4>($($arg),*),
            257..=512 => $f::<8>($($arg),*),
            n => Err(GraphError::TooLarge { n, limit: MAX_SOLVER_ORDER }.into()),
        }
    };
}

/// The counting bound: the least `k` with `k + C(k,2)(diam - 1) >= n`, raised
/// to the number of simplicial vertices and to 2 when `n >= 2`.
pub fn lower_bound(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 {
        return 1;
    }
    let interior = g.diameter() - 1;
    let mut k = 2;
    while k + k * (k - 1) / 2 * interior < n {
        k += 1;
    }
    k.max(g.simplicial_vertices().len())
}

/// Number of leaves of a tree (1 for `K_1`).
pub fn sg_tree(g: &Graph) -> Result<usize, GraphError> {
    if !g.is_tree() {
        return Err(GraphError::NotATree);
    }
    Ok(match g.order() {
        1 => 1,
        _ => g.vertices().filter(|&v| g.degree(v) == 1).count(),
    })
}

fn validate_set(g: &Graph, set: &[Vertex]) -> Result<Vec<Vertex>, SolveError> {
    let n = g.order();
    let mut s = VertexSet::new(n);
    for &v in set {
        if v >= n {
            return Err(SolveError::VertexOutOfRange { vertex: v, n });
        }
        if !s.insert(v) {
            return Err(CertificateError::DuplicateVertex(v).into());
        }
    }
    let min = if n == 1 { 1 } else { 2 };
    if set.len() < min {
        return Err(SolveError::SetTooSmall { min, got: set.len() });
    }
    Ok(s.to_vec())
}

/// Decides whether `set` is a strong geodetic set of `g`.
pub fn check_strong_geodetic(g: &Graph, set: &[Vertex], opts: &SolveOptions) -> Result<Decision, SolveError> {
    let sorted = validate_set(g, set)?;
    if g.order() == 1 {
        return Ok(Decision::Strong(Certificate::new(g, &sorted, vec![])?));
    }
    by_width!(g.order(), decide_with(g, &sorted, opts))
}

fn decide_with<const W: usize>(g: &Graph, set: &[Vertex], opts: &SolveOptions) -> Result<Decision, SolveError> {
    let engine = Engine::<W>::new(g, opts.geodesic_cap, opts.deadline());
    Ok(match engine.decide(set)? {
        Outcome::Strong(chosen) => Decision::Strong(engine.certificate(set, &chosen)?),
        Outcome::Refuted(r) => Decision::NotStrong(r),
        Outcome::Timeout => Decision::Indeterminate,
    })
}

/// Candidate-set constraints: members that are always present, the vertices
/// the rest is drawn from, and families of disjoint vertex sets that every
/// candidate must hit.
struct Space {
    forced: Vec<Vertex>,
    free: Vec<Vertex>,
    hitting: Vec<Vec<VertexSet>>,
}

impl Space {
    fn new(g: &Graph, opts: &SolveOptions) -> Result<Space, SolveError> {
        let n = g.order();
        let mut forced = g.simplicial_vertices();
        for &v in &opts.forced {
            if v >= n {
                return Err(SolveError::VertexOutOfRange { vertex: v, n });
            }
            forced.insert(v);
        }
        Ok(Space {
            free: forced.complement().to_vec(),
            forced: forced.to_vec(),
            hitting: Vec::new(),
        })
    }

    fn min_size(&self) -> usize {
        self.hitting
            .iter()
            .map(Vec::len)
            .chain([self.forced.len()])
            .max()
            .unwrap_or(0)
    }
}

/// `sg(g)` with a certificate, or a verified interval when the budget runs out.
pub fn strong_geodetic_number(g: &Graph, opts: &SolveOptions) -> Result<SgOutcome, SolveError> {
    let space = Space::new(g, opts)?;
    minimum(g, space, opts)
}

/// Same value as [`strong_geodetic_number`] on `pg.graph()`, restricting the
/// search to sets meeting the layer `^vH` of every simplicial vertex `v` of
/// the left factor and the layer `G^w` of every simplicial `w` of the right
/// factor.
pub fn sg_product_with_layer_pruning(pg: &ProductGraph, opts: &SolveOptions) -> Result<SgOutcome, SolveError> {
    let mut space = Space::new(pg.graph(), opts)?;
    space.hitting = vec![
        pg.left().simplicial_vertices().iter().map(|v| pg.right_layer(v)).collect(),
        pg.right().simplicial_vertices().iter().map(|w| pg.left_layer(w)).collect(),
    ];
    minimum(pg.graph(), space, opts)
}

fn minimum(g: &Graph, space: Space, opts: &SolveOptions) -> Result<SgOutcome, SolveError> {
    let n = g.order();
    if n == 1 {
        let certificate = Certificate::new(g, &[0], vec![])?;
        return Ok(SgOutcome::Exact { value: 1, certificate });
    }
    by_width!(n, minimum_with(g, &space, opts))
}

fn minimum_with<const W: usize>(g: &Graph, space: &Space, opts: &SolveOptions) -> Result<SgOutcome, SolveError> {
    let n = g.order();
    let engine = Engine::<W>::new(g, opts.geodesic_cap, opts.deadline());
    let start = lower_bound(g).max(space.min_size());
    for k in start..=n {
        if opts.excluded_sizes.as_ref().is_some_and(|r| r.contains(&k)) {
            continue;
        }
        match first_of_size(&engine, space, k, &|_| true)? {
            SetSearch::Found(certificate) => return Ok(SgOutcome::Exact { value: k, certificate }),
            SetSearch::NoneOfSize => {}
            SetSearch::Indeterminate => return Ok(SgOutcome::Bounded { lower: k, upper: n }),
        }
    }
    // only reachable when the caller excluded n itself
    Ok(SgOutcome::Bounded { lower: start, upper: n })
}

/// The lexicographically first strong geodetic set of size `k` (containing
/// all simplicial vertices and `opts.forced`) accepted by `filter`.
pub fn find_strong_geodetic_set(
    g: &Graph,
    k: usize,
    filter: &(dyn Fn(&[Vertex]) -> bool + Sync),
    opts: &SolveOptions,
) -> Result<SetSearch, SolveError> {
    let space = Space::new(g, opts)?;
    if g.order() == 1 {
        if k == 1 && filter(&[0]) {
            return Ok(SetSearch::Found(Certificate::new(g, &[0], vec![])?));
        }
        return Ok(SetSearch::NoneOfSize);
    }
    if k < 2 {
        return Ok(SetSearch::NoneOfSize);
    }
    by_width!(g.order(), find_with(g, &space, k, filter, opts))
}

fn find_with<const W: usize>(
    g: &Graph,
    space: &Space,
    k: usize,
    filter: &(dyn Fn(&[Vertex]) -> bool + Sync),
    opts: &SolveOptions,
) -> Result<SetSearch, SolveError> {
    let engine = Engine::<W>::new(g, opts.geodesic_cap, opts.deadline());
    first_of_size(&engine, space, k, filter)
}

enum Stop {
    Timeout,
    Failed(GraphError),
}

fn first_of_size<const W: usize>(
    engine: &Engine<'_, W>,
    space: &Space,
    k: usize,
    filter: &(dyn Fn(&[Vertex]) -> bool + Sync),
) -> Result<SetSearch, SolveError> {
    let Some(r) = k.checked_sub(space.forced.len()) else {
        return Ok(SetSearch::NoneOfSize);
    };
    if r > space.free.len() {
        return Ok(SetSearch::NoneOfSize);
    }
    let hitting: Vec<Vec<Bits<W>>> = space
        .hitting
        .iter()
        .map(|fam| fam.iter().map(|s| Bits::from_vertices(s.iter())).collect())
        .collect();
    if hitting.iter().any(|fam| fam.len() > k) {
        return Ok(SetSearch::NoneOfSize);
    }

    let mut combos = Combinations::new(space.free.len(), r);
    let mut batch: Vec<Vec<Vertex>> = Vec::with_capacity(BATCH);
    loop {
        if engine.timed_out() {
            return Ok(SetSearch::Indeterminate);
        }
        batch.clear();
        while batch.len() < BATCH {
            let Some(idx) = combos.next_combo() else { break };
            let mut set: Vec<Vertex> = space.forced.clone();
            set.extend(idx.iter().map(|&i| space.free[i]));
            set.sort_unstable();
            let bits = Bits::<W>::from_vertices(set.iter().copied());
            let hits_all = hitting
                .iter()
                .all(|fam| fam.iter().all(|layer| layer.intersects(&bits)));
            if hits_all && filter(&set) {
                batch.push(set);
            }
        }
        if batch.is_empty() {
            return Ok(SetSearch::NoneOfSize);
        }
        let hit = batch.par_iter().enumerate().find_map_first(|(i, set)| match engine.decide(set) {
            Ok(Outcome::Strong(chosen)) => Some(Ok((i, chosen))),
            Ok(Outcome::Refuted(_)) => None,
            Ok(Outcome::Timeout) => Some(Err(Stop::Timeout)),
            Err(e) => Some(Err(Stop::Failed(e))),
        });
        match hit {
            Some(Ok((i, chosen))) => {
                return Ok(SetSearch::Found(engine.certificate(&batch[i], &chosen)?));
            }
            Some(Err(Stop::Timeout)) => return Ok(SetSearch::Indeterminate),
            Some(Err(Stop::Failed(e))) => return Err(e.into()),
            None => {}
        }
    }
}

/// Lexicographic `r`-subsets of `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, r: usize) -> Self {
        Combinations {
            n,
            idx: (0..r).collect(),
            started: false,
            done: r > n,
        }
    }

    fn next_combo(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let r = self.idx.len();
        let mut i = r;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.n - r + i {
                self.idx[i] += 1;
                for j in i + 1..r {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        self.done = true;
        None
    }
}
