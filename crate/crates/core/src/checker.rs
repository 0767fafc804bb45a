//! Stand-alone certificate checker.
//!
//! Works purely from the serialized form: it rebuilds adjacency from the
//! edge list, recomputes distances by its own BFS and recomputes coverage.
//! It shares no code with the solver or [`Certificate::new`](crate::Certificate::new).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::certificate::CertificateJson;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure(pub String);

impl std::fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailure {}

fn fail<T>(msg: impl Into<String>) -> Result<T, CheckFailure> {
    Err(CheckFailure(msg.into()))
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<Option<usize>> {
    let mut d = vec![None; adj.len()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        let dx = d[x].unwrap();
        for &y in &adj[x] {
            if d[y].is_none() {
                d[y] = Some(dx + 1);
                q.push_back(y);
            }
        }
    }
    d
}

/// Accepts iff `cert` proves that its set `S` is a strong geodetic set of
/// the graph `(n, edges)`.
pub fn check(cert: &CertificateJson) -> Result<(), CheckFailure> {
    let n = cert.n;
    let mut adj = vec![Vec::new(); n];
    let mut edge_set = HashSet::new();
    for &[u, v] in &cert.edges {
        if u >= n || v >= n || u == v {
            return fail(format!("bad edge {u}-{v}"));
        }
        adj[u].push(v);
        adj[v].push(u);
        edge_set.insert((u.min(v), u.max(v)));
    }

    let members: HashSet<usize> = cert.s.iter().copied().collect();
    if members.len() != cert.s.len() || cert.s.is_empty() {
        return fail("set is empty or has repeated vertices");
    }
    if let Some(v) = cert.s.iter().find(|&&v| v >= n) {
        return fail(format!("set vertex {v} out of range"));
    }

    let mut seen: HashMap<(usize, usize), ()> = HashMap::new();
    let mut covered = vec![false; n];
    for &v in &cert.s {
        covered[v] = true;
    }
    let mut dist_cache: HashMap<usize, Vec<Option<usize>>> = HashMap::new();
    for p in &cert.pairs {
        let key = (p.a.min(p.b), p.a.max(p.b));
        if key.0 == key.1 || !members.contains(&p.a) || !members.contains(&p.b) {
            return fail(format!("pair {}-{} not a pair of S", p.a, p.b));
        }
        if seen.insert(key, ()).is_some() {
            return fail(format!("pair {}-{} listed twice", p.a, p.b));
        }
        if p.path.first() != Some(&p.a) || p.path.last() != Some(&p.b) {
            return fail(format!("path of pair {}-{} has wrong endpoints", p.a, p.b));
        }
        for w in p.path.windows(2) {
            if !edge_set.contains(&(w[0].min(w[1]), w[0].max(w[1]))) {
                return fail(format!("{}-{} is not an edge", w[0], w[1]));
            }
        }
        let d = dist_cache.entry(p.a).or_insert_with(|| bfs(&adj, p.a));
        if d[p.b] != Some(p.path.len() - 1) {
            return fail(format!("path of pair {}-{} is not shortest", p.a, p.b));
        }
        for &v in &p.path {
            covered[v] = true;
        }
    }
    let k = cert.s.len();
    if seen.len() != k * (k - 1) / 2 {
        return fail(format!("{} pairs listed, {} expected", seen.len(), k * (k - 1) / 2));
    }
    let all = covered.iter().all(|&c| c);
    if all != cert.covered {
        return fail("`covered` flag disagrees with recomputed coverage");
    }
    if !all {
        return fail("not every vertex is covered");
    }
    Ok(())
}
