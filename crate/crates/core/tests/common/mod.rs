//! Independent oracles. Nothing here calls into the library's algorithms:
//! distances, geodesics and coverage are recomputed from a plain edge list.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::Rng;
use strong_geodetic::Graph;

pub type Edges = Vec<(usize, usize)>;

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    adj
}

pub fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if d[y] == usize::MAX {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    d
}

pub fn connected(adj: &[Vec<usize>]) -> bool {
    adj.is_empty() || bfs(adj, 0).iter().all(|&d| d != usize::MAX)
}

/// Number of shortest `u,v`-paths by dynamic programming over BFS levels.
pub fn geodesic_count(adj: &[Vec<usize>], u: usize, v: usize) -> u64 {
    let d = bfs(adj, u);
    let mut order: Vec<usize> = (0..adj.len()).filter(|&x| d[x] != usize::MAX).collect();
    order.sort_by_key(|&x| d[x]);
    let mut count = vec![0u64; adj.len()];
    count[u] = 1;
    for &x in &order {
        for &y in &adj[x] {
            if d[y] == d[x] + 1 {
                count[y] += count[x];
            }
        }
    }
    count[v]
}

/// Vertex sets (as bit masks) of all `u,v`-geodesics, by DFS toward `v`.
pub fn geodesic_masks(adj: &[Vec<usize>], dist: &[Vec<usize>], u: usize, v: usize) -> Vec<u128> {
    fn go(adj: &[Vec<usize>], dist: &[Vec<usize>], x: usize, v: usize, mask: u128, out: &mut Vec<u128>) {
        if x == v {
            out.push(mask);
            return;
        }
        for &y in &adj[x] {
            if dist[y][v] + 1 == dist[x][v] {
                go(adj, dist, y, v, mask | 1 << y, out);
            }
        }
    }
    let mut out = Vec::new();
    go(adj, dist, u, v, 1 << u, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

pub struct Oracle {
    n: usize,
    masks: Vec<Vec<Vec<u128>>>,
}

impl Oracle {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Oracle {
        assert!(n <= 128);
        let adj = adjacency(n, edges);
        let dist: Vec<Vec<usize>> = (0..n).map(|s| bfs(&adj, s)).collect();
        let masks = (0..n)
            .map(|u| (0..n).map(|v| if u < v { geodesic_masks(&adj, &dist, u, v) } else { Vec::new() }).collect())
            .collect();
        Oracle { n, masks }
    }

    pub fn from_graph(g: &Graph) -> Oracle {
        Oracle::new(g.order(), &g.edges())
    }

    fn full(&self) -> u128 {
        if self.n == 128 { u128::MAX } else { (1u128 << self.n) - 1 }
    }

    /// Exhaustive: does some choice of one geodesic per pair cover everything?
    pub fn is_strong(&self, set: &[usize]) -> bool {
        let full = self.full();
        let base = set.iter().fold(0u128, |m, &v| m | 1 << v);
        if set.len() == 1 {
            return base == full;
        }
        let mut pairs: Vec<&Vec<u128>> = Vec::new();
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                pairs.push(&self.masks[a.min(b)][a.max(b)]);
            }
        }
        pairs.sort_by_key(|p| p.len());
        let mut suffix = vec![0u128; pairs.len() + 1];
        for i in (0..pairs.len()).rev() {
            suffix[i] = suffix[i + 1] | pairs[i].iter().fold(0, |m, p| m | p);
        }
        fn go(pairs: &[&Vec<u128>], suffix: &[u128], i: usize, covered: u128, full: u128) -> bool {
            if covered == full {
                return true;
            }
            if i == pairs.len() || covered | suffix[i] != full {
                return false;
            }
            pairs[i].iter().any(|&p| go(pairs, suffix, i + 1, covered | p, full))
        }
        go(&pairs, &suffix, 0, base, full)
    }

    /// Smallest k with a strong geodetic k-set, by trying every subset.
    pub fn sg(&self) -> usize {
        (1..=self.n).find(|&k| self.has_set_of_size(k)).expect("V is always strong geodetic")
    }

    pub fn has_set_of_size(&self, k: usize) -> bool {
        let mut found = false;
        combinations(self.n, k, &mut |s| {
            found = self.is_strong(s);
            found
        });
        found
    }
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order until it returns true.
pub fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if go(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Smallest sorted edge list over all relabellings (n <= 7).
pub fn canonical(n: usize, edges: &[(usize, usize)]) -> Edges {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Edges> = None;
    loop {
        let mut e: Edges = edges
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        e.sort_unstable();
        if best.as_ref().is_none_or(|b| e < *b) {
            best = Some(e);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Random connected graph on `n` vertices: a random tree plus extra edges.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> (usize, Edges) {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.insert((a, b));
            }
        }
    }
    (n, edges.into_iter().collect())
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("valid graph")
}

/// Cartesian product by definition: `(g, h)` is `g * nh + h`.
pub fn product_edges(ng: usize, eg: &[(usize, usize)], nh: usize, eh: &[(usize, usize)]) -> (usize, Edges) {
    let mut out = Vec::new();
    for &(a, b) in eg {
        for h in 0..nh {
            out.push((a * nh + h, b * nh + h));
        }
    }
    for g in 0..ng {
        for &(a, b) in eh {
            out.push((g * nh + a, g * nh + b));
        }
    }
    (ng * nh, out)
}

pub fn complete(n: usize) -> Edges {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

pub fn all_distances(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(n, edges);
    (0..n).map(|s| bfs(&adj, s)).collect()
}

/// Closed under geodesics between its own vertices.
pub fn convex(d: &[Vec<usize>], set: &[usize]) -> bool {
    set.iter().all(|&u| {
        set.iter().all(|&v| (0..d.len()).all(|w| d[u][w] + d[w][v] != d[u][v] || set.contains(&w)))
    })
}

/// Every vertex has a gate in `set` lying on a geodesic to each member of `set`.
pub fn gated(d: &[Vec<usize>], set: &[usize]) -> bool {
    (0..d.len()).all(|x| set.iter().any(|&g| set.iter().all(|&y| d[x][y] == d[x][g] + d[g][y])))
}
