//! Named graph families, parsed from `name:params` strings.
//!
//! Generated graphs carry role labels (`u`, `v`, `w`, `x3`, ...) so callers
//! can refer to distinguished vertices by name.

use std::fmt;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::FamilyError;
use crate::graph::Graph;
use crate::product::cartesian_product;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, vertices `1..n`.
    Path(usize),
    /// `C_n`.
    Cycle(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_n - e`: vertices `u, v, x1..x(n-2)` with `u` and `v` non-adjacent.
    CompleteMinusEdge(usize),
    /// `K_{1,k}`: center `v` and leaves `l1..lk`.
    Star(usize),
    /// `C_{3n}` plus pendants `u ~ 1`, `v ~ n+1`, `w ~ 2n+1`.
    CyclePendant(usize),
    /// `P_{2n} □ K_2` minus the vertices `(2i, 1)`: a tree with `n + 1` leaves.
    PrismTree(usize),
    /// The convex-subgraph family on `u_i, w, x_i, y_i, v_j`.
    Convex(usize, usize),
    /// The gated-subgraph family on `x, y, v_{i,j}, x_i, y_j`.
    Gated(usize, usize),
    /// `K_{m,n}` with parts `a1..am` and `b1..bn`.
    CompleteBipartite(usize, usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::CompleteMinusEdge(_) => "complete-minus-edge",
            Family::Star(_) => "star",
            Family::CyclePendant(_) => "cycle-pendant",
            Family::PrismTree(_) => "prism-tree",
            Family::Convex(..) => "gc",
            Family::Gated(..) => "gg",
            Family::CompleteBipartite(..) => "kmn",
        }
    }

    pub fn generate(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let g = match *self {
            Family::Path(n) => labelled(n, (1..n).map(|i| (i - 1, i)), numbered(n))?,
            Family::Cycle(n) => labelled(n, (0..n).map(|i| (i, (i + 1) % n)), numbered(n))?,
            Family::Complete(n) => labelled(n, clique(0..n), numbered(n))?,
            Family::CompleteMinusEdge(n) => {
                let mut labels = vec!["u".to_string(), "v".to_string()];
                labels.extend((1..=n - 2).map(|i| format!("x{i}")));
                labelled(n, clique(0..n).filter(|&e| e != (0, 1)), labels)?
            }
            Family::Star(k) => {
                let mut labels = vec!["v".to_string()];
                labels.extend((1..=k).map(|i| format!("l{i}")));
                labelled(k + 1, (1..=k).map(|i| (0, i)), labels)?
            }
            Family::CyclePendant(n) => {
                let c = 3 * n;
                let mut labels = numbered(c);
                labels.extend(["u", "v", "w"].map(String::from));
                let edges = (0..c)
                    .map(|i| (i, (i + 1) % c))
                    .chain([(c, 0), (c + 1, n), (c + 2, 2 * n)]);
                labelled(c + 3, edges, labels)?
            }
            Family::PrismTree(n) => {
                let ladder = cartesian_product(
                    &Family::Path(2 * n).generate()?,
                    &Family::Complete(2).generate()?,
                )?;
                let mut keep = VertexSet::full(4 * n);
                for i in 1..=n {
                    keep.remove(ladder.vertex(2 * i - 1, 0));
                }
                ladder.graph().induced(&keep)?
            }
            Family::Convex(k, l) => convex_family(k, l)?,
            Family::Gated(k, l) => gated_family(k, l)?,
            Family::CompleteBipartite(m, n) => {
                let labels = (1..=m)
                    .map(|i| format!("a{i}"))
                    .chain((1..=n).map(|j| format!("b{j}")))
                    .collect();
                let edges = (0..m).flat_map(|i| (0..n).map(move |j| (i, m + j)));
                labelled(m + n, edges, labels)?
            }
        };
        Ok(g)
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let fail = |constraint: &str| {
            Err(FamilyError::Parameter {
                family: self.to_string(),
                constraint: constraint.to_string(),
            })
        };
        match *self {
            Family::Path(n) | Family::Complete(n) if n < 1 => fail("needs n >= 1"),
            Family::Cycle(n) if n < 3 => fail("needs n >= 3"),
            Family::CompleteMinusEdge(n) if n < 3 => fail("needs n >= 3 (K_2 - e is disconnected)"),
            Family::Star(k) if k < 1 => fail("needs k >= 1"),
            Family::CyclePendant(n) if n < 3 => fail("needs n >= 3"),
            Family::PrismTree(n) if n < 1 => fail("needs n >= 1"),
            Family::Convex(k, l) | Family::Gated(k, l) if k < 1 || l < 1 => {
                fail("needs k >= 1 and l >= 1")
            }
            Family::CompleteBipartite(m, n) if m < 1 || n < 1 || m + n < 2 => {
                fail("needs m >= 1 and n >= 1")
            }
            _ => Ok(()),
        }
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn clique(r: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> + Clone {
    let end = r.end;
    r.flat_map(move |i| (i + 1..end).map(move |j| (i, j)))
}

fn labelled<I>(n: usize, edges: I, labels: Vec<String>) -> Result<Graph, FamilyError>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Ok(Graph::from_edges(n, edges)?.with_labels(labels)?)
}

// vertex order: u1..uk, w, x1, y1, ..., x(kl), y(kl), v1..vl
fn convex_family(k: usize, l: usize) -> Result<Graph, FamilyError> {
    let kl = k * l;
    let w = k;
    let x = |i: usize| k + 1 + 2 * i;
    let y = |i: usize| k + 2 + 2 * i;
    let v = |j: usize| k + 1 + 2 * kl + j;
    let n = k + 1 + 2 * kl + l;
    let mut labels: Vec<String> = (1..=k).map(|i| format!("u{i}")).collect();
    labels.push("w".into());
    for i in 1..=kl {
        labels.push(format!("x{i}"));
        labels.push(format!("y{i}"));
    }
    labels.extend((1..=l).map(|j| format!("v{j}")));
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (w, i)).collect();
    for i in 0..kl {
        edges.push((w, x(i)));
        edges.push((x(i), y(i)));
        for j in 0..l {
            edges.push((y(i), v(j)));
        }
    }
    labelled(n, edges, labels)
}

// vertex order: x, y, v(1,1)..v(k,l), x1..xk, y1..yl
fn gated_family(k: usize, l: usize) -> Result<Graph, FamilyError> {
    let (hx, hy) = (0, 1);
    let mid = |i: usize, j: usize| 2 + i * l + j;
    let xi = |i: usize| 2 + k * l + i;
    let yj = |j: usize| 2 + k * l + k + j;
    let n = 2 + k * l + k + l;
    let mut labels = vec!["x".to_string(), "y".to_string()];
    for i in 1..=k {
        for j in 1..=l {
            labels.push(format!("v{i},{j}"));
        }
    }
    labels.extend((1..=k).map(|i| format!("x{i}")));
    labels.extend((1..=l).map(|j| format!("y{j}")));
    let mut edges = Vec::new();
    edges.extend((0..k).map(|i| (hx, xi(i))));
    edges.extend((0..l).map(|j| (hy, yj(j))));
    for i in 0..k {
        for j in 0..l {
            edges.push((hx, mid(i, j)));
            edges.push((mid(i, j), hy));
        }
    }
    labelled(n, edges, labels)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::CompleteMinusEdge(n)
            | Family::Star(n)
            | Family::CyclePendant(n)
            | Family::PrismTree(n) => write!(f, "{}:{n}", self.name()),
            Family::Convex(a, b) | Family::Gated(a, b) | Family::CompleteBipartite(a, b) => {
                write!(f, "{}:{a},{b}", self.name())
            }
        }
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::Malformed(s.to_string()))?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| FamilyError::Malformed(s.to_string()))?;
        let one = || match nums.as_slice() {
            [a] => Ok(*a),
            _ => Err(FamilyError::Malformed(s.to_string())),
        };
        let two = || match nums.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(FamilyError::Malformed(s.to_string())),
        };
        Ok(match name.trim() {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "complete-minus-edge" => Family::CompleteMinusEdge(one()?),
            "star" => Family::Star(one()?),
            "cycle-pendant" => Family::CyclePendant(one()?),
            "prism-tree" => Family::PrismTree(one()?),
            "gc" => {
                let (k, l) = two()?;
                Family::Convex(k, l)
            }
            "gg" => {
                let (k, l) = two()?;
                Family::Gated(k, l)
            }
            "kmn" => {
                let (m, n) = two()?;
                Family::CompleteBipartite(m, n)
            }
            other => return Err(FamilyError::Unknown(other.to_string())),
        })
    }
}

/// Parses and generates in one step.
pub fn generate(spec: &str) -> Result<Graph, FamilyError> {
    spec.parse::<Family>()?.generate()
}
