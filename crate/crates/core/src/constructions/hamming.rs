use super::walk;
use crate::certificate::{Assignment, Certificate};
use crate::error::ConstructionError;
use crate::family::Family;
use crate::graph::Vertex;
use crate::product::{cartesian_product, ProductGraph};

/// The claimed closed form for `sg(K_m □ K_n)`: `2n − 1` if `m = n`, `2n` if
/// `n < m < 2n`, `m` if `m >= 2n`. Arguments are swapped when `m < n`.
pub fn sg_formula_kmkn(m: usize, n: usize) -> usize {
    let (m, n) = (m.max(n), m.min(n));
    if m == n {
        2 * n - 1
    } else if m < 2 * n {
        2 * n
    } else {
        m
    }
}

type Cell = (usize, usize);

// One-based cell coordinates, column `i` in K_m and row `j` in K_n.
struct Grid {
    pg: ProductGraph,
}

impl Grid {
    fn at(&self, (i, j): Cell) -> Vertex {
        self.pg.vertex(i - 1, j - 1)
    }

    fn via(&self, a: &mut Assignment<'_>, x: Cell, corner: Cell, y: Cell) -> Result<(), ConstructionError> {
        let shift = |(i, j): Cell| (i - 1, j - 1);
        a.fix(walk(&self.pg, [shift(x), shift(corner), shift(y)]))?;
        Ok(())
    }
}

/// The set of size [`sg_formula_kmkn`] from the three-case construction on
/// diagonals, with the pairs routed through the corners that cover the
/// intended regions.
pub fn construct_thm33(m: usize, n: usize) -> Result<(ProductGraph, Certificate), ConstructionError> {
    let (m, n) = (m.max(n), m.min(n));
    if n < 2 {
        return Err(ConstructionError::NotApplicable(format!("needs both factors of order >= 2, got {m} and {n}")));
    }
    let km = Family::Complete(m).generate().map_err(|e| ConstructionError::NotApplicable(e.to_string()))?;
    let kn = Family::Complete(n).generate().map_err(|e| ConstructionError::NotApplicable(e.to_string()))?;
    let grid = Grid { pg: cartesian_product(&km, &kn)? };
    let cells = grid_cells(m, n);
    let mut a = Assignment::new(grid.pg.graph(), cells.iter().map(|&c| grid.at(c)));

    if m == n {
        for a_ in 1..=n {
            for b in a_ + 1..=n {
                grid.via(&mut a, (a_, a_), (b, a_), (b, b))?;
            }
        }
        for a_ in 1..n {
            for b in a_ + 1..n {
                grid.via(&mut a, (a_, a_ + 1), (a_, b + 1), (b, b + 1))?;
            }
        }
    } else if m < 2 * n {
        let d = m - n;
        for a_ in 1..=n {
            for b in a_ + 1..=n {
                grid.via(&mut a, (a_, a_), (a_, b), (b, b))?;
            }
        }
        for a_ in 1..=d {
            for b in a_ + 1..=d {
                grid.via(&mut a, (n + a_, a_), (n + a_, b), (n + b, b))?;
            }
        }
        for a_ in 1..=n {
            for b in 1..=d {
                let corner = if a_ <= d && a_ > b { (a_, b) } else { (n + b, a_) };
                if a_ != b {
                    grid.via(&mut a, (a_, a_), corner, (n + b, b))?;
                }
            }
        }
        for v in d + 1..=n {
            for i in 2..=n {
                if i != v {
                    grid.via(&mut a, (v, 1), (v, i), (i, i))?;
                }
            }
        }
    } else {
        let d = m - n;
        for a_ in 1..=n {
            for b in a_ + 1..=n {
                grid.via(&mut a, (a_, a_), (b, a_), (b, b))?;
                grid.via(&mut a, (d + a_, a_), (d + b, a_), (d + b, b))?;
            }
        }
        for a_ in 1..=n {
            for b in 1..=n {
                if a_ < b {
                    grid.via(&mut a, (a_, a_), (a_, b), (d + b, b))?;
                } else if a_ > b {
                    grid.via(&mut a, (a_, a_), (d + b, a_), (d + b, b))?;
                }
            }
        }
        for v in n + 1..=d {
            for i in 2..=n {
                grid.via(&mut a, (v, 1), (v, i), (i, i))?;
            }
        }
    }
    let cert = a.finish()?;
    Ok((grid.pg, cert))
}

// The cells of the set, one-based.
fn grid_cells(m: usize, n: usize) -> Vec<Cell> {
    let diag = (1..=n).map(|i| (i, i));
    if m == n {
        diag.chain((1..n).map(|i| (i, i + 1))).collect()
    } else if m < 2 * n {
        diag.chain((1..=m - n).map(|i| (n + i, i)))
            .chain((m - n + 1..=n).map(|i| (i, 1)))
            .collect()
    } else {
        diag.chain((n + 1..=m - n).map(|i| (i, 1)))
            .chain((1..=n).map(|i| (m - n + i, i)))
            .collect()
    }
}

/// ASCII picture of a vertex set of `K_m □ K_n`: one text row per vertex of
/// `K_n` (the last one on top), `#` for members and `.` otherwise.
pub fn render_grid(m: usize, n: usize, set: &[Vertex]) -> String {
    let mut out = String::new();
    for j in (0..n).rev() {
        let row: Vec<&str> = (0..m)
            .map(|i| if set.contains(&(i * n + j)) { "#" } else { "." })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
