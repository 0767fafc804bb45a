use super::{fixed, walk};
use crate::certificate::{Assignment, Certificate};
use crate::error::ConstructionError;
use crate::family::Family;
use crate::graph::{Graph, Vertex};
use crate::product::{cartesian_product, ProductGraph};
use crate::solver::{check_strong_geodetic, sg_product_with_layer_pruning, Decision, SgOutcome, SolveOptions};

fn family(f: Family) -> Result<Graph, ConstructionError> {
    f.generate().map_err(|e| ConstructionError::NotApplicable(e.to_string()))
}

/// `(K_n − e) □ K_2` with a set of size `n − 1`, for `n >= 5`.
///
/// Layer `0` of `K_2` is the first copy. The four corners `(u,·), (v,·)` cover
/// `x1, x2, x3` in both copies; every further `x_i` gets `(x_i, 1)` with the
/// geodesic `(x_i, 1) ∼ (x_i, 2) ∼ (u, 2)`.
pub fn construct_thm31i(n: usize) -> Result<(ProductGraph, Certificate), ConstructionError> {
    if n < 5 {
        return Err(ConstructionError::NotApplicable(format!("needs n >= 5, got {n}")));
    }
    let g = family(Family::CompleteMinusEdge(n))?;
    let pg = cartesian_product(&g, &family(Family::Complete(2))?)?;
    let (u, v) = (0, 1);
    let x = |i: usize| i + 1;
    let corners = [(u, 0), (u, 1), (v, 0), (v, 1)];
    let extra = (4..=n - 2).map(|i| (x(i), 0));
    let mut a = Assignment::new(pg.graph(), corners.into_iter().chain(extra).map(|(p, q)| pg.vertex(p, q)));
    a.fix(walk(&pg, [(u, 0), (x(1), 0), (v, 0)]))?;
    a.fix(walk(&pg, [(u, 1), (x(1), 1), (v, 1)]))?;
    a.fix(walk(&pg, [(u, 0), (x(2), 0), (x(2), 1), (v, 1)]))?;
    a.fix(walk(&pg, [(u, 1), (x(3), 1), (x(3), 0), (v, 0)]))?;
    for i in 4..=n - 2 {
        a.fix(walk(&pg, [(x(i), 0), (x(i), 1), (u, 1)]))?;
    }
    let cert = a.finish()?;
    Ok((pg, cert))
}

/// `G □ K_2` with a set of size `sg(G)` when the simplicial vertices of `G`
/// number at least four and form a strong geodetic set.
///
/// The simplicial set is split as `l_1..l_{k−2}, r_1, r_2` (the last two in
/// vertex order are `r_1, r_2`); `T` puts the `l_i` in the second copy and
/// `r_1, r_2` in the first.
pub fn construct_thm31ii(g: &Graph, opts: &SolveOptions) -> Result<(ProductGraph, Certificate), ConstructionError> {
    let simp = g.simplicial_vertices().to_vec();
    let k = simp.len();
    if k < 4 {
        return Err(ConstructionError::NotApplicable(format!(
            "needs at least 4 simplicial vertices, found {k}"
        )));
    }
    let cert = match check_strong_geodetic(g, &simp, opts)? {
        Decision::Strong(c) => c,
        Decision::NotStrong(_) => {
            return Err(ConstructionError::NotApplicable(
                "the simplicial vertices do not form a strong geodetic set".into(),
            ))
        }
        Decision::Indeterminate => return Err(ConstructionError::Budget),
    };
    let pg = cartesian_product(g, &family(Family::Complete(2))?)?;
    let (ls, r) = (&simp[..k - 2], [simp[k - 2], simp[k - 1]]);
    let members = ls.iter().map(|&l| (l, 1)).chain(r.iter().map(|&x| (x, 0)));
    let mut a = Assignment::new(pg.graph(), members.map(|(p, q)| pg.vertex(p, q)));
    for (i, &l) in ls.iter().enumerate() {
        let e = r[i.min(1)];
        let coords = fixed(&cert, l, e).into_iter().map(|x| (x, 1)).chain([(e, 0)]);
        a.fix(walk(&pg, coords))?;
        let f = if i == 0 { r[1] } else { r[0] };
        let coords = [(l, 1)].into_iter().chain(fixed(&cert, l, f).into_iter().map(|x| (x, 0)));
        a.fix(walk(&pg, coords))?;
    }
    let out = a.finish()?;
    Ok((pg, out))
}

fn star_path(k: usize, l: usize) -> Result<ProductGraph, ConstructionError> {
    Ok(cartesian_product(&family(Family::Star(k))?, &family(Family::Path(l))?)?)
}

/// `K_{1,k} □ P_l` with a set of size `k`, for `k >= 5` and `l >= 1`.
///
/// Star vertex `0` is the center `v`, leaves `1..=k`; the last two leaves are
/// `r_1, r_2`. The leaves `l_i` sit at the far end of the path, `r_1, r_2` at
/// its start.
pub fn construct_prop32(k: usize, l: usize) -> Result<(ProductGraph, Certificate), ConstructionError> {
    if k < 5 || l < 1 {
        return Err(ConstructionError::NotApplicable(format!("needs k >= 5 and l >= 1, got k = {k}, l = {l}")));
    }
    let pg = star_path(k, l)?;
    let (v, top) = (0, l - 1);
    let leaves: Vec<Vertex> = (1..=k - 2).collect();
    let r = [k - 1, k];
    let members = leaves.iter().map(|&x| (x, top)).chain(r.iter().map(|&x| (x, 0)));
    let mut a = Assignment::new(pg.graph(), members.map(|(p, q)| pg.vertex(p, q)));
    for (i, &li) in leaves.iter().enumerate() {
        if i < 2 {
            let ri = r[i];
            let coords = [(li, top), (v, top)].into_iter().chain((0..=top).rev().map(|y| (ri, y)));
            a.fix(walk(&pg, coords))?;
        } else {
            let coords = [(li, top)]
                .into_iter()
                .chain((0..=top).rev().map(|y| (v, y)))
                .chain([(r[1], 0)]);
            a.fix(walk(&pg, coords))?;
        }
        let rf = if i == 0 { r[1] } else { r[0] };
        let coords = (0..=top).rev().map(|y| (li, y)).chain([(v, 0), (rf, 0)]);
        a.fix(walk(&pg, coords))?;
    }
    let cert = a.finish()?;
    Ok((pg, cert))
}

/// The `k = 4` exception: exact value from the solver, and a certificate for
/// `{(l_1, l), (l_2, l), (r_1, 1), (r_2, 1), (v, 1)}`.
#[derive(Clone, Debug)]
pub struct Prop32K4 {
    pub product: ProductGraph,
    pub exact: SgOutcome,
    pub five_set: Certificate,
}

pub fn prop32_k4(l: usize, opts: &SolveOptions) -> Result<Prop32K4, ConstructionError> {
    if l < 1 {
        return Err(ConstructionError::NotApplicable("needs l >= 1".into()));
    }
    let pg = star_path(4, l)?;
    let top = l - 1;
    let set: Vec<Vertex> = [(1, top), (2, top), (3, 0), (4, 0), (0, 0)]
        .into_iter()
        .map(|(p, q)| pg.vertex(p, q))
        .collect();
    let five_set = match check_strong_geodetic(pg.graph(), &set, opts)? {
        Decision::Strong(c) => c,
        Decision::NotStrong(_) => {
            return Err(ConstructionError::NotApplicable("the five-vertex set is not strong geodetic".into()))
        }
        Decision::Indeterminate => return Err(ConstructionError::Budget),
    };
    let exact = sg_product_with_layer_pruning(&pg, opts)?;
    Ok(Prop32K4 { product: pg, exact, five_set })
}
