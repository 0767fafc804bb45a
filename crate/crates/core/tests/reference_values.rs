//! Published values and worked examples, each checked against the solver and
//! the independent certificate checker.

mod common;

use common::Oracle;
use strong_geodetic::checker::check;
use strong_geodetic::constructions as cons;
use strong_geodetic::verification::{audit_bounds, check_problem35};
use strong_geodetic::{
    cartesian_product, check_strong_geodetic, from_graph6, generate, lower_bound, sg_product_with_layer_pruning,
    sg_tree, strong_geodetic_number, Certificate, ConstructionError, Decision, Graph, ProductGraph, SolveOptions,
    VertexSet,
};

fn fam(spec: &str) -> Graph {
    generate(spec).unwrap()
}

fn solved(g: &Graph) -> Certificate {
    strong_geodetic_number(g, &SolveOptions::default()).unwrap().certificate().unwrap().clone()
}

fn sg(g: &Graph) -> usize {
    solved(g).size()
}

fn valid(pg: &ProductGraph, c: &Certificate) -> usize {
    check(&c.to_json(pg.graph())).unwrap();
    c.size()
}

fn not_applicable<T>(r: Result<T, ConstructionError>) -> bool {
    matches!(r, Err(ConstructionError::NotApplicable(_)))
}

// graph6 by hand: N(n) then the upper triangle column by column, six bits a byte.
fn hand_graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(edges.contains(&(i, j)) as u8);
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(0);
    }
    let mut s = String::from((63 + n as u8) as char);
    for chunk in bits.chunks(6) {
        s.push((63 + chunk.iter().fold(0, |a, &b| a << 1 | b)) as char);
    }
    s
}

#[test]
fn graph6_small_cases() {
    assert_eq!(hand_graph6(3, &[(0, 1), (0, 2), (1, 2)]), "Bw");
    assert_eq!(hand_graph6(3, &[(0, 1), (1, 2)]), "Bg");
    assert_eq!(from_graph6("Bw").unwrap().edges(), vec![(0, 1), (0, 2), (1, 2)]);
    assert_eq!(from_graph6("Bg").unwrap().edges(), vec![(0, 1), (1, 2)]);
}

#[test]
fn complete_minus_edge_structure() {
    let g = fam("complete-minus-edge:5");
    let (u, v) = (g.vertex_by_label("u").unwrap(), g.vertex_by_label("v").unwrap());
    assert_eq!(g.dist(u, v), 2);
    let k4e = fam("complete-minus-edge:4");
    let simp = k4e.simplicial_vertices().to_vec();
    let names: Vec<_> = simp.iter().map(|&x| k4e.label(x)).collect();
    assert_eq!(names, ["u", "v"]);
}

#[test]
fn diameter_two_has_no_two_packing() {
    for spec in ["cycle:5", "complete-minus-edge:6", "star:4", "kmn:2,3"] {
        let g = fam(spec);
        assert_eq!(g.diameter(), 2);
        for a in g.vertices() {
            for b in a + 1..g.order() {
                assert!(!g.is_two_packing(&VertexSet::from_vertices(g.order(), [a, b])), "{spec}");
            }
        }
    }
}

#[test]
fn convex_and_gated_examples() {
    let pg = cartesian_product(&fam("cycle:5"), &fam("path:3")).unwrap();
    for h in 0..3 {
        assert!(pg.graph().is_convex_subgraph(&pg.left_layer(h)));
        assert!(pg.graph().is_gated_subgraph(&pg.left_layer(h)));
    }
    let tree = fam("prism-tree:3");
    let path = VertexSet::from_vertices(tree.order(), tree.first_path_between_leaves());
    assert!(tree.is_convex_subgraph(&path));
}

trait LeafPath {
    fn first_path_between_leaves(&self) -> Vec<usize>;
}

impl LeafPath for Graph {
    fn first_path_between_leaves(&self) -> Vec<usize> {
        let leaves: Vec<_> = self.vertices().filter(|&v| self.degree(v) == 1).collect();
        strong_geodetic::first_geodesic(self, leaves[0], leaves[1]).into_vertices()
    }
}

#[test]
fn family_orders() {
    let k5k5 = cartesian_product(&fam("complete:5"), &fam("complete:5")).unwrap();
    assert_eq!(k5k5.graph().order(), 25);
    assert!(k5k5.graph().vertices().all(|v| k5k5.graph().degree(v) == 8));
    let g3 = fam("cycle-pendant:3");
    assert_eq!((g3.order(), g3.size()), (12, 12));
    assert_eq!(fam("gc:3,3").order(), 25);
    assert_eq!(fam("gg:2,3").order(), 13);
}

#[test]
fn small_exact_values() {
    let g3 = fam("cycle-pendant:3");
    let uvw: Vec<_> = ["u", "v", "w"].iter().map(|l| g3.vertex_by_label(l).unwrap()).collect();
    assert!(check_strong_geodetic(&g3, &uvw, &SolveOptions::default()).unwrap().is_strong());
    assert_eq!(sg(&g3), 3);
    assert_eq!(sg(&fam("complete-minus-edge:4")), 3);
    assert_eq!(sg(&fam("cycle:6")), 3);
    for n in 2..=9 {
        assert_eq!(sg(&fam(&format!("path:{n}"))), 2);
    }
    let c4 = fam("cycle:4");
    assert!(!check_strong_geodetic(&c4, &[0, 2], &SolveOptions::default()).unwrap().is_strong());
}

#[test]
fn products_with_pruning() {
    let opts = SolveOptions::default();
    let cases = [
        ("complete-minus-edge:4", "complete:2", 4),
        ("complete:3", "complete:2", 4),
        ("cycle-pendant:3", "complete:2", 5),
        ("path:5", "complete:2", 3),
    ];
    for (g, h, value) in cases {
        let pg = cartesian_product(&fam(g), &fam(h)).unwrap();
        let pruned = sg_product_with_layer_pruning(&pg, &opts).unwrap();
        assert_eq!(pruned.value(), Some(value), "{g} x {h}");
        if pg.graph().order() <= 12 {
            assert_eq!(strong_geodetic_number(pg.graph(), &opts).unwrap().value(), Some(value));
            assert_eq!(Oracle::from_graph(pg.graph()).sg(), value);
        }
    }
}

#[test]
fn trees_and_lower_bounds() {
    assert_eq!(sg_tree(&fam("star:5")).unwrap(), 5);
    assert_eq!(sg_tree(&fam("path:7")).unwrap(), 2);
    let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
    assert_eq!(sg_tree(&spider).unwrap(), 3);
    assert_eq!(sg(&spider), 3);
    assert!(sg_tree(&fam("cycle:4")).is_err());
    assert_eq!(lower_bound(&fam("path:9")), 2);
    for n in 1..=6 {
        assert_eq!(lower_bound(&fam(&format!("complete:{n}"))), n);
    }
}

#[test]
fn general_bound_values() {
    let (p3, k2, g3) = (fam("path:3"), fam("complete:2"), fam("cycle-pendant:3"));
    let (p3c, k2c, g3c) = (solved(&p3), solved(&k2), solved(&g3));
    assert_eq!(cons::bound_thm21(&p3, &p3c, &k2, &k2c).value, Some(3));
    assert_eq!(cons::bound_thm21(&g3, &g3c, &k2, &k2c).value, Some(5));
    assert_eq!(cons::bound_thm21(&k2, &k2c, &k2, &k2c).value, Some(3));

    // the size formula is one-sided; the small value comes from keeping the P3 layers
    let (pg, c) = cons::construct_thm21(&k2, &k2c, &p3, &p3c).unwrap();
    assert_eq!(valid(&pg, &c), 3);
    let (pg, c) = cons::construct_thm21(&p3, &p3c, &k2, &k2c).unwrap();
    assert_eq!(valid(&pg, &c), 5);
    let (pg, c) = cons::construct_thm21(&k2, &k2c, &k2, &k2c).unwrap();
    assert_eq!(valid(&pg, &c), 3);
    let (pg, c) = cons::construct_thm21(&k2, &k2c, &g3, &g3c).unwrap();
    assert_eq!(valid(&pg, &c), 5);
}

#[test]
fn prism_bound_examples() {
    let k4e = fam("complete-minus-edge:4");
    let c = solved(&k4e);
    assert_eq!(cons::close_pair(&k4e, c.set()).map(|(a, b)| k4e.dist(a, b)), Some(2));
    let (pg, t) = cons::construct_prop23(&k4e, &c).unwrap();
    assert_eq!(valid(&pg, &t), 4);
    // the set {u, v, x} pairs u and v at distance two
    let uvx: Vec<_> = ["u", "v", "x1"].iter().map(|l| k4e.vertex_by_label(l).unwrap()).collect();
    let Decision::Strong(uvx) = check_strong_geodetic(&k4e, &uvx, &SolveOptions::default()).unwrap() else {
        panic!("{{u, v, x1}} is strong geodetic")
    };
    assert_eq!(cons::close_pair(&k4e, uvx.set()).map(|(a, b)| k4e.dist(a, b)), Some(2));
    let (pg, t) = cons::construct_prop23(&k4e, &uvx).unwrap();
    assert_eq!(valid(&pg, &t), 4);
    let k2 = fam("complete:2");
    assert!(not_applicable(cons::construct_prop23(&k2, &solved(&k2))));

    for (n, size) in [(2, 4), (3, 6)] {
        let (pg, t) = cons::construct_prop25(&k4e, &c, n).unwrap();
        assert_eq!(valid(&pg, &t), size);
        assert!(sg_product_with_layer_pruning(&pg, &SolveOptions::default()).unwrap().value().unwrap() <= size);
    }
    let c5 = fam("cycle:5");
    assert_eq!((c5.diameter(), sg(&c5)), (2, 3));
    let (pg, t) = cons::construct_prop25(&c5, &solved(&c5), 4).unwrap();
    assert_eq!(valid(&pg, &t), 8);
}

#[test]
fn improved_bound_examples() {
    let (k2, k4e) = (fam("complete:2"), fam("complete-minus-edge:4"));
    let (k2c, k4ec) = (solved(&k2), solved(&k4e));
    let (pg, t) = cons::construct_thm26(&k2, &k2c, &k4e, &k4ec).unwrap();
    assert_eq!(valid(&pg, &t), 3 * 2 - 2);
    assert!(sg_product_with_layer_pruning(&pg, &SolveOptions::default()).unwrap().value().unwrap() <= 4);
    let (pg, t) = cons::construct_thm26(&k4e, &k4ec, &k4e, &k4ec).unwrap();
    assert_eq!(valid(&pg, &t), 9);
}

#[test]
fn prisms_of_complete_minus_edge() {
    for n in 5..=6 {
        let (pg, t) = cons::construct_thm31i(n).unwrap();
        assert_eq!(valid(&pg, &t), n - 1);
        assert_eq!(sg(pg.graph()), n - 1);
    }
    assert!(not_applicable(cons::construct_thm31i(4)));
}

// Two triangles sharing a vertex.
fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

// K4 with a tip on every edge of a 4-cycle through it: the four tips are the
// simplicial vertices and already a strong geodetic set.
fn tipped_k4() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
    for i in 0..4 {
        edges.push((i, 4 + i));
        edges.push(((i + 1) % 4, 4 + i));
    }
    Graph::from_edges(8, edges).unwrap()
}

#[test]
fn prisms_from_simplicial_sets() {
    let opts = SolveOptions::default();
    let k5 = fam("complete:5");
    let (pg, t) = cons::construct_thm31ii(&k5, &opts).unwrap();
    assert_eq!(valid(&pg, &t), 5);
    assert_eq!(sg(pg.graph()), 5);

    let g = bowtie();
    assert_eq!(g.simplicial_vertices().to_vec(), vec![1, 2, 3, 4]);
    assert!(check_strong_geodetic(&g, &[1, 2, 3, 4], &opts).unwrap().is_strong());
    let (pg, t) = cons::construct_thm31ii(&g, &opts).unwrap();
    assert_eq!(valid(&pg, &t), 4);
    assert_eq!(sg_product_with_layer_pruning(&pg, &opts).unwrap().value(), Some(4));

    // same hypotheses, and the equality holds, but the two path families miss
    // a hub vertex in each copy
    let g = tipped_k4();
    assert_eq!(g.simplicial_vertices().to_vec(), vec![4, 5, 6, 7]);
    assert!(check_strong_geodetic(&g, &[4, 5, 6, 7], &opts).unwrap().is_strong());
    assert!(matches!(cons::construct_thm31ii(&g, &opts), Err(ConstructionError::Verification(_))));
    let pg = cartesian_product(&g, &fam("complete:2")).unwrap();
    assert_eq!(sg_product_with_layer_pruning(&pg, &opts).unwrap().value(), Some(4));

    // here the equality itself fails
    let g = from_graph6("EB{G").unwrap();
    assert!(matches!(cons::construct_thm31ii(&g, &opts), Err(ConstructionError::Verification(_))));
    let pg = cartesian_product(&g, &fam("complete:2")).unwrap();
    assert_eq!((sg(&g), sg_product_with_layer_pruning(&pg, &opts).unwrap().value()), (4, Some(5)));

    assert!(not_applicable(cons::construct_thm31ii(&fam("star:3"), &opts)));
}

#[test]
fn star_by_path() {
    let (pg, t) = cons::construct_prop32(5, 3).unwrap();
    assert_eq!(valid(&pg, &t), 5);
    let (pg, t) = cons::construct_prop32(6, 1).unwrap();
    assert_eq!(valid(&pg, &t), 6);
    assert!(not_applicable(cons::construct_prop32(4, 3)));
    let k4 = cons::prop32_k4(3, &SolveOptions::default()).unwrap();
    assert_eq!(k4.exact.value(), Some(5));
    assert_eq!(valid(&k4.product, &k4.five_set), 5);
}

#[test]
fn complete_grid_constructions() {
    assert_eq!(cons::sg_formula_kmkn(5, 5), 9);
    assert_eq!(cons::sg_formula_kmkn(10, 7), 14);
    assert_eq!(cons::sg_formula_kmkn(12, 4), 12);

    let (pg, t) = cons::construct_thm33(5, 5).unwrap();
    assert_eq!(valid(&pg, &t), 9);
    let cells: Vec<_> = t.set().iter().map(|&v| pg.coord(v)).collect();
    assert!(cells.iter().all(|&(i, j)| j == i || j == i + 1));
    let (pg, t) = cons::construct_thm33(10, 7).unwrap();
    assert_eq!(valid(&pg, &t), 14);
    let (pg, t) = cons::construct_thm33(12, 4).unwrap();
    assert_eq!(valid(&pg, &t), 12);

    // the built set for K4 x K4 has 7 vertices, one more than the minimum
    let (pg, t) = cons::construct_thm33(4, 4).unwrap();
    assert_eq!(valid(&pg, &t), 7);
    assert_eq!(sg_product_with_layer_pruning(&pg, &SolveOptions::default()).unwrap().value(), Some(6));
}

#[test]
fn product_versus_factors() {
    let opts = SolveOptions::default();
    let r = check_problem35(&fam("star:5"), &fam("path:3"), &opts).unwrap();
    assert_eq!((r.sg_product, r.max_factor, r.tight), (Some(5), Some(5), Some(true)));
    let r = check_problem35(&fam("complete:6"), &fam("complete:3"), &opts).unwrap();
    assert_eq!((r.sg_product, r.max_factor, r.tight), (Some(6), Some(6), Some(true)));
    let r = check_problem35(&fam("complete:3"), &fam("complete:3"), &opts).unwrap();
    assert_eq!((r.sg_product, r.max_factor, r.holds), (Some(5), Some(3), Some(true)));
}

#[test]
fn bound_audits() {
    let opts = SolveOptions::default();
    let general = |g: &str, h: &str| {
        let r = audit_bounds(&fam(g), &fam(h), &opts).unwrap();
        let row = r.rows.iter().find(|row| row.bound.name == "general upper bound").unwrap().clone();
        (r.exact, row.bound.value, row.sharp)
    };
    assert_eq!(general("complete:3", "complete:2"), (Some(4), Some(4), Some(true)));
    assert_eq!(general("complete:3", "complete:3"), (Some(5), Some(7), Some(false)));
    assert_eq!(general("cycle-pendant:3", "complete:2"), (Some(5), Some(5), Some(true)));
}
