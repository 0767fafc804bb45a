//! sg of a Cartesian product, using the layer constraints of simplicial
//! vertices to prune the search.
//!
//!     cargo run --release --example product -- complete:4 complete:4

use std::time::Instant;

use strong_geodetic::{cartesian_product, generate, lower_bound, sg_product_with_layer_pruning, SolveOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let g = generate(&args.next().unwrap_or_else(|| "complete:4".into())).expect("family spec");
    let h = generate(&args.next().unwrap_or_else(|| "complete:3".into())).expect("family spec");
    let pg = cartesian_product(&g, &h).expect("product fits");
    let start = Instant::now();
    let out = sg_product_with_layer_pruning(&pg, &SolveOptions::default()).expect("solvable");
    println!(
        "n = {}, lower bound = {}, sg = {:?} ({:.1?})",
        pg.graph().order(),
        lower_bound(pg.graph()),
        out.value(),
        start.elapsed()
    );
    if let Some(c) = out.certificate() {
        let cells: Vec<_> = c.set().iter().map(|&v| pg.coord(v)).collect();
        println!("set as (g, h) pairs: {cells:?}");
    }
}
