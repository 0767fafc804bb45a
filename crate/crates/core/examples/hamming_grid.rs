//! Pictures of the constructed sets of K_m x K_n next to the exact values.
//!
//!     cargo run --release --example hamming_grid -- 5 3

use strong_geodetic::constructions::{construct_thm33, render_grid, sg_formula_kmkn};
use strong_geodetic::{sg_product_with_layer_pruning, SolveOptions};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse().expect("integer")).collect();
    let pairs = match args.as_slice() {
        [m, n] => vec![(*m, *n)],
        _ => vec![(3, 3), (4, 3), (5, 3), (6, 3), (4, 4)],
    };
    for (m, n) in pairs {
        let (pg, cert) = construct_thm33(m, n).expect("both orders >= 2");
        let exact = sg_product_with_layer_pruning(&pg, &SolveOptions::default()).unwrap().value();
        println!("K{m} x K{n}: closed form {}, constructed {}, exact {exact:?}", sg_formula_kmkn(m, n), cert.size());
        print!("{}", render_grid(pg.left().order(), pg.right().order(), cert.set()));
        println!();
    }
}
