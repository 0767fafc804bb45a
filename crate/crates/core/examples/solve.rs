//! Exact strong geodetic number of one graph, with the fixed geodesics.
//!
//!     cargo run --example solve -- complete-minus-edge:6
//!     cargo run --example solve -- 'E?~o'        # graph6 works too

use strong_geodetic::{from_graph6, generate, strong_geodetic_number, Graph, SgOutcome, SolveOptions};

fn parse(arg: &str) -> Graph {
    generate(arg).or_else(|_| from_graph6(arg).map_err(|e| e.to_string())).unwrap_or_else(|e| {
        eprintln!("cannot read {arg}: {e}");
        std::process::exit(3);
    })
}

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "cycle:6".into());
    let g = parse(&arg);
    println!("{arg}: n = {}, m = {}, diameter = {}", g.order(), g.size(), g.diameter());
    match strong_geodetic_number(&g, &SolveOptions::default()).expect("solvable input") {
        SgOutcome::Exact { value, certificate } => {
            println!("sg = {value}, S = {:?}", certificate.set());
            for p in certificate.pairs() {
                println!("  {} - {}: {:?}", p.a, p.b, p.path.vertices());
            }
        }
        SgOutcome::Bounded { lower, upper } => println!("budget ran out: {lower} <= sg <= {upper}"),
    }
}
