//! Reading and writing graph6, plus the bundled corpus of connected graphs.

use strong_geodetic::corpus::connected;
use strong_geodetic::{from_graph6, generate, to_graph6};

fn main() {
    let g3 = generate("cycle-pendant:3").unwrap();
    let line = to_graph6(&g3);
    println!("cycle with three pendants: {line}");
    let back = from_graph6(&line).unwrap();
    assert_eq!(back.edges(), g3.edges());
    println!("decoded again: {} vertices, {} edges", back.order(), back.size());

    for n in 1..=5 {
        let all = connected(n);
        println!("n = {n}: {} connected graphs, first {:?}", all.len(), all.first());
    }
    match from_graph6("D?") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("truncated input is rejected: {e}"),
    }
}
