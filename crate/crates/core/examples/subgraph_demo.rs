//! Convex and gated subgraphs can have a larger or a smaller strong geodetic
//! number than the graph they sit in.

use strong_geodetic::verification::demo_subgraph_relations;
use strong_geodetic::SolveOptions;

fn main() {
    for d in demo_subgraph_relations(&SolveOptions::default()).unwrap() {
        println!(
            "{}: host {} has sg {:?}; subgraph {} has sg {:?} (convex {}, gated {}) -> {}",
            d.name,
            d.host,
            d.host_sg,
            d.subgraph,
            d.subgraph_sg,
            d.convex,
            d.gated,
            d.relation.as_deref().unwrap_or("undecided")
        );
    }
}
