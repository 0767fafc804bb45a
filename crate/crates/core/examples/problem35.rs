//! Is sg(G x H) at least max{sg(G), sg(H)}? Checked on a handful of pairs.

use strong_geodetic::verification::check_problem35;
use strong_geodetic::{generate, SolveOptions};

fn main() {
    let pairs = [
        ("complete-minus-edge:5", "complete:2"),
        ("star:5", "path:3"),
        ("path:4", "cycle:4"),
        ("complete:4", "complete:3"),
        ("kmn:2,3", "path:3"),
    ];
    for (g, h) in pairs {
        let r = check_problem35(&generate(g).unwrap(), &generate(h).unwrap(), &SolveOptions::default()).unwrap();
        println!(
            "{g} x {h}: sg = {:?}, max of factors = {:?}, holds {:?}, tight {:?}",
            r.sg_product, r.max_factor, r.holds, r.tight
        );
    }
}
