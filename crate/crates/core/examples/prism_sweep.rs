//! Compare sg(G) with sg(G x K2) over all connected graphs up to a given
//! order, printing the counts, the violations and the equality cases.
//!
//!     cargo run --release --example prism_sweep -- 6

use strong_geodetic::corpus::connected_up_to;
use strong_geodetic::verification::{recheck_record, sweep_conjecture};
use strong_geodetic::SolveOptions;

fn main() {
    let max_n: usize = std::env::args().nth(1).map_or(5, |a| a.parse().expect("integer"));
    let lines = connected_up_to(max_n);
    let report = sweep_conjecture(&lines, &SolveOptions::default());
    for r in &report.records {
        recheck_record(r).expect("certificates re-verify");
    }
    println!("{} connected graphs with n <= {max_n}", report.records.len());
    println!("{}", serde_json::to_string_pretty(&report.counts).unwrap());
    for r in report.violations() {
        println!("sg(G x K2) < sg(G): {} ({:?} vs {:?})", r.graph6, r.sg_prism, r.sg);
    }
    println!("equality cases: {}", report.equality_catalog.join(" "));
}
