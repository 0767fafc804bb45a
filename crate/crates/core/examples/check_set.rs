//! Decide whether a given vertex set is strong geodetic.
//!
//!     cargo run --example check_set -- cycle:6 0,2,4

use strong_geodetic::{check_strong_geodetic, generate, Decision, Refutation, SolveOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "cycle:6".into());
    let set: Vec<usize> = args
        .next()
        .unwrap_or_else(|| "0,2,4".into())
        .split(',')
        .map(|s| s.trim().parse().expect("vertex number"))
        .collect();
    let g = generate(&spec).expect("family spec");
    match check_strong_geodetic(&g, &set, &SolveOptions::default()).expect("valid set") {
        Decision::Strong(c) => {
            println!("{set:?} is strong geodetic in {spec}");
            println!("{}", serde_json::to_string_pretty(&c.to_json(&g)).unwrap());
        }
        Decision::NotStrong(Refutation::Uncoverable(vs)) => {
            println!("{set:?} is not strong geodetic: no geodesic between its vertices reaches {:?}", vs.to_vec())
        }
        Decision::NotStrong(Refutation::Exhausted { nodes }) => {
            println!("{set:?} is not strong geodetic ({nodes} search nodes)")
        }
        Decision::Indeterminate => println!("undecided within the budget"),
    }
}
