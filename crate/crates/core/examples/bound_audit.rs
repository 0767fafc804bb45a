//! All upper bounds that apply to G x H, side by side with the exact value.
//!
//!     cargo run --release --example bound_audit -- path:4 complete:3

use strong_geodetic::verification::audit_bounds;
use strong_geodetic::{generate, SolveOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let g = args.next().unwrap_or_else(|| "path:4".into());
    let h = args.next().unwrap_or_else(|| "complete:3".into());
    let report = audit_bounds(&generate(&g).unwrap(), &generate(&h).unwrap(), &SolveOptions::default()).unwrap();
    println!("sg({g}) = {}, sg({h}) = {}, sg(product) = {:?}", report.sg_g, report.sg_h, report.exact);
    for row in &report.rows {
        let value = row.bound.value.map_or("-".into(), |v| v.to_string());
        let flags = if row.bound.applicable() { "" } else { "  (hypotheses fail)" };
        println!(
            "  {:<5} {:<40} bound {:>3}  built {:>4}  sharp {:?}{flags}",
            row.orientation,
            row.bound.name,
            value,
            row.constructed.map_or("-".into(), |v| v.to_string()),
            row.sharp
        );
    }
}
