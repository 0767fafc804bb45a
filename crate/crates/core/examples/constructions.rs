//! Every product construction, each checked by the independent certificate
//! checker and compared with the solver where that is cheap.

use strong_geodetic::checker::check;
use strong_geodetic::constructions::{self as c, BoundValue};
use strong_geodetic::{generate, strong_geodetic_number, Certificate, Graph, ProductGraph, SolveOptions};

fn sg(g: &Graph) -> Certificate {
    strong_geodetic_number(g, &SolveOptions::default()).unwrap().certificate().unwrap().clone()
}

fn report(name: &str, bound: Option<BoundValue>, built: Result<(ProductGraph, Certificate), impl std::fmt::Display>) {
    match built {
        Ok((pg, cert)) => {
            let ok = check(&cert.to_json(pg.graph())).is_ok();
            let exact = strong_geodetic_number(pg.graph(), &SolveOptions::default().with_budget(std::time::Duration::from_secs(2)))
                .ok()
                .and_then(|o| o.value());
            let b = bound.and_then(|b| b.value).map_or("-".into(), |v| v.to_string());
            println!("{name:<34} bound {b:>3}  built {:>3}  exact {:>4}  checker {}", cert.size(), fmt(exact), ok);
        }
        Err(e) => println!("{name:<34} not applicable: {e}"),
    }
}

fn fmt(v: Option<usize>) -> String {
    v.map_or("?".into(), |v| v.to_string())
}

fn main() {
    let p4 = generate("path:4").unwrap();
    let c5 = generate("cycle:5").unwrap();
    let k4e = generate("complete-minus-edge:4").unwrap();
    let k3 = generate("complete:3").unwrap();
    let (pc, cc, kc, k3c) = (sg(&p4), sg(&c5), sg(&k4e), sg(&k3));

    let general = c::bound_thm21(&p4, &pc, &c5, &cc);
    println!("general bound for P4 x C5 (best orientation): {:?}", general.value);
    report("general, C5 layers kept", None, c::construct_thm21(&p4, &pc, &c5, &cc));
    report("general, P4 layers kept", None, c::construct_thm21(&c5, &cc, &p4, &pc));
    report("K2 bound, (K4-e) x K2", Some(c::bound_prop23(&k4e, &kc)), c::construct_prop23(&k4e, &kc));
    report("complete bound, (K4-e) x K3", Some(c::bound_prop25(&k4e, &kc, 3)), c::construct_prop25(&k4e, &kc, 3));
    report("two-packing bound, P4 x K3", Some(c::bound_thm26(&p4, &pc, &k3, &k3c)), c::construct_thm26(&p4, &pc, &k3, &k3c));
    report("(K6-e) x K2", None, c::construct_thm31i(6));
    report("K5 x K2 via simplicial set", None, c::construct_thm31ii(&generate("complete:5").unwrap(), &SolveOptions::default()));
    report("K1,5 x P3", None, c::construct_prop32(5, 3));
    report("K5 x K3", None, c::construct_thm33(5, 3));

    let k4 = c::prop32_k4(3, &SolveOptions::default()).unwrap();
    println!("K1,4 x P3: exact {:?}, five-vertex set {:?}", k4.exact.value(), k4.five_set.set());
}
