use std::process::Command;

use serde_json::Value;
use strong_geodetic::cli::run;

fn call(args: &[&str], stdin: &str) -> (i32, String) {
    let mut out = Vec::new();
    let mut input = stdin.as_bytes();
    let code = run(std::iter::once("sgeo").chain(args.iter().copied()), &mut input, &mut out, &mut Vec::new());
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = call(args, "");
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

fn schema() -> Value {
    serde_json::from_str(include_str!("../schema/certificate.schema.json")).unwrap()
}

// Enough of JSON Schema for the keywords the certificate schema uses.
fn conforms(schema: &Value, v: &Value) -> Result<(), String> {
    let fail = |what: &str| Err(format!("{what}: {v}"));
    if let Some(t) = schema["type"].as_str() {
        let ok = match t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "integer" => v.is_u64() || v.is_i64(),
            "boolean" => v.is_boolean(),
            _ => return fail("unknown type"),
        };
        if !ok {
            return fail(t);
        }
    }
    if let Some(min) = schema["minimum"].as_i64() {
        if v.as_i64().is_none_or(|x| x < min) {
            return fail("minimum");
        }
    }
    if let Some(obj) = v.as_object() {
        for key in schema["required"].as_array().into_iter().flatten() {
            if !obj.contains_key(key.as_str().unwrap()) {
                return fail("required");
            }
        }
        let props = schema["properties"].as_object();
        for (k, val) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => conforms(sub, val)?,
                None if schema["additionalProperties"] == Value::Bool(false) => return fail("additional property"),
                None => {}
            }
        }
    }
    if let Some(arr) = v.as_array() {
        if schema["minItems"].as_u64().is_some_and(|m| (arr.len() as u64) < m)
            || schema["maxItems"].as_u64().is_some_and(|m| (arr.len() as u64) > m)
        {
            return fail("length");
        }
        if schema["uniqueItems"] == Value::Bool(true) {
            let mut seen = arr.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            seen.sort();
            seen.dedup();
            if seen.len() != arr.len() {
                return fail("unique");
            }
        }
        if !schema["items"].is_null() {
            for x in arr {
                conforms(&schema["items"], x)?;
            }
        }
    }
    Ok(())
}

#[test]
fn sg_of_complete_minus_edge() {
    let v = json(&["sg", "--family", "complete-minus-edge:5", "--emit-certificate"]);
    assert_eq!(v["result"]["value"], 4);
    let cert = &v["result"]["certificate"];
    conforms(&schema(), cert).unwrap();
    let parsed: strong_geodetic::CertificateJson = serde_json::from_value(cert.clone()).unwrap();
    strong_geodetic::checker::check(&parsed).unwrap();
}

#[test]
fn star_by_path_product() {
    let v = json(&["product-sg", "--g", "star:5", "--h", "path:3"]);
    assert_eq!(v["result"]["value"], 5);
    let v = json(&["product-sg", "--g", "g6:Bw", "--h", "complete:2"]);
    assert_eq!(v["result"]["value"], 4);
}

#[test]
fn small_sweep() {
    let (code, out) = call(&["sweep", "--max-n", "4", "--prism"], "");
    assert_eq!(code, 0);
    let summary: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["summary"]["violations"], serde_json::json!([]));
    assert_eq!(summary["summary"]["equality_catalog"], serde_json::json!(["C~"]));
    assert_eq!(call(&["sweep", "--max-n", "5", "--prism", "--catalog"], "").1.lines().count(), 8);
}

#[test]
fn sweep_from_stdin_and_file() {
    let (code, out) = call(&["sweep", "--prism", "--input", "-"], "C~\nCF\nnot graph6\n");
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["status"], "equality");
    assert_eq!(lines[1]["status"], "holds");
    assert_eq!(lines[2]["status"], "error");
    let path = std::env::temp_dir().join("sgeo-sweep-input.g6");
    std::fs::write(&path, "C~\nCF\n").unwrap();
    let from_file = call(&["sweep", "--prism", "--input", path.to_str().unwrap()], "");
    let from_stdin = call(&["sweep", "--prism", "--input", "-"], "C~\nCF\n");
    assert_eq!(from_file, from_stdin);
    let census = call(&["sweep", "--max-n", "3"], "").1;
    assert_eq!(census.lines().count(), 4);
}

#[test]
fn every_construction_verifies() {
    let cases: [&[&str]; 8] = [
        &["construct", "thm21", "--g", "path:3", "--h", "complete:2"],
        &["construct", "prop23", "--g", "complete-minus-edge:4"],
        &["construct", "prop25", "--g", "complete-minus-edge:4", "--n", "3"],
        &["construct", "thm26", "--g", "complete:2", "--h", "complete-minus-edge:4"],
        &["construct", "thm31i", "--n", "6"],
        &["construct", "thm31ii", "--g", "complete:5"],
        &["construct", "prop32", "--k", "5", "--l", "3"],
        &["construct", "thm33", "--m", "5", "--n", "3"],
    ];
    let sizes = [5, 4, 6, 4, 5, 5, 5, 6];
    for (args, size) in cases.iter().zip(sizes) {
        let mut with_cert = args.to_vec();
        with_cert.push("--emit-certificate");
        let v = json(&with_cert);
        assert_eq!(v["size"], size, "{args:?}");
        conforms(&schema(), &v["certificate"]).unwrap();
        let parsed: strong_geodetic::CertificateJson = serde_json::from_value(v["certificate"].clone()).unwrap();
        strong_geodetic::checker::check(&parsed).unwrap();
    }
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["construct", "thm31i", "--n", "4"], "").0, 1);
    assert_eq!(call(&["construct", "thm31ii", "--g", "g6:EB{G"], "").0, 1);
    assert_eq!(call(&["construct", "prop32", "--k", "5"], "").0, 3);
    assert_eq!(call(&["--budget-secs", "0", "product-sg", "--g", "complete:4", "--h", "complete:4"], "").0, 2);
    assert_eq!(call(&["sg", "--graph6", "C"], "").0, 3);
    assert_eq!(call(&["sg"], "").0, 3);
    assert_eq!(call(&["frobnicate"], "").0, 3);
    let (code, out) = call(&["sg", "--family", "path:0"], "");
    assert_eq!(code, 3);
    assert!(serde_json::from_str::<Value>(&out).unwrap()["error"].is_string());
}

#[test]
fn input_precedence() {
    assert_eq!(json(&["sg", "--graph6", "Bg", "--family", "complete:4"])["n"], 3);
    assert_eq!(json(&["sg", "--family", "complete:4"])["n"], 4);
    let (code, out) = call(&["sg"], "C~\n");
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["result"]["value"], 4);
}

#[test]
fn check_set_is_one_based() {
    let v = json(&["check-set", "--family", "path:3", "--set", "1,3"]);
    assert_eq!(v["result"]["strong"], true);
    let v = json(&["check-set", "--family", "cycle:4", "--set", "1,3"]);
    assert_eq!(v["result"]["strong"], false);
}

#[test]
fn remaining_commands() {
    let v = json(&["bound-audit", "--g", "complete:3", "--h", "complete:2"]);
    assert_eq!(v["report"]["exact"], 4);
    let v = json(&["problem35", "--g", "complete:3", "--h", "complete:3"]);
    assert_eq!(v["result"]["sg_product"], 5);
    let v = json(&["subgraph-demo"]);
    assert_eq!(v["demos"].as_array().unwrap().len(), 4);
    assert_eq!(call(&["render-grid", "--m", "3", "--n", "3"], ""), (0, ". # #\n# # .\n# . .\n".into()));
}

#[test]
fn identical_runs_identical_bytes() {
    for args in [
        &["--jobs", "1", "sweep", "--max-n", "5", "--prism", "--emit-certificate"][..],
        &["--jobs", "4", "sweep", "--max-n", "5", "--prism", "--emit-certificate"][..],
    ] {
        assert_eq!(call(args, ""), call(&["sweep", "--max-n", "5", "--prism", "--emit-certificate"], ""));
    }
    let a = call(&["product-sg", "--g", "complete:4", "--h", "complete:4", "--emit-certificate"], "");
    let b = call(&["--jobs", "2", "product-sg", "--g", "complete:4", "--h", "complete:4", "--emit-certificate"], "");
    assert_eq!(a, b);
}

#[test]
fn binary_matches_library() {
    let out = Command::new(env!("CARGO_BIN_EXE_sgeo"))
        .args(["sg", "--family", "cycle:6"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), call(&["sg", "--family", "cycle:6"], "").1);
    let bad = Command::new(env!("CARGO_BIN_EXE_sgeo")).args(["sg", "--graph6", "?"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(3));
}
