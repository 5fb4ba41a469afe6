use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idempart"))
        .args(args)
        .env_remove("IDEMPART_BRUTE_FORCE_MAX")
        .output()
        .expect("binary runs")
}

fn json_records(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn pn(n: &str, method: &str) -> String {
    let recs = json_records(&["pn", n, "--method", method]);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["method"], method);
    recs[0]["values"]["p"].as_str().unwrap().to_string()
}

#[test]
fn pn_examples() {
    assert_eq!(pn("3", "formula"), "3");
    assert_eq!(pn("0", "pentagonal"), "1");
    assert_eq!(pn("5", "burnside"), "7");
    assert_eq!(pn("200", "pentagonal"), "3972999029388");
}

#[test]
fn methods_agree() {
    for n in 1..=6 {
        let n = n.to_string();
        let f = pn(&n, "formula");
        assert_eq!(f, pn(&n, "pentagonal"));
        assert_eq!(f, pn(&n, "burnside"));
    }
    for n in [30, 45, 60] {
        let n = n.to_string();
        assert_eq!(pn(&n, "formula"), pn(&n, "pentagonal"));
    }
}

#[test]
fn out_of_range_exits_2() {
    for args in [
        &["pn", "7", "--method", "burnside"][..],
        &["pn", "61", "--method", "formula"],
        &["pn", "201", "--method", "pentagonal"],
        &["idempotents", "8", "--list"],
        &["orbits", "7"],
        &["verify", "--exhaustive", "9", "--formula", "5"],
        &["pn", "3", "--method", "magic"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn brute_force_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_idempart"))
        .args(["pn", "4", "--method", "burnside"])
        .env("IDEMPART_BRUTE_FORCE_MAX", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_idempart"))
        .args(["--json", "pn", "7", "--method", "burnside"])
        .env("IDEMPART_BRUTE_FORCE_MAX", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"p\":\"15\""));
}

#[test]
fn idempotent_counts() {
    for (n, want) in [("1", "1"), ("3", "10"), ("4", "41")] {
        let recs = json_records(&["idempotents", n]);
        assert_eq!(recs.last().unwrap()["values"]["count"], want);
    }
    let recs = json_records(&["idempotents", "3", "--list"]);
    assert_eq!(recs.len(), 11);
    assert_eq!(recs[0]["values"]["map"], serde_json::json!(["1", "1", "1"]));
    assert_eq!(
        recs[0]["values"]["type"],
        serde_json::json!(["0", "0", "1"])
    );
    assert_eq!(recs[10]["values"]["count"], "10");
}

#[test]
fn orbit_rows() {
    let recs = json_records(&["orbits", "3"]);
    let rows: Vec<_> = recs.iter().filter(|r| r["record"] == "row").collect();
    assert_eq!(rows.len(), 3);
    let mut pairs: Vec<(String, String)> = rows
        .iter()
        .map(|r| {
            assert_eq!(r["values"]["product_is_n_factorial"], true);
            (
                r["values"]["orbit_size"].as_str().unwrap().to_string(),
                r["values"]["stabilizer_order"]
                    .as_str()
                    .unwrap()
                    .to_string(),
            )
        })
        .collect();
    pairs.sort();
    assert_eq!(
        pairs,
        vec![
            ("1".into(), "6".into()),
            ("3".into(), "2".into()),
            ("6".into(), "1".into())
        ]
    );
    assert_eq!(json_records(&["orbits", "1"]).len(), 2);
    let two = json_records(&["orbits", "2"]);
    let sizes: Vec<_> = two
        .iter()
        .filter(|r| r["record"] == "row")
        .map(|r| r["values"]["orbit_size"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(sizes, vec!["2", "1"]);
}

#[test]
fn types_table() {
    let recs = json_records(&["types", "3"]);
    let rows: Vec<(Value, String, String)> = recs
        .iter()
        .filter(|r| r["record"] == "row")
        .map(|r| {
            (
                r["values"]["type"].clone(),
                r["values"]["idempotents"].as_str().unwrap().into(),
                r["values"]["stabilizer_order"].as_str().unwrap().into(),
            )
        })
        .collect();
    assert_eq!(
        rows,
        vec![
            (serde_json::json!(["0", "0", "1"]), "3".into(), "2".into()),
            (serde_json::json!(["1", "1", "0"]), "6".into(), "1".into()),
            (serde_json::json!(["3", "0", "0"]), "1".into(), "6".into()),
        ]
    );
    let summary = recs.last().unwrap();
    assert_eq!(summary["values"]["sum"], "18");
    assert_eq!(summary["values"]["quotient"], "3");
    assert_eq!(json_records(&["types", "1"]).len(), 2);
    let four = json_records(&["types", "4"]);
    assert_eq!(four.len(), 6);
    assert_eq!(four[5]["values"]["quotient"], "5");
}

#[test]
fn verify_runs_clean() {
    let out = run(&["verify", "--exhaustive", "1", "--formula", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = json_records(&["verify", "--exhaustive", "5", "--formula", "50"]);
    let summary = recs.last().unwrap();
    assert_eq!(summary["values"]["failed"], "0");
    assert!(recs
        .iter()
        .filter(|r| r["record"] == "check")
        .all(|r| r["values"]["passed"] == true));
}

#[test]
fn json_output_is_deterministic_and_integer_safe() {
    let strip = |mut recs: Vec<Value>| {
        for r in &mut recs {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        recs
    };
    let a = strip(json_records(&["--parallel", "types", "12"]));
    let b = strip(json_records(&["types", "12"]));
    assert_eq!(a, b);
    for r in json_records(&["pn", "40", "--method", "formula"]) {
        for v in r["values"].as_object().unwrap().values() {
            assert!(v.is_string(), "{v}");
        }
        assert!(r["elapsed_ms"].is_string());
    }
}

#[test]
fn human_output() {
    let out = run(&["pn", "10"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        "p(10) = 42  [formula]"
    );
}
