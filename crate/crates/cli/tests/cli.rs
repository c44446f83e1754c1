use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superpair")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn construct(name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(out.status.success());
    scratch(name, std::str::from_utf8(&out.stdout).unwrap())
}

#[test]
fn even_heisenberg_pair_from_constructed_file() {
    let h10 = construct("h10.json", &["--family", "heis-even", "--m", "1", "--n", "0"]);
    let out = run(&["multiplier", "--algebra", h10.to_str().unwrap(), "--ideal", "z"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["multiplier"], serde_json::json!({"even": 2, "odd": 0}));
    assert_eq!(v["exterior_product"], serde_json::json!({"even": 2, "odd": 0}));
    assert_eq!(v["capable"], Value::Bool(true));

    let whole = json(&run(&["multiplier", "--algebra", h10.to_str().unwrap()]));
    assert_eq!(whole["exterior_product"], serde_json::json!({"even": 3, "odd": 0}));
}

#[test]
fn capability_lists_the_exterior_center() {
    let h = construct("h20.json", &["--family", "heis-even", "--m", "2"]);
    let v = json(&run(&["capability", "--algebra", h.to_str().unwrap(), "--ideal", "x1, x3, z"]));
    assert_eq!(v["capable"], Value::Bool(false));
    assert_eq!(v["exterior_center"], serde_json::json!(["z"]));

    let gen = json(&run(&["capability", "--algebra", h.to_str().unwrap(), "--ideal", "x1", "--closure"]));
    assert_eq!(gen["ideal"], serde_json::json!(["x1", "z"]));

    let not_ideal = run(&["capability", "--algebra", h.to_str().unwrap(), "--ideal", "x1"]);
    assert_eq!(not_ideal.status.code(), Some(2));
    let bad_expr = run(&["multiplier", "--algebra", h.to_str().unwrap(), "--ideal", "x1 +* z"]);
    assert_eq!(bad_expr.status.code(), Some(2));
}

#[test]
fn free_basis_of_one_odd_letter() {
    let v = json(&run(&["free-basis", "--even", "0", "--odd", "1", "--max-degree", "3"]));
    assert_eq!(v["dims"], serde_json::json!([1, 1, 0]));
    let m = json(&run(&["free-basis", "--even", "1", "--odd", "1", "--max-degree", "3", "--monomials"]));
    let brackets: Vec<&str> = m["monomials"].as_array().unwrap().iter().map(|r| r["bracket"].as_str().unwrap()).collect();
    assert_eq!(brackets.len(), 6);
    assert!(brackets.contains(&"[y1,y1]"));
}

#[test]
fn witt_numbers() {
    let v = json(&run(&["witt", "--even", "1", "--odd", "1", "--alpha", "2,2"]));
    assert_eq!(v["rows"][0]["witt"], 1);
    assert_eq!(v["rows"][0]["super_witt"], 2);
    let d = json(&run(&["witt", "--odd", "2", "--degree", "6"]));
    assert_eq!(d["degree"]["dim_even"], 11);
}

#[test]
fn verify_exit_codes() {
    let good = construct("h11.json", &["--family", "heis-even", "--m", "1", "--n", "1"]);
    assert_eq!(run(&["verify", good.to_str().unwrap()]).status.code(), Some(0));

    let sign = scratch(
        "sign.json",
        r#"{"name":"bad","even_basis":["x1","x2","z"],"odd_basis":[],
            "brackets":[{"x":"x1","y":"x2","value":[["z","1"]]},{"x":"x2","y":"x1","value":[["z","1"]]}]}"#,
    );
    let out = run(&["verify", sign.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["violations"], serde_json::json!(["graded skew-symmetry violated at (x1,x2)"]));

    let broken = scratch("broken.json", "{\"name\": ");
    let out = run(&["verify", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
}

#[test]
fn oracle_reports_caveats() {
    let v = json(&run(&["oracle", "--family", "heis-even", "--params", "1,0", "--pair", "2,0"]));
    assert_eq!(v["value"]["value"]["even"], "1/2");
    assert_eq!(v["caveat"], "non-integral value (1/2|0)");
    let a = json(&run(&["oracle", "--family", "abelian", "--params", "2,1"]));
    assert_eq!(a["value"], serde_json::json!({"type": "dim", "value": {"even": 2, "odd": 2}}));
    assert_eq!(a["caveat"], Value::Null);
    let c = json(&run(&["oracle", "--family", "heis-odd", "--params", "1", "--capable"]));
    assert_eq!(c["value"], serde_json::json!({"type": "bool", "value": true}));
}

#[test]
fn report_envelope_and_exit_status() {
    let empty = run(&["report", "--empty"]);
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(json(&empty)["summary"]["checks"], 0);

    assert_eq!(run(&["report", "--empty", "--trials", "9"]).status.code(), Some(2));
    let over = run(&["report", "--empty", "--trials", "9", "--allow-large"]);
    assert_eq!(over.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&over.stderr).starts_with("warning:"));

    // H(1,0) alone: the <x1, z> row is caveated and does not fail the run
    let h10 = run(&["report", "--empty", "--heis-even-max", "1", "--heis-odd-max", "0"]);
    let v = json(&h10);
    let caveated = v["discrepancies"]
        .as_array()
        .unwrap()
        .iter()
        .any(|d| d["algebra"] == "H(1,0)" && d["ideal"] == serde_json::json!(["x1", "z"]) && d["caveat"].is_string());
    assert!(caveated);
    assert_eq!(v["summary"]["failures"].as_u64().unwrap() > 0, h10.status.code() == Some(1));
}

#[test]
fn output_is_byte_stable() {
    let args = ["report", "--empty", "--abelian-max", "1", "--heis-odd-max", "1", "--trials", "2", "--invariance-max-dim", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let t1 = run(&["free-basis", "--even", "2", "--max-degree", "5", "--monomials", "--format", "text"]);
    let t2 = run(&["free-basis", "--even", "2", "--max-degree", "5", "--monomials", "--format", "text"]);
    assert_eq!(t1.stdout, t2.stdout);
    assert!(!t1.stdout.is_empty());
}
