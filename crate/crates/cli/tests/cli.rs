use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn tilekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tilekit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn verify(path: &Path) -> Output {
    tilekit(&["--verify", path.to_str().unwrap()])
}

#[test]
fn exit_codes_follow_the_verdict() {
    let tiles = tilekit(&["tiles-z", "--set", "0,2,3,5", "--json"]);
    assert_eq!(tiles.status.code(), Some(0));
    let doc = json(&tiles);
    assert_eq!(doc["verdict"], "YES");
    // Period 4 with B = {0}: {0,2,3,5} is a complete residue system mod 4.
    assert_eq!(doc["period"], "4");
    assert_eq!(tilekit(&["tiles-z", "--set", "0,1,3"]).status.code(), Some(1));
    assert_eq!(tilekit(&["tiles-z2", "--points", "0,0", "--max-n", "1"]).status.code(), Some(0));
    assert_eq!(tilekit(&["tiles-z", "--set", "0,1,30", "--method", "stategraph"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["frobnicate"][..],
        &["tiles-z"],
        &["tiles-z", "--set", "0,x"],
        &["--seed", "7", "good-group", "--n", "6"],
        &["good-group", "--n", "6", "--seed", "7"],
        &["fuglede-sweep", "--max-n", "99"],
        &["bricks", "--a", "1/0x1", "--b", "1x1"],
    ] {
        assert_eq!(tilekit(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn integers_are_strings() {
    let doc = json(&tilekit(&["vuza", "--n", "72", "--limit", "1"]));
    assert_eq!(doc["count"], "1");
    let canon = &doc["canons"][0];
    assert!(canon["a"].as_array().unwrap().iter().all(Value::is_string));
    assert!(canon["a_period"].is_null() && canon["b_period"].is_null());
    assert!(canon["a_cyclotomic_divisors"].is_array());
}

#[test]
fn certificates_round_trip_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 6] = [
        &["tiles-z", "--set", "0,1,4,5"],
        &["complements", "--n", "12", "--set", "0,3"],
        &["tiles-z2", "--points", "0,0;2,0;0,2;2,2"],
        &["bricks", "--a", "3/5x1/4", "--b", "2/5x1/3", "--construct"],
        &["butson", "--k", "4", "--q", "4"],
        &["spectral", "--n", "6", "--set", "0,1,2"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let out = tilekit(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let path = dir.path().join(format!("doc{i}.json"));
        std::fs::write(&path, &out.stdout).unwrap();
        assert_eq!(verify(&path).status.code(), Some(0), "{args:?}");
    }

    let mut doc = json(&tilekit(&["tiles-z", "--set", "0,1,4,5"]));
    doc["certificate"]["residues"] = serde_json::json!(["0", "1"]);
    let path = dir.path().join("forged.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_eq!(verify(&path).status.code(), Some(1));

    let mut doc = json(&tilekit(&["good-group", "--n", "72"]));
    doc["is_good"] = Value::Bool(true);
    std::fs::write(&path, doc.to_string()).unwrap();
    assert_eq!(verify(&path).status.code(), Some(1));
}

#[test]
fn output_does_not_depend_on_threads() {
    for args in [&["vuza", "--n", "24"][..], &["fuglede-sweep", "--max-n", "9"], &["steinhaus", "--samples", "20"]] {
        let one = tilekit(&[&["--threads", "1"][..], args].concat());
        let four = tilekit(&[&["--threads", "4"][..], args].concat());
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn manifests_record_a_stable_digest() {
    let dir = tempfile::tempdir().unwrap();
    let digest = |name: &str| {
        let path = dir.path().join(name);
        let out = tilekit(&["--manifest", path.to_str().unwrap(), "good-group", "--n", "72"]);
        assert_eq!(out.status.code(), Some(1));
        let m: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(m["command"], "good-group");
        assert_eq!(m["resource_caps"]["threads"], "1");
        m["result_digest"].as_str().unwrap().to_owned()
    };
    assert_eq!(digest("a.json"), digest("b.json"));
}

#[test]
fn aperiodic_writes_its_tiling() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tiling.json");
    let out = tilekit(&["aperiodic", "--radius", "12", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    assert_eq!(verify(&path).status.code(), Some(0));
}

#[test]
fn state_cap_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_tilekit"))
        .args(["tiles-z", "--set", "0,1,6", "--method", "stategraph"])
        .env("TILEKIT_MAX_STATES", "16")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "UNKNOWN");
}

#[test]
fn hadamard_files() {
    let dir = tempfile::tempdir().unwrap();
    let check = |name: &str, body: &str| {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        tilekit(&["hadamard", "--check", path.to_str().unwrap()]).status.code()
    };
    assert_eq!(check("f3.json", r#"{"q": "3", "exponents": [[0,0,0],[0,1,2],[0,2,1]]}"#), Some(0));
    assert_eq!(check("f2.json", r#"{"phases": [["0","0"],["0","1/2"]]}"#), Some(0));
    assert_eq!(check("c2.json", r#"{"entries": [[[1,0],[1,0]],[[1,0],[-1,0]]]}"#), Some(0));
    assert_eq!(check("no.json", r#"{"phases": [["0","0"],["0","1/3"]]}"#), Some(1));
    assert_eq!(check("bad.json", r#"{"rows": []}"#), Some(64));
}
