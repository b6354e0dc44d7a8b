use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const IDS: [&str; 7] = [
    "BinaryCubics",
    "Tautological",
    "JCommutant",
    "HomEF",
    "ThreeForms6",
    "PrimitiveThreeForms6",
    "HalfSpinor12",
];

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn ssr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssr")).args(args).output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn construct_matches_golden_files() {
    for id in IDS {
        let out = ssr(&["construct", id, "--field", "Q"]);
        assert!(out.status.success(), "{id}");
        let want = std::fs::read(fixture(&format!("{id}.json"))).unwrap();
        assert!(out.stdout == want, "{id} differs from its fixture");
    }
}

#[test]
fn lie_build_matches_golden_files() {
    for id in IDS {
        let path = fixture(&format!("{id}.json"));
        let out = ssr(&["lie-build", "--ssr", path.to_str().unwrap()]);
        assert!(out.status.success(), "{id}");
        let want = std::fs::read(fixture(&format!("lie_{id}.json"))).unwrap();
        assert!(out.stdout == want, "{id} differs from its fixture");
        let v = json(&out);
        assert_eq!(v["calibration"], serde_json::json!(["1/1", "1/2"]));
        assert_eq!(v["simple"], true);
    }
}

#[test]
fn fixtures_verify_on_load() {
    for id in IDS {
        let path = fixture(&format!("{id}.json"));
        let out = ssr(&["verify", "--ssr", path.to_str().unwrap()]);
        assert!(out.status.success(), "{id}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn decompose_example() {
    let path = fixture("BinaryCubics.json");
    let out = ssr(&["decompose", "--ssr", path.to_str().unwrap(), "--vector", "[1,0,0,1]"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["B"], serde_json::json!(["1/1", "0/1", "0/1", "0/1"]));
    assert_eq!(v["C"], serde_json::json!(["0/1", "0/1", "0/1", "1/1"]));
    assert_eq!(v["q"], "-3/1");
}

#[test]
fn selftest_over_f7_passes() {
    let out = ssr(&["selftest", "--field", "F7", "--seed", "42"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["passed"], true);
}

#[test]
fn identical_requests_give_identical_bytes() {
    let path = fixture("HalfSpinor12.json");
    let a = ssr(&["lie-build", "--ssr", path.to_str().unwrap(), "--seed", "9"]);
    let b = ssr(&["lie-build", "--ssr", path.to_str().unwrap(), "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = ssr(&["covariants", "--ssr", "BinaryCubics", "--vector", "[1,2,-1,3]", "--seed", "5"]);
    let d = ssr(&["covariants", "--ssr", "BinaryCubics", "--vector", "[1,2,-1,3]", "--seed", "5"]);
    assert_eq!(c.stdout, d.stdout);
    assert_eq!(json(&c)["seed"], 5);
}

#[test]
fn bad_input_exits_with_one() {
    for args in [
        vec!["construct", "NoSuchThing"],
        vec!["construct", "BinaryCubics", "--field", "F4"],
        vec!["decompose", "--ssr", "BinaryCubics", "--vector", "[1,0]"],
        vec!["decompose", "--ssr", "BinaryCubics", "--vector", "[1,0,0,0]"],
        vec!["chart", "alpha", "--ssr", "BinaryCubics", "--lambda", "1", "--point", "{\"P\":[1,0,0,1],\"z\":2}"],
        vec!["verify", "--ssr", "BinaryCubics", "--field", "F7", "--samples"],
    ] {
        let out = ssr(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
    let path = fixture("BinaryCubics.json");
    let out = ssr(&["verify", "--ssr", path.to_str().unwrap(), "--field", "F7"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn broken_data_exits_with_two() {
    let mut v: Value = serde_json::from_slice(&std::fs::read(fixture("BinaryCubics.json")).unwrap()).unwrap();
    v["bmu"][0][3][0] = Value::String("1/1".into());
    v["bmu"][3][0][0] = Value::String("1/1".into());
    let text = v.to_string();
    let out = ssr(&["verify", "--ssr", &text]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err.get("failed").is_some());
    assert_eq!(json(&out)["defining_identity"], false);
}

#[test]
fn chart_round_trip_through_the_command_line() {
    let a = ssr(&["chart", "alpha", "--ssr", "BinaryCubics", "--lambda", "1", "--point", "{\"P\":[1,0,0,1],\"z\":3}"]);
    assert!(a.status.success());
    let v = json(&a);
    assert_eq!(v["h"], "1/1");
    let b = ssr(&["chart", "beta", "--ssr", "BinaryCubics", "--lambda", "1", "--point", &v["alpha"].to_string()]);
    assert!(b.status.success());
    assert_eq!(json(&b)["beta"], serde_json::json!({"P": ["1/1", "0/1", "0/1", "1/1"], "z": "3/1"}));
    let c = ssr(&[
        "chart", "act", "--ssr", "BinaryCubics", "--lambda", "1",
        "--point", "{\"P\":[1,0,0,1],\"z\":3}", "--scalar", "[2,0]",
    ]);
    assert_eq!(json(&c)["point"]["z"], "12/1");
}

#[test]
fn remaining_subcommands_answer() {
    let f = ssr(&["fiber", "--ssr", "BinaryCubics", "--field", "F7", "--vector", "[1,0,0,1]"]);
    assert!(f.status.success());
    assert_eq!(json(&f)["points"].as_array().unwrap().len(), 6);
    let s = ssr(&["syzygy", "--ssr", "BinaryCubics", "--vector", "[1,0,0,1]", "--point", "[1,1]"]);
    assert!(s.status.success());
    assert_eq!(json(&s)["classical"]["holds"], true);
    let q = ssr(&["decompose", "--ssr", "BinaryCubics", "--vector", "[1,0,-1,0]", "--lambda", "-1"]);
    assert!(q.status.success());
    assert_eq!(json(&q)["q"]["im"], "6/1");
    let dir = std::env::temp_dir().join(format!("ssr-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("c.json");
    let c = ssr(&["construct", "tautological", "--params", "{\"n\": 3}", "--out", out.to_str().unwrap()]);
    assert!(c.status.success() && c.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    assert_eq!(v["omega"]["rows"], 6);
    std::fs::remove_dir_all(&dir).unwrap();
}
