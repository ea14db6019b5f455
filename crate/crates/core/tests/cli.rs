use std::path::Path;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn pgit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgit"))
        .args(args)
        .output()
        .expect("pgit runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pgit(args);
    assert!(
        out.status.success(),
        "pgit {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn schema(name: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(format!("{name}.schema.json"));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&doc).expect("schema compiles")
}

fn assert_valid(name: &str, doc: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(doc) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("{name} output does not match its schema: {msgs:?}\n{doc:#}");
}

#[test]
fn info_c2() {
    let v = json(&["info", "C2"]);
    assert_eq!(v["iota"], serde_json::json!([3, 4]));
    assert_eq!(v["dimX"], 4);
    assert_eq!(v["weylOrder"], 8);
    assert_eq!(v["census"]["curves"], 1);
    assert_eq!(v["census"]["surfaces"], 3);
}

#[test]
fn info_a1_suppresses_census() {
    let v = json(&["info", "A1"]);
    assert!(v["census"].is_null());
    assert!(v["notes"][0].as_str().unwrap().contains("dim X = 1"));
}

#[test]
fn info_product_type() {
    let v = json(&["info", "A3xG2"]);
    let m: Vec<i64> = v["minValues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["minValue"].as_i64().unwrap())
        .collect();
    assert_eq!(m, [3, 6]);
}

#[test]
fn strata_c2_divisor() {
    let v = json(&["strata", "C2", "--weight", "3,1"]);
    assert_eq!(v["codim"], 1);
    assert_eq!(v["dimUnstable"], 3);
    let divisor = v["strata"]
        .as_array()
        .unwrap()
        .iter()
        .any(|s| s["dim"] == 3);
    assert!(divisor);
}

#[test]
fn chambers_c2_counts() {
    let v = json(&["chambers", "C2"]);
    assert_eq!(v["counts"]["chambers"], 2);
    assert_eq!(v["counts"]["walls"], 1);
    let wall = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["kind"] == "wall-face")
        .unwrap();
    assert_eq!(wall["rep"], serde_json::json!([2, 1]));
}

#[test]
fn mult_ray_c2() {
    let t = stdout(&["mult", "C2", "--ray", "1,0", "--kmax", "8"]);
    let m: Vec<&str> = t
        .lines()
        .skip_while(|l| !l.starts_with("k "))
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(m, ["0", "0", "0", "1", "0", "0", "0", "1"]);
}

#[test]
fn mult_weight_a2() {
    let v = json(&["mult", "A2", "--weight", "2,2"]);
    assert_eq!(v["mlambda"], 1);
    assert_eq!(v["dim"], 27);
    assert_eq!(v["character"]["0"], 5);
    assert_eq!(v["character"]["2"], 4);
}

#[test]
fn exit_codes() {
    // Usage and parse errors.
    assert_eq!(pgit(&["info", "Q3"]).status.code(), Some(1));
    assert_eq!(pgit(&["info", "D3"]).status.code(), Some(1));
    assert_eq!(
        pgit(&["strata", "C2", "--weight", "3,x"]).status.code(),
        Some(1)
    );
    assert_eq!(pgit(&["mult", "A2"]).status.code(), Some(1));
    assert_eq!(pgit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        pgit(&["info", "A2", "--guard-weyl", "0"]).status.code(),
        Some(1)
    );

    // Refusals: one diagnostic line on stderr.
    for args in [
        &["strata", "A2", "--weight", "1,0"][..],
        &["strata", "A2", "--weight", "1,2,3"],
        &["cones", "C2", "1"],
        &["cones", "A3", "1"],
        &["census", "A1"],
        &["chambers", "E8"],
        &["chambers", "B5"],
        &["strata", "A3", "--weight", "1,1,1", "--guard-weyl", "10"],
    ] {
        let out = pgit(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(pgit(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["chambers", "G2"][..],
        &["classify", "B3", "--weight", "1,2,3"],
        &["selftest", "--seed", "11", "--cases", "2"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn selftest_prints_seed() {
    let v = json(&["selftest", "--seed", "42", "--cases", "2"]);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["passed"], true);
    let t = stdout(&[
        "selftest", "--seed", "42", "--cases", "1", "--format", "tsv",
    ]);
    assert!(t.starts_with("# seed\t42\n"));
}

#[test]
fn every_json_document_matches_its_schema() {
    let cases: &[(&str, &[&str])] = &[
        ("info", &["info", "C2"]),
        ("info", &["info", "A1"]),
        ("info", &["info", "E8"]),
        ("strata", &["strata", "C2", "--weight", "3,1"]),
        ("strata", &["strata", "A1xA1", "--weight", "1,2"]),
        ("classify", &["classify", "C2", "--weight", "1,1"]),
        ("classify", &["classify", "B3", "--weight", "1,1,1"]),
        ("chambers", &["chambers", "C2"]),
        ("chambers", &["chambers", "A1"]),
        ("chambers", &["chambers", "A1xA1"]),
        ("mult", &["mult", "A3", "--weight", "1,0,1"]),
        ("ray", &["mult", "C2", "--ray", "0,1", "--format", "json"]),
        (
            "ray",
            &[
                "mult", "C2", "--ray", "1,0", "--kmax", "2", "--format", "json",
            ],
        ),
        ("cones", &["cones", "B3", "1"]),
        ("census", &["census", "F4"]),
        ("selftest", &["selftest", "--cases", "1"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &json(args));
    }
}

#[test]
fn schemas_reject_malformed_documents() {
    let s = schema("chambers");
    assert!(!s.is_valid(&serde_json::json!({"hyperplanes": [], "classes": []})));
    let s = schema("strata");
    assert!(!s.is_valid(&serde_json::json!({
        "lambda": [1], "dimX": 1, "strata": [{"w": "t1", "len": 0, "dim": 1}],
        "dimUnstable": 1, "codim": 0, "movable": false, "semistableNonempty": true
    })));
}

#[test]
fn tsv_and_table_formats() {
    let tsv = stdout(&["strata", "A2", "--weight", "1,1", "--format", "tsv"]);
    assert!(tsv.contains("# codim\t1\n"));
    assert!(
        tsv.contains("w\tlen\tdim\ne\t0\t1\ns1\t1\t2\ns2\t1\t2\n"),
        "{tsv}"
    );
    let table = stdout(&["chambers", "A2", "--format", "table"]);
    assert!(table
        .lines()
        .any(|l| l.starts_with("chambers") && l.ends_with('1')));
}
