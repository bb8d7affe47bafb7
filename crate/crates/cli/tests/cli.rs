use std::path::PathBuf;
use std::process::{Command, Output};

use kalman_cli::parse_conic;
use kalman_core::Polynomial;

fn kalman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kalman")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kalman(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn sympower_golden() {
    assert_eq!(stdout(&["sympower", "--n", "3", "--d", "2"]), fixture("sympower_3_2.txt"));
}

#[test]
fn degree_table_golden() {
    assert_eq!(stdout(&["degrees", "--table"]), fixture("degrees.csv"));
}

#[test]
fn salmon_golden_and_round_trip() {
    let out = stdout(&["salmon", "--conic", "x2^2-x1*x3"]);
    assert_eq!(out, fixture("salmon_x2sq_x1x3.txt"));
    let summary: serde_json::Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
    assert_eq!(summary["term_count"], 138);
    assert_eq!(summary["degree"], 6);

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["salmon", "--conic", "x2^2-x1*x3", "--format", "json"])).unwrap();
    assert_eq!(json["g1"], "a13^2");
    let g2_text = json["g2"].as_str().unwrap();
    // The resultant lives over a11..a33 followed by x1..x3.
    let u = kalman_core::salmon::conic_universe(&parse_conic("x2^2-x1*x3").unwrap()).unwrap();
    let g2 = Polynomial::parse(&u, g2_text).unwrap();
    assert_eq!(g2.num_terms(), 138);
    assert_eq!(g2.to_text(), g2_text);
}

#[test]
fn audit_json_is_schema_valid_and_reproducible() {
    let args = ["audit", "--f", "x2^2 - x1*x3", "--trials", "5", "--seed", "42", "--format", "json"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let report: serde_json::Value = serde_json::from_str(&first).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&fixture("audit.schema.json")).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    assert!(compiled.is_valid(&report));
    assert_eq!(report["passed"], true);
    assert_eq!(report["entries"].as_array().unwrap().len(), 5);
    let bogus = serde_json::json!({"n": 3, "d": 2, "trials": 1, "passed": true, "entries": [{"assertion": "x"}]});
    assert!(!compiled.is_valid(&bogus));
}

#[test]
fn audit_csv_has_one_row_per_assertion() {
    let out = stdout(&["audit", "--f", "x1*x2 + 3*x2^2", "--trials", "3", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["assertion", "status", "witness_seed", "certificate"]);
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| &r[1] == "pass"));
    assert!(rows[0][3].starts_with("6 = 3 + 2 + 1"));
}

#[test]
fn witness_is_deterministic_and_checked() {
    let args = ["witness", "--f", "x2^2 - x1*x3", "--mu", "(1,1)", "--seed", "9"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let json: serde_json::Value = serde_json::from_str(&first).unwrap();
    for key in ["eigenpairs", "polarization_vanishes", "kalman_det_vanishes"] {
        assert_eq!(json["checks"][key], true);
    }
    assert_eq!(json["points"].as_array().unwrap().len(), 2);
    assert_eq!(json["D"].as_array().unwrap().len(), 3);

    let rnc = stdout(&["witness", "--f", "x2^2 - x1*x3", "--mu", "2", "--rnc", "--seed", "1"]);
    assert!(rnc.contains("\"kalman_det_vanishes\": true"));
}

#[test]
fn kalman_matrix_and_det() {
    let k = stdout(&["kalman-matrix", "--f", "x1*x2 + 3*x2^2"]);
    // N = 3 rows (one block of C·rho^i per power), 3 columns.
    assert_eq!(k.lines().count(), 3);
    assert!(k.lines().all(|l| l.split(" | ").count() == 3));
    let det: serde_json::Value =
        serde_json::from_str(&stdout(&["kalman-det", "--f", "x1*x2 + 3*x2^2", "--format", "json"])).unwrap();
    assert_eq!(det["degree"], 6);
}

#[test]
fn budget_and_chow() {
    let budget = stdout(&["degrees", "--n", "3", "--d", "2", "--format", "text"]);
    assert!(budget.contains("deg_det 30"));
    assert!(budget.contains("deg_sqrt_delta_sat 18"));
    let chow = stdout(&["chow", "--n", "3", "--s", "3"]);
    assert!(chow.lines().any(|l| l == "c~_3 = 6"));
    let table = stdout(&["degrees", "--table", "--format", "text"]);
    assert!(table.contains("# deg K(G(1,3)): computed 30, stated 12"));
}

#[test]
fn exit_codes() {
    assert_eq!(kalman(&["kalman-det", "--f", "x1^2 + y"]).status.code(), Some(2));
    assert_eq!(kalman(&["kalman-det", "--f", "x1^2 + * x2"]).status.code(), Some(2));
    assert_eq!(kalman(&["kalman-det", "--f", "x1^2 + x2"]).status.code(), Some(2));
    assert_eq!(kalman(&["sympower", "--n", "3"]).status.code(), Some(2));
    assert_eq!(kalman(&["witness", "--f", "x1^2 + x2^2", "--mu", "1,1,1"]).status.code(), Some(2));
    // A supplied point off V(f) leaves nothing to certify.
    assert_eq!(kalman(&["witness", "--f", "x2^2 - x1*x3", "--mu", "2", "--point", "1,1,2"]).status.code(), Some(1));
}
