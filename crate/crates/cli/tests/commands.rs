use std::io::Write;
use std::process::Command;

use serde_json::{json, Value};
use tempfile::NamedTempFile;

const THETA: &str = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"unicyclizer":[[1,-1,0]]}"#;
const TORSION: &str = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"unicyclizer":[[2,-2,0]]}"#;
const LOOP: &str = r#"{"vertices":1,"edges":[[0,0]]}"#;

fn document(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

/// Runs `hx` and returns (exit code, parsed stdout, raw stdout).
fn hx(text: &str, args: &[&str]) -> (i32, Value, String) {
    let f = document(text);
    let out = Command::new(env!("CARGO_BIN_EXE_hx"))
        .arg(args[0])
        .arg(f.path())
        .args(&args[1..])
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value, stdout)
}

#[test]
fn lambda_on_theta() {
    let (code, _, raw) = hx(THETA, &["lambda"]);
    assert_eq!(code, 0);
    assert_eq!(raw.trim(), r#"{"lambda":[-1,-1,2],"k":3,"tau":1}"#);
    let (_, v, _) = hx(TORSION, &["lambda"]);
    assert_eq!(v, json!({"lambda": [-2, -2, 4], "k": 3, "tau": 2}));
}

#[test]
fn lambda_output_is_stable() {
    let first = hx(THETA, &["lambda"]).2;
    for _ in 0..3 {
        assert_eq!(hx(THETA, &["lambda"]).2, first);
    }
}

#[test]
fn raw_sign_depends_on_basis() {
    let rebased = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"unicyclizer":[[1,-1,0]],"basis_tree":[1]}"#;
    let (_, normalized, _) = hx(rebased, &["lambda"]);
    assert_eq!(normalized["lambda"], json!([-1, -1, 2]));
    let (_, raw, _) = hx(rebased, &["lambda", "--raw-sign"]);
    let l = raw["lambda"].as_array().unwrap();
    assert!(l == &vec![json!(-1), json!(-1), json!(2)] || l == &vec![json!(1), json!(1), json!(-2)]);
}

#[test]
fn winding_values() {
    let (code, v, _) = hx(THETA, &["winding", "--chain", "0,0,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "2/3");
    assert_eq!(v["method"], "extended");
    let (_, v, _) = hx(THETA, &["winding", "--chain", "-1,0,1"]);
    assert_eq!(v["value"], "1/1");
    assert_eq!(v["method"], "determinant");
    let (_, v, _) = hx(TORSION, &["winding", "--chain", "-1,0,1"]);
    assert_eq!(v["value"], "2/1");
    let (_, v, _) = hx(THETA, &["winding", "--chain", "-1,-1,2"]);
    assert_eq!(v["value"], "2/1");
}

#[test]
fn trees_and_cycletrees() {
    let (_, v, _) = hx(THETA, &["trees", "--list"]);
    assert_eq!(v, json!({"k": 3, "trees": [[0], [1], [2]]}));
    let (_, v, _) = hx(THETA, &["trees"]);
    assert_eq!(v, json!({"k": 3}));
    let (_, v, _) = hx(THETA, &["cycletrees"]);
    assert_eq!(v["count"], 3);
    assert_eq!(v["cycletrees"][0], json!({"edges": [0, 1], "cycle": [1, -1, 0], "winding": 0}));
    let (_, v, _) = hx(LOOP, &["cycletrees"]);
    assert_eq!(v["count"], 1);
}

#[test]
fn homology_per_dimension() {
    let (_, v, _) = hx(TORSION, &["homology", "--dim", "1"]);
    assert_eq!(v, json!({"dim": 1, "rank": 1, "torsion": [2]}));
    let (_, v, _) = hx(THETA, &["homology"]);
    assert_eq!(v["homology"].as_array().unwrap().len(), 3);
    assert_eq!(v["homology"][0], json!({"dim": 0, "rank": 1, "torsion": []}));
}

#[test]
fn split_on_theta() {
    let (_, v, _) = hx(THETA, &["split", "--edge", "2"]);
    assert_eq!(v["lambda_with"], json!([-1, -1, 2]));
    assert_eq!(v["lambda_without"], json!([0, 0, 0]));
    assert_eq!(v["winding_difference"], 0);
    let (_, v, _) = hx(TORSION, &["split", "--edge", "0"]);
    assert_eq!(v["winding_difference"], 2);
    let (code, _, _) = hx(THETA, &["split"]);
    assert_eq!(code, 2);
}

#[test]
fn validate_reports_axioms() {
    let (code, v, _) = hx(THETA, &["validate"]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    let dependent = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"unicyclizer":[[1,-1,0],[2,-2,0]]}"#;
    let (code, v, _) = hx(dependent, &["validate"]);
    assert_eq!(code, 1);
    assert_eq!(v["axioms"]["independent_columns"], false);
    let open = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"unicyclizer":[[1,1,0]]}"#;
    let (code, v, _) = hx(open, &["validate"]);
    assert_eq!(code, 1);
    assert_eq!(v["axioms"]["columns_are_cycles"], false);
    let tree = r#"{"vertices":2,"edges":[[0,1]]}"#;
    let (code, v, _) = hx(tree, &["validate"]);
    assert_eq!(code, 1);
    assert_eq!(v["axioms"]["homology_rank_one"], false);
    let (code, _, _) = hx(LOOP, &["validate"]);
    assert_eq!(code, 0);
}

#[test]
fn faces_are_filtered() {
    let doubled = r#"{"vertices":2,"edges":[[0,1],[0,1],[0,1]],"faces":[[1,-1,0],[1,-1,0]]}"#;
    let (code, v, _) = hx(doubled, &["lambda"]);
    assert_eq!(code, 0);
    assert_eq!(v["lambda"], json!([-1, -1, 2]));
}

#[test]
fn verify_runs_checks() {
    let (code, v, _) = hx(THETA, &["verify", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["overall"], true);
    let (code, v, _) = hx(TORSION, &["verify", "--check", "theorem_a", "--check", "hodge", "--seed", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 9);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().all(|n| n.starts_with("theorem_a/") || n.starts_with("hodge/")));
    let (code, _, _) = hx(THETA, &["verify", "--check", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn input_errors_exit_with_two() {
    let (code, v, _) = hx("{\"vertices\": 2,\n \"edges\": [[0,1]", &["lambda"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("line 2"));
    let (code, v, _) = hx(r#"{"vertices":2,"edges":[[0,1],[0,1]],"unicyclizer":[[1,-1,0]]}"#, &["lambda"]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("column 0"));
    let (code, _, _) = hx(r#"{"vertices":2,"edges":[[0,5]]}"#, &["trees"]);
    assert_eq!(code, 2);
    let (code, _, _) = hx(r#"{"vertices":2,"edges":[],"extra":1}"#, &["trees"]);
    assert_eq!(code, 2);
    let (code, _, _) = hx(THETA, &["winding", "--chain", "1,2"]);
    assert_eq!(code, 2);
    let (code, _, _) = hx(THETA, &["bogus"]);
    assert_eq!(code, 2);
    let (code, _, _) = hx(r#"{"vertices":1,"edges":[[0,0],[0,0],[0,0]]}"#, &["lambda", "--cap", "2"]);
    assert_eq!(code, 2);
}
