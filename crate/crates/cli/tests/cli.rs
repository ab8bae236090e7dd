use std::process::{Command, Output};

use serde_json::Value;

fn vbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vbraid"))
        .args(args)
        .env_remove("VBRAID_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = vbraid(&all);
    (serde_json::from_slice(&o.stdout).unwrap(), o.status.code().unwrap())
}

#[test]
fn present_counts() {
    let (v, code) = json(&["present", "--group", "vb", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    assert_eq!(v["relators"].as_array().unwrap().len(), 5);
    let (w, _) = json(&["present", "--group", "wb", "--n", "4"]);
    assert!(w["relators"].as_array().unwrap().len() > v["relators"].as_array().unwrap().len());
}

#[test]
fn rank_one_is_a_usage_error() {
    let o = vbraid(&["present", "--group", "vb", "--n", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(vbraid(&["verify", "--lemma", "L7"]).status.code(), Some(0));
    let (v, code) = json(&["verify", "--lemma", "L5_2", "--n", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["mismatches"], 5);
    assert_eq!(vbraid(&["verify", "--lemma", "L99"]).status.code(), Some(2));
}

#[test]
fn verify_all_aggregates_lemmas() {
    let (v, _) = json(&["verify", "--lemma", "ALL", "--m-range", "-1..1", "--n", "5"]);
    let lemmas: Vec<&str> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lemma"].as_str().unwrap())
        .collect();
    assert_eq!(lemmas, vbraid::catalog::LEMMAS);
    for r in v["reports"].as_array().unwrap() {
        for c in r["cases"].as_array().unwrap() {
            for key in ["params", "engine_word", "paper_word", "tier", "verdict"] {
                assert!(c.get(key).is_some(), "missing {key}");
            }
        }
    }
}

#[test]
fn empty_m_range_warns() {
    let o = vbraid(&["verify", "--lemma", "ALL", "--m-range", "1..0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn tietze_counts() {
    let (v, code) = json(&["tietze", "--script", "VBN_REDUCE", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["generator_count"], 7);
    let (v, _) = json(&["tietze", "--script", "VB3_REDUCE"]);
    assert!(v["generator_count"].is_null());
    assert_eq!(vbraid(&["tietze", "--script", "NOPE"]).status.code(), Some(2));
}

#[test]
fn abelianize_fields() {
    let (v, code) = json(&["abelianize", "--group", "vb", "--n", "3", "--window", "-3..3"]);
    assert_eq!(code, 0);
    assert_eq!(v["torsion"], serde_json::json!([3, 3, 3]));
    assert_eq!(v["free_rank"], 7);
    assert_eq!(v["window"], serde_json::json!([-3, 3]));
    assert_eq!(
        vbraid(&["abelianize", "--group", "vb", "--n", "3", "--window", "2..1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn derive_compares_with_stated_relations() {
    let o = vbraid(&[
        "derive",
        "--group",
        "vb",
        "--n",
        "4",
        "--window",
        "-1..1",
        "--compare-paper",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 MISMATCH"));
}

#[test]
fn out_dir_receives_the_result() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_vbraid"))
        .args(["--format", "json", "present", "--group", "wb", "--n", "3"])
        .env("VBRAID_OUT_DIR", dir.path())
        .output()
        .unwrap();
    let written = std::fs::read(dir.path().join("present-wb3.json")).unwrap();
    assert_eq!(written, o.stdout);
}

#[test]
fn report_is_deterministic_and_matches_the_schema() {
    let args = [
        "--format",
        "json",
        "report",
        "--tau-samples",
        "30",
        "--snf-samples",
        "30",
    ];
    let a = vbraid(&args);
    let b = vbraid(&args);
    assert_eq!(a.stdout, b.stdout);
    let report: Value = serde_json::from_slice(&a.stdout).unwrap();
    let schema: Value = serde_json::from_str(include_str!("../schema/report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    let rows: Vec<&str> = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["claim"].as_str().unwrap())
        .collect();
    assert_eq!(rows[0], "Theorem 1.1");
    assert_eq!(rows.len(), 8);
    assert_eq!(
        a.status.code(),
        Some(
            if report["criteria"]
                .as_array()
                .unwrap()
                .iter()
                .all(|c| c["passed"] == true)
            {
                0
            } else {
                1
            }
        )
    );
}
