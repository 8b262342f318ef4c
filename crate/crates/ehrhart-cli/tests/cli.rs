//! End-to-end tests of the `ehrhart` binary: subcommands, exit codes,
//! output determinism, and the full verification run.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ehrhart"))
}

fn write_fixture(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ehrhart-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn reeve13_json() -> PathBuf {
    write_fixture(
        "reeve13.json",
        r#"{"ambient_dim": 3, "points": [[0,0,0],[1,0,0],[0,1,0],[1,1,13]]}"#,
    )
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn count_command_reports_count_and_strategy() {
    let file = reeve13_json();
    let out = bin()
        .args(["count"])
        .arg(&file)
        .args(["--n", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], serde_json::json!(22));
    assert_eq!(v["strategy"], "simplex-parallelepiped");

    let seg = write_fixture("seg3.json", r#"{"ambient_dim": 1, "points": [[0],[3]]}"#);
    let out = bin()
        .args(["count"])
        .arg(&seg)
        .args(["--n", "2", "--naive"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], serde_json::json!(7));
    assert_eq!(v["strategy"], "naive-box");

    let square = write_fixture(
        "square.json",
        r#"{"ambient_dim": 2, "points": [[0,0],[1,0],[0,1],[1,1]]}"#,
    );
    let out = bin()
        .args(["count"])
        .arg(&square)
        .args(["--n", "1"])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], serde_json::json!(4));
}

#[test]
fn poly_command_formats() {
    let p4 = write_fixture(
        "p4.json",
        r#"{"ambient_dim": 4, "points": [[0,0,0,0],[1,0,0,0],[0,1,0,0],[0,0,1,0],[1,0,26,27]]}"#,
    );
    let out = bin()
        .args(["poly"])
        .arg(&p4)
        .args(["--format", "table"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "9/8 n^4 + 31/12 n^3 + 3/8 n^2 - 1/12 n + 1"
    );

    let out = bin()
        .args(["poly"])
        .arg(&p4)
        .args(["--format", "latex"])
        .output()
        .unwrap();
    assert_eq!(
        stdout(&out).trim(),
        "\\frac{9}{8}n^{4}+\\frac{31}{12}n^{3}+\\frac{3}{8}n^{2}-\\frac{1}{12}n+1"
    );

    let out = bin().args(["poly"]).arg(&p4).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["polynomial"],
        serde_json::json!(["1", "-1/12", "3/8", "31/12", "9/8"])
    );
}

#[test]
fn delta_and_roots_commands() {
    let file = reeve13_json();
    let out = bin().args(["delta"]).arg(&file).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["delta"], serde_json::json!([1, 0, 12, 0]));
    assert_eq!(v["normalized_volume"], serde_json::json!(13));

    let reeve100 = write_fixture(
        "reeve100.json",
        r#"{"ambient_dim": 3, "points": [[0,0,0],[1,0,0],[0,1,0],[1,1,100]]}"#,
    );
    let out = bin().args(["roots"]).arg(&reeve100).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["positive_real_roots"], serde_json::json!(2));
    assert_eq!(v["has_positive_real_root"], serde_json::json!(true));

    let out = bin().args(["roots"]).arg(&file).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["positive_real_roots"], serde_json::json!(0));
}

#[test]
fn facets_command_lists_rows() {
    let file = reeve13_json();
    let out = bin().args(["facets"]).arg(&file).output().unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equalities"].as_array().unwrap().len(), 0);
    assert_eq!(v["inequalities"].as_array().unwrap().len(), 4);
}

#[test]
fn family_theorem_main_auto() {
    let out = bin()
        .args(["family", "theorem-main", "--d", "4", "--m", "auto"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["kind"], "theorem-main");
    assert_eq!(v["trace"][0], "m = 19");
    assert_eq!(v["dimension"], 4);
    // both free coefficients negative at the minimal m
    assert_eq!(v["polynomial"][1], "-1/6");
    assert_eq!(v["polynomial"][2], "-1/6");
}

#[test]
fn family_single_negative_trace() {
    let out = bin()
        .args(["family", "single-negative", "--d", "6", "--k", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let trace: Vec<String> = v["trace"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect();
    assert_eq!(trace.iter().filter(|s| s.starts_with("lift")).count(), 2);
    assert!(trace.contains(&"lift r=1 m=5".to_string()));
    assert!(trace.contains(&"lift r=2 m=108".to_string()));
}

#[test]
fn family_catalogue_pattern() {
    let out = bin()
        .args(["family", "catalogue", "--d", "6", "--negatives", "2,3,4"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v["pretty"],
        "180 n^6 + 207 n^5 - 39 n^4 - 250/3 n^3 - 14 n^2 + 13/3 n + 1"
    );
    // polytope JSON is emitted for round-tripping
    assert!(v["polytope"]["points"].as_array().unwrap().len() >= 8);
}

#[test]
fn min_m_command() {
    let out = bin().args(["min-m", "--d", "5"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["min_m"], serde_json::json!(37));
}

#[test]
fn invalid_inputs_exit_one() {
    let bad = write_fixture("bad.json", r#"{"ambient_dim": 2, "points": [[1,2,3]]}"#);
    let out = bin()
        .args(["count"])
        .arg(&bad)
        .args(["--n", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());

    let malformed = write_fixture("malformed.json", "not json");
    let out = bin().args(["poly"]).arg(&malformed).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().args(["family", "nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    // guard trips on a huge naive box
    let seg = write_fixture(
        "seg1000.json",
        r#"{"ambient_dim": 1, "points": [[0],[1000]]}"#,
    );
    let out = bin()
        .args(["count"])
        .arg(&seg)
        .args(["--n", "1000", "--naive", "--guard", "100"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let file = reeve13_json();
    let run = || {
        let out = bin()
            .args(["poly"])
            .arg(&file)
            .args(["--no-timing", "--jobs", "2"])
            .output()
            .unwrap();
        stdout(&out)
    };
    assert_eq!(run(), run());
}

/// The whole suite, end to end, through the CLI; exits 0 within the
/// stated ceiling.
#[test]
fn verify_paper_passes_end_to_end() {
    let report = std::env::temp_dir().join(format!("verify-report-{}.json", std::process::id()));
    let start = Instant::now();
    let out = bin()
        .args(["verify-paper", "--no-timing", "--report"])
        .arg(&report)
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    let text = stdout(&out);
    assert!(out.status.success(), "verify-paper failed:\n{text}");
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    assert!(text.contains("checks passed"));
    assert!(!text.contains("FAIL"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["failed"], serde_json::json!(0));
    assert!(json["total_checks"].as_u64().unwrap() >= 100);
    // timing suppressed
    assert!(json.get("total_millis").is_none());
    std::fs::remove_file(&report).ok();
}
