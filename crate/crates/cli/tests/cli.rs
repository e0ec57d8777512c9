use std::path::PathBuf;
use std::process::{Command, Output};

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("bmw-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn dims_e8() {
    let o = bmw(&["dims", "--type", "E8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("41803776000"), "{}", stdout(&o));
}

#[test]
fn verify_a2_all_passes() {
    let o = bmw(&["verify", "--type", "A2", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_a2_dimension_suite() {
    assert_eq!(bmw(&["verify", "--type", "A2", "--suite", "a2_dimension"]).status.code(), Some(0));
    assert_eq!(bmw(&["verify", "--type", "A3", "--suite", "a2_dimension"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(bmw(&["roots", "--type", "X9"]).status.code(), Some(2));
    assert_eq!(bmw(&["reduce", "--type", "A3", "--word", "g1 g9"]).status.code(), Some(2));
    assert_eq!(bmw(&["reduce", "--type", "A3", "--word", "g1 x"]).status.code(), Some(2));
    assert_eq!(bmw(&["verify", "--type", "E6", "--suite", "braid", "--mode", "generic"]).status.code(), Some(2));
    assert_eq!(bmw(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_word_names_the_token() {
    let o = bmw(&["reduce", "--type", "A3", "--word", "g1 q2"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("q2"), "{err}");
}

#[test]
fn e6_auto_mode_uses_points() {
    let o = bmw(&["verify", "--type", "E6", "--suite", "braid", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["mode"].as_str().unwrap().starts_with("specialized("));
    assert_eq!(v["passed"], true);
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["roots", "--type", "D5", "--json"][..],
        &["reduce", "--type", "A3", "--word", "g1 g2 g1 g2 e3 G1", "--json"],
        &["dims", "--type", "E8", "--json"],
        &["tcoeff", "--type", "D4", "--node", "2", "--root", "1,2,1,1", "--json"],
        &["verify", "--type", "D4", "--suite", "table1", "--json"],
    ] {
        let out = stdout(&bmw(args));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(out, again, "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["matrices", "--type", "A3", "--json"];
    assert_eq!(bmw(&args).stdout, bmw(&args).stdout);
    let args = ["verify", "--type", "D4", "--suite", "all", "--json"];
    assert_eq!(bmw(&args).stdout, bmw(&args).stdout);
}

#[test]
fn tcoeff_specializes() {
    let o = bmw(&["tcoeff", "--type", "D4", "--node", "2", "--root", "1,2,1,1", "--specialize", "l=5/7,r=3/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("45/16"), "{}", stdout(&o));
}

#[test]
fn matrices_json_to_file() {
    let dir = scratch("matrices");
    let path = dir.join("a3.json");
    let o = bmw(&["matrices", "--type", "A3", "--theta", "lk", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["type"], "A3");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn cache_dir_is_filled_and_reused() {
    let dir = scratch("cache");
    let args = ["tcoeff", "--type", "D4", "--node", "2", "--root", "1,1,1,1", "--json", "--cache-dir", dir.to_str().unwrap()];
    let first = bmw(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(dir.join("tcoeff-D4.json").exists());
    assert_eq!(first.stdout, bmw(&args).stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
