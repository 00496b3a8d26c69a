use std::process::{Command, Output};

use serde_json::Value;

fn tate_mirror(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tate-mirror")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report on stdout")
}

fn statuses(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap().to_string()).collect()
}

#[test]
fn mirror_map_at_order_one_is_the_nodal_cubic() {
    let out = tate_mirror(&["mirror-map", "--order", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = report(&out);
    let coeffs: Vec<&str> =
        ["a1", "a2", "a3", "a4", "a6"].iter().map(|l| v["data"][format!("normalized/{l}")][0].as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "0", "0", "0", "0"]);
}

#[test]
fn mirror_map_at_order_eight_reports_the_tate_mismatch() {
    let out = tate_mirror(&["mirror-map", "--order", "8", "--emit-relation"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["tate-curve"]);
    assert_eq!(v["data"]["relation/x'^3"][1], "-8");
}

#[test]
fn dehn_table_passes() {
    let out = tate_mirror(&["dehn-table"]);
    assert_eq!(out.status.code(), Some(0));
    let s = statuses(&report(&out));
    assert_eq!(s.len(), 8);
    assert!(s.iter().all(|x| x == "pass"));
}

#[test]
fn empty_lattice_suite() {
    let out = tate_mirror(&["verify-lattice", "--max-degree", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(report(&out)["checks"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_flag_exits_two() {
    assert_eq!(tate_mirror(&["dehn-table", "--nope"]).status.code(), Some(2));
    assert_eq!(tate_mirror(&["lie-brackets", "--char", "7"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical() {
    let a = tate_mirror(&["verify-theta", "--order", "4", "--max-degree", "6"]);
    let b = tate_mirror(&["verify-theta", "--order", "4", "--max-degree", "6"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = report(&tate_mirror(&["dehn-table"]));
    assert!(plain.get("duration_ms").is_none());
    let timed = report(&tate_mirror(&["--timing", "dehn-table"]));
    assert!(timed["duration_ms"].is_u64());
}

#[test]
fn hochschild_and_brackets_pass() {
    for ch in ["0", "2", "3", "5"] {
        let out = tate_mirror(&["hochschild", "--char", ch, "--window", "8,-12"]);
        assert_eq!(out.status.code(), Some(0), "char {ch}");
    }
    for ch in ["0", "2", "3"] {
        let out = tate_mirror(&["lie-brackets", "--char", ch]);
        assert_eq!(out.status.code(), Some(0), "char {ch}");
        assert_eq!(report(&out)["parameters"]["sign"], "+1");
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("tate-mirror-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = tate_mirror(&["--out", path.to_str().unwrap(), "dehn-table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "dehn-table");
    std::fs::remove_dir_all(dir).unwrap();
}
