use std::process::{Command, Output};

fn crosscap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscap")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn single_claim_is_one_json_line() {
    let out = crosscap(&["verify", "claim", "indices_g3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("{\"claim\":\"indices_g3\",\"paper_ref\":"));
    assert!(text.contains("\"status\":\"pass\",\"witness\":\"(28, 36)\"}"));
}

#[test]
fn unknown_claim_is_a_usage_error() {
    let out = crosscap(&["verify", "claim", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown claim"));
    assert!(out.stdout.is_empty());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(crosscap(&["verify", "all", "--max-genus", "9"]).status.code(), Some(2));
    assert_eq!(crosscap(&["verify", "all", "--output", "xml"]).status.code(), Some(2));
    assert_eq!(crosscap(&["show", "group", "--name", "o-alpha", "--g", "3"]).status.code(), Some(2));
    assert_eq!(crosscap(&["show", "rep", "--which", "phi-minus", "--g", "2", "--format", "matrix"]).status.code(), Some(2));
    assert_eq!(crosscap(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_all_json_is_deterministic_and_ordered() {
    let args = ["verify", "all", "--max-genus", "3", "--output", "json"];
    let first = crosscap(&args);
    let second = crosscap(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let ids: Vec<String> = text
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            assert_ne!(v["status"], "fail", "{l}");
            assert!(v.get("ms").is_none());
            v["claim"].as_str().unwrap().to_string()
        })
        .collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(text.contains("\"claim\":\"indices_g4\",\"paper_ref\""));
    assert!(text.lines().any(|l| l.contains("indices_g4") && l.contains("\"status\":\"skipped\"")));
}

#[test]
fn runtimes_are_opt_in() {
    let text = stdout(&crosscap(&["verify", "claim", "arithmetic_guard", "--ms"]));
    assert!(text.trim_end().ends_with('}'));
    assert!(text.contains(",\"ms\":"));
}

#[test]
fn every_table_corruption_fails_the_run() {
    for table in ["phi2-minus", "phi1-alpha", "phi2-plus"] {
        let out = crosscap(&["verify", "all", "--max-genus", "2", "--output", "json", "--corrupt", table]);
        assert_eq!(out.status.code(), Some(1), "{table}");
        let key = format!("\"claim\":\"tables_{}\"", table.replace('-', "_"));
        let line = stdout(&out).lines().find(|l| l.contains(&key)).unwrap().to_string();
        assert!(line.contains("\"status\":\"fail\""), "{line}");
    }
    assert_eq!(crosscap(&["verify", "all", "--corrupt", "phi7"]).status.code(), Some(2));
}

#[test]
fn show_commands() {
    let out = crosscap(&["show", "tables", "phi2-minus"]);
    assert_eq!(stdout(&out), "T1 (1 2)\nT2 (2 3)\nT3 (3 4)\nT4 (4 5)\nT0 (5 6)\n");
    assert_eq!(stdout(&crosscap(&["show", "group", "--name", "o-minus", "--g", "2"])), "order 120 index 6\n");
    assert_eq!(stdout(&crosscap(&["show", "group", "--name", "sp", "--g", "2"])), "order 720 index 1\n");
    let rels = stdout(&crosscap(&["show", "relations", "--h", "7", "--flavor", "T"]));
    assert!(rels.contains("braid_with_inverse((UT5U^-1), T5)"));
    let eps = stdout(&crosscap(&["show", "rep", "--which", "epsilon", "--g", "2", "--h", "6", "--format", "matrix"]));
    assert_eq!(eps.lines().next(), Some("T0"));
    let phi = stdout(&crosscap(&["show", "rep", "--which", "phi-minus", "--g", "3"]));
    assert_eq!(phi.lines().count(), 8);
}
