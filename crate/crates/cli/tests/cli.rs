use std::process::{Command, Output};

fn dacox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dacox")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = dacox(args);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&out)))
}

#[test]
fn decompose_examples() {
    let out = dacox(&["decompose", "--matrix", "0,-1;1,0", "--level", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("A B A"));
    let v = json(&["--json", "decompose", "--matrix", "1,0;0,1"]);
    assert_eq!(v["word"], "");
    assert_eq!(v["round_trip"], true);
    let v = json(&["--json", "decompose", "--matrix", "1,0;3,1", "--level", "3"]);
    assert_eq!(v["word"], "B");
}

#[test]
fn decompose_refuses_non_members_and_garbage() {
    assert_eq!(dacox(&["decompose", "--matrix", "1,0;1,1", "--level", "2"]).status.code(), Some(1));
    assert_eq!(dacox(&["decompose", "--matrix", "1,2;3"]).status.code(), Some(2));
    assert_eq!(dacox(&["decompose", "--matrix", "2,0;0,1"]).status.code(), Some(1));
}

#[test]
fn verify_suites_and_exit_codes() {
    let out = dacox(&["verify", "--family", "dddotC", "--rank", "2", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("all checks passed"));
    assert_eq!(dacox(&["verify", "--family", "nosuch", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(dacox(&["verify", "--family", "dddotB", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(dacox(&["verify", "--family", "dddotC", "--suite", "bogus"]).status.code(), Some(2));
    let full = dacox(&["verify", "--family", "ddotB3", "--suite", "appendixA"]);
    assert_eq!(full.status.code(), Some(0), "{}", stdout(&full));
    assert!(stdout(&full).contains("ddotB3"));
    assert_eq!(dacox(&["verify", "--family", "ddotB3", "--rank", "4"]).status.code(), Some(2));

    let v = json(&["--json", "verify", "--family", "dddotA", "--rank", "2", "--suite", "appendixA"]);
    let checks = v[0]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["id"], "skipped");
    assert!(checks[0]["witness"].as_str().unwrap().contains("simply-laced"));

    let v = json(&["--json", "verify", "--family", "dddotE", "--rank", "8", "--suite", "presentation"]);
    assert_eq!(v[0]["checks"][0]["id"], "skipped");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "verify", "--family", "ddotB2", "--suite", "all"];
    let first = dacox(&args);
    let second = dacox(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let suites: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(suites, ["presentation", "bernstein", "auto", "appendixA"]);
    assert!(v[0].get("elapsed_ms").is_none());
    let timed = json(&["--json", "verify", "--family", "ddotG2", "--suite", "auto", "--timing"]);
    assert!(timed[0]["elapsed_ms"].is_u64());
}

#[test]
fn involution_verdicts() {
    let v = json(&["--json", "involution", "--matrix", "1,1;-2,-1", "--family", "ddotB", "--rank", "3"]);
    assert_eq!(v["upsilon_member"], true);
    assert_eq!(v["involution"], true);
    let v = json(&["--json", "involution", "--matrix", "1,0;4,1", "--family", "ddotC", "--rank", "3"]);
    assert_eq!((v["upsilon_member"].as_bool(), v["involution"].as_bool()), (Some(false), Some(false)));
    let v = json(&["--json", "involution", "--matrix", "1,0;0,1", "--family", "ddotG2"]);
    assert_eq!((v["upsilon_member"].as_bool(), v["involution"].as_bool()), (Some(true), Some(true)));
    let out = dacox(&["involution", "--matrix", "1,0;1,1", "--family", "ddotG2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn params_and_normal_forms() {
    let v = json(&["params", "--system", "(Cn^,Cn)", "--n", "2"]);
    assert_eq!(v["final_count"], 5);
    assert_eq!(v["generic_count"], 5);
    let v = json(&["params", "--system", "A2n^(2)", "--n", "3"]);
    assert_eq!(v["final_count"], 3);
    assert_eq!(v["identifications"][0], "theta03 = t3");
    assert_eq!(dacox(&["params", "--system", "A2n^(2)"]).status.code(), Some(2));

    let v = json(&["--json", "nf", "--family", "dddotC", "--rank", "2", "--word", "C"]);
    assert_eq!(v["k"], "1");
    assert_eq!(v["w"].as_array().unwrap().len(), 0);
    assert_eq!(dacox(&["nf", "--family", "dddotC", "--rank", "2", "--word", "Bogus"]).status.code(), Some(2));
}

#[test]
fn diagram_output_is_stable() {
    let a = dacox(&["diagram", "--family", "ddotG2", "--dot"]);
    let b = dacox(&["diagram", "--family", "ddotG2", "--dot"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("graph \"ddotG2\""));
    let v = json(&["--json", "diagram", "--family", "dddotA", "--rank", "1"]);
    assert!(v.is_object());
}

#[test]
fn autocheck_with_matrix() {
    let out = dacox(&["autocheck", "--family", "dddotA", "--rank", "2", "--matrix", "-5,-4;4,3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("member of Υ: yes, involution: yes"));
}
