use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const EXAMPLE: &str = "[0,3,6,2,1,13,10,11,14,12,9,8,5,4,7]";

fn bhr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhr")).args(args).output().unwrap()
}

fn bhr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bhr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = bhr(&full);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)));
    assert_eq!(v["schema"], 1, "{args:?}");
    (code(&o), v)
}

/// Feeds an emitted certificate back through `verify --cert -`.
fn reverify(cert: &Value) {
    let o = bhr_stdin(&["verify", "--cert", "-"], &cert.to_string());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_path_against_multiset() {
    let o = bhr(&["verify", "--path", "[0,5,1,2,6,3,4]", "--multiset", "1^2 2 3^3"]);
    assert_eq!(code(&o), 0);
    let o = bhr(&["verify", "--path", "[0,5,1,2,6,3,4]", "--multiset", "1^3 2 3^2"]);
    assert_eq!(code(&o), 5);
    let o = bhr(&["verify", "--path", "[0,1,2]", "--multiset", "1^3"]);
    assert_eq!(code(&o), 5);
}

#[test]
fn bound_formula() {
    let o = bhr(&["bound", "4^3 5^2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "19");
    assert_eq!(code(&bhr(&["bound", "1 4"])), 1);
}

#[test]
fn solve_136_round_trips() {
    let (c, v) = json(&["solve", "1^3 3^18 6^10", "--trace"]);
    assert_eq!(c, 0);
    assert_eq!(v["status"], "solved");
    let cert = &v["certificate"];
    assert_eq!(cert["multiset"], "1^3 3^18 6^10");
    assert!(cert["trace"].as_array().unwrap().iter().any(|s| s["step"] == "x2x_swap"));
    reverify(cert);

    let o = bhr(&["solve", "1^3 3^18 6^10", "--trace"]);
    assert!(stdout(&o).contains("x2x_swap"));
}

#[test]
fn solve_exit_codes() {
    assert_eq!(code(&bhr(&["solve", "2^5"])), 2);
    assert_eq!(code(&bhr(&["solve", "1 5^10 6^10 7^10"])), 3);
    let (c, v) = json(&["solve", "1 5^10 6^10 7^10", "--fallback", "--seed", "3"]);
    assert_eq!(c, 0);
    assert_eq!(v["status"], "search_fallback");
    assert_eq!(v["seed"], 3);
    reverify(&v["certificate"]);
    let (c, v) = json(&["solve", "3^6"]);
    assert_eq!(c, 0);
    assert!(v["reason"].as_str().unwrap().starts_with("external-theorem region"));
}

#[test]
fn admissible_verdicts() {
    let (c, v) = json(&["admissible", "1^2 2 3^3"]);
    assert_eq!(c, 0);
    assert_eq!(v["admissibility"]["verdict"], "admissible");
    let (c, v) = json(&["admissible", "2^5"]);
    assert_eq!(c, 2);
    assert_eq!(v["admissibility"]["divisor"], 2);
}

#[test]
fn search_and_oracle() {
    let (c, v) = json(&["search", "1^2 2 3^3", "--seed", "5"]);
    assert_eq!(c, 0);
    assert_eq!(v["seed"], 5);
    reverify(&v["certificate"]);
    assert_eq!(code(&bhr(&["search", "1^3 2^4 3^5 4^7", "--restarts", "1", "--steps", "1"])), 4);
    assert_eq!(code(&bhr(&["search", "2^5"])), 2);

    let (c, v) = json(&["oracle", "3^6"]);
    assert_eq!(c, 0);
    assert_eq!(v["verdict"], "found");
    assert_eq!(code(&bhr(&["oracle", "2^5"])), 2);
    assert_eq!(code(&bhr(&["oracle", "1^3 2^4 3^2", "--budget", "2"])), 4);
    assert_eq!(code(&bhr(&["oracle", "1^20"])), 1);
}

#[test]
fn growth_commands() {
    let o = bhr(&["grow", "--path", "[6,4,3,0,7,1,5,2,8]", "--x", "3", "--m", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["path"], serde_json::json!([9, 7, 6, 3, 0, 10, 1, 4, 8, 5, 2, 11]));

    let cases: [&[&str]; 5] = [
        &["grow", "--path", EXAMPLE, "--schedule", "1*2 4*1"],
        &["splice", "--path", EXAMPLE, "--perfect", "[0,2,1,3]"],
        &["even-grow", "--path", EXAMPLE, "--y", "2", "--z", "2"],
        &["x2x", "--path", EXAMPLE, "--x", "2", "--i", "1"],
        &["perf-grow", "--path", EXAMPLE, "--x", "2", "--parts", "[[0,1],[0,1]]"],
    ];
    for args in cases {
        let (c, v) = json(args);
        assert_eq!(c, 0, "{args:?}");
        reverify(&v["certificate"]);
    }

    assert_eq!(code(&bhr(&["grow", "--path", EXAMPLE, "--x", "3", "--m", "0"])), 1);
    assert_eq!(code(&bhr(&["splice", "--path", EXAMPLE, "--perfect", "[0,1,3,2]"])), 1);
}

#[test]
fn growth_from_certificate_file() {
    let (_, v) = json(&["family", "--x", "8", "--basic", "x+1"]);
    let cert = v["certificate"].to_string();
    let o = bhr_stdin(&["--json", "grow", "--cert", "-", "--x", "8"], &cert);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["certificate"]["multiset"], "1^7 8^17");
}

#[test]
fn family_constructions() {
    let (c, v) = json(&["family", "--x", "8", "--basic", "x+1"]);
    assert_eq!(c, 0);
    assert_eq!(
        v["certificate"]["path"],
        serde_json::json!([1, 9, 0, 16, 8, 7, 15, 14, 6, 5, 13, 12, 4, 3, 11, 10, 2])
    );
    let (c, v) = json(&["family", "--x", "13", "--b", "21"]);
    assert_eq!(c, 0);
    reverify(&v["certificate"]);
    let (c, _) = json(&["family", "--x", "9", "--residue", "4"]);
    assert_eq!(c, 0);
    assert_eq!(code(&bhr(&["family", "--x", "8", "--b", "30"])), 1);
    assert_eq!(code(&bhr(&["family", "--x", "8", "--basic", "3x"])), 1);
}

#[test]
fn seeds_subcommands() {
    let o = bhr(&["seeds", "check"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("rows verify"));
    let (c, v) = json(&["seeds", "dump", "--table", "u123-small"]);
    assert_eq!(c, 0);
    assert_eq!(v["tables"][0]["entries"].as_array().unwrap().len(), 4);
    assert_eq!(code(&bhr(&["seeds", "dump", "--table", "nope"])), 1);
}

#[test]
fn sweep_small() {
    let (c, v) = json(&["sweep", "--vmax", "7", "--definitive", "--necessity"]);
    assert_eq!(c, 0);
    let rows = v["sweep"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5]["admissible_count"], 28);
    assert_eq!(v["necessity"][4]["inadmissible"], 4);
}

#[test]
fn certificate_tampering_is_a_verification_failure() {
    let (_, v) = json(&["solve", "1^4 2^9 3^17 4"]);
    let mut cert = v["certificate"].clone();
    cert["multiset"] = Value::String("1^5 2^8 3^17 4".into());
    let o = bhr_stdin(&["verify", "--cert", "-"], &cert.to_string());
    assert_eq!(code(&o), 5);
    let o = bhr_stdin(&["verify", "--cert", "-"], "not json");
    assert_eq!(code(&o), 1);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&bhr(&[])), 1);
    assert_eq!(code(&bhr(&["frobnicate"])), 1);
    assert_eq!(code(&bhr(&["verify", "--path", "[0,1", "--multiset", "1"])), 1);
    assert_eq!(code(&bhr(&["admissible", "1^"])), 1);
    assert_eq!(code(&bhr(&["--help"])), 0);
    let (c, v) = json(&["bound", "x"]);
    assert_eq!(c, 1);
    assert!(v["error"].as_str().unwrap().contains("multiset"));
}
