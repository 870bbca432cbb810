//! Golden tests for the binary: outputs must be byte-identical to direct
//! library calls, and the exit-code contract (0 ok / 1 check failed /
//! 2 usage) must hold.

use std::process::{Command, Output};

use emdb::bitstr::BitString;
use emdb::emgen::{generate, EmMode};
use emdb::enumerate::all_debruijn_cycles;
use emdb::graph::{export_dot, message_of};

fn emdb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emdb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = emdb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    emdb(args).status.code().expect("no signal")
}

#[test]
fn generate_em_matches_library() {
    assert_eq!(stdout_of(&["generate", "em", "--count", "15"]), "010011010111000\n");
    let lib = generate(&BitString::parse("0110").unwrap(), 64, EmMode::Identity);
    assert_eq!(
        stdout_of(&["generate", "em", "--count", "64", "--seed", "0110"]),
        format!("{lib}\n")
    );
}

#[test]
fn generate_em_n_variants() {
    let lib = generate(&BitString::new(), 32, EmMode::Buffered(2));
    assert_eq!(
        stdout_of(&["generate", "em-n", "--buffer", "2", "--count", "32"]),
        format!("{lib}\n")
    );
    let out = emdb(&["generate", "em-n", "--buffer", "3", "--debruijn"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0001111010110010000\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("111011001000"));
}

#[test]
fn generate_prefer_one_and_lfsr() {
    assert_eq!(stdout_of(&["generate", "prefer-one", "--order", "3"]), "0011101000\n");
    // 1 + x + x^3 is primitive: period 7
    let s = stdout_of(&["generate", "lfsr", "--poly", "1101", "--count", "14"]);
    let s = s.trim();
    assert_eq!(s.len(), 14);
    assert_eq!(s[0..7], s[7..14]);
    assert!(s[0..7].contains('1') && s[0..7].contains('0'));
}

#[test]
fn analyze_helix_verdicts() {
    let yes: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze", "helix", "--order", "4", "1111000010011010111",
    ]))
    .unwrap();
    assert_eq!(yes["is_double_helix"], serde_json::json!(true));
    assert_eq!(yes["component_count"], serde_json::json!(3));
    let no: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze", "helix", "--order", "4", "1111000011010010111",
    ]))
    .unwrap();
    assert_eq!(no["is_double_helix"], serde_json::json!(false));
}

#[test]
fn analyze_message_matches_library() {
    let lib = message_of(&BitString::parse("0011101000").unwrap(), 3).unwrap();
    let got: serde_json::Value =
        serde_json::from_str(&stdout_of(&["analyze", "message", "--order", "3", "0011101000"]))
            .unwrap();
    assert_eq!(got["message"], serde_json::json!(lib.to_string()));
}

#[test]
fn analyze_period_report() {
    let got: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze", "period", "--buffer", "2", "--seed", "0011101000", "--cap", "1000",
    ]))
    .unwrap();
    assert_eq!(got["preperiod"], serde_json::json!(0));
    assert_eq!(got["period"], serde_json::json!(8));
    assert_eq!(got["unit_is_debruijn"], serde_json::json!(true));
}

#[test]
fn analyze_census_and_match() {
    let census: serde_json::Value =
        serde_json::from_str(&stdout_of(&["analyze", "census", "--width", "3", "000"])).unwrap();
    assert_eq!(census["000"]["count"], serde_json::json!(1));
    let report: serde_json::Value = serde_json::from_str(&stdout_of(&[
        "analyze", "match", "--seed", "0110", "--horizon", "500",
    ]))
    .unwrap();
    assert_eq!(report["violations"], serde_json::json!([]));
    assert!(report["record"]["record_times"].is_object());
    assert!(report["cover"]["cover_times"].is_object());
}

#[test]
fn enumerate_outputs() {
    assert_eq!(stdout_of(&["enumerate", "--order", "4", "--count-only"]), "16\n");
    assert_eq!(
        stdout_of(&["enumerate", "--order", "5", "--helices-only", "--count-only"]),
        "736\n"
    );
    assert_eq!(
        stdout_of(&["enumerate", "--order", "5", "--count-only", "--parallel", "3"]),
        "2048\n"
    );
    let lines = stdout_of(&["enumerate", "--order", "3"]);
    let lib: Vec<String> = all_debruijn_cycles(3)
        .unwrap()
        .iter()
        .map(|c| c.to_string())
        .collect();
    assert_eq!(lines.lines().collect::<Vec<_>>(), lib);
}

#[test]
fn export_dot_matches_library() {
    let lib = export_dot(3, Some(&BitString::parse("0011101000").unwrap()), false).unwrap();
    assert_eq!(
        stdout_of(&["export", "dot", "--order", "3", "--highlight", "0011101000"]),
        lib
    );
}

#[test]
fn verify_commands_pass() {
    assert_eq!(exit_code(&["verify", "thm4.2", "--max-order", "6"]), 0);
    assert_eq!(exit_code(&["verify", "prop3.1", "--max-order", "4"]), 0);
    assert_eq!(exit_code(&["verify", "thm3.5", "--max-order", "5"]), 0);
    let out = emdb(&["verify", "thm4.2", "--max-order", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], serde_json::json!(true));
}

#[test]
fn exit_codes() {
    // usage errors -> 2
    assert_eq!(exit_code(&["generate", "em"]), 2);
    assert_eq!(exit_code(&["analyze", "helix", "--order", "4", "012"]), 2);
    assert_eq!(exit_code(&["enumerate", "--order", "6", "--count-only"]), 2);
    assert_eq!(exit_code(&["export", "dot", "--order", "9"]), 2);
    assert_eq!(exit_code(&["verify", "nonsense"]), 2);
    // honest check failure -> 1: one output digit cannot separate seeds
    assert_eq!(
        exit_code(&["verify", "uniqueness", "--max-seed", "2", "--horizon", "1", "--pairs", "5"]),
        1
    );
}
