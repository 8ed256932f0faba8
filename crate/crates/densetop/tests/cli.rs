//! Black-box tests of the installed binary: exit codes, report schemas,
//! environment handling, and determinism at the process level.

use std::process::{Command, Output};

fn densetop(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_densetop"));
    cmd.args(args).env_remove("DENSETOP_MAX_N");
    cmd
}

fn run(args: &[&str]) -> Output {
    densetop(args).output().expect("binary spawns")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is one JSON document")
}

#[test]
fn exit_code_zero_on_verified_sweeps_and_claims() {
    assert_eq!(run(&["verify", "t1", "--n", "3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "list"]).status.code(), Some(0));
    assert_eq!(run(&["check", "named:sierpinski"]).status.code(), Some(0));
    assert_eq!(run(&["enumerate", "--n", "2"]).status.code(), Some(0));
    // A false claim verdict is still a successful evaluation.
    let out = run(&["sym", "H_space", "dense_ultraconnected"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("false"));
}

#[test]
fn exit_code_two_on_usage_and_input_errors() {
    assert_eq!(run(&["verify", "frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["check", "named:moebius"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-subcommand"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--property", "a &", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["search", "--property", "frobnicated", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["sym", "moebius_M", "compact"]).status.code(), Some(2));
    assert_eq!(run(&["sym", "cofinite_N", "frobnicated"]).status.code(), Some(2));
    // Usage errors speak on stderr, not stdout.
    let out = run(&["verify", "frobnicate"]);
    assert!(stdout_of(&out).is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn exit_code_three_when_a_cap_is_exceeded() {
    assert_eq!(run(&["enumerate", "--n", "9"]).status.code(), Some(3));
    assert_eq!(
        run(&["sym", "ray_R", "--cross-validate", "--radius", "100"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["check", "named:discrete:40"]).status.code(), Some(3));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn enumeration_cap_env_var_is_honored_and_validated() {
    let out = densetop(&["enumerate", "--n", "4"])
        .env("DENSETOP_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // The variable can only lower the bound, never lift the hard cap.
    let out = densetop(&["enumerate", "--n", "9"])
        .env("DENSETOP_MAX_N", "99")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = densetop(&["enumerate", "--n", "2"])
        .env("DENSETOP_MAX_N", "pancake")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_report_has_the_pinned_keys() {
    let out = run(&["verify", "t1", "--n", "4", "--format", "json", "--elide-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    for key in ["theorem", "n", "mode", "checked", "failures", "notes", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(v["theorem"], "t1");
    assert_eq!(v["n"], 4);
    assert_eq!(v["checked"], 355);
    assert_eq!(v["elapsed_ms"], 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_writes_the_json_sidecar() {
    let path = std::env::temp_dir().join("densetop-cli-test-report.json");
    let out = run(&[
        "verify",
        "t22",
        "--n",
        "3",
        "--json",
        path.to_str().unwrap(),
        "--elide-timing",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["theorem"], "t22");
    assert_eq!(v["checked"], 29);
    std::fs::remove_file(&path).ok();
}

#[test]
fn json_errors_are_machine_readable() {
    let out = run(&["check", "named:moebius", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert!(v["error"].as_str().unwrap().contains("moebius"));
}

/// Counts CSV cells, treating commas inside double-quoted cells as content.
fn csv_cell_count(line: &str) -> usize {
    let mut cells = 1;
    let mut quoted = false;
    for c in line.chars() {
        match c {
            '"' => quoted = !quoted,
            ',' if !quoted => cells += 1,
            _ => {}
        }
    }
    cells
}

#[test]
fn check_csv_has_a_header_and_one_row() {
    let out = run(&["check", "named:sierpinski", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout_of(&out);
    let lines: Vec<&str> = body.trim_end().lines().collect();
    assert_eq!(lines.len(), 2, "expected header + row, got: {body}");
    assert_eq!(csv_cell_count(lines[0]), csv_cell_count(lines[1]));
}

#[test]
fn check_profile_flags_are_reported() {
    let out = run(&["check", "named:sierpinski", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["dense_connected"], true);
    assert_eq!(v["dense_ultraconnected"], true);
    let out = run(&["check", "named:h_analogue", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["ultraconnected"], true);
    assert_eq!(v["dense_ultraconnected"], false);
    assert!(!v["dense_ultraconnected_witness"].is_null());
}

#[test]
fn check_loads_spaces_from_files() {
    let path = std::env::temp_dir().join("densetop-cli-test-space.json");
    std::fs::write(&path, r#"{"n":2,"opens":[[],[1],[0,1]]}"#).unwrap();
    let out = run(&["check", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["dense_connected"], true);
    // A malformed family is an input error, not a panic.
    std::fs::write(&path, r#"{"n":2,"opens":[[],[1]]}"#).unwrap();
    assert_eq!(
        run(&["check", path.to_str().unwrap()]).status.code(),
        Some(2)
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn search_reports_witnesses_that_replay() {
    let out = run(&[
        "search",
        "--property",
        "ultraconnected & !dense_ultraconnected",
        "--n",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["witness_n"], 3);
    let witness = v["witness"].to_string();
    let path = std::env::temp_dir().join("densetop-cli-test-witness.json");
    std::fs::write(&path, witness).unwrap();
    let replay = run(&["check", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(replay.status.code(), Some(0));
    let profile = json_of(&replay);
    assert_eq!(profile["ultraconnected"], true);
    assert_eq!(profile["dense_ultraconnected"], false);
    std::fs::remove_file(&path).ok();
}

#[test]
fn search_misses_say_so_without_failing() {
    let out = run(&[
        "search",
        "--property",
        "dense_connected & !hyperconnected",
        "--n",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("none at this scale"));
}

#[test]
fn sym_cross_validation_exits_by_verdict() {
    let out = run(&["sym", "window_Z", "--cross-validate", "--radius", "16", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["disagreements"].as_array().unwrap().len(), 0);
    assert!(v["checks"].as_u64().unwrap() > 0);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["verify", "p0", "--n", "3", "--format", "json", "--elide-timing"],
        vec!["check", "named:sum:sierpinski+discrete:2", "--format", "json"],
        vec!["enumerate", "--n", "3", "--format", "csv"],
        vec!["sym", "opc_discrete", "compact", "--trace"],
        vec!["verify", "t3", "--order", "4", "--format", "csv", "--elide-timing"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(stdout_of(&a), stdout_of(&b), "{args:?}");
        assert_eq!(a.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn jobs_flag_is_accepted_without_changing_output() {
    let one = run(&["verify", "t1", "--n", "3", "--format", "json", "--elide-timing"]);
    let four = run(&["verify", "t1", "--n", "3", "--format", "json", "--elide-timing", "--jobs", "4"]);
    assert_eq!(stdout_of(&one), stdout_of(&four));
}
