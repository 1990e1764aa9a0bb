//! End-to-end tests of the command-line interface: flags, exit codes,
//! output formats, and the documented JSON schema.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spectral-gauge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn compute_xi_petersen_table() {
    let out = run(&["compute", "--graph", "gen:petersen", "--bound", "xi", "--matrix", "adjacency"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("value       4.0000000"), "{text}");
}

#[test]
fn compute_theta_c5() {
    let out = run(&["compute", "--graph", "gen:cycle:5", "--bound", "theta"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("2.2360679"), "{}", stdout(&out));
}

#[test]
fn compute_chif_k4() {
    let out = run(&["compute", "--graph", "gen:complete:4", "--bound", "chif"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("value       4.0000000"));
}

#[test]
fn json_schema_and_roundtrip() {
    let out = run(&[
        "compute",
        "--graph",
        "gen:petersen",
        "--bound",
        "hoffman",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["graph"]["n"], 10);
    assert_eq!(parsed["graph"]["m"], 15);
    assert_eq!(parsed["bound"], "hoffman");
    assert_eq!(parsed["matrix"], "adjacency");
    let value = parsed["value"].as_f64().unwrap();
    assert!((value - 2.5).abs() <= 1e-9);
    assert!(parsed["gap"].is_number());
    assert!(parsed["iterations"].is_number());
    // Emitted floats parse back to the same value (shortest round-trip).
    let text = stdout(&out);
    let reparsed: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(parsed, reparsed);
}

#[test]
fn json_deterministic_across_runs() {
    let args = [
        "compute",
        "--graph",
        "gen:erdos_renyi:8:0.5:3",
        "--bound",
        "xi",
        "--matrix",
        "random:5",
        "--seed",
        "9",
        "--format",
        "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b), "identical cfg + seed must be byte-identical");
}

#[test]
fn luz_reports_inf_as_string() {
    // Negated adjacency of a regular graph makes the Luz CQP unbounded.
    let dir = std::env::temp_dir().join("spectral_gauge_cli_test_inf");
    std::fs::create_dir_all(&dir).unwrap();
    let matrix_path = dir.join("neg_c5.txt");
    let mut entries = vec![vec![0.0f64; 5]; 5];
    for i in 0..5usize {
        let j = (i + 1) % 5;
        entries[i][j] = -1.0;
        entries[j][i] = -1.0;
    }
    let text: String = entries
        .iter()
        .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n");
    std::fs::write(&matrix_path, text).unwrap();

    let matrix_arg = format!("file:{}", matrix_path.display());
    let out = run(&[
        "compute",
        "--graph",
        "gen:cycle:5",
        "--bound",
        "luz",
        "--matrix",
        &matrix_arg,
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["value"], "inf");
    assert_eq!(parsed["certificate"]["type"], "recession_direction");
}

#[test]
fn gen_emits_dimacs() {
    let out = run(&["gen", "petersen"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("p edge 10 15\n"));
    assert_eq!(text.lines().count(), 16);

    let c7 = run(&["gen", "cycle:7"]);
    assert!(stdout(&c7).starts_with("p edge 7 7\n"));

    // Kneser(5,2) is the Petersen graph.
    let kneser = run(&["gen", "kneser:5:2"]);
    assert_eq!(stdout(&kneser), text);
}

#[test]
fn usage_errors_exit_one() {
    let bad_flag = run(&["compute", "--graph", "gen:petersen"]);
    assert_eq!(bad_flag.status.code(), Some(1));

    let bad_family = run(&["gen", "dodecahedron"]);
    assert_eq!(bad_family.status.code(), Some(1));

    let missing_file = run(&["compute", "--graph", "/nonexistent/g.col", "--bound", "xi"]);
    assert_eq!(missing_file.status.code(), Some(1));

    let capacity = run(&["compute", "--graph", "gen:complete:40", "--bound", "alpha"]);
    assert_eq!(capacity.status.code(), Some(1));
}

#[test]
fn verify_suite_passes_and_sorts_output() {
    let out = run(&["verify", "--suite", "theta", "--graph", "gen:cycle:5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let names: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS theta:") || l.starts_with("FAIL theta:"))
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted, "check names must print in sorted order");
}

#[test]
fn verify_json_format() {
    let out = run(&[
        "verify",
        "--suite",
        "sandwich",
        "--graph",
        "gen:erdos_renyi:7:0.4:7",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["suite"], "sandwich");
    assert_eq!(parsed["all_passed"], true);
    assert!(parsed["checks"].as_array().unwrap().len() >= 3);
}

#[test]
fn env_var_overrides_vertex_guard() {
    let out = Command::new(env!("CARGO_BIN_EXE_spectral-gauge"))
        .args(["gen", "complete:10"])
        .env("SPECTRAL_GAUGE_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "guard lowered below the order must reject");

    let ok = Command::new(env!("CARGO_BIN_EXE_spectral-gauge"))
        .args(["gen", "complete:10"])
        .env("SPECTRAL_GAUGE_MAX_N", "32")
        .output()
        .unwrap();
    assert!(ok.status.success());
}

#[test]
fn weights_inline_and_ratio_bound() {
    let out = run(&[
        "compute",
        "--graph",
        "gen:cycle:5",
        "--bound",
        "alpha",
        "--weights",
        "inline:2,1,1,1,1",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(parsed["value"].as_f64().unwrap(), 3.0);

    let ratio = run(&["compute", "--graph", "gen:cycle:5", "--bound", "ratio"]);
    assert!(ratio.status.success());
    assert!(stdout(&ratio).contains("2.2360680"));
}
