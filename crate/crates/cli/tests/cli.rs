use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn compsearch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compsearch"))
        .args(args)
        .env_remove("COMPSEARCH_EXACT_MAX_N")
        .output()
        .expect("spawn compsearch")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_rejects_zero_width() {
    assert_eq!(code(&compsearch(&["verify", "--n", "0"])), 2);
}

#[test]
fn unknown_flag_is_usage_error() {
    assert_eq!(code(&compsearch(&["verify", "--n", "2", "--bogus"])), 2);
    assert_eq!(code(&compsearch(&["verify"])), 2);
}

#[test]
fn verify_all_oracles_n3_exact() {
    let out = compsearch(&[
        "verify",
        "--n",
        "3",
        "--backend",
        "exact",
        "--all-f",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["results"]["oracles_checked"], 256);
    assert_eq!(doc["results"]["oracles_matched"], 256);
    assert_eq!(doc["results"]["max_deviation"], 0.0);
}

#[test]
fn verify_single_float_oracle_n8() {
    let out = compsearch(&[
        "verify",
        "--n",
        "8",
        "--backend",
        "float",
        "--marked",
        "37",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert!(doc["results"]["max_deviation"].as_f64().unwrap() < 1e-12);
    assert_eq!(doc["parameters"]["backend"], "float");
}

#[test]
fn verify_all_f_refuses_sampled_sizes() {
    assert_eq!(
        code(&compsearch(&[
            "verify",
            "--n",
            "5",
            "--backend",
            "float",
            "--all-f"
        ])),
        2
    );
}

#[test]
fn verify_truth_table_oracle() {
    let out = compsearch(&[
        "verify",
        "--n",
        "2",
        "--truth-table",
        "0xa",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["parameters"]["oracle"], "0xa");
    assert_eq!(
        code(&compsearch(&[
            "verify",
            "--n",
            "2",
            "--truth-table",
            "0x1ff"
        ])),
        2
    );
}

#[test]
fn exact_cap_can_be_raised_by_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_compsearch"))
        .args(["verify", "--n", "5", "--backend", "exact", "--marked", "3"])
        .env("COMPSEARCH_EXACT_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(
        code(&compsearch(&[
            "verify",
            "--n",
            "5",
            "--backend",
            "exact",
            "--marked",
            "3"
        ])),
        2
    );
}

#[test]
fn sweep_n2_json_has_sixteen_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.json");
    let out = compsearch(&["sweep", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc = read_json(&path);
    assert_eq!(doc["results"]["verdicts"].as_array().unwrap().len(), 16);
    assert_eq!(doc["results"]["mode"], "exhaustive");
    assert_eq!(doc["parameters"]["seed"], 0);
    assert!(doc.to_string().find("elapsed").is_none());
}

#[test]
fn sweep_csv_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = compsearch(&[
        "sweep",
        "--n",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("oracle_id,exact_match,max_dev,tv_to_first")
    );
    assert_eq!(lines.count(), 16);
}

#[test]
fn sweep_exact_over_cap_is_usage_error() {
    assert_eq!(
        code(&compsearch(&["sweep", "--n", "5", "--backend", "exact"])),
        2
    );
}

#[test]
fn sweep_unwritable_path_is_io_error() {
    assert_eq!(
        code(&compsearch(&[
            "sweep",
            "--n",
            "1",
            "--out",
            "/nonexistent-dir/sub/r.json"
        ])),
        3
    );
}

#[test]
fn sampled_float_sweep_records_seed_and_rng() {
    let out = compsearch(&[
        "sweep",
        "--n",
        "5",
        "--backend",
        "float",
        "--seed",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    assert_eq!(doc["results"]["mode"], "sampled");
    assert_eq!(doc["results"]["seed"], 3);
    assert_eq!(doc["results"]["rng"], "ChaCha8Rng/seed_from_u64");
}

#[test]
fn trace_n1_prints_exact_amplitudes() {
    let out = compsearch(&["trace", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let psi3 = text.split("psi3").nth(1).unwrap();
    assert!(psi3.contains("|00⟩  (0+1√2)/2^1"));
    assert!(psi3.contains("|11⟩  (0+1√2)/2^1"));
    assert!(!text.contains("MISMATCH"));
}

#[test]
fn trace_json_carries_triples_and_flags() {
    let out = compsearch(&["trace", "--n", "1", "--format", "json"]);
    let doc = stdout_json(&out);
    let checkpoints = doc["results"]["checkpoints"].as_array().unwrap();
    assert_eq!(checkpoints.len(), 5);
    assert!(checkpoints.iter().all(|c| c["matches"] == true));
    let psi1 = &checkpoints[1]["simulated"];
    assert_eq!(psi1.as_array().unwrap().len(), 4);
    assert_eq!(psi1[0]["amplitude"]["triple"], serde_json::json!([1, 0, 1]));
}

#[test]
fn trace_rejects_large_n() {
    assert_eq!(code(&compsearch(&["trace", "--n", "5"])), 2);
}

#[test]
fn trace_csv_is_usage_error() {
    assert_eq!(
        code(&compsearch(&["trace", "--n", "1", "--format", "csv"])),
        2
    );
}

#[test]
fn grover_compare_n3() {
    let out = compsearch(&[
        "grover-compare",
        "--n",
        "3",
        "--marked",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc = stdout_json(&out);
    let r = &doc["results"];
    assert_eq!(r["devries_prob"], 0.125);
    assert!((r["grover_prob"].as_f64().unwrap() - 0.9453).abs() < 5e-5);
    assert_eq!(
        r["devries_prob_exact"]["triple"],
        serde_json::json!([1, 0, 3])
    );
    assert_eq!(doc["parameters"]["seed"], 0);
    assert_eq!(doc["parameters"]["samples"], 100_000);
}

#[test]
fn grover_compare_n2() {
    let doc = stdout_json(&compsearch(&[
        "grover-compare",
        "--n",
        "2",
        "--marked",
        "1",
        "--format",
        "json",
        "--samples",
        "0",
    ]));
    assert_eq!(doc["results"]["devries_prob"], 0.25);
    assert!((doc["results"]["grover_prob"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(doc["results"].get("empirical").is_none());
}

#[test]
fn grover_compare_invalid_marked_index() {
    assert_eq!(
        code(&compsearch(&[
            "grover-compare",
            "--n",
            "3",
            "--marked",
            "8"
        ])),
        2
    );
    assert_eq!(
        code(&compsearch(&[
            "grover-compare",
            "--n",
            "3",
            "--marked",
            "1,2"
        ])),
        2
    );
    assert_eq!(code(&compsearch(&["grover-compare", "--n", "3"])), 2);
}

#[test]
fn grover_compare_is_seed_deterministic() {
    let args = [
        "grover-compare",
        "--n",
        "4",
        "--marked",
        "9",
        "--samples",
        "5000",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let a = compsearch(&args);
    let b = compsearch(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["results"]["empirical"]["samples"], 5000);
}
