use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclonum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclonum"))
        .args(args)
        .env(key, val)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("cyclonum-cli-{}-{name}", std::process::id()))
}

#[test]
fn table_csv_for_f5() {
    let o = run(&["table", "--p", "5", "--e", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "0,1\n1,1\n");
}

#[test]
fn table_json_sums_to_q_minus_2() {
    let o = run(&["table", "--p", "3", "--n", "4", "--e", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let total: u64 = v["counts"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()))
        .sum();
    assert_eq!(total, 79);
}

#[test]
fn norm_of_one_minus_x() {
    let o = run(&["norm", "--k", "3", "--coeffs", "1,-1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["norm"], "3");
    assert_eq!(v["circulant_norm"], "3");
    assert_eq!(v["prime_bound"]["bound"], "3");
    assert_eq!(v["general_bound"]["holds"], true);
}

#[test]
fn coefficient_count_must_equal_k() {
    let o = run(&["norm", "--k", "3", "--coeffs", "1,-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exactly k = 3"));
    let o = run(&["transfer", "--p", "7", "--e", "2", "--coeffs", "1,1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rootsum_classifies_reference_sum() {
    let o = run(&[
        "rootsum", "--m", "15", "--terms", "-1:5,-1:10,1:3,1:6,1:9,1:12", "--op", "classify",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["result"], "similar-R3R5");
    let o = run(&["rootsum", "--m", "6", "--terms", "1:0,1:3", "--op", "vanishing"]);
    assert_eq!(json(&o)["result"], true);
}

#[test]
fn transfer_geometric_sum() {
    let o = run(&["transfer", "--p", "7", "--e", "2", "--coeffs", "1,1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!((v["fq_zero"].clone(), v["c_zero"].clone()), (Value::Bool(true), Value::Bool(true)));
    assert_eq!(v["norm_divisible"], true);
}

#[test]
fn fermat_example_passes() {
    let o = run(&["fermat", "--p", "1301", "--e", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["conclusion_holds"], true);
    assert_eq!(v["pairs_checked"], 1300 * 1300);
}

#[test]
fn fermat_counterexample_exit_code() {
    let o = run(&["fermat", "--p", "37", "--e", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["conclusion_holds"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["table", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--p", "6", "--e", "2"]).status.code(), Some(2));
    assert_eq!(run(&["fermat", "--p", "21", "--e", "2"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn memory_cap_exit_3() {
    let o = run_env(&["table", "--p", "1009", "--e", "4"], "CYCLONUM_MEMORY_CAP", "100");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let one = run(&["verify", "--qmax", "600", "--kmax", "8"]);
    let four = run(&["verify", "--qmax", "600", "--kmax", "8", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert!(!one.stdout.is_empty());
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn verify_writes_csv_and_reuses_cache() {
    let (csv, cache) = (temp("summary.csv"), temp("cache.jsonl"));
    let _ = std::fs::remove_file(&cache);
    let args = [
        "verify",
        "--qmax",
        "200",
        "--kmax",
        "6",
        "--csv",
        csv.to_str().unwrap(),
        "--cache",
        cache.to_str().unwrap(),
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("p,n,q,e,k,"));
    assert_eq!(lines.len() - 1, String::from_utf8_lossy(&first.stdout).lines().count());
    let second = run(&args);
    assert_eq!(second.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains(&format!("cached {}", lines.len() - 1)));
    std::fs::remove_file(csv).unwrap();
    std::fs::remove_file(cache).unwrap();
}

#[test]
fn verify_reports_literal_counterexample() {
    let o = run(&["verify", "--qmax", "1100", "--kmax", "20", "--pmax", "1100", "--keep-going"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q = 1093, e = 78, a-a"));
}
