use std::process::{Command, Output};

use serde_json::Value;

fn icecount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icecount"))
        .args(args)
        .env_remove("ICECOUNT_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--json", "--no-meta"]);
    let out = icecount(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (v, out.status.code().unwrap())
}

fn result<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["name"] == name)
        .unwrap_or_else(|| panic!("no result {name}"))
}

fn failed_checks(report: &Value) -> Vec<String> {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn count_methods_agree() {
    let mut values = Vec::new();
    for method in ["backtrack", "rowdp", "decompose"] {
        let (r, code) = json(&["count", "-p", "2,2,0", "-m", method]);
        assert_eq!(code, 0);
        values.push(result(&r, "A_lambda")["value"].clone());
    }
    assert!(values.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(values[0], 23);
}

#[test]
fn count_formula_auto() {
    let (r, _) = json(&["count", "-p", "0,0,0", "-m", "formula-auto"]);
    assert_eq!(result(&r, "A_lambda")["value"], 7);
    let (r, _) = json(&["count", "-p", "2,1,0", "-m", "formula-auto"]);
    assert_eq!(result(&r, "A_lambda")["value"], 26);
    // shifted hook
    let (r, _) = json(&["count", "-p", "5,2,2", "-m", "formula-auto"]);
    let (e, _) = json(&["count", "-p", "5,2,2", "-m", "rowdp"]);
    assert_eq!(
        result(&r, "A_lambda")["value"],
        result(&e, "A_lambda")["value"]
    );

    let out = icecount(&["count", "-p", "3,1,1,0", "-m", "formula-auto"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a hook"));
}

#[test]
fn count_default_method_is_row_dp() {
    let (r, _) = json(&["count", "-p", "1,0"]);
    assert_eq!(r["inputs"]["method"], "rowdp");
    assert_eq!(result(&r, "A_lambda")["value"], 3);
}

#[test]
fn exit_codes() {
    assert_eq!(icecount(&["count", "-p", "1,x"]).status.code(), Some(2));
    assert_eq!(icecount(&["count", "-p", "1,2"]).status.code(), Some(2));
    assert_eq!(
        icecount(&["count", "-p", "70", "-m", "rowdp"])
            .status
            .code(),
        Some(3)
    );
    let out = icecount(&[
        "count",
        "-p",
        "0,0,0,0,0",
        "-m",
        "backtrack",
        "--budget-nodes",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let (err, code) = json(&["count", "-p", "70", "-m", "rowdp"]);
    assert_eq!(code, 3);
    assert_eq!(err["kind"], "resource");
}

#[test]
fn verify_pathcounts_and_lemma13() {
    let (r, code) = json(&["verify", "pathcounts", "--r-max", "7", "--c-max", "7"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 49);
    let (r, code) = json(&["verify", "lemma13", "--m-max", "10", "--n-max", "10"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 110);
}

#[test]
fn verify_green_suites() {
    for suite in [
        "engines",
        "lshape",
        "decomposition",
        "hooks",
        "staircase",
        "refined-asm",
        "shift",
    ] {
        let (r, code) = json(&["verify", suite]);
        assert_eq!(code, 0, "{suite}: {:?}", failed_checks(&r));
        assert!(!r["checks"].as_array().unwrap().is_empty());
        assert!(r["warnings"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_table1_flags_the_misprinted_row() {
    let (r, code) = json(&["verify", "table1"]);
    assert_eq!(r["checks"].as_array().unwrap().len(), 6);
    assert_eq!(failed_checks(&r), ["R_4"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_refined_vsasm_symmetry_rows_fail() {
    let (r, code) = json(&["verify", "refined-vsasm", "--formula-n-max", "4"]);
    assert_eq!(code, 1);
    let failed = failed_checks(&r);
    assert_eq!(failed.len(), 3);
    assert!(failed.iter().all(|n| n.contains("n - i + 1")));
}

#[test]
fn verify_skips_with_warning_under_budget() {
    let (r, code) = json(&[
        "verify",
        "engines",
        "--n-max",
        "3",
        "--l-max",
        "2",
        "--budget-nodes",
        "40",
    ]);
    assert_eq!(code, 0);
    assert!(!r["warnings"].as_array().unwrap().is_empty());
}

#[test]
fn poly_examples() {
    let (r, code) = json(&["poly", "--tail", "0", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(result(&r, "A_lambda")["value"]["text"], "λ₁ + 2");
    let (r, _) = json(&["poly", "--tail", "0,0", "--n", "3"]);
    assert_eq!(result(&r, "A_lambda")["value"]["text"], "λ₁^2 + 6*λ₁ + 7");
    let (r, code) = json(&["poly", "--tail", "1,0", "--n", "3"]);
    assert_eq!(code, 0);
    let at2 = r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "λ₁ = 2")
        .unwrap();
    assert_eq!(at2["actual"], 26);
    assert_eq!(
        icecount(&["poly", "--tail", "0", "--n", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn render_examples() {
    let (r, code) = json(&["render", "-p", "0,0,0", "-i", "0"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"][0]["actual"], true);
    let state = &result(&r, "state")["value"];
    assert_eq!(state["rows"], 3);
    assert_eq!(state["vertical"].as_array().unwrap().len(), 4);

    let (r, _) = json(&["render", "-p", "0", "-i", "0"]);
    assert_eq!(result(&r, "state")["value"]["cols"], 1);

    let out = icecount(&["render", "-p", "0,0,0", "-i", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0-6"));
}

#[test]
fn json_is_deterministic_across_runs_and_threads() {
    let run = |threads: &str| {
        icecount(&[
            "verify",
            "decomposition",
            "--n-max",
            "3",
            "--json",
            "--no-meta",
            "--threads",
            threads,
        ])
        .stdout
    };
    let a = run("1");
    assert_eq!(a, run("1"));
    assert_eq!(a, run("4"));
}

#[test]
fn threads_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_icecount"))
        .args([
            "count",
            "-p",
            "2,1,0,0",
            "-m",
            "backtrack",
            "--json",
            "--no-meta",
        ])
        .env("ICECOUNT_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_icecount"))
        .args(["count", "-p", "1,0"])
        .env("ICECOUNT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn table_formats() {
    let md = String::from_utf8(icecount(&["table", "rm", "--m-max", "2"]).stdout).unwrap();
    assert!(md.contains("| 2 | (n^3 + 6*n^2 + 3*n + 2)/(8*n + 4) |"));
    let csv = String::from_utf8(
        icecount(&["table", "refined-asm", "--n-max", "3", "--format", "csv"]).stdout,
    )
    .unwrap();
    assert_eq!(csv.lines().last(), Some("3,2,3,2"));
    let js = icecount(&["table", "rm", "--m-max", "1", "--format", "json"]).stdout;
    let rows: Value = serde_json::from_slice(&js).unwrap();
    assert_eq!(rows[1]["text"], "(n + 1)/2");
    let tex =
        String::from_utf8(icecount(&["table", "rm", "--m-max", "1", "--format", "latex"]).stdout)
            .unwrap();
    assert!(tex.contains("\\frac{n + 1}{2}"));
}

#[test]
fn report_schema() {
    let (r, _) = json(&["count", "-p", "1,0"]);
    let keys: Vec<&str> = r.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    assert_eq!(keys, ["checks", "command", "inputs", "results", "warnings"]);
    assert!(r.get("elapsed_ms").is_none());
    let out = icecount(&["count", "-p", "1,0", "--json"]);
    let with_meta: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(with_meta["elapsed_ms"].is_u64());
}

#[test]
fn big_counts_are_exact_json_numbers() {
    let out = icecount(&[
        "count",
        "-p",
        "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0",
        "-m",
        "formula-auto",
        "--json",
        "--no-meta",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let digits = result(&v, "A_lambda")["value"].to_string();
    assert!(digits.len() > 60, "{digits}");
    assert!(!digits.contains('e') && !digits.contains('.'));
}
