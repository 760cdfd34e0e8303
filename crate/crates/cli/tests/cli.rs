use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_wreathcov"));
    c.args(args);
    match cache {
        Some(d) => c.env("WREATHCOV_CACHE_DIR", d),
        None => c.env_remove("WREATHCOV_CACHE_DIR"),
    };
    c.output().unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn quantity<'a>(doc: &'a Value, name: &str) -> &'a Value {
    doc["quantities"].as_array().unwrap().iter().find(|q| q["name"] == name).unwrap_or_else(|| panic!("no {}", name))
}

#[test]
fn sigma_formula_breakdown_sums_to_total() {
    let o = run(&["sigma-formula", "--n", "30", "--m", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["schema_version"], 1);
    let mut sum = num_bigint::BigUint::default();
    for q in doc["quantities"].as_array().unwrap() {
        assert!(q["provenance"].is_string());
        if q["name"].as_str().unwrap().starts_with("class.") {
            sum += q["value"].as_str().unwrap().parse::<num_bigint::BigUint>().unwrap();
        }
    }
    assert_eq!(quantity(&doc, "total")["value"].as_str().unwrap(), sum.to_string());
}

#[test]
fn sigma_exact_s5_with_witness_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let w = dir.path().join("w.txt");
    let args = ["sigma-exact", "--group", "S5", "--witness", w.to_str().unwrap()];
    let first = run(&args, Some(&cache));
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(quantity(&json(&first), "sigma")["value"], "16");
    assert_eq!(fs::read_to_string(&w).unwrap().lines().count(), 16);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let second = run(&args, Some(&cache));
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache"));
    let uncached = run(&args, None);
    assert_eq!(first.stdout, uncached.stdout);
}

#[test]
fn omega_exact_a5() {
    let o = run(&["omega-exact", "--group", "A5"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(quantity(&json(&o), "omega")["value"], "8");
}

#[test]
fn small_uniqueness_failure_is_a_finding() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["verify-covering", "--n", "6", "--m", "2", "--exhaustive", "--out", out.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    let doc: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["passed"], false);
    let f = doc["findings"].as_array().unwrap();
    assert!(f.iter().any(|f| f["check"] == "uniqueness" && f["witness"].is_string()));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["verify-covering", "--n", "8", "--m", "2", "--seed", "1"][..],
        &["verify-pi", "--n", "12", "--m", "2"],
        &["sigma-exact", "--group", "C7"],
        &["sigma-exact", "--group", "G6,2"],
        &["sigma-formula", "--n", "30"],
        &["lll-check", "--n", "30", "--m", "1"],
    ] {
        assert_eq!(run(args, None).status.code(), Some(1), "{:?}", args);
    }
}

#[test]
fn identical_config_identical_report() {
    let args = ["verify-pi", "--n", "30", "--m", "3", "--seed", "11", "--trials", "50"];
    let a = run(&args, None);
    let b = run(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["verify-pi", "--n", "30", "--m", "3", "--seed", "12", "--trials", "50"], None);
    assert_eq!(json(&a)["config"]["seed"], 11);
    assert_eq!(json(&c)["config"]["seed"], 12);
}

#[test]
fn scans_export_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("r.csv");
    let o = run(&["ratio-scan", "--m", "2", "--n-min", "36", "--n-max", "60", "--csv", csv.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(quantity(&json(&o), "n1")["value"], "48");
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("n,ratio,ratio_decimal,certified\n"));
    assert_eq!(text.lines().count(), 1 + 13);

    let csv = dir.path().join("l.csv");
    let o = run(&["lll-check", "--n", "44", "--m", "2", "--n-max", "64", "--csv", csv.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(quantity(&json(&o), "n0")["value"], "62");
    assert!(fs::read_to_string(&csv).unwrap().contains("\n62,true,true\n"));
}

#[test]
fn intersections_match_formula_at_small_degree() {
    let o = run(&["count-intersections", "--n", "6", "--m", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["findings"].as_array().unwrap().len(), 0);
}
