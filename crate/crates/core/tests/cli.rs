use std::path::PathBuf;
use std::process::{Command, Output};

fn lincomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lincomp")).args(args).output().expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("lincomp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn solve_period_21_file() {
    let o = lincomp(&["solve", "--input", &data("period21.seq"), "--algorithm", "auto", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("complexity:  21"), "{text}");
    assert!(text.contains("(1 - x)^7 (1 - 4x)^7 (1 - 2x)^7"), "{text}");
    assert!(text.contains("expanded:    1 + 6*x^21"), "{text}");
    assert!(text.contains("verified:    yes"));
}

#[test]
fn json_report_schema() {
    let o = lincomp(&["solve", "--input", &data("period21.seq"), "--json", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"]["p"], 7);
    assert_eq!(v["field"]["m"], 1);
    assert_eq!(v["period"], 21);
    assert_eq!(v["complexity"], 21);
    assert_eq!(v["algorithm"], "reduction");
    assert_eq!(v["verified"], true);
    assert_eq!(v["min_poly_expanded"].as_array().unwrap().len(), 22);
    let factored = v["min_poly_factored"].as_array().unwrap();
    let mut b: Vec<u64> = factored.iter().map(|f| f["scale_b"][0].as_u64().unwrap()).collect();
    b.sort();
    assert_eq!(b, vec![1, 2, 4]);
    let ops = &v["ops"];
    let sum = ops["reduction"].as_u64().unwrap() + ops["components"].as_u64().unwrap() + ops["compose"].as_u64().unwrap();
    assert_eq!(sum, ops["total"].as_u64().unwrap());
}

#[test]
fn oracle_on_zero_sequence() {
    let f = temp_file("zeros.seq", "p=7 m=1\n0 0 0 0 0 0 0 0 0 0\n");
    let o = lincomp(&["solve", "--input", &f, "--algorithm", "oracle", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["complexity"], 0);
    assert_eq!(v["min_poly_expanded"], serde_json::json!([[1]]));
    assert!(v.get("verified").is_none());
}

#[test]
fn ggc_on_period_21_is_inapplicable() {
    let o = lincomp(&["solve", "--input", &data("period21.seq"), "--algorithm", "ggc"]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("21"), "{err}");
}

#[test]
fn injected_mismatch_fails_verification() {
    let o = lincomp(&["solve", "--input", &data("period21.seq"), "--verify", "--inject-mismatch"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_is_deterministic() {
    let args = ["solve", "--field", "3^2", "--period", "40", "--seed", "9", "--json", "--verify"];
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v.as_object_mut().unwrap().remove("wall_time_us");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(strip(lincomp(&args)), strip(lincomp(&args)));
}

#[test]
fn parse_and_usage_errors() {
    let bad = temp_file("bad.seq", "p=7 m=1\n1 2 7\n");
    assert_eq!(lincomp(&["solve", "--input", &bad]).status.code(), Some(2));
    let header = temp_file("header.seq", "q=7\n1 2\n");
    assert_eq!(lincomp(&["solve", "--input", &header]).status.code(), Some(2));
    assert_eq!(lincomp(&["solve", "--input", "/nonexistent/file.seq"]).status.code(), Some(2));
    assert_eq!(lincomp(&["solve", "--algorithm", "fast"]).status.code(), Some(2));
    assert_eq!(lincomp(&["solve", "--input", &data("period21.seq"), "--field", "13"]).status.code(), Some(2));
}

#[test]
fn bench_flag_and_subcommand() {
    let cfg = temp_file(
        "bench.toml",
        "p = 13\nh_min = 1\nh_max = 2\ntrials = 2\nseed = 1\nalgorithms = [\"bm\", \"oracle\", \"ggc\"]\n",
    );
    let a = lincomp(&["bench", &cfg]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert!(stdout(&a).contains("oracle"));
    let b = lincomp(&["--bench", &cfg, "--json"]);
    assert_eq!(b.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(v["violations"], 0);
    let zero = temp_file("zero.toml", "p = 7\nh_min = 1\nh_max = 1\ntrials = 0\n");
    assert_eq!(lincomp(&["bench", &zero]).status.code(), Some(2));
}
