use std::process::{Command, Output};

fn sl12(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl12")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = sl12(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn cv_example() {
    let v = json(&["cv", "--lambda1", "3", "--xi", "2,1"]);
    assert_eq!(v["data"]["dim"], 32);
    assert_eq!(v["data"]["character_mass"], 32);
    assert_eq!(v["summary"].as_str().unwrap().split(' ').next(), Some("PASS"));
}

#[test]
fn kac_and_demazure_examples() {
    assert_eq!(json(&["kac", "--lambda1", "0", "--lambda2", "0"])["data"]["dim"], 1);
    assert_eq!(json(&["demazure", "--ell", "2", "--lambda1", "1", "--lambda2", "5"])["data"]["dim"], 256);
    assert_eq!(json(&["truncated", "--n", "2", "--lambda1", "-1/2", "--lambda2", "3"])["data"]["dim"], 32);
    assert_eq!(json(&["weyl", "--lambda2", "3"])["data"]["graded_dims"], serde_json::json!([12, 20, 20, 12]));
}

#[test]
fn parameter_overrides_keep_the_character() {
    let a = json(&["cv", "--lambda1", "1", "--xi", "2,1"]);
    let b = json(&["cv", "--lambda1", "1", "--xi", "2,1", "--z", "-1/2,4", "--kappa", "3,-2"]);
    assert_eq!(a["data"]["graded_character"], b["data"]["graded_character"]);
}

#[test]
fn invalid_parameters_exit_2() {
    for args in [
        &["weyl", "--lambda1", "1", "--lambda2", "0"][..],
        &["cv", "--xi", "2,1", "--z", "1,1"],
        &["cv", "--xi", "2,1", "--kappa", "1,1", "--lambda1", "0"],
        &["cv", "--xi", "1,2"],
        &["kac", "--lambda1", "x", "--lambda2", "1"],
        &["verify", "--suite", "nonsense"],
        &["combinatorics"],
        &["combinatorics", "--n", "3", "--max-n", "4"],
    ] {
        assert_eq!(sl12(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "--suite", "combinatorics", "--max-n", "8"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let out = sl12(&["verify", "--suite", "comm,algebra"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().trim_end().ends_with("PASS 3874/3874"));
}

#[test]
fn output_is_deterministic_and_written_whole() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let p = path.to_str().unwrap();
    let args = ["verify", "--suite", "kac", "--max-lambda2", "2", "--format", "csv", "--output", p];
    assert!(sl12(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(sl12(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());
    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with("suite,case,params,expected,computed,pass\n"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn failed_run_leaves_output_untouched() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    std::fs::write(&path, "previous").unwrap();
    let out = sl12(&["weyl", "--lambda2", "0", "--lambda1", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "previous");
}

#[test]
fn dim_identity_table() {
    let out = sl12(&["combinatorics", "--check", "dim-identity", "--max-n", "8"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("PASS 66/66"), "{text}");
}
