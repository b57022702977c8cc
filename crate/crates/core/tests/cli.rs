use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_unichar")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out.trim_end().to_string()
}

#[test]
fn compute_examples() {
    assert_eq!(stdout_ok(&["compute", "--family", "sp", "--n", "1", "--m", "1", "--outer", "1"]), "x1 + x1^-1 + z1");
    assert_eq!(stdout_ok(&["compute", "--family", "sp", "--n", "1", "--m", "0", "--outer", "1"]), "x1 + x1^-1");
    assert_eq!(stdout_ok(&["compute", "--family", "sp", "--n", "0", "--m", "0", "--outer", ""]), "1");
    assert_eq!(
        stdout_ok(&["compute", "--family", "sp", "--n", "1", "--outer", "2,0", "--inner", "1"]),
        "x1 + x1^-1"
    );
}

#[test]
fn gt_fock_newton_examples() {
    let chains = stdout_ok(&["gt", "--lambda", "1", "--n", "1"]);
    assert_eq!(chains.lines().count(), 3);
    assert!(chains.lines().all(|l| l.contains("weight")));
    assert_eq!(stdout_ok(&["gt", "--lambda", "1", "--n", "1", "--count"]), "3");
    assert_eq!(stdout_ok(&["fock", "--pairing", "--mu", "2,1", "--lambda", "2,1"]), "1");
    assert_eq!(stdout_ok(&["fock", "--pairing", "--family", "o", "--mu", "2,1", "--lambda", "1,1"]), "0");
    assert_eq!(stdout_ok(&["fock", "--beta", "1", "--alpha", "2,0", "--n", "1"]), "x1 + x1^-1");
    assert_eq!(stdout_ok(&["newton", "--n", "1", "--m", "1", "--N", "4"]), "pass");
}

#[test]
fn json_output_is_versioned() {
    let out = stdout_ok(&["compute", "--family", "o", "--n", "1", "--m", "1", "--outer", "1,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["text"], "x1 + x1^-1 + z1");
    assert_eq!(v["value"][0]["coeff"], "1");
    let out = stdout_ok(&["gt", "--lambda", "2", "--n", "1", "--count", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], "6");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["compute", "--bogus"]).0, 2);
    assert_eq!(run(&["compute", "--family", "sp", "--n", "1"]).0, 2);
    assert_eq!(run(&["compute", "--family", "gl", "--n", "1", "--outer", "1"]).0, 2);
    assert_eq!(run(&["compute", "--family", "sp", "--n", "1", "--outer", "3,3,3"]).0, 2);
    assert_eq!(run(&["compute", "--outer", "1,2"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "gt", "--grid", "{\"bogus\": 1}"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn config_file_supplies_flags() {
    let dir = std::env::temp_dir().join(format!("unichar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.json");
    std::fs::write(&path, r#"{"family": "sp", "n": 1, "m": 1, "outer": [1], "format": "text"}"#).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(stdout_ok(&["compute", "--config", p]), "x1 + x1^-1 + z1");
    // flags win over the file
    assert_eq!(stdout_ok(&["compute", "--config", p, "--m", "0"]), "x1 + x1^-1");
    std::fs::write(&path, r#"{"colour": "red"}"#).unwrap();
    assert_eq!(run(&["compute", "--config", p, "--outer", "1"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_is_byte_stable_and_reports() {
    let grid = r#"{"n_range": [0, 1], "m_range": [0, 1], "max_weight": 3, "max_len": 2, "degree_cap": 2, "fock_max_dim": 3, "cauchy_degree": 3, "newton_degree": 4}"#;
    let a = run(&["verify", "--suite", "all", "--grid", grid, "--seed", "7"]);
    let b = run(&["verify", "--suite", "all", "--grid", grid, "--seed", "7"]);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a.1, b.1);
    assert!(a.1.lines().any(|l| l.starts_with("PASS") && l.contains("branching_sp")));
    let c = run(&["verify", "--suite", "all", "--grid", grid, "--seed", "8"]);
    assert_eq!(c.0, 0);
    let json = stdout_ok(&["verify", "--suite", "newton", "--grid", grid, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["passed"], true);
    assert!(v["reports"][0].get("seconds").is_none());
}
