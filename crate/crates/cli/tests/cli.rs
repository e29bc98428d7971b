use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_gorenstein"));
    for v in ["FIELD", "VARS", "DUAL_VARS", "SEED", "DEGREE_BOUND", "ALPHA_DEG_MAX", "LONG", "FORMAT"] {
        c.env_remove(format!("GORENSTEIN_{v}"));
    }
    c
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn ann_of_y2z() {
    let o = run(&["ann", "Y^2*Z", "--dual-vars", "X,Y,Z"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(x, z^2, y^3)");
}

#[test]
fn contraction_and_normal_form() {
    let o = run(&["contract", "x*y", "X^2*Y^3"]);
    assert_eq!(stdout(&o).trim(), "XY^2");
    let o = run(&["nf", "x^3", "(x^2 - y)"]);
    assert_eq!(stdout(&o).trim(), "xy");
}

#[test]
fn semigroup_example_passes() {
    let o = run(&["example", "semigroup", "--b", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all claims pass"));
}

#[test]
fn condition_two_failure_exits_one() {
    let o = run(&["gadm", "check", &fixture("remark_1vs2.txt")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("condition (2) fails at l=4"));
    let o = run(&["gadm", "check", &fixture("remark_1vs2_fixed.txt")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["ann", "X^2+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Text grammar"));
    assert_eq!(run(&["example", "points", "--name", "p30"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "fp:4", "ann", "X"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["gadm", "check", "/nonexistent"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let args = ["--format", "report", "--seed", "5", "gadm", "lift", &fixture("two_ideals.txt")];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 5);
    assert_eq!(v["suite"], "gadm-lift");
}

#[test]
fn environment_variables() {
    let o = bin().env("GORENSTEIN_FORMAT", "report").env("GORENSTEIN_FIELD", "fp:7").args(["ann", "X^3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["field"], "fp:7");
    let o = bin().env("GORENSTEIN_DUAL_VARS", "A,B").args(["ann", "A*B"]).output().unwrap();
    assert_eq!(stdout(&o).trim(), "(b^2, a^2)");
}

#[test]
fn build_then_check_through_a_file() {
    let out = std::env::temp_dir().join(format!("gorenstein-cli-{}.txt", std::process::id()));
    let o = run(&["--vars", "x,y", "gadm", "build", "--h1", "X^2", "--z", "y", "--len", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["gadm", "check", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["gadm", "graded-lift", out.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().next(), Some("I = (x^3)"));
    let o = run(&["gadm", "graded-lift", out.to_str().unwrap(), "--t", "2"]);
    assert_eq!(o.status.code(), Some(1));
    std::fs::remove_file(out).ok();
}

#[test]
fn stdin_fixture() {
    use std::io::Write;
    let mut child = bin()
        .args(["gadm", "check", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"%gadm vars=x,y dual=X,Y field=q z=y\nX\nXY\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("G-admissible"));
}
