use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxeter-sle")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json", "--no-timings"];
    full.extend_from_slice(args);
    let o = run(&full);
    (serde_json::from_str(&stdout(&o)).expect("valid JSON"), o.status.code().unwrap())
}

#[test]
fn hilbert_golden() {
    let o = run(&["--no-timings", "hilbert", "--type", "I2", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "\
type        I2(5)
order       10
reflections 5
hilbert     1 2 2 2 2 1
poincare    1 2 2 2 2 1
palindromic yes
dimension   10
PASS
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn sle_golden() {
    let o = run(&["--no-timings", "sle", "--type", "A2", "--coeffs", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "\
type        A2
l           (4/3, 1/3, -5/3)
mirrors     0 positive roots orthogonal to l
criterion   true
determinants true
  level  0  size   1  det nonzero
  level  1  size   2  det nonzero
AGREE
PASS
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn sle_on_a_mirror_agrees_on_false() {
    let (v, code) = json(&["sle", "--type", "B2", "--coeffs", "1,0"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["criterion"], Value::Bool(false));
    assert_eq!(r["determinants"]["result"], Value::Bool(false));
    assert_eq!(r["agree"], Value::Bool(true));
}

#[test]
fn json_schema() {
    for args in [
        vec!["hilbert", "--type", "H3"],
        vec!["verify", "--types", "A2,I2:5", "--samples", "5", "--parabolic"],
        vec!["i2m", "--m", "3..5"],
        vec!["h3-table"],
    ] {
        let (v, code) = json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["command"], args[0]);
        assert!(v["params"].is_object() && v["results"].is_array());
        assert_eq!(v["timings"], serde_json::json!({}));
        assert_eq!(v["passed"], true);
    }
}

#[test]
fn h3_table_reports_both_levels() {
    let (v, _) = json(&["h3-table"]);
    let totals: Vec<u64> = v["results"].as_array().unwrap().iter().map(|r| r["total"].as_u64().unwrap()).collect();
    assert_eq!(totals, vec![84, 88]);
}

#[test]
fn reports_are_byte_stable() {
    let args = ["--no-timings", "verify", "--types", "A2,B2,I2:5", "--samples", "10", "--seed", "3"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let j = ["--json", "--no-timings", "i2m", "--m", "4..6"];
    assert_eq!(run(&j).stdout, run(&j).stdout);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["hilbert", "--type", "E6"]), 2);
    assert_eq!(code(&["verify", "--types", "H4"]), 2);
    assert_eq!(code(&["sle", "--type", "A2", "--coeffs", "1,x"]), 2);
    assert_eq!(code(&["h3-table", "--levels", "1"]), 2);
    assert_eq!(code(&["parabolic", "--type", "A2", "--coeffs", "1,1", "--parabolic", "1"]), 2);
    assert_eq!(code(&["parabolic", "--type", "A2", "--coeffs", "0,1", "--parabolic", "3"]), 2);
    assert_eq!(code(&["h3-table", "--levels", "3", "--budget", "1s"]), 1);
    assert_eq!(code(&["verify", "--samples", "0"]), 0);
}
