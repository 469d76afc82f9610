use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn hyperalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Writes `K2^n` (field and space blocks) produced by the `builtin` command.
fn k2_file(dir: &TempDir, n: usize) -> PathBuf {
    let o = hyperalg(&["builtin", "K2", "--power", &n.to_string()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    write(dir, &format!("k2-{n}.hyp"), &stdout(&o))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_accepts_k2_squared() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let o = hyperalg(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("result K2 PASS"), "{out}");
    assert!(out.contains("class strong_right=true strong_left=false good=false"), "{out}");
    assert!(out.contains("result K2^2 PASS"), "{out}");
}

#[test]
fn check_reports_a_broken_hyperfield_with_exit_one() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&hyperalg(&["builtin", "K2"])).replace("add 1 1 = { 0 1 }", "add 1 1 = { 1 }");
    let f = write(&dir, "broken.hyp", &text);
    let o = hyperalg(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("add.commutative-hypergroup FAIL"), "{out}");
    assert!(out.contains("result K2 FAIL"), "{out}");
}

#[test]
fn span_and_closure_of_the_axes() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let o = hyperalg(&["span", s(&f), "--vectors", "v10"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "{v00 v10}"));
    let o = hyperalg(&["closure", s(&f), "--space", "K2^2", "--vectors", "v10", "v01"]);
    assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), "{v00 v10 v01 v11}"));
}

#[test]
fn dependence_dimension_and_basis() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let o = hyperalg(&["depend", s(&f), "--vectors", "v10,v01,v11"]);
    assert_eq!(stdout(&o).trim(), "dependent coefficients (1 1 1)");
    let o = hyperalg(&["depend", s(&f), "--vectors", "v10,v01"]);
    assert!(stdout(&o).starts_with("independent"), "{}", stdout(&o));
    assert_eq!(stdout(&hyperalg(&["dim", s(&f)])).trim(), "dim 2");
    let o = hyperalg(&["basis", s(&f), "--vectors", "v11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("basis (v11 "), "{}", stdout(&o));
}

#[test]
fn sum_of_axes_is_direct() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let o = hyperalg(&["sum", s(&f), "--left", "v00,v10", "--right", "v00,v01"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{v00 v10 v01 v11}\ndirect true\n");
}

#[test]
fn verify_skips_only_gated_results_on_k2_squared() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let o = hyperalg(&["verify", s(&f), "--space", "K2^2", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut skipped = Vec::new();
    for line in out.lines() {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 6, "{line}");
        assert_eq!(cols[1], "K2^2");
        assert_ne!(cols[2], "FAIL", "{line}");
        if cols[2] == "SKIP" {
            assert_eq!(cols[5], "hypothesis unmet: space is not strongly left distributive");
            skipped.push(cols[0]);
        }
    }
    assert_eq!(skipped, ["T4.11", "T5.8", "T5.10", "T6.2", "T6.5"]);
}

#[test]
fn verify_output_is_repeatable() {
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    let a = hyperalg(&["verify", s(&f)]);
    let b = hyperalg(&["verify", s(&f)]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_is_identical_across_thread_counts() {
    let runs: Vec<Vec<u8>> = ["1", "2", "4"]
        .iter()
        .map(|t| hyperalg(&["enumerate", "--kind", "commutative-hypergroup", "--order", "3", "--threads", t]).stdout)
        .collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let text = String::from_utf8(runs[0].clone()).unwrap();
    assert!(text.starts_with("# census kind=commutative-hypergroup order=3 count=10\n"), "{text}");
}

#[test]
fn enumerate_writes_the_output_file() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("hf2.hyp");
    let o = hyperalg(&["enumerate", "--kind", "hyperfield", "--order", "2", "--output", s(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("canonical=1.2.2.3.0.0.0.1.1"), "K2 missing:\n{text}");
    assert_eq!(hyperalg(&["check", s(&out)]).status.code(), Some(0));
}

#[test]
fn enumerate_refuses_over_budget() {
    let o = hyperalg(&["enumerate", "--kind", "hypergroup", "--order", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("budget"), "{}", stderr(&o));
}

#[test]
fn parse_errors_carry_a_location_and_exit_two() {
    let dir = TempDir::new().unwrap();
    let text = stdout(&hyperalg(&["builtin", "K2"])).replace("add 0 1 = { 1 }", "add 0 1 = { }");
    let f = write(&dir, "empty.hyp", &text);
    let o = hyperalg(&["check", s(&f)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 6, column"), "{}", stderr(&o));
    assert!(stderr(&o).contains("empty set literal"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hyperalg(&["check", "/nonexistent/file.hyp"]).status.code(), Some(2));
    assert_eq!(hyperalg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hyperalg(&["enumerate", "--kind", "ring", "--order", "2"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let f = k2_file(&dir, 2);
    assert_eq!(hyperalg(&["span", s(&f), "--vectors", "nope"]).status.code(), Some(2));
}
