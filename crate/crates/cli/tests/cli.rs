use std::io::Write;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_gonal-slope");

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("GONAL_SLOPE_THREADS").env_remove("RUST_LOG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

/// Value column of a `quantity,value,approx` CSV row.
fn csv_value(out: &str, quantity: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(&format!("{quantity},")))
        .and_then(|rest| rest.split(',').next())
        .unwrap_or_else(|| panic!("no `{quantity}` row in\n{out}"))
        .to_string()
}

#[test]
fn trigonal_slope_example() {
    let out = ok(&["--format", "csv", "slope", "--n", "3", "--g", "5", "--c1sq", "14", "--c2", "28/9"]);
    assert_eq!(csv_value(&out, "K_f^2"), "32/3");
    assert_eq!(csv_value(&out, "chi_f"), "26/9");
    assert_eq!(csv_value(&out, "slope"), "48/13");
}

#[test]
fn fourgonal_slope_example_with_base_genus_check() {
    let out = ok(&[
        "slope", "--n", "4", "--g", "13", "--c1sq", "6", "--c2e", "7/4", "--c2f", "1", "--b", "2", "--format", "csv",
    ]);
    assert_eq!(csv_value(&out, "K_f^2"), "9/2");
    assert_eq!(csv_value(&out, "chi_f"), "17/16");
    assert_eq!(csv_value(&out, "slope"), "72/17");
    assert_eq!(csv_value(&out, "base genus check"), "b=2 agrees");
}

#[test]
fn fourgonal_blowup_slope_example() {
    let out = ok(&[
        "slope", "--n", "4", "--g", "10", "--c1sq", "26", "--c2e", "8", "--c2f", "3", "--s", "1", "--t", "1", "--format",
        "csv",
    ]);
    assert_eq!(csv_value(&out, "K_f^2"), "15");
    assert_eq!(csv_value(&out, "chi_f"), "6");
    assert_eq!(csv_value(&out, "slope"), "5/2");
}

#[test]
fn negative_rationals_are_accepted() {
    let out = ok(&["--format", "csv", "slope", "--n", "3", "--g", "5", "--c1sq", "-7", "--c2", "-10"]);
    assert_eq!(csv_value(&out, "chi_f"), "7");
}

#[test]
fn zero_chi_exits_3() {
    let o = run(&["slope", "--n", "3", "--g", "5", "--c1sq", "0", "--c2", "0"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("vanishes"));
}

#[test]
fn input_errors_exit_1() {
    for args in [
        &["slope", "--n", "3", "--g", "5", "--c1sq", "14"][..],
        &["slope", "--n", "3", "--g", "5", "--c1sq", "1.5", "--c2", "1"],
        &["slope", "--n", "3", "--g", "4", "--c1sq", "14", "--c2", "3"],
        &["slope", "--n", "3", "--g", "5", "--c1sq", "14", "--c2", "1", "--s", "1"],
        &["bound", "--n", "5", "--g", "11", "--case", "general-odd"],
        &["bound", "--n", "4", "--g", "11", "--case", "general-even"],
        &["bound", "--n", "4", "--g", "40", "--case", "factorizing"],
        &["bound", "--n", "4", "--g", "11"],
        &["sweep", "--n", "3", "--g-range", "9..5", "--case", "general"],
        &["report", "--n", "3", "--g", "5", "--case", "general-odd", "--t", "1", "--c1sq-grid", "0"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!stderr(&o).is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_0() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sweep"));
}

#[test]
fn out_of_range_is_tagged_when_allowed() {
    let out = ok(&[
        "--format", "csv", "slope", "--n", "3", "--g", "4", "--c1sq", "14", "--c2", "3", "--allow-out-of-range",
    ]);
    assert_eq!(csv_value(&out, "genus"), "out-of-range");
}

#[test]
fn bound_reports_discrepancy() {
    let out = ok(&["bound", "--n", "4", "--g", "11", "--case", "general-odd", "--format", "csv"]);
    assert_eq!(csv_value(&out, "derived at g=11"), "80/17");
    assert_eq!(csv_value(&out, "stated at g=11"), "88/17");
    assert_eq!(csv_value(&out, "discrepancy at g=11"), "8/17");
    assert_eq!(csv_value(&out, "agrees"), "false");
    let out = ok(&["bound", "--n", "4", "--g", "20", "--case", "factorizing", "--gamma", "2", "--format", "csv"]);
    assert_eq!(csv_value(&out, "derived at g=20"), "38/9");
    assert_eq!(csv_value(&out, "agrees"), "true");
}

#[test]
fn trigonal_sweep_matches_closed_form() {
    let out = ok(&["sweep", "--n", "3", "--g-range", "5..99", "--case", "general", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("g,case,derived,stated,discrepancy,reference,derived_approx,status"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 95);
    for row in rows {
        let g: i64 = row[0].parse().unwrap();
        let (p, q) = if g % 2 == 1 { (5 * g - 3, g + 1) } else { (5 * g - 6, g) };
        let d = gcd(p, q);
        let expected = if q / d == 1 { format!("{}", p / d) } else { format!("{}/{}", p / d, q / d) };
        assert_eq!(row[2], expected, "g={g}");
        assert_eq!(row[7], "ok");
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn csv_header_appears_once() {
    let out = ok(&["sweep", "--n", "4", "--g-range", "10..60", "--case", "general", "--format", "csv"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("g,")).count(), 1);
    let out = ok(&["report", "--n", "3", "--g", "5", "--case", "general-odd", "--t", "1", "--format", "csv"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("c1sq,")).count(), 1);
    assert_eq!(out.lines().count(), 44);
}

#[test]
fn nonfactorizing_row_below_range_is_exactly_four() {
    let o = run(&["sweep", "--n", "4", "--g-range", "9..10", "--case", "nonfactorizing"]);
    assert_eq!(o.status.code(), Some(1));
    let out = ok(&[
        "sweep", "--n", "4", "--g-range", "9..10", "--case", "nonfactorizing", "--allow-out-of-range", "--format", "csv",
    ]);
    let row9: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
    assert_eq!((row9[0], row9[2], row9[7]), ("9", "4", "out-of-range"));
}

#[test]
fn output_is_deterministic_across_runs_and_thread_counts() {
    let args = ["sweep", "--n", "4", "--g-range", "10..200", "--case", "general", "--format", "jsonl"];
    let a = run(&args);
    let b = run(&args);
    let c = run_env(&args, &[("GONAL_SLOPE_THREADS", "1")]);
    let d = run_env(&args, &[("GONAL_SLOPE_THREADS", "7")]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    assert_eq!(a.stdout, d.stdout);
}

#[test]
fn invalid_thread_count_exits_1() {
    for v in ["0", "x", "-2"] {
        let o = run_env(&["sweep", "--n", "3", "--g-range", "5..9", "--case", "general"], &[("GONAL_SLOPE_THREADS", v)]);
        assert_eq!(o.status.code(), Some(1), "GONAL_SLOPE_THREADS={v}");
    }
}

#[test]
fn report_jsonl_records() {
    let out = ok(&[
        "report", "--n", "3", "--g", "5", "--case", "general-odd", "--t", "1", "--c1sq-grid", "0,14,100", "--format", "jsonl",
    ]);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let points: Vec<&serde_json::Value> = records.iter().filter(|r| r["record"] == "point").collect();
    assert_eq!(points.len(), 3);
    assert_eq!(points[0]["admissible"], false);
    assert_eq!(points[0]["slope"], serde_json::Value::Null);
    assert_eq!(points[1]["slope"], "59/20");
    assert_eq!(points[1]["verdict"], "below");
    assert_eq!(points[2]["slope"], "532/149");
    let summary = |q: &str| records.iter().find(|r| r["record"] == "summary" && r["quantity"] == q).unwrap()["value"].clone();
    assert_eq!(summary("unblown bound"), "11/3");
    assert_eq!(summary("minimum slope"), "59/20");
    assert_eq!(summary("approach"), "from below");
}

#[test]
fn scenario_file_supplies_defaults() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# fourgonal sweep\ndegree = 4\ngenus-range = 10..12\ncase = general\nformat = csv").unwrap();
    let path = f.path().to_str().unwrap();
    let out = ok(&["sweep", "--scenario", path]);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().nth(1).unwrap().starts_with("10,general-even,9/2,68/15,1/30,"));
    // flags win over file values
    let out = ok(&["sweep", "--scenario", path, "--g-range", "11", "--format", "table"]);
    assert!(out.starts_with("g "));
    assert_eq!(out.lines().count(), 2);
}

#[test]
fn scenario_file_rejects_unknown_keys() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "degree = 4\ncolour = red").unwrap();
    let o = run(&["bound", "--scenario", f.path().to_str().unwrap(), "--g", "11", "--case", "general-odd"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown key `colour`"));
    let o = run(&["bound", "--scenario", "/nonexistent/scenario.txt"]);
    assert_eq!(o.status.code(), Some(1));
}
