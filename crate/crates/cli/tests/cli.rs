//! Exit codes and output plumbing of the `hoeffding` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hoeffding"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    for sub in ["bound", "lemma", "simulate", "invert", "compare"] {
        assert_eq!(code(&run(&[sub, "--help"])), 0, "{sub}");
    }
}

#[test]
fn bound_rows_per_request() {
    let set = data("set.csv");
    let out = run(&["bound", "--intervals", &set, "--t", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 5);
    let out = run(&["bound", "--intervals", &set, "--t", "5", "--sided", "two", "--kind", "original"]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(&row[6..9], &["sum", "two", "original"]);
    let out = run(&["bound", "--intervals", &set, "--t", "1", "--form", "mean", "--sided", "one", "--kind", "improved"]);
    assert!(stdout(&out).contains(",1,mean,one,improved,"));
}

#[test]
fn usage_errors_exit_two() {
    let set = data("set.csv");
    let (empty, bad_row, missing) = (data("empty.csv"), data("bad_row.csv"), data("missing.csv"));
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["bound", "--intervals", &set, "--t", "-1"], "t must be positive"),
        (vec!["bound", "--intervals", &set, "--t", "0"], "t must be positive"),
        (vec!["bound", "--intervals", &empty, "--t", "1"], "no intervals"),
        (vec!["bound", "--intervals", &bad_row, "--t", "1"], "row 3"),
        (vec!["bound", "--intervals", &missing, "--t", "1"], "missing.csv"),
        (vec!["bound", "--intervals", &set, "--t", "abc"], "invalid value"),
        (vec!["bound", "--intervals", &set], "--t"),
        (vec!["bound", "--intervals", &set, "--t", "1", "--form", "median"], "invalid value"),
        (vec!["lemma", "--a", "1", "--b", "2"], "not negative"),
        (vec!["lemma", "--a", "-1", "--b", "-0.5"], "not positive"),
        (vec!["lemma", "--a", "-1", "--b", "1", "--s-max", "0"], "s_max"),
        (vec!["lemma", "--a", "-1", "--b", "1", "--s-steps", "0"], "s_steps"),
        (vec!["simulate", "--intervals", &set, "--t", "1", "--reps", "0"], "reps"),
        (vec!["simulate", "--intervals", &set, "--t", "1", "--dist", "mixture:1.5"], "mixture weight"),
        (vec!["simulate", "--intervals", &set, "--t", "1", "--seed", "0xZZ"], "seed"),
        (vec!["invert", "--a", "-2", "--b", "1", "--t", "0.2", "--delta", "1.5"], "delta"),
        (vec!["invert", "--a", "-2", "--b", "1", "--t", "-0.2", "--delta", "0.5"], "t must be positive"),
        (vec!["invert", "--a", "-2", "--b", "1", "--delta", "0.5"], "--t"),
        (vec!["invert", "--delta", "0.5"], "--intervals"),
        (vec!["invert", "--intervals", &set, "--delta", "0"], "delta"),
        (vec!["compare", "--intervals", &set, "--t-grid", "10:1:5"], "below start"),
        (vec!["compare", "--intervals", &set, "--t-grid", "1:10"], "start:stop:steps"),
        (vec!["compare", "--intervals", &set, "--t-grid", "0:1:3"], "positive"),
        (vec!["nonsense"], "unrecognized"),
    ];
    for (args, needle) in cases {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", stderr(&out));
        assert!(stderr(&out).contains(needle), "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).is_empty(), "{args:?}");
    }
}

#[test]
fn numeric_failure_exits_one() {
    // 2·(b - a)·s overflows the log-MGF argument
    let out = run(&["lemma", "--a", "-1e300", "--b", "1e300", "--s-max", "1e10", "--s-steps", "3"]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    assert!(stderr(&out).contains("overflows"));
}

#[test]
fn lemma_passes_on_classic_and_skewed_supports() {
    for (a, b) in [("-2", "1"), ("-1", "1"), ("-4", "1"), ("-1", "3")] {
        let out = run(&["lemma", "--a", a, "--b", b, "--s-max", "10", "--s-steps", "50"]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out).lines().count(), 51);
    }
}

#[test]
fn simulate_symmetric_pair() {
    let out = run(&["simulate", "--intervals", &data("sym.csv"), "--t", "2", "--reps", "100000"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let estimate: f64 = row[0].parse().unwrap();
    assert!((estimate - 0.25).abs() < 0.01);
    assert_eq!(row[3], "true");
}

#[test]
fn simulate_is_reproducible() {
    let args = ["simulate", "--intervals", &data("set.csv"), "--t", "3", "--reps", "20000", "--seed", "99", "--dist", "mixture:0.5"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn invert_modes() {
    let out = run(&["invert", "--a", "-2", "--b", "1", "--t", "0.2", "--delta", "0.05"]);
    assert!(stdout(&out).trim_end().ends_with(",improved,300"));
    let out = run(&["invert", "--intervals", &data("set.csv"), "--delta", "0.05", "--kind", "original"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("n,delta,sidedness,kind,t\n3,"));
}

#[test]
fn compare_ratio_at_most_one_and_monotone() {
    let out = run(&["compare", "--intervals", &data("set.csv"), "--t-grid", "0.5:20:40", "--sided", "two"]);
    assert_eq!(code(&out), 0);
    let ratios: Vec<f64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ratios.len(), 40);
    assert!(ratios.iter().all(|&r| r <= 1.0));
    let out = run(&["compare", "--intervals", &data("set.csv"), "--t-grid", "1:10:10"]);
    let ratios: Vec<f64> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(ratios.windows(2).all(|w| w[1] <= w[0]));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let path_str = path.display().to_string();
    let out = run(&["bound", "--intervals", &data("set.csv"), "--t", "5", "--out", &path_str]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("n,m_sq,n_sq,sum_a_sq,sum_g_sq,t,form,sidedness,kind,bound,optimal_s\n"));
    let out = run(&["bound", "--intervals", &data("set.csv"), "--t", "5", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(code(&out), 2);
}
