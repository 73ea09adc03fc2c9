use std::path::PathBuf;
use std::process::{Command, Output};

use bicurve_cli::input::InputSpecFile;
use bicurve_cli::render::{parse_ascii, parse_svg};
use bicurve_cli::report::ReportDocument;
use serde_json::Value;

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicurve")).args(args).output().expect("binary runs")
}

fn construct(name: &str, extra: &[&str]) -> Output {
    let path = spec(name);
    let mut args = vec!["construct", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn numsgp_prints_invariants() {
    let out = run(&["numsgp", "3", "5", "7", "--apery", "3", "--canonical"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for line in ["frobenius 4", "conductor 5", "gaps 1 2 4", "symmetric false", "apery(3) 0 7 5", "canonical {0,2,3,5,...}"] {
        assert!(text.contains(line), "missing {line:?} in\n{text}");
    }
}

#[test]
fn numsgp_flags_the_naturals() {
    let text = stdout(&run(&["numsgp", "1", "--canonical"]));
    assert!(text.contains("symmetric true (convention for N)"));
    assert!(text.contains("degenerate"));
}

#[test]
fn numsgp_rejects_non_coprime_generators() {
    assert_eq!(run(&["numsgp", "4", "6"]).status.code(), Some(1));
}

#[test]
fn gorenstein_example_with_oracle_check() {
    let out = construct("example_biamalg.toml", &["--oracle-check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_eq!(doc["gorenstein"]["by_canonical"], true);
    assert_eq!(doc["gorenstein"]["by_symmetry"], true);
    assert_eq!(doc["value_semigroup"]["delta"], serde_json::json!([15, 23]));
    assert_eq!(doc["gluing_ideal"], serde_json::json!([3]));
    let cmp = &doc["oracle"]["comparison"];
    assert_eq!(cmp["soundness"], serde_json::json!([]));
    assert_eq!(cmp["completeness"], serde_json::json!([]));
    assert_eq!(doc["oracle"]["saturation"]["saturated"], true);
}

#[test]
fn perturbed_ideal_is_not_gorenstein() {
    let doc = json(&construct("example_biamalg_non_gorenstein.toml", &[]));
    assert_eq!(doc["gorenstein"]["by_canonical"], false);
    assert_eq!(doc["gorenstein"]["by_symmetry"], false);
}

#[test]
fn amalgamation_report() {
    let out = construct("example_amalg.toml", &["--oracle-check"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["value_semigroup"]["delta"], serde_json::json!([5, 13]));
    assert_eq!(doc["gorenstein"]["by_symmetry"], true);
    assert_eq!(doc["presentation"]["kernels_vanish"], true);
}

#[test]
fn report_is_byte_stable_and_round_trips() {
    let first = construct("example_biamalg.toml", &[]);
    let second = construct("example_biamalg.toml", &[]);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    let doc: ReportDocument = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let file = std::fs::read_to_string(spec("example_biamalg.toml")).unwrap();
    assert_eq!(doc.input, InputSpecFile::parse(&file).unwrap());
}

#[test]
fn out_flag_writes_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = construct("duplication.toml", &["--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), construct("duplication.toml", &[]).stdout);
}

#[test]
fn validation_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "mode = \"amalg\"\n[B]\ngenerators = [3, 7, 8]\n[f]\ndegree = 3\n[J]\ngenerators = [0]\n").unwrap();
    let out = run(&["construct", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let report = json(&out);
    assert_eq!(report["issues"][0]["issue"], "not_proper");

    std::fs::write(&bad, "mode = \"biamalg\"\n[B]\ngenerators = [4, x]\n").unwrap();
    let out = run(&["construct", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["construct"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(construct("example_amalg.toml", &["--plot", "svg"]).status.code(), Some(1));
    assert_eq!(construct("example_amalg.toml", &["--scale", "3,1"]).status.code(), Some(1));
    assert_eq!(construct("missing.toml", &[]).status.code(), Some(1));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn strict_ties_escalate_unless_the_oracle_settles_them() {
    let out = construct("strict_ties_wide.toml", &["--strict-ties"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[21, 33]"));
    let out = construct("strict_ties_wide.toml", &["--strict-ties", "--oracle-check"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value_semigroup"]["double_ties"][0], serde_json::json!([21, 33]));
}

#[test]
fn svg_and_ascii_encode_the_same_points() {
    let dir = tempfile::tempdir().unwrap();
    let svg_path = dir.path().join("plot.svg");
    let txt_path = dir.path().join("plot.txt");
    let common = ["--convention", "scaled", "--plot-window", "23,23", "--plot-out"];
    for (format, path) in [("svg", &svg_path), ("ascii", &txt_path)] {
        let mut args = vec!["--plot", format];
        args.extend_from_slice(&common);
        args.push(path.to_str().unwrap());
        assert_eq!(construct("example_amalg.toml", &args).status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    let ascii = std::fs::read_to_string(&txt_path).unwrap();
    let points = parse_svg(&svg);
    assert_eq!(points, parse_ascii(&ascii));
    assert!(points.contains(&(9, 9, '*')));
    assert!(points.contains(&(12, 7, 'o')));
    assert!(points.contains(&(21, 23, 'o')));
    assert!(!points.iter().any(|&(x, y, _)| x == 3 && y > 3));
    assert!(ascii.contains("x ticks: 0 3 6 9 12 15 18 21"));
}

#[test]
fn intrinsic_plot_ticks_follow_the_diagonal() {
    let out = construct("example_biamalg.toml", &["--plot", "ascii", "--plot-window", "22,35"]);
    let text = stdout(&out);
    let plot = &text[text.rfind('}').unwrap() + 1..];
    assert!(plot.contains("x ticks: 0 7 14 21"));
    assert!(plot.contains("y ticks: 0 11 22 33"));
    let points = parse_ascii(plot);
    assert!(points.contains(&(21, 33, '*')));
    assert!(points.contains(&(4, 11, 'o')));
    assert!(!points.contains(&(7, 30, 'o')));
}

#[test]
fn oracle_subcommand_is_deterministic() {
    let path = spec("example_amalg.toml");
    let args = ["oracle", path.to_str().unwrap(), "--trials", "300", "--seed", "11", "--partitions", "3", "--witnesses"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    assert_eq!(doc["summary"]["config"]["mode"]["kind"], "random");
    for entry in doc["points"].as_array().unwrap() {
        assert_eq!(entry["point"], entry["witness"]["value"]);
    }
}

#[test]
fn oracle_subcommand_exhaustive_matches() {
    let path = spec("example_biamalg.toml");
    let out = run(&["oracle", path.to_str().unwrap(), "--prime", "5", "--budget", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["summary"]["saturation"]["complete"], true);
    assert_eq!(doc["summary"]["comparison"]["soundness"], serde_json::json!([]));
}
