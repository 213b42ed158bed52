//! End-to-end tests of the `horizonq` binary.

use std::path::Path;
use std::process::{Command, Output};

fn horizonq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_horizonq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field(text: &str, name: &str) -> f64 {
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix(name) {
            let value = rest.trim_start().trim_start_matches('=').trim();
            let value = value.split_whitespace().next().unwrap();
            return value.parse().unwrap();
        }
    }
    panic!("no field {name} in:\n{text}");
}

#[test]
fn eval_zero_temperature_maximum() {
    let out = horizonq(&["eval", "--scenario", "ABC", "--T", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!((field(&text, "c_l1") - 2.0).abs() < 1e-11);
    assert!((field(&text, "tradeoff") - 1.0).abs() < 1e-11);
}

#[test]
fn eval_mixed_minimum_tradeoff() {
    let out = horizonq(&["eval", "--scenario", "ABc", "--T", "0"]);
    assert!(out.status.success());
    let tradeoff = field(&stdout(&out), "tradeoff");
    assert!((tradeoff - 11.0 / 27.0).abs() < 1e-11);
}

#[test]
fn eval_damped_concurrence_fill() {
    let out = horizonq(&[
        "eval",
        "--scenario",
        "ABC",
        "--T",
        "0",
        "--gamma",
        "0.333333333333",
    ]);
    assert!(out.status.success());
    let cf = field(&stdout(&out), "cf");
    assert!((cf - 56.0 / 81.0).abs() < 1e-6);
}

#[test]
fn eval_accepts_infinite_temperature() {
    let out = horizonq(&["eval", "--scenario", "Abc", "--T", "inf"]);
    assert!(out.status.success());
    let tradeoff = field(&stdout(&out), "tradeoff");
    assert!((tradeoff - 1.0).abs() < 1e-11);
}

#[test]
fn bad_arguments_exit_2() {
    for args in [
        &["eval", "--scenario", "XYZ", "--T", "1"][..],
        &["eval", "--scenario", "ABC", "--T", "-1"][..],
        &["figure", "fig9"][..],
        &["sweep"][..],
    ] {
        let out = horizonq(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn sweep_csv_shape_and_determinism() {
    let out = horizonq(&["sweep", "--scenario", "ABC"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    // header + T=0 + 50 grid rows + T=inf
    assert_eq!(lines.len(), 53);
    assert_eq!(lines[0], "T,alpha,beta,c_l1,foc,gc,cf,tradeoff,cf_clamped");
    assert!(lines[1].starts_with("0,"));
    assert!(lines[52].starts_with("inf,"));

    let again = horizonq(&["sweep", "--scenario", "ABC"]);
    assert_eq!(out.stdout, again.stdout, "sweep output not deterministic");

    // every numeric field survives a parse -> format -> parse round-trip
    for line in &lines[1..] {
        for cell in line.split(',') {
            if cell == "inf" {
                continue;
            }
            let v: f64 = cell.parse().unwrap();
            assert_eq!(format!("{v}"), *cell);
        }
    }
}

#[test]
fn sweep_rows_match_eval() {
    let out = horizonq(&[
        "sweep",
        "--scenario",
        "Abc",
        "--t-min",
        "0.5",
        "--t-max",
        "2.0",
        "--t-points",
        "3",
        "--t-scale",
        "linear",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(row[0], "0.5");

    let eval = horizonq(&["eval", "--scenario", "Abc", "--T", "0.5"]);
    let eval_text = stdout(&eval);
    let csv_cl1: f64 = row[3].parse().unwrap();
    assert!((field(&eval_text, "c_l1") - csv_cl1).abs() < 1e-11);
}

#[test]
fn sweep_config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"{"scenario": "ABC", "t_points": 4, "t_scale": "linear", "t_min": 1.0, "t_max": 4.0}"#,
    )
    .unwrap();
    let out = horizonq(&[
        "sweep",
        "--config",
        config.to_str().unwrap(),
        "--t-points",
        "2",
    ]);
    assert!(out.status.success());
    // header + T=0 + 2 grid rows + T=inf: the flag overrode the file
    assert_eq!(stdout(&out).lines().count(), 5);
}

#[test]
fn sweep_svg_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chart.svg");
    let out = horizonq(&[
        "sweep",
        "--scenario",
        "ABC",
        "--format",
        "svg",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("<polyline").count(), 5);
}

#[test]
fn figure_single_and_damped_families() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().to_str().unwrap();

    let out = horizonq(&["figure", "fig1", "--output-dir", base]);
    assert!(out.status.success());
    assert!(dir.path().join("fig1.csv").exists());

    let out = horizonq(&["figure", "fig4", "--output-dir", base]);
    assert!(out.status.success());
    for name in ["fig4_g0.333.csv", "fig4_g0.500.csv", "fig4_g0.667.csv"] {
        assert!(dir.path().join(name).exists(), "{name} missing");
    }
}

#[test]
fn figure_two_tradeoff_converges_to_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = horizonq(&[
        "figure",
        "fig2",
        "--output-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    // (tradeoff, cf_clamped) per row; the monotone rise to 1 starts once
    // the concurrence-fill clamp lifts.
    let rows: Vec<(f64, bool)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            (cells[7].parse().unwrap(), cells[8] == "1")
        })
        .collect();
    let unclamped: Vec<f64> = rows
        .iter()
        .filter(|(_, clamped)| !clamped)
        .map(|&(t, _)| t)
        .collect();
    assert!(unclamped.len() > 10);
    for w in unclamped.windows(2) {
        assert!(w[1] >= w[0] - 1e-12, "trade-off decreased");
    }
    assert!((unclamped.last().unwrap() - 1.0).abs() < 1e-9);
}

#[test]
fn verify_default_grid_passes() {
    let out = horizonq(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS"));
    for label in ["ABC", "Abc", "ABc"] {
        assert!(text.contains(&format!("{label}: max deviation")));
    }
}

#[test]
fn verify_impossible_tolerance_exits_1() {
    let out = horizonq(&["verify", "--tolerance", "1e-30", "--t-points", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_restricted_slice() {
    let out = horizonq(&[
        "verify",
        "--scenario",
        "ABC",
        "--gamma",
        "0.5",
        "--t-points",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ABC: max deviation"));
    assert!(!text.contains("\nAbc:"));
    assert!(text.contains("7 points checked"));
}

#[test]
fn unwritable_output_fails() {
    let out = horizonq(&[
        "sweep",
        "--scenario",
        "ABC",
        "--output",
        "/nonexistent-dir/out.csv",
    ]);
    assert!(!out.status.success());
}

#[test]
fn gc_peak_near_one_over_ln3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("abc.csv");
    let out = horizonq(&[
        "sweep",
        "--scenario",
        "ABC",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut best: Option<(f64, f64)> = None;
    let mut grid: Vec<f64> = Vec::new();
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let t: f64 = cells[0].parse().unwrap();
        if !t.is_finite() || t == 0.0 {
            continue;
        }
        grid.push(t);
        let gc: f64 = cells[5].parse().unwrap();
        if best.is_none_or(|(_, b)| gc > b) {
            best = Some((t, gc));
        }
    }
    let (t_peak, _) = best.unwrap();
    let t_star = 1.0 / 3.0f64.ln();
    let nearest = grid
        .iter()
        .copied()
        .min_by(|a, b| (a - t_star).abs().total_cmp(&(b - t_star).abs()))
        .unwrap();
    assert_eq!(
        t_peak, nearest,
        "gc peak not at the grid point nearest 1/ln 3"
    );
}

#[test]
fn abc_damped_cf_zero_until_threshold() {
    let _ = Path::new("");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("abc_damped.csv");
    let out = horizonq(&[
        "sweep",
        "--scenario",
        "Abc",
        "--gamma",
        "0.3333333333333333",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let mut seen_positive = false;
    for line in text.lines().skip(1) {
        let cells: Vec<&str> = line.split(',').collect();
        let cf: f64 = cells[6].parse().unwrap();
        if cf > 0.0 {
            seen_positive = true;
        } else {
            assert!(!seen_positive, "cf returned to 0 after becoming positive");
        }
    }
    assert!(seen_positive, "cf never became positive");
}
