use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(dir: &Path, cmd: &str, config: &str, out: &str, extra: &[&str]) -> (Output, PathBuf) {
    let cfg = dir.join(format!("{cmd}.json"));
    std::fs::write(&cfg, config).unwrap();
    let out = dir.join(out);
    let output = Command::new(env!("CARGO_BIN_EXE_bendlab"))
        .arg(cmd)
        .arg("--config")
        .arg(&cfg)
        .arg("--out")
        .arg(&out)
        .args(extra)
        .output()
        .unwrap();
    (output, out)
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn counterexample_table() {
    let dir = tempfile::tempdir().unwrap();
    let (o, out) = run(dir.path(), "counterexample", r#"{"ns": [10, 100, 1000]}"#, "ce.csv", &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = read(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,trace_re,trace_im,translation_length,diag_distance,diag_bound,weak_constant_re,weak_constant_im,weak_tent_re,weak_tent_im,pass"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 3);
    for r in &rows {
        assert_eq!(r[3], "1");
        assert_eq!((r[6], r[7]), ("0", "0"));
        assert_eq!(r[10], "true");
    }
    // 2 cosh(1/2) to nine digits
    assert_eq!(rows[0][1], "2.25525193");
}

#[test]
fn bad_theta_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let (o, out) = run(dir.path(), "counterexample", r#"{"theta": 2.0, "ns": [10]}"#, "ce.csv", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn missing_config_is_reported() {
    let o = Command::new(env!("CARGO_BIN_EXE_bendlab"))
        .args(["bounds", "--config", "/nonexistent/bounds.json", "--out", "/tmp/never.csv"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonexistent"));
}

#[test]
fn bounds_seed_override_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{"seed": 1, "samples": 50}"#;
    let (o1, out1) = run(dir.path(), "bounds", cfg, "a.csv", &["--seed", "9"]);
    let (o2, out2) = run(dir.path(), "bounds", cfg, "b.csv", &["--seed", "9"]);
    let (_, out3) = run(dir.path(), "bounds", cfg, "c.csv", &[]);
    assert!(o1.status.success() && o2.status.success());
    assert_eq!(read(&out1), read(&out2));
    assert_ne!(read(&out1), read(&out3));
    assert_eq!(read(&out1).lines().count(), 1 + 4 * 3);
    let samples = read(&dir.path().join("a.samples.csv"));
    assert_eq!(samples.lines().count(), 1 + 4 * 3 * 50);
}

#[test]
fn converge_with_added_curve() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{"ns": [2, 4, 8, 16, 32], "ts": [[0.0, 0.0], [0.0, 0.1]], "words": ["a", "ab"]}"#;
    let (o, out) = run(dir.path(), "converge", cfg, "conv.csv", &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = read(&out);
    assert_eq!(text.lines().count(), 1 + 2 * 5 * 2);
    assert!(text.lines().any(|l| l.starts_with("added-curve,")));
    for l in text.lines().skip(1).filter(|l| l.contains(",0,0,")) {
        // t = 0 rows: bent equals unbent
        assert_eq!(l.split(',').nth(4), Some("0"));
    }
}

#[test]
fn sweep_writes_summary() {
    let dir = tempfile::tempdir().unwrap();
    let (o, out) = run(dir.path(), "approx-sweep", r#"{"ms": [4, 8], "ns": [0, 4, 8]}"#, "sweep.csv", &[]);
    let table = read(&out);
    assert_eq!(table.lines().count(), 1 + 2 * 3);
    let summary: serde_json::Value = serde_json::from_str(&read(&dir.path().join("sweep.summary.json"))).unwrap();
    assert_eq!(summary["zero_column_pass"], true);
    assert_eq!(summary["diagonal"].as_array().unwrap().len(), 2);
    // the exit code follows the summary verdict
    assert_eq!(o.status.success(), summary["pass"] == true);
}

#[test]
fn render_empty_lamination() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{"lamination": {"kind": "finite", "leaves": []}}"#;
    let (o, out) = run(dir.path(), "render", cfg, "empty.svg", &[]);
    assert!(o.status.success());
    let svg = read(&out);
    assert_eq!(svg.matches("<circle").count(), 1);
    assert_eq!(svg.matches("<path").count(), 1);
    assert!(svg.contains(r#"class="segment""#));
}

#[test]
fn render_counterexample_leaves() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{
        "lamination": {"kind": "finite", "leaves": [
            {"ends": [0.3333333333333333, 3.0], "weight": [1.0, 0.0]},
            {"ends": [-0.3333333333333333, -3.0], "weight": [-1.0, 0.0]}
        ]},
        "segment": [[0.7071067811865476, 0.7071067811865476], [0.0, 1.0]]
    }"#;
    let (o, out) = run(dir.path(), "render", cfg, "ce.svg", &[]);
    assert!(o.status.success());
    let svg = read(&out);
    // Cayley images: 3 ↦ 0.8 − 0.6i and 1/3 ↦ −0.8 − 0.6i on a disc of
    // radius 180 centred at (200, 200), y pointing down
    assert!(svg.contains("344.0000 308.0000"));
    assert!(svg.contains("56.0000 308.0000"));
    assert_eq!(svg.matches(r#"class="leaf""#).count(), 2);
    let (_, again) = run(dir.path(), "render", cfg, "ce2.svg", &[]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn render_flagship_with_orbit_points() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = r#"{"lamination": {"kind": "orbit", "axes": ["a"], "weights": [[1.0, 0.0]]}, "generator": 1, "orbit_length": 1}"#;
    let (o, out) = run(dir.path(), "render", cfg, "fl.svg", &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let svg = read(&out);
    assert_eq!(svg.matches(r#"class="orbit""#).count(), 9);
    assert!(svg.matches(r#"class="leaf""#).count() >= 1);
}
