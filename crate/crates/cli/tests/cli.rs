use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn ovalkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ovalkit"))
        .args(args)
        .env_remove("OVALKIT_SAMPLES")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_reports_exact_forms() {
    let o = ovalkit(&["analyze", data("m3.json").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("= 22π"), "{text}");
    assert!(text.contains("= 117π"), "{text}");
    assert!(text.contains("= -2π"), "{text}");
    assert!(text.contains("holds with equality"), "{text}");
}

#[test]
fn json_reports_parse() {
    let o = ovalkit(&[
        "stability",
        data("stability_example.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "stability");
    assert_eq!(v["d_inf"]["value"], 2.25);
    assert_eq!(v["equality_class"], "strict");
}

#[test]
fn missing_file_is_io_error() {
    let o = ovalkit(&["analyze", "/nonexistent/curve.json"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn invalid_inputs_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("bad.json", "{not json"),
        (
            "nonconvex.json",
            r#"{"a0": 1, "terms": [{"n": 2, "a": 1, "b": 0}]}"#,
        ),
        ("negative.json", r#"{"a0": -1}"#),
        (
            "duplicate.json",
            r#"{"a0": 5, "terms": [{"n": 2, "a": 0.1, "b": 0}, {"n": 2, "a": 0.1, "b": 0}]}"#,
        ),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let o = ovalkit(&["analyze", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty(), "{name}");
    }
    assert_eq!(ovalkit(&["family", "0"]).status.code(), Some(2));
    let m3 = data("m3.json");
    let m3 = m3.to_str().unwrap();
    assert_eq!(
        ovalkit(&["sweep", m3, "--lambda-range", "0:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        ovalkit(&["render", m3, "--format", "csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn out_writes_file_and_leaves_no_temporaries() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.csv");
    let o = ovalkit(&[
        "sweep",
        data("m3.json").to_str().unwrap(),
        "--lambda-range",
        "0:1:5",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&target).unwrap();
    assert_eq!(csv.lines().count(), 6);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn family_out_receives_curve_spec() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("m7.json");
    let o = ovalkit(&["family", "3", "--out", spec.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("7 (expected 7)"));
    let again = ovalkit(&["analyze", spec.to_str().unwrap()]);
    assert!(stdout(&again).contains("= 102π"), "{}", stdout(&again));
}

#[test]
fn samples_env_var_sets_the_default() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ovalkit"));
        cmd.args(["render", data("m3.json").to_str().unwrap()])
            .args(extra);
        match env {
            Some(v) => cmd.env("OVALKIT_SAMPLES", v),
            None => cmd.env_remove("OVALKIT_SAMPLES"),
        };
        cmd.output().unwrap()
    };
    let from_env = run(Some("64"), &[]);
    let from_flag = run(None, &["--samples", "64"]);
    let default = run(None, &[]);
    assert!(from_env.status.success());
    assert_eq!(from_env.stdout, from_flag.stdout);
    assert_ne!(from_env.stdout, default.stdout);
    assert_eq!(run(Some("lots"), &[]).status.code(), Some(2));
}
