use std::fs;
use std::process::{Command, Output};

fn fbword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fbword"))
        .args(args)
        .output()
        .expect("spawn fbword")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = fbword(&full);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn analyze_reports_census() {
    let v = json(&["analyze", "00101"]);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["result"]["fully_bordered"], true);
    assert_eq!(v["result"]["unbordered_points"], serde_json::json!([0, 2]));
    assert_eq!(v["result"]["fb_pair"], serde_json::json!(["00", "101"]));

    let v = json(&["analyze", "0101"]);
    assert_eq!(v["result"]["primitive"], false);
    assert_eq!(v["result"]["fully_bordered"], false);
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(fbword(&["analyze", "00x1"]).status.code(), Some(2));
    assert_eq!(fbword(&["analyze", ""]).status.code(), Some(2));
    assert_eq!(
        fbword(&["census", "--max-len", "30"]).status.code(),
        Some(2)
    );
    assert_eq!(fbword(&["verify", "bogus"]).status.code(), Some(2));
    assert_eq!(fbword(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn census_rows_and_golden() {
    let o = fbword(&["--format", "csv", "census", "--max-len", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6, "header plus rows 2..=6");
    assert_eq!(lines[1], r#""2","2","1","2","0:2 2:2""#);

    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("nested/census.txt");
    let g = golden.to_str().unwrap();
    assert_eq!(
        fbword(&["census", "--max-len", "6", "--out", g, "--bless"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        fbword(&["census", "--max-len", "6", "--out", g])
            .status
            .code(),
        Some(0)
    );
    // a row the table no longer produces
    assert_eq!(
        fbword(&["census", "--max-len", "5", "--out", g])
            .status
            .code(),
        Some(1)
    );
    let drifted = fs::read_to_string(&golden)
        .unwrap()
        .replacen("2 2 1 2", "2 3 1 2", 1);
    fs::write(&golden, drifted).unwrap();
    assert_eq!(
        fbword(&["census", "--max-len", "6", "--out", g])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        fbword(&["census", "--max-len", "6", "--bless"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "main", "--max-len", "2"]);
    assert_eq!(v["result"][0]["items_checked"], 4);
    assert_eq!(v["result"][0]["failure_count"], 0);

    let o = fbword(&["verify", "all", "--max-len", "12"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS main"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn generate_f_counts() {
    let count = |n: &str| {
        json(&["generate-f", "--max-len", n])["result"]
            .as_array()
            .unwrap()
            .len()
    };
    assert_eq!(count("2"), 2);
    assert_eq!(count("3"), 6);

    let o = fbword(&[
        "--format",
        "csv",
        "generate-f",
        "--max-len",
        "5",
        "--with-trace",
    ]);
    assert!(stdout(&o).lines().any(|l| l.starts_with(r#""00","101""#)));
}

#[test]
fn descend_to_base() {
    let v = json(&["descend", "00", "101"]);
    assert_eq!(v["result"]["base"], serde_json::json!(["0", "1"]));

    let o = fbword(&["descend", "001", "011"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("001011"));
}

#[test]
fn output_is_deterministic() {
    for format in ["text", "csv", "json"] {
        for args in [
            &["census", "--max-len", "10"][..],
            &["generate-f", "--max-len", "9"][..],
        ] {
            let mut full = vec!["--format", format];
            full.extend_from_slice(args);
            let a = fbword(&full);
            let mut threaded = vec!["--threads", "1"];
            threaded.extend_from_slice(&full);
            let b = fbword(&threaded);
            assert!(a.status.success() && b.status.success());
            assert_eq!(a.stdout, b.stdout, "{format} {args:?}");
        }
    }
}
