use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn stickknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stickknot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn certify_9_18() {
    let o = stickknot(&["certify", fixture("9_18.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certified=true"));
}

#[test]
fn certify_rejects_scaled_polygon() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture("9_18.txt")).unwrap();
    let scaled: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let v: Vec<String> = l.split_whitespace().map(|t| (t.parse::<f64>().unwrap() * 1.01).to_string()).collect();
            v.join(" ") + "\n"
        })
        .collect();
    let path = dir.path().join("p.txt");
    std::fs::write(&path, scaled).unwrap();
    let o = stickknot(&["--format", "kv", "certify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("certified=false"));
}

#[test]
fn identify_10_79() {
    let o = stickknot(&["--format", "kv", "identify", fixture("10_79.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("knot=10_79\n"));
}

#[test]
fn sb_10_37() {
    let o = stickknot(&["sb", fixture("10_37_integer.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sb=5\n"));
}

#[test]
fn certify_sb_verifies_and_finds() {
    let poly = fixture("10_37_integer.txt");
    let cert = fixture("10_37_certificate.txt");
    let o = stickknot(&["--format", "kv", "certify-sb", poly.to_str().unwrap(), "--certificate", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified=true"));

    let o = stickknot(&["--format", "kv", "certify-sb", poly.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("branch=certificate"));
}

#[test]
fn certify_sb_alternating_instance() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zigzag.txt");
    std::fs::write(&path, "0 0 0\n1 0 1\n2 1 0\n1 2 1\n0 2 0\n-1 1 1\n").unwrap();
    let o = stickknot(&["--format", "kv", "certify-sb", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("branch=alternation-witness"));
}

#[test]
fn sample_is_deterministic() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let d = dir.path().to_str().unwrap();
        let o = stickknot(&[
            "sample", "--n", "8", "--radius", "1.5", "--seed", "11", "--count", "5", "--jobs", "2", "--identify",
            "--out-dir", d,
        ]);
        assert_eq!(o.status.code(), Some(0));
        let manifest = std::fs::read_to_string(dir.path().join("manifest.csv")).unwrap();
        let first = std::fs::read_to_string(dir.path().join("sample_s1_000001.txt")).unwrap();
        (manifest, first)
    };
    let (m1, p1) = run();
    let (m2, p2) = run();
    assert_eq!(m1, m2);
    assert_eq!(p1, p2);
    assert_eq!(m1.lines().count(), 6);
    assert!(m1.starts_with("seed,stream,index,n,radius,file,knot\n"));
}

#[test]
fn sample_rejects_small_radius() {
    let dir = tempfile::tempdir().unwrap();
    let o = stickknot(&["sample", "--n", "8", "--radius", "0.3", "--seed", "1", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_commands() {
    let o = stickknot(&["--format", "kv", "table", "check"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("fixed_point=true") && out.contains("conjecture_holds=true"));

    let o = stickknot(&["--format", "kv", "table", "show", "10_58"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sb=[4,5]\n"));

    assert_eq!(stickknot(&["table", "show", "12a_1"]).status.code(), Some(2));
}

#[test]
fn table_check_reports_unsettled_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    std::fs::write(
        &path,
        "knot,cr,bridge,stick_lo,stick_hi,eqstick_lo,eqstick_hi,sb_lo,sb_hi,provenance\n\
         3_1,3,2,6,6,6,6,3,4,test\n",
    )
    .unwrap();
    let o = stickknot(&["--format", "kv", "table", "check", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("unsettled=3_1"));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.svg");
    let o = stickknot(&["render", fixture("9_18.txt").to_str().unwrap(), "--axis", "0.1,0.2,1", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(out).unwrap();
    assert!(svg.contains("<svg") && svg.matches("<path").count() >= 9);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(stickknot(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(stickknot(&["certify", "/nonexistent/file.txt"]).status.code(), Some(2));
    assert_eq!(stickknot(&["render", fixture("9_18.txt").to_str().unwrap(), "--axis", "0,0,0"]).status.code(), Some(2));
}

#[test]
fn csv_format() {
    let o = stickknot(&["--format", "csv", "sb", fixture("10_37_integer.txt").to_str().unwrap()]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("sb,n,witness,cells"));
    assert!(lines.next().unwrap().starts_with("5,12,"));
}
