//! Runs the `octoquad` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

use octoquad_cli::canonical_json;
use octoquad_cli::report::{Report, TableJson};

fn octoquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octoquad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_examples_match() {
    let cases = [
        (["--b", "5", "--c", "6"], "example1.json"),
        (["--b", "0", "--c", "1"], "example2.json"),
        (["--b", "-1", "--c", "l"], "example3.json"),
        (["--b", "l", "--c", "j"], "example4.json"),
    ];
    for (args, file) in cases {
        let mut full = vec!["solve", "--json"];
        full.extend(args);
        let out = octoquad(&full);
        assert_eq!(out.status.code(), Some(0), "{file}");
        assert_eq!(
            canonical_json(&stdout(&out)).unwrap(),
            canonical_json(&golden(file)).unwrap(),
            "{file}"
        );
    }
}

#[test]
fn exit_codes() {
    assert_eq!(octoquad(&["solve", "--b", "5", "--c", "6"]).status.code(), Some(0));

    let bad = octoquad(&["solve", "--b", "5", "--c", "6z"]);
    assert_eq!(bad.status.code(), Some(1));
    let err = String::from_utf8(bad.stderr).unwrap();
    assert!(err.contains("--c: unknown unit `z` at position 1"), "{err}");

    assert_eq!(octoquad(&["solve", "--b", "5"]).status.code(), Some(1));
    assert_eq!(octoquad(&["solve", "--b", "", "--c", "1"]).status.code(), Some(1));

    // A zero tolerance turns rounding-level residuals into warnings.
    let warn = octoquad(&["solve", "--b", "-1", "--c", "l", "--tol", "0", "--json"]);
    assert_eq!(warn.status.code(), Some(2));
    let report: Report = serde_json::from_str(&stdout(&warn)).unwrap();
    assert!(!report.warnings.is_empty());

    assert_eq!(octoquad(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_check() {
    let out = octoquad(&["table", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("64/64 agree"));

    let out = octoquad(&["table", "--json"]);
    let t: TableJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(t.basis, ["1", "i", "j", "k", "l", "il", "jl", "kl"]);
    assert_eq!(t.table[1][2], "+k");
    assert_eq!(t.table[2][1], "-k");
    assert_eq!(t.table[4][4], "-1");
    assert!(t.check.is_none());
}

#[test]
fn spectrum_json() {
    let out = octoquad(&[
        "spectrum", "--a", "1", "--b", "i", "--c", "0", "--d", "2", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(serde_json::to_value(&r.case).unwrap(), "spectrum");
    assert_eq!(r.spectrum.as_ref().unwrap().kind, "triangular");
    assert_eq!(r.roots.len(), 2);

    let out = octoquad(&[
        "spectrum", "--a", "0", "--b", "1", "--c", "-1", "--d", "0", "--samples", "3", "--json",
    ]);
    let r: Report = serde_json::from_str(&stdout(&out)).unwrap();
    let sphere = r.sphere.unwrap();
    assert_eq!((sphere.center_real, sphere.im_radius), (0.0, 1.0));
    assert_eq!(r.roots.len(), 3);
}

#[test]
fn solve_samples_flag() {
    let out = octoquad(&["solve", "--b", "2", "--c", "5", "--samples", "4", "--json"]);
    let r: Report = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(r.case, octoquad_cli::report::CaseField::Number(2));
    assert_eq!(r.roots.len(), 4);
    for root in &r.roots {
        assert_eq!(root[0], -1.0);
    }
}

#[test]
fn text_output() {
    let out = octoquad(&["solve", "--b", "l", "--c", "j"]);
    let s = stdout(&out);
    assert!(s.contains("case 4"));
    assert!(s.contains("x1 = 0.5-0.5j-0.5l-0.5jl"), "{s}");
}
