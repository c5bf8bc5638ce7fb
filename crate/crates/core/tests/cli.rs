use std::path::PathBuf;
use std::process::Command;

use dloop::census::classify;
use dloop::cli::{render_classification, Format};
use dloop::fixtures;
use dloop::isotopy::find_isotopy;
use dloop::tracks::track_set;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.tbl")).display().to_string()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dloop(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_dloop")).args(args).output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn check_reports() {
    let out = dloop(&["check", &fixture("T_ex2")]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("is_d: true\n"));
    assert!(out.stdout.contains("is_ip: false\n"));

    let out = dloop(&["check", &fixture("T_ex1"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["is_d"], true);
    assert_eq!(v["is_ip"], false);
    let keys = ["order", "is_quasigroup", "identity", "is_loop", "is_group", "is_ip", "is_d", "is_proper_d"];
    let at: Vec<usize> = keys.iter().map(|k| out.stdout.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]));

    let out = dloop(&["check", &fixture("T_ex4_star")]);
    assert!(out.stdout.contains("is_loop: false\n"));
    assert!(out.stdout.contains("identity: none\n"));
}

#[test]
fn check_matches_library() {
    for name in fixtures::NAMES {
        let lib = render_classification(&classify(&fixtures::table(name)), Format::Text);
        assert_eq!(dloop(&["check", &fixture(name)]).stdout, lib, "{name}");
    }
}

#[test]
fn order_2_group_text_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2.tbl");
    std::fs::write(&path, "1 2\n2 1\n").unwrap();
    let out = dloop(&["check", path.to_str().unwrap()]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[7], "is_proper_d: false");
}

#[test]
fn tracks_lists_every_label() {
    let out = dloop(&["tracks", &fixture("T_ex1")]);
    assert_eq!(out.stdout.lines().nth(3), Some("4: (1 4)(2 7 3 6)(5)"));
    let lib: String = track_set(&fixtures::table("T_ex1")).iter().map(|(a, p)| format!("{a}: {p}\n")).collect();
    assert_eq!(out.stdout, lib);
}

#[test]
fn spins_report_closure() {
    let out = dloop(&["spins", &fixture("T_ex5_grp")]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 9);
    assert!(out.stdout.ends_with("group: yes\n"));
    assert!(dloop(&["spins", &fixture("T_ex5_d")]).stdout.ends_with("group: no\n"));
    assert_eq!(dloop(&["spins", &fixture("T_ex2"), "--base", "9"]).code, 1);
}

#[test]
fn constructions_write_fixture_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.tbl");
    let run = dloop(&["construct", "ip-to-d", &fixture("T_ex4_ip"), "--a", "2", "--out", out.to_str().unwrap()]);
    assert_eq!((run.code, run.stdout.as_str()), (0, ""));
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(fixture("T_ex4_d")).unwrap());

    let run = dloop(&["construct", "exchange", &fixture("T_ex5_grp"), "--pair", "6,8"]);
    assert_eq!(run.stdout, fixtures::text("T_ex5_d"));
}

#[test]
fn exchange_with_explicit_split() {
    // Z2^4: tracks 2 and 3 have the four cosets of {1, 2, 3, 4} as joint blocks
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z2_4.tbl");
    let table = dloop::Table::from_fn(16, |x, y| ((x - 1) ^ (y - 1)) + 1).unwrap();
    std::fs::write(&path, table.to_text()).unwrap();
    let file = path.to_str().unwrap();

    let ambiguous = dloop(&["construct", "exchange", file, "--pair", "2,3"]);
    assert_eq!(ambiguous.code, 1);
    assert!(ambiguous.stderr.starts_with("AmbiguousSplit"), "{}", ambiguous.stderr);
    assert!(ambiguous.stderr.contains('7'));
    let run = dloop(&["construct", "exchange", file, "--pair", "2,3", "--x", "1,2,3,4,5,6,7,8"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(dloop::Table::parse(&run.stdout).unwrap().to_loop().is_some());
    let bad = dloop(&["construct", "exchange", file, "--pair", "2,3", "--x", "1,2"]);
    assert!(bad.stderr.starts_with("BadSplit"));
}

#[test]
fn principal_and_parastrophe() {
    let run = dloop(&["construct", "principal", &fixture("T_ex4_star"), "--a", "1", "--b", "1"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.stdout.lines().count(), 7);
    let star = dloop(&["parastrophe", &fixture("T_41"), "--kind", "star"]);
    assert_eq!(star.code, 0);
    assert_eq!(star.stdout.lines().count(), 6);
    assert_eq!(dloop(&["parastrophe", &fixture("T_41"), "--kind", "nope"]).code, 2);
}

#[test]
fn isotopy_and_isomorphism() {
    let out = dloop(&["isotopy", &fixture("T_ex3"), &fixture("T_ex2")]);
    let iso = find_isotopy(&fixtures::table("T_ex3"), &fixtures::table("T_ex2")).unwrap().unwrap();
    assert_eq!(out.stdout, format!("alpha={} beta={} gamma={}\n", iso.alpha, iso.beta, iso.gamma));
    assert_eq!(dloop(&["isotopy", &fixture("T_41"), &fixture("T_42")]).stdout, "none\n");
    assert_eq!(dloop(&["isomorphic", &fixture("T_41"), &fixture("T_41")]).stdout, "(1)(2)(3)(4)(5)(6)\n");
    assert_eq!(dloop(&["isomorphic", &fixture("T_ex2"), &fixture("T_ex3")]).stdout, "none\n");
    let mismatch = dloop(&["isotopy", &fixture("T_ex2"), &fixture("T_ex1")]);
    assert_eq!(mismatch.code, 1);
    assert!(mismatch.stderr.starts_with("OrderMismatch"));
}

#[test]
fn witness_output() {
    assert_eq!(dloop(&["witness", &fixture("T_ex2")]).stdout, "p=1 sigma=(1)(2)(3)(4 5)(6)\n");
    assert!(dloop(&["witness", &fixture("T_ex4_star")]).stdout.starts_with("p="));
}

#[test]
fn census_with_classes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dloop(&["census", "--order", "6", "--proper-d", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("classes: 4\n"));
    assert_eq!(std::fs::read_to_string(dir.path().join("report.txt")).unwrap(), out.stdout);
    for k in 1..=4 {
        let text = std::fs::read_to_string(dir.path().join(format!("d6_{k}.tbl"))).unwrap();
        assert!(dloop::Table::parse(&text).unwrap().to_loop().is_some());
    }
    let counts = dloop(&["census", "--order", "4"]);
    assert!(counts.stdout.contains("loops: 4\n"));
    assert!(!counts.stdout.contains("classes"));
    assert_eq!(dloop(&["census", "--order", "7"]).code, 1);
}

#[test]
fn domain_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.tbl");
    std::fs::write(&bad, "1 2\n1 2\n").unwrap();
    let out = dloop(&["check", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("NotLatin"));
    assert_eq!(out.stderr.lines().count(), 1);

    let out = dloop(&["construct", "ip-to-d", &fixture("T_ex2"), "--a", "2"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("NotIPLoop"));

    let out = dloop(&["check", "/nonexistent/table.tbl"]);
    assert!(out.stderr.starts_with("Io"));

    assert_eq!(dloop(&["frobnicate"]).code, 2);
    assert_eq!(dloop(&["check"]).code, 2);
    assert_eq!(dloop(&["--help"]).code, 0);
}

#[test]
fn output_is_deterministic() {
    let runs: [&[&str]; 5] = [
        &["tracks", &fixture("T_ex5a")],
        &["isotopy", &fixture("T_ex3"), &fixture("T_ex2")],
        &["witness", &fixture("T_ex4_star")],
        &["census", "--order", "6", "--proper-d"],
        &["check", &fixture("T_44"), "--format", "json"],
    ];
    for args in runs {
        let a = dloop(args);
        let b = dloop(args);
        assert_eq!((a.code, &a.stdout, &a.stderr), (b.code, &b.stdout, &b.stderr), "{args:?}");
    }
}
