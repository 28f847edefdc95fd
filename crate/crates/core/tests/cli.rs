use std::path::PathBuf;
use std::process::{Command, Output};

use group_spectra::census::{read_csv_report, read_json_report};
use group_spectra::spectrum::OrderSpectrum;

fn gspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspec")).args(args).output().expect("run gspec")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn suite(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("suites").join(name)
}

#[test]
fn rho_in_both_modes() {
    for mode in ["spectrum", "concrete"] {
        let o = gspec(&["rho", "-e", "wr2(C(2))^1", "-k", "2", "--mode", mode]);
        assert!(o.status.success());
        assert!(stdout(&o).starts_with("rho_2(wr2(C(2))^1) = 3/4"), "{}", stdout(&o));
    }
}

#[test]
fn spectrum_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a5.spec");
    let o = gspec(&["spectrum", "-e", "A(5)", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let s = OrderSpectrum::from_text(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(s.group_order(), &60u32.into());
    assert_eq!(s.count(5), 24u32.into());
}

#[test]
fn verify_reports() {
    let o = gspec(&["verify", "--suite", suite("desk.suite").to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let results = read_json_report(o.stdout.as_slice()).unwrap();
    assert!(!results.is_empty());
    assert!(results.iter().all(|r| r.pass == Some(true)));

    let o = gspec(&["verify", "--suite", suite("desk.suite").to_str().unwrap(), "--format", "csv"]);
    let strip = |mut r: group_spectra::census::CheckResult| {
        r.millis = 0;
        r
    };
    let csv: Vec<_> = read_csv_report(o.stdout.as_slice()).unwrap().into_iter().map(strip).collect();
    assert_eq!(csv, results.into_iter().map(strip).collect::<Vec<_>>());
}

#[test]
fn witnesses_suite_passes() {
    let o = gspec(&["verify", "--suite", suite("witnesses.suite").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("26 passed, 0 failed, 0 skipped"), "{}", stdout(&o));
}

#[test]
fn failing_suite_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.suite");
    std::fs::write(&path, "wrong | A(5) | 2 | 1/2 | both\nright | A(5) | 2 | 4/15 | formula\n").unwrap();
    let o = gspec(&["verify", "--suite", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL wrong") && text.contains("PASS right"), "{text}");
}

#[test]
fn over_cap_checks_are_skipped() {
    let o = gspec(&["--cap", "100", "verify", "--suite", suite("desk.suite").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIP m10-8"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(gspec(&["rho", "-e", "PSL(3,4)", "-k", "2"]).status.code(), Some(2));
    assert_eq!(gspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gspec(&["--cap", "50", "subgroups", "--index2", "-e", "S(5)"]).status.code(), Some(3));
    assert_eq!(gspec(&["--threads", "2", "rho", "-e", "A(5)", "-k", "2"]).status.code(), Some(0));
    let err = gspec(&["rho", "-e", "PSL(3,4)", "-k", "2"]).stderr;
    assert!(String::from_utf8_lossy(&err).contains("load(\"psl3_4.gens\")"));
}

#[test]
fn subgroups_sylow_coset() {
    let o = gspec(&["subgroups", "--index2", "-e", "S(4) * C(2)"]);
    assert!(stdout(&o).starts_with("3 subgroups of index 2"), "{}", stdout(&o));
    let o = gspec(&["sylow", "-e", "A(5)", "-p", "5", "--check-bound", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("normaliser of order 10"), "{}", stdout(&o));
    let o = gspec(&["coset-rho", "--group", "A(5)", "--rep", "(1,2)", "-k", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // the odd coset of A5 in S5 has 10 transpositions and no other involutions
    assert!(stdout(&o).starts_with("rho_2(x A(5)) = 1/6"), "{}", stdout(&o));
}

#[test]
fn custom_fixture_dir() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("manifest.csv"), "# label, path, expected_order\nv4, v4.gens, 4\n").unwrap();
    std::fs::write(dir.path().join("v4.gens"), "degree 4\ngen (1,2)(3,4)\ngen (1,3)(2,4)\n").unwrap();
    let o = gspec(&["--fixtures", dir.path().to_str().unwrap(), "rho", "-e", "load(\"v4\")", "-k", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("rho_2(load(\"v4\")) = 1/1"), "{}", stdout(&o));
}
