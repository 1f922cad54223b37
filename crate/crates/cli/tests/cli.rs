use std::ffi::OsStr;
use std::path::PathBuf;
use std::process::{Command, Output};

use qrw::io::ReportDocument;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

struct Run(Command);

impl Run {
    fn arg(mut self, a: impl AsRef<OsStr>) -> Self {
        self.0.arg(a);
        self
    }

    fn args<I: IntoIterator<Item = S>, S: AsRef<OsStr>>(mut self, a: I) -> Self {
        self.0.args(a);
        self
    }

    fn env(mut self, k: &str, v: &str) -> Self {
        self.0.env(k, v);
        self
    }

    fn output(mut self) -> Output {
        self.0.output().unwrap()
    }

    fn assert(self) -> Finished {
        Finished(self.output())
    }
}

struct Finished(Output);

impl Finished {
    fn code(self, expected: i32) -> Self {
        assert_eq!(
            self.0.status.code(),
            Some(expected),
            "stdout: {}\nstderr: {}",
            String::from_utf8_lossy(&self.0.stdout),
            String::from_utf8_lossy(&self.0.stderr)
        );
        self
    }

    fn success(self) -> Self {
        self.code(0)
    }

    fn stdout(self, expected: impl AsRef<str>) -> Self {
        assert_eq!(String::from_utf8_lossy(&self.0.stdout), expected.as_ref());
        self
    }
}

fn qrw() -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qrw"));
    cmd.current_dir(fixtures()).env_remove("QRW_ENUM_LIMIT");
    Run(cmd)
}

fn stdout(run: Run) -> String {
    String::from_utf8(run.output().stdout).unwrap()
}

#[test]
fn gen_then_validate() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("l3.qrw");
    qrw().args(["gen", "luk", "3", "-o"]).arg(&file).assert().success().stdout("");
    let written = std::fs::read_to_string(&file).unwrap();
    assert_eq!(written, std::fs::read_to_string(fixtures().join("l3.qrw")).unwrap());
    qrw().arg("validate").arg(&file).arg("--strict-link").assert().code(0);
    qrw().args(["gen", "luk", "1"]).assert().code(2);
}

#[test]
fn validate_text_and_exit_codes() {
    qrw().args(["validate", "l2.qrw"]).assert().code(0).stdout(golden("validate_l2.txt"));
    qrw().args(["validate", "quasi4.qrw"]).assert().code(0);
    qrw().args(["validate", "quasi4.qrw", "--strict-link"]).assert().code(1);
}

#[test]
fn validate_json_matches_golden_and_reserializes() {
    let out = stdout(qrw().args(["validate", "l3.qrw", "--strict-link", "--json"]));
    assert_eq!(out, golden("validate_l3.json"));
    assert_eq!(ReportDocument::from_json(&out).unwrap().to_json(), out);
}

#[test]
fn check_reports_witness() {
    qrw()
        .args(["check", "l3.qrw", "--subset", "2", "--implicative"])
        .assert()
        .code(1)
        .stdout("{2} is not an implicative filter: I3 fails at (1, 1, 0)\n");
    qrw()
        .args(["check", "l3-named.qrw", "--subset", "2", "--implicative"])
        .assert()
        .code(1)
        .stdout("{1} is not an implicative filter: I3 fails at (½, ½, 0)\n");
    qrw().args(["check", "l3.qrw", "--subset", "2"]).assert().code(0);
    qrw().args(["check", "l3.qrw", "--subset", "1,2"]).assert().code(1);
    qrw().args(["check", "l3.qrw", "--subset", "5"]).assert().code(2);
}

#[test]
fn check_json_carries_filter_verdict() {
    let out = stdout(qrw().args(["check", "l3.qrw", "--subset", "1,2", "--json"]));
    let doc = ReportDocument::from_json(&out).unwrap();
    let entry = &doc.filter_checks[0];
    assert_eq!(entry.subset, vec![1, 2]);
    assert_eq!(entry.failed_clause.as_deref(), Some("F3"));
    assert_eq!(entry.witness, Some(vec![1, 0]));
}

#[test]
fn filters_census() {
    qrw().args(["filters", "l3.qrw"]).assert().code(0).stdout("{2}\n{0, 1, 2}\n");
    qrw()
        .args(["filters", "l3.qrw", "--implicative"])
        .assert()
        .code(0)
        .stdout("{0, 1, 2}\n");
    let out = stdout(qrw().args(["filters", "l3.qrw", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["subsets"], serde_json::json!([[2], [0, 1, 2]]));
    qrw().args(["filters", "l3.qrw"]).env("QRW_ENUM_LIMIT", "2").assert().code(2);
}

#[test]
fn props_exit_codes() {
    qrw().args(["props", "l2.qrw", "--prop", "2.1.7"]).assert().code(0);
    qrw().args(["props", "l3.qrw", "--prop", "2.1.3", "--subset", "2"]).assert().code(1);
    qrw().args(["props", "l3.qrw", "--prop", "2.1.3"]).assert().code(2);
    qrw().args(["props", "l3.qrw", "--prop", "2.1.8", "--subset", "2"]).assert().code(2);
    qrw()
        .args(["props", "l3.qrw", "--prop", "2.1.8", "--subset", "2", "--p218-reading", "B"])
        .assert()
        .code(0);
    qrw().args(["props", "l3.qrw", "--prop", "9.9"]).assert().code(2);
    qrw().args(["props", "l3.qrw"]).assert().code(0);
    qrw()
        .args(["props", "l3.qrw", "--prop", "2.1.5", "--subset", "2", "--subset", "0,1,2"])
        .assert()
        .code(0);
}

#[test]
fn props_json_lists_verdicts() {
    let out = stdout(qrw().args(["props", "l3.qrw", "--subset", "0,1,2", "--p218-reading", "A", "--json"]));
    let doc = ReportDocument::from_json(&out).unwrap();
    let ids: Vec<&str> = doc.prop_verdicts.iter().map(|p| p.prop_id.as_str()).collect();
    assert_eq!(ids, ["2.1.2", "2.1.3", "2.1.4", "2.1.7", "2.1.8", "2.1.9", "2.1.10"]);
}

#[test]
fn usage_errors_go_to_stderr() {
    let out = qrw().args(["validate", "l3.qrw", "--bogus"]).output();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    qrw().arg("frobnicate").assert().code(2).stdout("");
    qrw().args(["search", "--order", "3", "--exhaustive", "--random"]).assert().code(2);
}

#[test]
fn parse_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.qrw");
    std::fs::write(&bad, "qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\n").unwrap();
    let out = qrw().arg("validate").arg(&bad).output();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("imp block"));
    qrw().args(["validate", "missing.qrw"]).assert().code(2);
}

#[test]
fn search_summary() {
    qrw()
        .args(["search", "--order", "2", "--strict-link"])
        .assert()
        .code(0)
        .stdout(golden("search_order2_strict.txt"));
    let out = stdout(qrw().args(["search", "--order", "3", "--json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["emitted"], v["models"].as_array().unwrap().len());
    assert_eq!(v["complete"], true);
    qrw().args(["search", "--order", "7"]).assert().code(2);
    qrw().args(["search", "--order", "3", "--hunt", "nope"]).assert().code(2);
    qrw().args(["search", "--order", "3", "--axioms", "W9"]).assert().code(2);
}

#[test]
fn search_output_is_independent_of_workers() {
    let one = stdout(qrw().args(["search", "--order", "4", "--workers", "1", "--json"]));
    let three = stdout(qrw().args(["search", "--order", "4", "--workers", "3", "--json"]));
    assert_eq!(one, three);
    let a = stdout(qrw().args(["search", "--order", "4", "--random", "--seed", "5", "--count", "300"]));
    let b = stdout(qrw().args(["search", "--order", "4", "--random", "--seed", "5", "--count", "300", "--workers", "2"]));
    assert_eq!(a, b);
}

#[test]
fn hunt_writes_files_and_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    qrw()
        .args(["search", "--order", "3", "--strict-link", "--hunt", "filter-not-implicative", "--out"])
        .arg(dir.path())
        .assert()
        .code(0);
    // The only strict model of order 3 is Ł3, written in its canonical labeling.
    let qrw_file = std::fs::read_to_string(dir.path().join("hit-0001.qrw")).unwrap();
    let found = qrw::io::parse(&qrw_file).unwrap();
    let l3 = qrw::search::gen_lukasiewicz(3).unwrap();
    assert_eq!(qrw::search::canonical_form(&found), qrw::search::canonical_form(&l3));
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("hit-0001.json")).unwrap()).unwrap();
    assert_eq!(sidecar["predicate"], "filter-not-implicative");
    assert_eq!(sidecar["witness"]["subset"], serde_json::json!([2]));
    assert!(!dir.path().join("hit-0002.qrw").exists());

    qrw()
        .args(["check", "--subset", "2", "--implicative"])
        .arg(dir.path().join("hit-0001.qrw"))
        .assert()
        .code(1);
}

#[test]
fn search_out_writes_models() {
    let dir = tempfile::tempdir().unwrap();
    qrw().args(["search", "--order", "4", "--strict-link", "--out"]).arg(dir.path()).assert().code(0);
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["model-0001.qrw", "model-0002.qrw"]);
    for n in names {
        qrw().arg("validate").arg(dir.path().join(n)).arg("--strict-link").assert().code(0);
    }
}
