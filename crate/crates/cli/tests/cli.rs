use std::path::Path;
use std::process::{Command, Output};

fn ikeda(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ikeda")).arg("--out").arg(out).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eigenform_files_and_gates() {
    let dir = tempfile::tempdir().unwrap();
    let o = ikeda(dir.path(), &["eigenform", "--weight", "18", "--prec", "100"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(dir.path().join("eigenform-w18-prec100.txt")).unwrap();
    assert!(text.starts_with("# format: qseries v1\nweight=18\ntruncation=100\n0:0/1\n1:1/1\n2:-528/1\n"));

    let o = ikeda(dir.path(), &["eigenform", "--weight", "22", "--prec", "50"]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("eigenform-w22-prec50.txt")).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#') && l.contains(':')).count(), 50);

    let o = ikeda(dir.path(), &["eigenform", "--weight", "12"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("k = 6 is even"), "{}", stderr(&o));
    let o = ikeda(dir.path(), &["eigenform", "--weight", "50"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("dimension"), "{}", stderr(&o));
}

#[test]
fn lift_writes_expansion_provenance_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let o = ikeda(dir.path(), &["lift", "--weight", "18", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let exp = std::fs::read_to_string(dir.path().join("lift-w18-b10.txt")).unwrap();
    assert!(exp.starts_with("# format: siegel-expansion v1\ngroup=Sp4\nweight=10\ntrace_bound=10\n"));
    let prov = std::fs::read_to_string(dir.path().join("lift-w18-b10.provenance.txt")).unwrap();
    assert!(prov.starts_with("# format: lift-provenance v1\n"));
    let checks = std::fs::read_to_string(dir.path().join("lift-w18-b10.checks.txt")).unwrap();
    assert!(checks.starts_with("# format: lift-checks v1\n"));
    assert!(checks.ends_with("overall=PASS\n"), "{checks}");
    assert_eq!(checks.matches("status=PASS").count(), 5);

    let o = ikeda(dir.path(), &["lift", "--weight", "20"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("k = 10 is even"));
    let o = ikeda(dir.path(), &["lift", "--weight", "18", "--bound", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("empty"));
}

#[test]
fn lfactor_reports() {
    let dir = tempfile::tempdir().unwrap();
    let o = ikeda(dir.path(), &["lfactor", "--group", "Sp", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("check=standard-Sp-n2 status=PASS degree=9"));
    let o = ikeda(dir.path(), &["lfactor", "--group", "E73"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree=56"));
    assert!(stdout(&o).contains("arthur dims 4+34+18"));
    let o = ikeda(dir.path(), &["--format", "structured", "lfactor", "--group", "Miyawaki"]);
    assert_eq!(o.status.code(), Some(0));
    let report = stdout(&o);
    assert!(report.starts_with("# format: lfactor-report v1\n"));
    assert!(report.contains("check=miyawaki-identity status=PASS degree=12"));
    assert_eq!(report, std::fs::read_to_string(dir.path().join("lfactor-miyawaki-n1.txt")).unwrap());
    let o = ikeda(dir.path(), &["lfactor", "--group", "G2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("unknown group"));
}

#[test]
fn fj_eisenstein_lift_and_scope_gate() {
    let dir = tempfile::tempdir().unwrap();
    let o = ikeda(dir.path(), &["fj", "--weight", "12", "--S", "1", "--bound", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = std::fs::read_to_string(dir.path().join("fj-report-S1.txt")).unwrap();
    assert!(report.starts_with("# format: fj-report v1\n"));
    assert_eq!(report.matches("pattern=cohen").count(), 2);
    assert!(report.contains("component_weight=23/2"));
    let comp = std::fs::read_to_string(dir.path().join("fj-eis-w12-S1-xi1.txt")).unwrap();
    assert!(comp.starts_with("# format: fj-component v1\n"));

    let o = ikeda(dir.path(), &["fj", "--weight", "12", "--S", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("S = 3"));

    assert_eq!(ikeda(dir.path(), &["lift", "--weight", "22", "--bound", "8"]).status.code(), Some(0));
    let input = dir.path().join("lift-w22-b8.txt");
    let o = ikeda(dir.path(), &["fj", "--input", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report = std::fs::read_to_string(dir.path().join("fj-report-S1.txt")).unwrap();
    assert_eq!(report.matches("constant_term=0/1 status=PASS").count(), 2);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(ikeda(dir.path(), &["--bogus"]).status.code(), Some(1));
    assert_eq!(ikeda(dir.path(), &["lift"]).status.code(), Some(1));
    assert_eq!(ikeda(dir.path(), &["eigenform", "--weight", "x"]).status.code(), Some(1));
    assert_eq!(ikeda(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn corrupted_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "# format: siegel-expansion v1\ngroup=Sp4\nweight=10\ntrace_bound=4\n1 1 x 3/1\n").unwrap();
    let o = ikeda(dir.path(), &["fj", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
