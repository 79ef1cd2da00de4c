use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use braidlift_core::io::{fixture_workspace, negative_workspace};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_braidlift"))
}

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn copy_dir(from: &Path, to: &Path) {
    for e in fs::read_dir(from).unwrap() {
        let p = e.unwrap().path();
        if p.is_file() {
            fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
        }
    }
}

#[test]
fn shipped_fixtures_match_the_builtin_set() {
    for (dir, ws) in [(shipped(), fixture_workspace()), (shipped().join("negative"), negative_workspace())] {
        let tmp = tempfile::tempdir().unwrap();
        let written = ws.write_dir(tmp.path()).unwrap();
        let mut shipped_files: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).filter(|p| p.is_file()).collect();
        shipped_files.sort();
        assert_eq!(shipped_files.len(), written.len(), "{} is out of date; regenerate with `braidlift fixtures`", dir.display());
        for w in written {
            let name = w.file_name().unwrap();
            assert_eq!(fs::read(&w).unwrap(), fs::read(dir.join(name)).unwrap(), "{name:?} differs");
        }
    }
}

#[test]
fn validate_reports_and_exit_codes() {
    let ok = run(&["validate", arg(&shipped().join("svec.base"))]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("CHECK base:SVEC.braiding.hexagon_left PASS"));

    let bad = run(&["validate", arg(&shipped().join("negative/svec_broken.base"))]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("CHECK base:SVEC_BROKEN.braiding.hexagon_left FAIL u=1 v=1 w=1"), "{}", stdout(&bad));

    let vm = run(&["validate", "--level", "vmoncat", arg(&shipped().join("vhat_svec.vcat"))]);
    assert_eq!(vm.status.code(), Some(0));
    assert!(stdout(&vm).contains("vmoncat.braided_interchange PASS"));

    let wrong_level = run(&["validate", "--level", "graded", arg(&shipped().join("svec.base"))]);
    assert_eq!(wrong_level.status.code(), Some(2));
}

#[test]
fn validate_writes_json_and_out_file() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("report.json");
    let o = run(&["validate", "--format", "json", "--out", arg(&out), arg(&shipped().join("pt2_z2.grading"))]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["entries"].as_array().unwrap().iter().any(|e| e["check"] == "grading:PT2_Z2.graded.faithful"));

    let bad = run(&["validate", arg(&shipped().join("negative/pt2_misgraded.grading"))]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("graded.faithful FAIL grade=1"), "{}", stdout(&bad));
}

#[test]
fn apply_round_trips_files_byte_for_byte() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = format!("{}/", tmp.path().display());
    for (fwd, file, cell, back) in [("p1", "incl.fun", "incl.cell1", "q1"), ("p1", "twist.fun", "twist.cell1", "q1"), ("p2", "sign.nat", "sign.cell2", "q2")] {
        let o = run(&["apply", "--op", fwd, "--out", &dir, arg(&shipped().join(file))]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let out = tmp.path().join(format!("back_{file}"));
        let o = run(&["apply", "--op", back, "--out", arg(&out), arg(&tmp.path().join(cell))]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(fs::read(&out).unwrap(), fs::read(shipped().join(file)).unwrap(), "{file}");
    }
}

#[test]
fn apply_p0_and_adjoint_are_deterministic() {
    let a = run(&["apply", "--op", "p0", arg(&shipped().join("vhat_triv.vcat"))]);
    let b = run(&["apply", "--op", "p0", arg(&shipped().join("vhat_triv.vcat"))]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let m: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(m["kind"], "modtens");
    assert_eq!(m["provenance"]["computed"]["source"], "Vhat_TRIV");

    let adj = run(&["apply", "--op", "adjoint", arg(&shipped().join("vhat_svec.vcat"))]);
    assert_eq!(adj.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&adj.stdout).unwrap();
    assert_eq!(v["kind"], "adjunction");
    assert_eq!(v["tensored"], true);
}

#[test]
fn apply_refuses_invalid_input_unless_forced() {
    let tmp = tempfile::tempdir().unwrap();
    copy_dir(&shipped(), tmp.path());
    let path = tmp.path().join("twist.fun");
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    v["components"][0]["coeffs"][0] = "0".into();
    fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let o = run(&["apply", "--op", "p1", arg(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("functor.identity FAIL"), "{}", stdout(&o));
    let forced = run(&["apply", "--op", "p1", "--force", arg(&path)]);
    assert_ne!(forced.status.code(), Some(1));
}

#[test]
fn roundtrip_is_deterministic_and_records_its_seed() {
    let a = run(&["roundtrip", arg(&shipped()), "--seed", "7", "--trials", "20"]);
    let b = run(&["roundtrip", arg(&shipped()), "--seed", "7", "--trials", "20"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("CHECK run INFO seed=7"));
}

#[test]
fn zero_trials_is_a_vacuous_pass() {
    let o = run(&["roundtrip", arg(&shipped()), "--trials", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CHECK mates.random INFO vacuous random suite trials=0"));
}

#[test]
fn corrupted_fixture_dir_names_the_failing_suite() {
    let tmp = tempfile::tempdir().unwrap();
    copy_dir(&shipped(), tmp.path());
    let path = tmp.path().join("pt2.vcat");
    let mut v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    v["j"][1][0] = "2".into();
    fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let o = run(&["roundtrip", arg(tmp.path()), "--trials", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("suite `validate` failed"), "{err}");
    assert!(stdout(&o).contains("CHECK run INFO first_failing_suite=validate"));
    assert!(stdout(&o).contains("CHECK validate.vcat:PT2.vcat.unit_left FAIL"), "{}", stdout(&o));
}

#[test]
fn missing_references_are_load_errors() {
    let tmp = tempfile::tempdir().unwrap();
    fs::copy(shipped().join("incl.fun"), tmp.path().join("incl.fun")).unwrap();
    let o = run(&["validate", arg(&tmp.path().join("incl.fun"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("UNIT"));
}
