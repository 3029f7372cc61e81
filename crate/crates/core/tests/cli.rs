use std::path::Path;
use std::process::{Command, Output};

use qball::harness::StateFile;
use qball::states::{closed_form_spectrum, flatten_spectrum, SchmidtSpec};

fn qball(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qball")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let o = qball(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
#[allow(clippy::approx_constant)]
fn construct_sigma_phi_has_closed_form_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "s.json", &["--family", "sigma-phi", "--d", "3", "--etas", "0.7071,0.7071"]);
    let rho = StateFile::read(Path::new(&path)).unwrap().to_state().unwrap();
    let spec = SchmidtSpec::normalized(&[0.7071, 0.7071]).unwrap();
    let closed = flatten_spectrum(&closed_form_spectrum(&spec, 3).unwrap());
    for (a, b) in rho.spectrum().iter().zip(&closed) {
        assert!((a - b).abs() <= 1e-10);
    }
}

#[test]
fn witness_on_ppt_state_reports_certified_undistillable() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "s.json", &["--family", "sigma-phi", "--d", "3", "--etas", "1,1"]);
    let o = qball(&["witness", &path]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no witness found; state PPT on cut 1|2 (certified undistillable across this cut)"));
}

#[test]
fn classify_reports_distillable_k2_state() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "p.json", &["--family", "perturbed-singlet", "--d", "3", "--epsilon", "0.1"]);
    let o = qball(&["classify", &path, "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["overall"]["verdict"], "DISTILLABLE_CERTIFIED");
    assert_eq!(v["overall"]["n_copies"], 1);
}

#[test]
fn classify_maximally_mixed_is_separable() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "m.json", &["--family", "maximally-mixed", "--dims", "2,3"]);
    let o = qball(&["classify", &path]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verdict: SEPARABLE_CERTIFIED"));
}

#[test]
fn malformed_trace_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"dims":[2],"matrix":[[[0.45,0],[0,0]],[[0,0],[0.45,0]]]}"#).unwrap();
    let o = qball(&["classify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("trace invariant"));
}

#[test]
fn restricted_verify_returns_two_results() {
    let o = qball(&["verify", "--claims", "C5,C6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<_> = v["results"].as_array().unwrap().iter().map(|r| r["id"].clone()).collect();
    assert_eq!(ids, ["C5", "C6"]);
}

#[test]
fn verify_is_seed_independent_in_outcome() {
    let run = |seed: &str| {
        let o = qball(&["verify", "--claims", "C1,C4,C10", "--seed", seed, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["results"].as_array().unwrap().iter().map(|r| r["pass"].as_bool().unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(run("0"), run("17"));
}

#[test]
fn scan_bell_ray_reports_one_transition() {
    let o = qball(&["scan", "--family", "bell", "--d", "2", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let t = v["transitions"].as_array().unwrap();
    assert_eq!(t.len(), 1);
    let (lo, hi) = (t[0]["t_low"].as_f64().unwrap(), t[0]["t_high"].as_f64().unwrap());
    assert!(lo <= 1.0 / 3.0 && 1.0 / 3.0 <= hi && hi - lo <= 1e-9);
}

#[test]
fn unknown_family_and_claim_are_input_errors() {
    assert_eq!(qball(&["construct", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(qball(&["verify", "--claims", "C99"]).status.code(), Some(2));
}
