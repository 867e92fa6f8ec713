use std::process::{Command, Output};

fn kpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpoly")).args(args).env_remove("KPOLY_MAX_N").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_and_cover() {
    let o = kpoly(&["gen", "complete", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "C~");
    let o = kpoly(&["--format", "dot", "cover", "C~"]);
    assert_eq!(stdout(&o).matches("label=").count(), 8);
    let o = kpoly(&["--format", "json", "gen", "complete", "2"]);
    assert_eq!(stdout(&o).trim(), r#"{"n":2,"edges":[[0,1]]}"#);
}

#[test]
fn iso_exit_codes() {
    let cube = stdout(&kpoly(&["gen", "stacked_prism", "4", "2"]));
    let cover_k4 = stdout(&kpoly(&["cover", "C~"]));
    assert!(kpoly(&["iso", cube.trim(), cover_k4.trim()]).status.success());
    assert_eq!(kpoly(&["iso", cube.trim(), "C~"]).status.code(), Some(1));
}

#[test]
fn roots_of_desargues() {
    let d = stdout(&kpoly(&["gen", "desargues"]));
    let o = kpoly(&["roots", d.trim()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn experiment_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = kpoly(&["--report", path.to_str().unwrap(), "experiment", "triple_expressibility"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "PASS");
    assert_eq!(kpoly(&["experiment", "cancellation"]).status.code(), Some(1));
    assert_eq!(kpoly(&["--max-n", "10", "experiment", "cc_rule"]).status.code(), Some(3));
    assert_eq!(kpoly(&["experiment", "nope"]).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(kpoly(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(kpoly(&["cover", "C"]).status.code(), Some(2));
    assert_eq!(kpoly(&["gen", "t3333", "T9,F1"]).status.code(), Some(2));
}

#[test]
fn generators_and_analyses() {
    let j = stdout(&kpoly(&["gen", "t3333", "T1,T2m,F2"]));
    let c: serde_json::Value = serde_json::from_slice(&kpoly(&["classify", j.trim()]).stdout).unwrap();
    assert_eq!(c["tag"], "C3");
    let h = stdout(&kpoly(&["gen", "dou_h", "4", "--chords", "1-6,2-5"]));
    let p = stdout(&kpoly(&["product", "prism", h.trim(), "A_"]));
    let jj = stdout(&kpoly(&["gen", "dou_j", "4", "--chords", "1-6,2-5"]));
    let cj = stdout(&kpoly(&["cover", jj.trim()]));
    assert!(kpoly(&["iso", p.trim(), cj.trim()]).status.success());
    let forms: serde_json::Value =
        serde_json::from_slice(&kpoly(&["cartesian-forms", stdout(&kpoly(&["gen", "stacked_prism", "4", "3"])).trim()]).stdout).unwrap();
    assert_eq!(forms["variants"].as_array().unwrap().len(), 2);
    let check: serde_json::Value = serde_json::from_slice(&kpoly(&["check", "C~"]).stdout).unwrap();
    assert_eq!(check["cover_polyhedral"], true);
    assert_eq!(check["factor_witness"], true);
    let faces: serde_json::Value = serde_json::from_slice(&kpoly(&["faces", "C~"]).stdout).unwrap();
    assert_eq!(faces["stats"]["r"], 4);
}

#[test]
fn catalog_entries() {
    let list: serde_json::Value = serde_json::from_slice(&kpoly(&["catalog"]).stdout).unwrap();
    assert!(list.as_array().unwrap().iter().any(|e| e["name"] == "petersen_twin" && e["provenance"] == "derived-representative"));
    assert_eq!(stdout(&kpoly(&["catalog", "tetrahedron"])).trim(), "C~");
    assert_eq!(kpoly(&["catalog", "nothing"]).status.code(), Some(2));
}
