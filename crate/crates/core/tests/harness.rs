use kpoly::formats::{emit_graph6, parse_graph6_stream};
use kpoly::generators::basic::{complete, stacked_prism};
use kpoly::harness::{catalog, run_experiment, Bounds, Verdict, EXPERIMENTS};
use kpoly::{Error, Limits};

#[test]
fn reports_are_byte_identical_across_runs() {
    for name in ["stacked_rule", "cubic_census", "dou_roundtrip"] {
        let a = run_experiment(name, &Bounds::default()).unwrap().to_json();
        let b = run_experiment(name, &Bounds::default()).unwrap().to_json();
        assert_eq!(a, b, "{name}");
        assert!(!a.contains("elapsed"));
    }
}

#[test]
fn unknown_experiment() {
    assert_eq!(run_experiment("nope", &Bounds::default()).unwrap_err(), Error::UnknownExperiment("nope".into()));
    assert_eq!(EXPERIMENTS.len(), 10);
}

#[test]
fn small_cap_reports_incomplete() {
    let bounds = Bounds { limits: Some(Limits::default().with_max_n(10)), ..Bounds::default() };
    let r = run_experiment("triple_expressibility", &bounds).unwrap();
    assert_eq!(r.verdict, Verdict::Incomplete);
    assert!(r.budget_exceeded > 0 && r.violations == 0);
}

#[test]
fn ingest_classify_reads_a_stream() {
    let text = [complete(4).unwrap(), stacked_prism(5, 2).unwrap(), complete(5).unwrap()]
        .iter()
        .map(emit_graph6)
        .collect::<Vec<_>>()
        .join("\n");
    let stream = parse_graph6_stream(&text).unwrap();
    let r = run_experiment("ingest_classify", &Bounds { stream: Some(stream), ..Bounds::default() }).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.instances.len(), 3);
}

#[test]
fn catalog_ingests_cleanly() {
    let r = run_experiment("ingest_classify", &Bounds::default()).unwrap();
    assert_eq!(r.instances.len(), catalog().len());
    assert_eq!(r.verdict, Verdict::Pass);
}
