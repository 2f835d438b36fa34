use std::process::Command;

use ramify::audit::audit;
use ramify::catalog;
use ramify::report::{run_built, VerdictReport};

fn ramify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ramify")).args(args).output().expect("binary runs")
}

#[test]
fn list_has_the_core_examples() {
    let names: Vec<&str> = catalog::entries().iter().map(|e| e.name).collect();
    assert!(names.len() >= 15);
    for n in ["gauss-p2", "gauss-p3", "gauss-p5", "regular-s3", "alpha2-trivial"] {
        assert!(names.contains(&n), "{n}");
    }
    assert!(catalog::find("GAUSS-P2").is_some());
    let out = ramify(&["catalog", "list"]);
    let listed: Vec<(String, String)> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(listed.len(), names.len());
}

#[test]
fn every_entry_builds_and_audits() {
    for e in catalog::entries() {
        let doc = e.document();
        let built = doc.build().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let report = run_built(&doc, &built, None).unwrap();
        let a = audit(&doc, &report).unwrap();
        assert!(a.passed(), "{}: {:?}", e.name, a.failures);
        assert!(!a.verified.is_empty());
    }
}

#[test]
fn shown_documents_reproduce_catalog_runs() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["gauss-p3", "mu2-grading-f2", "regular-plus-trivial"] {
        let shown = ramify(&["catalog", "show", name]);
        let file = dir.path().join(format!("{name}.json"));
        std::fs::write(&file, &shown.stdout).unwrap();
        let checked = ramify(&["check", file.to_str().unwrap()]);
        let run = ramify(&["catalog", "run", name]);
        assert!(checked.status.success());
        assert_eq!(checked.stdout, run.stdout, "{name}");
    }
}

fn report(name: &str) -> VerdictReport {
    let doc = catalog::find(name).unwrap().document();
    ramify::run(&doc, None).unwrap()
}

#[test]
fn gauss_p5_is_a_torsor() {
    let r = report("gauss-p5");
    assert!(r.total_integral.as_ref().unwrap().tame);
    let t = r.torsor.unwrap();
    assert!(t.free && t.torsor);
    assert!(t.right_inverse.is_some());
    assert!(r.inertia.unwrap().iter().all(|i| i.trivial));
}

#[test]
fn alpha2_trivial_has_a_certificate() {
    let r = report("alpha2-trivial");
    let t = r.total_integral.unwrap();
    assert!(!t.tame);
    assert!(t.alpha.is_none());
    assert!(t.certificate.is_some());
}

#[test]
fn gauss_p2_is_ramified() {
    let r = report("gauss-p2");
    assert!(!r.total_integral.unwrap().tame);
    let t = r.torsor.unwrap();
    assert!(!t.free && !t.torsor);
    assert!(t.cokernel_witness.is_some());
    assert!(r.inertia.unwrap().iter().all(|i| !i.trivial && i.dim == 2));
}

#[test]
fn tameness_matches_inertia_and_trace() {
    for e in catalog::entries() {
        let r = report(e.name);
        let t = r.total_integral.as_ref().unwrap();
        if let Some(trace) = &t.trace {
            assert!(trace.agrees_with_integral, "{}", e.name);
        }
        let eq = r.equivalence.as_ref().unwrap();
        if eq.flat_over_invariants {
            assert_eq!(eq.inertia_linearly_reductive, Some(t.tame), "{}", e.name);
        }
    }
}

#[test]
fn shipped_schema_matches_the_parser() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/action-document.schema.json")).unwrap();
    let schema: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(schema["additionalProperties"], false);
    let checks: Vec<&str> = schema["$defs"]["check"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let names: Vec<&str> = ramify::Check::ALL.iter().map(|c| c.name()).collect();
    assert_eq!(checks, names);
    let props = schema["properties"].as_object().unwrap();
    for e in catalog::entries() {
        let doc = serde_json::to_value(e.document()).unwrap();
        for key in doc.as_object().unwrap().keys() {
            assert!(props.contains_key(key), "{}: {key}", e.name);
        }
    }
}
