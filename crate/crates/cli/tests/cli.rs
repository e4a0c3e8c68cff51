use std::path::Path;
use std::process::{Command, Output};

use hvdc_cli::workspace::{bundled_document, BUNDLED};
use hvdc_cli::{run, CliError, Options, Report, Workspace};
use hvdc_core::monoidal::DEFAULT_ARITY;

fn hvdc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hvdc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

const NON_ASSOCIATIVE: &str = r#"{"hvdc":1,"categories":{"m":{"objects":["*"],"hom":{"*→*":["id","a","b"]},
"comp":{"id∘id":"id","id∘a":"a","a∘id":"a","id∘b":"b","b∘id":"b",
"a∘a":"b","a∘b":"id","b∘a":"a","b∘b":"b"},"id":{"*":"id"}}}}"#;

#[test]
fn bundled_workspaces_round_trip_bit_exactly() {
    for name in BUNDLED {
        let doc = bundled_document(name, DEFAULT_ARITY).unwrap();
        let text = doc.to_json();
        let ws = Workspace::parse(&text, name, DEFAULT_ARITY).unwrap();
        let saved = ws.save();
        assert_eq!(saved, text, "{name}");
        let again = Workspace::parse(&saved, name, DEFAULT_ARITY).unwrap();
        assert_eq!(again.save(), saved, "{name}");
    }
}

#[test]
fn load_out_reproduces_the_exported_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json").display().to_string();
    let b = dir.path().join("b.json").display().to_string();
    assert!(hvdc(&["export", "walking_arrow", "--out", &a]).status.success());
    let o = hvdc(&["load", &a, "--out", &b]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn non_associative_table_is_rejected_by_triple() {
    match Workspace::parse(NON_ASSOCIATIVE, "m.json", DEFAULT_ARITY) {
        Err(CliError::Invalid(ps)) => {
            assert!(ps.iter().all(|p| p.entry == "category `m`" && !p.dangling));
            // (a∘a)∘b = b∘b = b but a∘(a∘b) = a∘id = a
            assert!(ps.iter().any(|p| p.message == "associativity: (a, a, b)"), "{ps:?}");
        }
        other => panic!("expected rejection, got {other:?}"),
    }
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m.json", NON_ASSOCIATIVE);
    let o = hvdc(&["load", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("associativity: (a, a, b)"));
}

#[test]
fn unknown_category_is_a_dangling_reference() {
    let text = r#"{"hvdc":1,"profunctors":{"p":{"source":"nowhere","target":"nowhere","elements":{}}}}"#;
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "p.json", text);
    let o = hvdc(&["load", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("profunctor `p`: dangling reference: unknown category `nowhere`"));
}

#[test]
fn dependents_of_broken_entries_are_not_dangling() {
    let text = NON_ASSOCIATIVE.strip_suffix('}').unwrap().to_string()
        + r#","profunctors":{"p":{"source":"m","target":"m","elements":{}}}}"#;
    match Workspace::parse(&text, "m.json", DEFAULT_ARITY) {
        Err(CliError::Invalid(ps)) => {
            let p = ps.iter().find(|p| p.entry == "profunctor `p`").unwrap();
            assert!(!p.dangling);
            assert!(p.message.contains("refers to invalid category `m`"));
        }
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "syn.json", "{\"hvdc\":1,\n \"categories\": [}\n");
    let o = hvdc(&["load", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("syn.json:2:15: parse error"), "{}", stderr(&o));
}

#[test]
fn unknown_fields_are_rejected() {
    let r = Workspace::parse(r#"{"hvdc":1,"categorys":{}}"#, "x", DEFAULT_ARITY);
    assert!(matches!(r, Err(CliError::Parse { .. })));
}

#[test]
fn unknown_command_exits_two() {
    let o = hvdc(&["run", "frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown command `frobnicate`"));
}

#[test]
fn yoneda_check_reports_bijection_sizes() {
    let o = hvdc(&["run", "yoneda-check", "walking_arrow", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.checks.iter().all(|c| c.verdict == "holds_exact"));
    // |Nat(y x, y p)| = |hom(x, p)| on 0 → 1
    let sizes = &r.outputs["bijection_sizes"];
    assert_eq!(sizes["y0"]["0"], 1);
    assert_eq!(sizes["y0"]["1"], 0);
    assert_eq!(sizes["y1"]["0"], 1);
    assert_eq!(sizes["y1"]["1"], 1);
}

#[test]
fn day_convolution_of_representables_is_representable() {
    let o = hvdc(&["run", "day", "z2", "y0", "y1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("check (y0⊛y1)≅y1: holds_exact"), "{text}");
    assert!(text.contains("iso:"));
}

#[test]
fn non_cartesian_cell_fails_with_a_reproducible_witness() {
    let o = hvdc(&["run", "check-cartesian", "id_cell_of_noniso", "--ctx", "default", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    let failing = r.checks.iter().find(|c| !c.holds()).unwrap();
    let witness = failing.witness.as_ref().expect("witness");
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "w.json", &witness.to_json());
    let v = hvdc(&["run", "check-cartesian", "id_cell_of_noniso", "--ctx", "default", "--verify-witness", &f]);
    assert_eq!(v.status.code(), Some(0), "{}", stderr(&v));
    assert!(stdout(&v).contains("check witness re-fails: holds_exact"));
}

#[test]
fn foreign_witness_does_not_verify() {
    let dir = tempfile::tempdir().unwrap();
    let doc = bundled_document("z2", DEFAULT_ARITY).unwrap();
    let f = write(dir.path(), "w.json", &doc.to_json());
    let v = hvdc(&["run", "check-cartesian", "id_cell_of_noniso", "--verify-witness", &f]);
    assert_ne!(v.status.code(), Some(0));
}

#[test]
fn json_reports_round_trip() {
    let ws = Workspace::from_document(&bundled_document("walking_arrow", DEFAULT_ARITY).unwrap(), "w", DEFAULT_ARITY).unwrap();
    let args = vec!["id_cell_of_noniso".to_string()];
    let r = run(&ws, "check-cartesian", &args, &Options::default()).unwrap();
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn doctrinal_adjunction_to_the_terminal_structure() {
    let o = hvdc(&["run", "doctrinal", "arrow_max→trivial#0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    // the right adjoint picks the top object, whose unit compositor 0 → 1 is not invertible
    assert_eq!(r.outputs["right_adjoint"]["objects"]["*"], "1");
    assert_eq!(r.outputs["genuinely_lax"], true);
}

#[test]
fn lift_along_top_only_is_declined() {
    let o = hvdc(&["run", "lift-kan", "top", "top_only"]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stdout(&o).contains("declined at arity"));
}

#[test]
fn lift_along_hom_holds() {
    let o = hvdc(&["run", "lift-kan", "arrow_max→arrow_max#0", "hom(arrow_max)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}
