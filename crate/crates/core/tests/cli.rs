//! The `homgroup` binary end to end: outputs, formats and exit codes.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_homgroup"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn fixture() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        (
            "c2.json",
            r#"{"order":2,"mul":[[0,1],[1,0]],"alpha":[0,1],"inv":[0,1],"unit":0}"#,
        ),
        (
            "z3.json",
            r#"{"order":3,"mul":[[0,1,2],[1,2,0],[2,0,1]],"endo":[0,2,1],"inv":[0,2,1],"unit":0}"#,
        ),
        // constant product with α = 0: a Hom-group whose inverse table is not an involution
        (
            "flat.json",
            r#"{"order":2,"mul":[[0,0],[0,0]],"alpha":[0,0],"inv":[0,0],"unit":0}"#,
        ),
        (
            "lazy.json",
            r#"{"order":3,"mul":[[0,0,0],[0,1,0],[0,0,0]],"alpha":[0,0,0],"inv":[0,1,2],"unit":0}"#,
        ),
        (
            "broken.json",
            r#"{"order":2,"mul":[[0,1],[1,1]],"alpha":[0,1],"inv":[0,1],"unit":0}"#,
        ),
        (
            "trivial_dl.json",
            r#"{"flavor":"dual_left","beta":[[1]],"left":[[[1]],[[1]]]}"#,
        ),
        (
            "sign_dr.json",
            r#"{"flavor":"dual_right","field":"gf:5","beta":[["1"]],"right":[[["1"]],[["-1"]]]}"#,
        ),
        (
            "bimodule.json",
            r#"{"flavor":"bimodule","beta":[[1]],"left":[[[1]],[[1]]],"right":[[[1]],[[1]]]}"#,
        ),
        ("bad.json", "{ not json"),
    ];
    for (name, text) in files {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn classical_cohomology_of_c2() {
    let dir = fixture();
    let (code, out, _) = run(
        dir.path(),
        &[
            "cohomology",
            "--group",
            "c2.json",
            "--field",
            "gf:2",
            "--max-degree",
            "5",
        ],
    );
    assert_eq!(code, 0);
    assert_eq!(json(&out)["betti"], serde_json::json!([1, 1, 1, 1, 1]));
    let (_, out, _) = run(
        dir.path(),
        &["cohomology", "--group", "c2.json", "--max-degree", "5"],
    );
    assert_eq!(json(&out)["betti"], serde_json::json!([1, 0, 0, 0, 0]));
    assert_eq!(json(&out)["field"], "rational");
}

#[test]
fn sign_module_takes_its_field_from_the_document() {
    let dir = fixture();
    let (code, out, _) = run(
        dir.path(),
        &[
            "cohomology",
            "--group",
            "c2.json",
            "--module",
            "sign_dr.json",
        ],
    );
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["field"], "gf:5");
    // H^n(Z/2; sign) vanishes away from characteristic 2
    assert_eq!(v["betti"], serde_json::json!([0, 0, 0]));
    let (code, _, err) = run(
        dir.path(),
        &[
            "cohomology",
            "--group",
            "c2.json",
            "--module",
            "sign_dr.json",
            "--field",
            "gf:3",
        ],
    );
    assert_eq!(code, 2);
    assert!(err.contains("disagrees"));
}

#[test]
fn twist_then_verify_reports_invertibility() {
    let dir = fixture();
    let (code, out, _) = run(dir.path(), &["twist", "z3.json"]);
    assert_eq!(code, 0);
    std::fs::write(dir.path().join("z3h.json"), &out).unwrap();
    let (code, out, _) = run(dir.path(), &["verify", "z3h.json"]);
    assert_eq!(code, 0);
    let doc = &json(&out)["documents"][0];
    assert_eq!(doc["kind"], "hom_group");
    assert_eq!(doc["invertibility"], serde_json::json!([0, 0, 0]));
    // 1·1 = 1 only reaches the unit after one application of α
    let (_, out, _) = run(dir.path(), &["verify", "lazy.json"]);
    assert_eq!(
        json(&out)["documents"][0]["invertibility"],
        serde_json::json!([0, 1, 0])
    );
}

#[test]
fn axiom_violations_exit_one_with_witnesses() {
    let dir = fixture();
    let (code, out, _) = run(dir.path(), &["verify", "broken.json", "c2.json"]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["documents"][0]["ok"], false);
    assert!(!v["documents"][0]["violations"]
        .as_array()
        .unwrap()
        .is_empty());
    assert_eq!(v["documents"][1]["ok"], true);
    let (code, out, _) = run(dir.path(), &["verify", "broken.json", "--format", "table"]);
    assert_eq!(code, 1);
    assert!(out.contains("VIOLATIONS"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let dir = fixture();
    assert_eq!(run(dir.path(), &["verify", "bad.json"]).0, 2);
    assert_eq!(run(dir.path(), &["verify", "missing.json"]).0, 2);
    assert_eq!(
        run(
            dir.path(),
            &["cohomology", "--group", "c2.json", "--field", "gf:6"]
        )
        .0,
        2
    );
    assert_eq!(run(dir.path(), &["verify", "trivial_dl.json"]).0, 2);
    // a bimodule document is neither a dual left nor a dual right module
    let (code, _, err) = run(
        dir.path(),
        &[
            "cohomology",
            "--group",
            "c2.json",
            "--module",
            "bimodule.json",
        ],
    );
    assert_eq!(code, 2);
    assert!(err.contains("bimodule"));
    assert_eq!(run(dir.path(), &["no-such-command"]).0, 2);
}

#[test]
fn module_verification_needs_the_group() {
    let dir = fixture();
    let (code, out, _) = run(
        dir.path(),
        &["verify", "trivial_dl.json", "--group", "c2.json"],
    );
    assert_eq!(code, 0);
    assert_eq!(json(&out)["documents"][0]["left_equivariant"], true);
}

#[test]
fn theorem_certificates_and_unmet_hypotheses() {
    let dir = fixture();
    let (code, out, _) = run(
        dir.path(),
        &["theorems", "--group", "c2.json", "--max-degree", "2"],
    );
    assert_eq!(code, 0);
    let certs = json(&out)["certificates"].as_array().unwrap().clone();
    assert!(certs.iter().all(|c| c["status"] == "certified"));
    assert!(certs
        .iter()
        .any(|c| c["theorem"] == "inverse_transport/cochain"));

    // inverse transport needs unique inverses
    let (code, out, _) = run(
        dir.path(),
        &[
            "theorems",
            "--group",
            "flat.json",
            "--which",
            "inverse-transport",
        ],
    );
    assert_eq!(code, 3);
    let cert = &json(&out)["certificates"][0];
    assert_eq!(cert["status"], "hypothesis_unmet");
    assert!(cert["witness"].to_string().contains('1'));
    let (code, _, _) = run(
        dir.path(),
        &[
            "theorems",
            "--group",
            "flat.json",
            "--which",
            "inverse-transport",
            "--allow-unmet",
        ],
    );
    assert_eq!(code, 0);

    // a module of a flavor no selected theorem uses
    let (code, _, _) = run(
        dir.path(),
        &[
            "theorems",
            "--group",
            "c2.json",
            "--module",
            "trivial_dl.json",
            "--which",
            "h1",
        ],
    );
    assert_eq!(code, 2);
}

#[test]
fn hochschild_defaults_and_export() {
    let dir = fixture();
    let (code, out, _) = run(
        dir.path(),
        &[
            "hochschild",
            "--group",
            "c2.json",
            "--direction",
            "chain",
            "--max-degree",
            "2",
            "--export-window",
            "hh.json",
        ],
    );
    assert_eq!(code, 0);
    // HH_0(KC2) of a commutative algebra is KC2 itself
    assert_eq!(json(&out)["betti"][0], 2);
    let (code, out, _) = run(dir.path(), &["verify", "hh.json"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["documents"][0]["kind"], "window");
    assert_eq!(json(&out)["documents"][0]["betti"][0], 2);
}

#[test]
fn enumerate_table_is_stable() {
    let dir = fixture();
    let (code, a, _) = run(
        dir.path(),
        &["enumerate", "--max-order", "3", "--format", "table"],
    );
    assert_eq!(code, 0);
    assert_eq!(a.lines().count(), 6);
    assert_eq!(
        run(
            dir.path(),
            &["enumerate", "--max-order", "3", "--format", "table"]
        )
        .1,
        a
    );
}
