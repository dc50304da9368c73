use assert_cmd::Command;
use predicates::prelude::*;

fn satake() -> Command {
    Command::cargo_bin("satake").unwrap()
}

#[test]
fn lambda_classification_lines() {
    satake()
        .args(["lambda", "--catalog", "quaternion"])
        .assert()
        .success()
        .stdout(predicate::str::contains("Lambda_M = Z/2; Ktilde/K = Z/2"));
    satake()
        .args(["lambda", "--catalog", "sl2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("Lambda_M = Z = X_*(A); torsion trivial"));
    satake()
        .args(["lambda", "--catalog", "ramified-norm-torus"])
        .assert()
        .success()
        .stdout(predicate::str::contains("torsion, nonzero"));
}

#[test]
fn json_carries_a_schema_version() {
    let out = satake().args(["--json", "lambda", "--catalog", "sl2"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["lambda"], "Z");
}

#[test]
fn cartan_needs_a_bound_on_infinite_lambda() {
    satake().args(["cartan", "--catalog", "sl2"]).assert().code(2);
    satake()
        .args(["cartan", "--catalog", "sl2", "--bound", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("4 double cosets").and(predicate::str::contains("[2] < [3]")));
    satake()
        .args(["cartan", "--catalog", "quaternion"])
        .assert()
        .success()
        .stdout(predicate::str::contains("2 double cosets").and(predicate::str::contains("no relations")));
}

#[test]
fn invalid_group_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "name = \"bad\"\nrank = 1\nroots = [[2]]\n").unwrap();
    satake()
        .args(["lambda", "--group"])
        .arg(&path)
        .assert()
        .code(2)
        .stderr(predicate::str::contains("error"));
}

#[test]
fn group_files_round_trip_through_the_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pgl2.toml");
    let text = satake().args(["catalog", "show", "pgl2"]).output().unwrap().stdout;
    std::fs::write(&path, text).unwrap();
    satake().args(["lambda", "--group"]).arg(&path).assert().success();
}

#[test]
fn quaternion_transfer_report() {
    satake()
        .args(["transfer", "--catalog", "quaternion", "--bound", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("m[-1] -> 2*m[1]").and(predicate::str::contains("surjective onto norm <= 2: true")));
}

#[test]
fn explicit_twists() {
    satake().args(["transfer", "--catalog", "sl2", "--twist", "identity", "--bound", "2"]).assert().success();
    satake()
        .args(["transfer", "--catalog", "pgl2", "--twist", "0,1:", "--bound", "2"])
        .assert()
        .code(2)
        .stderr(predicate::str::contains("anisotropy"));
    satake().args(["transfer", "--catalog", "pgl2", "--twist", "nonsense"]).assert().code(2);
}

#[test]
fn reports_are_deterministic_for_a_seed() {
    let run = || {
        satake()
            .env("SATAKE_SEED", "11")
            .args(["--json", "transfer", "--catalog", "gl2-inner", "--bound", "3"])
            .output()
            .unwrap()
            .stdout
    };
    let first = run();
    assert_eq!(first, run());
    let v: serde_json::Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["homomorphism"]["seed"], 11);
}

#[test]
fn check_all_passes_on_the_catalog() {
    satake().args(["check", "--all"]).assert().success().stdout(predicate::str::contains("all checks passed"));
    satake().args(["check"]).assert().code(2);
}

#[test]
fn catalog_lists_every_entry() {
    satake()
        .args(["catalog", "list"])
        .assert()
        .success()
        .stdout(predicate::str::contains("quaternion").and(predicate::str::contains("res-torus")));
}
