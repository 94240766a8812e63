//! Command-line behaviour: output, exit codes and record format.

use std::process::Command;

use superlie::cli::run_command;

fn run(args: &[&str]) -> superlie::cli::CommandOutput {
    run_command(std::iter::once("superlie").chain(args.iter().copied()))
}

#[test]
fn check_passes_for_a_catalog_algebra() {
    let out = run(&["check", "C1_p"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("pass"), "{}", out.stdout);
}

#[test]
fn check_accepts_the_generated_abelian_algebras() {
    let out = run(&["check", "I(1,2)"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
}

#[test]
fn unknown_algebra_is_an_error() {
    let out = run(&["check", "NoSuchAlgebra"]);
    assert_eq!(out.status, 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn catalog_verify_certifies_every_entry() {
    let out = run(&["catalog", "verify"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.contains("48/48 pass"), "{}", out.stdout);
}

#[test]
fn catalog_verify_can_select_a_group() {
    let out = run(&["catalog", "verify", "--table", "4"]);
    assert_eq!(out.status, 0, "{}", out.stdout);
    assert!(out.stdout.contains("4/4 pass"), "{}", out.stdout);
}

#[test]
fn records_are_one_json_object_per_line() {
    let out = run(&["--format", "records", "pair", "B", "--dual", "B:(A11+A)"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert!(!lines.is_empty());
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        for key in ["entry", "check", "residual_nonzero_count", "status"] {
            assert!(v.get(key).is_some(), "missing {key} in {line}");
        }
        assert_eq!(v["status"], "pass", "{line}");
    }
}

#[test]
fn duals_reports_the_three_parameter_family_of_c4() {
    let out = run(&["duals", "C4"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("3 free parameter(s)"), "{}", out.stdout);
    assert!(out.stdout.contains("constraints: none"), "{}", out.stdout);
}

#[test]
fn an_incompatible_pair_fails_with_status_one() {
    // [X1,X2] = X2 as a dual of B violates the mixed identity.
    let out = run(&["pair", "B", "--dual", "[X1,X2] = X2;"]);
    assert_eq!(out.status, 1, "{}{}", out.stdout, out.stderr);
}

#[test]
fn the_double_is_emitted_in_the_definition_language() {
    let out = run(&["double", "B", "--dual", "B:(A11+A)", "--emit"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    let text = out.stdout.clone();
    let start = text.find("algebra").expect("an algebra block");
    let end = text.find("\n}").expect("closing brace") + 2;
    let g = superlie::parser::parse_algebra(&text[start..end]).expect("emitted text parses");
    assert_eq!(g.dims().total(), 4);
    assert!(g.satisfies_jacobi());
}

#[test]
fn automorphism_family_verifies_symbolically() {
    let out = run(&["aut", "C4", "--family-verify"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
}

#[test]
fn automorphism_with_odd_block_is_rejected() {
    let out = run(&["aut", "B", "--matrix", "[1, 1; 0, 1]"]);
    assert_eq!(out.status, 1, "{}{}", out.stdout, out.stderr);
}

#[test]
fn sdet_of_a_literal() {
    let out = run(&["sdet", "[2, 0; 0, 3]", "--dims", "1,1"]);
    assert_eq!(out.status, 0, "{}{}", out.stdout, out.stderr);
    assert!(out.stdout.contains("2/3"), "{}", out.stdout);
}

#[test]
fn the_binary_exits_with_the_reported_status() {
    let bin = env!("CARGO_BIN_EXE_superlie");
    let ok = Command::new(bin).args(["check", "B"]).output().unwrap();
    assert!(ok.status.success());
    let bad = Command::new(bin).args(["check", "NoSuchAlgebra"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
