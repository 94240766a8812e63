//! End-to-end use of the library: definition files, catalog loading,
//! isomorphism search and bialgebra equivalence.

use std::path::Path;

use superlie::bialgebra::{build_double, pair_residuals};
use superlie::catalog::Catalog;
use superlie::morphism::{bialgebra_equivalent, search_isomorphism, transform_dual, transport, SearchMask};
use superlie::parser::{format_algebra, parse_algebras};
use superlie::scalar::rat;
use superlie::solver::solve_duals;
use superlie::{Assignment, DualStructure, GScalar, GradedDims, SuperMatrix};

fn catalog_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog"))
}

#[test]
fn shipped_definition_file_round_trips() {
    let text = std::fs::read_to_string(catalog_dir().join("algebras.alg")).unwrap();
    let algebras = parse_algebras(&text).unwrap();
    assert_eq!(algebras.len(), 11);
    let printed: String = algebras.iter().map(format_algebra).collect::<Vec<_>>().join("\n");
    assert_eq!(parse_algebras(&printed).unwrap(), algebras);
}

#[test]
fn generator_lists_accept_commas_or_whitespace() {
    let spaced = "algebra G {\n bosons: X1;\n fermions: X2 X3;\n [X1,X2] = X2;\n [X1,X3] = X3;\n}\n";
    let commas = "algebra G {\n bosons: X1;\n fermions: X2, X3;\n [X1,X2] = X2;\n [X1,X3] = X3;\n}\n";
    assert_eq!(parse_algebras(spaced).unwrap(), parse_algebras(commas).unwrap());
}

#[test]
fn catalog_from_directory_matches_the_builtin_one() {
    let builtin = Catalog::builtin().unwrap();
    let from_dir = Catalog::from_dir(catalog_dir()).unwrap();
    assert_eq!(builtin.algebras(), from_dir.algebras());
    assert_eq!(builtin.entries().len(), from_dir.entries().len());
    assert_eq!(builtin.loci().len(), from_dir.loci().len());
}

#[test]
fn every_entry_builds_a_consistent_double() {
    let cat = Catalog::builtin().unwrap();
    for e in cat.entries() {
        let g = cat.primal_of(e).unwrap();
        let d = cat.dual_of(e).unwrap();
        let dbl = build_double(&g, &d).unwrap();
        assert_eq!(dbl.algebra().dims(), g.dims().doubled(), "{}", e.id);
        assert!(dbl.pairing_is_canonical(), "{}", e.id);
        assert!(pair_residuals(&g, &d).unwrap().all_zero(), "{}", e.id);
    }
}

#[test]
fn search_recovers_a_change_of_basis() {
    let cat = Catalog::builtin().unwrap();
    let g = cat.algebra("C4").unwrap().to_concrete().unwrap();
    let m = SuperMatrix::parse_literal(GradedDims::new(1, 2).unwrap(), "[2, 0, 0; 0, 1, 0; 0, 1, 1]").unwrap();
    let moved = transport(&g, &m).unwrap();
    let found = search_isomorphism(&g, &moved, 2, &SearchMask::even(g.dims()), false).unwrap().expect("a witness");
    assert_eq!(transport(&g, &found).unwrap().tensor(), moved.tensor());
}

#[test]
fn search_reports_non_isomorphic_algebras() {
    let cat = Catalog::builtin().unwrap();
    let b = cat.algebra("B").unwrap().to_concrete().unwrap();
    let a = cat.algebra("(A11+A)").unwrap().to_concrete().unwrap();
    assert!(search_isomorphism(&b, &a, 2, &SearchMask::full(b.dims()), false).unwrap().is_none());
}

#[test]
fn equivalence_is_reflexive_and_moves_along_automorphisms() {
    let cat = Catalog::builtin().unwrap();
    let g = cat.algebra("C4").unwrap();
    let fam = solve_duals(&g).unwrap();
    let point: Assignment =
        fam.free_params.iter().cloned().zip([rat(1, 1), rat(0, 1), rat(2, 1)]).collect();
    let d: DualStructure<GScalar> = fam.specialize(&point).unwrap();
    let auts = cat.automorphisms("C4").unwrap();
    let id = SuperMatrix::identity(g.dims());
    let same = bialgebra_equivalent(&d, &d, &d, &id, &id, auts).unwrap();
    assert!(same.equivalent());

    let a = auts
        .instantiate(&[("c", rat(2, 1)), ("d", rat(1, 1))].into_iter().map(|(k, v)| (k.to_string(), v)).collect())
        .unwrap();
    let moved = transform_dual(&d, &a).unwrap();
    let witness = a.supertranspose().superinverse().unwrap();
    let rep = bialgebra_equivalent(&d, &d, &moved, &id, &witness, auts).unwrap();
    assert!(rep.witness2_ok && rep.equivalent(), "{rep:?}");
}
