//! Property-based invariants of the arithmetic, supermatrix, morphism and
//! parser layers.

use std::collections::BTreeMap;

use num_rational::BigRational;
use proptest::prelude::*;

use superlie::bialgebra::{cocycle_residual, is_bialgebra};
use superlie::catalog::Catalog;
use superlie::morphism::{transport, verify_automorphism};
use superlie::parser::{format_algebra, parse_algebra};
use superlie::scalar::rat;
use superlie::solver::solve_duals;
use superlie::{Assignment, GScalar, GradedDims, LieSuperAlgebra, Monomial, MultiPoly, SuperMatrix};

fn rational() -> impl Strategy<Value = BigRational> {
    (-12i64..=12, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = BigRational> {
    rational().prop_filter("nonzero", |q| *q != rat(0, 1))
}

fn scalar() -> impl Strategy<Value = GScalar> {
    (rational(), rational()).prop_map(|(re, im)| GScalar::new(re, im))
}

fn dims() -> impl Strategy<Value = GradedDims> {
    prop_oneof![Just((1, 1)), Just((2, 1)), Just((1, 2))].prop_map(|(m, n)| GradedDims::new(m, n).unwrap())
}

/// An even transformation matrix (odd blocks zero, invertible blocks).
fn even_transformation(d: GradedDims) -> impl Strategy<Value = SuperMatrix<GScalar>> {
    let n = d.total();
    proptest::collection::vec(rational(), n * n)
        .prop_map(move |v| {
            let rows = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| if d.is_odd(r) == d.is_odd(c) { GScalar::real(v[r * n + c].clone()) } else { GScalar::zero() })
                        .collect()
                })
                .collect();
            SuperMatrix::new(d, rows).unwrap()
        })
        .prop_filter("transformation matrix", |m| m.is_transformation_matrix().ok)
}

fn matrix(d: GradedDims) -> impl Strategy<Value = SuperMatrix<GScalar>> {
    let n = d.total();
    proptest::collection::vec(scalar(), n * n)
        .prop_map(move |v| SuperMatrix::new(d, (0..n).map(|r| v[r * n..(r + 1) * n].to_vec()).collect()).unwrap())
}

fn dims_and_even() -> impl Strategy<Value = (SuperMatrix<GScalar>, SuperMatrix<GScalar>)> {
    dims().prop_flat_map(|d| (even_transformation(d), even_transformation(d)))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((0u32..3, 0u32..3, rational()), 0..5).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(ex, ey, c)| {
            (Monomial::from_pairs([("x".to_string(), ex), ("y".to_string(), ey)].into_iter().filter(|(_, e)| *e > 0)), GScalar::real(c))
        }))
    })
}

/// A concrete catalog algebra of the given graded dimension.
fn catalog_algebra(d: GradedDims, pick: usize) -> LieSuperAlgebra<GScalar> {
    let cat = Catalog::builtin().unwrap();
    let candidates: Vec<_> = cat.algebras().iter().filter(|g| g.dims() == d).collect();
    let g = candidates[pick % candidates.len()];
    let a: Assignment = g.params().iter().map(|p| (p.name.clone(), rat(1, 2))).collect();
    g.specialize(&a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn scalars_form_a_field(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, GScalar::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GScalar::one());
        }
    }

    #[test]
    fn scalar_text_round_trips(a in scalar()) {
        let back: GScalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(p in poly(), q in poly(), x in rational(), y in rational()) {
        let point: BTreeMap<String, GScalar> =
            [("x".to_string(), GScalar::real(x)), ("y".to_string(), GScalar::real(y))].into();
        let ev = |f: &MultiPoly| f.eval(&point).unwrap();
        prop_assert_eq!(ev(&(&p + &q)), ev(&p) + ev(&q));
        prop_assert_eq!(ev(&(&p * &q)), ev(&p) * ev(&q));
        prop_assert_eq!(ev(&(&p - &q)), ev(&p) - ev(&q));
    }

    #[test]
    fn supertranspose_has_period_four(m in dims().prop_flat_map(matrix)) {
        let st4 = m.supertranspose().supertranspose().supertranspose().supertranspose();
        prop_assert_eq!(st4, m);
    }

    #[test]
    fn sdet_is_multiplicative_on_even_matrices((a, b) in dims_and_even()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.sdet().unwrap(), a.sdet().unwrap() * b.sdet().unwrap());
        prop_assert_eq!(a.sdet_schur_a(), a.sdet_schur_b());
    }

    #[test]
    fn block_inverse_agrees_with_elimination(m in dims().prop_flat_map(matrix)) {
        if let Some(bi) = m.block_inverse() {
            prop_assert_eq!(bi, m.inverse().unwrap());
        }
    }

    #[test]
    fn transport_composes((m1, m2) in dims_and_even(), pick in 0usize..8) {
        let g = catalog_algebra(m1.dims(), pick);
        let two_steps = transport(&transport(&g, &m1).unwrap(), &m2).unwrap();
        let one_step = transport(&g, &m2.mul(&m1).unwrap()).unwrap();
        prop_assert_eq!(two_steps.tensor(), one_step.tensor());
        prop_assert!(two_steps.satisfies_jacobi());
    }

    #[test]
    fn transported_algebras_round_trip_through_text((m, _) in dims_and_even(), pick in 0usize..8) {
        let g = transport(&catalog_algebra(m.dims(), pick), &m).unwrap();
        let text = format_algebra(&g);
        let back = parse_algebra(&text).unwrap();
        let concrete = back.to_concrete().unwrap();
        prop_assert_eq!(concrete.tensor(), g.tensor());
        prop_assert_eq!(format_algebra(&back), text);
    }

    #[test]
    fn c1p_automorphism_family_holds_for_every_parameter(
        p in nonzero_rational(), a in rational(), c in nonzero_rational(), d in nonzero_rational()
    ) {
        let cat = Catalog::builtin().unwrap();
        let g = cat.algebra("C1_p").unwrap().specialize(&Assignment::from([("p".to_string(), p)])).unwrap();
        let fam = cat.automorphisms("C1_p").unwrap();
        let m = fam.instantiate(&[("a", a), ("c", c), ("d", d)].into_iter().map(|(k, v)| (k.to_string(), v)).collect()).unwrap();
        prop_assert!(verify_automorphism(&g, &m).unwrap().ok());
        prop_assert!(fam.membership(&m).is_some());
    }

    #[test]
    fn unconstrained_solver_families_are_bialgebras(alpha in rational(), beta in rational(), gamma in rational()) {
        let cat = Catalog::builtin().unwrap();
        let g = cat.algebra("C4").unwrap();
        let fam = solve_duals(&g).unwrap();
        let point: Assignment = fam.free_params.iter().cloned().zip([alpha, beta, gamma]).collect();
        let d = fam.specialize(&point).unwrap();
        let gs = g.to_concrete().unwrap();
        prop_assert!(is_bialgebra(&gs, &d).unwrap());
        prop_assert!(cocycle_residual(&gs, &d).unwrap().is_zero());
    }
}
