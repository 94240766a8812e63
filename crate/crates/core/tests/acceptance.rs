//! Acceptance suite: prints one `PASS`/`FAIL` line per criterion.
//!
//! Every check is exact (residuals must be identically zero).  Randomized
//! checks use a fixed seed so the output is reproducible.
//!
//! The process exits nonzero if a criterion fails that is not listed in
//! [`KNOWN_FAILURES`]; known failures are still printed as `FAIL`.  Set
//! `SUPERLIE_ACCEPTANCE_STRICT=1` to make every failure fatal.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superlie::bialgebra::{cocycle_residual, mixed_jacobi_residual};
use superlie::catalog::example::reproduce_worked_example;
use superlie::catalog::verify::{solve_families, verify_catalog, verify_locus, SolvedFamilies};
use superlie::catalog::{dual_from_components, Catalog, Component};
use superlie::morphism::verify_automorphism;
use superlie::parser::{format_algebra, parse_algebra, parse_algebras, Expr};
use superlie::scalar::rat;
use superlie::solver::{dual_from_coords, enumerate_unknowns, solve_duals, DualSolutionFamily};
use superlie::{Assignment, Error, GScalar, GradedDims, LieSuperAlgebra, MultiPoly, SuperMatrix};

/// Criteria expected to fail, with the reason printed alongside.
const KNOWN_FAILURES: &[(u8, &str)] = &[(
    8,
    "with ordinary-number odd blocks the superdeterminant is not multiplicative and the two \
     Schur-complement formulas differ by (det M)^2 / (det A det B)^2; both hold on even matrices",
)];

const SEED: u64 = 0x5eed_2024;
const RUNTIME_LIMIT: Duration = Duration::from_secs(10);
const AUT_SAMPLES: usize = 5;
const AUT_PERTURBATIONS: usize = 20;
const KERNEL_SAMPLES: usize = 100;
const GRID: [i64; 7] = [-4, -2, -1, 0, 1, 2, 4]; // halves: {−2, −1, −1/2, 0, 1/2, 1, 2}

type Outcome = std::result::Result<(bool, String), Error>;
type Criterion = (u8, &'static str, fn(&Catalog) -> Outcome);

fn main() -> ExitCode {
    let cat = match Catalog::builtin() {
        Ok(c) => c,
        Err(e) => {
            println!("acceptance: cannot load the built-in catalog: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: [Criterion; 9] = [
        (1, "catalog soundness", catalog_soundness),
        (2, "algebra table", algebra_table),
        (3, "automorphism families", automorphism_families),
        (4, "solver reproduction", solver_reproduction),
        (5, "solver completeness", solver_completeness),
        (6, "isomorphism witnesses", isomorphism_witnesses),
        (7, "worked example", worked_example),
        (8, "supermatrix kernel", supermatrix_kernel),
        (9, "parser", parser),
    ];
    let strict = std::env::var("SUPERLIE_ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let mut passed = 0;
    let mut unexpected = Vec::new();
    for (n, name, run) in criteria {
        let start = Instant::now();
        let (ok, detail) = run(&cat).unwrap_or_else(|e| (false, format!("error: {e}")));
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        println!(
            "criterion {n} {}: {name}: {detail} [{:.2}s]",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        if ok {
            passed += 1;
            if known.is_some() {
                println!("  note: criterion {n} is listed as a known failure but passed");
            }
        } else if let Some((_, why)) = known {
            println!("  known failure: {why}");
            if strict {
                unexpected.push(n);
            }
        } else {
            unexpected.push(n);
        }
    }
    println!("acceptance: {passed}/9 criteria pass");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected failures in criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}

// ---------------------------------------------------------------------------
// 1. Every catalog pair, all five identities, within the time budget.
// ---------------------------------------------------------------------------

fn catalog_soundness(cat: &Catalog) -> Outcome {
    const REQUIRED: [&str; 5] = ["primal_jacobi", "dual_jacobi", "mixed_jacobi", "double_jacobi", "pairing_ad_invariance"];
    let start = Instant::now();
    let report = verify_catalog(cat, None)?;
    let elapsed = start.elapsed();
    let complete = report.entries.iter().all(|e| {
        REQUIRED.iter().all(|r| e.checks.iter().any(|c| c.check == *r) && e.checks.iter().any(|c| c.check == format!("samples/{r}")))
    });
    let failing: Vec<&str> = report.entries.iter().filter(|e| !e.passed()).map(|e| e.id.as_str()).collect();
    let ok = report.entries.len() == 48 && report.all_passed() && complete && elapsed < RUNTIME_LIMIT;
    let mut detail = format!(
        "{}/{} pairs certified in {:.2}s (limit {}s), all five identities checked: {}",
        report.passed(),
        report.entries.len(),
        elapsed.as_secs_f64(),
        RUNTIME_LIMIT.as_secs(),
        yes(complete)
    );
    if !failing.is_empty() {
        detail.push_str(&format!("; failing: {}", failing.join(", ")));
    }
    Ok((ok, detail))
}

// ---------------------------------------------------------------------------
// 2. The algebra table, symbolically in its parameter.
// ---------------------------------------------------------------------------

fn algebra_table(cat: &Catalog) -> Outcome {
    let mut bad = Vec::new();
    let mut parametric = 0;
    for g in cat.algebras() {
        parametric += usize::from(g.is_parametric());
        if !g.validate_structure().is_valid() || !g.super_jacobi_residual().is_zero() {
            bad.push(g.name().to_string());
        }
    }
    let n = cat.algebras().len();
    let ok = n == 11 && bad.is_empty();
    Ok((ok, format!("{}/{n} algebras valid with identically zero Jacobi residual ({parametric} parametric){}", n - bad.len(), failing(&bad))))
}

// ---------------------------------------------------------------------------
// 3. Automorphism families: members, perturbations, products, inverses.
// ---------------------------------------------------------------------------

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let q = rat(rng.random_range(-5..=5), rng.random_range(1..=3));
        if !q.is_zero() {
            return q;
        }
    }
}

/// Parameters that occur as a bare entry exactly once: changing that entry
/// moves to another member of the family, so it is not a perturbation.
fn free_positions(entries: &[Vec<Expr>]) -> BTreeSet<(usize, usize)> {
    let mut count: BTreeMap<String, usize> = BTreeMap::new();
    for e in entries.iter().flatten() {
        for v in e.variables() {
            *count.entry(v).or_default() += 1;
        }
    }
    let mut out = BTreeSet::new();
    for (r, row) in entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if matches!(e, Expr::Var(v) if count[v] == 1) {
                out.insert((r, c));
            }
        }
    }
    out
}

fn automorphism_families(cat: &Catalog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    let (mut members, mut rejected, mut perturbed, mut closed, mut closure_checks) = (0, 0, 0, 0, 0);
    for (id, fam) in cat.automorphism_families() {
        let g = cat.algebra(id)?;
        let primal_samples = cat.automorphism_points(id)?;
        let names = fam.params();
        let mut samples = Vec::new();
        while samples.len() < AUT_SAMPLES {
            let a: Assignment = names.iter().map(|n| (n.clone(), random_rational(&mut rng))).collect();
            if let Ok(m) = fam.instantiate(&a) {
                let pp = primal_samples[samples.len() % primal_samples.len()].clone();
                samples.push((g.specialize(&pp)?, m));
            }
        }
        let mut family_ok = true;
        for (gs, m) in &samples {
            let member = verify_automorphism(gs, m)?.ok();
            members += usize::from(member);
            family_ok &= member;
        }

        let positions: Vec<(usize, usize)> = {
            let free = free_positions(&fam.entries);
            let n = fam.dims.total();
            (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).filter(|p| !free.contains(p)).collect()
        };
        for _ in 0..AUT_PERTURBATIONS {
            let (gs, m) = &samples[rng.random_range(0..samples.len())];
            let (r, c) = positions[rng.random_range(0..positions.len())];
            let mut delta = GScalar::real(random_rational(&mut rng));
            if fam.dims.is_odd(r) && !fam.dims.is_odd(c) {
                delta = delta * GScalar::i();
            }
            let mut p = m.clone();
            p.set(r, c, m.get(r, c).clone() + delta);
            perturbed += 1;
            let rej = !verify_automorphism(gs, &p)?.ok();
            rejected += usize::from(rej);
            family_ok &= rej;
        }

        for w in samples.windows(2) {
            let ((g1, m1), (_, m2)) = (&w[0], &w[1]);
            let gs = g1;
            // Products and inverses are taken at the first sample's primal
            // parameter; the family matrix does not depend on it.
            for n in [m1.mul(m2)?, m1.inverse()?] {
                closure_checks += 1;
                let ok = fam.membership(&n).is_some() && verify_automorphism(gs, &n)?.ok();
                closed += usize::from(ok);
                family_ok &= ok;
            }
        }
        if !family_ok {
            bad.push(id.clone());
        }
    }
    let n = cat.automorphism_families().len();
    let ok = n == 11 && bad.is_empty();
    Ok((
        ok,
        format!(
            "{n} families: {members} sampled members verified, {rejected}/{perturbed} perturbations rejected, \
             {closed}/{closure_checks} products and inverses are members{}",
            failing(&bad)
        ),
    ))
}

// ---------------------------------------------------------------------------
// 4. Solver output against the published families.
// ---------------------------------------------------------------------------

fn components(text: &[&str]) -> Result<Vec<Component>, Error> {
    text.iter().map(|c| Component::parse(c)).collect()
}

/// True iff the family's general element is exactly the given components.
fn general_is(fam: &DualSolutionFamily, expected: &[&str]) -> Result<bool, Error> {
    let want = dual_from_components("expected", fam.dims, &components(expected)?)?;
    Ok(fam.general()?.dual_algebra().tensor() == want.dual_algebra().tensor())
}

fn locus_in_family(cat: &Catalog, families: &SolvedFamilies, id: &str) -> Result<bool, Error> {
    let l = cat.loci().iter().find(|l| l.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let rep = verify_locus(cat, l, families)?;
    Ok(rep.checks.iter().any(|c| c.check == "solver_family" && c.ok) && rep.checks.iter().all(|c| c.ok))
}

fn solver_reproduction(cat: &Catalog) -> Outcome {
    let b = solve_duals(&cat.algebra("B")?)?;
    let b_ok = b.nullity() == 1 && b.quad_constraints.is_empty() && general_is(&b, &["ft22_1 = i*alpha"])?;

    let c4 = solve_duals(&cat.algebra("C4")?)?;
    let c4_ok = c4.nullity() == 3
        && c4.quad_constraints.is_empty()
        && general_is(&c4, &["ft22_1 = i*alpha", "ft23_1 = i*beta", "ft33_1 = i*gamma"])?;

    let families = solve_families(cat, ["C1_1/2", "C1_p"])?;
    let half_ok = ["C1_1/2/i", "C1_1/2/ii-C1", "C1_1/2/ii-C2"]
        .iter()
        .map(|id| locus_in_family(cat, &families, id))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|x| x);

    // Symbolic in p: the branch where the {X3,X3} coefficient vanishes is
    // exactly ft12_1 = alpha, ft23_3 = p*alpha.
    let c1p = &families["C1_p"];
    let beta_zero: BTreeMap<String, MultiPoly> = [("beta".to_string(), MultiPoly::zero())].into();
    let general = c1p.general()?;
    let restricted: Vec<MultiPoly> = general.dual_algebra().tensor().iter().map(|v| v.compose(&beta_zero)).collect();
    let item_i = dual_from_components("expected", c1p.dims, &components(&["ft12_1 = alpha", "ft23_3 = p*alpha"])?)?;
    let symbolic_i = restricted == item_i.dual_algebra().tensor()
        && c1p.branches.iter().any(|br| br.len() == 1 && br[0] == MultiPoly::var("beta"));
    let drop = c1p.rank_drops.iter().find(|d| d.param == "p" && d.value == rat(1, 2));
    let drop_ok = drop.is_some_and(|d| d.family.nullity() == c1p.nullity() + 1) && locus_in_family(cat, &families, "C1_p/iv")?;

    let ok = b_ok && c4_ok && half_ok && symbolic_i && drop_ok;
    Ok((
        ok,
        format!(
            "B: one free parameter, no constraints {}; C4: three free parameters, no constraints {}; \
             C1_1/2 sub-loci (i), (ii) contained {}; C1_p symbolic solution (i) {}; rank drop at p = 1/2 {}",
            yes(b_ok),
            yes(c4_ok),
            yes(half_ok),
            yes(symbolic_i),
            yes(drop_ok)
        ),
    ))
}

// ---------------------------------------------------------------------------
// 5. Exhaustive grid search for valid duals outside the solved family.
//
// The oracle is the one-cocycle form of the compatibility condition, not
// the mixed identity the solver is built from.  It is linear in the dual,
// so it is evaluated on the grid as an exact integer linear map; survivors
// are then re-checked with exact scalars.
// ---------------------------------------------------------------------------

struct GridResult {
    points: usize,
    valid: usize,
    outside: usize,
    linear_map_exact: bool,
}

fn lcm(a: i64, b: i64) -> i64 {
    num_integer::lcm(a, b)
}

fn to_i64(q: &BigRational, scale: i64) -> i64 {
    let v = q * BigRational::from_integer(scale.into());
    assert!(v.is_integer(), "scaled coefficient is not an integer");
    i64::try_from(v.to_integer()).expect("coefficient fits in i64")
}

fn grid_search(g: &LieSuperAlgebra<GScalar>, fam: &DualSolutionFamily) -> Result<GridResult, Error> {
    let dims = g.dims();
    let unknowns = enumerate_unknowns(dims);
    let n = unknowns.len();
    let unit = |a: usize| -> Result<_, Error> {
        let coords: Vec<GScalar> = (0..n).map(|b| if a == b { GScalar::one() } else { GScalar::zero() }).collect();
        dual_from_coords(dims, &unknowns, &coords)
    };
    let columns: Vec<_> = (0..n).map(|a| cocycle_residual(g, &unit(a)?)).collect::<Result<_, _>>()?;
    let keys: BTreeSet<Vec<usize>> = columns.iter().flat_map(|r| r.entries().map(|(k, _)| k.to_vec())).collect();
    // One integer row per (residual component, real/imaginary part).
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for key in &keys {
        for part in [GScalar::re as fn(&GScalar) -> &BigRational, GScalar::im] {
            let vals: Vec<BigRational> = columns.iter().map(|c| part(&c.get(key)).clone()).collect();
            let scale = vals.iter().fold(1i64, |l, v| lcm(l, i64::try_from(v.denom().clone()).expect("small denominator")));
            let row: Vec<i64> = vals.iter().map(|v| to_i64(v, scale)).collect();
            if row.iter().any(|x| *x != 0) {
                rows.push(row);
            }
        }
    }

    let point = |idx: &[usize]| -> Vec<GScalar> { idx.iter().map(|&i| GScalar::from_ratio(GRID[i], 2)).collect() };
    let mut result = GridResult { points: 0, valid: 0, outside: 0, linear_map_exact: true };
    let mut idx = vec![0usize; n];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    loop {
        result.points += 1;
        let passes_linear = rows.iter().all(|r| r.iter().zip(&idx).map(|(c, &i)| c * GRID[i]).sum::<i64>() == 0);
        // Spot-check that the integer map agrees with the exact residual.
        let spot = rng.random_range(0..512) == 0;
        if passes_linear || spot {
            let d = dual_from_coords(dims, &unknowns, &point(&idx))?;
            let cocycle_zero = cocycle_residual(g, &d)?.is_zero();
            result.linear_map_exact &= cocycle_zero == passes_linear;
            if cocycle_zero && d.dual_algebra().super_jacobi_residual().is_zero() {
                // Cross-check with the mixed identity as well.
                result.linear_map_exact &= mixed_jacobi_residual(g, &d)?.is_zero();
                result.valid += 1;
                if !fam.contains(&d, &Assignment::new())? {
                    result.outside += 1;
                }
            }
        }
        // Odometer over the grid.
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(result);
            }
            idx[pos] += 1;
            if idx[pos] < GRID.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn solver_completeness(cat: &Catalog) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ["B", "(A11+A)", "C4", "C3"] {
        let g = cat.algebra(id)?;
        let fam = solve_duals(&g)?;
        let gs = g.to_concrete().ok_or_else(|| Error::MissingParameter(format!("{id} is parametric")))?;
        let r = grid_search(&gs, &fam)?;
        ok &= r.outside == 0 && r.valid > 0 && r.linear_map_exact;
        parts.push(format!(
            "{id}: {} valid of {} grid points, {} outside the family{}",
            r.valid,
            r.points,
            r.outside,
            if r.linear_map_exact { "" } else { " (linear prefilter disagreed with exact check)" }
        ));
    }
    Ok((ok, parts.join("; ")))
}

// ---------------------------------------------------------------------------
// 6. Isomorphism witnesses and their forced entries.
// ---------------------------------------------------------------------------

fn isomorphism_witnesses(cat: &Catalog) -> Outcome {
    let families = solve_families(cat, cat.loci().iter().flat_map(|l| l.primals.iter().map(String::as_str)))?;
    let mut witnesses = 0;
    let mut forced_checked = 0;
    let mut bad = Vec::new();
    for l in cat.loci() {
        let rep = verify_locus(cat, l, &families)?;
        let Some(w) = &l.witness else {
            if !rep.passed() {
                bad.push(l.id.clone());
            }
            continue;
        };
        witnesses += 1;
        let has_forced = w.forced.is_empty() || rep.checks.iter().any(|c| c.check == "forced_entries");
        forced_checked += usize::from(!w.forced.is_empty() && has_forced);
        if !rep.passed() || l.samples.len() < 3 || !has_forced {
            bad.push(l.id.clone());
        }
    }
    let ok = witnesses == 13 && bad.is_empty();
    Ok((
        ok,
        format!(
            "{}/{witnesses} witness matrices verified at >= 3 samples each, {forced_checked} with forced entries confirmed necessary, \
             {} loci checked in total{}",
            witnesses - bad.iter().filter(|b| cat.loci().iter().any(|l| &l.id == *b && l.witness.is_some())).count(),
            cat.loci().len(),
            failing(&bad)
        ),
    ))
}

// ---------------------------------------------------------------------------
// 7. The end-to-end worked example.
// ---------------------------------------------------------------------------

fn worked_example(cat: &Catalog) -> Outcome {
    let rep = reproduce_worked_example(cat)?;
    let pos = rep.samples.iter().filter(|s| s.branch > 0).count();
    let neg = rep.samples.iter().filter(|s| s.branch < 0).count();
    let cross_false = rep.samples.iter().all(|s| s.cross_branch_witnessed && !s.cross_branch_equivalent);
    let same_true = rep.samples.iter().all(|s| s.same_branch_rescaled && s.same_branch_moved);
    let ok = rep.ok() && pos >= 3 && neg >= 3;
    Ok((
        ok,
        format!(
            "{} samples ({pos} k>0, {neg} s<0), all stages pass {}; cross-branch not equivalent {}; same-branch equivalent {}",
            rep.samples.len(),
            yes(rep.ok()),
            yes(cross_false),
            yes(same_true)
        ),
    ))
}

// ---------------------------------------------------------------------------
// 8. Supermatrix kernel on random transformation matrices.
// ---------------------------------------------------------------------------

fn random_transformation(rng: &mut ChaCha8Rng, dims: GradedDims, even: bool) -> SuperMatrix<GScalar> {
    let n = dims.total();
    loop {
        let rows: Vec<Vec<GScalar>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let odd_block = dims.is_odd(r) != dims.is_odd(c);
                        if even && odd_block {
                            return GScalar::zero();
                        }
                        let q = rat(rng.random_range(-3..=3), rng.random_range(1..=3));
                        if dims.is_odd(r) && !dims.is_odd(c) {
                            GScalar::imag(q)
                        } else {
                            GScalar::real(q)
                        }
                    })
                    .collect()
            })
            .collect();
        let m = SuperMatrix::new(dims, rows).expect("square");
        if m.is_transformation_matrix().ok {
            return m;
        }
    }
}

#[derive(Default)]
struct KernelTally {
    mult: (usize, usize),
    schur: (usize, usize),
    inverse: (usize, usize),
    period: (usize, usize),
    period_two_breaks: usize,
}

fn kernel_checks(ms: &[SuperMatrix<GScalar>], t: &mut KernelTally) -> Result<(), Error> {
    for (i, m) in ms.iter().enumerate() {
        let next = &ms[(i + 1) % ms.len()];
        let prod = m.mul(next)?;
        t.mult.1 += 1;
        if let (Ok(a), Ok(b), Ok(c)) = (m.sdet(), next.sdet(), prod.sdet()) {
            t.mult.0 += usize::from(c == a * b);
        }
        if let (Some(a), Some(b)) = (m.sdet_schur_a(), m.sdet_schur_b()) {
            t.schur.1 += 1;
            t.schur.0 += usize::from(a == b);
        }
        if let Some(bi) = m.block_inverse() {
            t.inverse.1 += 1;
            t.inverse.0 += usize::from(bi == m.inverse()?);
        }
        let st2 = m.supertranspose().supertranspose();
        t.period.1 += 1;
        t.period.0 += usize::from(st2.supertranspose().supertranspose() == *m);
        t.period_two_breaks += usize::from(st2 != *m);
    }
    Ok(())
}

fn supermatrix_kernel(_: &Catalog) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut general = KernelTally::default();
    let mut even = KernelTally::default();
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        let dims = GradedDims::new(m, n)?;
        let ms: Vec<_> = (0..KERNEL_SAMPLES).map(|_| random_transformation(&mut rng, dims, false)).collect();
        kernel_checks(&ms, &mut general)?;
        let es: Vec<_> = (0..KERNEL_SAMPLES).map(|_| random_transformation(&mut rng, dims, true)).collect();
        kernel_checks(&es, &mut even)?;
    }
    let full = |(a, b): (usize, usize)| a == b && b > 0;
    let ok = full(general.mult) && full(general.schur) && full(general.inverse) && full(general.period) && general.period_two_breaks > 0;
    Ok((
        ok,
        format!(
            "random transformation matrices: sdet multiplicative {}/{}, sdet formulas agree {}/{}, block inverse agrees {}/{}, \
             st^4 = 1 {}/{} (st^2 != 1 on {}); even subset: multiplicative {}/{}, formulas agree {}/{}",
            general.mult.0,
            general.mult.1,
            general.schur.0,
            general.schur.1,
            general.inverse.0,
            general.inverse.1,
            general.period.0,
            general.period.1,
            general.period_two_breaks,
            even.mult.0,
            even.mult.1,
            even.schur.0,
            even.schur.1
        ),
    ))
}

// ---------------------------------------------------------------------------
// 9. Parser round trip and located grading diagnostics.
// ---------------------------------------------------------------------------

fn parser(cat: &Catalog) -> Outcome {
    let mut mismatched = Vec::new();
    for g in cat.algebras() {
        let text = format_algebra(g);
        match parse_algebra(&text) {
            Ok(back) if back == *g && format_algebra(&back) == text => {}
            _ => mismatched.push(g.name().to_string()),
        }
    }
    let whole: String = cat.algebras().iter().map(format_algebra).collect::<Vec<_>>().join("\n");
    let all_back = parse_algebras(&whole)?;
    let file_ok = all_back.as_slice() == cat.algebras();

    let bad_inputs = [
        ("algebra G {\n    bosons: X1;\n    fermions: X2;\n    [X1,X2] = X1;\n}\n", 4),
        ("algebra G {\n    bosons: X1 X2;\n    fermions: X3;\n    {X3,X3} = i*X3;\n}\n", 4),
        ("algebra G {\n    bosons: X1;\n    fermions: X2 X3;\n\n    {X2,X3} = X2;\n}\n", 5),
    ];
    let mut located = 0;
    for (text, line) in bad_inputs {
        if let Err(Error::Parse(e)) = parse_algebra(text) {
            located += usize::from(e.line == line && e.column > 0);
        }
    }
    let ok = mismatched.is_empty() && file_ok && located == bad_inputs.len();
    Ok((
        ok,
        format!(
            "{}/{} algebras round-trip, whole catalog round-trips {}, {located}/{} invalid brackets rejected at the right line{}",
            cat.algebras().len() - mismatched.len(),
            cat.algebras().len(),
            yes(file_ok),
            bad_inputs.len(),
            failing(&mismatched)
        ),
    ))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn failing(ids: &[String]) -> String {
    if ids.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", ids.join(", "))
    }
}
