//! Exact certification of the catalog.
//!
//! Every bialgebra entry is checked symbolically in all of its parameters
//! and again at every sample point, against several independent oracles:
//! the tensor identities, the Drinfel'd double, the cocycle form of the
//! compatibility condition, the swapped pair `(g̃, g)`, and membership in
//! the kernel computed by the dual solver.  Solution loci are checked for
//! compatibility, solver membership and their isomorphism witnesses.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;

use super::{cartesian, dual_at, dual_from_components, Catalog, CatalogEntry, Component, Locus, Witness};
use crate::bialgebra::{cocycle_residual, mixed_jacobi_residual, pair_residuals, DualStructure};
use crate::error::{Error, Result};
use crate::morphism::verify_isomorphism;
use crate::params::{to_point, Assignment};
use crate::parser::eval_matrix;
use crate::poly::MultiPoly;
use crate::scalar::GScalar;
use crate::solver::{solve_duals, DualSolutionFamily};
use crate::superalgebra::LieSuperAlgebra;
use crate::supermatrix::SuperMatrix;

/// One named check with its outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    /// Check name, e.g. `mixed_jacobi` or `samples/dual_jacobi`.
    pub check: String,
    /// Number of nonzero residual components (summed over samples).
    pub residual_nonzero_count: usize,
    /// Whether the check passed.
    pub ok: bool,
    /// Diagnostic for failures.
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn from_count(check: impl Into<String>, count: usize, detail: Option<String>) -> Self {
        CheckOutcome { check: check.into(), residual_nonzero_count: count, ok: count == 0, detail }
    }

    fn flag(check: impl Into<String>, ok: bool, detail: Option<String>) -> Self {
        CheckOutcome { check: check.into(), residual_nonzero_count: usize::from(!ok), ok, detail }
    }

    fn error(check: impl Into<String>, e: &Error) -> Self {
        CheckOutcome { check: check.into(), residual_nonzero_count: 1, ok: false, detail: Some(e.to_string()) }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} {}", self.check, if self.ok { "pass" } else { "FAIL" })?;
        if !self.ok {
            write!(f, " ({} nonzero)", self.residual_nonzero_count)?;
        }
        if let Some(d) = &self.detail {
            write!(f, ": {d}")?;
        }
        Ok(())
    }
}

/// Result of certifying one entry.
#[derive(Clone, Debug)]
pub struct EntryReport {
    /// Entry id `primal:dual`.
    pub id: String,
    /// Group number.
    pub group: u8,
    /// Counted checks.
    pub checks: Vec<CheckOutcome>,
    /// Checks of the alternative transcription (reported, not counted).
    pub variant: Option<Vec<CheckOutcome>>,
    /// Number of sample points.
    pub samples: usize,
    /// True iff the entry has parameters but no admissible sample point
    /// (only the symbolic checks ran).
    pub unsampled: bool,
}

impl EntryReport {
    /// True iff every counted check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    /// True iff the variant closes every identity (`None` if no variant).
    pub fn variant_passed(&self) -> Option<bool> {
        self.variant.as_ref().map(|v| v.iter().all(|c| c.ok))
    }
}

/// Result of certifying a set of entries.
#[derive(Clone, Debug)]
pub struct CatalogReport {
    /// Per-entry reports, in manifest order.
    pub entries: Vec<EntryReport>,
}

impl CatalogReport {
    /// Number of passing entries.
    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }

    /// True iff every entry passed.
    pub fn all_passed(&self) -> bool {
        self.passed() == self.entries.len()
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let samples = if e.unsampled { "unsampled".to_string() } else { format!("{} samples", e.samples) };
            writeln!(f, "[{}] {:<40} {} ({samples})", e.group, e.id, if e.passed() { "pass" } else { "FAIL" })?;
            for c in e.checks.iter().filter(|c| !c.ok) {
                writeln!(f, "    {c}")?;
            }
            if let Some(ok) = e.variant_passed() {
                writeln!(f, "    variant transcription: {}", if ok { "closes" } else { "does not close" })?;
            }
        }
        write!(f, "{}/{} pass", self.passed(), self.entries.len())
    }
}

/// Dual solution families of every algebra referenced by entries or loci,
/// solved once and shared.
pub type SolvedFamilies = BTreeMap<String, DualSolutionFamily>;

/// Solves the dual problem for the given algebra ids (in parallel).
pub fn solve_families<'a>(cat: &Catalog, ids: impl IntoIterator<Item = &'a str>) -> Result<SolvedFamilies> {
    let mut ids: Vec<&str> = ids.into_iter().collect();
    ids.sort_unstable();
    ids.dedup();
    ids.par_iter().map(|id| Ok((id.to_string(), solve_duals(&cat.algebra(id)?)?))).collect()
}

fn real_point(a: &Assignment) -> BTreeMap<String, GScalar> {
    to_point(a)
}

/// Each component must be real, or pure imaginary when both upper indices
/// are odd, for the real form of the dual to exist.
fn reality_violations(dims: crate::grading::GradedDims, comps: &[Component], env: &BTreeMap<String, GScalar>) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for c in comps {
        let v = c.value.eval(env)?;
        let imaginary = dims.is_odd(c.i) && dims.is_odd(c.j);
        let ok = if imaginary { v.is_pure_imaginary() } else { v.is_real() };
        if !ok {
            out.push(format!("{} = {v} should be {}", c.text, if imaginary { "imaginary" } else { "real" }));
        }
    }
    Ok(out)
}

fn symbolic_checks(g: &LieSuperAlgebra<MultiPoly>, d: &DualStructure<MultiPoly>, out: &mut Vec<CheckOutcome>) {
    match pair_residuals(g, d) {
        Ok(r) => {
            for (name, res) in r.named() {
                let detail = (!res.is_zero()).then(|| res.to_string().trim().replace('\n', "; "));
                out.push(CheckOutcome::from_count(name, res.nonzero_count(), detail));
            }
        }
        Err(e) => out.push(CheckOutcome::error("pair_residuals", &e)),
    }
}

fn check_components(
    cat: &Catalog,
    e: &CatalogEntry,
    comps: &[Component],
    family: Option<&DualSolutionFamily>,
    points: &[Assignment],
) -> Result<Vec<CheckOutcome>> {
    let g = cat.primal_of(e)?;
    let d = DualStructure::from_algebra(dual_from_components(&e.dual_label, g.dims(), comps)?.into_algebra());
    let mut out = Vec::new();

    let structure = d.dual_algebra().validate_structure();
    out.push(CheckOutcome::from_count(
        "dual_structure",
        structure.violations.len(),
        (!structure.is_valid()).then(|| structure.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")),
    ));
    symbolic_checks(&g, &d, &mut out);
    match cocycle_residual(&g, &d) {
        Ok(r) => out.push(CheckOutcome::from_count("cocycle", r.nonzero_count(), None)),
        Err(err) => out.push(CheckOutcome::error("cocycle", &err)),
    }
    match mixed_jacobi_residual(d.dual_algebra(), &DualStructure::from_algebra(g.clone())) {
        Ok(r) => out.push(CheckOutcome::from_count("swapped_pair", r.nonzero_count(), None)),
        Err(err) => out.push(CheckOutcome::error("swapped_pair", &err)),
    }

    let mut sampled = [0usize; 5];
    let mut names = [""; 5];
    let mut reality = Vec::new();
    let mut outside = Vec::new();
    for pt in points {
        let env = real_point(pt);
        let gs = g.specialize_at(&env)?;
        let ds = dual_at(&e.dual_label, g.dims(), comps, &env)?;
        let r = pair_residuals(&gs, &ds)?;
        for (slot, (name, res)) in r.named().into_iter().enumerate() {
            names[slot] = name;
            sampled[slot] += res.nonzero_count();
        }
        reality.extend(reality_violations(g.dims(), comps, &env)?);
        if let Some(fam) = family {
            let primal: Assignment = g.params().iter().filter_map(|p| pt.get(&p.name).map(|v| (p.name.clone(), v.clone()))).collect();
            if !fam.contains(&ds, &primal)? {
                outside.push(format!("{pt:?}"));
            }
        }
    }
    for (name, count) in names.iter().zip(sampled) {
        out.push(CheckOutcome::from_count(format!("samples/{name}"), count, None));
    }
    out.push(CheckOutcome::from_count("reality", reality.len(), (!reality.is_empty()).then(|| reality.join("; "))));
    if family.is_some() {
        out.push(CheckOutcome::from_count(
            "solver_family",
            outside.len(),
            (!outside.is_empty()).then(|| format!("outside the solved kernel at {}", outside.join(", "))),
        ));
    }
    Ok(out)
}

/// Certifies one entry.  `families` supplies the solver oracle (entries
/// whose primal is missing from it skip the membership check).
pub fn verify_entry(cat: &Catalog, e: &CatalogEntry, families: &SolvedFamilies) -> Result<EntryReport> {
    let points = cat.sample_points(e)?;
    let family = families.get(&e.primal);
    let checks = check_components(cat, e, &e.components, family, &points)?;
    let variant = e.variant.as_ref().map(|v| check_components(cat, e, v, None, &points)).transpose()?;
    let unsampled = points.is_empty();
    Ok(EntryReport { id: e.id.clone(), group: e.group, checks, variant, samples: points.len(), unsampled })
}

/// Certifies every entry (optionally only the given groups), in parallel,
/// keeping manifest order.
pub fn verify_catalog(cat: &Catalog, groups: Option<&[u8]>) -> Result<CatalogReport> {
    let selected: Vec<&CatalogEntry> =
        cat.entries().iter().filter(|e| groups.is_none_or(|g| g.contains(&e.group))).collect();
    let families = solve_families(cat, selected.iter().map(|e| e.primal.as_str()))?;
    let entries = selected.par_iter().map(|e| verify_entry(cat, e, &families)).collect::<Result<Vec<_>>>()?;
    Ok(CatalogReport { entries })
}

/// Result of checking a solution locus.
#[derive(Clone, Debug)]
pub struct LocusReport {
    /// Locus id.
    pub id: String,
    /// Classification status from the manifest.
    pub status: String,
    /// Checks.
    pub checks: Vec<CheckOutcome>,
}

impl LocusReport {
    /// True iff every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

fn to_real(name: &str, v: &GScalar) -> Result<BigRational> {
    v.to_rational().ok_or_else(|| Error::Catalog(format!("`{name}` = {v} is not real")))
}

/// The environment for one sample of a witness: primal values, sample
/// values, forced symbols at zero, then the derived definitions in order.
fn witness_env(w: Option<&Witness>, base: &BTreeMap<String, GScalar>) -> Result<BTreeMap<String, GScalar>> {
    let mut env = base.clone();
    if let Some(w) = w {
        for f in &w.forced {
            env.entry(f.clone()).or_insert_with(GScalar::zero);
        }
        for (name, e) in &w.derived {
            let v = e.eval(&env)?;
            env.insert(name.clone(), v);
        }
    }
    Ok(env)
}

fn witness_report(
    cat: &Catalog,
    w: &Witness,
    d: &DualStructure<GScalar>,
    env: &BTreeMap<String, GScalar>,
) -> Result<crate::morphism::MorphismReport> {
    let target = cat.algebra(&w.target)?;
    let tparams: Assignment =
        w.target_params.iter().map(|(k, e)| Ok((k.clone(), to_real(k, &e.eval(env)?)?))).collect::<Result<_>>()?;
    // Target parameters not given explicitly take the value of the
    // same-named symbol.
    let tparams = target
        .params()
        .iter()
        .map(|p| {
            let v = match tparams.get(&p.name) {
                Some(v) => v.clone(),
                None => to_real(&p.name, env.get(&p.name).ok_or_else(|| Error::MissingParameter(p.name.clone()))?)?,
            };
            Ok((p.name.clone(), v))
        })
        .collect::<Result<Assignment>>()?;
    let t = target.specialize(&tparams)?;
    let c = SuperMatrix::new(d.dims(), eval_matrix(&w.matrix, env)?)?;
    verify_isomorphism(d.dual_algebra(), &t, &c, true)
}

/// Primal assignments for a locus sample: fixed values, then sample
/// values, then every sampled value within range.
fn primal_points(cat: &Catalog, g: &LieSuperAlgebra<MultiPoly>, l: &Locus, sample: &Assignment) -> Vec<Assignment> {
    let axes: Vec<(String, Vec<BigRational>)> = g
        .params()
        .iter()
        .map(|p| {
            let vals = match l.primal_values.get(&p.name).or_else(|| sample.get(&p.name)) {
                Some(v) => vec![v.clone()],
                None => cat.sampling(&p.name).unwrap_or(&[]).iter().filter(|v| p.range.contains(v)).cloned().collect(),
            };
            (p.name.clone(), vals)
        })
        .collect();
    cartesian(&axes)
}

/// Checks a locus at every sample and every primal it applies to.
pub fn verify_locus(cat: &Catalog, l: &Locus, families: &SolvedFamilies) -> Result<LocusReport> {
    let mut mixed = 0;
    let mut dual = 0;
    let mut outside = Vec::new();
    let mut witness_fail = Vec::new();
    let mut forced_fail = Vec::new();
    let mut pinned_fail = Vec::new();
    let mut evaluated = 0;
    for primal_id in &l.primals {
        let g = cat.algebra(primal_id)?;
        for sample in &l.samples {
            for pp in primal_points(cat, &g, l, sample) {
                let mut base = real_point(sample);
                base.extend(real_point(&pp));
                let env = witness_env(l.witness.as_ref(), &base)?;
                let gs = g.specialize(&pp)?;
                let d = dual_at(&l.id, g.dims(), &l.solution, &env)?;
                evaluated += 1;
                mixed += mixed_jacobi_residual(&gs, &d)?.nonzero_count();
                dual += d.dual_algebra().super_jacobi_residual().nonzero_count();
                if let Some(fam) = families.get(primal_id) {
                    if !fam.contains(&d, &pp)? {
                        outside.push(format!("{primal_id} at {sample:?}"));
                    }
                }
                // Witnesses relate the dual to a fixed target; they are
                // checked once per sample, on the first primal.
                let Some(w) = &l.witness else { continue };
                if primal_id != &l.primals[0] {
                    continue;
                }
                let rep = witness_report(cat, w, &d, &env)?;
                if !rep.ok() {
                    witness_fail.push(format!("{sample:?}: {}", rep.failures().join("; ")));
                }
                for f in &w.forced {
                    let mut moved = base.clone();
                    moved.insert(f.clone(), GScalar::one());
                    let env2 = witness_env(Some(w), &moved)?;
                    let d2 = dual_at(&l.id, g.dims(), &l.solution, &env2)?;
                    let rep = witness_report(cat, w, &d2, &env2)?;
                    let admissible = rep.admissible.ok && rep.dual_admissible.as_ref().is_none_or(|c| c.ok);
                    if admissible {
                        forced_fail.push(format!("{f} = 1 is still admissible at {sample:?}"));
                    }
                }
                for p in &w.pinned {
                    let mut env2 = env.clone();
                    let v = env2.get(p).cloned().ok_or_else(|| Error::MissingParameter(p.clone()))?;
                    env2.insert(p.clone(), v + GScalar::one());
                    let rep = witness_report(cat, w, &d, &env2)?;
                    if rep.residual.is_zero() {
                        pinned_fail.push(format!("{p} + 1 still maps at {sample:?}"));
                    }
                }
            }
        }
    }
    let list = |v: &[String]| (!v.is_empty()).then(|| v.join(" | "));
    let mut checks = vec![
        CheckOutcome::from_count("mixed_jacobi", mixed, None),
        CheckOutcome::from_count("dual_jacobi", dual, None),
        CheckOutcome::from_count("solver_family", outside.len(), list(&outside)),
        CheckOutcome::flag("evaluated", evaluated > 0, (evaluated == 0).then(|| "no sample points".to_string())),
    ];
    if let Some(w) = &l.witness {
        checks.push(CheckOutcome::from_count(format!("witness -> {}", w.target), witness_fail.len(), list(&witness_fail)));
        if !w.forced.is_empty() {
            checks.push(CheckOutcome::from_count("forced_entries", forced_fail.len(), list(&forced_fail)));
        }
        if !w.pinned.is_empty() {
            checks.push(CheckOutcome::from_count("pinned_entries", pinned_fail.len(), list(&pinned_fail)));
        }
    }
    Ok(LocusReport { id: l.id.clone(), status: l.status.clone(), checks })
}

/// Checks every locus (in parallel, manifest order).
pub fn verify_loci(cat: &Catalog) -> Result<Vec<LocusReport>> {
    let families = solve_families(cat, cat.loci().iter().flat_map(|l| l.primals.iter().map(String::as_str)))?;
    cat.loci().par_iter().map(|l| verify_locus(cat, l, &families)).collect()
}

/// Symbolic check of every automorphism family, at each sampled value of
/// the algebra's parameter within the family's range.
pub fn verify_automorphisms(cat: &Catalog) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    for (id, fam) in cat.automorphism_families() {
        let g = cat.algebra(id)?;
        let pts = cat.automorphism_points(id)?;
        let mut count = 0;
        for pt in &pts {
            count += fam.verify_symbolic(&g.specialize(pt)?)?.nonzero_count();
        }
        out.push(CheckOutcome::from_count(format!("automorphisms of {id}"), count, (count > 0).then(|| fam.to_string())));
    }
    Ok(out)
}
