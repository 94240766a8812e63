//! Exact solver for the dual structures compatible with a Lie superalgebra.
//!
//! The mixed super Jacobi identity is linear in the dual constants `f̃`.
//! After reducing `f̃` to its independent components (super antisymmetry,
//! grading, reality) the identity becomes a real linear system whose kernel
//! is the space of compatible duals.  Substituting the general kernel
//! element into the super Jacobi identity of `g̃` leaves quadratic
//! constraints on the kernel coordinates, which are reported (and split into
//! branches when they factor into linear forms).
//!
//! For parametric algebras the system is assembled over polynomials in the
//! parameter and eliminated fraction-free; the parameter values where the
//! rank drops are found from the last pivot and re-solved separately.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;

use crate::bialgebra::{mixed_jacobi_residual, DualStructure};
use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::linalg::{self, Mat};
use crate::params::{to_point, Assignment, ParamDecl};
use crate::parser::format_statements;
use crate::poly::{Monomial, MultiPoly};
use crate::ring::Ring;
use crate::scalar::{format_rational, GScalar};
use crate::superalgebra::LieSuperAlgebra;

/// One independent dual component `f̃^{ij}_k` (zero-based, `i ≤ j`).
///
/// Imaginary components (`|i| = |j| = 1`, `|k| = 0`) are represented by
/// their real coefficient of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unknown {
    /// First upper index.
    pub i: usize,
    /// Second upper index.
    pub j: usize,
    /// Lower index.
    pub k: usize,
    /// True iff the component is `i` times the unknown.
    pub imaginary: bool,
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ft^{{{}{}}}_{}", self.i + 1, self.j + 1, self.k + 1)?;
        if self.imaginary {
            f.write_str(" (imaginary)")?;
        }
        Ok(())
    }
}

/// Independent dual components in lexicographic order of `(i ≤ j, k)`.
pub fn enumerate_unknowns(dims: GradedDims) -> Vec<Unknown> {
    let n = dims.total();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            if i == j && !dims.is_odd(i) {
                continue;
            }
            for k in 0..n {
                if (dims.parity(i) + dims.parity(j)) % 2 != dims.parity(k) {
                    continue;
                }
                out.push(Unknown { i, j, k, imaginary: dims.is_odd(i) && dims.is_odd(j) });
            }
        }
    }
    out
}

/// The dual whose independent components take the given real coordinates.
pub fn dual_from_coords<R: Ring>(dims: GradedDims, unknowns: &[Unknown], coords: &[R]) -> Result<DualStructure<R>> {
    if unknowns.len() != coords.len() {
        return Err(Error::DimensionMismatch(format!("{} coordinates for {} unknowns", coords.len(), unknowns.len())));
    }
    DualStructure::from_components(
        "dual",
        dims,
        unknowns.iter().zip(coords).map(|(u, c)| {
            let v = if u.imaginary { c.scale(&GScalar::i()) } else { c.clone() };
            (u.i, u.j, u.k, v)
        }),
    )
}

/// Coordinates of a concrete dual, or `None` if it has a component outside
/// the reduced form (wrong reality, grading or antisymmetry).
pub fn coords_of(d: &DualStructure<GScalar>, unknowns: &[Unknown]) -> Option<Vec<GScalar>> {
    let coords: Vec<GScalar> = unknowns
        .iter()
        .map(|u| {
            let v = d.ft(u.i, u.j, u.k);
            if u.imaginary {
                v.clone() * -GScalar::i()
            } else {
                v.clone()
            }
        })
        .collect();
    if coords.iter().any(|c| !c.is_real()) {
        return None;
    }
    let rebuilt = dual_from_coords(d.dims(), unknowns, &coords).ok()?;
    (rebuilt.dual_algebra().tensor() == d.dual_algebra().tensor()).then_some(coords)
}

/// The mixed identity as a real linear system in the unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    /// Column labels.
    pub unknowns: Vec<Unknown>,
    /// Rows over polynomials in the algebra's parameters (constants for a
    /// concrete algebra); real and imaginary parts are separate rows.
    pub rows: Vec<Vec<MultiPoly>>,
}

impl LinearSystem {
    /// True iff no entry depends on a parameter.
    pub fn is_constant(&self) -> bool {
        self.rows.iter().flatten().all(MultiPoly::is_constant)
    }

    /// The constant coefficient matrix, if parameter-free.
    pub fn constant_matrix(&self) -> Option<Mat> {
        self.rows.iter().map(|r| r.iter().map(MultiPoly::constant_value).collect::<Option<Vec<_>>>()).collect()
    }

    /// The system with parameters substituted.
    pub fn substitute(&self, point: &BTreeMap<String, GScalar>) -> LinearSystem {
        LinearSystem {
            unknowns: self.unknowns.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|c| c.substitute(point)).collect()).collect(),
        }
    }
}

/// Assembles the mixed identity as a linear system over the unknowns.
pub fn msj_linear_system(g: &LieSuperAlgebra<MultiPoly>) -> Result<LinearSystem> {
    let dims = g.dims();
    let unknowns = enumerate_unknowns(dims);
    let mut columns: BTreeMap<(Vec<usize>, bool), Vec<MultiPoly>> = BTreeMap::new();
    for (a, _) in unknowns.iter().enumerate() {
        let mut coords = vec![MultiPoly::zero(); unknowns.len()];
        coords[a] = MultiPoly::one();
        let d = dual_from_coords(dims, &unknowns, &coords)?;
        let res = mixed_jacobi_residual(g, &d)?;
        for (key, v) in res.entries() {
            for (imag, part) in [(false, v.re_part()), (true, v.im_part())] {
                if !part.is_zero() {
                    columns.entry((key.to_vec(), imag)).or_insert_with(|| vec![MultiPoly::zero(); unknowns.len()])[a] =
                        part;
                }
            }
        }
    }
    Ok(LinearSystem { unknowns, rows: columns.into_values().collect() })
}

/// A primal parameter value where the mixed system loses rank.
#[derive(Clone, Debug)]
pub struct RankDrop {
    /// Parameter name.
    pub param: String,
    /// The special value.
    pub value: BigRational,
    /// The (larger) family at this value.
    pub family: Box<DualSolutionFamily>,
}

/// The parameterized solution set of the mixed and dual super Jacobi
/// identities for one algebra.
#[derive(Clone, Debug)]
pub struct DualSolutionFamily {
    /// Name of the primal algebra.
    pub algebra: String,
    /// Graded dimensions.
    pub dims: GradedDims,
    /// Parameters of the primal algebra.
    pub primal_params: Vec<ParamDecl>,
    /// Independent dual components (columns).
    pub unknowns: Vec<Unknown>,
    /// Kernel basis: coordinates over [`Self::unknowns`], polynomial in the
    /// primal parameters, first nonzero coordinate monic.
    pub basis: Vec<Vec<MultiPoly>>,
    /// One free parameter per basis vector.
    pub free_params: Vec<String>,
    /// Polynomials in the free (and primal) parameters that must vanish.
    pub quad_constraints: Vec<MultiPoly>,
    /// Alternative sets of linear factors whose vanishing solves every
    /// constraint (empty when there are no constraints).
    pub branches: Vec<Vec<MultiPoly>>,
    /// Constraints that do not split into linear factors (reported as an
    /// explicit variety for inspection).
    pub unfactored: Vec<MultiPoly>,
    /// Primal parameter values where the kernel grows.
    pub rank_drops: Vec<RankDrop>,
}

const PARAM_NAMES: [&str; 12] =
    ["alpha", "beta", "gamma", "delta", "mu", "nu", "lambda", "eta", "rho", "sigma", "tau", "kappa"];

fn fresh_names(count: usize, taken: &BTreeSet<String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut extra = 1;
    let mut it = PARAM_NAMES.iter();
    while out.len() < count {
        let name = match it.next() {
            Some(n) => n.to_string(),
            None => {
                extra += 1;
                format!("t{extra}")
            }
        };
        if !taken.contains(&name) {
            out.push(name);
        }
    }
    out
}

impl DualSolutionFamily {
    /// Dimension of the kernel.
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    /// Kernel basis as dual structures (polynomial in primal parameters).
    pub fn nullspace_basis(&self) -> Result<Vec<DualStructure<MultiPoly>>> {
        self.basis.iter().map(|v| dual_from_coords(self.dims, &self.unknowns, v)).collect()
    }

    /// The general kernel element `Σ name_t · basis_t`.
    pub fn general(&self) -> Result<DualStructure<MultiPoly>> {
        let mut coords = vec![MultiPoly::zero(); self.unknowns.len()];
        for (name, v) in self.free_params.iter().zip(&self.basis) {
            let t = MultiPoly::var(name);
            for (c, b) in coords.iter_mut().zip(v) {
                *c = &*c + &(&t * b);
            }
        }
        let d = dual_from_coords(self.dims, &self.unknowns, &coords)?;
        let mut params = self.primal_params.clone();
        params.extend(self.free_params.iter().map(|n| ParamDecl::new(n, crate::params::ParamRange::all())));
        Ok(DualStructure::from_algebra(
            d.into_algebra().with_name(&format!("dual family of {}", self.algebra)).with_params(params),
        ))
    }

    /// Evaluates the family at values for every free parameter (and every
    /// primal parameter), rejecting points that violate a constraint.
    pub fn specialize(&self, a: &Assignment) -> Result<DualStructure<GScalar>> {
        let point = to_point(a);
        for c in &self.quad_constraints {
            let v = c.eval(&point)?;
            if !v.is_zero() {
                return Err(Error::ConstraintViolated(format!("{c} = {v} at the given point")));
            }
        }
        let g = self.general()?;
        let mut d = g.specialize_at(&point)?;
        d = DualStructure::from_algebra(d.into_algebra().with_params(Vec::new()));
        Ok(d)
    }

    /// True iff the concrete dual lies in the family at the given primal
    /// parameter values (including the enlarged families at rank drops).
    pub fn contains(&self, d: &DualStructure<GScalar>, primal: &Assignment) -> Result<bool> {
        for drop in &self.rank_drops {
            if primal.get(&drop.param) == Some(&drop.value) {
                let mut rest = primal.clone();
                rest.remove(&drop.param);
                return drop.family.contains(d, &rest);
            }
        }
        let Some(x) = coords_of(d, &self.unknowns) else { return Ok(false) };
        let point = to_point(primal);
        let cols: Vec<Vec<GScalar>> = self
            .basis
            .iter()
            .map(|v| v.iter().map(|c| c.eval(&point)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let n = self.unknowns.len();
        let a: Mat = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let t = if cols.is_empty() {
            if x.iter().all(GScalar::is_zero) {
                Vec::new()
            } else {
                return Ok(false);
            }
        } else {
            match linalg::solve(&a, &x) {
                Some(t) => t,
                None => return Ok(false),
            }
        };
        if t.iter().any(|v| !v.is_real()) {
            return Ok(false);
        }
        let mut full = point.clone();
        for (name, v) in self.free_params.iter().zip(&t) {
            full.insert(name.clone(), v.clone());
        }
        for c in &self.quad_constraints {
            if !c.eval(&full)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for DualSolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dual family of {} {}: {} free parameter(s)", self.algebra, self.dims, self.nullity())?;
        let names: Vec<String> = self.unknowns.iter().map(ToString::to_string).collect();
        writeln!(f, "  unknowns: {}", names.join(", "))?;
        writeln!(f, "  basis:")?;
        match self.nullspace_basis() {
            Ok(b) => {
                for (name, d) in self.free_params.iter().zip(&b) {
                    writeln!(f, "    {name}: {}", format_statements(d.dual_algebra()))?;
                }
            }
            Err(e) => writeln!(f, "    <{e}>")?,
        }
        if let Ok(g) = self.general() {
            writeln!(f, "  general: {}", format_statements(g.dual_algebra()))?;
        }
        if self.quad_constraints.is_empty() {
            writeln!(f, "  constraints: none")?;
        } else {
            for c in &self.quad_constraints {
                writeln!(f, "  constraint: {c} = 0")?;
            }
            for b in &self.branches {
                let parts: Vec<String> = b.iter().map(|p| format!("{p} = 0")).collect();
                writeln!(f, "  branch: {}", parts.join(", "))?;
            }
            for u in &self.unfactored {
                writeln!(f, "  variety: {u} = 0")?;
            }
        }
        for d in &self.rank_drops {
            writeln!(
                f,
                "  rank drop at {} = {}: {} free parameter(s)",
                d.param,
                format_rational(&d.value),
                d.family.nullity()
            )?;
            for line in d.family.to_string().lines().skip(1) {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

/// Divides a polynomial vector by the gcd of its entries (when univariate)
/// and scales it so the first nonzero entry has leading coefficient 1.
fn normalize_poly_vector(mut v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let nonzero: Vec<&MultiPoly> = v.iter().filter(|c| !c.is_zero()).collect();
    if nonzero.is_empty() {
        return v;
    }
    let mut g = Some(nonzero[0].clone());
    for c in &nonzero[1..] {
        g = g.and_then(|acc| MultiPoly::gcd_univariate(&acc, c));
    }
    let g = match g {
        Some(g) => g,
        None => {
            let mut m = nonzero[0].monomial_content().0;
            for c in &nonzero[1..] {
                m = m.gcd(&c.monomial_content().0);
            }
            MultiPoly::monomial(m, GScalar::one())
        }
    };
    if !g.is_constant() {
        v = v.iter().map(|c| c.exact_div(&g).expect("gcd divides")).collect();
    }
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        let (_, lc) = first.leading_term().expect("nonzero");
        let inv = lc.inv().expect("nonzero");
        v = v.iter().map(|c| c.scale(&inv)).collect();
    }
    v
}

/// Kernel of an echelon form by fraction-free back-substitution.
fn poly_kernel(rows: &[Vec<MultiPoly>], pivots: &[usize], cols: usize) -> Vec<Vec<MultiPoly>> {
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![MultiPoly::zero(); cols];
        x[free] = MultiPoly::one();
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = MultiPoly::zero();
            for j in pc + 1..cols {
                if !rows[r][j].is_zero() && !x[j].is_zero() {
                    s = &s + &(&rows[r][j] * &x[j]);
                }
            }
            let a = rows[r][pc].clone();
            for xj in x.iter_mut() {
                if !xj.is_zero() {
                    *xj = &*xj * &a;
                }
            }
            x[pc] = -s;
        }
        basis.push(normalize_poly_vector(x));
    }
    basis
}

/// Splits constraints into linear factors where possible.
fn split_constraints(constraints: &[MultiPoly]) -> (Vec<Vec<MultiPoly>>, Vec<MultiPoly>) {
    let mut factor_sets: Vec<Vec<MultiPoly>> = Vec::new();
    let mut unfactored = Vec::new();
    for c in constraints {
        let (m, q) = c.monomial_content();
        let mut factors: Vec<MultiPoly> = m.vars().map(MultiPoly::var).collect();
        if q.degree() <= 1 {
            if !q.is_constant() {
                factors.push(q.monic());
            }
        } else if let Some(roots) = q.rational_roots().filter(|r| !r.is_empty()) {
            let var = q.univariate_var().expect("univariate");
            let mut prod = MultiPoly::one();
            for r in &roots {
                let lin = &MultiPoly::var(&var) - &MultiPoly::constant(GScalar::real(r.clone()));
                prod = &prod * &lin;
                factors.push(lin);
            }
            if prod.degree() < q.degree() {
                unfactored.push(c.clone());
                continue;
            }
        } else {
            unfactored.push(c.clone());
            continue;
        }
        factors.sort_by_key(ToString::to_string);
        factors.dedup();
        factor_sets.push(factors);
    }
    if !unfactored.is_empty() || factor_sets.is_empty() {
        return (Vec::new(), unfactored);
    }
    let mut branches: Vec<BTreeSet<String>> = vec![BTreeSet::new()];
    let mut lookup: BTreeMap<String, MultiPoly> = BTreeMap::new();
    for set in &factor_sets {
        let mut next = Vec::new();
        for b in &branches {
            if set.iter().any(|f| b.contains(&f.to_string())) {
                next.push(b.clone());
                continue;
            }
            for f in set {
                lookup.insert(f.to_string(), f.clone());
                let mut nb = b.clone();
                nb.insert(f.to_string());
                next.push(nb);
            }
        }
        next.sort();
        next.dedup();
        branches = next;
    }
    let minimal: Vec<&BTreeSet<String>> =
        branches.iter().filter(|b| !branches.iter().any(|o| o != *b && o.is_subset(b))).collect();
    let out = minimal.into_iter().map(|b| b.iter().map(|k| lookup[k].clone()).collect()).collect();
    (out, Vec::new())
}

/// Solves the mixed identity for `g`, then imposes super Jacobi on `g̃`.
pub fn solve_duals(g: &LieSuperAlgebra<MultiPoly>) -> Result<DualSolutionFamily> {
    let sys = msj_linear_system(g)?;
    let cols = sys.unknowns.len();
    let primal_names: BTreeSet<String> = g.params().iter().map(|p| p.name.clone()).collect();
    let (basis, rank_drops) = if let Some(m) = sys.constant_matrix() {
        let ns = linalg::nullspace(&m, cols);
        (ns.into_iter().map(|v| v.into_iter().map(MultiPoly::constant).collect()).collect(), Vec::new())
    } else {
        let ech = linalg::bareiss(&sys.rows, cols)?;
        let rank = ech.pivots.len();
        let basis = poly_kernel(&ech.rows, &ech.pivots, cols);
        let mut drops = Vec::new();
        let mut candidates: BTreeSet<(String, BigRational)> = BTreeSet::new();
        for r in 0..rank {
            let piv = &ech.rows[r][ech.pivots[r]];
            if let (Some(var), Some(roots)) = (piv.univariate_var(), piv.rational_roots()) {
                for root in roots {
                    candidates.insert((var.clone(), root));
                }
            }
        }
        for (var, value) in candidates {
            let decl = g.params().iter().find(|p| p.name == var);
            if decl.is_some_and(|d| !d.range.contains(&value)) {
                continue;
            }
            let point: BTreeMap<String, GScalar> = [(var.clone(), GScalar::real(value.clone()))].into();
            let sub = sys.substitute(&point);
            let Some(m) = sub.constant_matrix() else { continue };
            if linalg::rank(&m) < rank {
                let mut gs = g.specialize_at(&point)?.to_poly();
                gs = gs.with_params(g.params().iter().filter(|p| p.name != var).cloned().collect());
                let fam = solve_duals(&gs)?;
                drops.push(RankDrop { param: var, value, family: Box::new(fam) });
            }
        }
        (basis, drops)
    };
    let mut taken = primal_names.clone();
    taken.extend(g.generators().iter().cloned());
    let free_params = fresh_names(basis.len(), &taken);
    let mut fam = DualSolutionFamily {
        algebra: g.name().to_string(),
        dims: g.dims(),
        primal_params: g.params().to_vec(),
        unknowns: sys.unknowns,
        basis,
        free_params,
        quad_constraints: Vec::new(),
        branches: Vec::new(),
        unfactored: Vec::new(),
        rank_drops,
    };
    let general = fam.general()?;
    let mut constraints: Vec<MultiPoly> = Vec::new();
    for (_, v) in general.dual_algebra().super_jacobi_residual().entries() {
        for part in [v.re_part(), v.im_part()] {
            let part = part.monic();
            if !part.is_zero() && !constraints.contains(&part) {
                constraints.push(part);
            }
        }
    }
    fam.quad_constraints = constraints;
    fam.quad_constraints.sort_by_key(|a| (a.degree(), a.len(), a.to_string()));
    let (branches, unfactored) = split_constraints(&fam.quad_constraints);
    fam.branches = branches;
    fam.unfactored = unfactored;
    Ok(fam)
}

/// [`solve_duals`] for a concrete algebra.
pub fn solve_duals_concrete(g: &LieSuperAlgebra<GScalar>) -> Result<DualSolutionFamily> {
    solve_duals(&g.to_poly())
}

/// Parameter values of the primal algebra at which a branch factor
/// depending only on primal parameters vanishes (degenerations of the
/// constraint set, where extra solutions appear).
pub fn degenerations(fam: &DualSolutionFamily) -> Vec<(String, BigRational)> {
    let primal: BTreeSet<String> = fam.primal_params.iter().map(|p| p.name.clone()).collect();
    let mut out = BTreeSet::new();
    for b in &fam.branches {
        for f in b {
            let vars = f.variables();
            if !vars.is_empty() && vars.is_subset(&primal) {
                if let (Some(v), Some(roots)) = (f.univariate_var(), f.rational_roots()) {
                    for r in roots {
                        out.insert((v.clone(), r));
                    }
                }
            }
        }
    }
    out.into_iter().collect()
}

/// A monomial helper: `true` iff the polynomial is (a scalar times) a
/// product of free-parameter variables only.
pub fn is_monomial_constraint(c: &MultiPoly) -> bool {
    c.len() == 1 && c.leading_term().is_some_and(|(m, _)| *m != Monomial::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::ParamRange;
    use crate::scalar::rat;

    fn d(m: usize, n: usize) -> GradedDims {
        GradedDims::new(m, n).unwrap()
    }

    #[test]
    fn unknown_enumeration() {
        let u = enumerate_unknowns(d(1, 1));
        assert_eq!(u.len(), 2);
        assert_eq!((u[0].i, u[0].j, u[0].k, u[0].imaginary), (0, 1, 1, false));
        assert_eq!((u[1].i, u[1].j, u[1].k, u[1].imaginary), (1, 1, 0, true));
        let names: Vec<String> = enumerate_unknowns(d(2, 1)).iter().map(|u| format!("{}{}_{}", u.i + 1, u.j + 1, u.k + 1)).collect();
        assert_eq!(names, ["12_1", "12_2", "13_3", "23_3", "33_1", "33_2"]);
        assert!(enumerate_unknowns(d(0, 1)).is_empty());
    }

    #[test]
    fn algebra_b_family() {
        let b = LieSuperAlgebra::from_brackets("B", d(1, 1), [(0, 1, 1, GScalar::one())]).unwrap();
        let fam = solve_duals_concrete(&b).unwrap();
        assert_eq!(fam.nullity(), 1);
        assert!(fam.quad_constraints.is_empty());
        assert_eq!(fam.basis[0][1], MultiPoly::one());
        assert!(fam.basis[0][0].is_zero());
    }

    #[test]
    fn abelian_family_has_product_constraint() {
        let g = LieSuperAlgebra::<GScalar>::abelian("I", d(1, 1));
        let fam = solve_duals_concrete(&g).unwrap();
        assert_eq!(fam.nullity(), 2);
        assert_eq!(fam.quad_constraints.len(), 1);
        assert_eq!(fam.quad_constraints[0], &MultiPoly::var("alpha") * &MultiPoly::var("beta"));
        assert_eq!(fam.branches.len(), 2);
        let mut a = Assignment::new();
        a.insert("alpha".into(), rat(1, 1));
        a.insert("beta".into(), rat(1, 1));
        assert!(matches!(fam.specialize(&a), Err(Error::ConstraintViolated(_))));
        a.insert("beta".into(), rat(0, 1));
        assert!(fam.specialize(&a).is_ok());
    }

    #[test]
    fn parametric_rank_drop_detected() {
        let p = MultiPoly::var("p");
        let g = LieSuperAlgebra::from_brackets("C1p", d(2, 1), [(0, 1, 1, MultiPoly::one()), (0, 2, 2, p)])
            .unwrap()
            .with_params(vec![ParamDecl::new("p", "(-inf,inf) \\ {0}".parse::<ParamRange>().unwrap())]);
        let fam = solve_duals(&g).unwrap();
        assert_eq!(fam.nullity(), 2);
        assert_eq!(fam.rank_drops.len(), 1);
        assert_eq!(fam.rank_drops[0].value, rat(1, 2));
        assert_eq!(fam.rank_drops[0].family.nullity(), 3);
        let degen = degenerations(&fam);
        assert_eq!(degen, vec![("p".to_string(), rat(-1, 2))]);
    }
}
