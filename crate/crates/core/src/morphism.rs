//! Basis changes: automorphisms, isomorphisms and bialgebra equivalence.
//!
//! A transformation matrix `M` defines the new basis `X'_i = M_ia X_a`.  The
//! structure constants transport as
//!
//! ```text
//! f'^k_{ij} = Σ (−1)^{|a|(|j|+|b|)} M_ia M_jb f^c_{ab} (M⁻¹)_{ck}
//! ```
//!
//! so transports compose as `T(T(g, M₁), M₂) = T(g, M₂·M₁)` for even `M`.
//! To stay polynomial (and so usable with symbolic entries) every check is
//! phrased without the inverse: `T(src, M) = dst` iff
//! `Σ sign · M_ia M_jb f^c_{ab} = Σ_k f'^k_{ij} M_kc` and `M` is invertible.
//!
//! Automorphisms are checked as `T(g, A·P) = g` with the parity operator
//! `P = diag((−1)^{|k|})`; duals transform under `A` through
//! `(A^{st})^{−1}`, i.e. [`transform_dual`].

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::bialgebra::DualStructure;
use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::params::Assignment;
use crate::parser::{parse_expr, parse_expr_matrix, Expr};
use crate::poly::MultiPoly;
use crate::ring::Ring;
use crate::scalar::GScalar;
use crate::superalgebra::{LieSuperAlgebra, Residual};
use crate::supermatrix::{SuperMatrix, TransformationCheck};

/// `S^c_{ij} − Σ_k dst^k_{ij} M_kc`, which vanishes iff `T(src, M) = dst`
/// (for invertible `M`).  Keys are `(i, j, c)`, zero-based.
pub fn iso_residual<R: Ring>(src: &LieSuperAlgebra<R>, dst: &LieSuperAlgebra<R>, m: &SuperMatrix<R>) -> Result<Residual<R>> {
    let d = src.dims();
    if dst.dims() != d || m.dims() != d {
        return Err(Error::DimensionMismatch(format!("algebras {d} / {} and matrix {}", dst.dims(), m.dims())));
    }
    let n = d.total();
    let mut out = Residual::new();
    for i in 0..n {
        for j in 0..n {
            for c in 0..n {
                let mut acc = R::zero();
                for a in 0..n {
                    let mia = m.get(i, a);
                    if mia.is_zero() {
                        continue;
                    }
                    for b in 0..n {
                        let mjb = m.get(j, b);
                        let fab = src.f(a, b, c);
                        if mjb.is_zero() || fab.is_zero() {
                            continue;
                        }
                        let sign = if d.is_odd(a) && (d.parity(j) + d.parity(b)) % 2 == 1 { -1 } else { 1 };
                        acc.add_product(&mia.mul_ref(mjb).signed(sign), fab);
                    }
                }
                for k in 0..n {
                    let neg = dst.f(i, j, k).neg_ref();
                    acc.add_product(&neg, m.get(k, c));
                }
                out.insert(vec![i, j, c], acc);
            }
        }
    }
    Ok(out)
}

/// The algebra `T(g, M)` in the basis `X'_i = M_ia X_a`.
pub fn transport(g: &LieSuperAlgebra<GScalar>, m: &SuperMatrix<GScalar>) -> Result<LieSuperAlgebra<GScalar>> {
    let d = g.dims();
    if m.dims() != d {
        return Err(Error::DimensionMismatch(format!("algebra {d} and matrix {}", m.dims())));
    }
    let inv = m.inverse()?;
    let n = d.total();
    let mut f = vec![GScalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut s = vec![GScalar::zero(); n];
            for a in 0..n {
                for b in 0..n {
                    let coeff = m.get(i, a) * m.get(j, b);
                    if coeff.is_zero() {
                        continue;
                    }
                    let sign = if d.is_odd(a) && (d.parity(j) + d.parity(b)) % 2 == 1 { -1 } else { 1 };
                    for (c, sc) in s.iter_mut().enumerate() {
                        sc.add_product(&coeff.signed(sign), g.f(a, b, c));
                    }
                }
            }
            for k in 0..n {
                let mut v = GScalar::zero();
                for (c, sc) in s.iter().enumerate() {
                    v.add_product(sc, inv.get(c, k));
                }
                f[(i * n + j) * n + k] = v;
            }
        }
    }
    Ok(LieSuperAlgebra::from_tensor(g.name(), d, f)?
        .with_generators(g.generators().to_vec())?
        .with_params(g.params().to_vec()))
}

/// The dual transformed by the algebra automorphism (or basis change) `A`:
/// `T(g̃, (A^{st})^{−1})`.
pub fn transform_dual(d: &DualStructure<GScalar>, a: &SuperMatrix<GScalar>) -> Result<DualStructure<GScalar>> {
    let m = a.inverse_supertranspose()?;
    Ok(DualStructure::from_algebra(transport(d.dual_algebra(), &m)?))
}

/// Outcome of an isomorphism or automorphism check.
#[derive(Clone, Debug)]
pub struct MorphismReport {
    /// Transformation-matrix diagnostics for the matrix itself.
    pub admissible: TransformationCheck,
    /// Diagnostics for `M^{−st}` (only for dual-side checks).
    pub dual_admissible: Option<TransformationCheck>,
    /// Polynomial residual of `T(src, M) = dst`.
    pub residual: Residual<GScalar>,
}

impl MorphismReport {
    /// True iff the matrix is admissible and the residual vanishes.
    pub fn ok(&self) -> bool {
        self.admissible.ok && self.dual_admissible.as_ref().is_none_or(|c| c.ok) && self.residual.is_zero()
    }

    /// Every reason for failure, one line each.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self.admissible.violations.clone();
        if let Some(c) = &self.dual_admissible {
            out.extend(c.violations.iter().map(|v| format!("inverse supertranspose: {v}")));
        }
        if !self.residual.is_zero() {
            out.push(format!("{} nonzero residual component(s): {}", self.residual.nonzero_count(), self.residual));
        }
        out
    }
}

/// Checks `T(src, C) = dst` for a transformation matrix `C`.  With
/// `dual_side` set, `C^{−st}` must be a transformation matrix as well
/// (the dual basis transforms by it).
pub fn verify_isomorphism(
    src: &LieSuperAlgebra<GScalar>,
    dst: &LieSuperAlgebra<GScalar>,
    c: &SuperMatrix<GScalar>,
    dual_side: bool,
) -> Result<MorphismReport> {
    let admissible = c.is_transformation_matrix();
    let dual_admissible = if dual_side {
        Some(match c.inverse_supertranspose() {
            Ok(m) => m.is_transformation_matrix(),
            Err(e) => TransformationCheck { ok: false, violations: vec![e.to_string()] },
        })
    } else {
        None
    };
    Ok(MorphismReport { admissible, dual_admissible, residual: iso_residual(src, dst, c)? })
}

/// Checks that `A` is an automorphism: `T(g, A·P) = g` with `A` an even
/// (parity-preserving) transformation matrix.  Nonzero odd blocks of
/// ordinary numbers mix bosons with fermions, so they are rejected even
/// when the structure constants happen to be preserved.
pub fn verify_automorphism(g: &LieSuperAlgebra<GScalar>, a: &SuperMatrix<GScalar>) -> Result<MorphismReport> {
    let ap = a.mul(&SuperMatrix::parity_operator(g.dims()))?;
    let mut admissible = a.is_transformation_matrix();
    if !a.is_even() {
        admissible.ok = false;
        admissible.violations.push("odd blocks must vanish: automorphisms preserve parity".to_string());
    }
    Ok(MorphismReport {
        admissible,
        dual_admissible: None,
        residual: iso_residual(g, g, &ap)?,
    })
}

/// A parameterized family of automorphisms, e.g. `[[1,a,0],[0,c,0],[0,0,d]]`
/// with `c ≠ 0, d ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct AutFamily {
    /// Graded dimensions.
    pub dims: GradedDims,
    /// Entries as expressions in the family parameters.
    pub entries: Vec<Vec<Expr>>,
    /// Expressions that must not vanish.
    pub nonzero: Vec<Expr>,
    /// Source text of the matrix (for display).
    pub text: String,
}

impl AutFamily {
    /// Parses a matrix of expressions and a list of non-vanishing
    /// conditions.
    pub fn parse(dims: GradedDims, matrix: &str, nonzero: &[&str]) -> Result<Self> {
        let entries = parse_expr_matrix(matrix)?;
        if entries.len() != dims.total() || entries.iter().any(|r| r.len() != dims.total()) {
            return Err(Error::DimensionMismatch(format!("family `{matrix}` for dims {dims}")));
        }
        let nonzero = nonzero.iter().map(|e| parse_expr(e)).collect::<Result<_>>()?;
        Ok(AutFamily { dims, entries, nonzero, text: matrix.to_string() })
    }

    /// Parameter names.
    pub fn params(&self) -> Vec<String> {
        let mut out = std::collections::BTreeSet::new();
        for e in self.entries.iter().flatten() {
            out.extend(e.variables());
        }
        out.into_iter().collect()
    }

    /// The family member at real parameter values.
    pub fn instantiate(&self, a: &Assignment) -> Result<SuperMatrix<GScalar>> {
        let env: BTreeMap<String, GScalar> = a.iter().map(|(k, v)| (k.clone(), GScalar::real(v.clone()))).collect();
        for cond in &self.nonzero {
            if cond.eval(&env)?.is_zero() {
                return Err(Error::ConstraintViolated(format!("{cond} must not vanish")));
            }
        }
        let rows = self.entries.iter().map(|r| r.iter().map(|e| e.eval(&env)).collect()).collect::<Result<_>>()?;
        SuperMatrix::new(self.dims, rows)
    }

    /// The family as a polynomial matrix.
    pub fn symbolic(&self) -> Result<SuperMatrix<MultiPoly>> {
        let rows = self.entries.iter().map(|r| r.iter().map(Expr::to_poly).collect()).collect::<Result<_>>()?;
        SuperMatrix::new(self.dims, rows)
    }

    /// Symbolic check that every member is an automorphism of `g`: the
    /// inverse-free residual of `T(g, A·P) = g` vanishes identically.
    pub fn verify_symbolic(&self, g: &LieSuperAlgebra<GScalar>) -> Result<Residual<MultiPoly>> {
        let ap = self.symbolic()?.mul(&SuperMatrix::<GScalar>::parity_operator(self.dims).map(|v| MultiPoly::constant(v.clone())))?;
        let gp = g.to_poly();
        iso_residual(&gp, &gp, &ap)
    }

    /// Parameter values for which the family yields exactly `n`, read off
    /// the entries that are a bare parameter; `None` if `n` is not a member.
    pub fn membership(&self, n: &SuperMatrix<GScalar>) -> Option<Assignment> {
        if n.dims() != self.dims {
            return None;
        }
        let mut a = Assignment::new();
        for (r, row) in self.entries.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if let Expr::Var(name) = e {
                    let v: BigRational = n.get(r, c).to_rational()?;
                    if a.get(name).is_some_and(|old| *old != v) {
                        return None;
                    }
                    a.insert(name.clone(), v);
                }
            }
        }
        let m = self.instantiate(&a).ok()?;
        (m == *n).then_some(a)
    }
}

impl fmt::Display for AutFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)?;
        if !self.nonzero.is_empty() {
            let conds: Vec<String> = self.nonzero.iter().map(|e| format!("{e} != 0")).collect();
            write!(f, " with {}", conds.join(", "))?;
        }
        Ok(())
    }
}

/// Outcome of [`bialgebra_equivalent`].
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    /// `T(reference, B₁) = d₁`.
    pub witness1_ok: bool,
    /// `T(reference, B₂) = d₂`.
    pub witness2_ok: bool,
    /// `N = B₂·B₁⁻¹`, mapping `d₁` to `d₂`.
    pub n: SuperMatrix<GScalar>,
    /// The algebra-side matrix `(N)^{st³}` tested against the family.
    pub candidate: SuperMatrix<GScalar>,
    /// Family parameters reproducing the candidate, if it is a member.
    pub membership: Option<Assignment>,
    /// `transform_dual(d₁, A⁻¹) = d₂` for the member `A` (when found).
    pub certificate_ok: bool,
}

impl EquivalenceReport {
    /// True iff both witnesses hold, the candidate is an automorphism from
    /// the family and the certificate checks out.
    pub fn equivalent(&self) -> bool {
        self.witness1_ok && self.witness2_ok && self.membership.is_some() && self.certificate_ok
    }
}

/// Decides whether `(g, d₁)` and `(g, d₂)` are equivalent bialgebras, given
/// witnesses `B₁, B₂` carrying a common reference dual to each of them and
/// the automorphism family of `g`.
///
/// `d₂ = T(d₁, N)` with `N = B₂B₁⁻¹`; the pair is equivalent exactly when
/// the corresponding algebra-side matrix `A = N^{st³}` is an automorphism,
/// since then `transform_dual(d₁, A⁻¹) = d₂`.
pub fn bialgebra_equivalent(
    reference: &DualStructure<GScalar>,
    d1: &DualStructure<GScalar>,
    d2: &DualStructure<GScalar>,
    b1: &SuperMatrix<GScalar>,
    b2: &SuperMatrix<GScalar>,
    family: &AutFamily,
) -> Result<EquivalenceReport> {
    let r = reference.dual_algebra();
    let witness1_ok = iso_residual(r, d1.dual_algebra(), b1)?.is_zero();
    let witness2_ok = iso_residual(r, d2.dual_algebra(), b2)?.is_zero();
    let n = b2.mul(&b1.superinverse()?)?;
    let candidate = n.supertranspose().supertranspose().supertranspose();
    let membership = family.membership(&candidate);
    let certificate_ok = match &membership {
        Some(_) => {
            let moved = transform_dual(d1, &candidate.superinverse()?)?;
            moved.dual_algebra().tensor() == d2.dual_algebra().tensor()
        }
        None => false,
    };
    Ok(EquivalenceReport { witness1_ok, witness2_ok, n, candidate, membership, certificate_ok })
}

/// Which entries a witness search may vary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchMask {
    /// `allowed[r][c]` is true iff entry `(r, c)` may be nonzero.
    pub allowed: Vec<Vec<bool>>,
}

impl SearchMask {
    /// Even (block-diagonal) matrices: odd blocks fixed to zero.
    pub fn even(dims: GradedDims) -> Self {
        let n = dims.total();
        SearchMask { allowed: (0..n).map(|r| (0..n).map(|c| dims.is_odd(r) == dims.is_odd(c)).collect()).collect() }
    }

    /// Every entry free.
    pub fn full(dims: GradedDims) -> Self {
        let n = dims.total();
        SearchMask { allowed: vec![vec![true; n]; n] }
    }
}

/// Exhaustive search for a witness `C` with `T(src, C) = dst`, entries
/// in `{−bound, …, bound}` (times `i` in the odd-row/even-column block).
/// Candidates are enumerated in parallel; the first hit in enumeration
/// order is returned, so results are deterministic.
pub fn search_isomorphism(
    src: &LieSuperAlgebra<GScalar>,
    dst: &LieSuperAlgebra<GScalar>,
    bound: u32,
    mask: &SearchMask,
    dual_side: bool,
) -> Result<Option<SuperMatrix<GScalar>>> {
    let d = src.dims();
    let slots: Vec<(usize, usize)> = mask
        .allowed
        .iter()
        .enumerate()
        .flat_map(|(r, row)| row.iter().enumerate().filter(|(_, a)| **a).map(move |(c, _)| (r, c)))
        .collect();
    let base = u64::from(2 * bound + 1);
    let total = base
        .checked_pow(u32::try_from(slots.len()).unwrap_or(u32::MAX))
        .ok_or_else(|| Error::Unsupported("search space too large".into()))?;
    if total > 50_000_000 {
        return Err(Error::Unsupported(format!("search space of {total} candidates is too large")));
    }
    let build = |mut code: u64| -> SuperMatrix<GScalar> {
        let mut m = SuperMatrix::new(d, vec![vec![GScalar::zero(); d.total()]; d.total()]).expect("square");
        for &(r, c) in &slots {
            let v = (code % base) as i64 - i64::from(bound);
            code /= base;
            let s = if d.is_odd(r) && !d.is_odd(c) { GScalar::imag(BigRational::from_integer(v.into())) } else { GScalar::from_int(v) };
            m.set(r, c, s);
        }
        m
    };
    let hit = (0..total).into_par_iter().find_first(|&code| {
        let m = build(code);
        if m.det().is_zero() {
            return false;
        }
        match verify_isomorphism(src, dst, &m, dual_side) {
            Ok(rep) => rep.ok(),
            Err(_) => false,
        }
    });
    Ok(hit.map(build))
}
