//! Lie superalgebras given by structure constants.
//!
//! An algebra over graded dimensions `(m|n)` is stored as the full tensor
//! `f^k_{ij}` with `[X_i, X_j] = f^k_{ij} X_k`.  Both orderings `(i, j)` and
//! `(j, i)` are materialized when the algebra is built from brackets, using
//! super antisymmetry `f^k_{ij} = −(−1)^{|i||j|} f^k_{ji}`, so lookups never
//! re-derive signs.  The coefficient ring is generic: concrete algebras use
//! [`GScalar`], parametric ones use [`MultiPoly`] in their named parameters,
//! and every residual below runs unchanged in both.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::params::{check_assignment, to_point, Assignment, ParamDecl};
use crate::poly::MultiPoly;
use crate::ring::Ring;
use crate::scalar::GScalar;

/// Nonzero entries of a residual tensor, keyed by zero-based index tuples.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual<R: Ring = GScalar> {
    entries: BTreeMap<Vec<usize>, R>,
}

impl<R: Ring> Default for Residual<R> {
    fn default() -> Self {
        Residual { entries: BTreeMap::new() }
    }
}

impl<R: Ring> Residual<R> {
    /// An identically zero residual.
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one component, dropping exact zeros.
    pub fn insert(&mut self, key: Vec<usize>, value: R) {
        if !value.is_zero() {
            self.entries.insert(key, value);
        }
    }

    /// True iff every component vanishes exactly.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Number of nonzero components.
    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    /// Nonzero components in index order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &R)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// The component at a zero-based index tuple (zero if absent).
    pub fn get(&self, key: &[usize]) -> R {
        self.entries.get(key).cloned().unwrap_or_else(R::zero)
    }
}

impl<R: Ring> fmt::Display for Residual<R> {
    /// One line per nonzero component with 1-based indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.entries {
            let idx: Vec<String> = k.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(f, "({}) = {}", idx.join(","), v)?;
        }
        Ok(())
    }
}

/// Which structural invariant an entry violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    /// `f^k_{ij} ≠ −(−1)^{|i||j|} f^k_{ji}`.
    Antisymmetry,
    /// Nonzero `f^k_{ij}` with `|i| + |j| ≢ |k|`.
    Grading,
    /// A real constant that must be pure imaginary, or vice versa.
    Reality,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::Antisymmetry => "antisymmetry",
            ViolationKind::Grading => "grading",
            ViolationKind::Reality => "reality",
        })
    }
}

/// One violated invariant at a 1-based triple `(i, j, k)` for `f^k_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// The invariant.
    pub kind: ViolationKind,
    /// 1-based `(i, j, k)`.
    pub triple: (usize, usize, usize),
    /// Human-readable detail.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "{} violation at ({i},{j},{k}): {}", self.kind, self.detail)
    }
}

/// All violations found by [`LieSuperAlgebra::validate_structure`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Violations in index order.
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True iff no invariant is violated.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Default generator names `X1, …, X{m+n}`.
pub fn default_generators(dims: GradedDims) -> Vec<String> {
    (1..=dims.total()).map(|i| format!("X{i}")).collect()
}

/// One nonzero bracket `[X_i, X_j] = Σ_k f^k_{ij} X_k` as `(i, j, [(k, f^k_{ij})])`.
pub type Bracket<R> = (usize, usize, Vec<(usize, R)>);

/// A finite-dimensional Lie superalgebra over the ring `R`.
#[derive(Clone, PartialEq)]
pub struct LieSuperAlgebra<R: Ring = GScalar> {
    name: String,
    dims: GradedDims,
    generators: Vec<String>,
    params: Vec<ParamDecl>,
    /// Dense tensor, index `(i·N + j)·N + k` holds `f^k_{ij}`.
    f: Vec<R>,
}

impl<R: Ring> LieSuperAlgebra<R> {
    /// The abelian algebra (all constants zero).
    pub fn abelian(name: &str, dims: GradedDims) -> Self {
        let n = dims.total();
        LieSuperAlgebra {
            name: name.to_string(),
            dims,
            generators: default_generators(dims),
            params: Vec::new(),
            f: vec![R::zero(); n * n * n],
        }
    }

    /// Builds an algebra from bracket data `(i, j, k, f^k_{ij})` with
    /// zero-based indices.  Each bracket may be given in either order; the
    /// partner ordering is filled in by super antisymmetry.  Contradictory
    /// data (a nonzero `[X_i, X_i]` for bosonic `X_i`, or two orderings that
    /// disagree) is rejected.
    pub fn from_brackets<I>(name: &str, dims: GradedDims, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, R)>,
    {
        let mut g = Self::abelian(name, dims);
        let mut given: BTreeMap<(usize, usize, usize), R> = BTreeMap::new();
        for (i, j, k, v) in entries {
            for idx in [i, j, k] {
                dims.check(idx)?;
            }
            if v.is_zero() {
                continue;
            }
            let entry = given.entry((i, j, k)).or_insert_with(R::zero);
            *entry = entry.add_ref(&v);
        }
        for ((i, j, k), v) in &given {
            let partner = v.signed(-dims.sign(*i, *j));
            if i == j && !dims.is_odd(*i) {
                return Err(Error::InvalidStructure(format!(
                    "bracket of bosonic generator {} with itself must vanish",
                    i + 1
                )));
            }
            if i != j {
                if let Some(w) = given.get(&(*j, *i, *k)) {
                    if *w != partner {
                        return Err(Error::InvalidStructure(format!(
                            "brackets ({},{}) and ({},{}) disagree on component {}",
                            i + 1,
                            j + 1,
                            j + 1,
                            i + 1,
                            k + 1
                        )));
                    }
                }
            }
            let (a, b) = (g.index(*i, *j, *k), g.index(*j, *i, *k));
            g.f[a] = v.clone();
            g.f[b] = partner;
        }
        Ok(g)
    }

    /// Builds an algebra from a full tensor `f[(i·N + j)·N + k] = f^k_{ij}`
    /// without any symmetrization (used for derived algebras and mutants).
    pub fn from_tensor(name: &str, dims: GradedDims, f: Vec<R>) -> Result<Self> {
        let n = dims.total();
        if f.len() != n * n * n {
            return Err(Error::DimensionMismatch(format!("tensor of length {} for dims {dims}", f.len())));
        }
        Ok(LieSuperAlgebra { name: name.to_string(), dims, generators: default_generators(dims), params: Vec::new(), f })
    }

    /// Replaces the generator names (one per basis element, bosons first).
    pub fn with_generators(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dims.total() {
            return Err(Error::DimensionMismatch(format!(
                "{} generator names for dimension {}",
                names.len(),
                self.dims.total()
            )));
        }
        self.generators = names;
        Ok(self)
    }

    /// Attaches parameter declarations.
    pub fn with_params(mut self, params: Vec<ParamDecl>) -> Self {
        self.params = params;
        self
    }

    /// Renames the algebra.
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Sets `f^k_{ij}` and its antisymmetric partner `f^k_{ji}` (zero-based).
    pub fn with_constant(mut self, i: usize, j: usize, k: usize, v: R) -> Self {
        let partner = v.signed(-self.dims.sign(i, j));
        let (a, b) = (self.index(i, j, k), self.index(j, i, k));
        self.f[b] = partner;
        self.f[a] = v;
        self
    }

    /// Sets one tensor entry only, breaking antisymmetry if `i ≠ j`.
    pub fn with_raw_constant(mut self, i: usize, j: usize, k: usize, v: R) -> Self {
        let a = self.index(i, j, k);
        self.f[a] = v;
        self
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        let n = self.dims.total();
        (i * n + j) * n + k
    }

    /// Name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Graded dimensions.
    pub fn dims(&self) -> GradedDims {
        self.dims
    }

    /// Generator names, bosons first.
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// Declared parameters.
    pub fn params(&self) -> &[ParamDecl] {
        &self.params
    }

    /// `f^k_{ij}` for zero-based indices.
    pub fn f(&self, i: usize, j: usize, k: usize) -> &R {
        &self.f[self.index(i, j, k)]
    }

    /// The raw dense tensor.
    pub fn tensor(&self) -> &[R] {
        &self.f
    }

    /// True iff every structure constant vanishes.
    pub fn is_abelian(&self) -> bool {
        self.f.iter().all(Ring::is_zero)
    }

    /// Canonical brackets: `(i, j, [(k, f^k_{ij})])` for `i ≤ j` with at
    /// least one nonzero component.
    pub fn canonical_brackets(&self) -> Vec<Bracket<R>> {
        let n = self.dims.total();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let rhs: Vec<(usize, R)> =
                    (0..n).filter(|&k| !self.f(i, j, k).is_zero()).map(|k| (k, self.f(i, j, k).clone())).collect();
                if !rhs.is_empty() {
                    out.push((i, j, rhs));
                }
            }
        }
        out
    }

    /// Checks super antisymmetry, grading compatibility and the reality rule
    /// (`f^k_{ij}` pure imaginary when `|i| = |j| = 1, |k| = 0`, real
    /// otherwise), listing every violating triple.
    pub fn validate_structure(&self) -> ValidationReport {
        let d = self.dims;
        let n = d.total();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.f(i, j, k);
                    let triple = (i + 1, j + 1, k + 1);
                    if i <= j {
                        let expected = self.f(j, i, k).signed(-d.sign(i, j));
                        if *v != expected {
                            violations.push(Violation {
                                kind: ViolationKind::Antisymmetry,
                                triple,
                                detail: format!("f = {v} but the partner ordering implies {expected}"),
                            });
                        }
                    }
                    if v.is_zero() {
                        continue;
                    }
                    if (d.parity(i) + d.parity(j)) % 2 != d.parity(k) {
                        violations.push(Violation {
                            kind: ViolationKind::Grading,
                            triple,
                            detail: format!("nonzero constant {v} between generators of incompatible parity"),
                        });
                    } else if d.is_odd(i) && d.is_odd(j) {
                        if !v.is_pure_imaginary() {
                            violations.push(Violation {
                                kind: ViolationKind::Reality,
                                triple,
                                detail: format!("fermion-fermion constant {v} must be pure imaginary"),
                            });
                        }
                    } else if !v.is_real() {
                        violations.push(Violation {
                            kind: ViolationKind::Reality,
                            triple,
                            detail: format!("constant {v} must be real"),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// The super Jacobi residual, keyed `(i, j, k, m)`:
    /// `(−1)^{|i|(|j|+|k|)} f^m_{jl} f^l_{ki} + f^m_{il} f^l_{jk}
    ///  + (−1)^{|k|(|i|+|j|)} f^m_{kl} f^l_{ij}` summed over `l`.
    pub fn super_jacobi_residual(&self) -> Residual<R> {
        let d = self.dims;
        let n = d.total();
        let mut res = Residual::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let s1 = d.sign(i, j) * d.sign(i, k);
                    let s3 = d.sign(k, i) * d.sign(k, j);
                    for m in 0..n {
                        let mut acc = R::zero();
                        for l in 0..n {
                            let a = self.f(k, i, l);
                            if !a.is_zero() {
                                acc.add_product(&self.f(j, l, m).signed(s1), a);
                            }
                            let b = self.f(j, k, l);
                            if !b.is_zero() {
                                acc.add_product(self.f(i, l, m), b);
                            }
                            let c = self.f(i, j, l);
                            if !c.is_zero() {
                                acc.add_product(&self.f(k, l, m).signed(s3), c);
                            }
                        }
                        res.insert(vec![i, j, k, m], acc);
                    }
                }
            }
        }
        res
    }

    /// True iff the super Jacobi residual vanishes identically.
    pub fn satisfies_jacobi(&self) -> bool {
        self.super_jacobi_residual().is_zero()
    }

    /// The bracket of coefficient vectors, `[u, v]^k = Σ f^k_{ij} uⁱ vʲ`
    /// (bilinear extension; callers pass homogeneous vectors for the graded
    /// symmetry properties to hold).
    pub fn bracket(&self, u: &[R], v: &[R]) -> Result<Vec<R>> {
        let n = self.dims.total();
        if u.len() != n || v.len() != n {
            return Err(Error::DimensionMismatch(format!("vectors of length {}, {} for dimension {n}", u.len(), v.len())));
        }
        let mut out = vec![R::zero(); n];
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v[j].is_zero() {
                    continue;
                }
                let uv = u[i].mul_ref(&v[j]);
                for (k, o) in out.iter_mut().enumerate() {
                    o.add_product(self.f(i, j, k), &uv);
                }
            }
        }
        Ok(out)
    }

    /// Adjoint matrices `(Yⁱ)_{jk} = −f^i_{jk}`, one per generator.
    pub fn adjoint_rep(&self) -> Vec<Vec<Vec<R>>> {
        let n = self.dims.total();
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.f(j, k, i).neg_ref()).collect()).collect()).collect()
    }

    /// Rebuilds an algebra from adjoint matrices (inverse of [`Self::adjoint_rep`]).
    pub fn from_adjoint(name: &str, dims: GradedDims, y: &[Vec<Vec<R>>]) -> Result<Self> {
        let n = dims.total();
        let mut f = vec![R::zero(); n * n * n];
        for (i, yi) in y.iter().enumerate().take(n) {
            for j in 0..n {
                for k in 0..n {
                    f[(j * n + k) * n + i] = yi[j][k].neg_ref();
                }
            }
        }
        Self::from_tensor(name, dims, f)
    }

    /// Applies a function to every constant, keeping metadata.
    pub fn map<S: Ring>(&self, mut op: impl FnMut(&R) -> Result<S>) -> Result<LieSuperAlgebra<S>> {
        Ok(LieSuperAlgebra {
            name: self.name.clone(),
            dims: self.dims,
            generators: self.generators.clone(),
            params: self.params.clone(),
            f: self.f.iter().map(&mut op).collect::<Result<_>>()?,
        })
    }
}

impl LieSuperAlgebra<GScalar> {
    /// Embeds a concrete algebra into the polynomial ring.
    pub fn to_poly(&self) -> LieSuperAlgebra<MultiPoly> {
        self.map(|c| Ok(MultiPoly::constant(c.clone()))).expect("infallible")
    }
}

impl LieSuperAlgebra<MultiPoly> {
    /// True iff some constant depends on a parameter.
    pub fn is_parametric(&self) -> bool {
        self.f.iter().any(|c| !c.is_constant())
    }

    /// Evaluates every parameter at a rational point after checking the
    /// declared ranges; the result has no parameters.
    pub fn specialize(&self, a: &Assignment) -> Result<LieSuperAlgebra<GScalar>> {
        check_assignment(&self.params, a)?;
        let mut g = self.specialize_at(&to_point(a))?;
        g.params.clear();
        Ok(g)
    }

    /// Evaluates at arbitrary scalar values without range checks (every
    /// occurring variable must be assigned).
    pub fn specialize_at(&self, point: &BTreeMap<String, GScalar>) -> Result<LieSuperAlgebra<GScalar>> {
        let mut g = self.map(|c| c.eval(point))?;
        g.params.retain(|p| !point.contains_key(&p.name));
        Ok(g)
    }

    /// Concrete algebra when no constant depends on a parameter.
    pub fn to_concrete(&self) -> Option<LieSuperAlgebra<GScalar>> {
        self.map(|c| c.constant_value().ok_or(Error::Unsupported(String::new()))).ok()
    }
}

impl<R: Ring> fmt::Debug for LieSuperAlgebra<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.name, self.dims)?;
        for (i, j, rhs) in self.canonical_brackets() {
            let terms: Vec<String> = rhs.iter().map(|(k, c)| format!("({c}){}", self.generators[*k])).collect();
            write!(f, "; [{},{}] = {}", self.generators[i], self.generators[j], terms.join(" + "))?;
        }
        Ok(())
    }
}
