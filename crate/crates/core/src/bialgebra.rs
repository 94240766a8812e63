//! Dual structures, the mixed super Jacobi identity, the cocommutator and
//! the Drinfel'd double.
//!
//! A dual structure on `g` is a second bracket on the dual basis,
//! `[X̃^i, X̃^j] = f̃^{ij}_k X̃^k`.  It is stored as an ordinary
//! [`LieSuperAlgebra`] over the basis `X̃` (with `f̃^{ij}_k` in the slot of
//! `f^k_{ij}`), so every algebra operation applies to duals unchanged.  The
//! parity of `X̃^i` equals that of `X_i`.
//!
//! Conventions fixed here:
//! * cocommutator `δ(X_i) = (−1)^{|j||k|} f̃^{jk}_i X_j ⊗ X_k`, with
//!   `(1 ⊗ ad_X)(a ⊗ b) = (−1)^{|X||a|} a ⊗ [X, b]`;
//! * double mixed bracket
//!   `[X_i, X̃^j] = (−1)^{|j|} f̃^{jk}_i X_k + (−1)^{|i|} f^j_{ki} X̃^k`;
//! * double basis ordered bosons first: bosonic `X`, bosonic `X̃`,
//!   fermionic `X`, fermionic `X̃`, so the double is again in standard form;
//! * pairing `⟨X̃^j, X_i⟩ = δ^j_i`, `⟨X_i, X̃^j⟩ = (−1)^{|i|} δ^j_i`, zero on
//!   `X⊗X` and `X̃⊗X̃`; ad-invariance means `⟨[a,b],c⟩ = ⟨a,[b,c]⟩`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::params::{Assignment, ParamDecl};
use crate::poly::MultiPoly;
use crate::ring::Ring;
use crate::scalar::GScalar;
use crate::superalgebra::{LieSuperAlgebra, Residual};
use crate::supermatrix::SuperMatrix;

/// Dual structure constants `f̃^{ij}_k` over the same graded space as `g`.
#[derive(Clone, PartialEq, Debug)]
pub struct DualStructure<R: Ring = GScalar> {
    alg: LieSuperAlgebra<R>,
}

impl<R: Ring> DualStructure<R> {
    /// The zero dual (abelian `g̃`).
    pub fn zero(dims: GradedDims) -> Self {
        DualStructure { alg: LieSuperAlgebra::abelian("0", dims) }
    }

    /// Builds a dual from components `(i, j, k, f̃^{ij}_k)` (zero-based);
    /// the partner ordering is filled in by super antisymmetry.
    pub fn from_components<I>(name: &str, dims: GradedDims, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, R)>,
    {
        Ok(DualStructure { alg: LieSuperAlgebra::from_brackets(name, dims, entries)? })
    }

    /// Reads an algebra's constants as a dual structure: `f̃^{ij}_k := f^k_{ij}`.
    pub fn from_algebra(alg: LieSuperAlgebra<R>) -> Self {
        DualStructure { alg }
    }

    /// `f̃^{ij}_k` for zero-based indices.
    pub fn ft(&self, i: usize, j: usize, k: usize) -> &R {
        self.alg.f(i, j, k)
    }

    /// Graded dimensions.
    pub fn dims(&self) -> GradedDims {
        self.alg.dims()
    }

    /// Label.
    pub fn name(&self) -> &str {
        self.alg.name()
    }

    /// Declared parameters.
    pub fn params(&self) -> &[ParamDecl] {
        self.alg.params()
    }

    /// The dual bracket as a standard algebra on the basis `X̃`.
    pub fn dual_algebra(&self) -> &LieSuperAlgebra<R> {
        &self.alg
    }

    /// Consumes the dual, returning its algebra.
    pub fn into_algebra(self) -> LieSuperAlgebra<R> {
        self.alg
    }

    /// True iff every dual constant vanishes.
    pub fn is_zero(&self) -> bool {
        self.alg.is_abelian()
    }

    /// The cocommutator `δ(X_i)` as a map `(j, k) → (−1)^{|j||k|} f̃^{jk}_i`.
    pub fn cocommutator(&self, i: usize) -> Result<BTreeMap<(usize, usize), R>> {
        let d = self.dims();
        d.check(i)?;
        let n = d.total();
        let mut out = BTreeMap::new();
        for j in 0..n {
            for k in 0..n {
                let v = self.ft(j, k, i);
                if !v.is_zero() {
                    out.insert((j, k), v.signed(d.sign(j, k)));
                }
            }
        }
        Ok(out)
    }

    /// Applies a function to every constant.
    pub fn map<S: Ring>(&self, op: impl FnMut(&R) -> Result<S>) -> Result<DualStructure<S>> {
        Ok(DualStructure { alg: self.alg.map(op)? })
    }
}

impl DualStructure<GScalar> {
    /// Embeds into the polynomial ring.
    pub fn to_poly(&self) -> DualStructure<MultiPoly> {
        DualStructure { alg: self.alg.to_poly() }
    }
}

impl DualStructure<MultiPoly> {
    /// Evaluates the parameters after range checks.
    pub fn specialize(&self, a: &Assignment) -> Result<DualStructure<GScalar>> {
        Ok(DualStructure { alg: self.alg.specialize(a)? })
    }

    /// Evaluates at arbitrary scalar values without range checks.
    pub fn specialize_at(&self, point: &BTreeMap<String, GScalar>) -> Result<DualStructure<GScalar>> {
        Ok(DualStructure { alg: self.alg.specialize_at(point)? })
    }
}

fn check_dims<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<()> {
    if g.dims() != d.dims() {
        return Err(Error::DimensionMismatch(format!("algebra {} vs dual {}", g.dims(), d.dims())));
    }
    Ok(())
}

/// The mixed super Jacobi residual, keyed `(i, j, k, l)`:
/// `f^m_{jk} f̃^{il}_m − f^i_{mk} f̃^{ml}_j − f^l_{jm} f̃^{im}_k
///  − (−1)^{|j||l|} f^i_{jm} f̃^{ml}_k − (−1)^{|i||k|} f^l_{mk} f̃^{im}_j`
/// summed over `m`.
pub fn mixed_jacobi_residual<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<Residual<R>> {
    check_dims(g, d)?;
    let dims = g.dims();
    let n = dims.total();
    let mut res = Residual::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let s_jl = dims.sign(j, l);
                    let s_ik = dims.sign(i, k);
                    let mut acc = R::zero();
                    for m in 0..n {
                        acc.add_product(g.f(j, k, m), d.ft(i, l, m));
                        acc.add_product(&g.f(m, k, i).neg_ref(), d.ft(m, l, j));
                        acc.add_product(&g.f(j, m, l).neg_ref(), d.ft(i, m, k));
                        acc.add_product(&g.f(j, m, i).signed(-s_jl), d.ft(m, l, k));
                        acc.add_product(&g.f(m, k, l).signed(-s_ik), d.ft(i, m, j));
                    }
                    res.insert(vec![i, j, k, l], acc);
                }
            }
        }
    }
    Ok(res)
}

/// `(ad_x ⊗ 1 + 1 ⊗ ad_x) t` for a two-tensor `t`.
fn ad_both<R: Ring>(
    g: &LieSuperAlgebra<R>,
    x: usize,
    t: &BTreeMap<(usize, usize), R>,
) -> BTreeMap<(usize, usize), R> {
    let dims = g.dims();
    let n = dims.total();
    let mut out: BTreeMap<(usize, usize), R> = BTreeMap::new();
    for ((j, k), v) in t {
        for l in 0..n {
            let a = g.f(x, *j, l);
            if !a.is_zero() {
                out.entry((l, *k)).or_insert_with(R::zero).add_product(a, v);
            }
            let b = g.f(x, *k, l);
            if !b.is_zero() {
                out.entry((*j, l)).or_insert_with(R::zero).add_product(&b.signed(dims.sign(x, *j)), v);
            }
        }
    }
    out
}

/// The one-cocycle residual keyed `(a, b, j, k)`:
/// `δ([X_a, X_b]) − (ad_a⊗1 + 1⊗ad_a) δ(X_b) + (−1)^{|a||b|} (ad_b⊗1 + 1⊗ad_b) δ(X_a)`.
pub fn cocycle_residual<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<Residual<R>> {
    check_dims(g, d)?;
    let dims = g.dims();
    let n = dims.total();
    let deltas: Vec<BTreeMap<(usize, usize), R>> = (0..n).map(|i| d.cocommutator(i)).collect::<Result<_>>()?;
    let mut res = Residual::new();
    for a in 0..n {
        for b in 0..n {
            let mut acc: BTreeMap<(usize, usize), R> = BTreeMap::new();
            for k in 0..n {
                let c = g.f(a, b, k);
                if c.is_zero() {
                    continue;
                }
                for (key, v) in &deltas[k] {
                    acc.entry(*key).or_insert_with(R::zero).add_product(c, v);
                }
            }
            for (key, v) in ad_both(g, a, &deltas[b]) {
                let e = acc.entry(key).or_insert_with(R::zero);
                *e = e.sub_ref(&v);
            }
            let s = dims.sign(a, b);
            for (key, v) in ad_both(g, b, &deltas[a]) {
                let e = acc.entry(key).or_insert_with(R::zero);
                *e = e.add_ref(&v.signed(s));
            }
            for ((j, k), v) in acc {
                res.insert(vec![a, b, j, k], v);
            }
        }
    }
    Ok(res)
}

/// True iff `(g, d)` is a Lie super-bialgebra: `g`, `g̃` satisfy super
/// Jacobi and the mixed residual vanishes.
pub fn is_bialgebra<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<bool> {
    Ok(g.satisfies_jacobi() && d.dual_algebra().satisfies_jacobi() && mixed_jacobi_residual(g, d)?.is_zero())
}

/// The Drinfel'd double `g ⊕ g̃` with its canonical pairing.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra<R: Ring = GScalar> {
    algebra: LieSuperAlgebra<R>,
    pairing: Vec<Vec<GScalar>>,
    x_pos: Vec<usize>,
    xt_pos: Vec<usize>,
    flagged: bool,
}

impl<R: Ring> DoubleAlgebra<R> {
    /// The double as a `(2m|2n)` algebra.
    pub fn algebra(&self) -> &LieSuperAlgebra<R> {
        &self.algebra
    }

    /// The pairing matrix on the double basis.
    pub fn pairing(&self) -> &[Vec<GScalar>] {
        &self.pairing
    }

    /// Position of `X_i` in the double basis.
    pub fn x_position(&self, i: usize) -> usize {
        self.x_pos[i]
    }

    /// Position of `X̃^i` in the double basis.
    pub fn xt_position(&self, i: usize) -> usize {
        self.xt_pos[i]
    }

    /// True iff the inputs were not a bialgebra (the double is then built
    /// only for diagnostics).
    pub fn is_flagged(&self) -> bool {
        self.flagged
    }

    /// Replaces the algebra while keeping basis and pairing (used to
    /// exercise the checks on deliberately corrupted doubles).
    pub fn with_algebra(mut self, algebra: LieSuperAlgebra<R>) -> Result<Self> {
        if algebra.dims() != self.algebra.dims() {
            return Err(Error::DimensionMismatch("replacement double algebra".to_string()));
        }
        self.algebra = algebra;
        Ok(self)
    }

    /// Isotropy of `g` and `g̃` and duality `⟨X̃^j, X_i⟩ = δ^j_i`.
    pub fn pairing_is_canonical(&self) -> bool {
        let n = self.x_pos.len();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let delta = if i == j { GScalar::one() } else { GScalar::zero() };
                self.pairing[self.x_pos[i]][self.x_pos[j]].is_zero()
                    && self.pairing[self.xt_pos[i]][self.xt_pos[j]].is_zero()
                    && self.pairing[self.xt_pos[j]][self.x_pos[i]] == delta
            })
        })
    }
}

/// Builds the double of `(g, d)`.  The double is always constructed; it is
/// flagged when `(g, d)` fails the bialgebra identities.
pub fn build_double<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<DoubleAlgebra<R>> {
    check_dims(g, d)?;
    let dims = g.dims();
    let (m, n) = (dims.m, dims.n);
    let total = dims.total();
    let mut x_pos = vec![0; total];
    let mut xt_pos = vec![0; total];
    for i in 0..m {
        x_pos[i] = i;
        xt_pos[i] = m + i;
    }
    for i in m..total {
        x_pos[i] = m + i;
        xt_pos[i] = m + i + n;
    }
    let dd = dims.doubled();
    let big = dd.total();
    let mut f = vec![R::zero(); big * big * big];
    let at = |i: usize, j: usize, k: usize| (i * big + j) * big + k;
    for i in 0..total {
        for j in 0..total {
            for k in 0..total {
                f[at(x_pos[i], x_pos[j], x_pos[k])] = g.f(i, j, k).clone();
                f[at(xt_pos[i], xt_pos[j], xt_pos[k])] = d.ft(i, j, k).clone();
            }
        }
    }
    for i in 0..total {
        for j in 0..total {
            let (a, b) = (x_pos[i], xt_pos[j]);
            let swap = -dims.sign(i, j);
            for k in 0..total {
                let v = d.ft(j, k, i).signed(dims.sign1(j));
                if !v.is_zero() {
                    f[at(b, a, x_pos[k])] = v.signed(swap);
                    f[at(a, b, x_pos[k])] = v;
                }
                let w = g.f(k, i, j).signed(dims.sign1(i));
                if !w.is_zero() {
                    f[at(b, a, xt_pos[k])] = w.signed(swap);
                    f[at(a, b, xt_pos[k])] = w;
                }
            }
        }
    }
    let mut names = vec![String::new(); big];
    for i in 0..total {
        names[x_pos[i]] = g.generators()[i].clone();
        names[xt_pos[i]] = format!("{}t", g.generators()[i]);
    }
    let mut params = g.params().to_vec();
    for p in d.params() {
        if !params.iter().any(|q| q.name == p.name) {
            params.push(p.clone());
        }
    }
    let algebra = LieSuperAlgebra::from_tensor(&format!("D({},{})", g.name(), d.name()), dd, f)?
        .with_generators(names)?
        .with_params(params);
    let mut pairing = vec![vec![GScalar::zero(); big]; big];
    for i in 0..total {
        pairing[xt_pos[i]][x_pos[i]] = GScalar::one();
        pairing[x_pos[i]][xt_pos[i]] = GScalar::from_int(i64::from(dims.sign1(i)));
    }
    let flagged = !is_bialgebra(g, d)?;
    Ok(DoubleAlgebra { algebra, pairing, x_pos, xt_pos, flagged })
}

/// Ad-invariance residual `⟨[a,b],c⟩ − ⟨a,[b,c]⟩` keyed `(a, b, c)`.
pub fn pairing_ad_invariance<R: Ring>(dbl: &DoubleAlgebra<R>) -> Residual<R> {
    let g = &dbl.algebra;
    let n = g.dims().total();
    let mut res = Residual::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let mut acc = R::zero();
                for k in 0..n {
                    let p = &dbl.pairing[k][c];
                    if !p.is_zero() {
                        acc = acc.add_ref(&g.f(a, b, k).scale(p));
                    }
                    let q = &dbl.pairing[a][k];
                    if !q.is_zero() {
                        acc = acc.sub_ref(&g.f(b, c, k).scale(q));
                    }
                }
                res.insert(vec![a, b, c], acc);
            }
        }
    }
    res
}

type Matrix<R> = Vec<Vec<R>>;

fn mat_mul<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let n = a.len();
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut acc = R::zero();
                    for k in 0..n {
                        acc.add_product(&a[r][k], &b[k][c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn mat_axpy<R: Ring>(acc: &mut Matrix<R>, s: &R, x: &Matrix<R>) {
    if s.is_zero() {
        return;
    }
    for (ar, xr) in acc.iter_mut().zip(x) {
        for (a, v) in ar.iter_mut().zip(xr) {
            a.add_product(s, v);
        }
    }
}

fn mat_is_zero<R: Ring>(a: &Matrix<R>) -> bool {
    a.iter().flatten().all(Ring::is_zero)
}

/// Result of [`matrix_identity_crosscheck`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    /// Tensor-form dual super Jacobi residual vanishes.
    pub tensor_dual_zero: bool,
    /// Tensor-form mixed residual vanishes.
    pub tensor_mixed_zero: bool,
    /// Matrix-form dual identity vanishes.
    pub matrix_dual_zero: bool,
    /// Matrix-form mixed identity vanishes.
    pub matrix_mixed_zero: bool,
}

impl CrosscheckReport {
    /// True iff each matrix form vanishes exactly when its tensor form does.
    pub fn agrees(&self) -> bool {
        self.tensor_dual_zero == self.matrix_dual_zero && self.tensor_mixed_zero == self.matrix_mixed_zero
    }
}

/// Dual adjoint matrices `(X̃^i)_{jk} = −f̃^{ij}_k`.
pub fn dual_adjoint<R: Ring>(d: &DualStructure<R>) -> Vec<Matrix<R>> {
    let n = d.dims().total();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| d.ft(i, j, k).neg_ref()).collect()).collect()).collect()
}

/// Evaluates the matrix forms of the dual and mixed identities on the
/// adjoint matrices `Yⁱ` and `X̃ⁱ` and compares them with the tensor forms.
///
/// Dual form: `Σ_k (X̃ⁱ)_{jk} X̃^k − X̃ʲ X̃ⁱ + (−1)^{|i||j|} X̃ⁱ X̃ʲ = 0`.
/// Mixed form, with `T(M) = P·st(M)·P` the graded transpose conjugated by
/// the grading operator `P`:
/// `Σ_l (X̃ⁱ)_{jl} Y^l + T(X̃ʲ) Yⁱ − Yʲ X̃ⁱ + (−1)^{|i||j|} Yⁱ X̃ʲ
///  − (−1)^{|i||j|} T(X̃ⁱ) Yʲ = 0`.
pub fn matrix_identity_crosscheck<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<CrosscheckReport> {
    check_dims(g, d)?;
    let dims = g.dims();
    let n = dims.total();
    let y = g.adjoint_rep();
    let xt = dual_adjoint(d);
    let p = SuperMatrix::<R>::parity_operator(dims);
    let t: Vec<Matrix<R>> = xt
        .iter()
        .map(|x| {
            let sm = SuperMatrix::new(dims, x.clone()).expect("square");
            let r = p.mul(&sm.supertranspose()).and_then(|a| a.mul(&p)).expect("same dims");
            r.rows().to_vec()
        })
        .collect();
    let mut matrix_dual_zero = true;
    let mut matrix_mixed_zero = true;
    for i in 0..n {
        for j in 0..n {
            let s = R::one().signed(dims.sign(i, j));
            let mut e14 = vec![vec![R::zero(); n]; n];
            for k in 0..n {
                mat_axpy(&mut e14, &xt[i][j][k], &xt[k]);
            }
            mat_axpy(&mut e14, &R::one().neg_ref(), &mat_mul(&xt[j], &xt[i]));
            mat_axpy(&mut e14, &s, &mat_mul(&xt[i], &xt[j]));
            matrix_dual_zero &= mat_is_zero(&e14);

            let mut e15 = vec![vec![R::zero(); n]; n];
            for l in 0..n {
                mat_axpy(&mut e15, &xt[i][j][l], &y[l]);
            }
            mat_axpy(&mut e15, &R::one(), &mat_mul(&t[j], &y[i]));
            mat_axpy(&mut e15, &R::one().neg_ref(), &mat_mul(&y[j], &xt[i]));
            mat_axpy(&mut e15, &s, &mat_mul(&y[i], &xt[j]));
            mat_axpy(&mut e15, &s.neg_ref(), &mat_mul(&t[i], &y[j]));
            matrix_mixed_zero &= mat_is_zero(&e15);
        }
    }
    Ok(CrosscheckReport {
        tensor_dual_zero: d.dual_algebra().satisfies_jacobi(),
        tensor_mixed_zero: mixed_jacobi_residual(g, d)?.is_zero(),
        matrix_dual_zero,
        matrix_mixed_zero,
    })
}

/// All residuals of a pair, as computed by the catalog certifier.
#[derive(Clone, Debug)]
pub struct PairResiduals<R: Ring = GScalar> {
    /// Super Jacobi of `g`.
    pub primal_jacobi: Residual<R>,
    /// Super Jacobi of `g̃`.
    pub dual_jacobi: Residual<R>,
    /// Mixed super Jacobi.
    pub mixed: Residual<R>,
    /// Super Jacobi of the double.
    pub double_jacobi: Residual<R>,
    /// Ad-invariance of the pairing.
    pub ad_invariance: Residual<R>,
}

impl<R: Ring> PairResiduals<R> {
    /// `(check name, residual)` in a fixed order.
    pub fn named(&self) -> [(&'static str, &Residual<R>); 5] {
        [
            ("primal_jacobi", &self.primal_jacobi),
            ("dual_jacobi", &self.dual_jacobi),
            ("mixed_jacobi", &self.mixed),
            ("double_jacobi", &self.double_jacobi),
            ("pairing_ad_invariance", &self.ad_invariance),
        ]
    }

    /// True iff every residual vanishes.
    pub fn all_zero(&self) -> bool {
        self.named().iter().all(|(_, r)| r.is_zero())
    }
}

/// Computes every residual of the pair `(g, d)`.
pub fn pair_residuals<R: Ring>(g: &LieSuperAlgebra<R>, d: &DualStructure<R>) -> Result<PairResiduals<R>> {
    let dbl = build_double(g, d)?;
    Ok(PairResiduals {
        primal_jacobi: g.super_jacobi_residual(),
        dual_jacobi: d.dual_algebra().super_jacobi_residual(),
        mixed: mixed_jacobi_residual(g, d)?,
        double_jacobi: dbl.algebra().super_jacobi_residual(),
        ad_invariance: pairing_ad_invariance(&dbl),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d11() -> GradedDims {
        GradedDims::new(1, 1).unwrap()
    }

    fn algebra_b() -> LieSuperAlgebra {
        LieSuperAlgebra::from_brackets("B", d11(), [(0, 1, 1, GScalar::one())]).unwrap()
    }

    fn dual_a11a(c: GScalar) -> DualStructure {
        DualStructure::from_components("d", d11(), [(1, 1, 0, c)]).unwrap()
    }

    #[test]
    fn b_with_a11a_dual_is_a_bialgebra() {
        let g = algebra_b();
        let d = dual_a11a(GScalar::i());
        assert!(mixed_jacobi_residual(&g, &d).unwrap().is_zero());
        assert!(cocycle_residual(&g, &d).unwrap().is_zero());
        let dbl = build_double(&g, &d).unwrap();
        assert!(!dbl.is_flagged());
        assert!(dbl.algebra().satisfies_jacobi());
        assert!(pairing_ad_invariance(&dbl).is_zero());
        assert!(dbl.pairing_is_canonical());
        assert!(matrix_identity_crosscheck(&g, &d).unwrap().agrees());
    }

    #[test]
    fn forced_component_fails_mixed_identity() {
        let g = algebra_b();
        let d = DualStructure::from_components("d", d11(), [(0, 1, 1, GScalar::one())]).unwrap();
        assert!(!mixed_jacobi_residual(&g, &d).unwrap().is_zero());
        assert!(!cocycle_residual(&g, &d).unwrap().is_zero());
        let x = matrix_identity_crosscheck(&g, &d).unwrap();
        assert!(!x.tensor_mixed_zero && x.agrees());
        assert!(build_double(&g, &d).unwrap().is_flagged());
    }

    #[test]
    fn cocommutator_sign() {
        let d = dual_a11a(GScalar::i());
        let delta = d.cocommutator(0).unwrap();
        assert_eq!(delta.get(&(1, 1)), Some(&-GScalar::i()));
        assert!(DualStructure::<GScalar>::zero(d11()).cocommutator(0).unwrap().is_empty());
    }

    #[test]
    fn zero_dual_double_is_semidirect() {
        let g = algebra_b();
        let d = DualStructure::zero(d11());
        let dbl = build_double(&g, &d).unwrap();
        assert!(dbl.algebra().satisfies_jacobi());
        assert!(pairing_ad_invariance(&dbl).is_zero());
        let (a, b) = (dbl.xt_position(0), dbl.xt_position(1));
        let n = dbl.algebra().dims().total();
        assert!((0..n).all(|k| dbl.algebra().f(a, b, k).is_zero()));
    }

    #[test]
    fn flipped_cross_bracket_breaks_invariance() {
        let g = algebra_b();
        let d = dual_a11a(GScalar::i());
        let dbl = build_double(&g, &d).unwrap();
        let mut alg = dbl.algebra().clone();
        let n = alg.dims().total();
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = (dbl.x_position(i), dbl.xt_position(j));
                for k in 0..n {
                    let v = alg.f(a, b, k).neg_ref();
                    alg = alg.with_constant(a, b, k, v);
                }
            }
        }
        let bad = dbl.with_algebra(alg).unwrap();
        assert!(!pairing_ad_invariance(&bad).is_zero());
    }
}
