//! DeWitt supermatrices: supertranspose, superdeterminant, superinverse and
//! the transformation-matrix test.
//!
//! A supermatrix over graded dimensions `(m|n)` is one dense grid split into
//! blocks
//!
//! ```text
//!     ( A | C )      A: m×m  boson–boson      C: m×n  boson–fermion
//! M = (---+---)
//!     ( D | B )      D: n×m  fermion–boson    B: n×n  fermion–fermion
//! ```
//!
//! Conventions fixed here and used everywhere:
//! * supertranspose `st(M) = [[Aᵗ, Dᵗ], [−Cᵗ, Bᵗ]]`, which has period 4;
//! * the graded (tensor) transpose `Mᵀ_{rc} = (−1)^{|r||c|} M_{cr}` equals
//!   `P · st(M)` with `P = diag((−1)^{|k|})` (see [`graded_transpose`]);
//! * `sdet M = det(A − C B⁻¹ D) / det B` when `det B ≠ 0`, otherwise
//!   `det A / det(B − D A⁻¹ C)`.
//!
//! Entries are ordinary c-numbers.  For block-triangular matrices (C = 0 or
//! D = 0) the two superdeterminant formulas coincide and `sdet` is
//! multiplicative; with both odd blocks nonzero they generally disagree,
//! because the odd entries do not anticommute.

use std::fmt;

use crate::error::{Error, Result};
use crate::grading::GradedDims;
use crate::linalg::{self, Mat};
use crate::ring::Ring;
use crate::scalar::GScalar;

/// A block matrix over graded dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperMatrix<R: Ring = GScalar> {
    dims: GradedDims,
    rows: Vec<Vec<R>>,
}

impl<R: Ring> SuperMatrix<R> {
    /// Builds a matrix, checking that the grid is `(m+n) × (m+n)`.
    pub fn new(dims: GradedDims, rows: Vec<Vec<R>>) -> Result<Self> {
        let n = dims.total();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "expected a {n}x{n} grid for dims {dims}, got {} rows",
                rows.len()
            )));
        }
        Ok(SuperMatrix { dims, rows })
    }

    /// The identity.
    pub fn identity(dims: GradedDims) -> Self {
        let n = dims.total();
        let rows = (0..n).map(|r| (0..n).map(|c| if r == c { R::one() } else { R::zero() }).collect()).collect();
        SuperMatrix { dims, rows }
    }

    /// `P = diag((−1)^{|k|})`, the grading operator.
    pub fn parity_operator(dims: GradedDims) -> Self {
        let n = dims.total();
        let rows = (0..n)
            .map(|r| (0..n).map(|c| if r == c { R::one().signed(dims.sign1(r)) } else { R::zero() }).collect())
            .collect();
        SuperMatrix { dims, rows }
    }

    /// Graded dimensions.
    pub fn dims(&self) -> GradedDims {
        self.dims
    }

    /// Entry at zero-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.rows[r][c]
    }

    /// Replaces one entry.
    pub fn set(&mut self, r: usize, c: usize, v: R) {
        self.rows[r][c] = v;
    }

    /// Row-major grid.
    pub fn rows(&self) -> &[Vec<R>] {
        &self.rows
    }

    /// Applies a function to every entry.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SuperMatrix<S> {
        SuperMatrix { dims: self.dims, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    /// Matrix product.
    pub fn mul(&self, other: &SuperMatrix<R>) -> Result<SuperMatrix<R>> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dims, other.dims)));
        }
        let n = self.dims.total();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut acc = R::zero();
                        for k in 0..n {
                            acc.add_product(&self.rows[r][k], &other.rows[k][c]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(SuperMatrix { dims: self.dims, rows })
    }

    /// Entrywise sum.
    pub fn add(&self, other: &SuperMatrix<R>) -> Result<SuperMatrix<R>> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.dims, other.dims)));
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add_ref(y)).collect())
            .collect();
        Ok(SuperMatrix { dims: self.dims, rows })
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &SuperMatrix<R>) -> Result<SuperMatrix<R>> {
        self.add(&other.scale(&GScalar::from_int(-1)))
    }

    /// Multiplies every entry by a scalar.
    pub fn scale(&self, s: &GScalar) -> SuperMatrix<R> {
        self.map(|x| x.scale(s))
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Ring::is_zero)
    }

    /// Supertranspose `[[Aᵗ, Dᵗ], [−Cᵗ, Bᵗ]]`: entry `(r, c)` is `M_{cr}`,
    /// negated when `r` is fermionic and `c` bosonic.
    pub fn supertranspose(&self) -> SuperMatrix<R> {
        let n = self.dims.total();
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let v = &self.rows[c][r];
                        if self.dims.is_odd(r) && !self.dims.is_odd(c) {
                            v.neg_ref()
                        } else {
                            v.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        SuperMatrix { dims: self.dims, rows }
    }

    /// Inverse of the supertranspose, `st³`.
    pub fn supertranspose_inverse(&self) -> SuperMatrix<R> {
        self.supertranspose().supertranspose().supertranspose()
    }

    /// Ordinary transpose.
    pub fn transpose(&self) -> SuperMatrix<R> {
        let n = self.dims.total();
        let rows = (0..n).map(|r| (0..n).map(|c| self.rows[c][r].clone()).collect()).collect();
        SuperMatrix { dims: self.dims, rows }
    }

    /// True iff both odd blocks vanish (the matrix preserves parity).
    pub fn is_even(&self) -> bool {
        let n = self.dims.total();
        (0..n).all(|r| (0..n).all(|c| self.dims.is_odd(r) == self.dims.is_odd(c) || self.rows[r][c].is_zero()))
    }

    /// Extracts the block with the given row/column parities
    /// (`(false,false)` = A, `(false,true)` = C, `(true,false)` = D, `(true,true)` = B).
    pub fn block(&self, odd_rows: bool, odd_cols: bool) -> Vec<Vec<R>> {
        let n = self.dims.total();
        (0..n)
            .filter(|&r| self.dims.is_odd(r) == odd_rows)
            .map(|r| (0..n).filter(|&c| self.dims.is_odd(c) == odd_cols).map(|c| self.rows[r][c].clone()).collect())
            .collect()
    }
}

/// The graded transpose `Mᵀ_{rc} = (−1)^{|r||c|} M_{cr}`, equal to `P · st(M)`.
pub fn graded_transpose<R: Ring>(m: &SuperMatrix<R>) -> SuperMatrix<R> {
    let d = m.dims();
    let n = d.total();
    let rows = (0..n).map(|r| (0..n).map(|c| m.get(c, r).signed(d.sign(r, c))).collect()).collect();
    SuperMatrix { dims: d, rows }
}

/// Diagnostics from [`SuperMatrix::is_transformation_matrix`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformationCheck {
    /// True iff every constraint holds.
    pub ok: bool,
    /// One message per violated constraint.
    pub violations: Vec<String>,
}

fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

impl SuperMatrix<GScalar> {
    /// Parses the literal syntax `[1,0; 0,2]` (rows separated by `;`,
    /// entries by `,`, scalars in the scalar syntax).
    pub fn parse_literal(dims: GradedDims, text: &str) -> Result<Self> {
        SuperMatrix::new(dims, parse_matrix_rows(text)?)
    }

    /// Ordinary determinant.
    pub fn det(&self) -> GScalar {
        linalg::det(&self.rows)
    }

    /// Ordinary inverse by Gaussian elimination.
    pub fn inverse(&self) -> Result<SuperMatrix<GScalar>> {
        Ok(SuperMatrix { dims: self.dims, rows: linalg::inverse(&self.rows)? })
    }

    /// `det(A − C B⁻¹ D) / det B`, or `None` when `det B = 0`.
    pub fn sdet_schur_b(&self) -> Option<GScalar> {
        let (a, c, d, b) = self.blocks();
        let det_b = linalg::det(&b);
        if det_b.is_zero() {
            return None;
        }
        let b_inv = linalg::inverse(&b).ok()?;
        let s = mat_sub(&a, &linalg::matmul(&linalg::matmul(&c, &b_inv), &d));
        linalg::det(&s).checked_div(&det_b).ok()
    }

    /// `det A / det(B − D A⁻¹ C)`, or `None` when `det A = 0` or the
    /// complement is singular.
    pub fn sdet_schur_a(&self) -> Option<GScalar> {
        let (a, c, d, b) = self.blocks();
        let det_a = linalg::det(&a);
        if det_a.is_zero() {
            return None;
        }
        let a_inv = linalg::inverse(&a).ok()?;
        let s = mat_sub(&b, &linalg::matmul(&linalg::matmul(&d, &a_inv), &c));
        det_a.checked_div(&linalg::det(&s)).ok()
    }

    /// Superdeterminant: the `det B ≠ 0` formula when it applies, otherwise
    /// the `det A ≠ 0` formula.
    pub fn sdet(&self) -> Result<GScalar> {
        self.sdet_schur_b().or_else(|| self.sdet_schur_a()).ok_or(Error::SdetUndefined)
    }

    /// Superinverse by the block formula (valid when `det A ≠ 0` and
    /// `det B ≠ 0`), falling back to ordinary elimination otherwise.
    pub fn superinverse(&self) -> Result<SuperMatrix<GScalar>> {
        match self.block_inverse() {
            Some(m) => Ok(m),
            None => self.inverse(),
        }
    }

    /// The block inverse formula alone; `None` outside its regime.
    pub fn block_inverse(&self) -> Option<SuperMatrix<GScalar>> {
        let (a, c, d, b) = self.blocks();
        let (m, n) = (self.dims.m, self.dims.n);
        let a_inv = if m > 0 { linalg::inverse(&a).ok()? } else { Vec::new() };
        let b_inv = if n > 0 { linalg::inverse(&b).ok()? } else { Vec::new() };
        let one_m = linalg::identity(m);
        let one_n = linalg::identity(n);
        let prod = |x: &Mat, y: &Mat| -> Mat {
            if x.is_empty() || y.is_empty() || y[0].is_empty() {
                vec![vec![GScalar::zero(); y.first().map_or(0, Vec::len)]; x.len()]
            } else {
                linalg::matmul(x, y)
            }
        };
        // (1 − A⁻¹ C B⁻¹ D)⁻¹ and (1 − B⁻¹ D A⁻¹ C)⁻¹
        let s_a = if m > 0 {
            linalg::inverse(&mat_sub(&one_m, &prod(&prod(&prod(&a_inv, &c), &b_inv), &d))).ok()?
        } else {
            Vec::new()
        };
        let s_b = if n > 0 {
            linalg::inverse(&mat_sub(&one_n, &prod(&prod(&prod(&b_inv, &d), &a_inv), &c))).ok()?
        } else {
            Vec::new()
        };
        let top_left = prod(&s_a, &a_inv);
        let top_right: Mat = prod(&prod(&prod(&s_a, &a_inv), &c), &b_inv).iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let bottom_left: Mat = prod(&prod(&prod(&s_b, &b_inv), &d), &a_inv).iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        let bottom_right = prod(&s_b, &b_inv);
        let total = m + n;
        let mut rows = vec![vec![GScalar::zero(); total]; total];
        for r in 0..m {
            for cc in 0..m {
                rows[r][cc] = top_left[r][cc].clone();
            }
            for cc in 0..n {
                rows[r][m + cc] = top_right[r][cc].clone();
            }
        }
        for r in 0..n {
            for cc in 0..m {
                rows[m + r][cc] = bottom_left[r][cc].clone();
            }
            for cc in 0..n {
                rows[m + r][m + cc] = bottom_right[r][cc].clone();
            }
        }
        Some(SuperMatrix { dims: self.dims, rows })
    }

    /// `A^{−st}`: the superinverse of the supertranspose.
    pub fn inverse_supertranspose(&self) -> Result<SuperMatrix<GScalar>> {
        self.supertranspose().superinverse()
    }

    /// Checks the transformation-matrix pattern: A, B, C real, D pure
    /// imaginary, and `sdet` defined and nonzero.
    pub fn is_transformation_matrix(&self) -> TransformationCheck {
        let mut violations = Vec::new();
        let n = self.dims.total();
        for r in 0..n {
            for c in 0..n {
                let v = &self.rows[r][c];
                let (odd_r, odd_c) = (self.dims.is_odd(r), self.dims.is_odd(c));
                let block = match (odd_r, odd_c) {
                    (false, false) => "A",
                    (false, true) => "C",
                    (true, false) => "D",
                    (true, true) => "B",
                };
                if odd_r && !odd_c {
                    if !v.is_pure_imaginary() {
                        violations.push(format!("D not pure imaginary at ({},{}) = {v}", r + 1, c + 1));
                    }
                } else if !v.is_real() {
                    violations.push(format!("{block} not real at ({},{}) = {v}", r + 1, c + 1));
                }
            }
        }
        match self.sdet() {
            Ok(s) if s.is_zero() => violations.push("sdet = 0".to_string()),
            Ok(_) => {}
            Err(_) => violations.push("sdet undefined (det A = det B = 0)".to_string()),
        }
        TransformationCheck { ok: violations.is_empty(), violations }
    }

    fn blocks(&self) -> (Mat, Mat, Mat, Mat) {
        (self.block(false, false), self.block(false, true), self.block(true, false), self.block(true, true))
    }
}

/// Parses `[r11,r12; r21,r22]` into rows of scalars (no shape check).
pub fn parse_matrix_rows(text: &str) -> Result<Vec<Vec<GScalar>>> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::InvalidStructure(format!("matrix literal must be bracketed: `{text}`")))?;
    let rows: Vec<Vec<GScalar>> = inner
        .split(';')
        .map(|row| row.split(',').map(|e| e.trim().parse::<GScalar>().map_err(Error::from)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidStructure(format!("ragged matrix literal `{text}`")));
    }
    Ok(rows)
}

impl<R: Ring> fmt::Display for SuperMatrix<R> {
    /// The literal syntax, e.g. `[1,0; 0,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl<R: Ring> fmt::Debug for SuperMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.dims, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: usize, n: usize) -> GradedDims {
        GradedDims::new(m, n).unwrap()
    }

    fn lit(dims: GradedDims, t: &str) -> SuperMatrix {
        SuperMatrix::parse_literal(dims, t).unwrap()
    }

    #[test]
    fn supertranspose_block_rule() {
        let m = lit(d(1, 1), "[2,3; 5i,7]");
        assert_eq!(m.supertranspose(), lit(d(1, 1), "[2,5i; -3,7]"));
        assert_eq!(m.supertranspose().supertranspose(), lit(d(1, 1), "[2,-3; -5i,7]"));
        let st4 = m.supertranspose().supertranspose().supertranspose().supertranspose();
        assert_eq!(st4, m);
    }

    #[test]
    fn supertranspose_of_block_diagonal_is_blockwise_transpose() {
        let m = lit(d(2, 1), "[1,2,0; 3,4,0; 0,0,5]");
        assert_eq!(m.supertranspose(), m.transpose());
    }

    #[test]
    fn graded_transpose_is_parity_times_st() {
        let m = lit(d(1, 2), "[1,2,3; 4i,5,6; 7i,8,9]");
        let p = SuperMatrix::<GScalar>::parity_operator(d(1, 2));
        assert_eq!(graded_transpose(&m), p.mul(&m.supertranspose()).unwrap());
    }

    #[test]
    fn sdet_examples() {
        assert_eq!(SuperMatrix::<GScalar>::identity(d(2, 1)).sdet().unwrap(), GScalar::one());
        assert_eq!(lit(d(1, 1), "[2,0; 0,3]").sdet().unwrap(), GScalar::from_ratio(2, 3));
        let m = lit(d(1, 1), "[1,1; i,1]");
        // det B ≠ 0 formula applies and gives 1 − i; the det A formula gives
        // 1/(1 − i): the c-number odd blocks make the two disagree.
        assert_eq!(m.sdet().unwrap(), "1-i".parse().unwrap());
        assert_eq!(m.sdet_schur_a().unwrap(), "1/2+i/2".parse().unwrap());
    }

    #[test]
    fn sdet_undefined_when_both_blocks_singular() {
        let m = lit(d(1, 1), "[0,1; i,0]");
        assert_eq!(m.sdet(), Err(Error::SdetUndefined));
    }

    #[test]
    fn superinverse_matches_elimination() {
        let m = lit(d(1, 1), "[1,1; i,1]");
        let s = m.superinverse().unwrap();
        assert_eq!(m.mul(&s).unwrap(), SuperMatrix::identity(d(1, 1)));
        assert_eq!(s, m.inverse().unwrap());
        let bd = lit(d(1, 2), "[2,0,0; 0,1,1; 0,0,3]");
        assert_eq!(bd.block_inverse().unwrap(), bd.inverse().unwrap());
    }

    #[test]
    fn transformation_pattern() {
        assert!(SuperMatrix::<GScalar>::identity(d(1, 2)).is_transformation_matrix().ok);
        assert!(lit(d(1, 2), "[1,0,0; 0,2,0; 0,3,2]").is_transformation_matrix().ok);
        let bad = lit(d(1, 1), "[1,0; 1,1]").is_transformation_matrix();
        assert!(!bad.ok);
        assert!(bad.violations[0].starts_with("D not pure imaginary"));
        assert!(!lit(d(1, 1), "[1,0; 0,0]").is_transformation_matrix().ok);
    }

    #[test]
    fn literal_errors() {
        assert!(SuperMatrix::parse_literal(d(1, 1), "[1,0; 0]").is_err());
        assert!(SuperMatrix::parse_literal(d(1, 1), "1,0; 0,1").is_err());
        assert!(SuperMatrix::parse_literal(d(2, 1), "[1,0; 0,1]").is_err());
    }
}
