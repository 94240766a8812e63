//! Small dense exact linear algebra.
//!
//! Two kernels: ordinary Gaussian elimination over the field ℚ(i) (rank,
//! reduced row echelon form, nullspace, inverse, determinant, solving), and
//! fraction-free Bareiss elimination over polynomial entries, whose pivots
//! are minors of the input and therefore expose the parameter values at
//! which the rank drops.

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::GScalar;

/// A dense row-major matrix of scalars.
pub type Mat = Vec<Vec<GScalar>>;

/// `n × n` identity.
pub fn identity(n: usize) -> Mat {
    (0..n).map(|r| (0..n).map(|c| if r == c { GScalar::one() } else { GScalar::zero() }).collect()).collect()
}

/// Matrix product; panics on shape mismatch (callers check shapes).
pub fn matmul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "matmul shape mismatch");
            (0..cols)
                .map(|c| {
                    let mut acc = GScalar::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][c].is_zero() {
                            acc += &(x * &b[k][c]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for j in c..cols {
                    if !a[r][j].is_zero() {
                        let t = &factor * &a[r][j];
                        a[i][j] -= &t;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rank over ℚ(i).
pub fn rank(m: &Mat) -> usize {
    rref(m).1.len()
}

/// Nullspace basis; each vector is normalized so its first nonzero
/// coordinate is 1.
pub fn nullspace(m: &Mat, cols: usize) -> Vec<Vec<GScalar>> {
    let (r, pivots) = rref(m);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![GScalar::zero(); cols];
        v[free] = GScalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&r[row][free];
        }
        basis.push(normalize_first(v));
    }
    basis
}

/// Scales a vector so that its first nonzero coordinate equals 1.
pub fn normalize_first(v: Vec<GScalar>) -> Vec<GScalar> {
    match v.iter().find(|x| !x.is_zero()) {
        None => v,
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|x| x * &inv).collect()
        }
    }
}

/// Determinant of a square matrix (1 for the empty matrix).
pub fn det(m: &Mat) -> GScalar {
    let n = m.len();
    let mut a = m.clone();
    let mut d = GScalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return GScalar::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d = &d * &a[c][c];
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let factor = &a[i][c] * &inv;
            for j in c..n {
                let t = &factor * &a[c][j];
                a[i][j] -= &t;
            }
        }
    }
    d
}

/// Inverse by Gauss–Jordan elimination.
pub fn inverse(m: &Mat) -> Result<Mat> {
    let n = m.len();
    let aug: Mat = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular(format!("{n}x{n} matrix has rank < {n}")));
    }
    Ok(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// One solution of `a · x = b`, or `None` if inconsistent.
pub fn solve(a: &Mat, b: &[GScalar]) -> Option<Vec<GScalar>> {
    let cols = a.first().map_or(0, Vec::len);
    let aug: Mat = a.iter().zip(b).map(|(row, bi)| row.iter().cloned().chain([bi.clone()]).collect()).collect();
    let (r, pivots) = rref(&aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![GScalar::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[row][cols].clone();
    }
    Some(x)
}

/// Result of fraction-free elimination over polynomial entries.
#[derive(Clone, Debug)]
pub struct PolyEchelon {
    /// Row echelon form (the first `pivots.len()` rows are the pivot rows).
    pub rows: Vec<Vec<MultiPoly>>,
    /// Pivot column of each pivot row.
    pub pivots: Vec<usize>,
    /// The last pivot: a nonzero minor of maximal order, whose zeros contain
    /// every parameter value at which the rank drops.
    pub last_pivot: MultiPoly,
}

/// Bareiss fraction-free elimination: every division is exact and every
/// pivot is a minor of the input matrix.
pub fn bareiss(m: &[Vec<MultiPoly>], cols: usize) -> Result<PolyEchelon> {
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let rows = a.len();
    let mut prev = MultiPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Prefer the simplest nonzero pivot for smaller intermediate terms.
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| (a[i][c].degree(), a[i][c].len(), i))
        else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Unsupported("inexact Bareiss division".to_string()))?;
            }
            a[i][c] = MultiPoly::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Ok(PolyEchelon { rows: a, pivots, last_pivot: prev })
}
