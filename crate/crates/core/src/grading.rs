//! Graded dimensions and the parity signs `(−1)^{|i||j|}`.
//!
//! Generators are indexed from 0 internally and printed 1-based.  The
//! standard basis lists the `m` bosons first, then the `n` fermions, so the
//! parity of an index is determined by the dimensions alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::GScalar;

/// The graded dimension `(m|n)`: `m` bosonic then `n` fermionic generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedDims {
    /// Number of bosonic (even) generators.
    pub m: usize,
    /// Number of fermionic (odd) generators.
    pub n: usize,
}

impl GradedDims {
    /// Validated constructor: rejects `m + n = 0`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m + n == 0 {
            return Err(Error::EmptyAlgebra);
        }
        Ok(GradedDims { m, n })
    }

    /// Total dimension `m + n`.
    pub fn total(&self) -> usize {
        self.m + self.n
    }

    /// Parity of the zero-based index `i`: 0 for bosons, 1 for fermions.
    pub fn parity(&self, i: usize) -> u8 {
        u8::from(i >= self.m)
    }

    /// True iff the zero-based index is fermionic.
    pub fn is_odd(&self, i: usize) -> bool {
        i >= self.m
    }

    /// `(−1)^{|i||j|}` as an integer for zero-based indices.
    pub fn sign(&self, i: usize, j: usize) -> i32 {
        if self.is_odd(i) && self.is_odd(j) {
            -1
        } else {
            1
        }
    }

    /// `(−1)^{|i|}` as an integer.
    pub fn sign1(&self, i: usize) -> i32 {
        if self.is_odd(i) {
            -1
        } else {
            1
        }
    }

    /// Checks a zero-based index against the dimension.
    pub fn check(&self, i: usize) -> Result<()> {
        if i < self.total() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i + 1, dim: self.total() })
        }
    }

    /// The dimensions of the Drinfel'd double, `(2m|2n)`.
    pub fn doubled(&self) -> GradedDims {
        GradedDims { m: 2 * self.m, n: 2 * self.n }
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// `(−1)^{|i||j|}` for 1-based indices `i`, `j`, as an exact scalar.
pub fn parity_sign(i: usize, j: usize, dims: GradedDims) -> Result<GScalar> {
    for idx in [i, j] {
        if idx == 0 || idx > dims.total() {
            return Err(Error::IndexOutOfRange { index: idx, dim: dims.total() });
        }
    }
    Ok(GScalar::from_int(i64::from(dims.sign(i - 1, j - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_sign_examples() {
        let d12 = GradedDims::new(1, 2).unwrap();
        assert_eq!(parity_sign(2, 3, d12).unwrap(), GScalar::from_int(-1));
        assert_eq!(parity_sign(1, 3, d12).unwrap(), GScalar::one());
        let d21 = GradedDims::new(2, 1).unwrap();
        assert_eq!(parity_sign(1, 2, d21).unwrap(), GScalar::one());
    }

    #[test]
    fn parity_sign_rejects_bad_indices() {
        let d = GradedDims::new(1, 1).unwrap();
        assert!(parity_sign(0, 1, d).is_err());
        assert!(parity_sign(1, 3, d).is_err());
    }

    #[test]
    fn empty_dims_rejected() {
        assert_eq!(GradedDims::new(0, 0), Err(Error::EmptyAlgebra));
    }
}
