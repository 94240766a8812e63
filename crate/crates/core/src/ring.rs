//! The coefficient-ring abstraction behind every tensor computation.
//!
//! Structure constants are either concrete ([`GScalar`]) or polynomials in
//! named real parameters ([`MultiPoly`]).  All residual computations are
//! written once against [`Ring`] so that a parametric algebra can be checked
//! symbolically (the residual must be the zero polynomial) or at sampled
//! rational points with the same code.

use std::fmt;

use crate::poly::MultiPoly;
use crate::scalar::GScalar;

/// A commutative ring containing ℚ(i), with structural zero test.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Additive identity.
    fn zero() -> Self;
    /// Multiplicative identity.
    fn one() -> Self;
    /// Exact zero test.
    fn is_zero(&self) -> bool;
    /// `self + rhs`.
    fn add_ref(&self, rhs: &Self) -> Self;
    /// `self − rhs`.
    fn sub_ref(&self, rhs: &Self) -> Self;
    /// `self · rhs`.
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// `−self`.
    fn neg_ref(&self) -> Self;
    /// Embeds a scalar.
    fn from_scalar(s: GScalar) -> Self;
    /// `self · s`.
    fn scale(&self, s: &GScalar) -> Self;
    /// True iff every coefficient is real (parameters are real).
    fn is_real(&self) -> bool;
    /// True iff every coefficient is pure imaginary.
    fn is_pure_imaginary(&self) -> bool;
    /// The value as a scalar when it does not depend on any parameter.
    fn as_scalar(&self) -> Option<GScalar>;
    /// Number of nonzero terms (1 for a nonzero scalar); a size measure.
    fn term_count(&self) -> usize;

    /// `self · (±1)`.
    fn signed(&self, sign: i32) -> Self {
        if sign < 0 {
            self.neg_ref()
        } else {
            self.clone()
        }
    }

    /// `self += a · b`, skipping work when either factor is zero.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.add_ref(&a.mul_ref(b));
        }
    }
}

impl Ring for GScalar {
    fn zero() -> Self {
        GScalar::zero()
    }
    fn one() -> Self {
        GScalar::one()
    }
    fn is_zero(&self) -> bool {
        GScalar::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: GScalar) -> Self {
        s
    }
    fn scale(&self, s: &GScalar) -> Self {
        self * s
    }
    fn is_real(&self) -> bool {
        GScalar::is_real(self)
    }
    fn is_pure_imaginary(&self) -> bool {
        GScalar::is_pure_imaginary(self)
    }
    fn as_scalar(&self) -> Option<GScalar> {
        Some(self.clone())
    }
    fn term_count(&self) -> usize {
        usize::from(!self.is_zero())
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += &(a * b);
        }
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn from_scalar(s: GScalar) -> Self {
        MultiPoly::constant(s)
    }
    fn scale(&self, s: &GScalar) -> Self {
        MultiPoly::scale(self, s)
    }
    fn is_real(&self) -> bool {
        self.coefficients().all(GScalar::is_real)
    }
    fn is_pure_imaginary(&self) -> bool {
        self.coefficients().all(GScalar::is_pure_imaginary)
    }
    fn as_scalar(&self) -> Option<GScalar> {
        self.constant_value()
    }
    fn term_count(&self) -> usize {
        self.len()
    }
}
