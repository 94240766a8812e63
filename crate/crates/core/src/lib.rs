//! Exact computations with Lie superalgebras and Lie super-bialgebras.
//!
//! The crate represents finite-dimensional Lie superalgebras by their
//! structure constants over the Gaussian rationals ℚ(i) (or over polynomials
//! in named real parameters), and provides:
//!
//! * super Jacobi and mixed super Jacobi residuals, the cocommutator and its
//!   one-cocycle condition, and the Drinfel'd double with its canonical
//!   pairing ([`superalgebra`], [`bialgebra`]);
//! * an exact solver for all dual structures compatible with a given algebra
//!   ([`solver`]);
//! * DeWitt supermatrix calculus and basis transports for automorphisms,
//!   isomorphisms and bialgebra equivalence ([`supermatrix`], [`morphism`]);
//! * a data-driven catalog of the two- and three-dimensional Lie
//!   super-bialgebras with a batch certifier ([`catalog`]);
//! * a small definition language and a command-line front end
//!   ([`parser`], [`cli`]).
//!
//! Every check is exact: a residual passes only when it is identically zero.

// Index loops mirror the tensor formulas they implement.
#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod grading;
pub mod linalg;
pub mod morphism;
pub mod params;
pub mod parser;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod solver;
pub mod superalgebra;
pub mod supermatrix;

pub use bialgebra::{build_double, mixed_jacobi_residual, DoubleAlgebra, DualStructure};
pub use error::{Error, ParseError, Result, ScalarError};
pub use grading::{parity_sign, GradedDims};
pub use params::{Assignment, ParamDecl, ParamRange};
pub use poly::{Monomial, MultiPoly};
pub use ring::Ring;
pub use scalar::GScalar;
pub use superalgebra::{LieSuperAlgebra, Residual, ValidationReport};
pub use supermatrix::SuperMatrix;
