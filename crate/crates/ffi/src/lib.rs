//! C ABI for the `superlie` toolkit.
//!
//! Objects cross the boundary as opaque handles ([`SlAlgebra`],
//! [`SlMatrix`]) created by `*_parse` / `*_from_catalog` functions and
//! released with the matching `*_free`.  Every function returns an
//! [`SlStatus`]; results come back through out-pointers.  Strings returned
//! to the caller are owned by the caller and released with
//! [`sl_string_free`].  After a failure, [`sl_last_error_message`] describes
//! it.  Panics never cross the boundary: they are caught and reported as
//! [`SlStatus::Panic`].
//!
//! The header `include/superlie.h` is generated by the build script.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use superlie::bialgebra::{pair_residuals, DualStructure};
use superlie::catalog::verify::verify_catalog;
use superlie::catalog::Catalog;
use superlie::morphism::verify_isomorphism;
use superlie::parser::{eval_matrix, format_algebra, parse_algebras, parse_expr_matrix, parse_signed_rational};
use superlie::solver::solve_duals;
use superlie::{Assignment, Error, GScalar, GradedDims, LieSuperAlgebra, MultiPoly, SuperMatrix};

/// Status codes returned by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Input text could not be parsed.
    ParseError = 3,
    /// Unknown catalog id.
    UnknownId = 4,
    /// Dimensions of the arguments do not match.
    DimensionMismatch = 5,
    /// A matrix is singular.
    Singular = 6,
    /// The superdeterminant is undefined (both diagonal blocks singular).
    SdetUndefined = 7,
    /// A parameter value is missing or out of range.
    ParameterError = 8,
    /// Any other invalid input.
    InvalidArgument = 9,
    /// An internal panic was caught.
    Panic = 10,
}

/// An algebra (possibly depending on parameters).
pub struct SlAlgebra {
    inner: LieSuperAlgebra<MultiPoly>,
}

/// A square supermatrix with Gaussian-rational entries.
pub struct SlMatrix {
    inner: SuperMatrix<GScalar>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::Parse(_) | Error::Scalar(_) => SlStatus::ParseError,
        Error::UnknownId(_) => SlStatus::UnknownId,
        Error::DimensionMismatch(_) | Error::IndexOutOfRange { .. } | Error::EmptyAlgebra => SlStatus::DimensionMismatch,
        Error::Singular(_) => SlStatus::Singular,
        Error::SdetUndefined => SlStatus::SdetUndefined,
        Error::MissingParameter(_) | Error::ParameterOutOfRange { .. } | Error::ConstraintViolated(_) => {
            SlStatus::ParameterError
        }
        _ => SlStatus::InvalidArgument,
    }
}

type FfiResult<T> = Result<T, (SlStatus, String)>;

fn lift<T>(r: superlie::Result<T>) -> FfiResult<T> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

/// Runs `f`, converting errors and panics to a status and recording the
/// message.
fn guard(f: impl FnOnce() -> FfiResult<()>) -> SlStatus {
    let (status, msg) = match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => (SlStatus::Ok, String::new()),
        Ok(Err(e)) => e,
        Err(_) => (SlStatus::Panic, "internal panic".to_string()),
    };
    set_error(&msg);
    status
}

/// # Safety
/// `p` must be null or a valid NUL-terminated string.
unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err((SlStatus::NullPointer, format!("`{what}` is null")));
    }
    // SAFETY: non-null and NUL-terminated per the caller's contract.
    unsafe { CStr::from_ptr(p) }.to_str().map_err(|_| (SlStatus::InvalidUtf8, format!("`{what}` is not UTF-8")))
}

/// # Safety
/// `p` must be null or point to a live handle.
unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    // SAFETY: the caller guarantees the pointer is null or valid.
    unsafe { p.as_ref() }.ok_or_else(|| (SlStatus::NullPointer, format!("`{what}` is null")))
}

fn out_check<T>(p: *mut T, what: &str) -> FfiResult<()> {
    if p.is_null() {
        Err((SlStatus::NullPointer, format!("`{what}` is null")))
    } else {
        Ok(())
    }
}

fn new_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).map_or(ptr::null_mut(), CString::into_raw)
}

fn concrete(g: &LieSuperAlgebra<MultiPoly>) -> FfiResult<LieSuperAlgebra<GScalar>> {
    g.to_concrete().ok_or_else(|| {
        (SlStatus::ParameterError, format!("algebra `{}` has unfixed parameters (use sl_algebra_specialize)", g.name()))
    })
}

/// Parses a definition text holding exactly one algebra.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_parse(text: *const c_char, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let text = unsafe { str_arg(text, "text") }?;
        let mut v = lift(parse_algebras(text))?;
        if v.len() != 1 {
            return Err((SlStatus::ParseError, format!("expected exactly one algebra, found {}", v.len())));
        }
        let h = Box::new(SlAlgebra { inner: v.remove(0) });
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(h) };
        Ok(())
    })
}

/// Loads an algebra from the built-in catalog, e.g. `"C4"` or `"I(1,2)"`.
///
/// # Safety
/// `id` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_from_catalog(id: *const c_char, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let id = unsafe { str_arg(id, "id") }?;
        let cat = lift(Catalog::builtin())?;
        let g = lift(cat.algebra(id))?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(SlAlgebra { inner: g })) };
        Ok(())
    })
}

/// Fixes every parameter, e.g. `"p=1/2"` or `"p=-1, k=2"`, returning a
/// new handle.  Values are checked against the declared ranges.
///
/// # Safety
/// `alg` must be a live handle, `assignments` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_specialize(
    alg: *const SlAlgebra,
    assignments: *const c_char,
    out: *mut *mut SlAlgebra,
) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let g = &unsafe { ref_arg(alg, "alg") }?.inner;
        let text = unsafe { str_arg(assignments, "assignments") }?;
        let mut a = Assignment::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| (SlStatus::ParseError, format!("`{part}`: expected name=value")))?;
            a.insert(k.trim().to_string(), lift(parse_signed_rational(v.trim()))?);
        }
        let c = lift(g.specialize(&a))?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(SlAlgebra { inner: c.to_poly() })) };
        Ok(())
    })
}

/// Releases an algebra handle (null is ignored).
///
/// # Safety
/// `alg` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_free(alg: *mut SlAlgebra) {
    if !alg.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(alg) });
    }
}

/// Graded dimensions `(m|n)`.
///
/// # Safety
/// `alg` must be a live handle; `m` and `n` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_dims(alg: *const SlAlgebra, m: *mut usize, n: *mut usize) -> SlStatus {
    guard(|| {
        out_check(m, "m")?;
        out_check(n, "n")?;
        let d = unsafe { ref_arg(alg, "alg") }?.inner.dims();
        // SAFETY: checked non-null above.
        unsafe {
            *m = d.m;
            *n = d.n;
        }
        Ok(())
    })
}

/// Number of nonzero components of the super Jacobi residual (checked
/// symbolically in any remaining parameters).
///
/// # Safety
/// `alg` must be a live handle; `count` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_jacobi_nonzero(alg: *const SlAlgebra, count: *mut usize) -> SlStatus {
    guard(|| {
        out_check(count, "count")?;
        let g = &unsafe { ref_arg(alg, "alg") }?.inner;
        // SAFETY: checked non-null above.
        unsafe { *count = g.super_jacobi_residual().nonzero_count() };
        Ok(())
    })
}

/// Canonical definition text of an algebra (free with [`sl_string_free`]).
///
/// # Safety
/// `alg` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_to_string(alg: *const SlAlgebra, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let g = &unsafe { ref_arg(alg, "alg") }?.inner;
        // SAFETY: checked non-null above.
        unsafe { *out = new_string(format_algebra(g)) };
        Ok(())
    })
}

/// Describes every dual compatible with `alg` (free with
/// [`sl_string_free`]).
///
/// # Safety
/// `alg` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_solve_duals(alg: *const SlAlgebra, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let g = &unsafe { ref_arg(alg, "alg") }?.inner;
        let fam = lift(solve_duals(g))?;
        // SAFETY: checked non-null above.
        unsafe { *out = new_string(fam.to_string()) };
        Ok(())
    })
}

/// Residuals of the pair `(alg, dual)`, where `dual` holds the dual
/// brackets over the same generators.  Writes five nonzero counts in the
/// order: primal Jacobi, dual Jacobi, mixed Jacobi, double Jacobi, pairing
/// ad-invariance.
///
/// # Safety
/// `alg` and `dual` must be live handles; `counts` must point to 5 writable
/// `size_t` values.
#[no_mangle]
pub unsafe extern "C" fn sl_pair_residual_nonzero(
    alg: *const SlAlgebra,
    dual: *const SlAlgebra,
    counts: *mut usize,
) -> SlStatus {
    guard(|| {
        out_check(counts, "counts")?;
        let g = &unsafe { ref_arg(alg, "alg") }?.inner;
        let d = DualStructure::from_algebra(unsafe { ref_arg(dual, "dual") }?.inner.clone());
        let r = lift(pair_residuals(g, &d))?;
        for (slot, (_, res)) in r.named().iter().enumerate() {
            // SAFETY: the caller provides 5 slots.
            unsafe { *counts.add(slot) = res.nonzero_count() };
        }
        Ok(())
    })
}

/// Parses a matrix literal such as `"[1, 0; 0, 2i]"` with graded
/// dimensions `(m|n)`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_matrix_parse(text: *const c_char, m: usize, n: usize, out: *mut *mut SlMatrix) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let text = unsafe { str_arg(text, "text") }?;
        let dims = lift(GradedDims::new(m, n))?;
        let rows = lift(parse_expr_matrix(text).and_then(|e| eval_matrix(&e, &Default::default())))?;
        let mat = lift(SuperMatrix::new(dims, rows))?;
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(SlMatrix { inner: mat })) };
        Ok(())
    })
}

/// Superdeterminant as exact text, e.g. `"1/2"` (free with
/// [`sl_string_free`]).
///
/// # Safety
/// `mat` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_matrix_sdet(mat: *const SlMatrix, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        out_check(out, "out")?;
        let m = &unsafe { ref_arg(mat, "mat") }?.inner;
        let v = lift(m.sdet())?;
        // SAFETY: checked non-null above.
        unsafe { *out = new_string(v.to_string()) };
        Ok(())
    })
}

/// Releases a matrix handle (null is ignored).
///
/// # Safety
/// `mat` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sl_matrix_free(mat: *mut SlMatrix) {
    if !mat.is_null() {
        // SAFETY: created by Box::into_raw in this crate.
        drop(unsafe { Box::from_raw(mat) });
    }
}

/// Releases a string returned by this library (null is ignored).
///
/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: created by CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Checks `T(src, C) = dst` and that `C` is a transformation matrix (and,
/// with `dual_side`, that `C^{-st}` is one too).  Writes the verdict to
/// `ok`; a failed check is not an error.
///
/// # Safety
/// Handles must be live; `ok` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_verify_isomorphism(
    src: *const SlAlgebra,
    dst: *const SlAlgebra,
    mat: *const SlMatrix,
    dual_side: bool,
    ok: *mut bool,
) -> SlStatus {
    guard(|| {
        out_check(ok, "ok")?;
        let s = concrete(&unsafe { ref_arg(src, "src") }?.inner)?;
        let t = concrete(&unsafe { ref_arg(dst, "dst") }?.inner)?;
        let m = &unsafe { ref_arg(mat, "mat") }?.inner;
        let r = lift(verify_isomorphism(&s, &t, m, dual_side))?;
        // SAFETY: checked non-null above.
        unsafe { *ok = r.ok() };
        Ok(())
    })
}

/// Certifies the built-in catalog; writes the number of passing entries
/// and the total.
///
/// # Safety
/// `passed` and `total` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn sl_catalog_verify(passed: *mut usize, total: *mut usize) -> SlStatus {
    guard(|| {
        out_check(passed, "passed")?;
        out_check(total, "total")?;
        let cat = lift(Catalog::builtin())?;
        let r = lift(verify_catalog(&cat, None))?;
        // SAFETY: checked non-null above.
        unsafe {
            *passed = r.passed();
            *total = r.entries.len();
        }
        Ok(())
    })
}

/// Message describing the last failure on this thread (empty after a
/// success).  The pointer stays valid until the next call on this thread;
/// do not free it.
#[no_mangle]
pub extern "C" fn sl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static, NUL-terminated name of a status code.
#[no_mangle]
pub extern "C" fn sl_status_name(status: SlStatus) -> *const c_char {
    let s: &'static CStr = match status {
        SlStatus::Ok => c"ok",
        SlStatus::NullPointer => c"null pointer",
        SlStatus::InvalidUtf8 => c"invalid UTF-8",
        SlStatus::ParseError => c"parse error",
        SlStatus::UnknownId => c"unknown id",
        SlStatus::DimensionMismatch => c"dimension mismatch",
        SlStatus::Singular => c"singular matrix",
        SlStatus::SdetUndefined => c"superdeterminant undefined",
        SlStatus::ParameterError => c"parameter error",
        SlStatus::InvalidArgument => c"invalid argument",
        SlStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}
