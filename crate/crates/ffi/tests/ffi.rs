//! Exercises the C ABI from Rust, and from C when a compiler is available.

use std::ffi::{CStr, CString};
use std::ptr;

use superlie_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sl_last_error_message()) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { sl_string_free(p) };
    s
}

#[test]
fn catalog_algebra_dims_and_jacobi() {
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sl_algebra_from_catalog(c("C4").as_ptr(), &mut g) }, SlStatus::Ok);
    let (mut m, mut n, mut cnt) = (0, 0, 99);
    assert_eq!(unsafe { sl_algebra_dims(g, &mut m, &mut n) }, SlStatus::Ok);
    assert_eq!((m, n), (1, 2));
    assert_eq!(unsafe { sl_algebra_jacobi_nonzero(g, &mut cnt) }, SlStatus::Ok);
    assert_eq!(cnt, 0);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { sl_algebra_solve_duals(g, &mut text) }, SlStatus::Ok);
    assert!(take_string(text).contains("3 free parameter"));
    unsafe { sl_algebra_free(g) };
}

#[test]
fn parse_errors_are_reported() {
    let mut g = ptr::null_mut();
    let bad = c("algebra Bad { bosons: X1; fermions: X2; [X1,X1] = X2; }");
    assert_eq!(unsafe { sl_algebra_parse(bad.as_ptr(), &mut g) }, SlStatus::ParseError);
    assert!(g.is_null());
    assert!(last_error().starts_with("1:41:"), "{}", last_error());
    assert_eq!(unsafe { sl_algebra_from_catalog(c("nope").as_ptr(), &mut g) }, SlStatus::UnknownId);
    assert_eq!(unsafe { sl_algebra_parse(ptr::null(), &mut g) }, SlStatus::NullPointer);
}

#[test]
fn pair_and_isomorphism() {
    let (mut b, mut d, mut a) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { sl_algebra_from_catalog(c("B").as_ptr(), &mut b) }, SlStatus::Ok);
    assert_eq!(unsafe { sl_algebra_parse(c("algebra d { bosons: X1; fermions: X2; {X2,X2} = 4i*X1; }").as_ptr(), &mut d) }, SlStatus::Ok);
    assert_eq!(unsafe { sl_algebra_from_catalog(c("(A11+A)").as_ptr(), &mut a) }, SlStatus::Ok);
    let mut counts = [9usize; 5];
    assert_eq!(unsafe { sl_pair_residual_nonzero(b, d, counts.as_mut_ptr()) }, SlStatus::Ok);
    assert_eq!(counts, [0; 5]);

    // (A11+A) rescaled by diag(4, 1): {X2,X2} = i X1 becomes 4i X1'.
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { sl_matrix_parse(c("[1/4, 0; 0, 1]").as_ptr(), 1, 1, &mut m) }, SlStatus::Ok);
    let mut ok = false;
    assert_eq!(unsafe { sl_verify_isomorphism(a, d, m, false, &mut ok) }, SlStatus::Ok);
    assert!(ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sl_matrix_sdet(m, &mut s) }, SlStatus::Ok);
    assert_eq!(take_string(s), "1/4");
    unsafe {
        sl_matrix_free(m);
        sl_algebra_free(a);
        sl_algebra_free(d);
        sl_algebra_free(b);
    }
}

#[test]
fn specialization_checks_ranges() {
    let (mut g, mut h) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { sl_algebra_from_catalog(c("C1_p").as_ptr(), &mut g) }, SlStatus::Ok);
    assert_eq!(unsafe { sl_algebra_specialize(g, c("p=0").as_ptr(), &mut h) }, SlStatus::ParameterError);
    assert_eq!(unsafe { sl_algebra_specialize(g, c("p=1/2").as_ptr(), &mut h) }, SlStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sl_algebra_to_string(h, &mut s) }, SlStatus::Ok);
    assert!(take_string(s).contains("[X1,X3] = 1/2*X3;"));
    unsafe {
        sl_algebra_free(h);
        sl_algebra_free(g);
    }
}

#[test]
fn sdet_undefined_and_catalog() {
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { sl_matrix_parse(c("[0, 1; 1, 0]").as_ptr(), 1, 1, &mut m) }, SlStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { sl_matrix_sdet(m, &mut s) }, SlStatus::SdetUndefined);
    unsafe { sl_matrix_free(m) };
    let (mut passed, mut total) = (0, 0);
    assert_eq!(unsafe { sl_catalog_verify(&mut passed, &mut total) }, SlStatus::Ok);
    assert_eq!((passed, total), (48, 48));
    let name = unsafe { CStr::from_ptr(sl_status_name(SlStatus::SdetUndefined)) };
    assert_eq!(name.to_str().unwrap(), "superdeterminant undefined");
}

/// Compiles a C program against the generated header and the static
/// library and runs it.
#[test]
fn c_program_links_and_runs() {
    let manifest = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header_dir = manifest.join("include");
    assert!(header_dir.join("superlie.h").is_file(), "header not generated");
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap();
    let lib = profile_dir.join("libsuperlie_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if std::process::Command::new(&cc).arg("--version").output().is_err() || !lib.is_file() {
        eprintln!("skipping: no C compiler or static library at {}", lib.display());
        return;
    }
    let dir = std::env::temp_dir().join(format!("superlie-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "superlie.h"
int main(void) {
    SlAlgebra *g = NULL;
    if (sl_algebra_from_catalog("C1_p", &g) != SL_STATUS_OK) return 1;
    size_t m = 0, n = 0, cnt = 1;
    if (sl_algebra_dims(g, &m, &n) != SL_STATUS_OK || m != 2 || n != 1) return 2;
    if (sl_algebra_jacobi_nonzero(g, &cnt) != SL_STATUS_OK || cnt != 0) return 3;
    sl_algebra_free(g);
    SlMatrix *a = NULL;
    if (sl_matrix_parse("[2, 0; 0, 4]", 1, 1, &a) != SL_STATUS_OK) return 4;
    char *s = NULL;
    if (sl_matrix_sdet(a, &s) != SL_STATUS_OK) return 5;
    printf("%s\n", s);
    sl_string_free(s);
    sl_matrix_free(a);
    if (sl_algebra_parse("algebra X {", &g) != SL_STATUS_PARSE_ERROR) return 6;
    printf("%s\n", sl_last_error_message());
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.join("smoke");
    let out = std::process::Command::new(&cc)
        .arg(&src)
        .arg(format!("-I{}", header_dir.display()))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let run = std::process::Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let stdout = String::from_utf8_lossy(&run.stdout);
    assert!(stdout.starts_with("1/2\n"), "{stdout}");
    let _ = std::fs::remove_dir_all(&dir);
}
