use std::ffi::{c_char, CStr, CString};
use std::ptr;

use theta_hecke_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { th_string_free(s) };
    out
}

fn last_error() -> String {
    let p = th_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

fn algebra(m: usize) -> *mut ThAlgebra {
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { th_algebra_new(m, &mut alg) }, ThStatus::Ok);
    alg
}

#[test]
fn eval_round_trip() {
    let alg = algebra(2);
    assert_eq!(unsafe { th_algebra_rank(alg) }, 2);
    let expr = CString::new("T[2]*(x1^0)").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { th_eval(alg, expr.as_ptr(), &mut out) }, ThStatus::Ok);
    assert_eq!(take(out), "s^2*x1*x2^-1 + s^2 - 1");
    assert!(th_last_error().is_null());
    unsafe { th_algebra_free(alg) };
}

#[test]
fn parse_errors_set_the_message() {
    let alg = algebra(2);
    let expr = CString::new("T[1] +").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { th_eval(alg, expr.as_ptr(), &mut out) }, ThStatus::ParseError);
    assert!(out.is_null());
    assert!(last_error().contains("parse error"));
    unsafe { th_algebra_free(alg) };
}

#[test]
fn null_and_bad_arguments() {
    let mut alg = ptr::null_mut();
    assert_eq!(unsafe { th_algebra_new(0, &mut alg) }, ThStatus::InvalidArgument);
    assert_eq!(unsafe { th_algebra_new(2, ptr::null_mut()) }, ThStatus::NullArgument);
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { th_eval(ptr::null(), ptr::null(), &mut out) }, ThStatus::NullArgument);
    let bad = [0xffu8 as c_char, 0];
    let alg = algebra(2);
    assert_eq!(unsafe { th_eval(alg, bad.as_ptr(), &mut out) }, ThStatus::InvalidUtf8);
    assert_eq!(unsafe { th_algebra_rank(ptr::null()) }, 0);
    unsafe {
        th_algebra_free(alg);
        th_algebra_free(ptr::null_mut());
        th_poly_free(ptr::null_mut());
        th_string_free(ptr::null_mut());
    }
}

#[test]
fn polynomial_handles() {
    let alg = algebra(3);
    let src = CString::new("1").unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { th_poly_parse(3, src.as_ptr(), &mut p) }, ThStatus::Ok);
    let h = CString::new("T[3]").unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { th_poly_act(alg, h.as_ptr(), p, &mut q) }, ThStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { th_poly_to_string(q, &mut s) }, ThStatus::Ok);
    assert_eq!(take(s), "s^4*x1*x3^-1 + s^2 - 1");
    let gs = CString::new("g*s + s^-1").unwrap();
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { th_poly_parse(0, gs.as_ptr(), &mut r) }, ThStatus::Ok);
    let mut mismatch = ptr::null_mut();
    assert_ne!(unsafe { th_poly_act(alg, h.as_ptr(), r, &mut mismatch) }, ThStatus::Ok);
    unsafe {
        th_poly_free(p);
        th_poly_free(q);
        th_poly_free(r);
        th_algebra_free(alg);
    }
}

#[test]
fn verify_report_json() {
    let suite = CString::new("orbits").unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { th_verify_json(suite.as_ptr(), 1, 2, 0, &mut out) }, ThStatus::Ok);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(report["schema"], 1);
    assert_eq!(report["passed"], true);
    let bad = CString::new("nope").unwrap();
    assert_eq!(unsafe { th_verify_json(bad.as_ptr(), 1, 2, 0, &mut out) }, ThStatus::InvalidArgument);
    assert_eq!(unsafe { th_verify_json(suite.as_ptr(), 3, 2, 0, &mut out) }, ThStatus::InvalidArgument);
}

#[test]
fn springer_matrix_json() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { th_springer_matrix_json(2, ptr::null(), &mut out) }, ThStatus::Ok);
    let j: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(j["basis"], "theorem");
    assert_eq!(j["generator"], "T_sm");
    assert_eq!(j["matrix"], serde_json::json!([["-1", "0"], ["g*s + s", "s^2"]]));
    assert!(j.get("denominator").is_none());
    let gen = CString::new("Tw[1]").unwrap();
    assert_eq!(unsafe { th_springer_matrix_json(2, gen.as_ptr(), &mut out) }, ThStatus::Ok);
    let j: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(j["matrix"], serde_json::json!([["0", "g^-1"], ["1", "0"]]));
}

#[test]
fn header_lists_the_exports() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/theta_hecke.h")).unwrap();
    for name in [
        "th_last_error",
        "th_string_free",
        "th_algebra_new",
        "th_algebra_free",
        "th_eval",
        "th_poly_parse",
        "th_poly_act",
        "th_poly_to_string",
        "th_poly_free",
        "th_verify_json",
        "th_springer_matrix_json",
        "TH_STATUS_VERIFY_FAILED",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
