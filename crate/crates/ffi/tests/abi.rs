//! The C ABI driven from Rust: handle lifetimes, status codes and the
//! last-error channel.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use schurforge_ffi::*;

fn text(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { sf_string_free(p) };
    s
}

fn field(spec: &str) -> *mut SfField {
    let spec = CString::new(spec).unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { sf_field_parse(spec.as_ptr(), &mut f) }, SfStatus::Ok);
    f
}

fn schur(f: *const SfField, c: &[u32]) -> *mut SfPoly {
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sf_schur_poly(f, c.as_ptr(), c.len(), &mut p) }, SfStatus::Ok);
    p
}

fn poly(f: *const SfField, nvars: usize, s: &str) -> *mut SfPoly {
    let s = CString::new(s).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { sf_poly_parse(f, nvars, s.as_ptr(), &mut p) }, SfStatus::Ok);
    p
}

fn render(p: *const SfPoly) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { sf_poly_to_string(p, &mut out) }, SfStatus::Ok);
    text(out)
}

fn last_error() -> String {
    let p = sf_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(sf_version()) }.to_str().unwrap();
    assert_eq!(v, schurforge::VERSION);
}

#[test]
fn fields_round_trip() {
    for (spec, name, p) in [("7", "GF(7)", 7), ("2:3", "GF(2^3)", 2), ("Q", "Q", 0)] {
        let f = field(spec);
        let mut out = ptr::null_mut();
        assert_eq!(unsafe { sf_field_to_string(f, &mut out) }, SfStatus::Ok);
        assert_eq!(text(out), name);
        let mut ch = u32::MAX;
        assert_eq!(unsafe { sf_field_characteristic(f, &mut ch) }, SfStatus::Ok);
        assert_eq!(ch, p);
        unsafe { sf_field_free(f) };
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let bad = CString::new("4").unwrap();
    let mut f = ptr::null_mut();
    assert_eq!(unsafe { sf_field_parse(bad.as_ptr(), &mut f) }, SfStatus::Construction);
    assert!(f.is_null());
    assert!(last_error().contains("4"));

    let garbage = CString::new("seven").unwrap();
    assert_eq!(unsafe { sf_field_parse(garbage.as_ptr(), &mut f) }, SfStatus::Parse);
    assert_eq!(unsafe { sf_field_parse(ptr::null(), &mut f) }, SfStatus::NullPointer);
    assert_eq!(unsafe { sf_field_parse(garbage.as_ptr(), ptr::null_mut()) }, SfStatus::NullPointer);

    let q = field("Q");
    let mut p = ptr::null_mut();
    let c = [0u32, 2, 2];
    assert_eq!(unsafe { sf_schur_poly(q, c.as_ptr(), 3, &mut p) }, SfStatus::BadSequence);
    let s = schur(q, &[0, 2, 5]);
    let mut v = SfVerdict {
        kind: SfVerdictKind::Inconclusive,
        searched_degree: 0,
        candidates_tested: 0,
    };
    assert_eq!(unsafe { sf_irreducibility(s, -1, &mut v, ptr::null_mut()) }, SfStatus::BadParameter);
    unsafe {
        sf_poly_free(s);
        sf_field_free(q);
        sf_poly_free(ptr::null_mut());
        sf_field_free(ptr::null_mut());
        sf_string_free(ptr::null_mut());
    }
}

#[test]
fn schur_polynomials_and_arithmetic() {
    let q = field("Q");
    let s = schur(q, &[0, 2, 3]);
    assert_eq!(render(s), "x0*x1 + x0*x2 + x1*x2");
    let mut deg = 0;
    assert_eq!(unsafe { sf_poly_total_degree(s, &mut deg) }, SfStatus::Ok);
    assert_eq!(deg, 2);

    let a = poly(q, 3, "x0 + x1");
    let b = poly(q, 3, "x0 - x2");
    let mut ab = ptr::null_mut();
    assert_eq!(unsafe { sf_poly_mul(a, b, &mut ab) }, SfStatus::Ok);
    let mut quotient = ptr::null_mut();
    let mut divides = false;
    assert_eq!(unsafe { sf_poly_exact_divide(ab, b, &mut quotient, &mut divides) }, SfStatus::Ok);
    assert!(divides);
    let mut same = false;
    assert_eq!(unsafe { sf_poly_equal(quotient, a, &mut same) }, SfStatus::Ok);
    assert!(same);
    unsafe { sf_poly_free(quotient) };

    assert_eq!(unsafe { sf_poly_exact_divide(s, a, &mut quotient, &mut divides) }, SfStatus::Ok);
    assert!(!divides && quotient.is_null());

    let g = field("5");
    let other = poly(g, 3, "x0");
    assert_eq!(unsafe { sf_poly_mul(a, other, &mut ab) }, SfStatus::Context);
    unsafe {
        for p in [s, a, b, other] {
            sf_poly_free(p);
        }
        sf_field_free(q);
        sf_field_free(g);
    }
}

#[test]
fn theorem_conditions_bitmask() {
    let mut t = SfTheoremCheck::default();
    let c = [0u32, 2, 5];
    assert_eq!(unsafe { sf_theorem_conditions(c.as_ptr(), 3, 7, &mut t) }, SfStatus::Ok);
    assert!(t.applies && t.only_if_holds && t.failures == 0);
    assert_eq!(unsafe { sf_theorem_conditions(c.as_ptr(), 3, 2, &mut t) }, SfStatus::Ok);
    assert!(!t.applies);
    assert_eq!(t.failures, SF_COND_P_DIVIDES_GAP);
    let c = [0u32, 2, 4];
    assert_eq!(unsafe { sf_theorem_conditions(c.as_ptr(), 3, 7, &mut t) }, SfStatus::Ok);
    assert!(!t.applies && !t.only_if_holds);
    assert_ne!(t.failures & SF_COND_GCD_C_NOT_1, 0);
}

#[test]
fn oracle_verdicts() {
    let f7 = field("7");
    let s = schur(f7, &[0, 2, 5]);
    let mut v = SfVerdict {
        kind: SfVerdictKind::Reducible,
        searched_degree: 0,
        candidates_tested: 0,
    };
    let mut factor = ptr::null_mut();
    assert_eq!(unsafe { sf_irreducibility(s, -1, &mut v, &mut factor) }, SfStatus::Ok);
    assert_eq!(v.kind, SfVerdictKind::Irreducible);
    assert!(factor.is_null());

    let f3 = field("3");
    let r = schur(f3, &[0, 2, 4]);
    assert_eq!(unsafe { sf_irreducibility(r, -1, &mut v, &mut factor) }, SfStatus::Ok);
    assert_eq!(v.kind, SfVerdictKind::Reducible);
    assert_eq!(render(factor), "x0 + x1");

    let f5 = field("5");
    let big = schur(f5, &[0, 2, 5, 7]);
    assert_eq!(unsafe { sf_irreducibility(big, 2, &mut v, ptr::null_mut()) }, SfStatus::Ok);
    assert_eq!(v.kind, SfVerdictKind::Inconclusive);
    assert_eq!(v.searched_degree, 2);
    unsafe {
        for p in [s, r, factor, big] {
            sf_poly_free(p);
        }
        for f in [f7, f3, f5] {
            sf_field_free(f);
        }
    }
}

#[test]
fn shipped_header_declares_every_entry_point() {
    let header = include_str!("../include/schurforge.h");
    for name in [
        "sf_version",
        "sf_last_error_message",
        "sf_string_free",
        "sf_field_parse",
        "sf_field_free",
        "sf_field_characteristic",
        "sf_field_to_string",
        "sf_schur_poly",
        "sf_poly_parse",
        "sf_poly_free",
        "sf_poly_to_string",
        "sf_poly_total_degree",
        "sf_poly_equal",
        "sf_poly_mul",
        "sf_poly_exact_divide",
        "sf_theorem_conditions",
        "sf_irreducibility",
        "typedef struct SfField SfField",
        "typedef struct SfPoly SfPoly",
        "SF_STATUS_OK",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}
