//! C ABI over the schurforge library.
//!
//! Fields and polynomials cross the boundary as opaque heap handles that the
//! caller releases with the matching `_free` function. Every fallible call
//! returns an [`SfStatus`]; on failure a message is kept per thread and
//! readable through [`sf_last_error_message`] until the next failing call.
//! Strings returned to the caller are owned by the caller and released with
//! [`sf_string_free`]. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schurforge::irred::{self, Condition, VerdictKind};
use schurforge::schur::schur_poly;
use schurforge::{Error, ExponentSequence, FieldCtx, MPoly};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Construction = 4,
    Context = 5,
    DivisionByZero = 6,
    NotFinite = 7,
    Size = 8,
    BadParameter = 9,
    BadSequence = 10,
    Other = 11,
    Panic = 12,
}

/// Oracle outcome kinds.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SfVerdictKind {
    Irreducible = 0,
    Reducible = 1,
    Inconclusive = 2,
}

/// Bit flags for violated conditions in [`SfTheoremCheck::failures`].
pub const SF_COND_C0_NONZERO: u32 = 1;
pub const SF_COND_GAP_LE_1: u32 = 1 << 1;
pub const SF_COND_ADJACENT_GCD: u32 = 1 << 2;
pub const SF_COND_P_DIVIDES_GAP: u32 = 1 << 3;
pub const SF_COND_GCD_C_NOT_1: u32 = 1 << 4;

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct SfTheoremCheck {
    pub applies: bool,
    pub only_if_holds: bool,
    pub failures: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct SfVerdict {
    pub kind: SfVerdictKind,
    pub searched_degree: u32,
    pub candidates_tested: u64,
}

/// Opaque field context.
pub struct SfField(FieldCtx);

/// Opaque polynomial.
pub struct SfPoly(MPoly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let text = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
}

fn status_of(e: &Error) -> SfStatus {
    match e {
        Error::Parse(_) => SfStatus::Parse,
        Error::Construction(_) => SfStatus::Construction,
        Error::Context(_) => SfStatus::Context,
        Error::DivisionByZero => SfStatus::DivisionByZero,
        Error::NotFinite => SfStatus::NotFinite,
        Error::Size(_) => SfStatus::Size,
        Error::BadParameter(_) => SfStatus::BadParameter,
        Error::BadSequence(_) => SfStatus::BadSequence,
        _ => SfStatus::Other,
    }
}

/// Failure carried out of a guarded body.
struct Fail(SfStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SfStatus::NullPointer, format!("{what} is null"))
}

/// Run `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> SfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SfStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            SfStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(SfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_arg<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn sequence_arg(c: *const u32, len: usize) -> Result<ExponentSequence, Fail> {
    let slice = if len == 0 {
        &[][..]
    } else if c.is_null() {
        return Err(null("exponent array"));
    } else {
        std::slice::from_raw_parts(c, len)
    };
    Ok(ExponentSequence::new(slice.to_vec())?)
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library text has no nul").into_raw()
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn sf_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a field spec `p`, `p:m` or `Q`.
///
/// # Safety
/// `spec` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_field_parse(spec: *const c_char, out: *mut *mut SfField) -> SfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let ctx: FieldCtx = str_arg(spec, "spec")?.parse()?;
        *out = Box::into_raw(Box::new(SfField(ctx)));
        Ok(())
    })
}

/// Release a field. Null is ignored.
///
/// # Safety
/// `f` must come from [`sf_field_parse`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_field_free(f: *mut SfField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Characteristic of the field (0 for the rationals).
///
/// # Safety
/// `f` must be a live field handle or null.
#[no_mangle]
pub unsafe extern "C" fn sf_field_characteristic(f: *const SfField, out: *mut u32) -> SfStatus {
    guard(|| {
        let ctx = &ref_arg(f, "field")?.0;
        *out_arg(out, "out")? = ctx.characteristic();
        Ok(())
    })
}

/// Canonical name such as `GF(7)`, `GF(2^3)` or `Q`.
///
/// # Safety
/// `f` must be a live field handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_field_to_string(f: *const SfField, out: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let ctx = &ref_arg(f, "field")?.0;
        *out_arg(out, "out")? = into_c_string(ctx.to_string());
        Ok(())
    })
}

/// `S_c` over the field for the strictly increasing sequence `c[0..len]`.
///
/// # Safety
/// `c` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_schur_poly(f: *const SfField, c: *const u32, len: usize, out: *mut *mut SfPoly) -> SfStatus {
    guard(|| {
        let ctx = &ref_arg(f, "field")?.0;
        let out = out_arg(out, "out")?;
        let seq = sequence_arg(c, len)?;
        *out = Box::into_raw(Box::new(SfPoly(schur_poly(&seq, ctx)?)));
        Ok(())
    })
}

/// Parse canonical polynomial text in `nvars` variables `x0, x1, ...`.
///
/// # Safety
/// `text` must be nul-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_parse(
    f: *const SfField,
    nvars: usize,
    text: *const c_char,
    out: *mut *mut SfPoly,
) -> SfStatus {
    guard(|| {
        let ctx = &ref_arg(f, "field")?.0;
        let out = out_arg(out, "out")?;
        let p = MPoly::parse(ctx, nvars, str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(SfPoly(p)));
        Ok(())
    })
}

/// Release a polynomial. Null is ignored.
///
/// # Safety
/// `p` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_free(p: *mut SfPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text of a polynomial.
///
/// # Safety
/// `p` must be a live polynomial handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_to_string(p: *const SfPoly, out: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let p = &ref_arg(p, "poly")?.0;
        *out_arg(out, "out")? = into_c_string(p.to_string());
        Ok(())
    })
}

/// Total degree; the zero polynomial is an error.
///
/// # Safety
/// `p` must be a live polynomial handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_total_degree(p: *const SfPoly, out: *mut u64) -> SfStatus {
    guard(|| {
        let p = &ref_arg(p, "poly")?.0;
        *out_arg(out, "out")? = p.total_degree()?;
        Ok(())
    })
}

/// Whether two polynomials are equal (same ring and same terms).
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_equal(a: *const SfPoly, b: *const SfPoly, out: *mut bool) -> SfStatus {
    guard(|| {
        let (a, b) = (&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0);
        *out_arg(out, "out")? = a == b;
        Ok(())
    })
}

/// Product `a * b`.
///
/// # Safety
/// Both handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_mul(a: *const SfPoly, b: *const SfPoly, out: *mut *mut SfPoly) -> SfStatus {
    guard(|| {
        let (a, b) = (&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0);
        let out = out_arg(out, "out")?;
        *out = Box::into_raw(Box::new(SfPoly(a.mul(b)?)));
        Ok(())
    })
}

/// Exact quotient `a / b`. When `b` does not divide `a` the call succeeds,
/// `*divides` is false and `*out` is null.
///
/// # Safety
/// Both handles must be live; `out` and `divides` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_poly_exact_divide(
    a: *const SfPoly,
    b: *const SfPoly,
    out: *mut *mut SfPoly,
    divides: *mut bool,
) -> SfStatus {
    guard(|| {
        let (a, b) = (&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0);
        let out = out_arg(out, "out")?;
        let divides = out_arg(divides, "divides")?;
        match a.exact_divide(b)? {
            Some(q) => {
                *out = Box::into_raw(Box::new(SfPoly(q)));
                *divides = true;
            }
            None => {
                *out = ptr::null_mut();
                *divides = false;
            }
        }
        Ok(())
    })
}

fn condition_bit(c: Condition) -> u32 {
    match c {
        Condition::C0Nonzero => SF_COND_C0_NONZERO,
        Condition::GapLe1 => SF_COND_GAP_LE_1,
        Condition::AdjacentGcd => SF_COND_ADJACENT_GCD,
        Condition::PDividesGap => SF_COND_P_DIVIDES_GAP,
        Condition::GcdCNot1 => SF_COND_GCD_C_NOT_1,
    }
}

/// Evaluate the irreducibility hypotheses for `c[0..len]` in characteristic
/// `p` (0 for characteristic zero).
///
/// # Safety
/// `c` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sf_theorem_conditions(c: *const u32, len: usize, p: u32, out: *mut SfTheoremCheck) -> SfStatus {
    guard(|| {
        let out = out_arg(out, "out")?;
        let seq = sequence_arg(c, len)?;
        let t = irred::theorem_conditions(&seq, p);
        *out = SfTheoremCheck {
            applies: t.applies,
            only_if_holds: t.only_if_holds,
            failures: t.failures.iter().fold(0, |m, &c| m | condition_bit(c)),
        };
        Ok(())
    })
}

/// Exhaustive irreducibility oracle over a finite field. A negative
/// `degree_cap` searches every degree. When the verdict is Reducible and
/// `factor` is not null, `*factor` receives the first divisor in
/// enumeration order; otherwise it is set to null.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable; `factor` may be null.
#[no_mangle]
pub unsafe extern "C" fn sf_irreducibility(
    p: *const SfPoly,
    degree_cap: i64,
    out: *mut SfVerdict,
    factor: *mut *mut SfPoly,
) -> SfStatus {
    guard(|| {
        let poly = &ref_arg(p, "poly")?.0;
        let out = out_arg(out, "out")?;
        let cap = u32::try_from(degree_cap).ok();
        let v = irred::brute_force_verdict(poly, cap)?;
        *out = SfVerdict {
            kind: match v.kind {
                VerdictKind::Irreducible => SfVerdictKind::Irreducible,
                VerdictKind::Reducible => SfVerdictKind::Reducible,
                VerdictKind::Inconclusive => SfVerdictKind::Inconclusive,
            },
            searched_degree: v.searched_degree,
            candidates_tested: v.candidates_tested,
        };
        if let Some(slot) = factor.as_mut() {
            *slot = match v.witness {
                Some((a, _)) => Box::into_raw(Box::new(SfPoly(a))),
                None => ptr::null_mut(),
            };
        }
        Ok(())
    })
}
