//! C ABI over `theta_hecke`.
//!
//! Every function returns a `ThStatus`. On failure the message is kept in a
//! thread-local slot readable through `th_last_error`. Strings handed out by the
//! library must be released with `th_string_free`; handles with their own free
//! function. Panics are caught at the boundary and reported as `TH_STATUS_PANIC`,
//! except unwinds carrying a library error, which keep that error's status.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use theta_hecke::cli::springer_matrix_json;
use theta_hecke::expr::eval;
use theta_hecke::hecke::HeckeAlgebra;
use theta_hecke::polyrep::act;
use theta_hecke::rings::{parse_poly, LaurentPoly, Profile};
use theta_hecke::verify::{run_suite, Suite, VerifyConfig, MAX_RANK};
use theta_hecke::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    MathError = 5,
    VerifyFailed = 6,
    Panic = 7,
}

/// The affine Hecke algebra of a fixed rank.
pub struct ThAlgebra {
    inner: HeckeAlgebra,
}

/// A Laurent polynomial: in `x1..xm, s` for rank `m ≥ 1`, in `g, s` for rank 0.
pub struct ThPoly {
    inner: LaurentPoly,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> ThStatus {
    match e {
        Error::Parse { .. } => ThStatus::ParseError,
        Error::Invalid(_) | Error::RankMismatch(..) | Error::ProfileMismatch(..) => ThStatus::InvalidArgument,
        _ => ThStatus::MathError,
    }
}

struct Fail(ThStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Run `f`, translating errors and panics into a status and the last-error slot.
fn guard(f: impl FnOnce() -> Result<ThStatus, Fail>) -> ThStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            if let Some(e) = payload.downcast_ref::<Error>() {
                set_error(&e.to_string());
                return status_of(e);
            }
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("panic: {msg}"));
            ThStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(ThStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(ThStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

fn to_c(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(ThStatus::MathError, "result contains a nul byte".into()))
}

fn check_out<T>(out: *mut *mut T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(ThStatus::NullArgument, "null output pointer".into()));
    }
    Ok(())
}

fn check_rank(m: usize) -> Result<(), Fail> {
    if m == 0 || m > MAX_RANK {
        return Err(Fail(ThStatus::InvalidArgument, format!("rank {m} outside 1..={MAX_RANK}")));
    }
    Ok(())
}

/// Message of the last failure on this thread, or NULL. Valid until the next call.
#[no_mangle]
pub extern "C" fn th_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn th_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn th_algebra_new(m: usize, out: *mut *mut ThAlgebra) -> ThStatus {
    guard(|| {
        check_out(out)?;
        check_rank(m)?;
        *out = Box::into_raw(Box::new(ThAlgebra { inner: HeckeAlgebra::new(m) }));
        Ok(ThStatus::Ok)
    })
}

/// # Safety
/// `alg` must be NULL or a handle from `th_algebra_new` not yet freed.
#[no_mangle]
pub unsafe extern "C" fn th_algebra_free(alg: *mut ThAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Rank of the algebra, 0 for NULL.
///
/// # Safety
/// `alg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn th_algebra_rank(alg: *const ThAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.rank())
}

/// Evaluate a mixed expression and write its canonical form to `out`.
///
/// # Safety
/// `alg` must be a live handle, `expr` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_eval(alg: *const ThAlgebra, expr: *const c_char, out: *mut *mut c_char) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let alg = alg.as_ref().ok_or_else(|| Fail(ThStatus::NullArgument, "null algebra".into()))?;
        let value = eval(&alg.inner, read_str(expr)?)?;
        *out = to_c(value.to_string())?;
        Ok(ThStatus::Ok)
    })
}

/// Parse a polynomial; rank 0 selects `ℤ[g^±, s^±]`.
///
/// # Safety
/// `src` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_poly_parse(rank: usize, src: *const c_char, out: *mut *mut ThPoly) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let profile = if rank == 0 {
            Profile::GS
        } else {
            check_rank(rank)?;
            Profile::X(rank as u8)
        };
        let inner = parse_poly(profile, read_str(src)?)?;
        *out = Box::into_raw(Box::new(ThPoly { inner }));
        Ok(ThStatus::Ok)
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn th_poly_free(p: *mut ThPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_poly_to_string(p: *const ThPoly, out: *mut *mut c_char) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let p = p.as_ref().ok_or_else(|| Fail(ThStatus::NullArgument, "null polynomial".into()))?;
        *out = to_c(p.inner.to_string())?;
        Ok(ThStatus::Ok)
    })
}

/// Act by the Hecke element `hecke` on a polynomial of the same rank.
///
/// # Safety
/// `alg` and `p` must be live handles, `hecke` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_poly_act(
    alg: *const ThAlgebra,
    hecke: *const c_char,
    p: *const ThPoly,
    out: *mut *mut ThPoly,
) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let alg = alg.as_ref().ok_or_else(|| Fail(ThStatus::NullArgument, "null algebra".into()))?;
        let p = p.as_ref().ok_or_else(|| Fail(ThStatus::NullArgument, "null polynomial".into()))?;
        let h = alg.inner.parse(read_str(hecke)?)?;
        let inner = act(&h, &p.inner)?;
        *out = Box::into_raw(Box::new(ThPoly { inner }));
        Ok(ThStatus::Ok)
    })
}

/// Run a verification suite and write the JSON report.
///
/// Returns `TH_STATUS_VERIFY_FAILED` with the report still written when a check fails.
///
/// # Safety
/// `suite` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_verify_json(
    suite: *const c_char,
    m_min: usize,
    m_max: usize,
    seed: u64,
    out: *mut *mut c_char,
) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let suite: Suite = read_str(suite)?.parse()?;
        let mut cfg = VerifyConfig::new(suite, (m_min, m_max));
        cfg.seed = seed;
        let report = run_suite(&cfg)?;
        *out = to_c(report.to_json())?;
        Ok(if report.passed { ThStatus::Ok } else { ThStatus::VerifyFailed })
    })
}

/// Matrix of a Hecke element on the theorem basis as JSON; NULL `generator` means `T_{s_m}`.
///
/// # Safety
/// `generator` must be NULL or a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn th_springer_matrix_json(
    m: usize,
    generator: *const c_char,
    out: *mut *mut c_char,
) -> ThStatus {
    guard(|| {
        check_out(out)?;
        let gen = if generator.is_null() { None } else { Some(read_str(generator)?) };
        let j = springer_matrix_json(m, gen)?;
        *out = to_c(j.to_string())?;
        Ok(ThStatus::Ok)
    })
}
