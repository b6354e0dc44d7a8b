//! C ABI over `ssr-core`.
//!
//! Representations and reports live behind opaque handles. Every call returns an
//! [`SsrStatus`]; on anything but `SSR_STATUS_OK` the message is
//! available from [`ssr_last_error`] on the same thread. Strings returned by the
//! library are owned by the caller and released with [`ssr_string_free`].
//! Vectors, scalars and points are passed as JSON text; a scalar may also be given
//! bare, as in `1/2`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::Value;
use ssr_core::api::{self, AnyField, ChartOp, Outcome};
use ssr_core::field::{PrimeField, Rationals};
use ssr_core::ssr::SsrData;
use ssr_core::Error;

/// Result codes shared by every entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SsrStatus {
    Ok = 0,
    /// A report was produced but one of its checks failed; the report is still returned.
    CheckFailed = 1,
    /// A required pointer was null or a string was not UTF-8.
    NullOrInvalidArgument = 2,
    /// Malformed or inconsistent input: bad JSON, wrong field, wrong dimensions, and so on.
    InvalidInput = 3,
    /// A mathematical invariant failed while computing.
    InvariantFailure = 4,
    /// The library panicked; this is a bug.
    Internal = 5,
}

/// A representation loaded and validated against its field.
pub struct SsrRepr {
    json: Value,
    field: String,
    dim: usize,
    m_dim: usize,
}

/// A JSON report with its overall verdict.
pub struct SsrReport {
    json: Value,
    passed: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SsrStatus {
    if e.is_invariant_failure() {
        SsrStatus::InvariantFailure
    } else {
        SsrStatus::InvalidInput
    }
}

enum Fail {
    Arg(String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<SsrStatus, Fail>) -> SsrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == SsrStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(Fail::Arg(m))) => {
            set_error(&m);
            SsrStatus::NullOrInvalidArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            SsrStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Arg(format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Arg(format!("{what} is not UTF-8")))
}

unsafe fn opt_text<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

/// JSON if it parses, otherwise the raw text as a JSON string.
fn value(s: &str) -> Value {
    serde_json::from_str(s).unwrap_or_else(|_| Value::String(s.to_string()))
}

unsafe fn repr<'a>(p: *const SsrRepr) -> Result<&'a SsrRepr, Fail> {
    p.as_ref().ok_or_else(|| Fail::Arg("representation handle is null".into()))
}

unsafe fn emit<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Arg("output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn report(out: *mut *mut SsrReport, o: Outcome) -> Result<SsrStatus, Fail> {
    let passed = o.passed;
    emit(out, SsrReport { json: o.report, passed })?;
    if passed {
        Ok(SsrStatus::Ok)
    } else {
        set_error("a check failed; see the report");
        Ok(SsrStatus::CheckFailed)
    }
}

fn load(json: Value, field: Option<&str>) -> Result<SsrRepr, Error> {
    let f = AnyField::resolve(field, &json)?;
    let (dim, m_dim) = match &f {
        AnyField::Q(_) => {
            let s = SsrData::from_json(Rationals, &json)?;
            (s.dim(), s.m_dim())
        }
        AnyField::Fp(k) => {
            let s = SsrData::<PrimeField>::from_json(*k, &json)?;
            (s.dim(), s.m_dim())
        }
    };
    Ok(SsrRepr {
        json,
        field: f.describe(),
        dim,
        m_dim,
    })
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map(CString::into_raw).unwrap_or(ptr::null_mut())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ssr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failing call on this thread; empty after a success.
/// Valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn ssr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ssr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a shipped construction. `params_json` may be null; `field` is `Q`, `F7`, `Fp:7`, ...
///
/// # Safety
/// Strings must be null-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_construct(
    id: *const c_char,
    params_json: *const c_char,
    field: *const c_char,
    out: *mut *mut SsrRepr,
) -> SsrStatus {
    guard(|| {
        let id = text(id, "id")?;
        let params = match opt_text(params_json, "params")? {
            Some(p) => serde_json::from_str(p).map_err(|e| Error::Parse(e.to_string()))?,
            None => Value::Object(Default::default()),
        };
        let field = text(field, "field")?;
        let built = api::construct_json(id, &params, field)?;
        if !built.passed {
            return Err(Error::Invariant(built.report.to_string()).into());
        }
        emit(out, load(built.report, Some(field))?)?;
        Ok(SsrStatus::Ok)
    })
}

/// Loads a representation from its JSON form. `field` may be null to use the stored one.
///
/// # Safety
/// Strings must be null-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_repr_from_json(json: *const c_char, field: *const c_char, out: *mut *mut SsrRepr) -> SsrStatus {
    guard(|| {
        let v: Value = serde_json::from_str(text(json, "json")?).map_err(|e| Error::Parse(e.to_string()))?;
        emit(out, load(v, opt_text(field, "field")?)?)?;
        Ok(SsrStatus::Ok)
    })
}

/// The representation as JSON; free with [`ssr_string_free`]. Null on a null handle.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ssr_repr_to_json(r: *const SsrRepr) -> *mut c_char {
    match r.as_ref() {
        Some(r) => to_c_string(r.json.to_string()),
        None => ptr::null_mut(),
    }
}

/// Dimension of the symplectic space, or 0 on a null handle.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ssr_repr_dim(r: *const SsrRepr) -> usize {
    r.as_ref().map_or(0, |r| r.dim)
}

/// Dimension of the acting algebra, or 0 on a null handle.
///
/// # Safety
/// `r` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ssr_repr_algebra_dim(r: *const SsrRepr) -> usize {
    r.as_ref().map_or(0, |r| r.m_dim)
}

/// # Safety
/// `r` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ssr_repr_free(r: *mut SsrRepr) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Checks every axiom on basis vectors.
///
/// # Safety
/// `r` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_verify(r: *const SsrRepr, normalizer: bool, out: *mut *mut SsrReport) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        report(out, api::verify_json(&r.json, Some(&r.field), normalizer)?)
    })
}

/// Covariants and identities at a vector.
///
/// # Safety
/// `r` must be a live handle; strings null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_covariants(
    r: *const SsrRepr,
    vector: *const c_char,
    seed: u64,
    out: *mut *mut SsrReport,
) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        let v = value(text(vector, "vector")?);
        report(out, api::covariants_json(&r.json, Some(&r.field), &v, seed)?)
    })
}

/// Splits a vector into two null summands; with `lambda` non-null, over `k[√λ]`.
///
/// # Safety
/// `r` must be a live handle; strings null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_decompose(
    r: *const SsrRepr,
    vector: *const c_char,
    lambda: *const c_char,
    out: *mut *mut SsrReport,
) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        let v = value(text(vector, "vector")?);
        let l = opt_text(lambda, "lambda")?.map(value);
        report(out, api::decompose_json(&r.json, Some(&r.field), &v, l.as_ref())?)
    })
}

/// Sample points with the same moment as a vector.
///
/// # Safety
/// `r` must be a live handle; strings null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_fiber(
    r: *const SsrRepr,
    vector: *const c_char,
    samples: usize,
    out: *mut *mut SsrReport,
) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        let v = value(text(vector, "vector")?);
        report(out, api::fiber_json(&r.json, Some(&r.field), &v, samples)?)
    })
}

/// The operator syzygy at a vector; with `point` non-null also the classical binary-cubic one.
///
/// # Safety
/// `r` must be a live handle; strings null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_syzygy(
    r: *const SsrRepr,
    vector: *const c_char,
    point: *const c_char,
    out: *mut *mut SsrReport,
) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        let v = value(text(vector, "vector")?);
        let p = opt_text(point, "point")?.map(value);
        report(out, api::syzygy_json(&r.json, Some(&r.field), &v, p.as_ref())?)
    })
}

/// Graded Lie algebra with Jacobi, simplicity and round-trip checks.
///
/// # Safety
/// `r` must be a live handle; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_lie_build(r: *const SsrRepr, constants: bool, seed: u64, out: *mut *mut SsrReport) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        report(out, api::lie_build_json(&r.json, Some(&r.field), constants, seed)?)
    })
}

/// Chart maps: `op` is `alpha`, `beta`, `act` or `mu-hat`; `scalar` (`[a, b]`) is
/// only read by `act` and may be null otherwise.
///
/// # Safety
/// `r` must be a live handle; strings null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_chart(
    r: *const SsrRepr,
    op: *const c_char,
    lambda: *const c_char,
    point: *const c_char,
    scalar: *const c_char,
    out: *mut *mut SsrReport,
) -> SsrStatus {
    guard(|| {
        let r = repr(r)?;
        let op: ChartOp = text(op, "op")?.parse()?;
        let l = value(text(lambda, "lambda")?);
        let p = value(text(point, "point")?);
        let s = opt_text(scalar, "scalar")?.map(value);
        report(out, api::chart_json(op, &r.json, Some(&r.field), &l, &p, s.as_ref())?)
    })
}

/// Seeded invariant sweep over every construction.
///
/// # Safety
/// `field` null-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ssr_selftest(field: *const c_char, seed: u64, samples: usize, out: *mut *mut SsrReport) -> SsrStatus {
    guard(|| report(out, api::selftest_json(text(field, "field")?, seed, samples)?))
}

/// Whether every check in the report held.
///
/// # Safety
/// `rep` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ssr_report_passed(rep: *const SsrReport) -> bool {
    rep.as_ref().is_some_and(|r| r.passed)
}

/// The report as JSON; free with [`ssr_string_free`]. Null on a null handle.
///
/// # Safety
/// `rep` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn ssr_report_json(rep: *const SsrReport) -> *mut c_char {
    match rep.as_ref() {
        Some(r) => to_c_string(r.json.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `rep` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ssr_report_free(rep: *mut SsrReport) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}
