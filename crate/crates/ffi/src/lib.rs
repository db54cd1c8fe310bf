//! C ABI over the `cyclomahonian` library.
//!
//! Every function returns a [`CmStatus`]; on failure a message is available
//! from [`cm_last_error`] on the same thread. Objects are opaque handles that
//! must be released with the matching `*_free` function. Strings returned
//! through out-parameters are owned by the caller and released with
//! [`cm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cyclomahonian::cyclotomic::CycRing;
use cyclomahonian::error::Error;
use cyclomahonian::identities::{parse_suites, run_matrix, MatrixConfig, VerificationReport};
use cyclomahonian::permstat::{
    euler_mahonian_with, EnumOptions, DEFAULT_ENUMERATION_CAP, EXTENDED_ENUMERATION_CAP,
};
use cyclomahonian::polyring::TriPoly;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// An enumeration or composition cap was exceeded.
    ResourceLimit = 3,
    Internal = 4,
    /// A Rust panic was caught at the boundary.
    Panic = 5,
}

/// `A_n(t,q,p)` with integer coefficients.
pub struct CmPoly(TriPoly);

/// Reports from one verification run, in deterministic order.
pub struct CmReportList(Vec<VerificationReport>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn status_of(e: &Error) -> CmStatus {
    match e {
        Error::EnumerationCap { .. } | Error::CompositionCap { .. } => CmStatus::ResourceLimit,
        Error::Internal(_) => CmStatus::Internal,
        _ => CmStatus::InvalidArgument,
    }
}

/// Runs `body`, converting errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), (CmStatus, String)>) -> CmStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_last_error("");
            CmStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_last_error(&msg);
            CmStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (CmStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CmStatus, String) {
    (CmStatus::NullPointer, format!("{what} is null"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (CmStatus, String)> {
    let c = CString::new(s).map_err(|_| (CmStatus::Internal, "interior NUL".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the most recent failure on this thread; empty after a success.
///
/// The pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cm_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Enumerates `S_n` to build `A_n(t,q,p)`. `n` is at most 9, or 10 with `allow_n10`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn cm_euler_mahonian(
    n: u32,
    allow_n10: bool,
    jobs: u32,
    out: *mut *mut CmPoly,
) -> CmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let opts = EnumOptions {
            cap: if allow_n10 {
                EXTENDED_ENUMERATION_CAP
            } else {
                DEFAULT_ENUMERATION_CAP
            },
            jobs: jobs.max(1) as usize,
        };
        let poly = euler_mahonian_with(n as usize, &opts).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CmPoly(poly)));
        Ok(())
    })
}

/// Renders `poly` as text; `m = 0` keeps `p` symbolic, otherwise `p = ξ_m`.
///
/// # Safety
/// `poly` must come from [`cm_euler_mahonian`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cm_poly_render(
    poly: *const CmPoly,
    m: u32,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        if poly.is_null() {
            return Err(null("poly"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let p = &(*poly).0;
        let text = if m == 0 {
            p.render()
        } else {
            p.specialize(&CycRing::new(m)).render()
        };
        write_string(out, text)
    })
}

/// Number of nonzero terms of `poly`, written to `out`.
///
/// # Safety
/// `poly` must come from [`cm_euler_mahonian`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cm_poly_term_count(poly: *const CmPoly, out: *mut usize) -> CmStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            return Err(null("argument"));
        }
        *out = (*poly).0.len();
        Ok(())
    })
}

/// # Safety
/// `poly` must come from [`cm_euler_mahonian`] and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cm_poly_free(poly: *mut CmPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Runs the identity suites named in `suites` (comma-separated, or `all`).
///
/// `m_set` points to `m_len` moduli; `ell_max` bounds the coefficient-extraction suite.
///
/// # Safety
/// `suites` must be a NUL-terminated string, `m_set` must point to `m_len`
/// readable values, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cm_verify(
    suites: *const c_char,
    n_max: u32,
    m_set: *const u32,
    m_len: usize,
    trunc: u32,
    ell_max: u32,
    jobs: u32,
    out: *mut *mut CmReportList,
) -> CmStatus {
    guard(|| {
        if suites.is_null() {
            return Err(null("suites"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        if m_set.is_null() && m_len > 0 {
            return Err(null("m_set"));
        }
        let names = CStr::from_ptr(suites)
            .to_str()
            .map_err(|_| (CmStatus::InvalidArgument, "suites is not UTF-8".to_string()))?;
        let suites = parse_suites(names).map_err(lib_err)?;
        let m_set = if m_len == 0 {
            Vec::new()
        } else {
            std::slice::from_raw_parts(m_set, m_len).to_vec()
        };
        let config = MatrixConfig {
            n_max: n_max as usize,
            m_set,
            trunc: trunc as usize,
            ell_max: ell_max as usize,
            jobs: jobs.max(1) as usize,
            allow_n10: false,
        };
        let reports = run_matrix(&suites, &config).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(CmReportList(reports)));
        Ok(())
    })
}

/// Number of reports in `list`; 0 for null.
///
/// # Safety
/// `list` must come from [`cm_verify`] or be null.
#[no_mangle]
pub unsafe extern "C" fn cm_report_list_len(list: *const CmReportList) -> usize {
    if list.is_null() {
        0
    } else {
        (*list).0.len()
    }
}

/// Number of failing reports in `list`; 0 for null.
///
/// # Safety
/// `list` must come from [`cm_verify`] or be null.
#[no_mangle]
pub unsafe extern "C" fn cm_report_list_failed(list: *const CmReportList) -> usize {
    if list.is_null() {
        0
    } else {
        (*list).0.iter().filter(|r| !r.passed()).count()
    }
}

/// One report as a single-line JSON object.
///
/// # Safety
/// `list` must come from [`cm_verify`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn cm_report_json(
    list: *const CmReportList,
    index: usize,
    out: *mut *mut c_char,
) -> CmStatus {
    guard(|| {
        if list.is_null() {
            return Err(null("list"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let reports = &(*list).0;
        let report = reports.get(index).ok_or_else(|| {
            (
                CmStatus::InvalidArgument,
                format!("index {index} out of range for {} reports", reports.len()),
            )
        })?;
        write_string(out, report.to_json())
    })
}

/// # Safety
/// `list` must come from [`cm_verify`] and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cm_report_list_free(list: *mut CmReportList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cm_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
