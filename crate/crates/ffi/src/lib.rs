//! C ABI over the `schroder` library.
//!
//! Paths and permutations cross the boundary as opaque handles created by the
//! `*_parse` functions (or returned by operations) and released with the
//! matching `*_free`. Every fallible function returns a [`SchroderStatus`];
//! on failure a message is available from [`schroder_last_error_message`]
//! until the next call on the same thread. Strings returned through `out`
//! parameters are owned by the caller and must be released with
//! [`schroder_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use schroder::verification::{regression_fixtures, verify_with, Claim};
use schroder::{count, phi, phi_inverse, CountQuery, Error, Family, Limits, Method, Permutation, SchroderPath};

/// Opaque Schroder path.
pub struct SchroderPathHandle(SchroderPath);

/// Opaque permutation.
pub struct SchroderPermHandle(Permutation);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchroderStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotAPath = 4,
    NotInClass = 5,
    CapExceeded = 6,
    UnknownClaim = 7,
    UnsupportedQuery = 8,
    OutOfRange = 9,
    CacheError = 10,
    Internal = 11,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchroderFamily {
    SchroderPerms = 0,
    Centrosymmetric = 1,
    CentrosymmetricInvolutions = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchroderMethod {
    Recurrence = 0,
    Paths = 1,
    BruteForce = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> SchroderStatus {
    match e {
        Error::Parse { .. } => SchroderStatus::ParseError,
        Error::NotAPath { .. } => SchroderStatus::NotAPath,
        Error::NotInClass { .. } => SchroderStatus::NotInClass,
        Error::CapExceeded { .. } => SchroderStatus::CapExceeded,
        Error::OutOfRange { .. } => SchroderStatus::OutOfRange,
        Error::UnknownClaim(_) => SchroderStatus::UnknownClaim,
        Error::UnsupportedQuery(_) => SchroderStatus::UnsupportedQuery,
        Error::Cache { .. } => SchroderStatus::CacheError,
    }
}

struct Fail(SchroderStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SchroderStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SchroderStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SchroderStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            SchroderStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(SchroderStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("out"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|e| Fail(SchroderStatus::Internal, e.to_string()))?;
    write_out(out, c.into_raw())
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn schroder_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schroder_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a path over the letters `d`, `e`, `n`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_parse(
    text: *const c_char,
    out: *mut *mut SchroderPathHandle,
) -> SchroderStatus {
    guard(|| {
        let p: SchroderPath = read_str(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(SchroderPathHandle(p))))
    })
}

/// # Safety
/// `path` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_free(path: *mut SchroderPathHandle) {
    if !path.is_null() {
        drop(Box::from_raw(path));
    }
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_to_string(
    path: *const SchroderPathHandle,
    out: *mut *mut c_char,
) -> SchroderStatus {
    guard(|| write_string(out, deref(path, "path")?.0.to_string()))
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_len(path: *const SchroderPathHandle, out: *mut usize) -> SchroderStatus {
    guard(|| write_out(out, deref(path, "path")?.0.len()))
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_rev(
    path: *const SchroderPathHandle,
    out: *mut *mut SchroderPathHandle,
) -> SchroderStatus {
    guard(|| {
        let r = deref(path, "path")?.0.reverse();
        write_out(out, Box::into_raw(Box::new(SchroderPathHandle(r))))
    })
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_psi(
    path: *const SchroderPathHandle,
    out: *mut *mut SchroderPathHandle,
) -> SchroderStatus {
    guard(|| {
        let r = deref(path, "path")?.0.psi();
        write_out(out, Box::into_raw(Box::new(SchroderPathHandle(r))))
    })
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_path_is_in_d(path: *const SchroderPathHandle, out: *mut bool) -> SchroderStatus {
    guard(|| write_out(out, deref(path, "path")?.0.is_in_d()))
}

/// # Safety
/// `path` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_phi(
    path: *const SchroderPathHandle,
    out: *mut *mut SchroderPermHandle,
) -> SchroderStatus {
    guard(|| {
        let pi = phi(&deref(path, "path")?.0);
        write_out(out, Box::into_raw(Box::new(SchroderPermHandle(pi))))
    })
}

/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_phi_inverse(
    perm: *const SchroderPermHandle,
    out: *mut *mut SchroderPathHandle,
) -> SchroderStatus {
    guard(|| {
        let p = phi_inverse(&deref(perm, "perm")?.0)?;
        write_out(out, Box::into_raw(Box::new(SchroderPathHandle(p))))
    })
}

/// Parses a comma-separated permutation such as `"3,1,2"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_parse(
    text: *const c_char,
    out: *mut *mut SchroderPermHandle,
) -> SchroderStatus {
    guard(|| {
        let pi: Permutation = read_str(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(SchroderPermHandle(pi))))
    })
}

/// Builds a permutation from `len` one-based entries.
///
/// # Safety
/// `entries` must point to `len` readable bytes; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_from_entries(
    entries: *const u8,
    len: usize,
    out: *mut *mut SchroderPermHandle,
) -> SchroderStatus {
    guard(|| {
        if entries.is_null() {
            return Err(null("entries"));
        }
        let slice = std::slice::from_raw_parts(entries, len);
        let pi = Permutation::new(slice.to_vec())?;
        write_out(out, Box::into_raw(Box::new(SchroderPermHandle(pi))))
    })
}

/// # Safety
/// `perm` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_free(perm: *mut SchroderPermHandle) {
    if !perm.is_null() {
        drop(Box::from_raw(perm));
    }
}

/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_to_string(
    perm: *const SchroderPermHandle,
    out: *mut *mut c_char,
) -> SchroderStatus {
    guard(|| write_string(out, deref(perm, "perm")?.0.to_string()))
}

/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_len(perm: *const SchroderPermHandle, out: *mut usize) -> SchroderStatus {
    guard(|| write_out(out, deref(perm, "perm")?.0.len()))
}

/// Copies the one-based entries into `buf`, which must hold at least the
/// permutation's length; `out_len` receives that length either way.
///
/// # Safety
/// `perm` must be a live handle, `buf` writable for `cap` bytes (or null when
/// `cap` is 0), `out_len` writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_entries(
    perm: *const SchroderPermHandle,
    buf: *mut u8,
    cap: usize,
    out_len: *mut usize,
) -> SchroderStatus {
    guard(|| {
        let entries = deref(perm, "perm")?.0.entries();
        write_out(out_len, entries.len())?;
        if cap < entries.len() {
            return Err(Fail(
                SchroderStatus::OutOfRange,
                format!("buffer holds {cap} entries, need {}", entries.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(entries.as_ptr(), buf, entries.len());
        Ok(())
    })
}

/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_reverse_complement(
    perm: *const SchroderPermHandle,
    out: *mut *mut SchroderPermHandle,
) -> SchroderStatus {
    guard(|| {
        let r = deref(perm, "perm")?.0.reverse_complement();
        write_out(out, Box::into_raw(Box::new(SchroderPermHandle(r))))
    })
}

/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_inverse(
    perm: *const SchroderPermHandle,
    out: *mut *mut SchroderPermHandle,
) -> SchroderStatus {
    guard(|| {
        let r = deref(perm, "perm")?.0.inverse();
        write_out(out, Box::into_raw(Box::new(SchroderPermHandle(r))))
    })
}

/// True iff the permutation avoids both 1243 and 2143.
///
/// # Safety
/// `perm` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_perm_avoids(perm: *const SchroderPermHandle, out: *mut bool) -> SchroderStatus {
    guard(|| write_out(out, deref(perm, "perm")?.0.avoids_1243_2143()))
}

/// Size of a class at permutation length `n` under the default caps.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_count(
    family: SchroderFamily,
    method: SchroderMethod,
    n: usize,
    out: *mut u64,
) -> SchroderStatus {
    guard(|| {
        let family = match family {
            SchroderFamily::SchroderPerms => Family::SchroderPerms,
            SchroderFamily::Centrosymmetric => Family::Centrosymmetric,
            SchroderFamily::CentrosymmetricInvolutions => Family::CentrosymmetricInvolutions,
        };
        let method = match method {
            SchroderMethod::Recurrence => Method::Recurrence,
            SchroderMethod::Paths => Method::Paths,
            SchroderMethod::BruteForce => Method::BruteForce,
        };
        let c = count(&CountQuery { family, n, method }, &Limits::default())?;
        write_out(out, c)
    })
}

/// Runs one claim (or `"regression_fixtures"`) and returns its report as
/// JSON. A negative `max_n` selects the claim's default range. A claim that
/// fails still returns `Ok`; inspect `failure_count` in the report.
///
/// # Safety
/// `claim` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn schroder_verify_json(
    claim: *const c_char,
    max_n: i64,
    out: *mut *mut c_char,
) -> SchroderStatus {
    guard(|| {
        let name = read_str(claim, "claim")?;
        let report = if name == "regression_fixtures" {
            regression_fixtures()
        } else {
            let c: Claim = name.parse()?;
            let n = usize::try_from(max_n).unwrap_or(c.default_max_n());
            verify_with(c, n, &Limits::default())?
        };
        let json = serde_json::to_string(&report).map_err(|e| Fail(SchroderStatus::Internal, e.to_string()))?;
        write_string(out, json)
    })
}
