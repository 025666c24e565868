//! C ABI for `kron-core`.
//!
//! Objects cross the boundary as opaque handles (`KronPartition`,
//! `KronCertificate`) that the caller releases with the matching `_free`
//! function. Every fallible call returns a [`KronStatus`]; on failure a
//! message is available from [`kron_last_error`] on the same thread.
//! Big integers are returned as decimal strings, released with
//! [`kron_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kron_core::certify::{
    builtin_strategies, certify, verify_certificate, CertError, Certificate, CertifyOutcome, SearchOptions,
    VerifyOptions,
};
use kron_core::characters::character;
use kron_core::kronecker::{kron, missing_partitions, ScanOptions};
use kron_core::{KronError, Partition};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KronStatus {
    Ok = 0,
    /// A well-posed question with a negative answer: no certificate found,
    /// or a certificate that does not verify.
    Negative = 1,
    /// Malformed input: bad syntax, mismatched sizes, null pointers.
    InvalidArgument = 2,
    /// An internal consistency check failed.
    Internal = 3,
    /// Input outside a function's validity domain or budget.
    OutOfDomain = 4,
    /// A value does not fit the requested integer type.
    Overflow = 5,
    /// The library panicked; this is a bug.
    Panic = 6,
}

/// Opaque partition handle.
pub struct KronPartition(Partition);

/// Opaque certificate handle.
pub struct KronCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(KronStatus, String);

impl From<KronError> for Fail {
    fn from(e: KronError) -> Self {
        let status = match e {
            KronError::Internal(_) => KronStatus::Internal,
            KronError::OutOfDomain { .. } | KronError::BudgetExceeded { .. } => KronStatus::OutOfDomain,
            KronError::Overflow(_) => KronStatus::Overflow,
            _ => KronStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

impl From<CertError> for Fail {
    fn from(e: CertError) -> Self {
        match e {
            CertError::Kron(k) => k.into(),
            CertError::Malformed(_) => Fail(KronStatus::InvalidArgument, format!("{}: {e}", e.kind())),
            _ => Fail(KronStatus::Negative, format!("{}: {e}", e.kind())),
        }
    }
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> KronStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KronStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            KronStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(KronStatus::InvalidArgument, format!("{what} is null"))
}

unsafe fn str_arg<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(KronStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn part_arg<'a>(p: *const KronPartition, what: &str) -> Result<&'a Partition, Fail> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library strings have no nul bytes").into_raw()
}

/// The last error message on this thread, or null if none. The pointer
/// stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn kron_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn kron_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `"5,3,1"`, `"(5,3,1)"` or `"4^4"`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_parse(text: *const c_char, out: *mut *mut KronPartition) -> KronStatus {
    guard(|| {
        let p: Partition = str_arg(text, "text")?.parse()?;
        write_out(out, Box::into_raw(Box::new(KronPartition(p))))
    })
}

/// Builds a partition from `len` weakly decreasing positive parts.
///
/// # Safety
/// `parts` must point to `len` readable values (or be null when `len` is
/// 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_new(
    parts: *const u32,
    len: usize,
    out: *mut *mut KronPartition,
) -> KronStatus {
    guard(|| {
        let parts = if len == 0 {
            Vec::new()
        } else if parts.is_null() {
            return Err(null("parts"));
        } else {
            std::slice::from_raw_parts(parts, len).to_vec()
        };
        let p = Partition::new(parts)?;
        write_out(out, Box::into_raw(Box::new(KronPartition(p))))
    })
}

/// # Safety
/// `p` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_free(p: *mut KronPartition) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// The number of boxes, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_size(p: *const KronPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// The number of parts, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_len(p: *const KronPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.len())
}

/// Copies up to `cap` parts into `buf`; `*len` receives the full count.
///
/// # Safety
/// `p` must be a live handle, `buf` writable for `cap` values, `len` writable.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_parts(
    p: *const KronPartition,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> KronStatus {
    guard(|| {
        let parts = part_arg(p, "partition")?.parts();
        write_out(len, parts.len())?;
        if cap > 0 {
            if buf.is_null() {
                return Err(null("buf"));
            }
            let n = parts.len().min(cap);
            ptr::copy_nonoverlapping(parts.as_ptr(), buf, n);
        }
        Ok(())
    })
}

/// The comma-separated form, e.g. `"4,4,4,4"`. Free with
/// [`kron_string_free`]. Null for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_to_string(p: *const KronPartition) -> *mut c_char {
    p.as_ref().map_or(ptr::null_mut(), |p| c_string(p.0.to_string()))
}

/// The conjugate (transpose) as a new handle.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_partition_conjugate(p: *const KronPartition, out: *mut *mut KronPartition) -> KronStatus {
    guard(|| {
        let c = part_arg(p, "partition")?.conjugate();
        write_out(out, Box::into_raw(Box::new(KronPartition(c))))
    })
}

/// `g(lambda, mu, nu)` as a decimal string.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_coefficient(
    lambda: *const KronPartition,
    mu: *const KronPartition,
    nu: *const KronPartition,
    out: *mut *mut c_char,
) -> KronStatus {
    guard(|| {
        let g = kron(part_arg(lambda, "lambda")?, part_arg(mu, "mu")?, part_arg(nu, "nu")?)?;
        write_out(out, c_string(g.to_string()))
    })
}

/// `g(lambda, mu, nu)` as a 64-bit integer; `Overflow` if it does not fit.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_coefficient_u64(
    lambda: *const KronPartition,
    mu: *const KronPartition,
    nu: *const KronPartition,
    out: *mut u64,
) -> KronStatus {
    guard(|| {
        let g = kron(part_arg(lambda, "lambda")?, part_arg(mu, "mu")?, part_arg(nu, "nu")?)?;
        let v = u64::try_from(&g).map_err(|_| Fail(KronStatus::Overflow, format!("g = {g} exceeds 64 bits")))?;
        write_out(out, v)
    })
}

/// `chi^lambda(alpha)` as a decimal string (possibly negative).
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_character(
    lambda: *const KronPartition,
    alpha: *const KronPartition,
    out: *mut *mut c_char,
) -> KronStatus {
    guard(|| {
        let v = character(part_arg(lambda, "lambda")?, part_arg(alpha, "alpha")?)?;
        write_out(out, c_string(v.to_string()))
    })
}

/// The zero classes of the tensor square of the `m x m` square, one line
/// per class. Side lengths above the desk-scale budget need
/// `budget_override`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_missing(m: u32, budget_override: bool, out: *mut *mut c_char) -> KronStatus {
    guard(|| {
        let found = missing_partitions(m, &ScanOptions::from_env(), budget_override)?;
        let text: String = found.iter().map(|p| format!("{p}\n")).collect();
        write_out(out, c_string(text))
    })
}

/// Searches for a certificate of `g(lambda, mu, nu) > 0` with the built-in
/// strategies. `Negative` when none is found within `budget` expansions.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_certify(
    lambda: *const KronPartition,
    mu: *const KronPartition,
    nu: *const KronPartition,
    budget: usize,
    out: *mut *mut KronCertificate,
) -> KronStatus {
    guard(|| {
        let target = [
            part_arg(lambda, "lambda")?.clone(),
            part_arg(mu, "mu")?.clone(),
            part_arg(nu, "nu")?.clone(),
        ];
        let opts = SearchOptions {
            budget,
            ..Default::default()
        };
        match certify(&target, &builtin_strategies(), &opts)? {
            CertifyOutcome::Found(c) => write_out(out, Box::into_raw(Box::new(KronCertificate(c)))),
            CertifyOutcome::NotFound { explored, .. } => Err(Fail(
                KronStatus::Negative,
                format!("no certificate found after {explored} expansions"),
            )),
        }
    })
}

/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kron_certificate_from_json(
    json: *const c_char,
    out: *mut *mut KronCertificate,
) -> KronStatus {
    guard(|| {
        let c = Certificate::from_json(str_arg(json, "json")?)?;
        write_out(out, Box::into_raw(Box::new(KronCertificate(c))))
    })
}

/// Compact JSON. Free with [`kron_string_free`]. Null for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_certificate_to_json(c: *const KronCertificate) -> *mut c_char {
    c.as_ref().map_or(ptr::null_mut(), |c| c_string(c.0.to_json()))
}

/// Re-checks every leaf and node. `Negative` if the certificate is wrong;
/// the last error then names the failure kind (e.g. `combine-mismatch`).
///
/// # Safety
/// `c` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_certificate_verify(c: *const KronCertificate, oracle_cap: usize) -> KronStatus {
    guard(|| {
        let c = c.as_ref().ok_or_else(|| null("certificate"))?;
        verify_certificate(&c.0, &VerifyOptions { oracle_cap })?;
        Ok(())
    })
}

/// Number of leaves, or 0 for a null handle.
///
/// # Safety
/// `c` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kron_certificate_leaf_count(c: *const KronCertificate) -> usize {
    c.as_ref().map_or(0, |c| c.0.leaf_count())
}

/// # Safety
/// `c` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn kron_certificate_free(c: *mut KronCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}
