//! C ABI for `parahess`.
//!
//! Objects cross the boundary as opaque heap handles created by a
//! `ph_*_new` or computing function and released by the matching
//! `ph_*_free`. Every fallible call returns a [`PhStatus`]; on failure
//! `ph_last_error_message` describes the most recent error on the calling
//! thread. Permutations are passed as one-line arrays of `size_t` with
//! values `1..=n`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use parahess::{
    h_from_j, run_checks, verify_main_theorem, CheckId, HessenbergFunction, HessenbergVariety, MainTheoremReport,
    Nilpotent, ParabolicData, Partition, Permutation, Polynomial,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Domain = 3,
    Panic = 4,
}

/// A Jordan type `λ`.
pub struct PhPartition(Partition);

/// A parabolic subset `J` of simple roots with its degree.
pub struct PhParabolic(ParabolicData);

/// A polynomial with nonnegative integer coefficients.
pub struct PhPoly(Polynomial);

/// Both sides of the Hessenberg/Schubert-union comparison.
pub struct PhReport(MainTheoremReport);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("interior nuls removed"));
}

enum Failure {
    Null(&'static str),
    Invalid(String),
    Domain(parahess::Error),
}

impl From<parahess::Error> for Failure {
    fn from(e: parahess::Error) -> Self {
        Failure::Domain(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PhStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PhStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            PhStatus::NullPointer
        }
        Ok(Err(Failure::Invalid(msg))) => {
            set_error(msg);
            PhStatus::InvalidArgument
        }
        Ok(Err(Failure::Domain(e))) => {
            set_error(e.to_string());
            PhStatus::Domain
        }
        Err(_) => {
            set_error("internal panic");
            PhStatus::Panic
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn as_slice<'a>(p: *const usize, len: usize, what: &'static str) -> Result<&'a [usize], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn free<T>(p: *mut T) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

unsafe fn permutation(p: *const usize, n: usize) -> Result<Permutation, Failure> {
    Ok(Permutation::from_one_line(as_slice(p, n, "one_line")?)?)
}

/// Message for the last failed call on this thread; empty after a
/// successful call. Valid until the next `ph_*` call on the same thread.
#[no_mangle]
pub extern "C" fn ph_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ph_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `parts` points to `len` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_partition_new(parts: *const usize, len: usize, out: *mut *mut PhPartition) -> PhStatus {
    guard(|| {
        let parts = as_slice(parts, len, "parts")?.to_vec();
        write_out(out, PhPartition(Partition::new(parts)?))
    })
}

/// Parses `"3,2,1"`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_partition_parse(text: *const c_char, out: *mut *mut PhPartition) -> PhStatus {
    guard(|| {
        if text.is_null() {
            return Err(Failure::Null("text"));
        }
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure::Invalid("text is not UTF-8".into()))?;
        write_out(out, PhPartition(s.parse()?))
    })
}

/// # Safety
/// `p` is null or came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_partition_free(p: *mut PhPartition) {
    free(p)
}

/// # Safety
/// `p` is a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ph_partition_size(p: *const PhPartition) -> usize {
    p.as_ref().map_or(0, |p| p.0.size())
}

/// `J ⊆ {1, ..., n-1}`.
///
/// # Safety
/// `j` points to `len` readable values; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_parabolic_new(n: usize, j: *const usize, len: usize, out: *mut *mut PhParabolic) -> PhStatus {
    guard(|| {
        let j = as_slice(j, len, "j")?;
        write_out(out, PhParabolic(ParabolicData::new(n, j)?))
    })
}

/// # Safety
/// `p` is null or came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_parabolic_free(p: *mut PhParabolic) {
    free(p)
}

/// Poincaré polynomial of `B(X, p_J)` counted cell by cell.
///
/// # Safety
/// Handles are valid; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_poincare_parabolic(
    partition: *const PhPartition,
    parabolic: *const PhParabolic,
    out: *mut *mut PhPoly,
) -> PhStatus {
    guard(|| {
        let lambda = &as_ref(partition, "partition")?.0;
        let p = &as_ref(parabolic, "parabolic")?.0;
        let poly = HessenbergVariety::new(lambda, &h_from_j(p))?.poincare();
        write_out(out, PhPoly(poly))
    })
}

/// Poincaré polynomial of `B(X, H)` for any Hessenberg function.
///
/// # Safety
/// `h` points to `len` readable values; handles are valid; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_poincare_hessenberg(
    partition: *const PhPartition,
    h: *const usize,
    len: usize,
    out: *mut *mut PhPoly,
) -> PhStatus {
    guard(|| {
        let lambda = &as_ref(partition, "partition")?.0;
        let h = HessenbergFunction::new(as_slice(h, len, "h")?.to_vec())?;
        write_out(out, PhPoly(HessenbergVariety::new(lambda, &h)?.poincare()))
    })
}

/// Number of stored coefficients, i.e. degree + 1, or 0 for the zero
/// polynomial.
///
/// # Safety
/// `p` is a valid handle or null.
#[no_mangle]
pub unsafe extern "C" fn ph_poly_len(p: *const PhPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.coeffs().len())
}

/// Coefficient of `t^k`; 0 beyond the degree.
///
/// # Safety
/// `p` is a valid handle or null.
#[no_mangle]
pub unsafe extern "C" fn ph_poly_coeff(p: *const PhPoly, k: usize) -> u64 {
    p.as_ref().map_or(0, |p| p.0.coeff(k))
}

/// # Safety
/// `p` is null or came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_poly_free(p: *mut PhPoly) {
    free(p)
}

/// # Safety
/// Handles are valid; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_verify_main_theorem(
    partition: *const PhPartition,
    parabolic: *const PhParabolic,
    out: *mut *mut PhReport,
) -> PhStatus {
    guard(|| {
        let lambda = &as_ref(partition, "partition")?.0;
        let p = &as_ref(parabolic, "parabolic")?.0;
        write_out(out, PhReport(verify_main_theorem(lambda, p)?))
    })
}

/// # Safety
/// `r` is a valid handle or null.
#[no_mangle]
pub unsafe extern "C" fn ph_report_equal(r: *const PhReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.equal)
}

/// # Safety
/// `r` is a valid handle or null.
#[no_mangle]
pub unsafe extern "C" fn ph_report_in_hypothesis(r: *const PhReport) -> bool {
    r.as_ref().is_some_and(|r| r.0.in_hypothesis)
}

/// Copies the Hessenberg side into a new polynomial handle.
///
/// # Safety
/// `r` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_report_hessenberg_poly(r: *const PhReport, out: *mut *mut PhPoly) -> PhStatus {
    guard(|| write_out(out, PhPoly(as_ref(r, "report")?.0.hessenberg_poly.clone())))
}

/// Copies the Schubert-union side into a new polynomial handle.
///
/// # Safety
/// `r` is a valid handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_report_schubert_poly(r: *const PhReport, out: *mut *mut PhPoly) -> PhStatus {
    guard(|| write_out(out, PhPoly(as_ref(r, "report")?.0.schubert_union_poly.clone())))
}

/// # Safety
/// `r` is null or came from this library and is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ph_report_free(r: *mut PhReport) {
    free(r)
}

/// Writes the one-line form of the Schubert point `w_T` into `out_point`,
/// which must hold `n` values.
///
/// # Safety
/// `one_line` holds `n` readable values and `out_point` `n` writable ones.
#[no_mangle]
pub unsafe extern "C" fn ph_schubert_point(
    partition: *const PhPartition,
    one_line: *const usize,
    n: usize,
    out_point: *mut usize,
) -> PhStatus {
    guard(|| {
        let lambda = &as_ref(partition, "partition")?.0;
        let w = permutation(one_line, n)?;
        check_degree(lambda, n)?;
        if out_point.is_null() {
            return Err(Failure::Null("out_point"));
        }
        let point = Nilpotent::new(lambda).schubert_point(&w)?.point.one_line();
        ptr::copy_nonoverlapping(point.as_ptr(), out_point, n);
        Ok(())
    })
}

/// # Safety
/// `one_line` holds `n` readable values; `out_dim` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_springer_cell_dim(
    partition: *const PhPartition,
    one_line: *const usize,
    n: usize,
    out_dim: *mut usize,
) -> PhStatus {
    guard(|| {
        let lambda = &as_ref(partition, "partition")?.0;
        let w = permutation(one_line, n)?;
        check_degree(lambda, n)?;
        if out_dim.is_null() {
            return Err(Failure::Null("out_dim"));
        }
        *out_dim = Nilpotent::new(lambda).springer_cell_dim(&w)?;
        Ok(())
    })
}

fn check_degree(lambda: &Partition, n: usize) -> Result<(), Failure> {
    if lambda.size() != n {
        return Err(Failure::Domain(parahess::Error::DegreeMismatch { expected: lambda.size(), found: n }));
    }
    Ok(())
}

/// Runs the comma-separated checks (or `"all"`) for every degree up to
/// `n_max` and writes the total number of failures.
///
/// # Safety
/// `checks` is a NUL-terminated string; `out_failures` is writable.
#[no_mangle]
pub unsafe extern "C" fn ph_run_checks(n_max: usize, checks: *const c_char, out_failures: *mut usize) -> PhStatus {
    guard(|| {
        if checks.is_null() {
            return Err(Failure::Null("checks"));
        }
        if out_failures.is_null() {
            return Err(Failure::Null("out_failures"));
        }
        let s = CStr::from_ptr(checks)
            .to_str()
            .map_err(|_| Failure::Invalid("checks is not UTF-8".into()))?;
        let ids = CheckId::parse_list(s)?;
        *out_failures = run_checks(n_max, &ids)?.iter().map(|r| r.failures.len()).sum();
        Ok(())
    })
}
