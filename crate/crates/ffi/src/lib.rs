//! C ABI for the takeuchi engine.
//!
//! Jobs are opaque handles parsed from JSON; running a job yields a
//! JSON report string owned by this library. Every entry point returns
//! an error code; the per-thread message for the last failure is
//! available through [`tak_last_error`]. All strings are NUL-terminated
//! UTF-8 and must be released with [`tak_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use takeuchi::job::{parse_job, JobSpec};
use takeuchi::runner::run;
use takeuchi::Error;

/// Result codes for every C entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum TakStatus {
    /// Success; for `tak_job_run` this means every verdict passed.
    TakOk = 0,
    /// The job ran but a verification check failed.
    TakVerificationFailed = 1,
    /// Malformed input: bad JSON, bad schema, inconsistent data.
    TakInputError = 2,
    /// A mathematical precondition failed while computing.
    TakMathError = 3,
    /// A required pointer argument was NULL.
    TakNullPointer = 4,
    /// A string argument was not valid UTF-8.
    TakInvalidUtf8 = 5,
}

/// An opaque, validated job description.
pub struct TakJob {
    inner: JobSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> TakStatus {
    match err {
        Error::Input(_) | Error::Json(_) => TakStatus::TakInputError,
        Error::Math(_) => TakStatus::TakMathError,
        Error::Io(_) => TakStatus::TakInputError,
    }
}

/// Returns the message of the last error on this thread, or NULL when
/// no error has occurred. The caller owns the string.
#[no_mangle]
pub extern "C" fn tak_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        None => ptr::null_mut(),
        Some(c) => c.clone().into_raw(),
    })
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub extern "C" fn tak_string_free(s: *mut c_char) {
    if !s.is_null() {
        // Safety: the pointer came from CString::into_raw in this crate.
        unsafe {
            drop(CString::from_raw(s));
        }
    }
}

/// Parses and validates a JSON job document into an opaque handle
/// written to `out`. On failure `out` is left untouched.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` to a valid
/// pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tak_job_parse(text: *const c_char, out: *mut *mut TakJob) -> TakStatus {
    if text.is_null() || out.is_null() {
        set_error("NULL pointer argument");
        return TakStatus::TakNullPointer;
    }
    let text = match CStr::from_ptr(text).to_str() {
        Ok(t) => t,
        Err(_) => {
            set_error("job text is not valid UTF-8");
            return TakStatus::TakInvalidUtf8;
        }
    };
    match parse_job(text) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(TakJob { inner }));
            TakStatus::TakOk
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    }
}

/// Releases a job handle. NULL is ignored.
///
/// # Safety
/// `job` must have come from [`tak_job_parse`] and not been freed.
#[no_mangle]
pub unsafe extern "C" fn tak_job_free(job: *mut TakJob) {
    if !job.is_null() {
        drop(Box::from_raw(job));
    }
}

/// Runs a job and writes the JSON report to `out_report` (caller-owned,
/// release with [`tak_string_free`]). Returns `TakOk` when every check
/// passed and `TakVerificationFailed` when the job ran but a check
/// failed; in both cases the report is written.
///
/// # Safety
/// `job` must be a live handle from [`tak_job_parse`]; `out_report`
/// must point to a valid pointer slot.
#[no_mangle]
pub unsafe extern "C" fn tak_job_run(job: *const TakJob, out_report: *mut *mut c_char) -> TakStatus {
    if job.is_null() || out_report.is_null() {
        set_error("NULL pointer argument");
        return TakStatus::TakNullPointer;
    }
    let report = match run(&(*job).inner) {
        Ok(r) => r,
        Err(e) => {
            set_error(&e.to_string());
            return status_of(&e);
        }
    };
    let json = match report.to_json() {
        Ok(j) => j,
        Err(e) => {
            set_error(&e.to_string());
            return TakStatus::TakInputError;
        }
    };
    *out_report = CString::new(json).unwrap_or_default().into_raw();
    if report.all_pass() {
        TakStatus::TakOk
    } else {
        TakStatus::TakVerificationFailed
    }
}

/// Convenience one-shot: parse, validate and run a job from JSON text.
///
/// # Safety
/// As for [`tak_job_parse`] and [`tak_job_run`].
#[no_mangle]
pub unsafe extern "C" fn tak_run(text: *const c_char, out_report: *mut *mut c_char) -> TakStatus {
    let mut job: *mut TakJob = ptr::null_mut();
    let st = tak_job_parse(text, &mut job);
    if st != TakStatus::TakOk {
        return st;
    }
    let st = tak_job_run(job, out_report);
    tak_job_free(job);
    st
}
