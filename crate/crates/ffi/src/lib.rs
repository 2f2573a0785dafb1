//! C ABI for the barbell engine.
//!
//! Reports are opaque handles created by [`barbell_run`] or
//! [`barbell_run_scenario`] and released with [`barbell_report_free`].
//! Strings returned to the caller are owned by the caller and released with
//! [`barbell_string_free`]. On failure, [`barbell_last_error`] describes the
//! most recent error on the calling thread.
//!
//! The generated header lives in `include/barbell.h`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use barbell::error::Error;
use barbell::scenarios::{run_named, run_scenario, run_sweep, Params, Report, ScenarioFile};

/// Status codes. The first three match the command-line exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BarbellStatus {
    /// The report was produced and every check passed.
    Ok = 0,
    /// The report was produced but some check failed.
    Mismatch = 1,
    /// Invalid input or a violated hypothesis; no report.
    Invalid = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
    /// The engine panicked; this is a bug.
    Internal = 5,
}

/// A computed report.
pub struct BarbellReport {
    inner: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("nul bytes removed")));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, BarbellStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(BarbellStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        BarbellStatus::InvalidUtf8
    })
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("nul bytes removed").into_raw()
}

/// Runs `f` and stores the report in `*out`.
unsafe fn produce(out: *mut *mut BarbellReport, f: impl FnOnce() -> Result<Report, BarbellStatus>) -> BarbellStatus {
    if out.is_null() {
        set_error("null output pointer");
        return BarbellStatus::NullPointer;
    }
    *out = ptr::null_mut();
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(report)) => {
            let status = if report.passed() { BarbellStatus::Ok } else { BarbellStatus::Mismatch };
            *out = Box::into_raw(Box::new(BarbellReport { inner: report }));
            status
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal error: the engine panicked");
            BarbellStatus::Internal
        }
    }
}

fn engine(e: Error) -> BarbellStatus {
    set_error(e.to_string());
    BarbellStatus::Invalid
}

fn parse_params(json: Option<&str>) -> Result<Params, BarbellStatus> {
    match json {
        None => Ok(Params::default()),
        Some(s) => serde_json::from_str(s).map_err(|e| {
            set_error(format!("invalid parameters: {e}"));
            BarbellStatus::Invalid
        }),
    }
}

/// Runs a theorem or obstruction scenario by name. `params_json` is a JSON
/// object such as `{"k": 2, "l": 3}`, or null for no parameters.
///
/// # Safety
/// `name` must be a valid C string; `params_json` must be null or a valid C
/// string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn barbell_run(
    name: *const c_char,
    params_json: *const c_char,
    out: *mut *mut BarbellReport,
) -> BarbellStatus {
    produce(out, || {
        let name = read_str(name)?;
        let params = if params_json.is_null() { None } else { Some(read_str(params_json)?) };
        run_named(name, &parse_params(params)?).map_err(engine)
    })
}

/// Runs a parameter sweep (`morsesimple`, `higher-dim`, `brunnian`,
/// `montesinos`).
///
/// # Safety
/// As for [`barbell_run`].
#[no_mangle]
pub unsafe extern "C" fn barbell_run_sweep(
    kind: *const c_char,
    params_json: *const c_char,
    out: *mut *mut BarbellReport,
) -> BarbellStatus {
    produce(out, || {
        let kind = read_str(kind)?;
        let params = if params_json.is_null() { None } else { Some(read_str(params_json)?) };
        run_sweep(kind, &parse_params(params)?).map_err(engine)
    })
}

/// Runs a scenario given as JSON text.
///
/// # Safety
/// `scenario_json` must be a valid C string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn barbell_run_scenario(
    scenario_json: *const c_char,
    out: *mut *mut BarbellReport,
) -> BarbellStatus {
    produce(out, || {
        let text = read_str(scenario_json)?;
        let file = ScenarioFile::parse(text).map_err(engine)?;
        run_scenario(&file).map_err(engine)
    })
}

/// 1 if every check passed, 0 if not, -1 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn barbell_report_passed(report: *const BarbellReport) -> i32 {
    match report.as_ref() {
        Some(r) => i32::from(r.inner.passed()),
        None => -1,
    }
}

/// Number of checks in the report, 0 for a null handle.
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn barbell_report_check_count(report: *const BarbellReport) -> usize {
    report.as_ref().map_or(0, |r| r.inner.checks.len())
}

/// The report as JSON; null for a null handle. Free with
/// [`barbell_string_free`].
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn barbell_report_to_json(report: *const BarbellReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(r.inner.to_json()))
}

/// The report as a human-readable table; null for a null handle. Free with
/// [`barbell_string_free`].
///
/// # Safety
/// `report` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn barbell_report_table(report: *const BarbellReport) -> *mut c_char {
    report.as_ref().map_or(ptr::null_mut(), |r| into_c_string(r.inner.render_table()))
}

/// Releases a report. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn barbell_report_free(report: *mut BarbellReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn barbell_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The last error on this thread, or null. The pointer stays valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn barbell_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static C string.
#[no_mangle]
pub extern "C" fn barbell_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
