//! C ABI over `sphere-sets`.
//!
//! Configurations are opaque handles owned by the caller and released with
//! `ss_configuration_free`. Strings returned through out-parameters are
//! released with `ss_string_free`. Every function returns an `SsStatus`;
//! on failure `ss_last_error` describes the problem for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sphere_sets::bounds::{equiangular_max_bound, split_bound, two_distance_max_bound, BoundReport, FactTable, Mode};
use sphere_sets::cli::certificate_report;
use sphere_sets::config::{
    generate_named, generate_simplex_face_centers, parse_configuration, write_configuration, ConfigError,
    Configuration, NamedFamily,
};
use sphere_sets::extremal::certify_extremal;
use sphere_sets::report::Report;
use sphere_sets::verify::{verify, VerifyOptions};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsStatus {
    Ok = 0,
    /// The call ran but a mathematical check failed or a bound does not apply.
    CheckFailed = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NullPointer = 4,
    /// The configuration is not suitable for the requested operation.
    ConfigurationError = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsMode {
    Derivation = 0,
    AssumeTheorems = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SsFormat {
    Text = 0,
    Csv = 1,
}

/// Opaque configuration handle.
pub struct SsConfiguration {
    inner: Configuration,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn fail(status: SsStatus, message: impl Into<String>) -> SsStatus {
    set_error(message);
    status
}

fn guard(body: impl FnOnce() -> SsStatus) -> SsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(_) => fail(SsStatus::Internal, "internal panic"),
    }
}

fn config_status(e: &ConfigError) -> SsStatus {
    match e {
        ConfigError::Syntax { .. } | ConfigError::NormViolation { .. } => SsStatus::ParseError,
        ConfigError::UnknownFamily(_) | ConfigError::Parameters(_) | ConfigError::Index { .. } => {
            SsStatus::InvalidArgument
        }
        _ => SsStatus::ConfigurationError,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SsStatus> {
    if s.is_null() {
        return Err(fail(SsStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(SsStatus::InvalidArgument, "string argument is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> SsStatus {
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            SsStatus::Ok
        }
        Err(_) => fail(SsStatus::Internal, "output contains a NUL byte"),
    }
}

fn boxed(cfg: Configuration) -> *mut SsConfiguration {
    Box::into_raw(Box::new(SsConfiguration { inner: cfg }))
}

/// Text of the last error on this thread, or NULL. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn ss_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ss_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a configuration in the library's text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_parse(
    text: *const c_char,
    tolerance: f64,
    out: *mut *mut SsConfiguration,
) -> SsStatus {
    guard(|| {
        if out.is_null() {
            return fail(SsStatus::NullPointer, "null output pointer");
        }
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_configuration(text, tolerance) {
            Ok(cfg) => {
                *out = boxed(cfg);
                SsStatus::Ok
            }
            Err(e) => fail(config_status(&e), e.to_string()),
        }
    })
}

/// Builds a named configuration (`octahedron`, `pentagon`, `icosahedron`,
/// `lines28`) or `simplex-faces` with parameters `n` and `s`; `n` and `s`
/// are ignored for named families.
///
/// # Safety
/// `family` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_generate(
    family: *const c_char,
    n: usize,
    s: usize,
    out: *mut *mut SsConfiguration,
) -> SsStatus {
    guard(|| {
        if out.is_null() {
            return fail(SsStatus::NullPointer, "null output pointer");
        }
        let family = match read_str(family) {
            Ok(f) => f,
            Err(st) => return st,
        };
        let cfg = if family == "simplex-faces" {
            generate_simplex_face_centers(n, s).map(Configuration::from)
        } else {
            family.parse::<NamedFamily>().map(generate_named)
        };
        match cfg {
            Ok(cfg) => {
                *out = boxed(cfg);
                SsStatus::Ok
            }
            Err(e) => fail(config_status(&e), e.to_string()),
        }
    })
}

/// Releases a handle. NULL is ignored.
///
/// # Safety
/// `cfg` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_free(cfg: *mut SsConfiguration) {
    if !cfg.is_null() {
        drop(Box::from_raw(cfg));
    }
}

/// Number of points, or 0 for NULL.
///
/// # Safety
/// `cfg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_len(cfg: *const SsConfiguration) -> usize {
    cfg.as_ref().map_or(0, |c| c.inner.len())
}

/// Whether the configuration is held in exact rational arithmetic.
///
/// # Safety
/// `cfg` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_is_exact(cfg: *const SsConfiguration) -> bool {
    cfg.as_ref().is_some_and(|c| c.inner.is_exact())
}

/// Serializes the configuration in the text format.
///
/// # Safety
/// `cfg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_configuration_to_text(cfg: *const SsConfiguration, out: *mut *mut c_char) -> SsStatus {
    guard(|| {
        let Some(cfg) = cfg.as_ref() else {
            return fail(SsStatus::NullPointer, "null configuration");
        };
        if out.is_null() {
            return fail(SsStatus::NullPointer, "null output pointer");
        }
        write_string(out, write_configuration(&cfg.inner))
    })
}

unsafe fn emit_report(report: &Report, format: SsFormat, out: *mut *mut c_char, pass: *mut bool) -> SsStatus {
    let text = match format {
        SsFormat::Text => report.to_text(),
        SsFormat::Csv => report.to_csv(),
    };
    if !pass.is_null() {
        *pass = report.pass();
    }
    write_string(out, text)
}

/// Full verification. The report is written to `report` and the overall
/// outcome to `pass`; a failing check still returns `Ok`.
///
/// # Safety
/// `cfg` must be a live handle, `report` a valid pointer and `pass` NULL or
/// valid.
#[no_mangle]
pub unsafe extern "C" fn ss_verify(
    cfg: *const SsConfiguration,
    max_degree: u32,
    regular: bool,
    format: SsFormat,
    report: *mut *mut c_char,
    pass: *mut bool,
) -> SsStatus {
    guard(|| {
        let Some(cfg) = cfg.as_ref() else {
            return fail(SsStatus::NullPointer, "null configuration");
        };
        if report.is_null() {
            return fail(SsStatus::NullPointer, "null output pointer");
        }
        let options = VerifyOptions {
            max_degree,
            regular,
            facts: FactTable::shipped(),
        };
        match verify(&cfg.inner, &options) {
            Ok(r) => emit_report(&r, format, report, pass),
            Err(e) => fail(config_status(&e), e.to_string()),
        }
    })
}

/// Staged extremal certificate for angle `arccos(1/a)`.
///
/// # Safety
/// Same contract as `ss_verify`.
#[no_mangle]
pub unsafe extern "C" fn ss_certify_extremal(
    cfg: *const SsConfiguration,
    a: u64,
    format: SsFormat,
    report: *mut *mut c_char,
    pass: *mut bool,
) -> SsStatus {
    guard(|| {
        let Some(cfg) = cfg.as_ref() else {
            return fail(SsStatus::NullPointer, "null configuration");
        };
        if report.is_null() {
            return fail(SsStatus::NullPointer, "null output pointer");
        }
        let cert = match &cfg.inner {
            Configuration::Exact(c) => certify_extremal(c, a),
            Configuration::Floating(c) => certify_extremal(c, a),
        };
        emit_report(&certificate_report(&cert), format, report, pass)
    })
}

unsafe fn write_bound(
    result: Result<BoundReport, sphere_sets::bounds::BoundError>,
    out: *mut u64,
) -> SsStatus {
    if out.is_null() {
        return fail(SsStatus::NullPointer, "null output pointer");
    }
    match result {
        Ok(b) => match b.value_u64() {
            Some(v) => {
                *out = v;
                SsStatus::Ok
            }
            None if b.applicable => fail(SsStatus::Internal, "bound does not fit in 64 bits"),
            None => fail(SsStatus::CheckFailed, format!("{} not applicable: {}", b.name, b.reason)),
        },
        Err(e) => fail(SsStatus::InvalidArgument, e.to_string()),
    }
}

/// Upper bound on equiangular lines in `R^n` over all angles.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_equiangular_max_bound(n: u64, out: *mut u64) -> SsStatus {
    guard(|| write_bound(equiangular_max_bound(n, &FactTable::shipped()), out))
}

/// Upper bound on spherical two-distance sets in `R^n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_two_distance_max_bound(n: u64, mode: SsMode, out: *mut u64) -> SsStatus {
    let mode = match mode {
        SsMode::Derivation => Mode::Derivation,
        SsMode::AssumeTheorems => Mode::AssumeTheorems,
    };
    guard(|| write_bound(two_distance_max_bound(n, mode, &FactTable::shipped()), out))
}

/// Split bound for equiangular sets in `R^n` with angle `arccos(1/a)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ss_split_bound(n: u64, a: u64, out: *mut u64) -> SsStatus {
    guard(|| write_bound(split_bound(n, a), out))
}
