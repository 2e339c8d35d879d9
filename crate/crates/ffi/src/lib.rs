//! C interface to the tight-handlebody classifier.
//!
//! Handles are opaque; every function returning `ThbStatus` writes its result
//! through an out-pointer. After a failure, `thb_last_error` describes it.
//! Strings returned by this library are released with `thb_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use tight_handlebody::graph::{classify, is_tight, ExploreOptions, DEFAULT_LIMIT};
use tight_handlebody::io::{parse, render_report};
use tight_handlebody::oracles::{solid_torus_count, NegativeSlope};
use tight_handlebody::surface::{Configuration, Handlebody, HandlebodyPresentation};
use tight_handlebody::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThbStatus {
    ThbOk = 0,
    ThbNullArgument = 1,
    ThbInvalidUtf8 = 2,
    ThbSyntaxError = 3,
    ThbInvalidPresentation = 4,
    ThbResourceLimit = 5,
    ThbNoConfiguration = 6,
    ThbBadSlope = 7,
    ThbPanic = 8,
}

/// A validated presentation, with the configuration from its `config` lines
/// if it had any.
pub struct ThbPresentation {
    handlebody: Handlebody,
    configuration: Option<Configuration>,
}

/// A finished classification.
pub struct ThbReport {
    presentation: HandlebodyPresentation,
    report: tight_handlebody::graph::ClassificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: ThbStatus, msg: impl Into<String>) -> ThbStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> ThbStatus {
    match e.root() {
        Error::Syntax { .. } => ThbStatus::ThbSyntaxError,
        Error::ResourceLimit { .. } => ThbStatus::ThbResourceLimit,
        Error::BadSlope(_) => ThbStatus::ThbBadSlope,
        _ => ThbStatus::ThbInvalidPresentation,
    }
}

fn from_error(e: Error) -> ThbStatus {
    fail(status_of(&e), e.to_string())
}

fn guard(f: impl FnOnce() -> ThbStatus) -> ThbStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(ThbStatus::ThbPanic, "internal panic"))
}

fn options(limit: u64, workers: u32) -> ExploreOptions {
    ExploreOptions {
        workers: workers as usize,
        limit: if limit == 0 {
            DEFAULT_LIMIT
        } else {
            limit as u128
        },
    }
}

/// Message for the most recent failure on this thread, or NULL. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn thb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub extern "C" fn thb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Parses and validates a presentation document.
#[no_mangle]
pub unsafe extern "C" fn thb_presentation_parse(
    text: *const c_char,
    out: *mut *mut ThbPresentation,
) -> ThbStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(ThbStatus::ThbNullArgument, "null argument");
        }
        let Ok(text) = CStr::from_ptr(text).to_str() else {
            return fail(ThbStatus::ThbInvalidUtf8, "document is not UTF-8");
        };
        let doc = match parse(text) {
            Ok(d) => d,
            Err(e) => return from_error(e),
        };
        let handlebody = match Handlebody::new(doc.presentation) {
            Ok(h) => h,
            Err(e) => return from_error(e),
        };
        *out = Box::into_raw(Box::new(ThbPresentation {
            handlebody,
            configuration: doc.configuration,
        }));
        ThbStatus::ThbOk
    })
}

/// The solid torus with two boundary dividing curves of slope `-p/q`.
#[no_mangle]
pub unsafe extern "C" fn thb_presentation_solid_torus(
    p: u64,
    q: u64,
    out: *mut *mut ThbPresentation,
) -> ThbStatus {
    guard(|| {
        if out.is_null() {
            return fail(ThbStatus::ThbNullArgument, "null argument");
        }
        let s = match NegativeSlope::new(p, q) {
            Ok(s) => s.normalized(),
            Err(e) => return from_error(e),
        };
        let pres = HandlebodyPresentation::solid_torus(s.p() as usize, s.q() as usize);
        let handlebody = match Handlebody::new(pres) {
            Ok(h) => h,
            Err(e) => return from_error(e),
        };
        *out = Box::into_raw(Box::new(ThbPresentation {
            handlebody,
            configuration: None,
        }));
        ThbStatus::ThbOk
    })
}

#[no_mangle]
pub unsafe extern "C" fn thb_presentation_free(p: *mut ThbPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Genus, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn thb_presentation_genus(p: *const ThbPresentation) -> u32 {
    p.as_ref().map_or(0, |p| p.handlebody.genus() as u32)
}

/// Classifies a presentation. `limit` 0 selects the default bound and
/// `workers` 0 one thread per core.
#[no_mangle]
pub unsafe extern "C" fn thb_classify(
    p: *const ThbPresentation,
    limit: u64,
    workers: u32,
    out: *mut *mut ThbReport,
) -> ThbStatus {
    guard(|| {
        let (Some(p), false) = (p.as_ref(), out.is_null()) else {
            return fail(ThbStatus::ThbNullArgument, "null argument");
        };
        match classify(&p.handlebody, &options(limit, workers)) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(ThbReport {
                    presentation: p.handlebody.presentation().clone(),
                    report,
                }));
                ThbStatus::ThbOk
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn thb_report_free(r: *mut ThbReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

#[no_mangle]
pub unsafe extern "C" fn thb_report_tight_count(r: *const ThbReport) -> u64 {
    r.as_ref().map_or(0, |r| r.report.tight_count as u64)
}

#[no_mangle]
pub unsafe extern "C" fn thb_report_total_configurations(r: *const ThbReport) -> u64 {
    r.as_ref()
        .map_or(0, |r| r.report.total_configurations as u64)
}

#[no_mangle]
pub unsafe extern "C" fn thb_report_potentially_allowable(r: *const ThbReport) -> u64 {
    r.as_ref()
        .map_or(0, |r| r.report.potentially_allowable_count as u64)
}

#[no_mangle]
pub unsafe extern "C" fn thb_report_transitions(r: *const ThbReport) -> u64 {
    r.as_ref().map_or(0, |r| r.report.edge_count as u64)
}

/// The text report; free with `thb_string_free`. NULL for NULL input.
#[no_mangle]
pub unsafe extern "C" fn thb_report_render(r: *const ThbReport) -> *mut c_char {
    let Some(r) = r.as_ref() else {
        return ptr::null_mut();
    };
    let text = render_report(&r.presentation, &r.report);
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Decides tightness of the configuration given by the document's `config`
/// lines; writes 1 for tight, 0 for overtwisted.
#[no_mangle]
pub unsafe extern "C" fn thb_check(
    p: *const ThbPresentation,
    limit: u64,
    tight: *mut i32,
) -> ThbStatus {
    guard(|| {
        let (Some(p), false) = (p.as_ref(), tight.is_null()) else {
            return fail(ThbStatus::ThbNullArgument, "null argument");
        };
        let Some(c) = &p.configuration else {
            return fail(
                ThbStatus::ThbNoConfiguration,
                "presentation has no configuration",
            );
        };
        match is_tight(&p.handlebody, c, options(limit, 0).limit) {
            Ok(v) => {
                *tight = i32::from(v.tight);
                ThbStatus::ThbOk
            }
            Err(e) => from_error(e),
        }
    })
}

/// Reference count of tight structures on the solid torus with boundary
/// slope `-p/q`.
#[no_mangle]
pub unsafe extern "C" fn thb_oracle_solid_torus(p: u64, q: u64, count: *mut u64) -> ThbStatus {
    guard(|| {
        if count.is_null() {
            return fail(ThbStatus::ThbNullArgument, "null argument");
        }
        match NegativeSlope::new(p, q) {
            Ok(s) => {
                *count = solid_torus_count(s) as u64;
                ThbStatus::ThbOk
            }
            Err(e) => from_error(e),
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn thb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
