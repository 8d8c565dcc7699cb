//! C ABI for transbridge.
//!
//! Factorizations and diagrams cross the boundary as opaque handles. Every
//! fallible function returns a [`TbStatus`]; on failure a message is kept per
//! thread and can be read with [`tb_last_error`]. Strings returned through
//! out-parameters are owned by the caller and released with
//! [`tb_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use libc::c_char;
use transbridge::diagram::{
    assemble, bridge_params, check_general_position, check_transverse, mini_stabilize,
    pairwise_links, verify_trivial, TorusDiagram,
};
use transbridge::io::{
    export_svg, parse_diagram, parse_factorization, serialize_diagram, serialize_factorization,
    DiagramDocument,
};
use transbridge::quasipositive::{standard_factorization, validate, Factorization};
use transbridge::Error;

/// Result codes of the C API.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    InvalidFactorization = 5,
    NegativeFactor = 6,
    Unstabilized = 7,
    MalformedDiagram = 8,
    Layout = 9,
    Panic = 10,
}

/// Opaque factorization of the full twist.
pub struct TbFactorization(Factorization);

/// Opaque stabilized torus diagram, with its source factorization if known.
pub struct TbDiagram(DiagramDocument);

/// Bridge parameters `(b; c1, c2, c3)` and stabilization count `s`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TbBridgeParams {
    pub b: usize,
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub s: usize,
}

/// Outcome of the diagram checks. `has_triviality` is false when the
/// diagram carries no factorization or is not stabilized, in which case the
/// three `l*_ok` fields are false.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TbCheckReport {
    pub transverse: bool,
    pub general_position: bool,
    pub stabilized: bool,
    pub has_triviality: bool,
    pub l1_ok: bool,
    pub l2_ok: bool,
    pub l3_ok: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> TbStatus {
    match e {
        Error::Syntax { .. } | Error::Document(_) => TbStatus::Parse,
        Error::InvalidFactorization => TbStatus::InvalidFactorization,
        Error::NegativeFactor { .. } => TbStatus::NegativeFactor,
        Error::Unstabilized(_) => TbStatus::Unstabilized,
        Error::MalformedDiagram(_) => TbStatus::MalformedDiagram,
        Error::LayoutResolution { .. } => TbStatus::Layout,
        _ => TbStatus::InvalidArgument,
    }
}

fn fail(e: Error) -> TbStatus {
    set_error(e.to_string());
    status_of(&e)
}

/// Runs `f`, converting panics into [`TbStatus::Panic`].
fn guard(f: impl FnOnce() -> TbStatus) -> TbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            TbStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TbStatus> {
    if text.is_null() {
        set_error("null string argument");
        return Err(TbStatus::NullPointer);
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        TbStatus::InvalidUtf8
    })
}

unsafe fn write_string(out: *mut *mut c_char, text: String) -> TbStatus {
    match CString::new(text) {
        Ok(s) => {
            *out = s.into_raw();
            TbStatus::Ok
        }
        Err(_) => {
            set_error("output contains a NUL byte");
            TbStatus::InvalidArgument
        }
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument");
            return TbStatus::NullPointer;
        }
    };
}

/// Message of the last failure on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn tb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a factorization document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_parse(
    json: *const c_char,
    out: *mut *mut TbFactorization,
) -> TbStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_factorization(text) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(TbFactorization(f)));
                TbStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// The standard factorization of the full twist on `strands` strands.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_standard(
    strands: usize,
    out: *mut *mut TbFactorization,
) -> TbStatus {
    guard(|| {
        non_null!(out);
        match standard_factorization(strands) {
            Ok(f) => {
                *out = Box::into_raw(Box::new(TbFactorization(f)));
                TbStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of band factors.
///
/// # Safety
/// `f` must be a live handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_len(f: *const TbFactorization) -> usize {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Writes whether the factorization multiplies to the full twist with the
/// expected exponent sum and factor count.
///
/// # Safety
/// `f` must be a live handle and `valid` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_validate(
    f: *const TbFactorization,
    valid: *mut bool,
) -> TbStatus {
    guard(|| {
        non_null!(f, valid);
        *valid = validate(&(*f).0).is_valid();
        TbStatus::Ok
    })
}

/// Serializes a factorization document into a new string.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_to_json(
    f: *const TbFactorization,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(f, out);
        write_string(out, serialize_factorization(&(*f).0))
    })
}

/// # Safety
/// `f` must be a handle from this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn tb_factorization_free(f: *mut TbFactorization) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Assembles and stabilizes the diagram of a valid factorization.
///
/// # Safety
/// `f` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_build(
    f: *const TbFactorization,
    out: *mut *mut TbDiagram,
) -> TbStatus {
    guard(|| {
        non_null!(f, out);
        let f = &(*f).0;
        match assemble(f) {
            Ok(raw) => {
                let doc = DiagramDocument {
                    diagram: mini_stabilize(raw),
                    factorization: Some(f.clone()),
                };
                *out = Box::into_raw(Box::new(TbDiagram(doc)));
                TbStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Parses a diagram document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_parse(
    json: *const c_char,
    out: *mut *mut TbDiagram,
) -> TbStatus {
    guard(|| {
        non_null!(out);
        let text = match read_str(json) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_diagram(text) {
            Ok(doc) => {
                *out = Box::into_raw(Box::new(TbDiagram(doc)));
                TbStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

fn diagram(d: &TbDiagram) -> &TorusDiagram {
    &d.0.diagram
}

/// Half the number of bridge points.
///
/// # Safety
/// `d` must be a live handle or NULL (which gives 0).
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_bridge_index(d: *const TbDiagram) -> usize {
    d.as_ref().map_or(0, |d| diagram(d).bridge_index())
}

/// Bridge parameters of a stabilized diagram.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_params(
    d: *const TbDiagram,
    out: *mut TbBridgeParams,
) -> TbStatus {
    guard(|| {
        non_null!(d, out);
        match bridge_params(diagram(&*d)) {
            Ok(p) => {
                *out = TbBridgeParams {
                    b: p.b,
                    c1: p.c1,
                    c2: p.c2,
                    c3: p.c3,
                    s: p.s,
                };
                TbStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Transversality, general position and, when possible, the triviality
/// certificates.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_check(
    d: *const TbDiagram,
    out: *mut TbCheckReport,
) -> TbStatus {
    guard(|| {
        non_null!(d, out);
        let doc = &(*d).0;
        let diag = &doc.diagram;
        let mut report = TbCheckReport {
            transverse: check_transverse(diag).passed(),
            general_position: check_general_position(diag).is_empty(),
            stabilized: diag.a_crossings() == 0,
            ..TbCheckReport::default()
        };
        if let (Some(f), true) = (&doc.factorization, report.stabilized) {
            match pairwise_links(diag, f) {
                Ok(links) => {
                    let t = verify_trivial(&links, f);
                    report.has_triviality = true;
                    report.l1_ok = t.l1_ok;
                    report.l2_ok = t.l2_ok;
                    report.l3_ok = t.l3_ok;
                }
                Err(e) => return fail(e),
            }
        }
        *out = report;
        TbStatus::Ok
    })
}

/// Serializes a diagram document into a new string.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_to_json(
    d: *const TbDiagram,
    out: *mut *mut c_char,
) -> TbStatus {
    guard(|| {
        non_null!(d, out);
        write_string(out, serialize_diagram(&(*d).0))
    })
}

/// Renders a diagram as SVG into a new string.
///
/// # Safety
/// `d` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_to_svg(d: *const TbDiagram, out: *mut *mut c_char) -> TbStatus {
    guard(|| {
        non_null!(d, out);
        write_string(out, export_svg(diagram(&*d)))
    })
}

/// # Safety
/// `d` must be a handle from this library, not yet freed, or NULL.
#[no_mangle]
pub unsafe extern "C" fn tb_diagram_free(d: *mut TbDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not be freed yet, or be NULL.
#[no_mangle]
pub unsafe extern "C" fn tb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
