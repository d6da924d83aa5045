//! C ABI for quivercone.
//!
//! Objects cross the boundary as opaque handles created and freed by this
//! library. Every function returns an [`NcqStatus`]; on failure the message is
//! available from [`ncq_last_error_message`] on the same thread. Strings
//! returned through out-parameters must be released with [`ncq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use quivercone::quiver::{cb_arrow_count, dim_rep_preproj, DimVector, Quiver};
use quivercone::session::{reports_to_json, Options, Session};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NcqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// The session text or an argument could not be parsed or resolved.
    ParseError = 3,
    /// A library computation rejected its input.
    ComputeError = 4,
    /// The session ran but at least one command failed; the report is still produced.
    CommandFailed = 5,
    Panic = 6,
}

/// A parsed and resolved session.
pub struct NcqSession(Session);

/// A quiver under construction or returned by an operation.
pub struct NcqQuiver(Quiver);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: NcqStatus, msg: impl Into<String>) -> NcqStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> NcqStatus) -> NcqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(NcqStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, NcqStatus> {
    if p.is_null() {
        return Err(fail(NcqStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(NcqStatus::InvalidUtf8, "string argument is not UTF-8"))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

/// Message of the last failure on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn ncq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and resolves a session. `degree < 0` keeps the per-command default;
/// `field` may be null (rational) or `"q"` / `"cyclo:m"`.
///
/// # Safety
/// `src` and `field` must be null or valid NUL-terminated strings; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncq_session_parse(
    src: *const c_char,
    degree: i64,
    field: *const c_char,
    out: *mut *mut NcqSession,
) -> NcqStatus {
    guard(|| {
        if out.is_null() {
            return fail(NcqStatus::NullPointer, "null output pointer");
        }
        let src = match str_arg(src) {
            Ok(s) => s,
            Err(e) => return e,
        };
        let field = if field.is_null() {
            None
        } else {
            let f = match str_arg(field) {
                Ok(s) => s,
                Err(e) => return e,
            };
            match quivercone::Field::parse(f) {
                Ok(f) => Some(f),
                Err(e) => return fail(NcqStatus::ParseError, e.to_string()),
            }
        };
        let options = Options {
            degree: usize::try_from(degree).ok(),
            field,
        };
        match Session::from_source(src, options) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(NcqSession(s)));
                NcqStatus::Ok
            }
            Err(e) => fail(NcqStatus::ParseError, e.to_string()),
        }
    })
}

/// Runs every command and writes the JSON report to `out_json`.
///
/// # Safety
/// `session` must come from [`ncq_session_parse`]; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncq_session_run(session: *const NcqSession, out_json: *mut *mut c_char) -> NcqStatus {
    guard(|| {
        if session.is_null() || out_json.is_null() {
            return fail(NcqStatus::NullPointer, "null argument");
        }
        let reports = (*session).0.run();
        *out_json = to_c_string(reports_to_json(&reports).to_string());
        match reports.iter().find(|r| !r.ok()) {
            None => NcqStatus::Ok,
            Some(r) => fail(
                NcqStatus::CommandFailed,
                format!("command {} ({}) failed", r.index, r.command),
            ),
        }
    })
}

/// Number of commands in the session.
///
/// # Safety
/// `session` must be null or come from [`ncq_session_parse`].
#[no_mangle]
pub unsafe extern "C" fn ncq_session_num_commands(session: *const NcqSession) -> usize {
    if session.is_null() {
        0
    } else {
        (*session).0.num_commands()
    }
}

/// # Safety
/// `session` must be null or come from [`ncq_session_parse`] and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncq_session_free(session: *mut NcqSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// A new empty quiver.
#[no_mangle]
pub extern "C" fn ncq_quiver_new() -> *mut NcqQuiver {
    Box::into_raw(Box::new(NcqQuiver(Quiver::new())))
}

/// # Safety
/// `q` must come from this library; `name` must be a valid string.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_add_vertex(q: *mut NcqQuiver, name: *const c_char) -> NcqStatus {
    guard(|| {
        if q.is_null() {
            return fail(NcqStatus::NullPointer, "null quiver");
        }
        let name = match str_arg(name) {
            Ok(s) => s,
            Err(e) => return e,
        };
        match (*q).0.add_vertex(name) {
            Ok(_) => NcqStatus::Ok,
            Err(e) => fail(NcqStatus::ComputeError, e.to_string()),
        }
    })
}

/// Adds an arrow `tail -> head`.
///
/// # Safety
/// `q` must come from this library; the strings must be valid.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_add_arrow(
    q: *mut NcqQuiver,
    name: *const c_char,
    tail: *const c_char,
    head: *const c_char,
) -> NcqStatus {
    guard(|| {
        if q.is_null() {
            return fail(NcqStatus::NullPointer, "null quiver");
        }
        let (name, tail, head) = match (str_arg(name), str_arg(tail), str_arg(head)) {
            (Ok(a), Ok(b), Ok(c)) => (a, b, c),
            (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => return e,
        };
        match (*q).0.add_arrow(name, tail, head) {
            Ok(_) => NcqStatus::Ok,
            Err(e) => fail(NcqStatus::ComputeError, e.to_string()),
        }
    })
}

/// # Safety
/// `q` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_num_vertices(q: *const NcqQuiver) -> usize {
    if q.is_null() {
        0
    } else {
        (*q).0.num_vertices()
    }
}

/// # Safety
/// `q` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_num_arrows(q: *const NcqQuiver) -> usize {
    if q.is_null() {
        0
    } else {
        (*q).0.num_arrows()
    }
}

/// The double quiver as a new handle.
///
/// # Safety
/// `q` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_double(q: *const NcqQuiver, out: *mut *mut NcqQuiver) -> NcqStatus {
    guard(|| {
        if q.is_null() || out.is_null() {
            return fail(NcqStatus::NullPointer, "null argument");
        }
        *out = Box::into_raw(Box::new(NcqQuiver((*q).0.double())));
        NcqStatus::Ok
    })
}

/// Graphviz text of the quiver.
///
/// # Safety
/// `q` must come from this library; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_to_dot(q: *const NcqQuiver, out: *mut *mut c_char) -> NcqStatus {
    guard(|| {
        if q.is_null() || out.is_null() {
            return fail(NcqStatus::NullPointer, "null argument");
        }
        *out = to_c_string((*q).0.to_dot("Q"));
        NcqStatus::Ok
    })
}

/// # Safety
/// `q` must be null or come from this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ncq_quiver_free(q: *mut NcqQuiver) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// Local-quiver arrow count between simple factors `i` and `j` (0-based) of a
/// semisimple point of the preprojective algebra of the double `qd`.
/// `dims` holds `num_dims` dimension vectors of length `ncq_quiver_num_vertices(qd)`, row-major.
///
/// # Safety
/// `qd` must come from this library; `dims` must point to `num_dims × num_vertices` values.
#[no_mangle]
pub unsafe extern "C" fn ncq_cb_arrow_count(
    qd: *const NcqQuiver,
    dims: *const u64,
    num_dims: usize,
    i: usize,
    j: usize,
    out: *mut i64,
) -> NcqStatus {
    guard(|| {
        if qd.is_null() || out.is_null() || (dims.is_null() && num_dims > 0) {
            return fail(NcqStatus::NullPointer, "null argument");
        }
        let q = &(*qd).0;
        let n = q.num_vertices();
        let flat: &[u64] = if num_dims * n == 0 {
            &[]
        } else {
            std::slice::from_raw_parts(dims, num_dims * n)
        };
        let vectors: Vec<DimVector> = (0..num_dims)
            .map(|k| DimVector(flat[k * n..(k + 1) * n].to_vec()))
            .collect();
        match cb_arrow_count(q, &vectors, i, j) {
            Ok(c) => {
                *out = c;
                NcqStatus::Ok
            }
            Err(e) => fail(NcqStatus::ComputeError, e.to_string()),
        }
    })
}

/// `dim Rep_n Π_g`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ncq_dim_rep_preproj(g: u64, n: u64, out: *mut u64) -> NcqStatus {
    guard(|| {
        if out.is_null() {
            return fail(NcqStatus::NullPointer, "null output pointer");
        }
        match dim_rep_preproj(g, n) {
            Ok(d) => {
                *out = d;
                NcqStatus::Ok
            }
            Err(e) => fail(NcqStatus::ComputeError, e.to_string()),
        }
    })
}
