//! C interface to the `relcomp` lattice library.
//!
//! Lattices are opaque [`RcLattice`] handles created by
//! [`rc_lattice_parse`] and released with [`rc_lattice_free`]. Elements are
//! addressed by `uint32_t` index. Every fallible call returns an
//! [`RcStatus`]; on failure [`rc_last_error`] describes the problem.
//!
//! Element sets are written to caller buffers as ascending indices. When the
//! buffer is too small the call returns `RC_STATUS_BUFFER_TOO_SMALL` and
//! still stores the required length.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use relcomp::closure::closure;
use relcomp::complement::{bar, complements, hat, rel_complements};
use relcomp::enumerate::resolve_statements;
use relcomp::format::parse_lattice;
use relcomp::verify::check_all;
use relcomp::{ElementId, ElementSet, Error, Interval, Lattice};

/// Result codes. The first four match the command-line exit codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RcStatus {
    Ok = 0,
    /// A checked statement does not hold.
    CheckFailed = 1,
    /// The lattice description is malformed or not a lattice.
    Invalid = 2,
    /// Unknown element, `a` not below `b`, unknown statement, ...
    BadQuery = 3,
    NullArgument = 4,
    BufferTooSmall = 5,
    /// A Rust panic was caught at the boundary.
    Internal = 6,
}

pub const RC_FLAG_MODULAR: u32 = 1;
pub const RC_FLAG_DISTRIBUTIVE: u32 = 2;
pub const RC_FLAG_COMPLEMENTED: u32 = 4;
pub const RC_FLAG_REL_COMPLEMENTED: u32 = 8;

/// Opaque lattice handle.
pub struct RcLattice {
    inner: Lattice,
    name: CString,
    names: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let c = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn fail(status: RcStatus, msg: impl Into<Vec<u8>>) -> RcStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> RcStatus {
    let status = if e.is_validation() {
        RcStatus::Invalid
    } else {
        RcStatus::BadQuery
    };
    fail(status, e.to_string())
}

fn guard(f: impl FnOnce() -> RcStatus) -> RcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(RcStatus::Internal, "internal panic"),
    }
}

/// # Safety
/// `l` is null or a live handle from [`rc_lattice_parse`].
unsafe fn lattice<'a>(l: *const RcLattice) -> Result<&'a RcLattice, RcStatus> {
    // SAFETY: the caller passes null or a handle it has not freed.
    unsafe { l.as_ref() }.ok_or_else(|| fail(RcStatus::NullArgument, "null lattice handle"))
}

fn element(l: &Lattice, x: u32) -> Result<ElementId, RcStatus> {
    l.check_id(ElementId::new(x as usize)).map_err(from_error)
}

/// # Safety
/// `buf` is null or valid for `cap` writes; `len` is valid for one write.
unsafe fn write_set(s: &ElementSet, buf: *mut u32, cap: usize, len: *mut usize) -> RcStatus {
    if len.is_null() {
        return fail(RcStatus::NullArgument, "null length pointer");
    }
    // SAFETY: checked non-null above; caller guarantees validity.
    unsafe { *len = s.len() };
    if s.len() > cap {
        return fail(
            RcStatus::BufferTooSmall,
            format!("need room for {} elements, got {cap}", s.len()),
        );
    }
    if s.is_empty() {
        return RcStatus::Ok;
    }
    if buf.is_null() {
        return fail(RcStatus::NullArgument, "null buffer");
    }
    for (k, x) in s.iter().enumerate() {
        // SAFETY: k < s.len() <= cap.
        unsafe { *buf.add(k) = x.index() as u32 };
    }
    RcStatus::Ok
}

/// Parses a lattice in the text format and stores a new handle in `*out`.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_parse(
    text: *const c_char,
    out: *mut *mut RcLattice,
) -> RcStatus {
    guard(|| {
        if text.is_null() || out.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        // SAFETY: caller passes a NUL-terminated string.
        let text = match unsafe { CStr::from_ptr(text) }.to_str() {
            Ok(t) => t,
            Err(_) => return fail(RcStatus::Invalid, "input is not UTF-8"),
        };
        let inner = match parse_lattice(text) {
            Ok(l) => l,
            Err(e) => return from_error(e),
        };
        // Names cannot hold NUL: the format splits on whitespace only, so a
        // NUL byte would have to be part of a token.
        let cstr = |s: &str| CString::new(s).unwrap_or_default();
        let handle = RcLattice {
            name: cstr(inner.name()),
            names: inner.element_names().iter().map(|n| cstr(n)).collect(),
            inner,
        };
        // SAFETY: checked non-null above.
        unsafe { *out = Box::into_raw(Box::new(handle)) };
        RcStatus::Ok
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `l` is null or a handle from [`rc_lattice_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_free(l: *mut RcLattice) {
    if !l.is_null() {
        // SAFETY: the handle came from Box::into_raw in rc_lattice_parse.
        drop(unsafe { Box::from_raw(l) });
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `l` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_size(l: *const RcLattice) -> usize {
    // SAFETY: forwarded caller contract.
    unsafe { l.as_ref() }.map_or(0, |l| l.inner.len())
}

/// The lattice name, owned by the handle.
///
/// # Safety
/// `l` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_name(l: *const RcLattice) -> *const c_char {
    // SAFETY: forwarded caller contract.
    unsafe { l.as_ref() }.map_or(ptr::null(), |l| l.name.as_ptr())
}

/// Name of element `x`, owned by the handle; null when out of range.
///
/// # Safety
/// `l` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_element_name(l: *const RcLattice, x: u32) -> *const c_char {
    // SAFETY: forwarded caller contract.
    unsafe { l.as_ref() }
        .and_then(|l| l.names.get(x as usize))
        .map_or(ptr::null(), |n| n.as_ptr())
}

/// Index of the element called `name`.
///
/// # Safety
/// `l` is a live handle, `name` NUL-terminated, `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_index(
    l: *const RcLattice,
    name: *const c_char,
    out: *mut u32,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => l,
            Err(s) => return s,
        };
        if name.is_null() || out.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        // SAFETY: caller passes a NUL-terminated string.
        let name = unsafe { CStr::from_ptr(name) }.to_string_lossy();
        match l.inner.lookup(&name) {
            Ok(x) => {
                // SAFETY: checked non-null above.
                unsafe { *out = x.index() as u32 };
                RcStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Bottom and top element indices.
///
/// # Safety
/// `l` is a live handle; `bottom` and `top` are valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_bounds(
    l: *const RcLattice,
    bottom: *mut u32,
    top: *mut u32,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if bottom.is_null() || top.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        // SAFETY: checked non-null above.
        unsafe {
            *bottom = l.bottom().index() as u32;
            *top = l.top().index() as u32;
        }
        RcStatus::Ok
    })
}

/// Stores whether `x <= y`.
///
/// # Safety
/// `l` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_leq(
    l: *const RcLattice,
    x: u32,
    y: u32,
    out: *mut bool,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        match (element(l, x), element(l, y)) {
            (Ok(x), Ok(y)) => {
                // SAFETY: checked non-null above.
                unsafe { *out = l.le(x, y) };
                RcStatus::Ok
            }
            (Err(s), _) | (_, Err(s)) => s,
        }
    })
}

/// # Safety
/// `l` is a live handle; `out` is valid for one write.
unsafe fn binary(
    l: *const RcLattice,
    x: u32,
    y: u32,
    out: *mut u32,
    op: fn(&Lattice, ElementId, ElementId) -> ElementId,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        match (element(l, x), element(l, y)) {
            (Ok(x), Ok(y)) => {
                // SAFETY: checked non-null above.
                unsafe { *out = op(l, x, y).index() as u32 };
                RcStatus::Ok
            }
            (Err(s), _) | (_, Err(s)) => s,
        }
    })
}

/// Stores `x ∨ y`.
///
/// # Safety
/// `l` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_join(
    l: *const RcLattice,
    x: u32,
    y: u32,
    out: *mut u32,
) -> RcStatus {
    // SAFETY: forwarded caller contract.
    unsafe { binary(l, x, y, out, Lattice::join) }
}

/// Stores `x ∧ y`.
///
/// # Safety
/// `l` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_meet(
    l: *const RcLattice,
    x: u32,
    y: u32,
    out: *mut u32,
) -> RcStatus {
    // SAFETY: forwarded caller contract.
    unsafe { binary(l, x, y, out, Lattice::meet) }
}

/// Stores a bitwise OR of the `RC_FLAG_*` constants.
///
/// # Safety
/// `l` is a live handle; `out` is valid for one write.
#[no_mangle]
pub unsafe extern "C" fn rc_lattice_flags(l: *const RcLattice, out: *mut u32) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if out.is_null() {
            return fail(RcStatus::NullArgument, "null argument");
        }
        let mut flags = 0;
        for (on, bit) in [
            (l.is_modular(), RC_FLAG_MODULAR),
            (l.is_distributive(), RC_FLAG_DISTRIBUTIVE),
            (l.is_complemented(), RC_FLAG_COMPLEMENTED),
            (l.is_rel_complemented(), RC_FLAG_REL_COMPLEMENTED),
        ] {
            if on {
                flags |= bit;
            }
        }
        // SAFETY: checked non-null above.
        unsafe { *out = flags };
        RcStatus::Ok
    })
}

/// Complements of `x`.
///
/// # Safety
/// `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn rc_complements(
    l: *const RcLattice,
    x: u32,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        match element(l, x) {
            // SAFETY: forwarded caller contract.
            Ok(x) => unsafe { write_set(&complements(l, x), buf, cap, len) },
            Err(s) => s,
        }
    })
}

type IntervalOp = fn(&Interval<'_>, ElementId) -> relcomp::Result<ElementSet>;

/// # Safety
/// As for [`rc_rel_complements`].
#[allow(clippy::too_many_arguments)]
unsafe fn interval_op(
    l: *const RcLattice,
    a: u32,
    b: u32,
    x: u32,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
    op: IntervalOp,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        let (a, b, x) = match (element(l, a), element(l, b), element(l, x)) {
            (Ok(a), Ok(b), Ok(x)) => (a, b, x),
            (Err(s), _, _) | (_, Err(s), _) | (_, _, Err(s)) => return s,
        };
        let result = Interval::new(l, a, b).and_then(|i| op(&i, x));
        match result {
            // SAFETY: forwarded caller contract.
            Ok(s) => unsafe { write_set(&s, buf, cap, len) },
            Err(e) => from_error(e),
        }
    })
}

/// Relative complements of `x` in `[a, b]`.
///
/// # Safety
/// `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn rc_rel_complements(
    l: *const RcLattice,
    a: u32,
    b: u32,
    x: u32,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> RcStatus {
    // SAFETY: forwarded caller contract.
    unsafe { interval_op(l, a, b, x, buf, cap, len, rel_complements) }
}

/// `(x⁺ ∨ a) ∧ b`.
///
/// # Safety
/// `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn rc_bar(
    l: *const RcLattice,
    a: u32,
    b: u32,
    x: u32,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> RcStatus {
    // SAFETY: forwarded caller contract.
    unsafe { interval_op(l, a, b, x, buf, cap, len, bar) }
}

/// `(x⁺ ∧ b) ∨ a`.
///
/// # Safety
/// `l` is a live handle; `buf` is valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn rc_hat(
    l: *const RcLattice,
    a: u32,
    b: u32,
    x: u32,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> RcStatus {
    // SAFETY: forwarded caller contract.
    unsafe { interval_op(l, a, b, x, buf, cap, len, hat) }
}

/// `(A^ab)^ab` for the `n` indices at `xs`.
///
/// # Safety
/// `l` is a live handle; `xs` is valid for `n` reads (or null when `n` is
/// 0); `buf` is valid for `cap` writes; `len` for one.
#[no_mangle]
pub unsafe extern "C" fn rc_closure(
    l: *const RcLattice,
    a: u32,
    b: u32,
    xs: *const u32,
    n: usize,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if n > 0 && xs.is_null() {
            return fail(RcStatus::NullArgument, "null element array");
        }
        let raw: &[u32] = if n == 0 {
            &[]
        } else {
            // SAFETY: caller guarantees n readable values.
            unsafe { std::slice::from_raw_parts(xs, n) }
        };
        let mut ids = Vec::with_capacity(n);
        for &x in raw {
            match element(l, x) {
                Ok(x) => ids.push(x),
                Err(s) => return s,
            }
        }
        let (a, b) = match (element(l, a), element(l, b)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let result = Interval::new(l, a, b).and_then(|i| closure(&i, &l.set_of(ids)));
        match result {
            // SAFETY: forwarded caller contract.
            Ok(s) => unsafe { write_set(&s, buf, cap, len) },
            Err(e) => from_error(e),
        }
    })
}

/// Checks the statements selected by `pattern` (an id, `prefix.*` or
/// `all`). Returns `RC_STATUS_OK` when all hold and
/// `RC_STATUS_CHECK_FAILED` otherwise; [`rc_last_error`] then names the
/// first failing statement and its counterexample.
///
/// # Safety
/// `l` is a live handle; `pattern` is NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn rc_check(l: *const RcLattice, pattern: *const c_char) -> RcStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let l = match unsafe { lattice(l) } {
            Ok(l) => &l.inner,
            Err(s) => return s,
        };
        if pattern.is_null() {
            return fail(RcStatus::NullArgument, "null statement pattern");
        }
        // SAFETY: caller passes a NUL-terminated string.
        let pattern = unsafe { CStr::from_ptr(pattern) }.to_string_lossy();
        let statements = match resolve_statements(&[&pattern]) {
            Ok(s) => s,
            Err(e) => return from_error(e),
        };
        match check_all(l, &statements).into_iter().find(|r| !r.holds) {
            None => RcStatus::Ok,
            Some(r) => fail(RcStatus::CheckFailed, r.render(l)),
        }
    })
}

/// Message for the last failed call on this thread, valid until the next
/// call on the same thread. Empty when nothing has failed.
#[no_mangle]
pub extern "C" fn rc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
