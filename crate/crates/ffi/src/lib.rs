//! C interface to `nefhodge`.
//!
//! Objects are opaque handles created by `nh_*` constructors and released by
//! the matching `*_free`. Every fallible call returns an [`NhStatus`]; on
//! failure the message is available from [`nh_last_error`] on the same
//! thread. Results are written through out-pointers only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use nefhodge::hodge::{string_hodge, HodgeData};
use nefhodge::nefpart::{enumerate_nef_partitions, NefPartition};
use nefhodge::polytope::io::parse_polytope;
use nefhodge::polytope::{LatticePolytope, Side};
use nefhodge::weights::{cy_polytope, Mode, WeightBlock};
use nefhodge::Error;

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Parse = 3,
    Io = 4,
    NotReflexive = 5,
    OriginNotInterior = 6,
    Overflow = 7,
    OutOfRange = 8,
    /// An internal consistency check failed.
    Inconsistent = 9,
    Panic = 10,
}

/// Combination of Newton polytopes for a weight block.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NhMode {
    Full = 0,
    Minkowski = 1,
}

/// A lattice polytope.
pub struct NhPolytope(LatticePolytope);

/// The nef partitions of a reflexive polytope.
pub struct NhPartitions(Vec<NefPartition>);

/// Hodge numbers of one complete intersection.
pub struct NhHodge(HodgeData);

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| {
        let mut buf = e.borrow_mut();
        buf.clear();
        buf.extend(msg.bytes().filter(|&b| b != 0));
    });
}

fn status_of(e: &Error) -> NhStatus {
    match e {
        Error::Overflow => NhStatus::Overflow,
        Error::NotReflexive => NhStatus::NotReflexive,
        Error::OriginNotInterior => NhStatus::OriginNotInterior,
        Error::Parse { .. } => NhStatus::Parse,
        Error::Io(_) => NhStatus::Io,
        Error::CapExceeded(_) | Error::ExponentOutOfRange(..) => NhStatus::OutOfRange,
        Error::PartInconsistent(_)
        | Error::DualityMismatch(_)
        | Error::NotEulerian(..)
        | Error::RecursionInconsistent(_)
        | Error::NotPolynomial(_)
        | Error::NegativeHodge { .. }
        | Error::HodgeSymmetry(_)
        | Error::NonExactDivision => NhStatus::Inconsistent,
        _ => NhStatus::InvalidInput,
    }
}

fn guard(f: impl FnOnce() -> Result<(), (NhStatus, String)>) -> NhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => NhStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            NhStatus::Panic
        }
    }
}

fn lib<T>(r: nefhodge::Result<T>) -> Result<T, (NhStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (NhStatus, String) {
    (NhStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (NhStatus, String)> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, (NhStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (NhStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), (NhStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Copy the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`). Returns the full message length without the NUL.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn nh_last_error(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr(), buf as *mut u8, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn nh_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Convex hull of `count` points of dimension `dim`, stored row by row in
/// `coords`.
///
/// # Safety
/// `coords` must point to `dim * count` integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_from_points(
    dim: usize,
    coords: *const i64,
    count: usize,
    out: *mut *mut NhPolytope,
) -> NhStatus {
    guard(|| {
        if coords.is_null() && dim * count > 0 {
            return Err(null("coords"));
        }
        if dim == 0 || count == 0 {
            return Err((NhStatus::InvalidInput, "need at least one point of positive dimension".into()));
        }
        let flat = std::slice::from_raw_parts(coords, dim * count);
        let pts: Vec<Vec<i64>> = flat.chunks(dim).map(<[i64]>::to_vec).collect();
        let p = lib(LatticePolytope::from_points(Side::M, dim, &pts))?;
        put(out, Box::into_raw(Box::new(NhPolytope(p))))
    })
}

/// Parse a polytope in the text format of the command-line tool.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_parse(source: *const c_char, out: *mut *mut NhPolytope) -> NhStatus {
    guard(|| {
        let s = text(source, "text")?;
        let p = lib(parse_polytope(s, Side::M))?;
        put(out, Box::into_raw(Box::new(NhPolytope(p))))
    })
}

/// The Calabi-Yau polytope of a weight block given in its text format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_from_weights(
    source: *const c_char,
    mode: NhMode,
    out: *mut *mut NhPolytope,
) -> NhStatus {
    guard(|| {
        let s = text(source, "text")?;
        let block = lib(WeightBlock::parse(s))?;
        let mode = match mode {
            NhMode::Full => Mode::Full,
            NhMode::Minkowski => Mode::Minkowski,
        };
        let p = lib(cy_polytope(&block, mode))?;
        put(out, Box::into_raw(Box::new(NhPolytope(p))))
    })
}

/// # Safety
/// `p` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_free(p: *mut NhPolytope) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Ambient dimension, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_dim(p: *const NhPolytope) -> usize {
    p.as_ref().map_or(0, |p| p.0.dim())
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_vertex_count(p: *const NhPolytope) -> usize {
    p.as_ref().map_or(0, |p| p.0.vertices().len())
}

/// Number of lattice points.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_point_count(p: *const NhPolytope, out: *mut usize) -> NhStatus {
    guard(|| {
        let n = lib(deref(p, "polytope")?.0.count_lattice_points())?;
        put(out, n)
    })
}

/// Whether the polytope is reflexive.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_is_reflexive(p: *const NhPolytope, out: *mut bool) -> NhStatus {
    guard(|| put(out, deref(p, "polytope")?.0.is_reflexive()))
}

/// The dual polytope.
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_polytope_dual(p: *const NhPolytope, out: *mut *mut NhPolytope) -> NhStatus {
    guard(|| {
        let d = lib(deref(p, "polytope")?.0.dual())?;
        put(out, Box::into_raw(Box::new(NhPolytope(d))))
    })
}

/// Nef partitions of codimension `r` of the reflexive polytope `delta`,
/// one per unordered partition of the vertices of its dual.
///
/// # Safety
/// `delta` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_nef_partitions(
    delta: *const NhPolytope,
    r: usize,
    out: *mut *mut NhPartitions,
) -> NhStatus {
    guard(|| {
        let delta = &deref(delta, "polytope")?.0;
        if !delta.is_reflexive() {
            return lib(Err(Error::NotReflexive));
        }
        let dual = lib(delta.dual())?;
        let parts = lib(enumerate_nef_partitions(&dual, r))?;
        put(out, Box::into_raw(Box::new(NhPartitions(parts))))
    })
}

/// Number of partitions, or 0 for a null handle.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nh_partitions_len(list: *const NhPartitions) -> usize {
    list.as_ref().map_or(0, |l| l.0.len())
}

/// # Safety
/// `list` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nh_partitions_free(list: *mut NhPartitions) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// String-theoretic Hodge numbers of partition `index`.
///
/// # Safety
/// `list` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_hodge_compute(list: *const NhPartitions, index: usize, out: *mut *mut NhHodge) -> NhStatus {
    guard(|| {
        let list = &deref(list, "partition list")?.0;
        let p = list
            .get(index)
            .ok_or_else(|| (NhStatus::OutOfRange, format!("index {index} of {}", list.len())))?;
        let sh = lib(string_hodge(p))?;
        put(out, Box::into_raw(Box::new(NhHodge(sh.hodge))))
    })
}

/// # Safety
/// `h` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn nh_hodge_free(h: *mut NhHodge) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Dimension `n` of the variety, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn nh_hodge_dim(h: *const NhHodge) -> usize {
    h.as_ref().map_or(0, |h| h.0.n)
}

/// `h^{p,q}` for `0 ≤ p, q ≤ n`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_hodge_get(h: *const NhHodge, p: usize, q: usize, out: *mut i64) -> NhStatus {
    guard(|| {
        let h = &deref(h, "hodge")?.0;
        if p > h.n || q > h.n {
            return Err((NhStatus::OutOfRange, format!("({p}, {q}) outside [0, {}]", h.n)));
        }
        put(out, h.get(p, q))
    })
}

/// Euler characteristic.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn nh_hodge_euler(h: *const NhHodge, out: *mut i64) -> NhStatus {
    guard(|| put(out, deref(h, "hodge")?.0.chi))
}
