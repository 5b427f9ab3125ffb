//! C ABI over `zf-core`.
//!
//! Graphs are opaque `ZfGraph` handles released with [`zf_graph_free`].
//! Every fallible call returns a [`ZfStatus`]; on failure the message is
//! available from [`zf_last_error`] on the same thread. Vertex indices are
//! 0-based throughout.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use zf_core::{
    build_functigraph, is_zero_forcing, parse_function_spec, path_cover_number,
    zero_forcing_number_capped, Caps, Error, FamilySpec, Graph, VertexFunction, VertexSet,
};

/// Result codes. The numeric values match the `zf` exit codes where they overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    CapExceeded = 3,
    BufferTooSmall = 4,
    Panic = 5,
}

/// Opaque graph handle.
pub struct ZfGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn from_error(e: Error) -> ZfStatus {
    let status = if e.exit_code() == 3 {
        ZfStatus::CapExceeded
    } else {
        ZfStatus::InvalidInput
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> Result<(), ZfStatus>) -> ZfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => ZfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic".into());
            ZfStatus::Panic
        }
    }
}

fn null(what: &str) -> ZfStatus {
    set_error(format!("{what} is null"));
    ZfStatus::NullPointer
}

unsafe fn graph_ref<'a>(g: *const ZfGraph) -> Result<&'a Graph, ZfStatus> {
    g.as_ref().map(|h| &h.graph).ok_or_else(|| null("graph"))
}

unsafe fn slice<'a, T>(p: *const T, len: usize, what: &str) -> Result<&'a [T], ZfStatus> {
    if len == 0 {
        Ok(&[])
    } else if p.is_null() {
        Err(null(what))
    } else {
        Ok(std::slice::from_raw_parts(p, len))
    }
}

unsafe fn c_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, ZfStatus> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error(format!("{what} is not UTF-8"));
        ZfStatus::InvalidInput
    })
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), ZfStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn boxed(graph: Graph) -> *mut ZfGraph {
    Box::into_raw(Box::new(ZfGraph { graph }))
}

fn caps() -> Result<Caps, ZfStatus> {
    Caps::from_env().map_err(from_error)
}

fn to_set(g: &Graph, vertices: &[usize]) -> Result<VertexSet, ZfStatus> {
    for &v in vertices {
        g.check_vertex(v).map_err(from_error)?;
    }
    Ok(vertices.iter().collect())
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`2 * edge_count` entries).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or may be null
/// when `edge_count` is 0) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_new(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        let flat = slice(edges, 2 * edge_count, "edges")?;
        let pairs = flat.chunks_exact(2).map(|p| (p[0], p[1]));
        let g = Graph::from_edges(n, pairs).map_err(from_error)?;
        put(out, boxed(g), "out")
    })
}

/// Builds a named family: `P:n`, `C:n`, `K:n`, `petersen`, `bouquet:k`, `star:n`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_family(spec: *const c_char, out: *mut *mut ZfGraph) -> ZfStatus {
    guard(|| {
        let spec: FamilySpec = c_str(spec, "spec")?.parse().map_err(from_error)?;
        let g = Graph::family(spec).map_err(from_error)?;
        put(out, boxed(g), "out")
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from this library and must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_free(g: *mut ZfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_order(g: *const ZfGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Number of edges, 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn zf_graph_size(g: *const ZfGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.size())
}

/// Exact zero forcing number. When `witness` is non-null, a minimum forcing
/// set is written there in ascending order; `witness_capacity` must be at
/// least the zero forcing number, otherwise `BufferTooSmall` is returned
/// with `*z` still set.
///
/// # Safety
/// `g` must be a live handle, `z` writable, and `witness` null or writable
/// for `witness_capacity` values.
#[no_mangle]
pub unsafe extern "C" fn zf_zero_forcing_number(
    g: *const ZfGraph,
    z: *mut usize,
    witness: *mut usize,
    witness_capacity: usize,
) -> ZfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = zero_forcing_number_capped(g, None, &caps()?).map_err(from_error)?;
        put(z, r.z, "z")?;
        if !witness.is_null() {
            if witness_capacity < r.z {
                set_error(format!(
                    "witness buffer holds {witness_capacity}, need {}",
                    r.z
                ));
                return Err(ZfStatus::BufferTooSmall);
            }
            for (i, v) in r.witness.iter().enumerate() {
                witness.add(i).write(v);
            }
        }
        Ok(())
    })
}

/// Whether `vertices` is a zero forcing set.
///
/// # Safety
/// `g` must be a live handle, `vertices` readable for `len` values (or null
/// when `len` is 0), and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_is_zero_forcing(
    g: *const ZfGraph,
    vertices: *const usize,
    len: usize,
    result: *mut bool,
) -> ZfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let s = to_set(g, slice(vertices, len, "vertices")?)?;
        let forcing = is_zero_forcing(g, s).map_err(from_error)?;
        put(result, forcing, "result")
    })
}

/// Path cover number.
///
/// # Safety
/// `g` must be a live handle and `p` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_path_cover_number(g: *const ZfGraph, p: *mut usize) -> ZfStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let r = path_cover_number(g, &caps()?).map_err(from_error)?;
        put(p, r.p, "p")
    })
}

/// Builds `C(G, f)` from 0-based images `f(i) = images[i]`. Copy-1 vertex
/// `i` is `i` in the result and copy-2 vertex `i` is `n + i`.
///
/// # Safety
/// `base` must be a live handle, `images` readable for `len` values, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_functigraph(
    base: *const ZfGraph,
    images: *const usize,
    len: usize,
    out: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        let g = graph_ref(base)?;
        let f = VertexFunction::from_images(slice(images, len, "images")?.to_vec())
            .map_err(from_error)?;
        let fg = build_functigraph(g, &f).map_err(from_error)?;
        put(out, boxed(fg.whole), "out")
    })
}

/// As [`zf_functigraph`], with the function given as a spec string
/// (`id`, `const:j`, `list:..`, `perm:..`, `mod:k`, `swap`, `bouquetmap`).
///
/// # Safety
/// `base` must be a live handle, `spec` NUL-terminated, and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zf_functigraph_spec(
    base: *const ZfGraph,
    spec: *const c_char,
    out: *mut *mut ZfGraph,
) -> ZfStatus {
    guard(|| {
        let g = graph_ref(base)?;
        let f = parse_function_spec(c_str(spec, "spec")?, g.order()).map_err(from_error)?;
        let fg = build_functigraph(g, &f).map_err(from_error)?;
        put(out, boxed(fg.whole), "out")
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn zf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
