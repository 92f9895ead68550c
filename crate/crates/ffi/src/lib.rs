//! C ABI for gridfary.
//!
//! Graphs and drawings are opaque handles created by `gf_*_new` / `gf_draw`
//! / `gf_*_from_json` and released with the matching `gf_*_free`. Every
//! fallible call returns a [`GfStatus`]; on failure `gf_last_error` returns a
//! description that stays valid until the next call on the same thread.
//! Panics never cross the boundary.

use gridfary::embed::{Algorithm, Drawing};
use gridfary::pipeline::{draw_and_certify, DEFAULT_MAX_COORD_BITS};
use gridfary::pythagorean::first_k_primitive;
use gridfary::verify::{certify, Structure};
use gridfary::{io, Error, InputGraph};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Unsupported = 3,
    Overflow = 4,
    VerificationFailed = 5,
    Internal = 6,
    BufferTooSmall = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfAlgorithm {
    /// Chosen from the graph class.
    Auto = 0,
    Star = 1,
    Tree = 2,
    Cactus = 3,
}

/// One drawn edge: `v` sits at `u + (dx, dy)` and `dx² + dy² = length²`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GfEdge {
    pub u: usize,
    pub v: usize,
    pub dx: i64,
    pub dy: i64,
    pub length: u64,
}

/// Opaque graph handle.
pub struct GfGraph {
    inner: InputGraph,
}

/// Opaque drawing handle.
pub struct GfDrawing {
    inner: Drawing,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> GfStatus {
    match e.exit_code() {
        3 => GfStatus::Unsupported,
        4 => GfStatus::Overflow,
        5 => GfStatus::VerificationFailed,
        6 => GfStatus::Internal,
        _ => GfStatus::InvalidInput,
    }
}

fn fail(status: GfStatus, msg: &str) -> GfStatus {
    set_error(msg);
    status
}

/// Run `f`, turning errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), GfStatus>) -> GfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(GfStatus::Panic, "internal panic"),
    }
}

fn lift<T>(r: gridfary::Result<T>) -> Result<T, GfStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), GfStatus> {
    if p.is_null() {
        Err(fail(GfStatus::NullPointer, &format!("{what} is null")))
    } else {
        Ok(())
    }
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, GfStatus> {
    non_null(p, what)?;
    CStr::from_ptr(p).to_str().map_err(|_| fail(GfStatus::InvalidInput, &format!("{what} is not UTF-8")))
}

/// Description of the last failure on this thread, or null after a success.
#[no_mangle]
pub extern "C" fn gf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Build a graph on vertices `0..n` from `m` edges stored as `2m`
/// consecutive endpoint ids.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (may be null when `m == 0`);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_new(n: usize, edges: *const usize, m: usize, out: *mut *mut GfGraph) -> GfStatus {
    guard(|| {
        non_null(out, "out")?;
        let list: Vec<(usize, usize)> = if m == 0 {
            Vec::new()
        } else {
            non_null(edges, "edges")?;
            std::slice::from_raw_parts(edges, 2 * m).chunks_exact(2).map(|c| (c[0], c[1])).collect()
        };
        let g = lift(InputGraph::new(n, list))?;
        *out = Box::into_raw(Box::new(GfGraph { inner: g }));
        Ok(())
    })
}

/// Parse a `grid-fary-graph-v1` document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_from_json(json: *const c_char, out: *mut *mut GfGraph) -> GfStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = c_str(json, "json")?;
        let g = lift(io::parse_graph(text))?;
        *out = Box::into_raw(Box::new(GfGraph { inner: g }));
        Ok(())
    })
}

/// # Safety
/// `graph` must come from `gf_graph_new` or `gf_graph_from_json`.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_set_root(graph: *mut GfGraph, root: usize) -> GfStatus {
    guard(|| {
        non_null(graph, "graph")?;
        let g = &mut *graph;
        g.inner = lift(g.inner.clone().with_root(root))?;
        Ok(())
    })
}

/// Attach a rotation system in compressed form: the neighbours of vertex
/// `v` in cyclic order are `neighbors[offsets[v] .. offsets[v + 1]]`.
///
/// # Safety
/// `offsets` must hold `n + 1` values and `neighbors` `offsets[n]` values.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_set_rotation(graph: *mut GfGraph, offsets: *const usize, neighbors: *const usize) -> GfStatus {
    guard(|| {
        non_null(graph, "graph")?;
        non_null(offsets, "offsets")?;
        let g = &mut *graph;
        let n = g.inner.n();
        let off = std::slice::from_raw_parts(offsets, n + 1);
        if off[0] != 0 || off.windows(2).any(|w| w[0] > w[1]) {
            return Err(fail(GfStatus::InvalidInput, "offsets must start at 0 and be non-decreasing"));
        }
        let all: &[usize] = if off[n] == 0 {
            &[]
        } else {
            non_null(neighbors, "neighbors")?;
            std::slice::from_raw_parts(neighbors, off[n])
        };
        let rotation = (0..n).map(|v| all[off[v]..off[v + 1]].to_vec()).collect();
        g.inner = lift(g.inner.clone().with_rotation(rotation))?;
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn gf_graph_free(graph: *mut GfGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Draw and self-certify. Fails with `VerificationFailed` if the drawing
/// does not pass every check.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_draw(graph: *const GfGraph, algorithm: GfAlgorithm, out: *mut *mut GfDrawing) -> GfStatus {
    guard(|| {
        non_null(graph, "graph")?;
        non_null(out, "out")?;
        let requested = match algorithm {
            GfAlgorithm::Auto => None,
            GfAlgorithm::Star => Some(Algorithm::Star),
            GfAlgorithm::Tree => Some(Algorithm::Tree),
            GfAlgorithm::Cactus => Some(Algorithm::Cactus),
        };
        let (drawn, _) = lift(draw_and_certify(&(*graph).inner, requested, DEFAULT_MAX_COORD_BITS))?;
        *out = Box::into_raw(Box::new(GfDrawing { inner: drawn.drawing }));
        Ok(())
    })
}

/// Parse a `grid-fary-drawing-v1` document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_from_json(json: *const c_char, out: *mut *mut GfDrawing) -> GfStatus {
    guard(|| {
        non_null(out, "out")?;
        let text = c_str(json, "json")?;
        let d = lift(io::parse_drawing(text))?;
        *out = Box::into_raw(Box::new(GfDrawing { inner: d }));
        Ok(())
    })
}

/// # Safety
/// `drawing` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_vertex_count(drawing: *const GfDrawing) -> usize {
    drawing.as_ref().map_or(0, |d| d.inner.positions.len())
}

/// # Safety
/// `drawing` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_edge_count(drawing: *const GfDrawing) -> usize {
    drawing.as_ref().map_or(0, |d| d.inner.edges.len())
}

/// Number of primitive triples the drawing consumed.
///
/// # Safety
/// `drawing` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_triples_used(drawing: *const GfDrawing) -> usize {
    drawing.as_ref().map_or(0, |d| d.inner.triples_used)
}

/// Copy positions as `x0, y0, x1, y1, ...` into `xy`, which holds `len` values.
///
/// # Safety
/// `xy` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_positions(drawing: *const GfDrawing, xy: *mut i64, len: usize) -> GfStatus {
    guard(|| {
        non_null(drawing, "drawing")?;
        non_null(xy, "xy")?;
        let d = &(*drawing).inner;
        if len < 2 * d.positions.len() {
            return Err(fail(GfStatus::BufferTooSmall, &format!("need {} values", 2 * d.positions.len())));
        }
        let dst = std::slice::from_raw_parts_mut(xy, len);
        for (i, p) in d.positions.iter().enumerate() {
            dst[2 * i] = p.x;
            dst[2 * i + 1] = p.y;
        }
        Ok(())
    })
}

/// Copy edge records into `edges`, which holds `len` entries.
///
/// # Safety
/// `edges` must point to `len` writable entries.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_edges(drawing: *const GfDrawing, edges: *mut GfEdge, len: usize) -> GfStatus {
    guard(|| {
        non_null(drawing, "drawing")?;
        non_null(edges, "edges")?;
        let d = &(*drawing).inner;
        if len < d.edges.len() {
            return Err(fail(GfStatus::BufferTooSmall, &format!("need {} entries", d.edges.len())));
        }
        let dst = std::slice::from_raw_parts_mut(edges, len);
        for (slot, e) in dst.iter_mut().zip(&d.edges) {
            *slot = GfEdge { u: e.u, v: e.v, dx: e.dx, dy: e.dy, length: e.length };
        }
        Ok(())
    })
}

/// Serialize as `grid-fary-drawing-v1`. Release the string with `gf_string_free`.
///
/// # Safety
/// `drawing` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_to_json(drawing: *const GfDrawing, out: *mut *mut c_char) -> GfStatus {
    guard(|| {
        non_null(drawing, "drawing")?;
        non_null(out, "out")?;
        let text = io::drawing_to_json(&(*drawing).inner);
        *out = CString::new(text).expect("json has no nul").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be null or come from this library.
#[no_mangle]
pub unsafe extern "C" fn gf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `drawing` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn gf_drawing_free(drawing: *mut GfDrawing) {
    if !drawing.is_null() {
        drop(Box::from_raw(drawing));
    }
}

/// Certify a drawing. With a graph the bound checks run against the
/// drawing's algorithm; without one only integrality and planarity are
/// checked. `passed` receives 1 or 0 and `violations` the violation count;
/// either may be null.
///
/// # Safety
/// `drawing` must be a live handle, `graph` null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gf_verify(
    drawing: *const GfDrawing,
    graph: *const GfGraph,
    passed: *mut i32,
    violations: *mut usize,
) -> GfStatus {
    guard(|| {
        non_null(drawing, "drawing")?;
        let d = &(*drawing).inner;
        let structure = match graph.as_ref() {
            Some(g) => Some(lift(Structure::for_drawing(&g.inner, d, d.algorithm))?),
            None => None,
        };
        let report = lift(certify(d, structure.as_ref()))?;
        if let Some(p) = passed.as_mut() {
            *p = i32::from(report.passed);
        }
        if let Some(v) = violations.as_mut() {
            *v = report.violations.len();
        }
        Ok(())
    })
}

/// Write the first `k` primitive triples as `x, y, ℓ` rows into `out`
/// (`len ≥ 3k`), in generator order or, when `angle_sorted` is non-zero,
/// by increasing slope.
///
/// # Safety
/// `out` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn gf_triples(k: usize, angle_sorted: i32, out: *mut u64, len: usize) -> GfStatus {
    guard(|| {
        non_null(out, "out")?;
        if len < 3 * k {
            return Err(fail(GfStatus::BufferTooSmall, &format!("need {} values", 3 * k)));
        }
        let seq = first_k_primitive(k);
        let triples: Vec<_> = if angle_sorted != 0 {
            seq.angle_sorted_triples()
        } else {
            seq.entries().iter().map(|e| e.triple).collect()
        };
        let dst = std::slice::from_raw_parts_mut(out, len);
        for (i, t) in triples.iter().enumerate() {
            dst[3 * i..3 * i + 3].copy_from_slice(&[t.x, t.y, t.ell]);
        }
        Ok(())
    })
}
