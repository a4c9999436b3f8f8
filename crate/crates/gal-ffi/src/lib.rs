//! C ABI over the gal library: opaque graph handles, status codes, and
//! string/number outputs, so other languages can bind without Rust types.
//!
//! Conventions:
//! - Every fallible call returns a `GalStatus`; outputs go through pointers
//!   and are written only on `GAL_STATUS_OK`.
//! - Handles from `gal_graph_*` constructors are freed with
//!   `gal_graph_free`; strings returned by this library are freed with
//!   `gal_string_free`.
//! - `gal_last_error_message` describes the most recent failure on the
//!   calling thread; the pointer stays valid until the next failing call on
//!   that thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gal::coloring::{chi, sigma};
use gal::error::Error;
use gal::format::{parse_graph, write_graph};
use gal::graph::{generate, Graph};
use gal::independence::alpha_unweighted;
use gal::packing::alpha_star;
use gal::rational::fmt_short;
use gal::theta::{weighted_theta, ThetaOptions, ThetaVariant};
use gal::weights::Weights;

/// Opaque handle: a graph plus its vertex weights.
pub struct GalGraph {
    graph: Graph,
    weights: Weights,
}

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GalStatus {
    Ok = 0,
    NullPointer = 1,
    Utf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    GuardExceeded = 5,
    SolverFailed = 6,
    Panic = 7,
}

/// Theta-family selector for `gal_theta`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GalThetaVariant {
    Lovasz = 0,
    SchrijverMinus = 1,
    SzegedyPlus = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> GalStatus {
    match e {
        Error::Parse { .. } => GalStatus::Parse,
        Error::InvalidInput(_) | Error::UnknownFamily(_) => GalStatus::InvalidArgument,
        Error::Guard { .. } => GalStatus::GuardExceeded,
        Error::Solver(_) => GalStatus::SolverFailed,
        Error::Io(_) => GalStatus::InvalidArgument,
    }
}

fn guarded(f: impl FnOnce() -> GalStatus) -> GalStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            GalStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, GalStatus> {
    if ptr.is_null() {
        set_error("null string pointer");
        return Err(GalStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string is not valid UTF-8");
        GalStatus::Utf8
    })
}

unsafe fn deref<'a>(g: *const GalGraph) -> Result<&'a GalGraph, GalStatus> {
    if g.is_null() {
        set_error("null graph handle");
        return Err(GalStatus::NullPointer);
    }
    Ok(&*g)
}

fn hand_out(out: *mut *mut GalGraph, value: GalGraph) -> GalStatus {
    if out.is_null() {
        set_error("null output pointer");
        return GalStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    GalStatus::Ok
}

/// Most recent error message for this thread; never null.
#[no_mangle]
pub extern "C" fn gal_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a graph in the `p gal` text format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_parse(
    text: *const c_char,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match parse_graph(text) {
            Ok((graph, weights)) => hand_out(out, GalGraph { graph, weights }),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Builds a named family: cycle, complete, empty, petersen, random.
///
/// # Safety
/// `family` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_generate(
    family: *const c_char,
    n: u32,
    p: f64,
    seed: u64,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| {
        let family = match read_str(family) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match generate(family, n as usize, p, seed) {
            Ok(graph) => {
                let weights = Weights::ones(graph.n());
                hand_out(out, GalGraph { graph, weights })
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_free(g: *mut GalGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn gal_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_vertex_count(g: *const GalGraph, out: *mut u32) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        *out = g.graph.n() as u32;
        GalStatus::Ok
    })
}

/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_edge_count(g: *const GalGraph, out: *mut u64) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        *out = g.graph.edge_count() as u64;
        GalStatus::Ok
    })
}

/// Serializes in the canonical `p gal` format; free with `gal_string_free`.
///
/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_write(g: *const GalGraph, out: *mut *mut c_char) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        match write_graph(&g.graph, &g.weights) {
            Ok(text) => {
                *out = CString::new(text).expect("no NUL in format").into_raw();
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

unsafe fn binary_op(
    a: *const GalGraph,
    b: *const GalGraph,
    out: *mut *mut GalGraph,
    f: impl Fn(&Graph, &Graph) -> Graph,
) -> GalStatus {
    let a = match deref(a) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let b = match deref(b) {
        Ok(g) => g,
        Err(s) => return s,
    };
    let graph = f(&a.graph, &b.graph);
    let weights = a.weights.product(&b.weights);
    hand_out(out, GalGraph { graph, weights })
}

/// # Safety
/// `a` and `b` must be valid handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_strong_product(
    a: *const GalGraph,
    b: *const GalGraph,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| binary_op(a, b, out, |x, y| x.strong_product(y)))
}

/// # Safety
/// `a` and `b` must be valid handles; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_disjunctive_product(
    a: *const GalGraph,
    b: *const GalGraph,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| binary_op(a, b, out, |x, y| x.disjunctive_product(y)))
}

/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_complement(
    g: *const GalGraph,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        let graph = g.graph.complement();
        let weights = g.weights.clone();
        hand_out(out, GalGraph { graph, weights })
    })
}

/// Blow-up with per-vertex multiplicities (`len` must equal the vertex
/// count).
///
/// # Safety
/// `g` must be a valid handle, `multiplicities` must point to `len` values,
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_graph_blowup(
    g: *const GalGraph,
    multiplicities: *const u64,
    len: usize,
    out: *mut *mut GalGraph,
) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if multiplicities.is_null() {
            set_error("null multiplicities");
            return GalStatus::NullPointer;
        }
        let m = std::slice::from_raw_parts(multiplicities, len);
        match g.graph.blowup(m) {
            Ok(graph) => {
                let n = graph.n();
                hand_out(
                    out,
                    GalGraph {
                        graph,
                        weights: Weights::ones(n),
                    },
                )
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Exact independence number (unweighted).
///
/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_alpha(g: *const GalGraph, out: *mut u64) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        match alpha_unweighted(&g.graph) {
            Ok((a, _)) => {
                *out = a;
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Exact fractional packing number as a canonical rational string, e.g.
/// `5/2`; free with `gal_string_free`.
///
/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_alpha_star(g: *const GalGraph, out: *mut *mut c_char) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        match alpha_star(&g.graph) {
            Ok(p) => {
                *out = CString::new(fmt_short(&p.value))
                    .expect("no NUL")
                    .into_raw();
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Exact clique cover number.
///
/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_sigma(g: *const GalGraph, out: *mut u64) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        match sigma(&g.graph) {
            Ok((s, _)) => {
                *out = s as u64;
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Exact chromatic number.
///
/// # Safety
/// `g` must be a valid handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn gal_chi(g: *const GalGraph, out: *mut u64) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if out.is_null() {
            return GalStatus::NullPointer;
        }
        match chi(&g.graph) {
            Ok(c) => {
                *out = c.count as u64;
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Certified theta-family value using the handle's weights; writes the value
/// and the duality gap. Pass `tol_gap <= 0` for the default 1e-7.
///
/// # Safety
/// `g` must be a valid handle; `value` and `gap` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn gal_theta(
    g: *const GalGraph,
    variant: GalThetaVariant,
    tol_gap: f64,
    value: *mut f64,
    gap: *mut f64,
) -> GalStatus {
    guarded(|| {
        let g = match deref(g) {
            Ok(g) => g,
            Err(s) => return s,
        };
        if value.is_null() || gap.is_null() {
            return GalStatus::NullPointer;
        }
        let variant = match variant {
            GalThetaVariant::Lovasz => ThetaVariant::Lovasz,
            GalThetaVariant::SchrijverMinus => ThetaVariant::SchrijverMinus,
            GalThetaVariant::SzegedyPlus => ThetaVariant::SzegedyPlus,
        };
        let mut opts = ThetaOptions::default();
        if tol_gap > 0.0 {
            opts.tol_gap = tol_gap;
        }
        match weighted_theta(&g.graph, variant, &g.weights, &opts) {
            Ok(cert) => {
                *value = cert.value;
                *gap = cert.gap;
                GalStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}
