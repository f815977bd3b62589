//! C interface to the `ryser` toolkit.
//!
//! Hypergraphs and certificates are opaque handles owned by the caller and
//! released with the matching `_free` function. Every entry point returns a
//! [`RyserStatus`]; on failure [`ryser_last_error`] describes the problem
//! until the next call on the same thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ryser::bounds::{self, ConjectureStatus};
use ryser::cli::InstanceFile;
use ryser::covers;
use ryser::generators::{self, RandomOptions};
use ryser::solvers::{tau_s_exact, SolveOptions, SolveStatus};
use ryser::{CoverCertificate, Error, PartitionedHypergraph};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RyserStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Precondition = 3,
    InvalidHypergraph = 4,
    EdgeIndex = 5,
    BudgetExhausted = 6,
    CertificateRejected = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RyserConjecture {
    ProvedTight = 0,
    Proved = 1,
    OpenExceptional = 2,
    Open = 3,
}

/// Opaque handle to an `(r,t)`-graph.
pub struct RyserHypergraph {
    inner: PartitionedHypergraph,
}

/// Opaque handle to a validated cover.
pub struct RyserCertificate {
    inner: CoverCertificate,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Fail(RyserStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::EdgeIndex { .. } => RyserStatus::EdgeIndex,
            Error::TooFewEdges { .. } | Error::Precondition(_) | Error::PartExhausted { .. } => {
                RyserStatus::Precondition
            }
            Error::InvalidArgument(_) => RyserStatus::InvalidArgument,
            Error::InvalidHypergraph(_) => RyserStatus::InvalidHypergraph,
            Error::BudgetExhausted => RyserStatus::BudgetExhausted,
            Error::CertificateRejected(_) => RyserStatus::CertificateRejected,
            _ => RyserStatus::Internal,
        };
        Fail(status, e.to_string())
    }
}

type FfiResult = Result<(), Fail>;

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> FfiResult) -> RyserStatus {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => RyserStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            RyserStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(RyserStatus::NullPointer, format!("{what} is NULL"))
}

unsafe fn hypergraph<'a>(h: *const RyserHypergraph) -> Result<&'a PartitionedHypergraph, Fail> {
    h.as_ref().map(|h| &h.inner).ok_or_else(|| null("hypergraph"))
}

unsafe fn certificate<'a>(c: *const RyserCertificate) -> Result<&'a CoverCertificate, Fail> {
    c.as_ref().map(|c| &c.inner).ok_or_else(|| null("certificate"))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn emit_hypergraph(out: *mut *mut RyserHypergraph, h: PartitionedHypergraph) -> FfiResult {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(RyserHypergraph { inner: h })));
    Ok(())
}

unsafe fn emit_certificate(out: *mut *mut RyserCertificate, c: CoverCertificate) -> FfiResult {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(RyserCertificate { inner: c })));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> FfiResult {
    let s = CString::new(s).map_err(|e| Fail(RyserStatus::Internal, e.to_string()))?;
    write(out, s.into_raw())
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ryser_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn ryser_status_name(status: RyserStatus) -> *const c_char {
    let name: &'static CStr = match status {
        RyserStatus::Ok => c"ok",
        RyserStatus::NullPointer => c"null-pointer",
        RyserStatus::InvalidArgument => c"invalid-argument",
        RyserStatus::Precondition => c"precondition",
        RyserStatus::InvalidHypergraph => c"invalid-hypergraph",
        RyserStatus::EdgeIndex => c"edge-index",
        RyserStatus::BudgetExhausted => c"budget-exhausted",
        RyserStatus::CertificateRejected => c"certificate-rejected",
        RyserStatus::Internal => c"internal",
        RyserStatus::Panic => c"panic",
    };
    name.as_ptr()
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` is NULL or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ryser_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a hypergraph from `r` part sizes and `edge_count * r` row-major
/// local indices.
///
/// # Safety
/// `part_sizes` points to `r` values; `edges` points to `edge_count * r`
/// values (may be NULL when `edge_count` is 0).
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_new(
    part_sizes: *const usize,
    r: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut RyserHypergraph,
) -> RyserStatus {
    guard(|| {
        if part_sizes.is_null() || (edges.is_null() && edge_count > 0) {
            return Err(null("input array"));
        }
        let sizes = std::slice::from_raw_parts(part_sizes, r).to_vec();
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, edge_count * r) };
        let rows = flat.chunks(r.max(1)).map(<[usize]>::to_vec).collect();
        emit_hypergraph(out, PartitionedHypergraph::new(sizes, rows)?)
    })
}

/// Parses an `rtgraph-v1` document.
///
/// # Safety
/// `json` is a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_from_json(
    json: *const c_char,
    out: *mut *mut RyserHypergraph,
) -> RyserStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Fail(RyserStatus::InvalidArgument, e.to_string()))?;
        emit_hypergraph(out, InstanceFile::parse(text)?.to_hypergraph()?)
    })
}

/// Canonical `rtgraph-v1` text; free with [`ryser_string_free`].
///
/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_to_json(h: *const RyserHypergraph, out: *mut *mut c_char) -> RyserStatus {
    guard(|| emit_string(out, InstanceFile::from_hypergraph(hypergraph(h)?, None).to_canonical_json()))
}

/// # Safety
/// `h` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_free(h: *mut RyserHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` is a live handle; each output pointer is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_shape(
    h: *const RyserHypergraph,
    out_r: *mut usize,
    out_edges: *mut usize,
    out_vertices: *mut usize,
) -> RyserStatus {
    guard(|| {
        let h = hypergraph(h)?;
        for (p, v) in [(out_r, h.r()), (out_edges, h.edge_count()), (out_vertices, h.vertex_count())] {
            if !p.is_null() {
                p.write(v);
            }
        }
        Ok(())
    })
}

/// Copies the `r` local indices of edge `e` into `out`.
///
/// # Safety
/// `h` is a live handle; `out` has room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn ryser_hypergraph_edge(
    h: *const RyserHypergraph,
    e: usize,
    out: *mut usize,
    len: usize,
) -> RyserStatus {
    guard(|| {
        let h = hypergraph(h)?;
        if e >= h.edge_count() {
            return Err(Error::EdgeIndex { index: e, count: h.edge_count() }.into());
        }
        if out.is_null() {
            return Err(null("output array"));
        }
        if len < h.r() {
            return Err(Fail(RyserStatus::InvalidArgument, format!("buffer holds {len} < r = {}", h.r())));
        }
        ptr::copy_nonoverlapping(h.edge(e).as_ptr(), out, h.r());
        Ok(())
    })
}

/// Smallest pairwise intersection and the first pair attaining it.
///
/// # Safety
/// `h` is a live handle; `out_t` is writable; the pair outputs may be NULL.
#[no_mangle]
pub unsafe extern "C" fn ryser_min_intersection(
    h: *const RyserHypergraph,
    out_t: *mut usize,
    out_e1: *mut usize,
    out_e2: *mut usize,
) -> RyserStatus {
    guard(|| {
        let (t, (e1, e2)) = hypergraph(h)?.min_pairwise_intersection()?;
        for (p, v) in [(out_e1, e1), (out_e2, e2)] {
            if !p.is_null() {
                p.write(v);
            }
        }
        write(out_t, t)
    })
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_generate_level(r: usize, ell: usize, out: *mut *mut RyserHypergraph) -> RyserStatus {
    guard(|| emit_hypergraph(out, generators::h_r_ell(r, ell)?.0))
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_generate_truncated_plane(q: usize, out: *mut *mut RyserHypergraph) -> RyserStatus {
    guard(|| emit_hypergraph(out, generators::truncated_projective_plane(q)?.0))
}

/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_generate_affine_dual(q: usize, n: usize, out: *mut *mut RyserHypergraph) -> RyserStatus {
    guard(|| emit_hypergraph(out, generators::affine_lines_dual(q, n)?.0))
}

/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_generate_blowup(
    h: *const RyserHypergraph,
    t: usize,
    out: *mut *mut RyserHypergraph,
) -> RyserStatus {
    guard(|| emit_hypergraph(out, generators::blowup(hypergraph(h)?, t)?))
}

/// Seeded random `(r,t)`-graph with parts of size `r`.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_generate_random(
    r: usize,
    t: usize,
    target_edges: usize,
    seed: u64,
    out: *mut *mut RyserHypergraph,
) -> RyserStatus {
    guard(|| emit_hypergraph(out, generators::random_rt_graph(r, t, target_edges, seed, RandomOptions::default())?.0))
}

/// Exact s-cover number. `budget` 0 means unlimited; when the budget runs
/// out `out_exact` is false and `out_value` holds the best size found.
/// `out_witness` may be NULL.
///
/// # Safety
/// `h` is a live handle; `out_value` and `out_exact` are writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_tau_s(
    h: *const RyserHypergraph,
    s: usize,
    budget: u64,
    out_value: *mut usize,
    out_exact: *mut bool,
    out_witness: *mut *mut RyserCertificate,
) -> RyserStatus {
    guard(|| {
        let opts = SolveOptions { step_budget: (budget > 0).then_some(budget), ..SolveOptions::default() };
        let sol = tau_s_exact(hypergraph(h)?, s, opts)?;
        write(out_value, sol.value)?;
        write(out_exact, sol.status == SolveStatus::Exact)?;
        if !out_witness.is_null() {
            emit_certificate(out_witness, sol.witness)?;
        }
        Ok(())
    })
}

/// Smallest cover among the constructive routes that apply.
///
/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_general_cover(
    h: *const RyserHypergraph,
    t: usize,
    out: *mut *mut RyserCertificate,
) -> RyserStatus {
    guard(|| emit_certificate(out, covers::general_cover(hypergraph(h)?, t)?))
}

/// # Safety
/// `h` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_kwise_cover(
    h: *const RyserHypergraph,
    k: usize,
    t: usize,
    out: *mut *mut RyserCertificate,
) -> RyserStatus {
    guard(|| emit_certificate(out, covers::kwise_cover(hypergraph(h)?, k, t)?))
}

/// # Safety
/// `c` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_certificate_size(c: *const RyserCertificate, out: *mut usize) -> RyserStatus {
    guard(|| write(out, certificate(c)?.size()))
}

/// Copies the cover's vertices as (part, index) pairs into two arrays.
///
/// # Safety
/// `c` is a live handle; `parts` and `indices` have room for `len` values.
#[no_mangle]
pub unsafe extern "C" fn ryser_certificate_vertices(
    c: *const RyserCertificate,
    parts: *mut usize,
    indices: *mut usize,
    len: usize,
) -> RyserStatus {
    guard(|| {
        let c = certificate(c)?;
        if parts.is_null() || indices.is_null() {
            return Err(null("output array"));
        }
        if len < c.size() {
            return Err(Fail(RyserStatus::InvalidArgument, format!("buffers hold {len} < {}", c.size())));
        }
        for (i, v) in c.vertices.iter().enumerate() {
            parts.add(i).write(v.part);
            indices.add(i).write(v.index);
        }
        Ok(())
    })
}

/// Construction tag such as `two-edge/case-1`; free with [`ryser_string_free`].
///
/// # Safety
/// `c` is a live handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_certificate_provenance(c: *const RyserCertificate, out: *mut *mut c_char) -> RyserStatus {
    guard(|| emit_string(out, certificate(c)?.provenance.to_string()))
}

/// Re-checks the certificate against `h` by a full scan.
///
/// # Safety
/// `c` and `h` are live handles; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_certificate_validate(
    c: *const RyserCertificate,
    h: *const RyserHypergraph,
    out: *mut bool,
) -> RyserStatus {
    guard(|| write(out, certificate(c)?.is_valid_for(hypergraph(h)?)))
}

/// # Safety
/// `c` is NULL or a live handle, not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ryser_certificate_free(c: *mut RyserCertificate) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Lower and best upper bound on the largest cover number of `(r,t)`-graphs.
///
/// # Safety
/// Both outputs are writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_bounds(r: i64, t: i64, out_lower: *mut i64, out_upper: *mut i64) -> RyserStatus {
    guard(|| {
        let lower = bounds::lower_bound(r, t)?.value;
        let upper = bounds::upper_bound(r, t)?.value;
        write(out_lower, lower)?;
        write(out_upper, upper)
    })
}

/// Status of `τ <= r - t` at `(r, t)`; `out_not_tight` may be NULL.
///
/// # Safety
/// `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn ryser_conjecture_status(
    r: i64,
    t: i64,
    out: *mut RyserConjecture,
    out_not_tight: *mut bool,
) -> RyserStatus {
    guard(|| {
        let report = bounds::conjecture_status(r, t)?;
        let status = match report.status {
            ConjectureStatus::ProvedTight => RyserConjecture::ProvedTight,
            ConjectureStatus::Proved => RyserConjecture::Proved,
            ConjectureStatus::OpenExceptional => RyserConjecture::OpenExceptional,
            ConjectureStatus::Open => RyserConjecture::Open,
        };
        if !out_not_tight.is_null() {
            out_not_tight.write(report.not_tight);
        }
        write(out, status)
    })
}
