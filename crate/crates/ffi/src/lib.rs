//! C ABI over `eop-core`.
//!
//! Graphs and solutions are opaque heap handles released with the matching
//! `*_free` function. Every fallible call returns an [`EopStatus`]; on
//! failure a description is available from [`eop_last_error_message`] on
//! the same thread. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eop_core::graph::is_eop_set;
use eop_core::io::{parse_graph, Format};
use eop_core::oracle::{SearchBudget, MAX_ORACLE_EDGES};
use eop_core::recognition::{classify, ClassTag};
use eop_core::solver::{solve, ClassChoice, SolvedBy};
use eop_core::{EdgeId, Error, Graph};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EopStatus {
    Ok = 0,
    NotInClass = 1,
    InvalidInput = 2,
    Internal = 3,
    NullPointer = 5,
    BudgetExceeded = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EopFormat {
    Edgelist = 0,
    Dimacs = 1,
}

/// Solver selection; also reports which solver ran.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EopClass {
    Auto = 0,
    ProperInterval = 1,
    Block = 2,
    Split = 3,
    Brute = 4,
}

pub const EOP_CLASS_FLAG_PROPER_INTERVAL: u32 = 1;
pub const EOP_CLASS_FLAG_BLOCK: u32 = 2;
pub const EOP_CLASS_FLAG_SPLIT: u32 = 4;
pub const EOP_CLASS_FLAG_CHORDAL: u32 = 8;

/// Opaque graph handle.
pub struct EopGraph {
    graph: Graph,
}

/// Opaque solution handle.
pub struct EopSolution {
    class: EopClass,
    value: usize,
    witness: Vec<(usize, usize)>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: EopStatus, msg: impl Into<String>) -> EopStatus {
    set_error(msg.into());
    status
}

fn status_of(e: &Error) -> EopStatus {
    match e {
        Error::NotInClass(_) => EopStatus::NotInClass,
        Error::BudgetExceeded { .. } => EopStatus::BudgetExceeded,
        Error::Internal(_) => EopStatus::Internal,
        _ => EopStatus::InvalidInput,
    }
}

/// Runs `f`, converting errors and panics into statuses.
fn guard(f: impl FnOnce() -> Result<(), EopStatus>) -> EopStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EopStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(EopStatus::Internal, "internal panic"),
    }
}

fn from_core(e: Error) -> EopStatus {
    fail(status_of(&e), e.to_string())
}

fn nonnull<T>(p: *const T, name: &str) -> Result<(), EopStatus> {
    if p.is_null() {
        Err(fail(EopStatus::NullPointer, format!("{name} is null")))
    } else {
        Ok(())
    }
}

/// Reads `len` elements; a null pointer is accepted when `len` is 0.
///
/// # Safety
/// `p` must be valid for `len` reads when `len > 0`.
unsafe fn slice<'a, T>(p: *const T, len: usize, name: &str) -> Result<&'a [T], EopStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    nonnull(p, name)?;
    Ok(std::slice::from_raw_parts(p, len))
}

/// Builds a graph on `n` vertices from `m` edges given as `2 * m`
/// consecutive endpoints (0-based). Repeated edges are merged.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null when `m` is 0);
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eop_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut EopGraph,
) -> EopStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = ptr::null_mut();
        let len = m
            .checked_mul(2)
            .ok_or_else(|| fail(EopStatus::InvalidInput, "edge count overflows"))?;
        let flat = slice(edges, len, "edges")?;
        let graph = Graph::new(n, flat.chunks_exact(2).map(|c| (c[0], c[1]))).map_err(from_core)?;
        *out = Box::into_raw(Box::new(EopGraph { graph }));
        Ok(())
    })
}

/// Parses a NUL-terminated graph text in the given format.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eop_graph_parse(
    text: *const c_char,
    format: EopFormat,
    out: *mut *mut EopGraph,
) -> EopStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = ptr::null_mut();
        nonnull(text, "text")?;
        let bytes = CStr::from_ptr(text).to_bytes();
        let format = match format {
            EopFormat::Edgelist => Format::Edgelist,
            EopFormat::Dimacs => Format::Dimacs,
        };
        let graph = parse_graph(bytes, format).map_err(from_core)?;
        *out = Box::into_raw(Box::new(EopGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `g` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eop_graph_free(g: *mut EopGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eop_graph_vertex_count(g: *const EopGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eop_graph_edge_count(g: *const EopGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// Writes a bitwise OR of the `EOP_CLASS_FLAG_*` constants.
///
/// # Safety
/// `g` must be a live handle and `flags` writable.
#[no_mangle]
pub unsafe extern "C" fn eop_classify(g: *const EopGraph, flags: *mut u32) -> EopStatus {
    guard(|| {
        nonnull(g, "graph")?;
        nonnull(flags, "flags")?;
        *flags = classify(&(*g).graph)
            .into_iter()
            .map(|t| match t {
                ClassTag::ProperInterval => EOP_CLASS_FLAG_PROPER_INTERVAL,
                ClassTag::Block => EOP_CLASS_FLAG_BLOCK,
                ClassTag::Split => EOP_CLASS_FLAG_SPLIT,
                ClassTag::Chordal => EOP_CLASS_FLAG_CHORDAL,
                ClassTag::None => 0,
            })
            .fold(0, |a, b| a | b);
        Ok(())
    })
}

/// Solves with the requested class. `oracle_max_edges` bounds the
/// exhaustive fallback (capped at 128).
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn eop_solve(
    g: *const EopGraph,
    class: EopClass,
    oracle_max_edges: usize,
    out: *mut *mut EopSolution,
) -> EopStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = ptr::null_mut();
        nonnull(g, "graph")?;
        let graph = &(*g).graph;
        let choice = match class {
            EopClass::Auto => ClassChoice::Auto,
            EopClass::ProperInterval => ClassChoice::Pig,
            EopClass::Block => ClassChoice::Block,
            EopClass::Split => ClassChoice::Split,
            EopClass::Brute => ClassChoice::Brute,
        };
        let budget = SearchBudget::with_max_edges(oracle_max_edges.min(MAX_ORACLE_EDGES));
        let (by, s) = solve(graph, choice, budget).map_err(from_core)?;
        let mut witness = s.witness.pairs(graph);
        witness.sort_unstable();
        *out = Box::into_raw(Box::new(EopSolution {
            class: match by {
                SolvedBy::ProperInterval => EopClass::ProperInterval,
                SolvedBy::Block => EopClass::Block,
                SolvedBy::Split => EopClass::Split,
                SolvedBy::Brute => EopClass::Brute,
            },
            value: s.value,
            witness,
        }));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eop_solution_free(s: *mut EopSolution) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Packing number, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eop_solution_value(s: *const EopSolution) -> usize {
    s.as_ref().map_or(0, |s| s.value)
}

/// Solver that produced the solution; `EOP_CLASS_AUTO` for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eop_solution_class(s: *const EopSolution) -> EopClass {
    s.as_ref().map_or(EopClass::Auto, |s| s.class)
}

/// Number of witness edges, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn eop_solution_witness_len(s: *const EopSolution) -> usize {
    s.as_ref().map_or(0, |s| s.witness.len())
}

/// Copies the witness as sorted `(u, v)` pairs into `buf`, which holds
/// `capacity` pairs (`2 * capacity` values).
///
/// # Safety
/// `s` must be a live handle; `buf` must be writable for `2 * capacity`
/// values (or null when `capacity` is 0).
#[no_mangle]
pub unsafe extern "C" fn eop_solution_witness(
    s: *const EopSolution,
    buf: *mut usize,
    capacity: usize,
) -> EopStatus {
    guard(|| {
        nonnull(s, "solution")?;
        let s = &*s;
        if capacity < s.witness.len() {
            return Err(fail(
                EopStatus::InvalidInput,
                format!(
                    "buffer holds {capacity} pairs, witness has {}",
                    s.witness.len()
                ),
            ));
        }
        if s.witness.is_empty() {
            return Ok(());
        }
        nonnull(buf, "buf")?;
        let out = std::slice::from_raw_parts_mut(buf, 2 * s.witness.len());
        for (slot, &(u, v)) in out.chunks_exact_mut(2).zip(&s.witness) {
            slot[0] = u;
            slot[1] = v;
        }
        Ok(())
    })
}

/// Checks whether `k` edges, given as `2 * k` endpoints, form an edge open
/// packing of `g`. Naming a non-edge is an input error.
///
/// # Safety
/// `g` must be a live handle, `pairs` readable for `2 * k` values (or null
/// when `k` is 0) and `result` writable.
#[no_mangle]
pub unsafe extern "C" fn eop_is_eop_set(
    g: *const EopGraph,
    pairs: *const usize,
    k: usize,
    result: *mut bool,
) -> EopStatus {
    guard(|| {
        nonnull(g, "graph")?;
        nonnull(result, "result")?;
        let graph = &(*g).graph;
        let len = k
            .checked_mul(2)
            .ok_or_else(|| fail(EopStatus::InvalidInput, "edge count overflows"))?;
        let flat = slice(pairs, len, "pairs")?;
        let ids = flat
            .chunks_exact(2)
            .map(|c| graph.edge_id(c[0], c[1]))
            .collect::<Result<Vec<EdgeId>, Error>>()
            .map_err(from_core)?;
        *result = is_eop_set(graph, &ids).map_err(from_core)?;
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn eop_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
