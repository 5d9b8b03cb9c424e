//! C ABI over the `qtau` library.
//!
//! Exact values cross the boundary as `"p/q"` strings owned by the library;
//! release them with [`qtau_string_free`]. Point sets and chains are opaque
//! handles with matching `*_free` functions. Every fallible call returns a
//! [`QtauStatus`]; the message for the last failure on the calling thread is
//! available from [`qtau_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qtau::algebra::scalar::{format_scalar, parse_scalar, Scalar};
use qtau::bethe::solve_phase;
use qtau::fock::{Chain, Model};
use qtau::phase_model::{correlation_am, scalar_product, BoxSpec, CorrelationMode, ScalarMode};
use qtau::qboson_model::{scalar_product_q, QBosonSpec, QScalarMode};
use qtau::suite::{emit_report, run_suite, ReportFormat, SuiteConfig, SuiteName};
use qtau::symfunc::{kostka_tables, PointSet};
use qtau::Error;

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtauStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    SizeCap = 4,
    Singular = 5,
    NoConvergence = 6,
    Unsupported = 7,
    Internal = 8,
}

/// Which closed form to evaluate for the phase-chain scalar product.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtauScalarMode {
    Det = 0,
    SchurSum = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtauQScalarMode {
    HlSum = 0,
    DetQuotient = 1,
    BigSchur = 2,
    TwistedSchur = 3,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QtauCorrelationMode {
    Det = 0,
    SkewSum = 1,
}

/// Opaque set of exact spectral points.
pub struct QtauPointSet(PointSet);

/// Opaque occupation-basis chain used for brute-force pairings.
pub struct QtauChain(Chain<Scalar>);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QtauStatus {
    match e {
        Error::Parse { .. } | Error::InvalidPartition(_) => QtauStatus::Parse,
        Error::SizeCap { .. } => QtauStatus::SizeCap,
        Error::Singular(_) | Error::SingularJacobian => QtauStatus::Singular,
        Error::NoConvergence { .. } => QtauStatus::NoConvergence,
        Error::Unsupported(_) | Error::Parity(_) => QtauStatus::Unsupported,
        Error::Io(_) | Error::Json(_) => QtauStatus::Internal,
        _ => QtauStatus::InvalidArgument,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (QtauStatus, String)>) -> QtauStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QtauStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            QtauStatus::Internal
        }
    }
}

fn lib<T>(r: qtau::Result<T>) -> Result<T, (QtauStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

fn null(what: &str) -> (QtauStatus, String) {
    (QtauStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (QtauStatus, String)> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (QtauStatus::Parse, format!("{what} is not UTF-8")))
}

unsafe fn read_points<'a>(p: *const QtauPointSet, what: &str) -> Result<&'a PointSet, (QtauStatus, String)> {
    p.as_ref().map(|h| &h.0).ok_or_else(|| null(what))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (QtauStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| (QtauStatus::Internal, "interior NUL in output".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qtau_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn qtau_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qtau_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a comma-separated list of rationals such as `"1/2,-3,2/5"`.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_points_parse(text: *const c_char, out: *mut *mut QtauPointSet) -> QtauStatus {
    guard(|| {
        let s = read_str(text, "text")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let p = lib(PointSet::parse(s))?;
        *out = Box::into_raw(Box::new(QtauPointSet(p)));
        Ok(())
    })
}

/// Number of points, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn qtau_points_len(p: *const QtauPointSet) -> usize {
    p.as_ref().map_or(0, |h| h.0.len())
}

/// # Safety
/// `p` must be null or a handle from [`qtau_points_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtau_points_free(p: *mut QtauPointSet) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Phase-chain scalar product over the `[N, M]` box, `N = |x| = |y|`.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_scalar_product(
    x: *const QtauPointSet,
    y: *const QtauPointSet,
    m: usize,
    mode: QtauScalarMode,
    out: *mut *mut c_char,
) -> QtauStatus {
    guard(|| {
        let (x, y) = (read_points(x, "x")?, read_points(y, "y")?);
        let mode = match mode {
            QtauScalarMode::Det => ScalarMode::Det,
            QtauScalarMode::SchurSum => ScalarMode::SchurSum,
        };
        let v = lib(scalar_product(x, y, BoxSpec::new(x.len(), m), mode))?;
        write_string(out, format_scalar(&v))
    })
}

/// q-boson scalar product; `q` is a rational string.
///
/// # Safety
/// Handles must be live; `q` a valid C string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_scalar_product_q(
    x: *const QtauPointSet,
    y: *const QtauPointSet,
    m: usize,
    q: *const c_char,
    mode: QtauQScalarMode,
    out: *mut *mut c_char,
) -> QtauStatus {
    guard(|| {
        let (x, y) = (read_points(x, "x")?, read_points(y, "y")?);
        let q = lib(parse_scalar(read_str(q, "q")?))?;
        let mode = match mode {
            QtauQScalarMode::HlSum => QScalarMode::HlSum,
            QtauQScalarMode::DetQuotient => QScalarMode::DetQuotient,
            QtauQScalarMode::BigSchur => QScalarMode::BigSchur,
            QtauQScalarMode::TwistedSchur => QScalarMode::TwistedSchur,
        };
        let v = lib(scalar_product_q(x, y, &QBosonSpec::new(x.len(), m, q), mode))?;
        write_string(out, format_scalar(&v))
    })
}

/// Phase-chain correlation with a creation operator at `site`; `|y| = |x| − 1`.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_correlation(
    x: *const QtauPointSet,
    y: *const QtauPointSet,
    m: usize,
    site: usize,
    mode: QtauCorrelationMode,
    out: *mut *mut c_char,
) -> QtauStatus {
    guard(|| {
        let (x, y) = (read_points(x, "x")?, read_points(y, "y")?);
        let mode = match mode {
            QtauCorrelationMode::Det => CorrelationMode::Det,
            QtauCorrelationMode::SkewSum => CorrelationMode::SkewSum,
        };
        let v = lib(correlation_am(x, y, site, BoxSpec::new(x.len(), m), mode))?;
        write_string(out, format_scalar(&v))
    })
}

/// Builds an occupation-basis chain on sites `0..=m` with up to `bound`
/// particles. `q` null selects the phase chain, otherwise the q-boson chain.
///
/// # Safety
/// `q` must be null or a valid C string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_chain_new(q: *const c_char, m: usize, bound: usize, out: *mut *mut QtauChain) -> QtauStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let model = if q.is_null() { Model::Phase } else { Model::QBoson(lib(parse_scalar(read_str(q, "q")?))?) };
        *out = Box::into_raw(Box::new(QtauChain(Chain::new(model, m, bound))));
        Ok(())
    })
}

/// # Safety
/// `c` must be null or a handle from [`qtau_chain_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn qtau_chain_free(c: *mut QtauChain) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Vacuum pairing of annihilation strings at `x` with creation strings at
/// `y`; `site < 0` means no inserted creation operator.
///
/// # Safety
/// Handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_chain_pairing(
    chain: *const QtauChain,
    x: *const QtauPointSet,
    y: *const QtauPointSet,
    site: i64,
    out: *mut *mut c_char,
) -> QtauStatus {
    guard(|| {
        let chain = chain.as_ref().map(|c| &c.0).ok_or_else(|| null("chain"))?;
        let (x, y) = (read_points(x, "x")?, read_points(y, "y")?);
        if x.len() > chain.basis().bound() {
            return Err((QtauStatus::InvalidArgument, format!("{} particles exceed the chain bound {}", x.len(), chain.basis().bound())));
        }
        let insertion = usize::try_from(site).ok();
        let v = lib(chain.pairing(x.points(), y.points(), insertion))?;
        write_string(out, format_scalar(&v))
    })
}

/// Kostka-Foulkes tables of weight `d` as JSON.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn qtau_kostka_json(d: usize, out: *mut *mut c_char) -> QtauStatus {
    guard(|| {
        if d > 10 {
            return Err((QtauStatus::SizeCap, format!("weight {d} exceeds 10")));
        }
        let t = kostka_tables(d);
        let s = serde_json::to_string(&*t).map_err(|e| (QtauStatus::Internal, e.to_string()))?;
        write_string(out, s)
    })
}

/// Phase-chain Bethe roots for the given quantum numbers. Writes `2 n`
/// doubles (real, imaginary interleaved) to `roots` and the residual to `residual`.
///
/// # Safety
/// `qn` must point to `n` integers, `roots` to room for `2 n` doubles.
#[no_mangle]
pub unsafe extern "C" fn qtau_bethe_phase(n: usize, m: usize, qn: *const i64, roots: *mut f64, residual: *mut f64) -> QtauStatus {
    guard(|| {
        if qn.is_null() || roots.is_null() || residual.is_null() {
            return Err(null("argument"));
        }
        let qn = std::slice::from_raw_parts(qn, n);
        let r = lib(solve_phase(n, m, qn))?;
        let dst = std::slice::from_raw_parts_mut(roots, 2 * n);
        for (i, z) in r.roots.iter().enumerate() {
            dst[2 * i] = z.re;
            dst[2 * i + 1] = z.im;
        }
        *residual = r.residual;
        Ok(())
    })
}

/// Runs a named identity suite with default bounds and writes its JSON report.
/// `all_pass` receives 1 if every check passed, else 0.
///
/// # Safety
/// `suite` must be a valid C string; `out` and `all_pass` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn qtau_run_suite(suite: *const c_char, seed: u64, out: *mut *mut c_char, all_pass: *mut i32) -> QtauStatus {
    guard(|| {
        let name = lib(SuiteName::parse(read_str(suite, "suite")?))?;
        if all_pass.is_null() {
            return Err(null("all_pass"));
        }
        let mut cfg = SuiteConfig::defaults(name);
        cfg.seed = seed;
        let report = lib(run_suite(&cfg))?;
        *all_pass = i32::from(report.all_pass);
        write_string(out, lib(emit_report(&report, ReportFormat::Json))?)
    })
}
