//! C ABI over the toolkit.
//!
//! Objects cross the boundary as opaque handles created by `ds_*_new`,
//! `ds_*_load` or computing functions and released by the matching
//! `ds_*_free`. Every fallible function returns a [`DsStatus`]; on failure
//! [`ds_last_error`] describes the problem until the next call on the same
//! thread. Panics are caught and reported as [`DsStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use diskscat::contrast::ContrastGrid;
use diskscat::farfield::{DirectionSet, FarFieldMatrix};
use diskscat::forward::ForwardSolver;
use diskscat::inverse;
use diskscat::io;
use diskscat::pipeline::{self, PolarGrid, ProcessedData};
use diskscat::pswf::{build_basis, PswfBasis};
use diskscat::{Error, ErrorCategory};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DsStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// Invalid parameters or indices.
    InvalidArgument = 2,
    /// Malformed, missing or mismatched data.
    DataError = 3,
    /// A numerical check or solver failed.
    NumericalError = 4,
    /// An internal panic was caught.
    Panic = 5,
}

/// PSWF basis.
pub struct DsBasis(PswfBasis);
/// Contrast on a Cartesian grid.
pub struct DsContrast(ContrastGrid);
/// Far-field matrix.
pub struct DsFarField(FarFieldMatrix);
/// Processed data on a polar grid.
pub struct DsProcessed(ProcessedData);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> DsStatus {
    match err.category() {
        ErrorCategory::User => DsStatus::InvalidArgument,
        ErrorCategory::Data => DsStatus::DataError,
        ErrorCategory::Numerical => DsStatus::NumericalError,
    }
}

/// Run `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), DsStatusError>) -> DsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DsStatus::Ok,
        Ok(Err(DsStatusError::Null(what))) => {
            set_error(format!("null pointer: {what}"));
            DsStatus::NullPointer
        }
        Ok(Err(DsStatusError::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            DsStatus::Panic
        }
    }
}

enum DsStatusError {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for DsStatusError {
    fn from(e: Error) -> Self {
        DsStatusError::Core(e)
    }
}

type FfiResult<T> = Result<T, DsStatusError>;

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> FfiResult<&'a T> {
    p.as_ref().ok_or(DsStatusError::Null(what))
}

unsafe fn out_ptr<'a, T>(p: *mut T, what: &'static str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or(DsStatusError::Null(what))
}

unsafe fn path_arg(p: *const c_char) -> FfiResult<String> {
    if p.is_null() {
        return Err(DsStatusError::Null("path"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map(str::to_string)
        .map_err(|_| Error::InvalidArgument("path is not valid UTF-8".into()).into())
}

unsafe fn slice_arg<'a, T>(p: *const T, len: usize, what: &'static str) -> FfiResult<&'a [T]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(DsStatusError::Null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn slice_out<'a, T>(p: *mut T, len: usize, what: &'static str) -> FfiResult<&'a mut [T]> {
    if len == 0 {
        return Ok(&mut []);
    }
    if p.is_null() {
        return Err(DsStatusError::Null(what));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn check_len(expected: usize, got: usize, what: &str) -> FfiResult<()> {
    if expected != got {
        return Err(Error::Shape(format!("{what}: buffer holds {got}, need {expected}")).into());
    }
    Ok(())
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ds_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ds_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

// ---- basis ----

/// Build the disk PSWF basis for bandwidth `c`, `m <= max_m`, `n <= max_n`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for a handle.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_build(c: f64, max_m: usize, max_n: usize, out: *mut *mut DsBasis) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsBasis(build_basis(c, max_m, max_n)?));
        Ok(())
    })
}

/// Read a PSWF1 basis cache.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_load(path: *const c_char, out: *mut *mut DsBasis) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsBasis(io::read_basis(path_arg(path)?)?));
        Ok(())
    })
}

/// Write a PSWF1 basis cache.
///
/// # Safety
/// `basis` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_save(basis: *const DsBasis, path: *const c_char) -> DsStatus {
    guard(|| {
        io::write_basis(path_arg(path)?, &deref(basis, "basis")?.0)?;
        Ok(())
    })
}

/// Number of `(m, n, l)` entries, or 0 for a null handle.
///
/// # Safety
/// `basis` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_len(basis: *const DsBasis) -> usize {
    basis.as_ref().map_or(0, |b| b.0.len())
}

/// Prolate eigenvalue `alpha_{m,n}` and Sturm–Liouville eigenvalue
/// `chi_{m,n}`.
///
/// # Safety
/// `basis` must be a live handle; the output pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_eigenvalues(
    basis: *const DsBasis,
    m: usize,
    n: usize,
    alpha_re: *mut f64,
    alpha_im: *mut f64,
    chi: *mut f64,
) -> DsStatus {
    guard(|| {
        let b = &deref(basis, "basis")?.0;
        let a = b.alpha(m, n)?;
        let x = b.radial(m, n)?.chi;
        *out_ptr(alpha_re, "alpha_re")? = a.re;
        *out_ptr(alpha_im, "alpha_im")? = a.im;
        *out_ptr(chi, "chi")? = x;
        Ok(())
    })
}

/// Release a basis; null is ignored.
///
/// # Safety
/// `basis` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_basis_free(basis: *mut DsBasis) {
    if !basis.is_null() {
        drop(Box::from_raw(basis));
    }
}

// ---- contrast ----

/// Contrast from `n * n` row-major cell values on `[-1, 1]^2`.
///
/// # Safety
/// `values` must point to `n * n` readable doubles and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_new(n: usize, values: *const f64, out: *mut *mut DsContrast) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let len = n
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidArgument("grid too large".into()))?;
        let v = slice_arg(values, len, "values")?.to_vec();
        *out = boxed(DsContrast(ContrastGrid::new(n, v)?));
        Ok(())
    })
}

/// Read a CGR1 contrast.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_load(path: *const c_char, out: *mut *mut DsContrast) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsContrast(io::read_contrast(path_arg(path)?)?));
        Ok(())
    })
}

/// Write a CGR1 contrast.
///
/// # Safety
/// `q` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_save(q: *const DsContrast, path: *const c_char) -> DsStatus {
    guard(|| {
        io::write_contrast(path_arg(path)?, &deref(q, "contrast")?.0)?;
        Ok(())
    })
}

/// Grid size `N`, or 0 for a null handle.
///
/// # Safety
/// `q` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_n(q: *const DsContrast) -> usize {
    q.as_ref().map_or(0, |q| q.0.n())
}

/// Copy the `N * N` values into `buf` (of length `len`).
///
/// # Safety
/// `q` must be a live handle and `buf` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_values(q: *const DsContrast, buf: *mut f64, len: usize) -> DsStatus {
    guard(|| {
        let v = deref(q, "contrast")?.0.values();
        check_len(v.len(), len, "contrast values")?;
        slice_out(buf, len, "buf")?.copy_from_slice(v);
        Ok(())
    })
}

/// Release a contrast; null is ignored.
///
/// # Safety
/// `q` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_contrast_free(q: *mut DsContrast) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

// ---- forward problem ----

/// Full and Born far fields for `directions` uniform incident and
/// observation directions, plus the degree of nonlinearity (`rel` may be
/// null; it is NaN for a zero contrast).
///
/// # Safety
/// `q` must be a live handle; `full` and `born` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_simulate(
    q: *const DsContrast,
    k: f64,
    directions: usize,
    full: *mut *mut DsFarField,
    born: *mut *mut DsFarField,
    rel: *mut f64,
) -> DsStatus {
    guard(|| {
        let q = &deref(q, "contrast")?.0;
        let full = out_ptr(full, "full")?;
        let born = out_ptr(born, "born")?;
        let dirs = DirectionSet::uniform(directions)?;
        let sim = ForwardSolver::new(q.n(), k)?.simulate(q, &dirs, &dirs)?;
        if let Some(r) = rel.as_mut() {
            *r = sim.rel.unwrap_or(f64::NAN);
        }
        *full = boxed(DsFarField(sim.full));
        *born = boxed(DsFarField(sim.born));
        Ok(())
    })
}

/// Read an FFM1 far-field matrix.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_load(path: *const c_char, out: *mut *mut DsFarField) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsFarField(io::read_far_field(path_arg(path)?)?));
        Ok(())
    })
}

/// Write an FFM1 far-field matrix.
///
/// # Safety
/// `ff` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_save(ff: *const DsFarField, path: *const c_char) -> DsStatus {
    guard(|| {
        io::write_far_field(path_arg(path)?, &deref(ff, "far field")?.0)?;
        Ok(())
    })
}

/// Observation and incidence counts.
///
/// # Safety
/// `ff` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_shape(ff: *const DsFarField, n_obs: *mut usize, n_inc: *mut usize) -> DsStatus {
    guard(|| {
        let ff = &deref(ff, "far field")?.0;
        *out_ptr(n_obs, "n_obs")? = ff.n_obs();
        *out_ptr(n_inc, "n_inc")? = ff.n_inc();
        Ok(())
    })
}

/// Copy the observation-major entries into `re` and `im` (length `len`).
///
/// # Safety
/// `ff` must be a live handle; `re`, `im` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_values(ff: *const DsFarField, re: *mut f64, im: *mut f64, len: usize) -> DsStatus {
    guard(|| {
        let v = &deref(ff, "far field")?.0.values;
        check_len(v.len(), len, "far-field values")?;
        let (re, im) = (slice_out(re, len, "re")?, slice_out(im, len, "im")?);
        for (i, z) in v.iter().enumerate() {
            re[i] = z.re;
            im[i] = z.im;
        }
        Ok(())
    })
}

/// Copy with multiplicative noise of level `delta` drawn from `seed`.
///
/// # Safety
/// `ff` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_add_noise(
    ff: *const DsFarField,
    delta: f64,
    seed: u64,
    out: *mut *mut DsFarField,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsFarField(pipeline::add_noise(
            &deref(ff, "far field")?.0,
            delta,
            seed,
        )?));
        Ok(())
    })
}

/// Copy restricted to the aperture `[-theta, theta]`.
///
/// # Safety
/// `ff` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_limit_aperture(
    ff: *const DsFarField,
    theta: f64,
    out: *mut *mut DsFarField,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsFarField(pipeline::apply_limited_aperture(
            &deref(ff, "far field")?.0,
            theta,
        )?));
        Ok(())
    })
}

/// Release a far-field matrix; null is ignored.
///
/// # Safety
/// `ff` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_farfield_free(ff: *mut DsFarField) {
    if !ff.is_null() {
        drop(Box::from_raw(ff));
    }
}

// ---- processed data and inversion ----

/// Process a far-field matrix onto the `n2 x n1` polar grid.
///
/// # Safety
/// `ff` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_process(
    ff: *const DsFarField,
    n1: usize,
    n2: usize,
    out: *mut *mut DsProcessed,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let grid = PolarGrid::new(n1, n2)?;
        *out = boxed(DsProcessed(pipeline::process_far_field(
            &deref(ff, "far field")?.0,
            &grid,
        )?));
        Ok(())
    })
}

/// Read PRC1 processed data.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_load(path: *const c_char, out: *mut *mut DsProcessed) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = boxed(DsProcessed(io::read_processed(path_arg(path)?)?));
        Ok(())
    })
}

/// Write PRC1 processed data.
///
/// # Safety
/// `u` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_save(u: *const DsProcessed, path: *const c_char) -> DsStatus {
    guard(|| {
        io::write_processed(path_arg(path)?, &deref(u, "processed data")?.0)?;
        Ok(())
    })
}

/// Bandwidth, angular and radial node counts.
///
/// # Safety
/// `u` must be a live handle; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_shape(
    u: *const DsProcessed,
    c: *mut f64,
    n1: *mut usize,
    n2: *mut usize,
) -> DsStatus {
    guard(|| {
        let u = &deref(u, "processed data")?.0;
        *out_ptr(c, "c")? = u.c;
        *out_ptr(n1, "n1")? = u.grid.n1();
        *out_ptr(n2, "n2")? = u.grid.n2();
        Ok(())
    })
}

/// Copy the radial-major values into `re` and `im` (length `len`).
///
/// # Safety
/// `u` must be a live handle; `re`, `im` writable for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_values(
    u: *const DsProcessed,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> DsStatus {
    guard(|| {
        let v = &deref(u, "processed data")?.0.values;
        check_len(v.len(), len, "processed values")?;
        let (re, im) = (slice_out(re, len, "re")?, slice_out(im, len, "im")?);
        for (i, z) in v.iter().enumerate() {
            re[i] = z.re;
            im[i] = z.im;
        }
        Ok(())
    })
}

/// Release processed data; null is ignored.
///
/// # Safety
/// `u` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_free(u: *mut DsProcessed) {
    if !u.is_null() {
        drop(Box::from_raw(u));
    }
}

/// Low-rank reconstruction over `|alpha| > eta` on an `n x n` grid (real
/// part).
///
/// # Safety
/// `u` and `basis` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_invert_eta(
    u: *const DsProcessed,
    basis: *const DsBasis,
    eta: f64,
    n: usize,
    out: *mut *mut DsContrast,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let rec = inverse::invert_eta(&deref(u, "processed data")?.0, &deref(basis, "basis")?.0, eta, n)?;
        *out = boxed(DsContrast(rec.real_contrast()?));
        Ok(())
    })
}

/// Reconstruction over `chi < 1 / alpha_reg`; `beta` (may be null)
/// receives the smallest retained `|alpha|`.
///
/// # Safety
/// `u` and `basis` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_invert_sl(
    u: *const DsProcessed,
    basis: *const DsBasis,
    alpha_reg: f64,
    n: usize,
    out: *mut *mut DsContrast,
    beta: *mut f64,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let rec = inverse::invert_sl(&deref(u, "processed data")?.0, &deref(basis, "basis")?.0, alpha_reg, n)?;
        if let (Some(b), inverse::Cutoff::SturmLiouville { beta: v, .. }) = (beta.as_mut(), rec.coefficients.cutoff) {
            *b = v;
        }
        *out = boxed(DsContrast(rec.real_contrast()?));
        Ok(())
    })
}

/// Processed data from raw radial-major values, for data produced outside
/// the library (for example by a learned corrector). `aperture <= 0`
/// means full aperture.
///
/// # Safety
/// `re` and `im` must be readable for `n1 * n2` doubles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ds_processed_new(
    c: f64,
    n1: usize,
    n2: usize,
    aperture: f64,
    re: *const f64,
    im: *const f64,
    out: *mut *mut DsProcessed,
) -> DsStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        let grid = PolarGrid::new(n1, n2)?;
        let re = slice_arg(re, grid.len(), "re")?;
        let im = slice_arg(im, grid.len(), "im")?;
        let values = re
            .iter()
            .zip(im)
            .map(|(&a, &b)| num_complex::Complex64::new(a, b))
            .collect();
        let ap = (aperture > 0.0).then_some(aperture);
        *out = boxed(DsProcessed(ProcessedData::new(c, grid, values, ap)?));
        Ok(())
    })
}
