//! C ABI over `dp1-core`.
//!
//! Every fallible call returns a [`Dp1Status`]. Strings handed out by the
//! library are NUL-terminated JSON and must be released with
//! [`dp1_string_free`]; lattices with [`dp1_lattice_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use dp1_core::cli::cmd_classify;
use dp1_core::lattice::{build_lattice, enumerate_roots, GeometricLattice};
use dp1_core::mapping_class::PhiMap;
use dp1_core::report::{render, Format};
use dp1_core::tritangent::{enumerate_tritangents, type_counts};
use dp1_core::types::{SexticType, SurfaceTopology};
use dp1_core::verify::{run_all, Context};
use dp1_core::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dp1Status {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    NotRoot = 5,
    Unsupported = 6,
    Input = 7,
    BufferTooSmall = 8,
    Panic = 9,
}

impl From<&Error> for Dp1Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::Dimension { .. } => Dp1Status::Dimension,
            Error::NotRoot(_) | Error::NotInV1 | Error::InR1 => Dp1Status::NotRoot,
            Error::Unsupported(_) => Dp1Status::Unsupported,
            Error::Parse(_) => Dp1Status::Parse,
            Error::NotInRadical | Error::Input(_) | Error::SurfaceMismatch => Dp1Status::Input,
        }
    }
}

/// Opaque handle to a geometric lattice.
pub struct Dp1Lattice {
    inner: GeometricLattice,
}

fn guard(f: impl FnOnce() -> Result<(), Dp1Status>) -> Dp1Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Dp1Status::Ok,
        Ok(Err(s)) => s,
        Err(_) => Dp1Status::Panic,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Dp1Status> {
    if s.is_null() {
        return Err(Dp1Status::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| Dp1Status::InvalidUtf8)
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, Dp1Status> {
    s.parse().map_err(|e: Error| Dp1Status::from(&e))
}

unsafe fn hand_out(text: String, out: *mut *mut c_char) -> Result<(), Dp1Status> {
    let c = CString::new(text).map_err(|_| Dp1Status::Input)?;
    *out = c.into_raw();
    Ok(())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn dp1_status_message(status: Dp1Status) -> *const c_char {
    let s: &'static CStr = match status {
        Dp1Status::Ok => c"ok",
        Dp1Status::NullPointer => c"null pointer",
        Dp1Status::InvalidUtf8 => c"string is not UTF-8",
        Dp1Status::Parse => c"cannot parse argument",
        Dp1Status::Dimension => c"dimension mismatch",
        Dp1Status::NotRoot => c"not a root",
        Dp1Status::Unsupported => c"unsupported for this type",
        Dp1Status::Input => c"invalid input",
        Dp1Status::BufferTooSmall => c"output buffer too small",
        Dp1Status::Panic => c"internal error",
    };
    s.as_ptr()
}

/// Builds the lattice of a sextic type such as `"4|0"` or `"|||"`.
///
/// # Safety
/// `sextic` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp1_lattice_new(sextic: *const c_char, out: *mut *mut Dp1Lattice) -> Dp1Status {
    guard(|| {
        if out.is_null() {
            return Err(Dp1Status::NullPointer);
        }
        let s: SexticType = parse(read_str(sextic)?)?;
        *out = Box::into_raw(Box::new(Dp1Lattice { inner: build_lattice(s) }));
        Ok(())
    })
}

/// # Safety
/// `lattice` must come from [`dp1_lattice_new`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn dp1_lattice_free(lattice: *mut Dp1Lattice) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// Rank of the lattice, 0 for a null handle.
///
/// # Safety
/// `lattice` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dp1_lattice_rank(lattice: *const Dp1Lattice) -> usize {
    lattice.as_ref().map_or(0, |l| l.inner.rank)
}

/// Copies the Gram matrix row by row into `out`, which holds `len` entries.
///
/// # Safety
/// `out` must point to `len` writable `int64_t`.
#[no_mangle]
pub unsafe extern "C" fn dp1_lattice_gram(lattice: *const Dp1Lattice, out: *mut i64, len: usize) -> Dp1Status {
    guard(|| {
        let l = lattice.as_ref().ok_or(Dp1Status::NullPointer)?;
        let n = l.inner.rank;
        if n * n > len {
            return Err(Dp1Status::BufferTooSmall);
        }
        if n == 0 {
            return Ok(());
        }
        if out.is_null() {
            return Err(Dp1Status::NullPointer);
        }
        let dst = std::slice::from_raw_parts_mut(out, n * n);
        for (chunk, row) in dst.chunks_mut(n).zip(&l.inner.gram) {
            chunk.copy_from_slice(row);
        }
        Ok(())
    })
}

/// Number of roots `e² = −2`.
///
/// # Safety
/// `lattice` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp1_lattice_root_count(lattice: *const Dp1Lattice, out: *mut usize) -> Dp1Status {
    guard(|| {
        let l = lattice.as_ref().ok_or(Dp1Status::NullPointer)?;
        let out = out.as_mut().ok_or(Dp1Status::NullPointer)?;
        *out = enumerate_roots(&l.inner).len();
        Ok(())
    })
}

/// Positive tritangent counts in the order `T0, T0*, T1, T2, T3`.
///
/// # Safety
/// `sextic` must be a NUL-terminated string and `out` point to 5 `size_t`.
#[no_mangle]
pub unsafe extern "C" fn dp1_tritangent_counts(sextic: *const c_char, out: *mut usize) -> Dp1Status {
    guard(|| {
        let s: SexticType = parse(read_str(sextic)?)?;
        if out.is_null() {
            return Err(Dp1Status::NullPointer);
        }
        let counts = type_counts(&enumerate_tritangents(s));
        std::slice::from_raw_parts_mut(out, 5).copy_from_slice(&counts);
        Ok(())
    })
}

/// The tritangent listing of a sextic type as a JSON report.
///
/// # Safety
/// `sextic` must be a NUL-terminated string and `out` a valid pointer; the
/// result must be released with [`dp1_string_free`].
#[no_mangle]
pub unsafe extern "C" fn dp1_classify_json(sextic: *const c_char, out: *mut *mut c_char) -> Dp1Status {
    guard(|| {
        if out.is_null() {
            return Err(Dp1Status::NullPointer);
        }
        let s: SexticType = parse(read_str(sextic)?)?;
        hand_out(render(&[cmd_classify(s, 0)], Format::Json), out)
    })
}

/// `Φ(v)` in normal form as JSON, for a surface such as `"K#2T2"`.
///
/// # Safety
/// `v` must point to `len` readable `int64_t` (or be null with `len = 0`);
/// `out` as for [`dp1_classify_json`].
#[no_mangle]
pub unsafe extern "C" fn dp1_phi_json(
    surface: *const c_char,
    v: *const i64,
    len: usize,
    out: *mut *mut c_char,
) -> Dp1Status {
    guard(|| {
        if out.is_null() || (v.is_null() && len > 0) {
            return Err(Dp1Status::NullPointer);
        }
        let surface: SurfaceTopology = parse(read_str(surface)?)?;
        let v = if len == 0 { &[][..] } else { std::slice::from_raw_parts(v, len) };
        let g = PhiMap::new(surface).apply(v).map_err(|e| Dp1Status::from(&e))?;
        hand_out(serde_json::to_string(&g).map_err(|_| Dp1Status::Input)?, out)
    })
}

/// Runs every acceptance check; `passed` receives 1 if all pass, else 0.
///
/// # Safety
/// `passed` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dp1_verify(seed: u64, passed: *mut i32) -> Dp1Status {
    guard(|| {
        let passed = passed.as_mut().ok_or(Dp1Status::NullPointer)?;
        *passed = i32::from(run_all(&Context::new(seed, None)).iter().all(|c| c.passed));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dp1_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
