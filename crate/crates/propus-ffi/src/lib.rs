//! C ABI for the propus-core construction toolkit.
//!
//! Matrices cross the boundary as opaque handles; every function returns a
//! status code and writes results through out-parameters. Panics are caught
//! at the boundary and surface as [`PropusStatus::Panic`]. The header is
//! generated into `include/propus.h` at build time.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use propus_core::catalog::Catalog;
use propus_core::driver::{construct, ConstructError, Method};
use propus_core::field::{build_field, paley_core, prime_power};
use propus_core::matrix::SignMatrix;
use propus_core::render::write_pgm;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropusStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was out of range or unparsable.
    InvalidArgument = 2,
    /// No route produced the requested object.
    NotFound = 3,
    /// The object failed its exact verification.
    VerificationFailed = 4,
    /// Filesystem error.
    Io = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Structural predicate flags for a matrix, all exact integer checks.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PropusProperties {
    pub order: u32,
    pub is_pm1: u8,
    pub is_hadamard: u8,
    pub is_symmetric: u8,
    pub is_skew_plus_identity: u8,
    pub is_conference: u8,
}

/// Opaque matrix handle; free with [`propus_matrix_free`].
pub struct PropusMatrix {
    inner: SignMatrix,
}

fn guard(f: impl FnOnce() -> PropusStatus) -> PropusStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PropusStatus::Panic)
}

unsafe fn write_out(out: *mut *mut PropusMatrix, m: SignMatrix) -> PropusStatus {
    *out = Box::into_raw(Box::new(PropusMatrix { inner: m }));
    PropusStatus::Ok
}

/// Builds a symmetric propus-Hadamard matrix of the given order.
///
/// `method` is one of `auto`, `paley-turyn`, `conference`, `doptimal`,
/// `three-equal`, `miyamoto` (UTF-8, NUL-terminated); pass NULL for `auto`.
/// On success `*out` owns the matrix.
///
/// # Safety
/// `out` must be a valid pointer; `method`, when non-null, must point to a
/// NUL-terminated string that remains valid for the duration of the call.
#[no_mangle]
pub unsafe extern "C" fn propus_construct(
    order: u32,
    method: *const c_char,
    out: *mut *mut PropusMatrix,
) -> PropusStatus {
    if out.is_null() {
        return PropusStatus::NullArgument;
    }
    let method = if method.is_null() {
        Method::Auto
    } else {
        match CStr::from_ptr(method).to_str().map(str::parse::<Method>) {
            Ok(Ok(m)) => m,
            _ => return PropusStatus::InvalidArgument,
        }
    };
    guard(|| {
        match construct(order as usize, method, Catalog::builtin(), 1 << 22) {
            Ok(outcome) => unsafe { write_out(out, outcome.matrix) },
            Err(ConstructError::BadOrder(_)) => PropusStatus::InvalidArgument,
            Err(_) => PropusStatus::NotFound,
        }
    })
}

/// Builds the Paley core of a prime-power order q: zero diagonal, ±1
/// elsewhere, Q·Qᵀ = q·I - J.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn propus_paley_core(q: u32, out: *mut *mut PropusMatrix) -> PropusStatus {
    if out.is_null() {
        return PropusStatus::NullArgument;
    }
    guard(|| {
        let Some((p, k)) = prime_power(q as u64) else {
            return PropusStatus::InvalidArgument;
        };
        let core = build_field(p, k).and_then(|f| paley_core(&f));
        match core {
            Ok(m) => unsafe { write_out(out, m) },
            Err(_) => PropusStatus::InvalidArgument,
        }
    })
}

/// Matrix order, or 0 for a null handle.
///
/// # Safety
/// `m`, when non-null, must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn propus_matrix_order(m: *const PropusMatrix) -> u32 {
    if m.is_null() {
        return 0;
    }
    (*m).inner.order() as u32
}

/// Reads one entry (-1, 0 or +1) into `*out`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn propus_matrix_entry(
    m: *const PropusMatrix,
    row: u32,
    col: u32,
    out: *mut i32,
) -> PropusStatus {
    if m.is_null() || out.is_null() {
        return PropusStatus::NullArgument;
    }
    let inner = &(*m).inner;
    let n = inner.order() as u32;
    if row >= n || col >= n {
        return PropusStatus::InvalidArgument;
    }
    *out = inner.get(row as usize, col as usize);
    PropusStatus::Ok
}

/// Evaluates the structural predicates into `*out`.
///
/// # Safety
/// `m` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn propus_matrix_properties(
    m: *const PropusMatrix,
    out: *mut PropusProperties,
) -> PropusStatus {
    if m.is_null() || out.is_null() {
        return PropusStatus::NullArgument;
    }
    guard(|| {
        let p = (*m).inner.check_properties();
        *out = PropusProperties {
            order: p.order as u32,
            is_pm1: p.is_pm1 as u8,
            is_hadamard: p.is_hadamard as u8,
            is_symmetric: p.is_symmetric as u8,
            is_skew_plus_identity: p.is_skew_plus_identity as u8,
            is_conference: p.is_conference as u8,
        };
        PropusStatus::Ok
    })
}

/// Writes the matrix as a plain-text PGM image (P2, maxval 2; -1 -> 0,
/// 0 -> 1, +1 -> 2).
///
/// # Safety
/// `m` must be a live handle; `path` must be a NUL-terminated UTF-8 string.
#[no_mangle]
pub unsafe extern "C" fn propus_matrix_write_pgm(
    m: *const PropusMatrix,
    path: *const c_char,
) -> PropusStatus {
    if m.is_null() || path.is_null() {
        return PropusStatus::NullArgument;
    }
    let Ok(path) = CStr::from_ptr(path).to_str() else {
        return PropusStatus::InvalidArgument;
    };
    guard(|| match write_pgm(&(*m).inner, Path::new(path)) {
        Ok(()) => PropusStatus::Ok,
        Err(_) => PropusStatus::Io,
    })
}

/// Releases a handle. Null is a no-op.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn propus_matrix_free(m: *mut PropusMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Static human-readable name for a status code.
#[no_mangle]
pub extern "C" fn propus_status_name(status: PropusStatus) -> *const c_char {
    let name: &'static CStr = match status {
        PropusStatus::Ok => c"ok",
        PropusStatus::NullArgument => c"null argument",
        PropusStatus::InvalidArgument => c"invalid argument",
        PropusStatus::NotFound => c"not found",
        PropusStatus::VerificationFailed => c"verification failed",
        PropusStatus::Io => c"io error",
        PropusStatus::Panic => c"internal panic",
    };
    name.as_ptr()
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn propus_version() -> *const c_char {
    static VERSION: &CStr = c"0.1.0";
    VERSION.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    #[test]
    fn construct_order_12_roundtrip() {
        let mut handle: *mut PropusMatrix = ptr::null_mut();
        let method = CString::new("paley-turyn").unwrap();
        let status = unsafe { propus_construct(12, method.as_ptr(), &mut handle) };
        assert_eq!(status, PropusStatus::Ok);
        assert_eq!(unsafe { propus_matrix_order(handle) }, 12);

        let mut props = PropusProperties {
            order: 0,
            is_pm1: 0,
            is_hadamard: 0,
            is_symmetric: 0,
            is_skew_plus_identity: 0,
            is_conference: 0,
        };
        assert_eq!(
            unsafe { propus_matrix_properties(handle, &mut props) },
            PropusStatus::Ok
        );
        assert_eq!(props.is_hadamard, 1);
        assert_eq!(props.is_symmetric, 1);

        let mut v = 0i32;
        assert_eq!(
            unsafe { propus_matrix_entry(handle, 0, 0, &mut v) },
            PropusStatus::Ok
        );
        assert!(v == 1 || v == -1);
        assert_eq!(
            unsafe { propus_matrix_entry(handle, 12, 0, &mut v) },
            PropusStatus::InvalidArgument
        );

        unsafe { propus_matrix_free(handle) };
    }

    #[test]
    fn null_arguments_reported() {
        let status = unsafe { propus_construct(12, ptr::null(), ptr::null_mut()) };
        assert_eq!(status, PropusStatus::NullArgument);
        assert_eq!(unsafe { propus_matrix_order(ptr::null()) }, 0);
        unsafe { propus_matrix_free(ptr::null_mut()) };
    }

    #[test]
    fn invalid_method_and_order() {
        let mut handle: *mut PropusMatrix = ptr::null_mut();
        let method = CString::new("marzipan").unwrap();
        assert_eq!(
            unsafe { propus_construct(12, method.as_ptr(), &mut handle) },
            PropusStatus::InvalidArgument
        );
        assert_eq!(
            unsafe { propus_construct(10, ptr::null(), &mut handle) },
            PropusStatus::InvalidArgument
        );
        // Order 68 is a multiple of 4 with no route.
        assert_eq!(
            unsafe { propus_construct(68, ptr::null(), &mut handle) },
            PropusStatus::NotFound
        );
    }

    #[test]
    fn paley_core_handle() {
        let mut handle: *mut PropusMatrix = ptr::null_mut();
        assert_eq!(
            unsafe { propus_paley_core(9, &mut handle) },
            PropusStatus::Ok
        );
        assert_eq!(unsafe { propus_matrix_order(handle) }, 9);
        let mut v = 1i32;
        assert_eq!(
            unsafe { propus_matrix_entry(handle, 4, 4, &mut v) },
            PropusStatus::Ok
        );
        assert_eq!(v, 0, "diagonal must be zero");
        unsafe { propus_matrix_free(handle) };

        assert_eq!(
            unsafe { propus_paley_core(12, &mut handle) },
            PropusStatus::InvalidArgument
        );
    }

    #[test]
    fn status_names_and_version() {
        let name = unsafe { CStr::from_ptr(propus_status_name(PropusStatus::NotFound)) };
        assert_eq!(name.to_str().unwrap(), "not found");
        let version = unsafe { CStr::from_ptr(propus_version()) };
        assert!(!version.to_str().unwrap().is_empty());
    }

    #[test]
    fn pgm_write_via_ffi() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("h12.pgm");
        let cpath = CString::new(path.to_str().unwrap()).unwrap();

        let mut handle: *mut PropusMatrix = ptr::null_mut();
        assert_eq!(
            unsafe { propus_construct(12, ptr::null(), &mut handle) },
            PropusStatus::Ok,
        );
        assert_eq!(
            unsafe { propus_matrix_write_pgm(handle, cpath.as_ptr()) },
            PropusStatus::Ok
        );
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("P2\n12 12\n2\n"));
        unsafe { propus_matrix_free(handle) };
    }
}
