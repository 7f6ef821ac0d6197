//! C ABI for the finite-quantum-group workbench.
//!
//! Groups are opaque handles created by the constructors and released with
//! [`fqg_group_free`]. Every function returns an [`FqgStatus`]; on failure a
//! thread-local message is retrievable via [`fqg_last_error`]. Reports,
//! catalogs and moment tables cross the boundary as JSON strings in the
//! formats of the `fqg` crate; release them with [`fqg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use fqg::coreps::{dual_catalog, kp_catalog, resolve_rep, sekine_catalog, IrrepCatalog};
use fqg::moments::star_moments;
use fqg::qgroup::{dual, fixture, verify_haar, verify_hopf, QuantumGroup};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FqgStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    Utf8 = 3,
    MathFailure = 4,
    Io = 5,
    Panic = 6,
}

/// Opaque quantum-group handle.
pub struct FqgGroup {
    inner: QuantumGroup,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into();
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg).ok();
    });
}

fn clear_error() {
    LAST_ERROR.with(|slot| slot.borrow_mut().take());
}

fn status_of(e: &fqg::Error) -> FqgStatus {
    match e {
        fqg::Error::InvalidParameter(_) | fqg::Error::Fixture(_) => FqgStatus::InvalidArgument,
        fqg::Error::Io(_) | fqg::Error::Json(_) => FqgStatus::Io,
        _ => FqgStatus::MathFailure,
    }
}

fn guarded<F: FnOnce() -> FqgStatus>(f: F) -> FqgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            FqgStatus::Panic
        }
    }
}

unsafe fn write_handle(out: *mut *mut FqgGroup, g: QuantumGroup) -> FqgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return FqgStatus::NullArgument;
    }
    *out = Box::into_raw(Box::new(FqgGroup { inner: g }));
    clear_error();
    FqgStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FqgStatus {
    if out.is_null() {
        set_error("null output pointer");
        return FqgStatus::NullArgument;
    }
    match CString::new(s) {
        Ok(cs) => {
            *out = cs.into_raw();
            clear_error();
            FqgStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL byte");
            FqgStatus::Utf8
        }
    }
}

unsafe fn group_ref<'a>(g: *const FqgGroup) -> Option<&'a QuantumGroup> {
    (!g.is_null()).then(|| &(*g).inner)
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, FqgStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(FqgStatus::NullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        FqgStatus::Utf8
    })
}

fn catalog_of(g: &QuantumGroup) -> Result<IrrepCatalog, fqg::Error> {
    let name = g.name().to_string();
    if name == "kp" {
        return Ok(kp_catalog(g));
    }
    if name.starts_with("sekine:") {
        return Ok(sekine_catalog(g));
    }
    if let Some(rest) = name.strip_prefix("dual(sekine:") {
        if let Ok(n) = rest.trim_end_matches(')').parse::<u32>() {
            return Ok(dual_catalog(g, n));
        }
    }
    Err(fqg::Error::InvalidParameter(format!(
        "no built-in catalog for group {name:?}"
    )))
}

/// Latest error message on this thread, or NULL when the last call
/// succeeded. The caller owns the string; release with `fqg_string_free`.
#[no_mangle]
pub extern "C" fn fqg_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| match &*slot.borrow() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn fqg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the eight-dimensional Kac-Paljutkin group.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_kp(out: *mut *mut FqgGroup) -> FqgStatus {
    guarded(|| write_handle(out, fqg::qgroup::build_kp()))
}

/// Builds the Sekine group of index n (n >= 2, dimension 2 n^2).
#[no_mangle]
pub unsafe extern "C" fn fqg_group_sekine(n: u32, out: *mut *mut FqgGroup) -> FqgStatus {
    guarded(|| match fqg::qgroup::build_sekine(n) {
        Ok(g) => write_handle(out, g),
        Err(e) => {
            set_error(e.to_string());
            status_of(&e)
        }
    })
}

/// Builds the dual of a verified group.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_dual(
    g: *const FqgGroup,
    out: *mut *mut FqgGroup,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        match dual(g) {
            Ok(d) => write_handle(out, d),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Reads a group from a JSON fixture file.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_from_file(
    path: *const c_char,
    out: *mut *mut FqgGroup,
) -> FqgStatus {
    guarded(|| {
        let path = match read_str(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match fixture::read_group(Path::new(path)) {
            Ok(g) => write_handle(out, g),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Writes the group fixture to a JSON file.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_to_file(
    g: *const FqgGroup,
    path: *const c_char,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        let path = match read_str(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match fixture::write_group(g, Path::new(path)) {
            Ok(()) => {
                clear_error();
                FqgStatus::Ok
            }
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a group handle.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_free(g: *mut FqgGroup) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Dimension of the underlying algebra; 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_dim(g: *const FqgGroup) -> u64 {
    group_ref(g).map_or(0, |g| g.dim() as u64)
}

/// Group name ("kp", "sekine:5", "dual(sekine:5)", ...).
#[no_mangle]
pub unsafe extern "C" fn fqg_group_name(
    g: *const FqgGroup,
    out: *mut *mut c_char,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        write_string(out, g.name().to_string())
    })
}

/// Runs the Hopf and Haar verifications; `out_passed` receives the combined
/// verdict and `out_json` the full report.
#[no_mangle]
pub unsafe extern "C" fn fqg_group_verify_json(
    g: *const FqgGroup,
    out_passed: *mut bool,
    out_json: *mut *mut c_char,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        let mut report = verify_hopf(g);
        report.merge(verify_haar(g));
        if !out_passed.is_null() {
            *out_passed = report.all_passed();
        }
        let json = match serde_json::to_string_pretty(&report) {
            Ok(j) => j,
            Err(e) => {
                set_error(e.to_string());
                return FqgStatus::Io;
            }
        };
        write_string(out_json, json)
    })
}

/// Exports the irreducible corepresentation catalog as JSON (built-in
/// families only).
#[no_mangle]
pub unsafe extern "C" fn fqg_irreps_json(
    g: *const FqgGroup,
    out_json: *mut *mut c_char,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        match catalog_of(g) {
            Ok(cat) => write_string(out_json, cat.to_json().to_string()),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Moment table of the character of `rep` raised to `power`, as JSON.
/// `rep` accepts catalog labels and the alias "fundamental".
#[no_mangle]
pub unsafe extern "C" fn fqg_char_moments_json(
    g: *const FqgGroup,
    rep: *const c_char,
    power: u32,
    max_order: u32,
    out_json: *mut *mut c_char,
) -> FqgStatus {
    guarded(|| {
        let Some(g) = group_ref(g) else {
            set_error("null group handle");
            return FqgStatus::NullArgument;
        };
        let rep = match read_str(rep) {
            Ok(r) => r,
            Err(s) => return s,
        };
        let result = catalog_of(g).and_then(|cat| {
            let corep = resolve_rep(&cat, rep)?;
            let chi = corep.power(power as u64).trace();
            let table = star_moments(
                g,
                &chi,
                &format!("chi({rep}^{power}) in {}", g.name()),
                max_order as usize,
            )?;
            Ok(table.to_json().to_string())
        });
        match result {
            Ok(json) => write_string(out_json, json),
            Err(e) => {
                set_error(e.to_string());
                status_of(&e)
            }
        }
    })
}

#[cfg(test)]
mod tests;
