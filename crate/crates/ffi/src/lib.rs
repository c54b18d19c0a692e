//! C interface. Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every call returns an [`SkStatus`];
//! on failure [`sk_last_error`] describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use shiftedkeys::bases::{self, BasisId};
use shiftedkeys::cli::eval_expr;
use shiftedkeys::expand::{self, ExpansionResult, PositiveFamily, SearchConfig};
use shiftedkeys::polyring::Poly;
use shiftedkeys::verify::{self, ConjectureId};
use shiftedkeys::Error;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    InexactDivision = 5,
    Guard = 6,
    Invariant = 7,
    NoChain = 8,
    /// No positive expansion exists in the searched space.
    NotFound = 9,
    Panic = 10,
}

/// Opaque polynomial handle.
pub struct SkPoly(Poly);

/// Opaque expansion handle.
pub struct SkExpansion(ExpansionResult);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> SkStatus {
    match e {
        Error::Parse(_) => SkStatus::Parse,
        Error::Domain(_) => SkStatus::Domain,
        Error::InexactDivision(_) => SkStatus::InexactDivision,
        Error::Guard(_) => SkStatus::Guard,
        Error::Invariant(_) => SkStatus::Invariant,
        Error::NoChain(_) => SkStatus::NoChain,
    }
}

struct Fail(SkStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SkStatus::Ok
        }
        Ok(Err(Fail(s, m))) => {
            set_error(&m);
            s
        }
        Err(_) => {
            set_error("internal panic");
            SkStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SkStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(SkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(SkStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SkStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SkStatus::NullPointer, "output pointer is null".into()));
    }
    *out = CString::new(s).map_err(|_| Fail(SkStatus::Invariant, "string contains NUL".into()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn sk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn sk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a polynomial such as `3*b*x1^2*x3 - x2`.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_parse(text: *const c_char, out: *mut *mut SkPoly) -> SkStatus {
    guard(|| put(out, SkPoly(Poly::parse(str_arg(text, "text")?)?)))
}

/// Evaluates a command-line style expression, e.g. `qkey 2,0,3,1` or `pi[1] x1^2`.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_eval(expr: *const c_char, out: *mut *mut SkPoly) -> SkStatus {
    guard(|| put(out, SkPoly(eval_expr(str_arg(expr, "expr")?)?)))
}

/// Evaluates basis `name` (e.g. `pkey`, `groth_sp`) at `index`.
///
/// # Safety
/// Both strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_basis_eval(name: *const c_char, index: *const c_char, out: *mut *mut SkPoly) -> SkStatus {
    guard(|| {
        let id: BasisId = str_arg(name, "name")?.parse()?;
        put(out, SkPoly(bases::eval_str(id, str_arg(index, "index")?)?))
    })
}

/// # Safety
/// `p` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_free(p: *mut SkPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_clone(p: *const SkPoly, out: *mut *mut SkPoly) -> SkStatus {
    guard(|| put(out, SkPoly(ref_arg(p, "p")?.0.clone())))
}

fn binary(a: *const SkPoly, b: *const SkPoly, out: *mut *mut SkPoly, op: fn(&Poly, &Poly) -> Poly) -> SkStatus {
    guard(|| unsafe {
        let (a, b) = (ref_arg(a, "a")?, ref_arg(b, "b")?);
        put(out, SkPoly(op(&a.0, &b.0)))
    })
}

/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_add(a: *const SkPoly, b: *const SkPoly, out: *mut *mut SkPoly) -> SkStatus {
    binary(a, b, out, |x, y| x + y)
}

/// # Safety
/// As [`sk_poly_add`].
#[no_mangle]
pub unsafe extern "C" fn sk_poly_sub(a: *const SkPoly, b: *const SkPoly, out: *mut *mut SkPoly) -> SkStatus {
    binary(a, b, out, |x, y| x - y)
}

/// # Safety
/// As [`sk_poly_add`].
#[no_mangle]
pub unsafe extern "C" fn sk_poly_mul(a: *const SkPoly, b: *const SkPoly, out: *mut *mut SkPoly) -> SkStatus {
    binary(a, b, out, |x, y| x * y)
}

/// 1 if equal, 0 if not, -1 on a null argument.
///
/// # Safety
/// `a` and `b` must be null or live handles.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_equal(a: *const SkPoly, b: *const SkPoly) -> c_int {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => c_int::from(a.0 == b.0),
        _ => -1,
    }
}

/// Number of `(x-monomial, β-power)` terms; 0 for null.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_num_terms(p: *const SkPoly) -> usize {
    p.as_ref().map_or(0, |p| p.0.num_beta_terms())
}

/// Text form, released with [`sk_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_poly_to_string(p: *const SkPoly, out: *mut *mut c_char) -> SkStatus {
    guard(|| put_string(out, ref_arg(p, "p")?.0.to_string()))
}

/// JSON form, released with [`sk_string_free`].
///
/// # Safety
/// As [`sk_poly_to_string`].
#[no_mangle]
pub unsafe extern "C" fn sk_poly_to_json(p: *const SkPoly, out: *mut *mut c_char) -> SkStatus {
    guard(|| put_string(out, ref_arg(p, "p")?.0.to_json_string()))
}

/// Expands `p` in `basis`: `key`, `lascoux`, `schubert`, `grothendieck` by peeling, or
/// `pkey`, `qkey`, `plascoux` by positive search (first solution; [`SkStatus::NotFound`]
/// when the search space holds none).
///
/// # Safety
/// `p` must be a live handle, `basis` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sk_expand(p: *const SkPoly, basis: *const c_char, out: *mut *mut SkExpansion) -> SkStatus {
    guard(|| {
        let f = &ref_arg(p, "p")?.0;
        let e = match str_arg(basis, "basis")?.to_ascii_lowercase().as_str() {
            "key" => expand::key_expand(f)?,
            "lascoux" => expand::lascoux_expand(f)?,
            "schubert" => expand::schubert_expand(f)?,
            "grothendieck" => expand::grothendieck_expand(f)?,
            b @ ("pkey" | "qkey" | "plascoux") => {
                let fam = match b {
                    "pkey" => PositiveFamily::PKEY,
                    "qkey" => PositiveFamily::QKEY_2POW,
                    _ => PositiveFamily::PLASCOUX,
                };
                let res = expand::positive_search(f, fam, &SearchConfig::default())?;
                match res.solutions.into_iter().next() {
                    Some(s) => s,
                    None if res.exhausted => return Err(Fail(SkStatus::NotFound, "no positive expansion".into())),
                    None => return Err(Fail(SkStatus::Guard, format!("search stopped after {} nodes", res.nodes))),
                }
            }
            other => return Err(Fail(SkStatus::Parse, format!("unknown expansion basis {other:?}"))),
        };
        put(out, SkExpansion(e))
    })
}

/// # Safety
/// `e` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sk_expansion_free(e: *mut SkExpansion) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Number of basis terms; 0 for null.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_expansion_len(e: *const SkExpansion) -> usize {
    e.as_ref().map_or(0, |e| e.0.terms.len())
}

/// 1 when every coefficient lies in ℕ[β] and nothing is left over, 0 otherwise, -1 for null.
///
/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sk_expansion_is_positive(e: *const SkExpansion) -> c_int {
    e.as_ref().map_or(-1, |e| c_int::from(e.0.is_positive() && e.0.is_complete()))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sk_expansion_to_string(e: *const SkExpansion, out: *mut *mut c_char) -> SkStatus {
    guard(|| put_string(out, ref_arg(e, "e")?.0.to_string()))
}

/// # Safety
/// As [`sk_expansion_to_string`].
#[no_mangle]
pub unsafe extern "C" fn sk_expansion_to_json(e: *const SkExpansion, out: *mut *mut c_char) -> SkStatus {
    guard(|| put_string(out, ref_arg(e, "e")?.0.to_json().to_string()))
}

/// Runs a conjecture sweep (`bound` 0 means the default). `verdict` receives 0
/// verified, 2 counterexample or 3 inconclusive; `report_json` may be null.
///
/// # Safety
/// `id` must be NUL-terminated; `verdict` writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn sk_verify(
    id: *const c_char,
    bound: usize,
    verdict: *mut c_int,
    report_json: *mut *mut c_char,
) -> SkStatus {
    guard(|| {
        let id: ConjectureId = str_arg(id, "id")?.parse()?;
        if verdict.is_null() {
            return Err(Fail(SkStatus::NullPointer, "verdict is null".into()));
        }
        let r = verify::run(id, (bound > 0).then_some(bound))?;
        *verdict = r.status.exit_code();
        if !report_json.is_null() {
            put_string(report_json, r.to_json().to_string())?;
        }
        Ok(())
    })
}
