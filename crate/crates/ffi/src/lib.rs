//! C interface to the infinitesimal Hecke algebra engine.
//!
//! Algebras and elements are opaque heap handles released with
//! [`ih_algebra_free`] and [`ih_element_free`]. Every fallible call returns an
//! [`IhStatus`]; on failure [`ih_last_error`] describes what went wrong on the
//! calling thread. Strings handed out by the library are released with
//! [`ih_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;

use infhecke_core::expr::{parse_element, parse_poly};
use infhecke_core::families::{build_presentation, FamilySpec};
use infhecke_core::scalar::{format_scalar, parse_scalar};
use infhecke_core::sl2::center::tz;
use infhecke_core::sl2::{fg_pair, hz_presentation, FgMethod};
use infhecke_core::verma::phi_z;
use infhecke_core::{Element, Error, Presentation};

/// Result codes shared by every function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IhStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnknownGenerator = 4,
    Mismatch = 5,
    Usage = 6,
    Failure = 7,
    Panic = 8,
}

/// An algebra presentation.
pub struct IhAlgebra {
    pres: Arc<Presentation>,
}

/// An element in normal form, tied to its algebra.
pub struct IhElement {
    elem: Element,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> IhStatus {
    match err {
        Error::Parse { .. } | Error::Json(_) => IhStatus::Parse,
        Error::UnknownGenerator(_) => IhStatus::UnknownGenerator,
        Error::PresentationMismatch(..) => IhStatus::Mismatch,
        Error::Usage(_) => IhStatus::Usage,
        _ => IhStatus::Failure,
    }
}

struct Fail(IhStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> IhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            IhStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            IhStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(IhStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(IhStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(IhStatus::NullPointer, format!("{what} is null")))
}

unsafe fn store<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(IhStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn store_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(IhStatus::NullPointer, "output pointer is null".into()));
    }
    *out = CString::new(s).expect("no interior NUL").into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ih_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Builds `H_z` for `z` written as a polynomial in `Delta`.
///
/// # Safety
/// `z` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_algebra_hz(z: *const c_char, out: *mut *mut IhAlgebra) -> IhStatus {
    guard(|| {
        let z = parse_poly(text(z, "z")?)?;
        store(out, IhAlgebra { pres: hz_presentation(&z) })
    })
}

/// Builds a family algebra from its JSON spec, e.g.
/// `{"family":"gln","n":2,"beta0":"1","beta1":"0"}`.
///
/// # Safety
/// `spec_json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_algebra_family(
    spec_json: *const c_char,
    out: *mut *mut IhAlgebra,
) -> IhStatus {
    guard(|| {
        let spec = FamilySpec::parse_json(text(spec_json, "spec")?)?;
        store(out, IhAlgebra { pres: build_presentation(&spec)? })
    })
}

/// Number of generators of the algebra.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ih_algebra_ngens(alg: *const IhAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.pres.ngens())
}

/// # Safety
/// `alg` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ih_algebra_free(alg: *mut IhAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Parses and normalizes an expression such as `"[Delta, x] + 1/2*h"`.
///
/// # Safety
/// `alg` must be a live handle, `expr` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_parse(
    alg: *const IhAlgebra,
    expr: *const c_char,
    out: *mut *mut IhElement,
) -> IhStatus {
    guard(|| {
        let alg = deref(alg, "algebra")?;
        let elem = parse_element(text(expr, "expression")?, &alg.pres)?;
        store(out, IhElement { elem })
    })
}

/// # Safety
/// `e` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ih_element_free(e: *mut IhElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

unsafe fn binary(
    a: *const IhElement,
    b: *const IhElement,
    out: *mut *mut IhElement,
    op: fn(&Element, &Element) -> infhecke_core::Result<Element>,
) -> IhStatus {
    guard(|| {
        let (a, b) = (deref(a, "left operand")?, deref(b, "right operand")?);
        store(out, IhElement { elem: op(&a.elem, &b.elem)? })
    })
}

/// `out = a + b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_add(
    a: *const IhElement,
    b: *const IhElement,
    out: *mut *mut IhElement,
) -> IhStatus {
    binary(a, b, out, Element::try_add)
}

/// `out = a * b`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_mul(
    a: *const IhElement,
    b: *const IhElement,
    out: *mut *mut IhElement,
) -> IhStatus {
    binary(a, b, out, Element::try_mul)
}

/// `out = [a, b]`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_commutator(
    a: *const IhElement,
    b: *const IhElement,
    out: *mut *mut IhElement,
) -> IhStatus {
    binary(a, b, out, Element::commutator)
}

/// Writes whether `a == b` (same algebra, same normal form).
///
/// # Safety
/// `a`, `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_equal(
    a: *const IhElement,
    b: *const IhElement,
    out: *mut bool,
) -> IhStatus {
    guard(|| {
        let (a, b) = (deref(a, "left operand")?, deref(b, "right operand")?);
        if out.is_null() {
            return Err(Fail(IhStatus::NullPointer, "output pointer is null".into()));
        }
        *out = a.elem == b.elem;
        Ok(())
    })
}

/// Writes whether `e` commutes with every generator.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_element_is_central(e: *const IhElement, out: *mut bool) -> IhStatus {
    guard(|| {
        let e = deref(e, "element")?;
        if out.is_null() {
            return Err(Fail(IhStatus::NullPointer, "output pointer is null".into()));
        }
        *out = e.elem.is_central()?;
        Ok(())
    })
}

/// The normal form as re-parseable text.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer. Free the result
/// with [`ih_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ih_element_to_string(e: *const IhElement, out: *mut *mut c_char) -> IhStatus {
    guard(|| store_string(out, deref(e, "element")?.elem.to_string()))
}

/// The normal form as JSON.
///
/// # Safety
/// `e` must be a live handle and `out` a valid pointer. Free the result
/// with [`ih_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ih_element_to_json(e: *const IhElement, out: *mut *mut c_char) -> IhStatus {
    guard(|| store_string(out, deref(e, "element")?.elem.serialize()))
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ih_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The central element `t_z` of `H_z`.
///
/// # Safety
/// `z` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ih_tz(z: *const c_char, out: *mut *mut IhElement) -> IhStatus {
    guard(|| {
        let z = parse_poly(text(z, "z")?)?;
        store(out, IhElement { elem: tz(&z)? })
    })
}

/// `f_n` and `g_n` as polynomials in `T`, computed by `method`
/// (0 first-order recursion, 1 three-term recursion, 2 closed form).
///
/// # Safety
/// `out_f` and `out_g` must be valid pointers. Free both results with
/// [`ih_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ih_fg_pair(
    n: usize,
    method: i32,
    out_f: *mut *mut c_char,
    out_g: *mut *mut c_char,
) -> IhStatus {
    guard(|| {
        let method = match method {
            0 => FgMethod::FirstOrder,
            1 => FgMethod::ThreeTerm,
            2 => FgMethod::ClosedForm,
            _ => return Err(Fail(IhStatus::Usage, format!("unknown method {method}"))),
        };
        if n == 0 {
            return Err(Fail(IhStatus::Usage, "n must be positive".into()));
        }
        if out_f.is_null() || out_g.is_null() {
            return Err(Fail(IhStatus::NullPointer, "output pointer is null".into()));
        }
        let (f, g) = fg_pair(n, method)?;
        store_string(out_f, f.display_with("T"))?;
        store_string(out_g, g.display_with("T"))
    })
}

/// The central character `phi_z(lambda)` as `p/q` text.
///
/// # Safety
/// `lambda` and `z` must be NUL-terminated strings and `out` a valid
/// pointer. Free the result with [`ih_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ih_phi_z(
    lambda: *const c_char,
    z: *const c_char,
    out: *mut *mut c_char,
) -> IhStatus {
    guard(|| {
        let lambda = parse_scalar(text(lambda, "lambda")?)?;
        let z = parse_poly(text(z, "z")?)?;
        store_string(out, format_scalar(&phi_z(&lambda, &z)?))
    })
}
