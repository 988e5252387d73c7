use std::ffi::{c_char, CStr, CString};
use std::ptr;

use infhecke_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    ih_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(ih_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn parse_multiply_and_print() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(ih_algebra_hz(c("Delta").as_ptr(), &mut alg), IhStatus::Ok);
        assert_eq!(ih_algebra_ngens(alg), 5);
        let (mut y, mut x, mut prod, mut comm) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(ih_element_parse(alg, c("y").as_ptr(), &mut y), IhStatus::Ok);
        assert_eq!(ih_element_parse(alg, c("x").as_ptr(), &mut x), IhStatus::Ok);
        assert_eq!(ih_element_mul(y, x, &mut prod), IhStatus::Ok);
        assert_eq!(ih_element_commutator(y, x, &mut comm), IhStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(ih_element_to_string(comm, &mut s), IhStatus::Ok);
        assert_eq!(take(s), "-4*e*f - h^2 + 2*h");
        assert_eq!(ih_element_to_string(prod, &mut s), IhStatus::Ok);
        assert_eq!(take(s), "-4*e*f - h^2 + x*y + 2*h");
        assert_eq!(ih_element_to_json(x, &mut s), IhStatus::Ok);
        assert!(take(s).contains("\"algebra\""));
        for e in [y, x, prod, comm] {
            ih_element_free(e);
        }
        ih_algebra_free(alg);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(ih_algebra_hz(c("1").as_ptr(), &mut alg), IhStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(ih_element_parse(alg, c("e +* f").as_ptr(), &mut e), IhStatus::Parse);
        assert!(last_error().contains("offset 3"));
        assert_eq!(ih_element_parse(alg, c("q").as_ptr(), &mut e), IhStatus::UnknownGenerator);
        assert_eq!(ih_element_parse(alg, ptr::null(), &mut e), IhStatus::NullPointer);
        assert_eq!(ih_element_parse(alg, c("e").as_ptr(), ptr::null_mut()), IhStatus::NullPointer);
        assert!(e.is_null());

        let mut other = ptr::null_mut();
        assert_eq!(ih_algebra_hz(c("0").as_ptr(), &mut other), IhStatus::Ok);
        let (mut a, mut b, mut out) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        ih_element_parse(alg, c("x").as_ptr(), &mut a);
        ih_element_parse(other, c("x").as_ptr(), &mut b);
        assert_eq!(ih_element_mul(a, b, &mut out), IhStatus::Mismatch);
        ih_element_free(a);
        ih_element_free(b);
        ih_algebra_free(other);
        ih_algebra_free(alg);
        ih_algebra_free(ptr::null_mut());
        ih_string_free(ptr::null_mut());
    }
}

#[test]
fn center_and_polynomials() {
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(ih_tz(c("Delta^2").as_ptr(), &mut t), IhStatus::Ok);
        let mut central = false;
        assert_eq!(ih_element_is_central(t, &mut central), IhStatus::Ok);
        assert!(central);
        ih_element_free(t);

        let (mut f, mut g) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(ih_fg_pair(3, 2, &mut f, &mut g), IhStatus::Ok);
        assert_eq!(take(f), "6*T^2 + 20*T + 14");
        assert_eq!(take(g), "-21*T^2 - 47*T - 27");
        assert_eq!(ih_fg_pair(3, 9, &mut f, &mut g), IhStatus::Usage);

        let mut phi = ptr::null_mut();
        assert_eq!(ih_phi_z(c("-1/2").as_ptr(), c("1").as_ptr(), &mut phi), IhStatus::Ok);
        assert_eq!(take(phi), "1/8");
    }
}

#[test]
fn family_algebras() {
    unsafe {
        let mut alg = ptr::null_mut();
        let spec = c(r#"{"family":"gln","n":2,"beta0":"1","beta1":"1"}"#);
        assert_eq!(ih_algebra_family(spec.as_ptr(), &mut alg), IhStatus::Ok);
        assert_eq!(ih_algebra_ngens(alg), 8);
        let (mut lhs, mut rhs) = (ptr::null_mut(), ptr::null_mut());
        ih_element_parse(alg, c("[v_1, vs_1]").as_ptr(), &mut lhs);
        ih_element_parse(alg, c("1 + tau + E_11").as_ptr(), &mut rhs);
        let mut eq = false;
        assert_eq!(ih_element_equal(lhs, rhs, &mut eq), IhStatus::Ok);
        assert!(eq);
        ih_element_free(lhs);
        ih_element_free(rhs);
        ih_algebra_free(alg);
        let bad = c(r#"{"family":"sp2n","n":1,"beta1":"1"}"#);
        assert_eq!(ih_algebra_family(bad.as_ptr(), &mut alg), IhStatus::Usage);
        assert_eq!(ih_algebra_family(c("{").as_ptr(), &mut alg), IhStatus::Parse);
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/infhecke.h")).unwrap();
    for name in [
        "ih_last_error", "ih_algebra_hz", "ih_algebra_family", "ih_algebra_free", "ih_element_parse",
        "ih_element_free", "ih_element_add", "ih_element_mul", "ih_element_commutator", "ih_element_equal",
        "ih_element_is_central", "ih_element_to_string", "ih_element_to_json", "ih_string_free", "ih_tz",
        "ih_fg_pair", "ih_phi_z", "typedef struct IhAlgebra IhAlgebra", "IH_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
