use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use qtau_ffi::*;

fn points(s: &str) -> *mut QtauPointSet {
    let text = CString::new(s).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { qtau_points_parse(text.as_ptr(), &mut p) }, QtauStatus::Ok);
    p
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { qtau_string_free(s) };
    out
}

fn last_error() -> String {
    let p = qtau_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn scalar_forms_agree_with_chain() {
    let x = points("1/2,-3,2/7");
    let y = points("5/3,1/4,-2");
    assert_eq!(unsafe { qtau_points_len(x) }, 3);
    let mut det = ptr::null_mut();
    let mut sum = ptr::null_mut();
    unsafe {
        assert_eq!(qtau_scalar_product(x, y, 2, QtauScalarMode::Det, &mut det), QtauStatus::Ok);
        assert_eq!(qtau_scalar_product(x, y, 2, QtauScalarMode::SchurSum, &mut sum), QtauStatus::Ok);
    }
    let det = take(det);
    assert_eq!(det, take(sum));

    let mut chain = ptr::null_mut();
    let mut pair = ptr::null_mut();
    unsafe {
        assert_eq!(qtau_chain_new(ptr::null(), 2, 3, &mut chain), QtauStatus::Ok);
        assert_eq!(qtau_chain_pairing(chain, x, y, -1, &mut pair), QtauStatus::Ok);
        qtau_chain_free(chain);
    }
    assert_eq!(take(pair), det);
    unsafe {
        qtau_points_free(x);
        qtau_points_free(y);
    }
}

#[test]
fn qboson_and_correlation() {
    let x = points("1/2,-3");
    let y = points("5/3,1/4");
    let q = CString::new("1/3").unwrap();
    let mut a = ptr::null_mut();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(qtau_scalar_product_q(x, y, 3, q.as_ptr(), QtauQScalarMode::HlSum, &mut a), QtauStatus::Ok);
        assert_eq!(qtau_scalar_product_q(x, y, 3, q.as_ptr(), QtauQScalarMode::BigSchur, &mut b), QtauStatus::Ok);
    }
    assert!(!take(a).is_empty());
    assert!(!take(b).is_empty());

    let y1 = points("7/5");
    let mut det = ptr::null_mut();
    let mut skew = ptr::null_mut();
    unsafe {
        assert_eq!(qtau_correlation(x, y1, 2, 1, QtauCorrelationMode::Det, &mut det), QtauStatus::Ok);
        assert_eq!(qtau_correlation(x, y1, 2, 1, QtauCorrelationMode::SkewSum, &mut skew), QtauStatus::Ok);
        qtau_points_free(x);
        qtau_points_free(y);
        qtau_points_free(y1);
    }
    assert_eq!(take(det), take(skew));
}

#[test]
fn errors_become_status_codes() {
    let mut p = ptr::null_mut();
    let bad = CString::new("1/0,x").unwrap();
    assert_eq!(unsafe { qtau_points_parse(bad.as_ptr(), &mut p) }, QtauStatus::Parse);
    assert!(p.is_null());
    assert!(!last_error().is_empty());

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { qtau_scalar_product(ptr::null(), ptr::null(), 1, QtauScalarMode::Det, &mut out) },
        QtauStatus::NullPointer
    );
    assert!(last_error().contains("null"));

    let suite = CString::new("nope").unwrap();
    let mut pass = 0;
    assert_ne!(unsafe { qtau_run_suite(suite.as_ptr(), 1, &mut out, &mut pass) }, QtauStatus::Ok);

    let x = points("1,2");
    let mut chain = ptr::null_mut();
    unsafe {
        assert_eq!(qtau_chain_new(ptr::null(), 1, 1, &mut chain), QtauStatus::Ok);
        assert_eq!(qtau_chain_pairing(chain, x, x, -1, &mut out), QtauStatus::InvalidArgument);
        qtau_chain_free(chain);
        qtau_points_free(x);
        qtau_points_free(ptr::null_mut());
        qtau_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { qtau_kostka_json(11, &mut out) }, QtauStatus::SizeCap);
}

#[test]
fn bethe_roots_lie_on_circle() {
    let qn = [0i64, 1, 2];
    let mut roots = [0.0f64; 6];
    let mut residual = f64::NAN;
    assert_eq!(unsafe { qtau_bethe_phase(3, 4, qn.as_ptr(), roots.as_mut_ptr(), &mut residual) }, QtauStatus::Ok);
    assert!(residual < 1e-10);
    for z in roots.chunks(2) {
        assert!((z[0].hypot(z[1]) - 1.0).abs() < 1e-12);
    }
    let dup = [0i64, 0];
    assert_eq!(unsafe { qtau_bethe_phase(2, 4, dup.as_ptr(), roots.as_mut_ptr(), &mut residual) }, QtauStatus::InvalidArgument);
}

#[test]
fn suite_and_kostka_json() {
    let suite = CString::new("kostka").unwrap();
    let mut out = ptr::null_mut();
    let mut pass = -1;
    assert_eq!(unsafe { qtau_run_suite(suite.as_ptr(), 7, &mut out, &mut pass) }, QtauStatus::Ok);
    assert_eq!(pass, 1);
    let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(report["all_pass"], true);

    assert_eq!(unsafe { qtau_kostka_json(3, &mut out) }, QtauStatus::Ok);
    let tables: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert!(tables.is_object());
    assert!(!unsafe { CStr::from_ptr(qtau_version()) }.to_bytes().is_empty());
}

#[test]
fn checked_in_header_is_current() {
    let generated = include_str!(concat!(env!("OUT_DIR"), "/qtau.h"));
    let checked_in = include_str!("../include/qtau.h");
    assert_eq!(generated, checked_in, "regenerate include/qtau.h from the build output");
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else { return };
    let include = concat!(env!("CARGO_MANIFEST_DIR"), "/include");
    let dir = tempfile_dir();
    let src = dir.join("use.c");
    std::fs::write(&src, "#include \"qtau.h\"\nint main(void){QtauPointSet*p=0;return (int)qtau_points_parse(\"1\",&p);}\n").unwrap();
    let status = Command::new(cc).args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I", include]).arg(&src).status().unwrap();
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc);
        }
    }
    Err(())
}

fn tempfile_dir() -> std::path::PathBuf {
    let d = std::env::temp_dir().join(format!("qtau-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}
