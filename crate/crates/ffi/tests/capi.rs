use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use shiftedkeys_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    sk_string_free(p);
    s
}

#[test]
fn evaluate_and_compare() {
    unsafe {
        let (mut a, mut b, mut sum) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        assert_eq!(sk_poly_eval(c("key 0,1").as_ptr(), &mut a), SkStatus::Ok);
        assert_eq!(sk_poly_parse(c("x1 + x2").as_ptr(), &mut b), SkStatus::Ok);
        assert_eq!(sk_poly_equal(a, b), 1);
        assert_eq!(sk_poly_add(a, b, &mut sum), SkStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(sk_poly_to_string(sum, &mut s), SkStatus::Ok);
        assert_eq!(take_string(s), "2*x1 + 2*x2");
        assert_eq!(sk_poly_num_terms(sum), 2);
        for p in [a, b, sum] {
            sk_poly_free(p);
        }
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(sk_basis_eval(c("nosuch").as_ptr(), c("1").as_ptr(), &mut p), SkStatus::Parse);
        assert_eq!(sk_basis_eval(c("pkey").as_ptr(), c("3").as_ptr(), &mut p), SkStatus::Domain);
        let msg = CStr::from_ptr(sk_last_error()).to_str().unwrap();
        assert!(msg.contains("symmetric"), "{msg}");
        assert_eq!(sk_poly_parse(ptr::null(), &mut p), SkStatus::NullPointer);
        assert_eq!(sk_poly_parse(c("x1").as_ptr(), ptr::null_mut()), SkStatus::NullPointer);
        assert!(p.is_null());
        sk_poly_free(ptr::null_mut());
        sk_string_free(ptr::null_mut());
    }
}

#[test]
fn expansions() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(sk_poly_eval(c("invschub-sp (1,3)(2,5)(4,7)(6,8)").as_ptr(), &mut f), SkStatus::Ok);
        let mut e = ptr::null_mut();
        assert_eq!(sk_expand(f, c("pkey").as_ptr(), &mut e), SkStatus::Ok);
        assert_eq!(sk_expansion_len(e), 2);
        assert_eq!(sk_expansion_is_positive(e), 1);
        let mut s = ptr::null_mut();
        assert_eq!(sk_expansion_to_string(e, &mut s), SkStatus::Ok);
        assert_eq!(take_string(s), "κP[140101] + κP[3303]");
        sk_expansion_free(e);
        let mut g = ptr::null_mut();
        assert_eq!(sk_poly_parse(c("x1 - x2").as_ptr(), &mut g), SkStatus::Ok);
        assert_eq!(sk_expand(g, c("key").as_ptr(), &mut e), SkStatus::Ok);
        assert_eq!(sk_expansion_is_positive(e), 0);
        sk_expansion_free(e);
        assert_eq!(sk_expand(g, c("bogus").as_ptr(), &mut e), SkStatus::Parse);
        sk_poly_free(f);
        sk_poly_free(g);
    }
}

#[test]
fn verify_sweep() {
    unsafe {
        let mut verdict = -1;
        let mut json = ptr::null_mut();
        assert_eq!(sk_verify(c("FKSO").as_ptr(), 5, &mut verdict, &mut json), SkStatus::Ok);
        assert_eq!(verdict, 0);
        let j = take_string(json);
        assert!(j.contains("\"status\":\"verified\""), "{j}");
        assert_eq!(sk_verify(c("FKSS").as_ptr(), 99, &mut verdict, ptr::null_mut()), SkStatus::Guard);
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/shiftedkeys.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in ["sk_poly_parse", "sk_expand", "sk_verify", "SK_STATUS_NOT_FOUND", "typedef struct SkPoly SkPoly"] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler; skipping link test");
        return;
    };
    assert!(cc.status.success());
    let lib = target_dir().join("libshiftedkeys_ffi.a");
    if !lib.exists() {
        eprintln!("{} not built; skipping link test", lib.display());
        return;
    }
    let out = std::env::temp_dir().join(format!("shiftedkeys_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C smoke test failed to build");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).contains("ok 0.1.0"));
}
