use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use serde_json::Value;
use ssr_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ssr_last_error()) }.to_str().unwrap().to_string()
}

fn construct(id: &str, field: &str) -> *mut SsrRepr {
    let mut out = ptr::null_mut();
    let st = unsafe { ssr_construct(c(id).as_ptr(), ptr::null(), c(field).as_ptr(), &mut out) };
    assert_eq!(st, SsrStatus::Ok, "{}", last_error());
    out
}

fn take(rep: *mut SsrReport) -> (bool, Value) {
    unsafe {
        let passed = ssr_report_passed(rep);
        let s = ssr_report_json(rep);
        let v = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        ssr_string_free(s);
        ssr_report_free(rep);
        (passed, v)
    }
}

#[test]
fn decompose_through_the_abi() {
    let r = construct("BinaryCubics", "Q");
    unsafe {
        assert_eq!(ssr_repr_dim(r), 4);
        let mut rep = ptr::null_mut();
        assert_eq!(ssr_decompose(r, c("[1,0,0,1]").as_ptr(), ptr::null(), &mut rep), SsrStatus::Ok);
        let (passed, v) = take(rep);
        assert!(passed);
        assert_eq!(v["q"], "-3/1");
        assert_eq!(v["eigen_dims"], serde_json::json!([1, 1, 1, 1]));

        let mut rep = ptr::null_mut();
        assert_eq!(ssr_decompose(r, c("[1,0,-1,0]").as_ptr(), c("-1").as_ptr(), &mut rep), SsrStatus::Ok);
        assert_eq!(take(rep).1["q"]["im"], "6/1");
        ssr_repr_free(r);
    }
}

#[test]
fn errors_map_to_codes() {
    let r = construct("BinaryCubics", "F7");
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(ssr_decompose(r, c("[1,0]").as_ptr(), ptr::null(), &mut rep), SsrStatus::InvalidInput);
        assert!(rep.is_null());
        assert!(last_error().contains("dimension"));
        assert_eq!(ssr_decompose(r, ptr::null(), ptr::null(), &mut rep), SsrStatus::NullOrInvalidArgument);
        assert_eq!(ssr_verify(ptr::null(), false, &mut rep), SsrStatus::NullOrInvalidArgument);
        assert_eq!(ssr_verify(r, false, ptr::null_mut()), SsrStatus::NullOrInvalidArgument);
        let mut bad = ptr::null_mut();
        assert_eq!(
            ssr_construct(c("NoSuchThing").as_ptr(), ptr::null(), c("Q").as_ptr(), &mut bad),
            SsrStatus::InvalidInput
        );
        assert_eq!(ssr_chart(r, c("gamma").as_ptr(), c("1").as_ptr(), c("{}").as_ptr(), ptr::null(), &mut rep), SsrStatus::InvalidInput);
        assert_eq!(ssr_verify(r, false, &mut rep), SsrStatus::Ok);
        assert_eq!(last_error(), "");
        ssr_report_free(rep);
        ssr_repr_free(r);
        ssr_repr_free(ptr::null_mut());
        ssr_report_free(ptr::null_mut());
        ssr_string_free(ptr::null_mut());
    }
}

#[test]
fn broken_data_reports_a_failed_check() {
    let r = construct("BinaryCubics", "Q");
    unsafe {
        let s = ssr_repr_to_json(r);
        let mut v: Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        ssr_string_free(s);
        v["bmu"][0][3][0] = "1/1".into();
        v["bmu"][3][0][0] = "1/1".into();
        let mut broken = ptr::null_mut();
        assert_eq!(ssr_repr_from_json(c(&v.to_string()).as_ptr(), ptr::null(), &mut broken), SsrStatus::Ok);
        let mut rep = ptr::null_mut();
        assert_eq!(ssr_verify(broken, false, &mut rep), SsrStatus::CheckFailed);
        let (passed, report) = take(rep);
        assert!(!passed);
        assert_eq!(report["defining_identity"], false);
        ssr_repr_free(broken);
        ssr_repr_free(r);
    }
}

#[test]
fn lie_algebra_and_charts() {
    let r = construct("PrimitiveThreeForms6", "F7");
    unsafe {
        assert_eq!((ssr_repr_dim(r), ssr_repr_algebra_dim(r)), (14, 21));
        let mut rep = ptr::null_mut();
        assert_eq!(ssr_lie_build(r, false, 1, &mut rep), SsrStatus::Ok);
        let (_, v) = take(rep);
        assert_eq!(v["dim"], 52);
        assert_eq!(v["simple"], true);
        ssr_repr_free(r);

        let cubics = construct("BinaryCubics", "Q");
        let pt = c(r#"{"P":[1,0,0,1],"z":3}"#);
        assert_eq!(ssr_chart(cubics, c("act").as_ptr(), c("1").as_ptr(), pt.as_ptr(), c("[2,0]").as_ptr(), &mut rep), SsrStatus::Ok);
        assert_eq!(take(rep).1["point"]["z"], "12/1");
        assert_eq!(ssr_syzygy(cubics, c("[1,2,3,4]").as_ptr(), c("[1,1]").as_ptr(), &mut rep), SsrStatus::Ok);
        assert_eq!(take(rep).1["classical"]["holds"], true);
        assert_eq!(ssr_covariants(cubics, c("[1,0,0,1]").as_ptr(), 3, &mut rep), SsrStatus::Ok);
        assert_eq!(take(rep).1["seed"], 3);
        ssr_repr_free(cubics);
    }
}

#[test]
fn fiber_points_share_the_moment() {
    let r = construct("BinaryCubics", "F7");
    unsafe {
        let mut rep = ptr::null_mut();
        assert_eq!(ssr_fiber(r, c("[1,0,0,1]").as_ptr(), 4, &mut rep), SsrStatus::Ok);
        let (passed, v) = take(rep);
        assert!(passed);
        assert!(v["points"].as_array().unwrap().iter().all(|p| p["same_mu"] == true));
        ssr_repr_free(r);
    }
}

#[test]
fn header_lists_every_entry_point() {
    let header = std::fs::read_to_string(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/ssr.h")).unwrap();
    for f in [
        "ssr_version", "ssr_last_error", "ssr_string_free", "ssr_construct", "ssr_repr_from_json", "ssr_repr_to_json",
        "ssr_repr_dim", "ssr_repr_algebra_dim", "ssr_repr_free", "ssr_verify", "ssr_covariants", "ssr_decompose",
        "ssr_fiber", "ssr_syzygy", "ssr_lie_build", "ssr_chart", "ssr_selftest", "ssr_report_passed",
        "ssr_report_json", "ssr_report_free",
    ] {
        assert!(header.contains(&format!("{f}(")), "{f} missing from the header");
    }
    assert!(header.contains("typedef struct SsrRepr SsrRepr;"));
}

#[test]
fn c_program_links_against_the_library() {
    // target/<profile>/deps/<this test> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let lib_dir = exe.parent().unwrap().parent().unwrap().to_path_buf();
    assert!(lib_dir.join("libssr_ffi.so").exists(), "shared library not found in {}", lib_dir.display());
    let here = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let bin = std::env::temp_dir().join(format!("ssr-ffi-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Wextra", "-Werror"])
        .arg("-I")
        .arg(here.join("include"))
        .arg(here.join("tests/c/smoke.c"))
        .arg("-L")
        .arg(&lib_dir)
        .arg(format!("-Wl,-rpath,{}", lib_dir.display()))
        .args(["-lssr_ffi", "-o"])
        .arg(&bin)
        .status()
        .expect("a C compiler");
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    let _ = std::fs::remove_file(&bin);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
