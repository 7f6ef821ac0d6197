//! Exercises the C surface through the extern functions themselves.

use std::ffi::{CStr, CString};
use std::ptr;

use super::*;

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().expect("utf-8").to_string();
    fqg_string_free(p);
    s
}

#[test]
fn kp_lifecycle_and_verification() {
    unsafe {
        let mut g: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_kp(&mut g), FqgStatus::Ok);
        assert_eq!(fqg_group_dim(g), 8);

        let mut name: *mut c_char = ptr::null_mut();
        assert_eq!(fqg_group_name(g, &mut name), FqgStatus::Ok);
        assert_eq!(take_string(name), "kp");

        let mut passed = false;
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            fqg_group_verify_json(g, &mut passed, &mut json),
            FqgStatus::Ok
        );
        assert!(passed);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert!(report["entries"].as_array().unwrap().len() >= 8);

        fqg_group_free(g);
    }
}

#[test]
fn sekine_dual_and_errors() {
    unsafe {
        let mut g: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_sekine(1, &mut g), FqgStatus::InvalidArgument);
        let err = take_string(fqg_last_error());
        assert!(err.contains("n = 2"), "{err}");

        assert_eq!(fqg_group_sekine(3, &mut g), FqgStatus::Ok);
        assert_eq!(fqg_group_dim(g), 18);

        let mut d: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_dual(g, &mut d), FqgStatus::Ok);
        assert_eq!(fqg_group_dim(d), 18);
        let mut name: *mut c_char = ptr::null_mut();
        assert_eq!(fqg_group_name(d, &mut name), FqgStatus::Ok);
        assert_eq!(take_string(name), "dual(sekine:3)");

        // null-handle paths
        assert_eq!(fqg_group_dual(ptr::null(), &mut d), FqgStatus::NullArgument);
        assert_eq!(fqg_group_dim(ptr::null()), 0);

        fqg_group_free(d);
        fqg_group_free(g);
    }
}

#[test]
fn moments_and_catalog_json() {
    unsafe {
        let mut g: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_kp(&mut g), FqgStatus::Ok);

        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(fqg_irreps_json(g, &mut json), FqgStatus::Ok);
        let cat: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(cat.as_array().unwrap().len(), 5);

        let rep = CString::new("fundamental").unwrap();
        assert_eq!(
            fqg_char_moments_json(g, rep.as_ptr(), 2, 4, &mut json),
            FqgStatus::Ok
        );
        let table: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        let m2 = table["moments"]
            .as_array()
            .unwrap()
            .iter()
            .find(|m| m["word"] == "aa")
            .unwrap();
        assert_eq!(m2["value"]["rational"], "2/1");

        let bad = CString::new("nope").unwrap();
        assert_eq!(
            fqg_char_moments_json(g, bad.as_ptr(), 1, 4, &mut json),
            FqgStatus::InvalidArgument
        );
        let err = take_string(fqg_last_error());
        assert!(err.contains("unknown representation"));

        fqg_group_free(g);
    }
}

#[test]
fn file_roundtrip() {
    unsafe {
        let mut g: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_sekine(2, &mut g), FqgStatus::Ok);
        let mut path = std::env::temp_dir();
        path.push(format!("fqg-ffi-test-{}.json", std::process::id()));
        let cpath = CString::new(path.to_str().unwrap()).unwrap();
        assert_eq!(fqg_group_to_file(g, cpath.as_ptr()), FqgStatus::Ok);

        let mut g2: *mut FqgGroup = ptr::null_mut();
        assert_eq!(fqg_group_from_file(cpath.as_ptr(), &mut g2), FqgStatus::Ok);
        assert_eq!(fqg_group_dim(g2), 8);
        let mut passed = false;
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            fqg_group_verify_json(g2, &mut passed, &mut json),
            FqgStatus::Ok
        );
        assert!(passed);
        fqg_string_free(json);

        fqg_group_free(g2);
        fqg_group_free(g);
        std::fs::remove_file(&path).ok();

        // missing file reports Io
        let missing = CString::new("/nonexistent/fqg.json").unwrap();
        assert_eq!(
            fqg_group_from_file(missing.as_ptr(), &mut g2),
            FqgStatus::Io
        );
    }
}
