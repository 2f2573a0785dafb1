use std::ffi::{CStr, CString};
use std::ptr;

use barbell::scenarios::Report;
use barbell_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    barbell_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = barbell_last_error();
    assert!(!p.is_null(), "expected an error message");
    CStr::from_ptr(p).to_str().unwrap().to_owned()
}

#[test]
fn theorem_round_trip() {
    unsafe {
        let mut r = ptr::null_mut();
        let status = barbell_run(c("morsesimple-s3").as_ptr(), c(r#"{"k": 2, "l": 3}"#).as_ptr(), &mut r);
        assert_eq!(status, BarbellStatus::Ok);
        assert_eq!(barbell_report_passed(r), 1);
        assert_eq!(barbell_report_check_count(r), 5);
        let json = take_string(barbell_report_to_json(r));
        let parsed = Report::from_json(&json).unwrap();
        assert_eq!(parsed.rerun().unwrap(), parsed);
        let table = take_string(barbell_report_table(r));
        assert!(table.contains("12  (expected 12)"));
        barbell_report_free(r);
    }
}

#[test]
fn hypothesis_violation_is_invalid() {
    unsafe {
        let mut r = ptr::null_mut();
        let status = barbell_run(c("morsesimple-s3").as_ptr(), c(r#"{"k": 0, "l": 1}"#).as_ptr(), &mut r);
        assert_eq!(status, BarbellStatus::Invalid);
        assert!(r.is_null());
        assert!(last_error().contains("k >= 1"));
    }
}

#[test]
fn bad_arguments() {
    unsafe {
        let mut r = ptr::null_mut();
        assert_eq!(barbell_run(ptr::null(), ptr::null(), &mut r), BarbellStatus::NullPointer);
        assert_eq!(barbell_run(c("unknots").as_ptr(), ptr::null(), ptr::null_mut()), BarbellStatus::NullPointer);
        let bad = [0xffu8, 0];
        assert_eq!(barbell_run(bad.as_ptr().cast(), ptr::null(), &mut r), BarbellStatus::InvalidUtf8);
        assert_eq!(barbell_run(c("unknots").as_ptr(), c("{\"kk\": 1}").as_ptr(), &mut r), BarbellStatus::Invalid);
        assert!(last_error().contains("invalid parameters"));
        assert_eq!(barbell_report_passed(ptr::null()), -1);
        assert!(barbell_report_to_json(ptr::null()).is_null());
        barbell_report_free(ptr::null_mut());
        barbell_string_free(ptr::null_mut());
    }
}

#[test]
fn scenario_and_sweep() {
    let scenario = r#"{
        "geometry": "torusComplement",
        "barbells": [
            { "cuff1": "S_h", "cuff2": "S_h", "holonomy": "t" },
            { "cuff1": "S_v", "cuff2": "S_v", "holonomy": "t" }
        ],
        "expected": { "f2_dim": 7 }
    }"#;
    unsafe {
        let mut r = ptr::null_mut();
        // 2k+2l+2 = 6, so the golden value is wrong on purpose.
        assert_eq!(barbell_run_scenario(c(scenario).as_ptr(), &mut r), BarbellStatus::Mismatch);
        assert_eq!(barbell_report_passed(r), 0);
        barbell_report_free(r);

        let mut r = ptr::null_mut();
        assert_eq!(barbell_run_sweep(c("montesinos").as_ptr(), c(r#"{"max": 8}"#).as_ptr(), &mut r), BarbellStatus::Ok);
        barbell_report_free(r);
    }
}

#[test]
fn version_is_the_crate_version() {
    let v = unsafe { CStr::from_ptr(barbell_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}
