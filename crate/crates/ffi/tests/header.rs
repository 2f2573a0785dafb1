//! The generated header, compiled and linked from C against the static
//! library.

use std::path::{Path, PathBuf};
use std::process::Command;

const HEADER: &str = include_str!("../include/barbell.h");

#[test]
fn header_declares_the_api() {
    for name in [
        "barbell_run",
        "barbell_run_sweep",
        "barbell_run_scenario",
        "barbell_report_passed",
        "barbell_report_to_json",
        "barbell_report_free",
        "barbell_string_free",
        "barbell_last_error",
        "typedef struct BarbellReport BarbellReport;",
        "BARBELL_STATUS_INVALID = 2",
    ] {
        assert!(HEADER.contains(name), "missing {name}");
    }
}

/// `target/<profile>`, found from the test executable in `target/<profile>/deps`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "barbell.h"

int main(void) {
    BarbellReport *r = NULL;
    if (barbell_run("morsesimple-s3", "{\"k\": 1, \"l\": 1}", &r) != BARBELL_STATUS_OK) return 10;
    if (barbell_report_passed(r) != 1) return 11;
    char *json = barbell_report_to_json(r);
    if (json == NULL || strstr(json, "t^-3 + t^-1 + 1 + t + t^3") == NULL) return 12;
    barbell_string_free(json);
    barbell_report_free(r);
    r = NULL;
    if (barbell_run("lessSimple", "{\"m\": 50, \"k\": 1}", &r) != BARBELL_STATUS_INVALID) return 13;
    if (r != NULL || barbell_last_error() == NULL) return 14;
    puts("ok");
    return 0;
}
"#;

#[test]
fn c_program_links_and_runs() {
    let lib = profile_dir().join("libbarbell_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("ffi-smoke");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(&src, PROGRAM).unwrap();
    let exe = dir.join("smoke");
    let include = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is available as cc");
    assert!(status.success(), "compiling the C smoke test failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "ok\n");
}
