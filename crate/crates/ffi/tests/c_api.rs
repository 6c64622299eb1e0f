use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use sphere_sets_ffi::*;

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { ss_string_free(p) };
    s
}

fn last_error() -> String {
    let p = ss_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn generate(family: &str, n: usize, s: usize) -> *mut SsConfiguration {
    let name = CString::new(family).unwrap();
    let mut cfg = ptr::null_mut();
    assert_eq!(unsafe { ss_configuration_generate(name.as_ptr(), n, s, &mut cfg) }, SsStatus::Ok);
    cfg
}

#[test]
fn bounds() {
    let mut v = 0u64;
    unsafe {
        assert_eq!(ss_split_bound(137, 5, &mut v), SsStatus::Ok);
        assert_eq!(v, 2224);
        assert_eq!(ss_equiangular_max_bound(400, &mut v), SsStatus::Ok);
        assert_eq!(v, 64620);
        assert_eq!(ss_two_distance_max_bound(22, SsMode::AssumeTheorems, &mut v), SsStatus::Ok);
        assert_eq!(v, 275);
        assert_eq!(ss_split_bound(137, 4, &mut v), SsStatus::Ok);
        assert_eq!(ss_split_bound(137, 2, &mut v), SsStatus::InvalidArgument);
        assert!(last_error().contains("a >= 3"));
        assert_eq!(ss_split_bound(137, 5, ptr::null_mut()), SsStatus::NullPointer);
    }
}

#[test]
fn handles_and_reports() {
    let cfg = generate("lines28", 0, 0);
    unsafe {
        assert_eq!(ss_configuration_len(cfg), 28);
        assert!(ss_configuration_is_exact(cfg));
        let mut text = ptr::null_mut();
        assert_eq!(ss_configuration_to_text(cfg, &mut text), SsStatus::Ok);
        let text = take_string(text);
        assert!(text.starts_with("dim 7"));

        let mut report = ptr::null_mut();
        let mut pass = false;
        assert_eq!(ss_certify_extremal(cfg, 3, SsFormat::Text, &mut report, &mut pass), SsStatus::Ok);
        assert!(pass);
        assert!(take_string(report).ends_with("result: PASS\n"));
        assert_eq!(ss_certify_extremal(cfg, 5, SsFormat::Csv, &mut report, &mut pass), SsStatus::Ok);
        assert!(!pass);
        assert!(take_string(report).contains(",FAIL"));

        let c_text = CString::new(text).unwrap();
        let mut copy = ptr::null_mut();
        assert_eq!(ss_configuration_parse(c_text.as_ptr(), 1e-9, &mut copy), SsStatus::Ok);
        assert_eq!(ss_configuration_len(copy), 28);
        ss_configuration_free(copy);
        ss_configuration_free(cfg);
    }

    let pentagon = generate("pentagon", 0, 0);
    unsafe {
        assert!(!ss_configuration_is_exact(pentagon));
        let mut report = ptr::null_mut();
        let mut pass = false;
        assert_eq!(ss_verify(pentagon, 6, false, SsFormat::Text, &mut report, &mut pass), SsStatus::Ok);
        assert!(pass, "{}", take_string(report));
        ss_configuration_free(pentagon);
    }
}

#[test]
fn errors() {
    let bad = CString::new("dim 2\npoint 1 0\npoint 1 1\n").unwrap();
    let mut cfg = ptr::null_mut();
    unsafe {
        assert_eq!(ss_configuration_parse(bad.as_ptr(), 1e-9, &mut cfg), SsStatus::ParseError);
        assert!(last_error().contains("line 3"));
        assert!(cfg.is_null());
        assert_eq!(ss_configuration_parse(ptr::null(), 1e-9, &mut cfg), SsStatus::NullPointer);
        let unknown = CString::new("cube").unwrap();
        assert_eq!(ss_configuration_generate(unknown.as_ptr(), 0, 0, &mut cfg), SsStatus::InvalidArgument);
        let faces = CString::new("simplex-faces").unwrap();
        assert_eq!(ss_configuration_generate(faces.as_ptr(), 3, 5, &mut cfg), SsStatus::InvalidArgument);
        assert_eq!(ss_configuration_len(ptr::null()), 0);
        ss_configuration_free(ptr::null_mut());
        ss_string_free(ptr::null_mut());
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "sphere_sets.h"

int main(void) {
    uint64_t v = 0;
    if (ss_equiangular_max_bound(400, &v) != SS_STATUS_OK || v != 64620) return 1;
    SsConfiguration *cfg = NULL;
    if (ss_configuration_generate("octahedron", 0, 0, &cfg) != SS_STATUS_OK) return 2;
    char *report = NULL;
    bool pass = false;
    if (ss_verify(cfg, 6, false, SS_FORMAT_TEXT, &report, &pass) != SS_STATUS_OK || !pass) return 3;
    if (strstr(report, "result: PASS") == NULL) return 4;
    ss_string_free(report);
    ss_configuration_free(cfg);
    if (ss_configuration_generate("cube", 0, 0, &cfg) != SS_STATUS_INVALID_ARGUMENT) return 5;
    printf("%s\n", ss_last_error());
    return 0;
}
"#;

#[test]
fn header_compiles_and_links_from_c() {
    let include = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include");
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libsphere_sets_ffi.a");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or no static library at {}", lib.display());
        return;
    }
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("c_api_smoke.c");
    let exe = dir.join("c_api_smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new(&cc)
        .args(["-std=c11", "-Wall", "-Werror", "-o"])
        .arg(&exe)
        .arg(&src)
        .arg("-I")
        .arg(&include)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm"])
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("cube"));
}
