use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use cyclomahonian_ffi::*;

unsafe fn take_string(s: *mut c_char) -> String {
    let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
    cm_string_free(s);
    text
}

unsafe fn last_error() -> String {
    CStr::from_ptr(cm_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn poly_render_symbolic_and_specialized() {
    unsafe {
        let mut poly = ptr::null_mut();
        assert_eq!(cm_euler_mahonian(3, false, 1, &mut poly), CmStatus::Ok);
        let mut count = 0;
        assert_eq!(cm_poly_term_count(poly, &mut count), CmStatus::Ok);
        assert_eq!(count, 6);
        let mut s = ptr::null_mut();
        assert_eq!(cm_poly_render(poly, 2, &mut s), CmStatus::Ok);
        assert_eq!(take_string(s), "1 - t^2*q^3");
        assert_eq!(cm_poly_render(poly, 0, &mut s), CmStatus::Ok);
        assert!(take_string(s).starts_with("1 + "));
        cm_poly_free(poly);
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let mut poly = ptr::null_mut();
        assert_eq!(
            cm_euler_mahonian(10, false, 1, &mut poly),
            CmStatus::ResourceLimit
        );
        assert!(poly.is_null());
        assert!(last_error().contains("cap"));
        assert_eq!(
            cm_euler_mahonian(3, false, 1, ptr::null_mut()),
            CmStatus::NullPointer
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            cm_poly_render(ptr::null(), 0, &mut s),
            CmStatus::NullPointer
        );

        let mut list = ptr::null_mut();
        let bad = CString::new("nosuch").unwrap();
        assert_eq!(
            cm_verify(bad.as_ptr(), 4, ptr::null(), 0, 6, 2, 1, &mut list),
            CmStatus::InvalidArgument
        );
        assert!(last_error().contains("nosuch"));
        let zero = [0u32];
        let ok = CString::new("wachs").unwrap();
        assert_eq!(
            cm_verify(ok.as_ptr(), 4, zero.as_ptr(), 1, 6, 2, 1, &mut list),
            CmStatus::InvalidArgument
        );
        // a success clears the message
        assert_eq!(cm_euler_mahonian(2, false, 1, &mut poly), CmStatus::Ok);
        assert_eq!(last_error(), "");
        cm_poly_free(poly);
        cm_poly_free(ptr::null_mut());
        cm_report_list_free(ptr::null_mut());
        cm_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_reports_match_library() {
    unsafe {
        let suites = CString::new("wachs,main").unwrap();
        let m_set = [2u32, 3];
        let mut list = ptr::null_mut();
        assert_eq!(
            cm_verify(suites.as_ptr(), 5, m_set.as_ptr(), 2, 8, 2, 2, &mut list),
            CmStatus::Ok
        );
        let expected = cyclomahonian::identities::run_matrix(
            &cyclomahonian::identities::parse_suites("wachs,main").unwrap(),
            &cyclomahonian::identities::MatrixConfig {
                n_max: 5,
                m_set: vec![2, 3],
                trunc: 8,
                ell_max: 2,
                jobs: 1,
                allow_n10: false,
            },
        )
        .unwrap();
        assert_eq!(cm_report_list_len(list), expected.len());
        assert_eq!(cm_report_list_failed(list), 0);
        for (i, r) in expected.iter().enumerate() {
            let mut s = ptr::null_mut();
            assert_eq!(cm_report_json(list, i, &mut s), CmStatus::Ok);
            assert_eq!(take_string(s), r.to_json());
        }
        let mut s = ptr::null_mut();
        assert_eq!(
            cm_report_json(list, expected.len(), &mut s),
            CmStatus::InvalidArgument
        );
        cm_report_list_free(list);
    }
}

#[test]
fn failing_checks_are_counted() {
    unsafe {
        let suites = CString::new("q1_triple").unwrap();
        let m_set = [3u32];
        let mut list = ptr::null_mut();
        assert_eq!(
            cm_verify(suites.as_ptr(), 5, m_set.as_ptr(), 1, 8, 2, 1, &mut list),
            CmStatus::Ok
        );
        assert!(cm_report_list_failed(list) > 0);
        cm_report_list_free(list);
    }
}

#[test]
fn version_matches_package() {
    let v = unsafe { CStr::from_ptr(cm_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn target_dir() -> PathBuf {
    // tests run from <target>/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_static_library() {
    let lib = target_dir().join("libcyclomahonian_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("ffi_smoke");
    let status = Command::new(std::env::var("CC").unwrap_or_else(|_| "cc".into()))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler runs");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "1 - t^2*q^3\nwachs: 4 checks, 0 failed\nstatus 3\n"
    );
}
