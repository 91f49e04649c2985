use std::ffi::{CStr, CString};
use std::ptr;

use parahess_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ph_last_error_message()) }.to_string_lossy().into_owned()
}

fn partition(parts: &[usize]) -> *mut PhPartition {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ph_partition_new(parts.as_ptr(), parts.len(), &mut out) }, PhStatus::Ok);
    out
}

fn parabolic(n: usize, j: &[usize]) -> *mut PhParabolic {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ph_parabolic_new(n, j.as_ptr(), j.len(), &mut out) }, PhStatus::Ok);
    out
}

fn coeffs(p: *const PhPoly) -> Vec<u64> {
    unsafe { (0..ph_poly_len(p)).map(|k| ph_poly_coeff(p, k)).collect() }
}

#[test]
fn poincare_of_two_two() {
    let lambda = partition(&[2, 2]);
    let p = parabolic(4, &[1, 3]);
    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { ph_poincare_parabolic(lambda, p, &mut poly) }, PhStatus::Ok);
    assert_eq!(coeffs(poly), [1, 3, 4, 3, 1]);
    unsafe { ph_poly_free(poly) };

    let h = [2usize, 2, 4, 4];
    let mut poly = ptr::null_mut();
    assert_eq!(unsafe { ph_poincare_hessenberg(lambda, h.as_ptr(), h.len(), &mut poly) }, PhStatus::Ok);
    assert_eq!(coeffs(poly), [1, 3, 4, 3, 1]);
    unsafe {
        ph_poly_free(poly);
        ph_parabolic_free(p);
        ph_partition_free(lambda);
    }
}

#[test]
fn main_theorem_report() {
    let lambda = partition(&[2, 1, 1]);
    let p = parabolic(4, &[1, 3]);
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { ph_verify_main_theorem(lambda, p, &mut report) }, PhStatus::Ok);
    assert!(unsafe { ph_report_equal(report) });
    assert!(unsafe { ph_report_in_hypothesis(report) });
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { ph_report_hessenberg_poly(report, &mut a) }, PhStatus::Ok);
    assert_eq!(unsafe { ph_report_schubert_poly(report, &mut b) }, PhStatus::Ok);
    assert_eq!(coeffs(a), coeffs(b));
    unsafe {
        ph_poly_free(a);
        ph_poly_free(b);
        ph_report_free(report);
        ph_parabolic_free(p);
        ph_partition_free(lambda);
    }
}

#[test]
fn schubert_point_and_dimension() {
    let text = CString::new("2,1,1").unwrap();
    let mut lambda = ptr::null_mut();
    assert_eq!(unsafe { ph_partition_parse(text.as_ptr(), &mut lambda) }, PhStatus::Ok);
    assert_eq!(unsafe { ph_partition_size(lambda) }, 4);
    let w = [3usize, 4, 1, 2];
    let mut point = [0usize; 4];
    assert_eq!(unsafe { ph_schubert_point(lambda, w.as_ptr(), 4, point.as_mut_ptr()) }, PhStatus::Ok);
    assert_eq!(point, [1, 4, 2, 3]);
    let mut dim = 0;
    assert_eq!(unsafe { ph_springer_cell_dim(lambda, w.as_ptr(), 4, &mut dim) }, PhStatus::Ok);
    assert_eq!(dim, 2);
    unsafe { ph_partition_free(lambda) };
}

#[test]
fn error_codes() {
    let mut out = ptr::null_mut();
    let bad = [1usize, 2];
    assert_eq!(unsafe { ph_partition_new(bad.as_ptr(), 2, &mut out) }, PhStatus::Domain);
    assert!(last_error().contains("partition"), "{}", last_error());
    assert_eq!(unsafe { ph_partition_new(ptr::null(), 2, &mut out) }, PhStatus::NullPointer);
    assert_eq!(unsafe { ph_partition_parse(ptr::null(), &mut out) }, PhStatus::NullPointer);

    let lambda = partition(&[2]);
    let w = [2usize, 1];
    let mut dim = 0;
    assert_eq!(unsafe { ph_springer_cell_dim(lambda, w.as_ptr(), 2, &mut dim) }, PhStatus::Domain);
    assert!(last_error().contains("Springer"));
    let w3 = [1usize, 2, 3];
    assert_eq!(unsafe { ph_springer_cell_dim(lambda, w3.as_ptr(), 3, &mut dim) }, PhStatus::Domain);
    let id = [1usize, 2];
    assert_eq!(unsafe { ph_springer_cell_dim(lambda, id.as_ptr(), 2, &mut dim) }, PhStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe { ph_partition_free(lambda) };

    let all = CString::new("all").unwrap();
    let mut failures = 99;
    assert_eq!(unsafe { ph_run_checks(3, all.as_ptr(), &mut failures) }, PhStatus::Ok);
    assert_eq!(failures, 0);
    assert_eq!(unsafe { ph_run_checks(9, all.as_ptr(), &mut failures) }, PhStatus::Domain);
    let bogus = CString::new("bogus").unwrap();
    assert_eq!(unsafe { ph_run_checks(3, bogus.as_ptr(), &mut failures) }, PhStatus::Domain);

    unsafe {
        ph_partition_free(ptr::null_mut());
        ph_poly_free(ptr::null_mut());
        assert_eq!(ph_poly_len(ptr::null()), 0);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(ph_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_every_symbol() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/parahess.h")).unwrap();
    let source = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    let exported: Vec<&str> = source
        .lines()
        .filter_map(|l| l.split("extern \"C\" fn ").nth(1))
        .map(|rest| rest.split('(').next().unwrap())
        .collect();
    assert!(exported.len() >= 20, "{exported:?}");
    for name in exported {
        assert!(header.contains(&format!("{name}(")), "{name} missing from header");
    }
    for ty in ["PhPartition", "PhParabolic", "PhPoly", "PhReport", "PH_STATUS_OK", "PH_STATUS_PANIC"] {
        assert!(header.contains(ty), "{ty}");
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = std::env::temp_dir().join(format!("parahess-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        "#include \"parahess.h\"\nint main(void) { PhPartition *p = 0; return ph_partition_new(0, 0, &p) == PH_STATUS_OK; }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .status();
    std::fs::remove_dir_all(&dir).unwrap();
    match status {
        Ok(s) => assert!(s.success(), "cc rejected the header"),
        Err(e) => eprintln!("no C compiler available, skipped: {e}"),
    }
}
