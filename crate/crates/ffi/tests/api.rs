use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use nefhodge_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    unsafe {
        nh_last_error(buf.as_mut_ptr(), buf.len());
        CStr::from_ptr(buf.as_ptr()).to_string_lossy().into_owned()
    }
}

fn polytope(dim: usize, coords: &[i64]) -> *mut NhPolytope {
    let mut p = ptr::null_mut();
    let st = unsafe { nh_polytope_from_points(dim, coords.as_ptr(), coords.len() / dim, &mut p) };
    assert_eq!(st, NhStatus::Ok, "{}", last_error());
    p
}

#[test]
fn square_and_cross() {
    let p = polytope(2, &[1, 1, 1, -1, -1, 1, -1, -1]);
    unsafe {
        assert_eq!(nh_polytope_dim(p), 2);
        assert_eq!(nh_polytope_vertex_count(p), 4);
        let mut n = 0;
        assert_eq!(nh_polytope_point_count(p, &mut n), NhStatus::Ok);
        assert_eq!(n, 9);
        let mut d = ptr::null_mut();
        assert_eq!(nh_polytope_dual(p, &mut d), NhStatus::Ok);
        assert_eq!(nh_polytope_point_count(d, &mut n), NhStatus::Ok);
        assert_eq!(n, 5);
        let mut refl = false;
        assert_eq!(nh_polytope_is_reflexive(d, &mut refl), NhStatus::Ok);
        assert!(refl);
        nh_polytope_free(d);
        nh_polytope_free(p);
    }
}

#[test]
fn sextic_hodge_numbers() {
    let text = CString::new("1 6 1\n1 1 1 1 1 1\n6\n").unwrap();
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(nh_polytope_from_weights(text.as_ptr(), NhMode::Full, &mut p), NhStatus::Ok, "{}", last_error());
        let mut n = 0;
        nh_polytope_point_count(p, &mut n);
        assert_eq!(n, 462);
        let mut parts = ptr::null_mut();
        assert_eq!(nh_nef_partitions(p, 1, &mut parts), NhStatus::Ok);
        assert_eq!(nh_partitions_len(parts), 1);
        let mut h = ptr::null_mut();
        assert_eq!(nh_hodge_compute(parts, 0, &mut h), NhStatus::Ok, "{}", last_error());
        let (mut h11, mut h31, mut chi) = (0, 0, 0);
        assert_eq!(nh_hodge_dim(h), 4);
        nh_hodge_get(h, 1, 1, &mut h11);
        nh_hodge_get(h, 3, 1, &mut h31);
        nh_hodge_euler(h, &mut chi);
        assert_eq!((h11, h31, chi), (1, 426, 2610));
        nh_hodge_free(h);
        nh_partitions_free(parts);
        nh_polytope_free(p);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(nh_polytope_from_points(2, ptr::null(), 3, &mut p), NhStatus::NullPointer);
        assert!(p.is_null());
        assert!(last_error().contains("null"));

        let bad = CString::new("2 2\n1 0\n").unwrap();
        assert_eq!(nh_polytope_parse(bad.as_ptr(), &mut p), NhStatus::Parse);

        // a triangle with a vertex far out is not reflexive
        let t = polytope(2, &[3, 0, 0, 1, -1, -1]);
        let mut parts = ptr::null_mut();
        assert_eq!(nh_nef_partitions(t, 2, &mut parts), NhStatus::NotReflexive);
        assert!(parts.is_null());
        let mut d = ptr::null_mut();
        let line = polytope(2, &[1, 0, 2, 0]);
        assert_eq!(nh_polytope_dual(line, &mut d), NhStatus::OriginNotInterior);

        let sq = polytope(2, &[1, 1, 1, -1, -1, 1, -1, -1]);
        assert_eq!(nh_nef_partitions(sq, 1, &mut parts), NhStatus::Ok);
        let mut h = ptr::null_mut();
        assert_eq!(nh_hodge_compute(parts, 5, &mut h), NhStatus::OutOfRange);
        assert_eq!(nh_polytope_point_count(ptr::null(), ptr::null_mut()), NhStatus::NullPointer);
        assert_eq!(nh_polytope_dim(ptr::null()), 0);

        let mut small = [0 as c_char; 4];
        let full = nh_last_error(small.as_mut_ptr(), small.len());
        assert!(full > 3);
        assert_eq!(CStr::from_ptr(small.as_ptr()).to_bytes().len(), 3);

        nh_partitions_free(parts);
        nh_polytope_free(sq);
        nh_polytope_free(line);
        nh_polytope_free(t);
        nh_polytope_free(ptr::null_mut());
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(nh_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

/// The generated header compiles and links against the static library.
#[test]
fn c_program_links() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = manifest.join("include/nefhodge.h");
    let header_text = std::fs::read_to_string(&header).unwrap();
    for name in ["nh_polytope_from_points", "nh_hodge_compute", "NH_STATUS_NOT_REFLEXIVE", "typedef struct NhPolytope"] {
        assert!(header_text.contains(name), "{name} missing from header");
    }
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("no C compiler, header checked textually only");
        return;
    }
    // target/<profile>/deps/api-* -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|d| d.parent()).unwrap();
    let lib = profile_dir.join("libnefhodge_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out = tempfile::tempdir().unwrap();
    let bin = out.path().join("smoke");
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&bin).output().unwrap();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert!(String::from_utf8_lossy(&run.stdout).starts_with("ok "));
}
