use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use xsep_ffi::*;

const ONES: [f64; 4] = [1.0; 4];

fn new_state(re: [f64; 4], im: [f64; 4]) -> *mut XsepState {
    let mut s = ptr::null_mut();
    let status = unsafe { xsep_state_new(ONES.as_ptr(), ONES.as_ptr(), re.as_ptr(), im.as_ptr(), 0.0, &mut s) };
    assert_eq!(status, XsepStatus::Ok);
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(xsep_last_error_message()) }.to_string_lossy().into_owned()
}

#[test]
fn classify_and_decompose_rank6() {
    let s = new_state([1.0, 1.0, 0.5, 0.5], [0.0; 4]);
    let mut v = std::mem::MaybeUninit::<XsepVerdict>::uninit();
    assert_eq!(unsafe { xsep_classify(s, v.as_mut_ptr()) }, XsepStatus::Ok);
    let v = unsafe { v.assume_init() };
    assert_eq!(v.tag, XsepVerdictTag::Separable);
    assert_eq!(v.route, XsepRoute::Rank6);
    assert_eq!(v.certificate_terms, 6);
    assert!(v.lhs.is_nan());

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { xsep_decompose(s, &mut d) }, XsepStatus::Ok);
    assert_eq!(unsafe { xsep_decomposition_len(d) }, 6);
    assert!(unsafe { xsep_decomposition_max_error(d) } < 1e-12);

    // the terms rebuild the (1,1) and (1,8) entries
    let (mut diag, mut corner) = (0.0, num_complex::Complex64::new(0.0, 0.0));
    for i in 0..6 {
        let mut t = std::mem::MaybeUninit::<XsepTerm>::uninit();
        assert_eq!(unsafe { xsep_decomposition_term(d, i, t.as_mut_ptr()) }, XsepStatus::Ok);
        let t = unsafe { t.assume_init() };
        let c = |re: [f64; 2], im: [f64; 2], k: usize| num_complex::Complex64::new(re[k], im[k]);
        let first = c(t.x_re, t.x_im, 0) * c(t.y_re, t.y_im, 0) * c(t.z_re, t.z_im, 0);
        let last = c(t.x_re, t.x_im, 1) * c(t.y_re, t.y_im, 1) * c(t.z_re, t.z_im, 1);
        diag += t.weight * first.norm_sqr();
        corner += first * last.conj() * t.weight;
    }
    assert!((diag - 1.0).abs() < 1e-12);
    assert!((corner - 1.0).norm() < 1e-12);

    let mut t = std::mem::MaybeUninit::<XsepTerm>::uninit();
    assert_eq!(unsafe { xsep_decomposition_term(d, 6, t.as_mut_ptr()) }, XsepStatus::OutOfRange);
    assert!(last_error().contains("term 6"));
    unsafe {
        xsep_decomposition_free(d);
        xsep_state_free(s);
    }
}

#[test]
fn entangled_is_not_decomposable() {
    let s = new_state([0.9, 0.9, -0.9, 0.9], [0.0; 4]);
    let mut v = std::mem::MaybeUninit::<XsepVerdict>::uninit();
    assert_eq!(unsafe { xsep_classify(s, v.as_mut_ptr()) }, XsepStatus::Ok);
    let v = unsafe { v.assume_init() };
    assert_eq!((v.tag, v.criterion), (XsepVerdictTag::PptEntangled, XsepCriterion::Phase));
    assert!(v.lhs > v.rhs);

    let mut d = ptr::null_mut();
    assert_eq!(unsafe { xsep_decompose(s, &mut d) }, XsepStatus::NotDecomposable);
    assert!(d.is_null());
    assert!(last_error().contains("not decomposable"));

    let mut a = 0.0;
    assert_eq!(unsafe { xsep_a_rho(s, &mut a) }, XsepStatus::Ok);
    assert!((a - 0.9 * 2f64.sqrt()).abs() < 1e-9);
    unsafe { xsep_state_free(s) };
}

#[test]
fn json_entry_points() {
    let input = CString::new(r#"{"a":[1,1,1,1],"b":[1,1,1,1],"c":[[1,0],[0.3333333333333333,0],[0,0.3333333333333333],[0.6666666666666666,-0.3333333333333333]]}"#).unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { xsep_state_from_json(input.as_ptr(), &mut s) }, XsepStatus::Ok);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { xsep_classify_json(s, &mut text) }, XsepStatus::Ok);
    let json = unsafe { CStr::from_ptr(text) }.to_str().unwrap().to_string();
    assert_eq!(json, r#"{"tag":"Inconclusive"}"#);
    unsafe { xsep_string_free(text) };

    let mut inv = std::mem::MaybeUninit::<XsepInvariants>::uninit();
    assert_eq!(unsafe { xsep_invariants(s, inv.as_mut_ptr()) }, XsepStatus::Ok);
    let inv = unsafe { inv.assume_init() };
    assert_eq!((inv.rank, inv.pt_ranks, inv.p_score), (7, [7, 7, 7], 28));
    unsafe { xsep_state_free(s) };

    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { xsep_state_from_json(bad.as_ptr(), &mut s) }, XsepStatus::ParseError);
    assert!(!last_error().is_empty());
}

#[test]
fn invalid_inputs() {
    let mut s = ptr::null_mut();
    let neg = [-1.0, 1.0, 1.0, 1.0];
    let zero = [0.0; 4];
    let status = unsafe { xsep_state_new(neg.as_ptr(), ONES.as_ptr(), zero.as_ptr(), zero.as_ptr(), 0.0, &mut s) };
    assert_eq!(status, XsepStatus::NotAState);
    let status = unsafe { xsep_state_new(ptr::null(), ONES.as_ptr(), zero.as_ptr(), zero.as_ptr(), 0.0, &mut s) };
    assert_eq!(status, XsepStatus::NullPointer);
    let status = unsafe { xsep_state_new(ONES.as_ptr(), ONES.as_ptr(), zero.as_ptr(), zero.as_ptr(), -1.0, &mut s) };
    assert_eq!(status, XsepStatus::InvalidArgument);
    assert_eq!(unsafe { xsep_classify(ptr::null(), ptr::null_mut()) }, XsepStatus::NullPointer);

    let not_state = new_state([2.0, 0.0, 0.0, 0.0], [0.0; 4]);
    let mut inv = std::mem::MaybeUninit::<XsepInvariants>::uninit();
    assert_eq!(unsafe { xsep_invariants(not_state, inv.as_mut_ptr()) }, XsepStatus::NotAState);
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { xsep_decompose(not_state, &mut d) }, XsepStatus::NotAState);
    unsafe {
        xsep_state_free(not_state);
        xsep_state_free(ptr::null_mut());
        xsep_decomposition_free(ptr::null_mut());
        xsep_string_free(ptr::null_mut());
    }
    assert_eq!(unsafe { xsep_decomposition_len(ptr::null()) }, 0);
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/xsep.h")).unwrap();
    for name in [
        "xsep_state_new",
        "xsep_state_from_json",
        "xsep_state_free",
        "xsep_classify",
        "xsep_classify_json",
        "xsep_string_free",
        "xsep_invariants",
        "xsep_a_rho",
        "xsep_decompose",
        "xsep_decomposition_len",
        "xsep_decomposition_term",
        "xsep_decomposition_max_error",
        "xsep_decomposition_free",
        "xsep_last_error_message",
        "typedef struct XsepState XsepState",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

/// Compiles and runs the C smoke test against the static library when a C compiler exists.
#[test]
fn c_program_links_against_header() {
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    if Command::new(&cc).arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().and_then(|p| p.parent()).unwrap().to_path_buf();
    let lib = profile_dir.join("libxsep_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let out = std::env::temp_dir().join(format!("xsep-smoke-{}", std::process::id()));
    let status = Command::new(&cc)
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}
