//! C ABI over `xsep`.
//!
//! Every entry point returns an [`XsepStatus`]; on failure a message is available from
//! [`xsep_last_error_message`] on the same thread. Handles are opaque and must be released
//! with the matching `_free` function. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use xsep::criteria::{a_rho, Criterion, Route};
use xsep::json::{parse_state, verdict_to_value};
use xsep::oracle::max_recomposition_error;
use xsep::{classify, Error, System, Verdict, WeightedDecomposition, XState, DEFAULT_TOL};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XsepStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    NotAState = 4,
    NotDecomposable = 5,
    OutOfRange = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XsepVerdictTag {
    NotAState = 0,
    NptEntangled = 1,
    PptEntangled = 2,
    Separable = 3,
    Inconclusive = 4,
}

/// Inequality behind a `PptEntangled` verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XsepCriterion {
    None = 0,
    Diag = 1,
    Phase = 2,
    ARho = 3,
    Rank6 = 4,
}

/// Branch behind a `Separable` verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XsepRoute {
    None = 0,
    Diagonal = 1,
    Rank4 = 2,
    Rank5 = 3,
    Rank6 = 4,
    CommonMagnitude = 5,
    EpsMixture = 6,
}

/// Flattened verdict. `system` is 0, 1, 2 for A, B, C on `NptEntangled` and -1 otherwise;
/// `lhs` and `rhs` are NaN when the verdict carries no inequality.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XsepVerdict {
    pub tag: XsepVerdictTag,
    pub criterion: XsepCriterion,
    pub route: XsepRoute,
    pub system: i32,
    pub lhs: f64,
    pub rhs: f64,
    pub certificate_terms: usize,
}

/// `phi` is NaN when some anti-diagonal entry vanishes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XsepInvariants {
    pub delta: f64,
    pub big_r: f64,
    pub small_r: f64,
    pub phi: f64,
    pub rank: usize,
    pub pt_ranks: [usize; 3],
    pub p_score: usize,
}

/// One weighted product vector `w |x⟩⟨x| ⊗ |y⟩⟨y| ⊗ |z⟩⟨z|` with unit-norm factors.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XsepTerm {
    pub weight: f64,
    pub x_re: [f64; 2],
    pub x_im: [f64; 2],
    pub y_re: [f64; 2],
    pub y_im: [f64; 2],
    pub z_re: [f64; 2],
    pub z_im: [f64; 2],
}

/// Opaque X-state handle.
pub struct XsepState(XState);

/// Opaque decomposition handle.
pub struct XsepDecomposition {
    inner: WeightedDecomposition,
    max_error: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<Vec<u8>>) {
    let mut bytes = msg.into();
    bytes.retain(|&b| b != 0);
    let text = CString::new(bytes).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> XsepStatus {
    match e {
        Error::Parse(_) => XsepStatus::ParseError,
        Error::NotAState | Error::NegativeDiagonal(_) | Error::NotHermitian(_) => XsepStatus::NotAState,
        Error::NotSeparable => XsepStatus::NotDecomposable,
        _ => XsepStatus::InvalidArgument,
    }
}

fn fail(status: XsepStatus, msg: impl Into<Vec<u8>>) -> XsepStatus {
    set_error(msg);
    status
}

fn from_error(e: Error) -> XsepStatus {
    fail(status_of(&e), e.to_string())
}

fn guard(f: impl FnOnce() -> XsepStatus) -> XsepStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => {
            if status == XsepStatus::Ok {
                set_error("");
            }
            status
        }
        Err(_) => fail(XsepStatus::Panic, "internal panic"),
    }
}

unsafe fn state_ref<'a>(s: *const XsepState) -> Option<&'a XState> {
    s.as_ref().map(|s| &s.0)
}

/// Builds a state from `a[4]`, `b[4]`, `c_re[4]`, `c_im[4]`. A `tol` of 0 selects the default.
///
/// # Safety
/// The four array pointers must each reference four readable doubles and `out` must be
/// writable. The handle written to `out` must be released with [`xsep_state_free`].
#[no_mangle]
pub unsafe extern "C" fn xsep_state_new(
    a: *const f64,
    b: *const f64,
    c_re: *const f64,
    c_im: *const f64,
    tol: f64,
    out: *mut *mut XsepState,
) -> XsepStatus {
    guard(|| {
        if a.is_null() || b.is_null() || c_re.is_null() || c_im.is_null() || out.is_null() {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        }
        let read = |p: *const f64| -> [f64; 4] { std::array::from_fn(|i| *p.add(i)) };
        let (re, im) = (read(c_re), read(c_im));
        let c: [Complex64; 4] = std::array::from_fn(|i| Complex64::new(re[i], im[i]));
        let tol = if tol == 0.0 { DEFAULT_TOL } else { tol };
        match XState::new(read(a), read(b), c, tol) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(XsepState(s)));
                XsepStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// Parses the JSON state format `{"a":[..], "b":[..], "c":[[re,im],..], "tol"?}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_state_from_json(json: *const c_char, out: *mut *mut XsepState) -> XsepStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        }
        let Ok(text) = CStr::from_ptr(json).to_str() else {
            return fail(XsepStatus::ParseError, "input is not UTF-8");
        };
        match parse_state(text) {
            Ok(s) => {
                *out = Box::into_raw(Box::new(XsepState(s)));
                XsepStatus::Ok
            }
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `s` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn xsep_state_free(s: *mut XsepState) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

fn flatten(v: &Verdict) -> XsepVerdict {
    let mut out = XsepVerdict {
        tag: XsepVerdictTag::Inconclusive,
        criterion: XsepCriterion::None,
        route: XsepRoute::None,
        system: -1,
        lhs: f64::NAN,
        rhs: f64::NAN,
        certificate_terms: 0,
    };
    match v {
        Verdict::NotAState => out.tag = XsepVerdictTag::NotAState,
        Verdict::Inconclusive => {}
        Verdict::NptEntangled { system, lhs, rhs } => {
            out.tag = XsepVerdictTag::NptEntangled;
            out.system = match system {
                System::A => 0,
                System::B => 1,
                System::C => 2,
            };
            (out.lhs, out.rhs) = (*lhs, *rhs);
        }
        Verdict::PptEntangled { criterion, lhs, rhs } => {
            out.tag = XsepVerdictTag::PptEntangled;
            out.criterion = match criterion {
                Criterion::Diag => XsepCriterion::Diag,
                Criterion::Phase => XsepCriterion::Phase,
                Criterion::ARho => XsepCriterion::ARho,
                Criterion::Rank6 => XsepCriterion::Rank6,
            };
            (out.lhs, out.rhs) = (*lhs, *rhs);
        }
        Verdict::Separable { route, certificate } => {
            out.tag = XsepVerdictTag::Separable;
            out.route = match route {
                Route::Diagonal => XsepRoute::Diagonal,
                Route::Rank4 => XsepRoute::Rank4,
                Route::Rank5 => XsepRoute::Rank5,
                Route::Rank6 => XsepRoute::Rank6,
                Route::CommonMagnitude => XsepRoute::CommonMagnitude,
                Route::EpsMixture => XsepRoute::EpsMixture,
            };
            out.certificate_terms = certificate.as_ref().map_or(0, |d| d.len());
        }
    }
    out
}

/// # Safety
/// `s` must be a live state handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_classify(s: *const XsepState, out: *mut XsepVerdict) -> XsepStatus {
    guard(|| {
        let (Some(s), false) = (state_ref(s), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        *out = flatten(&classify(s));
        XsepStatus::Ok
    })
}

/// Verdict as JSON, including any certificate. Release the string with [`xsep_string_free`].
///
/// # Safety
/// `s` must be a live state handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_classify_json(s: *const XsepState, out: *mut *mut c_char) -> XsepStatus {
    guard(|| {
        let (Some(s), false) = (state_ref(s), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        let text = verdict_to_value(&classify(s)).to_string();
        match CString::new(text) {
            Ok(c) => {
                *out = c.into_raw();
                XsepStatus::Ok
            }
            Err(_) => fail(XsepStatus::InvalidArgument, "verdict contains NUL"),
        }
    })
}

/// # Safety
/// `p` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn xsep_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// # Safety
/// `s` must be a live state handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_invariants(s: *const XsepState, out: *mut XsepInvariants) -> XsepStatus {
    guard(|| {
        let (Some(s), false) = (state_ref(s), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        if !s.is_positive() {
            return from_error(Error::NotAState);
        }
        let inv = s.invariants();
        *out = XsepInvariants {
            delta: inv.delta,
            big_r: inv.big_r,
            small_r: inv.small_r,
            phi: inv.phi.unwrap_or(f64::NAN),
            rank: inv.rank,
            pt_ranks: inv.pt_ranks,
            p_score: inv.p_score,
        };
        XsepStatus::Ok
    })
}

/// # Safety
/// `s` must be a live state handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_a_rho(s: *const XsepState, out: *mut f64) -> XsepStatus {
    guard(|| {
        let (Some(s), false) = (state_ref(s), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        *out = a_rho(s);
        XsepStatus::Ok
    })
}

/// Certificate for a state classified separable; `NotDecomposable` otherwise.
///
/// # Safety
/// `s` must be a live state handle and `out` writable. Release the result with
/// [`xsep_decomposition_free`].
#[no_mangle]
pub unsafe extern "C" fn xsep_decompose(s: *const XsepState, out: *mut *mut XsepDecomposition) -> XsepStatus {
    guard(|| {
        let (Some(s), false) = (state_ref(s), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        match classify(s) {
            Verdict::NotAState => from_error(Error::NotAState),
            Verdict::Separable { certificate: Some(d), .. } => {
                let max_error = max_recomposition_error(s, &d);
                *out = Box::into_raw(Box::new(XsepDecomposition { inner: d, max_error }));
                XsepStatus::Ok
            }
            other => fail(XsepStatus::NotDecomposable, format!("not decomposable: {other}")),
        }
    })
}

/// Number of terms; 0 for a null handle.
///
/// # Safety
/// `d` must be null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn xsep_decomposition_len(d: *const XsepDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.inner.len())
}

/// Largest entrywise deviation between the recomposed sum and the source state.
///
/// # Safety
/// `d` must be null or a live decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn xsep_decomposition_max_error(d: *const XsepDecomposition) -> f64 {
    d.as_ref().map_or(f64::NAN, |d| d.max_error)
}

/// # Safety
/// `d` must be a live decomposition handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn xsep_decomposition_term(
    d: *const XsepDecomposition,
    index: usize,
    out: *mut XsepTerm,
) -> XsepStatus {
    guard(|| {
        let (Some(d), false) = (d.as_ref(), out.is_null()) else {
            return fail(XsepStatus::NullPointer, "null pointer argument");
        };
        let Some(t) = d.inner.terms.get(index) else {
            return fail(XsepStatus::OutOfRange, format!("term {index} of {}", d.inner.len()));
        };
        let v = t.vector;
        *out = XsepTerm {
            weight: t.weight,
            x_re: v.x.map(|z| z.re),
            x_im: v.x.map(|z| z.im),
            y_re: v.y.map(|z| z.re),
            y_im: v.y.map(|z| z.im),
            z_re: v.z.map(|z| z.re),
            z_im: v.z.map(|z| z.im),
        };
        XsepStatus::Ok
    })
}

/// # Safety
/// `d` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn xsep_decomposition_free(d: *mut XsepDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Message for the last failed call on this thread, empty after a success. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn xsep_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
