//! C ABI over the trinerve library.
//!
//! Conventions: complexes are opaque handles created and freed here;
//! strings are UTF-8, returned strings are freed with [`tn_string_free`];
//! functions returning `int` use the status codes of [`TnStatus`]; the
//! last error message is retrievable per thread via
//! [`tn_last_error_message`].  The committed header `include/trinerve.h`
//! mirrors this surface and is kept in sync by a test.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use trinerve::emac::{lambda5_horns_fill, validate_h, validate_t};
use trinerve::error::Error;
use trinerve::highercat::{diag_triple_nerve, geometric_nerve_3};
use trinerve::homology::{homology, Coeff};
use trinerve::json::{NerveInput, PostnikovJson};
use trinerve::simplicial::{
    kan_horn_check, read_ssx, write_ssx, Budget, HornMode, TruncSSet,
};

/// Status codes shared by all fallible entry points.
#[repr(C)]
pub enum TnStatus {
    TnOk = 0,
    TnVerificationFailed = 1,
    TnInputError = 2,
    TnBudgetExceeded = 3,
}

/// An opaque truncated simplicial set.
pub struct TnComplex {
    inner: TruncSSet,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(e: &Error) -> TnStatus {
    let msg = CString::new(e.to_string()).unwrap_or_default();
    LAST_ERROR.with(|l| *l.borrow_mut() = msg);
    match e {
        Error::Budget { .. } => TnStatus::TnBudgetExceeded,
        Error::Precondition(_) => TnStatus::TnVerificationFailed,
        _ => TnStatus::TnInputError,
    }
}

fn clear_error() {
    LAST_ERROR.with(|l| *l.borrow_mut() = CString::default());
}

/// Copy the last error message of this thread into `buf` (NUL-terminated,
/// truncated to `len`); returns the full message length in bytes.
///
/// # Safety
/// `buf` must point to `len` writable bytes (or be null with `len == 0`).
#[no_mangle]
pub unsafe extern "C" fn tn_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|l| {
        let msg = l.borrow();
        let bytes = msg.as_bytes_with_nul();
        if !buf.is_null() && len > 0 {
            let n = bytes.len().min(len);
            std::ptr::copy_nonoverlapping(bytes.as_ptr(), buf as *mut u8, n);
            // always terminate
            *buf.add(n.saturating_sub(1)) = 0;
        }
        bytes.len().saturating_sub(1)
    })
}

unsafe fn str_arg<'a>(ptr: *const c_char) -> Result<&'a str, Error> {
    if ptr.is_null() {
        return Err(Error::structure("null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Error::structure("string argument is not UTF-8"))
}

/// Parse an SSX document into a complex; null on error.
///
/// # Safety
/// `text` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_from_ssx(text: *const c_char) -> *mut TnComplex {
    clear_error();
    let run = || -> Result<TruncSSet, Error> { read_ssx(str_arg(text)?) };
    match run() {
        Ok(inner) => Box::into_raw(Box::new(TnComplex { inner })),
        Err(e) => {
            set_error(&e);
            std::ptr::null_mut()
        }
    }
}

/// Serialize a complex to SSX; free the result with [`tn_string_free`].
///
/// # Safety
/// `c` must be a handle returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_to_ssx(c: *const TnComplex) -> *mut c_char {
    clear_error();
    if c.is_null() {
        set_error(&Error::structure("null complex handle"));
        return std::ptr::null_mut();
    }
    match write_ssx(&(*c).inner) {
        Ok(text) => CString::new(text).map(CString::into_raw).unwrap_or(std::ptr::null_mut()),
        Err(e) => {
            set_error(&e);
            std::ptr::null_mut()
        }
    }
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tn_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `c` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_free(c: *mut TnComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Truncation dimension; -1 on a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_trunc(c: *const TnComplex) -> i32 {
    if c.is_null() {
        return -1;
    }
    (*c).inner.trunc() as i32
}

/// Number of nondegenerate simplices in a dimension; -1 on error.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_count(c: *const TnComplex, dim: usize) -> i64 {
    if c.is_null() {
        return -1;
    }
    (*c).inner.count(dim) as i64
}

/// Number of simplicial-identity violations (0 means the complex is valid);
/// -1 on a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tn_complex_check_identities(c: *const TnComplex) -> i64 {
    if c.is_null() {
        return -1;
    }
    (*c).inner.check_simplicial_identities().len() as i64
}

/// Nerve kinds accepted by [`tn_nerve_build`].
#[repr(C)]
pub enum TnNerveKind {
    TnNerveCategory = 0,
    TnNerveDuskin = 1,
    TnNerveGeometric3 = 2,
    TnNerveDiagTriple = 3,
}

/// Build a nerve from a JSON description (same schema as the CLI input);
/// null on error.
///
/// # Safety
/// `input_json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tn_nerve_build(
    input_json: *const c_char,
    kind: TnNerveKind,
    trunc: usize,
    budget: usize,
) -> *mut TnComplex {
    clear_error();
    let run = || -> Result<TruncSSet, Error> {
        let input: NerveInput = serde_json::from_str(str_arg(input_json)?)?;
        let t3 = input.into_3cat()?;
        let budget = if budget == 0 { Budget::default() } else { Budget::new(budget) };
        match kind {
            TnNerveKind::TnNerveCategory => {
                let c = t3.as_category().ok_or_else(|| {
                    Error::structure("category nerve needs identity 2- and 3-cells")
                })?;
                trinerve::cat::nerve(&c, trunc, budget)
            }
            TnNerveKind::TnNerveDuskin | TnNerveKind::TnNerveGeometric3 => {
                geometric_nerve_3(&t3, trunc, budget)
            }
            TnNerveKind::TnNerveDiagTriple => diag_triple_nerve(&t3, trunc, budget),
        }
    };
    match run() {
        Ok(inner) => Box::into_raw(Box::new(TnComplex { inner })),
        Err(e) => {
            set_error(&e);
            std::ptr::null_mut()
        }
    }
}

/// Coefficient tags for [`tn_homology`].
#[repr(C)]
pub enum TnCoeff {
    TnCoeffZ = 0,
    TnCoeffQ = 1,
    TnCoeffZp = 2,
}

/// Homology in one degree: writes the betti number and up to
/// `torsion_cap` torsion coefficients, returning the torsion count;
/// negative values are [`TnStatus`] codes negated.
///
/// # Safety
/// `c` must be a live handle; `out_betti` must point to a writable
/// `int64_t`; `out_torsion` must point to `torsion_cap` writable entries.
#[no_mangle]
pub unsafe extern "C" fn tn_homology(
    c: *const TnComplex,
    degree: usize,
    coeff: TnCoeff,
    prime: u64,
    out_betti: *mut i64,
    out_torsion: *mut i64,
    torsion_cap: usize,
) -> i64 {
    clear_error();
    if c.is_null() || out_betti.is_null() {
        set_error(&Error::structure("null argument"));
        return -(TnStatus::TnInputError as i64);
    }
    let coeff = match coeff {
        TnCoeff::TnCoeffZ => Coeff::Z,
        TnCoeff::TnCoeffQ => Coeff::Q,
        TnCoeff::TnCoeffZp => Coeff::Zp(prime),
    };
    match homology(&(*c).inner, &[degree], coeff) {
        Ok(h) => {
            let g = &h.groups[0];
            *out_betti = g.betti as i64;
            let n = g.torsion.len();
            if !out_torsion.is_null() {
                for (i, &d) in g.torsion.iter().take(torsion_cap).enumerate() {
                    *out_torsion.add(i) = d;
                }
            }
            n as i64
        }
        Err(e) => -(set_error(&e) as i64),
    }
}

/// Exhaustive horn check at `(n, k)`: returns the number of horns without
/// a filler (0 means Kan at this index), or a negated status code.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tn_kan_check(c: *const TnComplex, n: usize, k: usize) -> i64 {
    clear_error();
    if c.is_null() {
        set_error(&Error::structure("null complex handle"));
        return -(TnStatus::TnInputError as i64);
    }
    match kan_horn_check(&(*c).inner, n, k, HornMode::Exhaustive) {
        Ok(r) => (r.horns_tested - r.fillable) as i64,
        Err(e) => -(set_error(&e) as i64),
    }
}

/// Validate Postnikov data (JSON, same schema as the CLI): returns TnOk
/// when `h` and `t` are cocycles, TnVerificationFailed when not, input or
/// budget codes otherwise.  When `full` is nonzero the Kan sweep over the
/// 5-horns of the twisted complex runs as well.
///
/// # Safety
/// `input_json` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn tn_postnikov_verify(
    input_json: *const c_char,
    full: i32,
    budget: usize,
) -> TnStatus {
    clear_error();
    let run = || -> Result<bool, Error> {
        let input: PostnikovJson = serde_json::from_str(str_arg(input_json)?)?;
        let p = input.into_data()?;
        let budget = if budget == 0 { Budget::default() } else { Budget::new(budget) };
        if !validate_h(&p, budget)? {
            return Ok(false);
        }
        if !validate_t(&p, budget)? {
            return Ok(false);
        }
        if full != 0 {
            let rep = lambda5_horns_fill(&p, budget, true)?;
            return Ok(rep.unfillable == 0);
        }
        Ok(true)
    };
    match run() {
        Ok(true) => TnStatus::TnOk,
        Ok(false) => TnStatus::TnVerificationFailed,
        Err(e) => set_error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CString;

    fn c(text: &str) -> CString {
        CString::new(text).unwrap()
    }

    #[test]
    fn nerve_build_and_homology_via_ffi() {
        let input = c(r#"{"type": "group", "cyclic": 2}"#);
        let h = unsafe {
            tn_nerve_build(input.as_ptr(), TnNerveKind::TnNerveCategory, 5, 0)
        };
        assert!(!h.is_null());
        unsafe {
            assert_eq!(tn_complex_trunc(h), 5);
            assert_eq!(tn_complex_count(h, 3), 1);
            assert_eq!(tn_complex_check_identities(h), 0);
            let mut betti = -1i64;
            let mut torsion = [0i64; 4];
            let n = tn_homology(
                h,
                1,
                TnCoeff::TnCoeffZ,
                0,
                &mut betti,
                torsion.as_mut_ptr(),
                4,
            );
            assert_eq!(n, 1);
            assert_eq!(betti, 0);
            assert_eq!(torsion[0], 2);
            // round trip through SSX
            let text = tn_complex_to_ssx(h);
            assert!(!text.is_null());
            let back = tn_complex_from_ssx(text);
            assert!(!back.is_null());
            assert_eq!(tn_complex_count(back, 4), 1);
            tn_string_free(text);
            tn_complex_free(back);
            tn_complex_free(h);
        }
    }

    #[test]
    fn errors_set_messages() {
        let bad = c("{not json");
        let h = unsafe { tn_nerve_build(bad.as_ptr(), TnNerveKind::TnNerveCategory, 2, 0) };
        assert!(h.is_null());
        let mut buf = [0i8; 128];
        let len = unsafe { tn_last_error_message(buf.as_mut_ptr(), buf.len()) };
        assert!(len > 0);
    }

    #[test]
    fn kan_via_ffi() {
        let input = c(r#"{"type": "group", "cyclic": 3}"#);
        let h = unsafe {
            tn_nerve_build(input.as_ptr(), TnNerveKind::TnNerveCategory, 3, 0)
        };
        assert!(!h.is_null());
        unsafe {
            assert_eq!(tn_kan_check(h, 2, 1), 0);
            tn_complex_free(h);
        }
    }

    #[test]
    fn postnikov_verify_via_ffi() {
        let g = r#"{"table": [[0,1],[1,0]]}"#;
        let module = format!(
            r#"{{"group": {g}, "coeff": {{"rank": 0, "torsion": [2]}}, "action": [[[1]],[[1]]]}}"#
        );
        let h: Vec<i64> = vec![0, 0, 0, 0, 0, 0, 0, 1];
        let h_json: Vec<String> = h.iter().map(|v| format!("[{v}]")).collect();
        let t_json: Vec<String> = (0..1024).map(|_| "[0]".to_string()).collect();
        let input = format!(
            r#"{{"G": {g}, "A": {module}, "B": {module}, "h": [{}], "t": [{}]}}"#,
            h_json.join(","),
            t_json.join(",")
        );
        let text = c(&input);
        let status = unsafe { tn_postnikov_verify(text.as_ptr(), 0, 0) };
        assert!(matches!(status, TnStatus::TnOk));
    }
}
