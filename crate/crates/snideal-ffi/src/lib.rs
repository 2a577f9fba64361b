//! C ABI over the laboratory: opaque ring handles, element arithmetic,
//! and JSON-returning classification and registry calls.
//!
//! Every fallible entry point returns an [`SnStatus`]; the message behind
//! the most recent failure is kept per thread and read back with
//! [`sn_last_error`]. Strings handed out must be released with
//! [`sn_string_free`], rings with [`sn_ring_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use snideal::{
    build_ring, classify_ideal, run_all, run_check, zn_fast_classify, BuiltRing, Caps, CorpusSpec,
    Error, Ideal, LabStore, MultSet, RingSpec,
};

/// Outcome of an ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SnStatus {
    SnOk = 0,
    SnNullArgument = 1,
    SnInvalidUtf8 = 2,
    SnInvalidSpec = 3,
    SnBadIndex = 4,
    SnNotDisjoint = 5,
    SnCapExceeded = 6,
    SnUnknownCheck = 7,
    SnPanic = 8,
    SnError = 9,
}

/// Opaque handle to a built ring.
pub struct SnRing {
    built: BuiltRing,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let clean: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(clean).unwrap());
}

fn fail(e: &Error) -> SnStatus {
    set_error(&e.to_string());
    match e {
        Error::InvalidSpec(_) | Error::BadCofactor(_, _) | Error::InvalidHom(_)
        | Error::InvalidModule(_) => SnStatus::SnInvalidSpec,
        Error::IndexRange { .. } => SnStatus::SnBadIndex,
        Error::NotDisjoint => SnStatus::SnNotDisjoint,
        Error::OrderCap { .. } | Error::EnumerationCap { .. } => SnStatus::SnCapExceeded,
        Error::UnknownCheck(_) => SnStatus::SnUnknownCheck,
        _ => SnStatus::SnError,
    }
}

fn guarded(f: impl FnOnce() -> SnStatus) -> SnStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            SnStatus::SnPanic
        }
    }
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call from the same thread.
#[no_mangle]
pub extern "C" fn sn_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by any `*_json` call.
#[no_mangle]
pub extern "C" fn sn_string_free(s: *mut c_char) {
    if !s.is_null() {
        unsafe { drop(CString::from_raw(s)) };
    }
}

unsafe fn read_utf8<'a>(s: *const c_char) -> Result<&'a str, SnStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(SnStatus::SnNullArgument);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("argument is not valid UTF-8");
        SnStatus::SnInvalidUtf8
    })
}

unsafe fn read_indices(ptr: *const u64, len: usize) -> Result<Vec<usize>, SnStatus> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if ptr.is_null() {
        set_error("null element array with nonzero length");
        return Err(SnStatus::SnNullArgument);
    }
    Ok(std::slice::from_raw_parts(ptr, len).iter().map(|&x| x as usize).collect())
}

fn give_string(out: *mut *mut c_char, body: String) -> SnStatus {
    let clean: String = body.chars().filter(|&c| c != '\0').collect();
    unsafe { *out = CString::new(clean).unwrap().into_raw() };
    SnStatus::SnOk
}

fn borrow_ring<'a>(ring: *const SnRing) -> Result<&'a SnRing, SnStatus> {
    if ring.is_null() {
        set_error("null ring handle");
        return Err(SnStatus::SnNullArgument);
    }
    Ok(unsafe { &*ring })
}

// ---------------------------------------------------------------------
// rings

/// Builds a ring from a JSON spec, e.g. `{"zn": 12}` or
/// `{"product": [{"zn": 12}, {"zn": 4}]}`.
///
/// # Safety
/// `spec_json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sn_ring_from_json(
    spec_json: *const c_char,
    out: *mut *mut SnRing,
) -> SnStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let body = match read_utf8(spec_json) {
            Ok(b) => b,
            Err(s) => return s,
        };
        let spec: RingSpec = match serde_json::from_str(body) {
            Ok(s) => s,
            Err(e) => {
                set_error(&format!("invalid ring spec: {e}"));
                return SnStatus::SnInvalidSpec;
            }
        };
        match build_ring(&spec, &Caps::from_env()) {
            Ok(built) => {
                *out = Box::into_raw(Box::new(SnRing { built }));
                SnStatus::SnOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Builds the residue ring Z_n.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sn_ring_zn(n: u64, out: *mut *mut SnRing) -> SnStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        match build_ring(&RingSpec::Zn(n), &Caps::from_env()) {
            Ok(built) => {
                *out = Box::into_raw(Box::new(SnRing { built }));
                SnStatus::SnOk
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a ring handle.
///
/// # Safety
/// `ring` must come from a ring constructor and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn sn_ring_free(ring: *mut SnRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// Ring order; 0 for a null handle.
#[no_mangle]
pub extern "C" fn sn_ring_order(ring: *const SnRing) -> u64 {
    borrow_ring(ring).map(|r| r.built.ring.order() as u64).unwrap_or(0)
}

#[no_mangle]
pub extern "C" fn sn_ring_zero(ring: *const SnRing) -> u64 {
    borrow_ring(ring).map(|r| r.built.ring.zero() as u64).unwrap_or(0)
}

#[no_mangle]
pub extern "C" fn sn_ring_one(ring: *const SnRing) -> u64 {
    borrow_ring(ring).map(|r| r.built.ring.one() as u64).unwrap_or(0)
}

/// Element arithmetic selector for [`sn_ring_binop`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SnBinop {
    SnAdd = 0,
    SnSub = 1,
    SnMul = 2,
}

/// Binary arithmetic on element indices.
#[no_mangle]
pub extern "C" fn sn_ring_binop(
    ring: *const SnRing,
    op: SnBinop,
    a: u64,
    b: u64,
    out: *mut u64,
) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let (a, b) = (a as usize, b as usize);
        if let Err(e) = r.check_elem(a).and_then(|_| r.check_elem(b)) {
            return fail(&e);
        }
        let v = match op {
            SnBinop::SnAdd => r.add(a, b),
            SnBinop::SnSub => r.sub(a, b),
            SnBinop::SnMul => r.mul(a, b),
        };
        unsafe { *out = v as u64 };
        SnStatus::SnOk
    })
}

/// Additive inverse.
#[no_mangle]
pub extern "C" fn sn_ring_neg(ring: *const SnRing, a: u64, out: *mut u64) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        if let Err(e) = r.check_elem(a as usize) {
            return fail(&e);
        }
        unsafe { *out = r.neg(a as usize) as u64 };
        SnStatus::SnOk
    })
}

/// a to the power k; k = 0 gives one.
#[no_mangle]
pub extern "C" fn sn_ring_pow(ring: *const SnRing, a: u64, k: u64, out: *mut u64) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        if let Err(e) = r.check_elem(a as usize) {
            return fail(&e);
        }
        unsafe { *out = r.pow(a as usize, k) as u64 };
        SnStatus::SnOk
    })
}

/// Element class selector for [`sn_ring_elem_is`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SnElemClass {
    SnUnit = 0,
    SnNilpotent = 1,
    SnZeroDivisor = 2,
    SnRegular = 3,
}

/// Membership of an element in one of the classified subsets. Writes 1 or
/// 0 into `out`.
#[no_mangle]
pub extern "C" fn sn_ring_elem_is(
    ring: *const SnRing,
    class: SnElemClass,
    x: u64,
    out: *mut u8,
) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let x = x as usize;
        if let Err(e) = r.check_elem(x) {
            return fail(&e);
        }
        let v = match class {
            SnElemClass::SnUnit => r.is_unit(x),
            SnElemClass::SnNilpotent => r.is_nilpotent(x),
            SnElemClass::SnZeroDivisor => r.zero_divisors().contains(x),
            SnElemClass::SnRegular => r.is_regular(x),
        };
        unsafe { *out = v as u8 };
        SnStatus::SnOk
    })
}

/// Copies the nilradical into `buf` (up to `cap` indices) and writes the
/// full size through `len`. A short buffer is not an error; compare `len`
/// with `cap`.
#[no_mangle]
pub extern "C" fn sn_ring_nilradical(
    ring: *const SnRing,
    buf: *mut u64,
    cap: usize,
    len: *mut usize,
) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if len.is_null() {
            set_error("null length pointer");
            return SnStatus::SnNullArgument;
        }
        let nil = r.nilpotents();
        unsafe { *len = nil.len() };
        if cap > 0 {
            if buf.is_null() {
                set_error("null buffer with nonzero capacity");
                return SnStatus::SnNullArgument;
            }
            for (i, x) in nil.iter().take(cap).enumerate() {
                unsafe { *buf.add(i) = x as u64 };
            }
        }
        SnStatus::SnOk
    })
}

/// JSON summary of the ring: order, identity indices, unit and nilradical
/// element lists with counts.
///
/// # Safety
/// `out` must be a valid pointer; free the string with [`sn_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sn_ring_summary_json(
    ring: *const SnRing,
    out: *mut *mut c_char,
) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => &r.built.ring,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let doc = serde_json::json!({
            "name": r.display_name(),
            "spec": r.spec(),
            "order": r.order(),
            "zero": r.zero(),
            "one": r.one(),
            "unit_count": r.units().len(),
            "units": r.units().elements(),
            "nilpotent_count": r.nilpotents().len(),
            "nilradical": r.nilpotents().elements(),
            "zero_divisor_count": r.zero_divisors().len(),
            "reduced": r.is_reduced(),
            "domain": r.is_domain(),
        });
        give_string(out, doc.to_string())
    })
}

// ---------------------------------------------------------------------
// classification

/// Classifies the ideal generated by `gens` against the multiplicative
/// closure of `seed` (pass `seed_len` 0 for absolute predicates only).
/// Writes the full report as JSON.
///
/// # Safety
/// Arrays must match their lengths; `out` must be valid; free the string
/// with [`sn_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sn_classify_json(
    ring: *const SnRing,
    gens: *const u64,
    gens_len: usize,
    seed: *const u64,
    seed_len: usize,
    out: *mut *mut c_char,
) -> SnStatus {
    guarded(|| {
        let r = match borrow_ring(ring) {
            Ok(r) => r.built.ring.clone(),
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let gens = match read_indices(gens, gens_len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        let seed = match read_indices(seed, seed_len) {
            Ok(v) => v,
            Err(s) => return s,
        };
        for &x in gens.iter().chain(&seed) {
            if let Err(e) = r.check_elem(x) {
                return fail(&e);
            }
        }
        let ideal = match Ideal::generate(&r, &gens) {
            Ok(i) => i,
            Err(e) => return fail(&e),
        };
        let mult = if seed_len == 0 {
            None
        } else {
            match MultSet::close(&r, &seed) {
                Ok(m) => Some(m),
                Err(e) => return fail(&e),
            }
        };
        match classify_ideal(&ideal, mult.as_ref()) {
            Ok(report) => give_string(out, serde_json::to_string(&report).unwrap()),
            Err(e) => fail(&e),
        }
    })
}

/// Arithmetic classification of Z_n against a set of prime cofactors,
/// as JSON.
///
/// # Safety
/// `primes` must hold `primes_len` entries; `out` must be valid; free the
/// string with [`sn_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sn_zn_classify_json(
    n: u64,
    primes: *const u64,
    primes_len: usize,
    out: *mut *mut c_char,
) -> SnStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        if primes.is_null() || primes_len == 0 {
            set_error("empty prime cofactor set");
            return SnStatus::SnNullArgument;
        }
        let ps: Vec<u64> = std::slice::from_raw_parts(primes, primes_len).to_vec();
        match zn_fast_classify(n, &ps) {
            Ok(cls) => give_string(out, serde_json::to_string(&cls).unwrap()),
            Err(e) => fail(&e),
        }
    })
}

// ---------------------------------------------------------------------
// registry

/// Runs one registry check (or the whole registry when `check_id` is
/// null) over the corpus given as JSON (null for the default corpus).
/// Writes the report document and, optionally, the violation count.
///
/// # Safety
/// `out` must be valid; free the string with [`sn_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sn_verify_json(
    corpus_json: *const c_char,
    check_id: *const c_char,
    violations: *mut u64,
    out: *mut *mut c_char,
) -> SnStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null output pointer");
            return SnStatus::SnNullArgument;
        }
        let corpus: CorpusSpec = if corpus_json.is_null() {
            CorpusSpec::default()
        } else {
            let body = match read_utf8(corpus_json) {
                Ok(b) => b,
                Err(s) => return s,
            };
            match serde_json::from_str(body) {
                Ok(c) => c,
                Err(e) => {
                    set_error(&format!("invalid corpus spec: {e}"));
                    return SnStatus::SnInvalidSpec;
                }
            }
        };
        let store = LabStore::new(Caps::from_env());
        let reports = if check_id.is_null() {
            match run_all(&corpus, &store, false) {
                Ok(r) => r,
                Err(e) => return fail(&e),
            }
        } else {
            let id = match read_utf8(check_id) {
                Ok(b) => b,
                Err(s) => return s,
            };
            match run_check(id, &corpus, &store) {
                Ok(r) => vec![r],
                Err(e) => return fail(&e),
            }
        };
        if !violations.is_null() {
            *violations = snideal::total_violations(&reports) as u64;
        }
        give_string(out, snideal::render_json(&reports).to_string())
    })
}
