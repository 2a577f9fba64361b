use std::ffi::{c_char, CStr, CString};
use std::ptr;

use snideal_ffi::*;

fn zn(n: u64) -> *mut SnRing {
    let mut ring = ptr::null_mut();
    let status = unsafe { sn_ring_zn(n, &mut ring) };
    assert_eq!(status, SnStatus::SnOk);
    assert!(!ring.is_null());
    ring
}

fn take_string(raw: *mut c_char) -> String {
    assert!(!raw.is_null());
    let s = unsafe { CStr::from_ptr(raw) }.to_str().unwrap().to_string();
    sn_string_free(raw);
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(sn_last_error()) }.to_str().unwrap().to_string()
}

#[test]
fn ring_lifecycle_and_arithmetic() {
    let ring = zn(12);
    assert_eq!(sn_ring_order(ring), 12);
    assert_eq!(sn_ring_zero(ring), 0);
    assert_eq!(sn_ring_one(ring), 1);

    let mut out = 0u64;
    assert_eq!(sn_ring_binop(ring, SnBinop::SnMul, 3, 9, &mut out), SnStatus::SnOk);
    assert_eq!(out, 3);
    assert_eq!(sn_ring_binop(ring, SnBinop::SnAdd, 7, 8, &mut out), SnStatus::SnOk);
    assert_eq!(out, 3);
    assert_eq!(sn_ring_binop(ring, SnBinop::SnSub, 3, 7, &mut out), SnStatus::SnOk);
    assert_eq!(out, 8);
    assert_eq!(sn_ring_neg(ring, 5, &mut out), SnStatus::SnOk);
    assert_eq!(out, 7);
    assert_eq!(sn_ring_pow(ring, 6, 2, &mut out), SnStatus::SnOk);
    assert_eq!(out, 0);
    assert_eq!(sn_ring_pow(ring, 5, 0, &mut out), SnStatus::SnOk);
    assert_eq!(out, 1);

    let status = sn_ring_binop(ring, SnBinop::SnMul, 12, 1, &mut out);
    assert_eq!(status, SnStatus::SnBadIndex);
    assert!(last_error().contains("12"));

    unsafe { sn_ring_free(ring) };
    unsafe { sn_ring_free(ptr::null_mut()) };
    sn_string_free(ptr::null_mut());
}

#[test]
fn element_classes_and_nilradical() {
    let ring = zn(12);
    let mut flag = 0u8;
    let is = |class, x| {
        let mut f = 0u8;
        assert_eq!(sn_ring_elem_is(ring, class, x, &mut f), SnStatus::SnOk);
        f == 1
    };
    assert!(is(SnElemClass::SnUnit, 5));
    assert!(!is(SnElemClass::SnUnit, 2));
    assert!(is(SnElemClass::SnNilpotent, 6));
    assert!(!is(SnElemClass::SnNilpotent, 4));
    assert!(is(SnElemClass::SnZeroDivisor, 4));
    assert!(is(SnElemClass::SnRegular, 7));
    assert_eq!(sn_ring_elem_is(ring, SnElemClass::SnUnit, 99, &mut flag), SnStatus::SnBadIndex);

    let mut buf = [0u64; 8];
    let mut len = 0usize;
    assert_eq!(sn_ring_nilradical(ring, buf.as_mut_ptr(), buf.len(), &mut len), SnStatus::SnOk);
    assert_eq!(len, 2);
    assert_eq!(&buf[..len], &[0, 6]);

    let mut short = [0u64; 1];
    assert_eq!(sn_ring_nilradical(ring, short.as_mut_ptr(), 1, &mut len), SnStatus::SnOk);
    assert_eq!(len, 2);
    assert_eq!(short[0], 0);

    unsafe { sn_ring_free(ring) };
}

#[test]
fn spec_json_construction() {
    let spec = CString::new(r#"{"product": [{"zn": 12}, {"zn": 4}]}"#).unwrap();
    let mut ring = ptr::null_mut();
    assert_eq!(unsafe { sn_ring_from_json(spec.as_ptr(), &mut ring) }, SnStatus::SnOk);
    assert_eq!(sn_ring_order(ring), 48);

    let mut raw = ptr::null_mut();
    assert_eq!(unsafe { sn_ring_summary_json(ring, &mut raw) }, SnStatus::SnOk);
    let doc: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
    assert_eq!(doc["order"], 48);
    assert_eq!(doc["name"], "Z_12×Z_4");
    assert_eq!(doc["spec"]["product"][0]["zn"], 12);
    assert!(doc["nilpotent_count"].as_u64().unwrap() >= 4);
    unsafe { sn_ring_free(ring) };

    let bad = CString::new(r#"{"zn": "twelve"}"#).unwrap();
    assert_eq!(unsafe { sn_ring_from_json(bad.as_ptr(), &mut ring) }, SnStatus::SnInvalidSpec);
    assert!(last_error().contains("invalid ring spec"));

    let invalid = unsafe { CString::from_vec_unchecked(vec![0xff, 0xfe]) };
    assert_eq!(
        unsafe { sn_ring_from_json(invalid.as_ptr(), &mut ring) },
        SnStatus::SnInvalidUtf8
    );

    assert_eq!(
        unsafe { sn_ring_from_json(ptr::null(), &mut ring) },
        SnStatus::SnNullArgument
    );
    assert_eq!(unsafe { sn_ring_zn(12, ptr::null_mut()) }, SnStatus::SnNullArgument);
}

#[test]
fn classification_reports() {
    let ring = zn(12);
    let gens = [4u64];
    let seed = [3u64];
    let mut raw = ptr::null_mut();
    let status = unsafe {
        sn_classify_json(ring, gens.as_ptr(), 1, seed.as_ptr(), 1, &mut raw)
    };
    assert_eq!(status, SnStatus::SnOk);
    let doc: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
    assert_eq!(doc["ideal_elements"], serde_json::json!([0, 4, 8]));
    assert_eq!(doc["multset"]["elements"], serde_json::json!([1, 3, 9]));
    let verdict = |name: &str| {
        doc["predicates"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["predicate"] == name)
            .unwrap()
            .clone()
    };
    assert_eq!(verdict("s-n-ideal")["holds"], true);
    assert_eq!(verdict("s-n-ideal")["witnesses"], serde_json::json!([3, 9]));
    assert_eq!(verdict("n-ideal")["holds"], false);
    assert_eq!(verdict("n-ideal")["counterexample"], serde_json::json!([2, 2]));

    let touching = [2u64];
    let status = unsafe {
        sn_classify_json(ring, gens.as_ptr(), 1, touching.as_ptr(), 1, &mut raw)
    };
    assert_eq!(status, SnStatus::SnNotDisjoint);

    let status = unsafe { sn_classify_json(ring, gens.as_ptr(), 1, ptr::null(), 0, &mut raw) };
    assert_eq!(status, SnStatus::SnOk);
    let doc: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
    assert!(doc["multset"].is_null());
    assert_eq!(doc["radical_elements"], serde_json::json!([0, 2, 4, 6, 8, 10]));

    unsafe { sn_ring_free(ring) };
}

#[test]
fn zn_fast_classification() {
    let primes = [2u64];
    let mut raw = ptr::null_mut();
    assert_eq!(
        unsafe { sn_zn_classify_json(12, primes.as_ptr(), 1, &mut raw) },
        SnStatus::SnOk
    );
    let doc: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
    assert_eq!(doc["regime"], "ALL_DISJOINT");
    assert_eq!(doc["generators"], serde_json::json!([0, 3, 6]));

    assert_eq!(
        unsafe { sn_zn_classify_json(12, ptr::null(), 0, &mut raw) },
        SnStatus::SnNullArgument
    );
    assert_eq!(
        unsafe { sn_zn_classify_json(12, primes.as_ptr(), 0, &mut raw) },
        SnStatus::SnNullArgument
    );
    let composite = [4u64];
    assert_eq!(
        unsafe { sn_zn_classify_json(12, composite.as_ptr(), 1, &mut raw) },
        SnStatus::SnInvalidSpec
    );
}

#[test]
fn registry_runs() {
    let corpus = CString::new(r#"{"zn_max": 12}"#).unwrap();
    let check = CString::new("T-ZN").unwrap();
    let mut violations = u64::MAX;
    let mut raw = ptr::null_mut();
    let status = unsafe {
        sn_verify_json(corpus.as_ptr(), check.as_ptr(), &mut violations, &mut raw)
    };
    assert_eq!(status, SnStatus::SnOk);
    assert_eq!(violations, 0);
    let doc: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
    assert_eq!(doc["schema"], "verify-report/1");
    assert_eq!(doc["checks"][0]["id"], "T-ZN");
    assert!(doc["checks"][0]["instances"].as_u64().unwrap() > 0);

    let bogus = CString::new("NO-SUCH").unwrap();
    let status = unsafe {
        sn_verify_json(corpus.as_ptr(), bogus.as_ptr(), ptr::null_mut(), &mut raw)
    };
    assert_eq!(status, SnStatus::SnUnknownCheck);

    let garbage = CString::new("{").unwrap();
    let status = unsafe {
        sn_verify_json(garbage.as_ptr(), check.as_ptr(), ptr::null_mut(), &mut raw)
    };
    assert_eq!(status, SnStatus::SnInvalidSpec);
}

#[test]
fn header_is_generated() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("snideal.h");
    let body = std::fs::read_to_string(header).expect("generated header");
    for needle in [
        "typedef struct SnRing SnRing;",
        "SN_NOT_DISJOINT = 5",
        "sn_ring_from_json",
        "sn_classify_json",
        "sn_verify_json",
        "sn_string_free",
    ] {
        assert!(body.contains(needle), "header is missing {needle:?}");
    }
}
