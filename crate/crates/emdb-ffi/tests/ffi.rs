//! Exercise the C ABI from Rust: ownership round-trips, status codes, and
//! agreement with the underlying library.

use std::ffi::{CStr, CString};
use std::ptr;

use emdb_ffi::*;

unsafe fn parse(text: &str) -> *mut EmdbBitString {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(emdb_bitstring_parse(c.as_ptr(), &mut out), EmdbStatus::EmdbStatusOk);
    out
}

unsafe fn text_of(s: *const EmdbBitString) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(emdb_bitstring_to_text(s, &mut out), EmdbStatus::EmdbStatusOk);
    let text = CStr::from_ptr(out).to_str().unwrap().to_owned();
    emdb_text_free(out);
    text
}

#[test]
fn parse_roundtrip_and_accessors() {
    unsafe {
        let s = parse("010011");
        assert_eq!(emdb_bitstring_len(s), 6);
        assert_eq!(emdb_bitstring_get(s, 1), 1);
        assert_eq!(emdb_bitstring_get(s, 6), -1);
        assert_eq!(text_of(s), "010011");
        emdb_bitstring_free(s);
    }
}

#[test]
fn invalid_input_and_null_safety() {
    unsafe {
        let bad = CString::new("0121").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            emdb_bitstring_parse(bad.as_ptr(), &mut out),
            EmdbStatus::EmdbStatusInvalidInput
        );
        assert_eq!(
            emdb_bitstring_parse(ptr::null(), &mut out),
            EmdbStatus::EmdbStatusNullPointer
        );
        assert_eq!(emdb_bitstring_len(ptr::null()), 0);
        emdb_bitstring_free(ptr::null_mut());
        emdb_text_free(ptr::null_mut());
    }
}

#[test]
fn generation_matches_known_values() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            emdb_em_generate(ptr::null(), 15, 0, &mut out),
            EmdbStatus::EmdbStatusOk
        );
        assert_eq!(text_of(out), "010011010111000");
        emdb_bitstring_free(out);

        let mut po = ptr::null_mut();
        assert_eq!(emdb_prefer_one(3, &mut po), EmdbStatus::EmdbStatusOk);
        assert_eq!(text_of(po), "0011101000");
        let mut is_db = false;
        assert_eq!(emdb_is_debruijn_string(po, 3, &mut is_db), EmdbStatus::EmdbStatusOk);
        assert!(is_db);
        emdb_bitstring_free(po);

        assert_eq!(emdb_prefer_one(0, &mut po), EmdbStatus::EmdbStatusOutOfRange);
    }
}

#[test]
fn seeded_construction() {
    unsafe {
        let mut db = ptr::null_mut();
        let mut fs = ptr::null_mut();
        assert_eq!(
            emdb_debruijn_from_seed(3, ptr::null(), &mut db, &mut fs),
            EmdbStatus::EmdbStatusOk
        );
        assert_eq!(text_of(db), "0001111010110010000");
        assert_eq!(text_of(fs), "111011001000");
        emdb_bitstring_free(db);
        emdb_bitstring_free(fs);
    }
}

#[test]
fn helix_classification_and_message() {
    unsafe {
        let helix = parse("1111000010011010111");
        let mut is_helix = false;
        let mut components = 0usize;
        assert_eq!(
            emdb_classify_helix(helix, 4, &mut is_helix, &mut components),
            EmdbStatus::EmdbStatusOk
        );
        assert!(is_helix);
        assert_eq!(components, 3);

        let mut msg = ptr::null_mut();
        assert_eq!(emdb_message_of(helix, 4, &mut msg), EmdbStatus::EmdbStatusOk);
        assert_eq!(emdb_bitstring_len(msg), 18);
        emdb_bitstring_free(msg);
        emdb_bitstring_free(helix);

        let non = parse("1111000011010010111");
        assert_eq!(
            emdb_classify_helix(non, 4, &mut is_helix, &mut components),
            EmdbStatus::EmdbStatusOk
        );
        assert!(!is_helix);
        assert_eq!(components, 5);
        assert_eq!(
            emdb_message_of(non, 4, &mut msg),
            EmdbStatus::EmdbStatusNotDoubleHelix
        );
        emdb_bitstring_free(non);

        let not_db = parse("0000");
        assert_eq!(
            emdb_classify_helix(not_db, 2, &mut is_helix, &mut components),
            EmdbStatus::EmdbStatusNotDebruijn
        );
        emdb_bitstring_free(not_db);
    }
}

#[test]
fn header_is_generated() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/emdb.h"))
        .expect("header exists after build");
    for symbol in [
        "emdb_bitstring_parse",
        "emdb_em_generate",
        "emdb_prefer_one",
        "emdb_debruijn_from_seed",
        "emdb_classify_helix",
        "emdb_message_of",
        "emdb_bitstring_free",
    ] {
        assert!(header.contains(symbol), "{symbol} missing from header");
    }
}
