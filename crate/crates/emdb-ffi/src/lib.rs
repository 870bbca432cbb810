//! C ABI for the core library: opaque bit-string handles, status codes,
//! and thin wrappers over generation and classification. The header is
//! generated into include/emdb.h at build time.
//!
//! Ownership rules: every `*mut EmdbBitString` returned through an out
//! parameter is owned by the caller and must be released with
//! `emdb_bitstring_free`; text from `emdb_bitstring_to_text` must be
//! released with `emdb_text_free`. All functions tolerate null inputs and
//! report `EMDB_STATUS_NULL_POINTER` instead of crashing.

use std::ffi::{c_char, CStr, CString};

use emdb::bitstr::BitString;
use emdb::debruijn::{is_debruijn_string, prefer_one};
use emdb::emgen::{debruijn_from_seed, generate, EmMode};
use emdb::graph::{classify_helix, message_of};
use emdb::Error;

/// Opaque bit string. Create via parse/generate functions, release with
/// emdb_bitstring_free.
pub struct EmdbBitString(BitString);

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmdbStatus {
    EmdbStatusOk = 0,
    EmdbStatusNullPointer = 1,
    EmdbStatusInvalidInput = 2,
    EmdbStatusOutOfRange = 3,
    EmdbStatusNotDebruijn = 4,
    EmdbStatusNotDoubleHelix = 5,
    EmdbStatusInternal = 6,
}

use EmdbStatus::*;

fn status_of(e: &Error) -> EmdbStatus {
    match e {
        Error::InvalidBit { .. } | Error::EmptyString => EmdbStatusInvalidInput,
        Error::OrderOutOfRange { .. }
        | Error::WindowOutOfRange { .. }
        | Error::EnumOrderCap { .. }
        | Error::CapTooSmall { .. } => EmdbStatusOutOfRange,
        Error::NotDeBruijn { .. } | Error::NotDepleted { .. } => EmdbStatusNotDebruijn,
        Error::NotDoubleHelix { .. } | Error::ConstantInitialString { .. } => {
            EmdbStatusNotDoubleHelix
        }
        _ => EmdbStatusInternal,
    }
}

fn give(out: *mut *mut EmdbBitString, s: BitString) -> EmdbStatus {
    // out checked non-null by callers
    unsafe { *out = Box::into_raw(Box::new(EmdbBitString(s))) };
    EmdbStatusOk
}

unsafe fn borrow<'a>(s: *const EmdbBitString) -> Option<&'a BitString> {
    s.as_ref().map(|h| &h.0)
}

/// Parse bit-text ('0'/'1' characters) into a new handle.
#[no_mangle]
pub unsafe extern "C" fn emdb_bitstring_parse(
    text: *const c_char,
    out: *mut *mut EmdbBitString,
) -> EmdbStatus {
    if text.is_null() || out.is_null() {
        return EmdbStatusNullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return EmdbStatusInvalidInput;
    };
    match BitString::parse(text) {
        Ok(s) => give(out, s),
        Err(e) => status_of(&e),
    }
}

/// Number of digits in the handle; 0 for null.
#[no_mangle]
pub unsafe extern "C" fn emdb_bitstring_len(s: *const EmdbBitString) -> usize {
    borrow(s).map_or(0, |b| b.len())
}

/// Digit at `index` (0 or 1), or -1 when out of range or null.
#[no_mangle]
pub unsafe extern "C" fn emdb_bitstring_get(s: *const EmdbBitString, index: usize) -> i32 {
    match borrow(s) {
        Some(b) if index < b.len() => b.get(index) as i32,
        _ => -1,
    }
}

/// Render as a NUL-terminated '0'/'1' text. Release with emdb_text_free.
#[no_mangle]
pub unsafe extern "C" fn emdb_bitstring_to_text(
    s: *const EmdbBitString,
    out: *mut *mut c_char,
) -> EmdbStatus {
    let (Some(b), false) = (borrow(s), out.is_null()) else {
        return EmdbStatusNullPointer;
    };
    let text = CString::new(b.to_string()).expect("no interior NUL");
    *out = text.into_raw();
    EmdbStatusOk
}

/// Release a handle returned by this library. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn emdb_bitstring_free(s: *mut EmdbBitString) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Release text returned by emdb_bitstring_to_text. Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn emdb_text_free(text: *mut c_char) {
    if !text.is_null() {
        drop(CString::from_raw(text));
    }
}

/// `count` digits of the self-referential sequence after `seed` (null =
/// empty seed). `buffer` caps the suffix match length; 0 means unbounded.
#[no_mangle]
pub unsafe extern "C" fn emdb_em_generate(
    seed: *const EmdbBitString,
    count: usize,
    buffer: usize,
    out: *mut *mut EmdbBitString,
) -> EmdbStatus {
    if out.is_null() {
        return EmdbStatusNullPointer;
    }
    let empty = BitString::new();
    let z = borrow(seed).unwrap_or(&empty);
    let mode = if buffer == 0 { EmMode::Identity } else { EmMode::Buffered(buffer) };
    give(out, generate(z, count, mode))
}

/// Greedy prefer-one De Bruijn string of the given order.
#[no_mangle]
pub unsafe extern "C" fn emdb_prefer_one(order: usize, out: *mut *mut EmdbBitString) -> EmdbStatus {
    if out.is_null() {
        return EmdbStatusNullPointer;
    }
    match prefer_one(order) {
        Ok(s) => give(out, s),
        Err(e) => status_of(&e),
    }
}

/// Order-(n+1) De Bruijn string grown from an arbitrary seed by the
/// splicing construction. `final_seed` (optional) receives the effective
/// seed after splices.
#[no_mangle]
pub unsafe extern "C" fn emdb_debruijn_from_seed(
    order: usize,
    seed: *const EmdbBitString,
    out: *mut *mut EmdbBitString,
    final_seed: *mut *mut EmdbBitString,
) -> EmdbStatus {
    if out.is_null() {
        return EmdbStatusNullPointer;
    }
    let empty = BitString::new();
    let z = borrow(seed).unwrap_or(&empty);
    match debruijn_from_seed(order, z) {
        Ok(r) => {
            if !final_seed.is_null() {
                give(final_seed, r.final_seed);
            }
            give(out, r.debruijn)
        }
        Err(e) => status_of(&e),
    }
}

/// Whether `s` is a De Bruijn string of the given order.
#[no_mangle]
pub unsafe extern "C" fn emdb_is_debruijn_string(
    s: *const EmdbBitString,
    order: usize,
    out: *mut bool,
) -> EmdbStatus {
    let (Some(b), false) = (borrow(s), out.is_null()) else {
        return EmdbStatusNullPointer;
    };
    *out = is_debruijn_string(b, order);
    EmdbStatusOk
}

/// Classify the residual decomposition of a De Bruijn string's circuit.
#[no_mangle]
pub unsafe extern "C" fn emdb_classify_helix(
    s: *const EmdbBitString,
    order: usize,
    is_double_helix: *mut bool,
    component_count: *mut usize,
) -> EmdbStatus {
    let (Some(b), false, false) = (borrow(s), is_double_helix.is_null(), component_count.is_null())
    else {
        return EmdbStatusNullPointer;
    };
    match classify_helix(b, order) {
        Ok(r) => {
            *is_double_helix = r.is_double_helix;
            *component_count = r.component_count;
            EmdbStatusOk
        }
        Err(e) => status_of(&e),
    }
}

/// Message string of a double helix.
#[no_mangle]
pub unsafe extern "C" fn emdb_message_of(
    s: *const EmdbBitString,
    order: usize,
    out: *mut *mut EmdbBitString,
) -> EmdbStatus {
    let (Some(b), false) = (borrow(s), out.is_null()) else {
        return EmdbStatusNullPointer;
    };
    match message_of(b, order) {
        Ok(m) => give(out, m),
        Err(e) => status_of(&e),
    }
}
