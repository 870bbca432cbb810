//! Binary-string combinatorics: Ehrenfeucht-Mycielski sequences, De Bruijn
//! strings and cycles, double-helix decompositions of De Bruijn graphs, and
//! GF(2) linear-recurrence (shift register) constructions.
//!
//! The [`bitstr`] module holds the value types everything else consumes.
//! Generators live in [`debruijn`], [`emgen`] and [`lfsr`]; structural
//! analysis in [`graph`] and [`analysis`]; exhaustive censuses in
//! [`enumerate`].


pub mod analysis;
pub mod bitstr;
pub mod debruijn;
pub mod emgen;
pub mod enumerate;
pub mod graph;
pub mod lfsr;

pub use bitstr::{BitString, Word};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid character {found:?} at index {index}: expected '0' or '1'")]
    InvalidBit { index: usize, found: char },
    #[error("empty bit string")]
    EmptyString,
    #[error("window [{start}, {start}+{width}) out of range for string of length {len}")]
    WindowOutOfRange {
        start: usize,
        width: usize,
        len: usize,
    },
    #[error("order {order} outside supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("string of length {len} is not a De Bruijn string of order {order}")]
    NotDeBruijn { order: usize, len: usize },
    #[error("not a depleted De Bruijn string of order {order}")]
    NotDepleted { order: usize },
    #[error("ambiguous insertion site: {count} runs of {width} {digit}s")]
    AmbiguousInsertion {
        digit: u8,
        width: usize,
        count: usize,
    },
    #[error("not a double helix: residual graph has {components} components")]
    NotDoubleHelix { components: usize },
    #[error("initial {order}-string is constant (all-zero or all-one)")]
    ConstantInitialString { order: usize },
    #[error("initial state has length {got}, recurrence has order {expected}")]
    BadInitLength { expected: usize, got: usize },
    #[error("polynomial is reducible")]
    Reducible,
    #[error("polynomial order is undefined for {0}")]
    OrderUndefined(String),
    #[error("recurrence is not PN (period falls short of 2^n - 1)")]
    NotPn,
    #[error("enumeration order {order} exceeds cap {cap}; rerun with the long-running override")]
    EnumOrderCap { order: usize, cap: usize },
    #[error("cap {cap} below minimum {min}")]
    CapTooSmall { cap: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
