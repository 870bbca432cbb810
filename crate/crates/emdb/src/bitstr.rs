//! Growable bit-packed binary strings and fixed-width words.
//!
//! [`BitString`] is the universal currency of the crate: generators emit it,
//! analyzers consume it. The external representation is always ASCII
//! '0'/'1'; internally digits are packed 64 per machine word so that
//! million-digit prefixes stay cheap.
//!
//! [`Word`] is a fixed-width n-string (n <= 32), packed so that
//! lexicographic order on digits coincides with numeric order on the packed
//! value. Words label the vertices of De Bruijn graphs.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

pub const MAX_WORD_ORDER: usize = 32;

/// A sequence of binary digits, bit-packed, indexed from 0.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
}

impl BitString {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        BitString {
            words: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    /// All-zero string of the given length.
    pub fn zeros(len: usize) -> Self {
        BitString {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    /// All-one string of the given length.
    pub fn ones(len: usize) -> Self {
        let mut s = Self::with_capacity(len);
        for _ in 0..len {
            s.push(1);
        }
        s
    }

    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        let mut s = BitString::new();
        for b in bits {
            s.push(b);
        }
        s
    }

    /// Parse ASCII bit-text. Leading/trailing whitespace is trimmed; any
    /// character other than '0'/'1' is rejected with the 0-based index of
    /// the first offender (relative to the trimmed text).
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let mut s = BitString::with_capacity(trimmed.len());
        for (i, c) in trimmed.chars().enumerate() {
            match c {
                '0' => s.push(0),
                '1' => s.push(1),
                other => return Err(Error::InvalidBit { index: i, found: other }),
            }
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    #[inline]
    pub fn push(&mut self, bit: u8) {
        debug_assert!(bit <= 1);
        if self.len % 64 == 0 {
            self.words.push(0);
        }
        if bit != 0 {
            let i = self.len;
            self.words[i / 64] |= 1u64 << (i % 64);
        }
        self.len += 1;
    }

    pub fn extend(&mut self, other: &BitString) {
        for b in other.iter() {
            self.push(b);
        }
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut s = self.clone();
        s.extend(other);
        s
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Copy of the digits in `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> BitString {
        assert!(range.start <= range.end && range.end <= self.len);
        let mut s = BitString::with_capacity(range.len());
        for i in range {
            s.push(self.get(i));
        }
        s
    }

    /// The string with its final digit removed (drops sigma's last digit).
    pub fn head(&self) -> Result<BitString> {
        if self.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(self.slice(0..self.len - 1))
    }

    /// The string with its initial digit removed (drops sigma's first digit).
    pub fn tail(&self) -> Result<BitString> {
        if self.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(self.slice(1..self.len))
    }

    /// Every digit flipped.
    pub fn complement(&self) -> BitString {
        let mut s = BitString::with_capacity(self.len);
        for b in self.iter() {
            s.push(1 - b);
        }
        s
    }

    /// The width-n window starting at 0-based index `i`.
    pub fn window(&self, i: usize, n: usize) -> Result<Word> {
        if n == 0 || n > MAX_WORD_ORDER {
            return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_WORD_ORDER });
        }
        if i.checked_add(n).map_or(true, |end| end > self.len) {
            return Err(Error::WindowOutOfRange { start: i, width: n, len: self.len });
        }
        let mut v: u32 = 0;
        for j in 0..n {
            v = (v << 1) | self.get(i + j) as u32;
        }
        Ok(Word::new(v, n))
    }

    /// All width-n windows, left to right. Yields |s| - n + 1 words.
    pub fn windows(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        assert!(n >= 1 && n <= MAX_WORD_ORDER);
        let count = (self.len + 1).saturating_sub(n);
        let mut rolling: u32 = 0;
        let mask: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        (0..self.len).filter_map(move |i| {
            rolling = ((rolling << 1) | self.get(i) as u32) & mask;
            if i + 1 >= n && i + 1 - n < count {
                Some(Word::new(rolling, n))
            } else {
                None
            }
        })
    }

    /// True if `w` occurs as a window anywhere in the string.
    pub fn contains_word(&self, w: Word) -> bool {
        self.windows(w.order()).any(|x| x == w)
    }

    pub fn starts_with(&self, prefix: &BitString) -> bool {
        prefix.len <= self.len && prefix.iter().enumerate().all(|(i, b)| self.get(i) == b)
    }

    pub fn ends_with(&self, suffix: &BitString) -> bool {
        suffix.len <= self.len
            && suffix
                .iter()
                .enumerate()
                .all(|(i, b)| self.get(self.len - suffix.len + i) == b)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BitString::parse(s)
    }
}

impl serde::Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        BitString::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// A fixed-width n-string, n <= 32, packed MSB-first: the digit at string
/// position 0 sits in bit n-1 of `value`, so numeric order on `value` is
/// lexicographic order on digits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    order: u8,
    value: u32,
}

impl Word {
    pub fn new(value: u32, order: usize) -> Self {
        assert!(order >= 1 && order <= MAX_WORD_ORDER);
        let masked = if order == 32 { value } else { value & ((1u32 << order) - 1) };
        Word { order: order as u8, value: masked }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn get(&self, i: usize) -> u8 {
        assert!(i < self.order());
        ((self.value >> (self.order() - 1 - i)) & 1) as u8
    }

    pub fn all_zero(&self) -> bool {
        self.value == 0
    }

    pub fn all_one(&self) -> bool {
        let n = self.order();
        self.value == if n == 32 { u32::MAX } else { (1u32 << n) - 1 }
    }

    pub fn is_constant(&self) -> bool {
        self.all_zero() || self.all_one()
    }

    pub fn to_bitstring(&self) -> BitString {
        BitString::from_bits((0..self.order()).map(|i| self.get(i)))
    }

    pub fn from_bitstring(s: &BitString) -> Result<Word> {
        s.window(0, s.len())
    }

    /// All 2^n words of the given order in numeric (= lexicographic) order.
    pub fn all(order: usize) -> impl Iterator<Item = Word> {
        assert!(order >= 1 && order < 32);
        (0u32..(1u32 << order)).map(move |v| Word::new(v, order))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.order() {
            f.write_str(if self.get(i) == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl serde::Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
