//! De Bruijn string and cycle primitives: the membership predicate, the
//! prefer-one generator, string/cycle conversions, and depleted-string
//! classification and repair.

use crate::bitstr::{BitString, Word};
use crate::{Error, Result};
use std::collections::HashMap;

/// Largest order accepted by the generators and predicates here. 2^26
/// windows already needs an 8 MiB seen-set; nothing at desk scale goes
/// further.
pub const MAX_ORDER: usize = 26;

fn check_order(n: usize) -> Result<()> {
    if n < 1 || n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_ORDER });
    }
    Ok(())
}

/// A full De Bruijn cycle of order n: 2^n digits whose cyclic width-n
/// windows are pairwise distinct (hence exhaust all n-strings).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeBruijnCycle {
    order: usize,
    digits: BitString,
}

impl DeBruijnCycle {
    /// Validate `digits` as a cycle of the given order.
    pub fn from_digits(digits: BitString, order: usize) -> Result<Self> {
        check_order(order)?;
        let period = 1usize << order;
        if digits.len() != period {
            return Err(Error::NotDeBruijn { order, len: digits.len() });
        }
        let mut seen = vec![false; period];
        for i in 0..period {
            let mut v: u32 = 0;
            for j in 0..order {
                v = (v << 1) | digits.get((i + j) % period) as u32;
            }
            if seen[v as usize] {
                return Err(Error::NotDeBruijn { order, len: digits.len() });
            }
            seen[v as usize] = true;
        }
        Ok(DeBruijnCycle { order, digits })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn digits(&self) -> &BitString {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The cycle packed MSB-first into a u64. Only orders up to 6 fit.
    pub fn packed(&self) -> u64 {
        assert!(self.order <= 6);
        let mut v: u64 = 0;
        for b in self.digits.iter() {
            v = (v << 1) | b as u64;
        }
        v
    }

    /// The rotation starting at cyclic index `start`.
    pub fn rotate(&self, start: usize) -> DeBruijnCycle {
        let period = self.len();
        let digits =
            BitString::from_bits((0..period).map(|i| self.digits.get((start + i) % period)));
        DeBruijnCycle { order: self.order, digits }
    }

    /// Canonical representative: the rotation with numerically least packed
    /// cycle value. The literature fixes no rotation; this one is used
    /// whenever a unique representative is needed.
    pub fn canonical(&self) -> DeBruijnCycle {
        let period = self.len();
        let mut best = 0usize;
        for start in 1..period {
            if (0..period)
                .map(|i| self.digits.get((start + i) % period))
                .cmp((0..period).map(|i| self.digits.get((best + i) % period)))
                == std::cmp::Ordering::Less
            {
                best = start;
            }
        }
        self.rotate(best)
    }

    /// Extend this rotation to a De Bruijn string by appending the first
    /// n-1 digits.
    pub fn to_string_form(&self) -> BitString {
        let mut s = self.digits.clone();
        for i in 0..self.order - 1 {
            s.push(self.digits.get(i));
        }
        s
    }

    /// The 2^n pairwise-distinct De Bruijn strings obtained by extending
    /// each cyclic rotation.
    pub fn rotations(&self) -> Vec<BitString> {
        (0..self.len()).map(|r| self.rotate(r).to_string_form()).collect()
    }
}

impl std::fmt::Display for DeBruijnCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.digits.fmt(f)
    }
}

impl std::fmt::Debug for DeBruijnCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DeBruijnCycle(order={}, {})", self.order, self.digits)
    }
}

/// True iff `s` has length 2^n + n - 1 and its width-n windows are pairwise
/// distinct (equivalently, exhaustive).
pub fn is_debruijn_string(s: &BitString, n: usize) -> bool {
    if check_order(n).is_err() {
        return false;
    }
    let expected = (1usize << n) + n - 1;
    if s.len() != expected {
        return false;
    }
    let mut seen = vec![false; 1usize << n];
    for w in s.windows(n) {
        let v = w.value() as usize;
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Drop the final n-1 digits of a De Bruijn string and view the rest as a
/// cycle of length 2^n.
pub fn string_to_cycle(s: &BitString, n: usize) -> Result<DeBruijnCycle> {
    check_order(n)?;
    if !is_debruijn_string(s, n) {
        return Err(Error::NotDeBruijn { order: n, len: s.len() });
    }
    DeBruijnCycle::from_digits(s.slice(0..1usize << n), n)
}

/// The prefer-one greedy generator: start from 0..01, append 1 unless that
/// repeats the terminal n-string, else 0; stop when neither digit is fresh.
/// Always yields a De Bruijn string of order n ending in n zeros.
pub fn prefer_one(n: usize) -> Result<BitString> {
    check_order(n)?;
    let size = 1usize << n;
    let mask: u32 = (size - 1) as u32;
    let mut seen = vec![false; size];
    let mut s = BitString::with_capacity(size + n - 1);
    // initial n-string: all zeros except a final 1
    for _ in 0..n - 1 {
        s.push(0);
    }
    s.push(1);
    let mut state: u32 = 1;
    seen[state as usize] = true;
    loop {
        let with_one = ((state << 1) | 1) & mask;
        let with_zero = (state << 1) & mask;
        if !seen[with_one as usize] {
            s.push(1);
            state = with_one;
        } else if !seen[with_zero as usize] {
            s.push(0);
            state = with_zero;
        } else {
            break;
        }
        seen[state as usize] = true;
    }
    Ok(s)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DepletedKind {
    FullDebruijn,
    Depleted,
    Neither,
}

/// Outcome of [`classify_depleted`]. When `kind` is `Depleted` the missing
/// set is nonempty and contained in {all-zero, all-one}.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct DepletedVerdict {
    pub kind: DepletedKind,
    pub missing: Vec<Word>,
}

/// Classify `s` as a full De Bruijn string, a depleted one (every n-string
/// exactly once except one or both of the constant strings), or neither.
///
/// Message strings close up cyclically: their terminal n-window repeats the
/// initial one. That single wrap-around duplicate is tolerated; any other
/// repeat disqualifies the string.
pub fn classify_depleted(s: &BitString, n: usize) -> Result<DepletedVerdict> {
    check_order(n)?;
    let neither = DepletedVerdict { kind: DepletedKind::Neither, missing: vec![] };
    if s.len() < n {
        return Ok(neither);
    }
    let total = 1usize << n;
    let window_count = s.len() - n + 1;
    // a depleted string misses at most two n-strings
    if window_count + 2 < total || window_count > total + 1 {
        return Ok(neither);
    }
    let mut counts: HashMap<u32, usize> = HashMap::new();
    for w in s.windows(n) {
        *counts.entry(w.value()).or_insert(0) += 1;
    }
    let first = s.window(0, n)?;
    let last = s.window(s.len() - n, n)?;
    let mut closure_dup = false;
    for (&v, &c) in &counts {
        if c == 1 {
            continue;
        }
        if c == 2 && v == first.value() && first == last && !closure_dup {
            closure_dup = true;
            continue;
        }
        return Ok(neither);
    }
    let missing: Vec<Word> = Word::all(n).filter(|w| !counts.contains_key(&w.value())).collect();
    if missing.is_empty() {
        if closure_dup {
            return Ok(neither);
        }
        return Ok(DepletedVerdict { kind: DepletedKind::FullDebruijn, missing });
    }
    if missing.iter().all(|w| w.is_constant()) {
        return Ok(DepletedVerdict { kind: DepletedKind::Depleted, missing });
    }
    Ok(neither)
}

/// Maximal runs of `digit` of length exactly `width` in a digit vector;
/// cyclic when `cyclic` is set. Returns start indices.
fn runs_of(digits: &[u8], digit: u8, width: usize, cyclic: bool) -> Vec<usize> {
    let len = digits.len();
    if width == 0 || width > len {
        return vec![];
    }
    let mut starts = vec![];
    let scan = if cyclic { len } else { len.saturating_sub(width) + 1 };
    for start in 0..scan {
        let inside = (0..width).all(|j| digits[(start + j) % len] == digit);
        if !inside {
            continue;
        }
        let before_ok = if cyclic {
            digits[(start + len - 1) % len] != digit
        } else {
            start == 0 || digits[start - 1] != digit
        };
        let after_ok = if cyclic {
            digits[(start + width) % len] != digit
        } else {
            start + width == len || digits[start + width] != digit
        };
        if before_ok && after_ok {
            starts.push(start);
        }
    }
    // a cyclic all-constant vector would report every start; callers never
    // feed one (width < len always leaves an opposite digit)
    starts
}

fn insert_at(digits: &mut Vec<u8>, pos: usize, digit: u8) {
    digits.insert(pos, digit);
}

/// Repair a depleted De Bruijn string by inserting an extra 0 at the run of
/// n-1 zeros and/or an extra 1 at the run of n-1 ones, depending on which
/// constant strings are missing. Works cyclically when the input closes up
/// (terminal n-window equals the initial one), linearly otherwise.
pub fn depleted_to_debruijn(s: &BitString, n: usize) -> Result<BitString> {
    let verdict = classify_depleted(s, n)?;
    if verdict.kind != DepletedKind::Depleted {
        return Err(Error::NotDepleted { order: n });
    }
    let missing_zero = verdict.missing.iter().any(|w| w.all_zero());
    let missing_one = verdict.missing.iter().any(|w| w.all_one());

    if n == 1 {
        // degenerate: the "run of 0 digits" is positionless; append
        let mut out = s.clone();
        if missing_zero {
            out.push(0);
        }
        if missing_one {
            out.push(1);
        }
        if is_debruijn_string(&out, 1) {
            return Ok(out);
        }
        return Err(Error::NotDepleted { order: n });
    }

    let cyclic = s.window(0, n)? == s.window(s.len() - n, n)?;
    // in the cyclic case operate on the underlying cycle (drop the n-digit
    // closure overlap), then re-extend
    let mut digits: Vec<u8> = if cyclic {
        s.slice(0..s.len() - n).iter().collect()
    } else {
        s.iter().collect()
    };

    for (miss, digit) in [(missing_zero, 0u8), (missing_one, 1u8)] {
        if !miss {
            continue;
        }
        let starts = runs_of(&digits, digit, n - 1, cyclic);
        match starts.len() {
            1 => insert_at(&mut digits, starts[0], digit),
            count => {
                return Err(Error::AmbiguousInsertion { digit, width: n - 1, count });
            }
        }
    }

    let mut out = BitString::from_bits(digits.iter().copied());
    if cyclic {
        // extend the repaired cycle back to string form
        for i in 0..n - 1 {
            out.push(digits[i]);
        }
    }
    if !is_debruijn_string(&out, n) {
        return Err(Error::NotDepleted { order: n });
    }
    Ok(out)
}
