//! The Ehrenfeucht-Mycielski mechanism: plain EM, seeded EM(Z), the
//! buffer-limited variant EM_n(Z), and the seeded algorithm that turns an
//! arbitrary seed into a De Bruijn string of the next order.
//!
//! Each digit is produced by finding the longest suffix of the string so
//! far that occurred at least once previously, then emitting the opposite
//! of the digit that followed the latest earlier occurrence of that suffix.
//! When no nonempty suffix recurs, the latest previous occurrence of the
//! empty suffix is taken to sit just before the final digit, so the emitted
//! digit is the complement of the preceding one (and a bare empty history
//! starts with 0).
//!
//! In buffered mode the suffix search is capped at length n: the longest
//! considered suffix has length at most n, and the latest earlier
//! occurrence of that capped suffix supplies the follower.

use crate::bitstr::BitString;
use crate::{Error, Result};
use std::collections::HashMap;

/// Longest suffix length the matcher will track. Record matches grow like
/// log2 of the history length, so this is unreachable at desk scale.
const MAX_MATCH: usize = 63;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EmMode {
    /// Plain EM: unbounded suffix matching.
    Identity,
    /// EM_n: suffix matching capped at the given buffer length (>= 1).
    Buffered(usize),
}

impl EmMode {
    fn cap(&self) -> usize {
        match *self {
            EmMode::Identity => MAX_MATCH,
            EmMode::Buffered(n) => n.min(MAX_MATCH),
        }
    }
}

/// One generation step, reported for analysis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepTrace {
    /// 1-based index of the emitted digit (seed excluded).
    pub position: usize,
    /// Length of the match string (0 for the empty-suffix fallback).
    pub match_length: usize,
    /// The match string itself.
    pub match_string: BitString,
    /// The digit emitted: the complement of the follower of the latest
    /// earlier occurrence of the match string.
    pub emitted: u8,
}

/// Incremental EM generator. Owns the full history (seed plus emitted
/// digits) and, per tracked suffix length, a latest-occurrence table over
/// packed windows.
pub struct EmState {
    history: BitString,
    seed_len: usize,
    mode: EmMode,
    /// last <= 64 digits of the history, newest digit in bit 0
    recent: u64,
    /// suffix lengths currently tracked: 1..=tracked
    tracked: usize,
    /// tables[l-1]: packed length-l window -> latest end index (0-based,
    /// over windows ending strictly before the current final digit)
    tables: Vec<HashMap<u64, usize>>,
}

#[inline]
fn mask(l: usize) -> u64 {
    debug_assert!(l >= 1 && l <= MAX_MATCH);
    (1u64 << l) - 1
}

impl EmState {
    pub fn new(seed: BitString, mode: EmMode) -> EmState {
        if let EmMode::Buffered(n) = mode {
            assert!(n >= 1, "buffer must be at least 1");
        }
        let tracked = match mode {
            EmMode::Identity => 8.min(MAX_MATCH),
            EmMode::Buffered(_) => mode.cap(),
        };
        let mut st = EmState {
            history: BitString::new(),
            seed_len: seed.len(),
            mode,
            recent: 0,
            tracked,
            tables: vec![HashMap::new(); tracked],
        };
        st.history = seed;
        st.rebuild();
        st
    }

    pub fn seed(&self) -> BitString {
        self.history.slice(0..self.seed_len)
    }

    pub fn mode(&self) -> EmMode {
        self.mode
    }

    /// Digits emitted so far, seed excluded.
    pub fn emitted(&self) -> BitString {
        self.history.slice(self.seed_len..self.history.len())
    }

    pub fn emitted_len(&self) -> usize {
        self.history.len() - self.seed_len
    }

    /// The full string Z followed by the emitted digits.
    pub fn history(&self) -> &BitString {
        &self.history
    }

    /// Splice `prefix` onto the front of the seed and re-index, continuing
    /// as if the longer seed had been the one given.
    pub fn prepend_seed(&mut self, prefix: &BitString) {
        self.history = prefix.concat(&self.history);
        self.seed_len += prefix.len();
        self.rebuild();
    }

    fn rebuild(&mut self) {
        for t in &mut self.tables {
            t.clear();
        }
        self.recent = 0;
        let m = self.history.len();
        for i in 0..m {
            self.recent = (self.recent << 1) | self.history.get(i) as u64;
            if i + 1 < m {
                self.index_windows_ending(i);
            }
        }
    }

    /// Record all tracked windows ending at index `end`, using `recent`
    /// which must hold the history up to and including `end`.
    #[inline]
    fn index_windows_ending(&mut self, end: usize) {
        let upto = self.tracked.min(end + 1);
        for l in 1..=upto {
            self.tables[l - 1].insert(self.recent & mask(l), end);
        }
    }

    /// Longest tracked suffix with an earlier occurrence: (length, end
    /// index of that latest earlier occurrence).
    fn search(&self) -> Option<(usize, usize)> {
        let m = self.history.len();
        for l in (1..=self.tracked.min(m)).rev() {
            if let Some(&e) = self.tables[l - 1].get(&(self.recent & mask(l))) {
                return Some((l, e));
            }
        }
        None
    }

    /// Track one more suffix length, backfilling its table from history.
    fn grow(&mut self) {
        self.tracked += 1;
        let l = self.tracked;
        let mut table = HashMap::new();
        let m = self.history.len();
        let mut rolling: u64 = 0;
        for i in 0..m {
            rolling = (rolling << 1) | self.history.get(i) as u64;
            if i + 1 >= l && i + 1 < m {
                table.insert(rolling & mask(l), i);
            }
        }
        self.tables.push(table);
    }

    fn step(&mut self) -> (u8, usize, usize) {
        let m = self.history.len();
        let mut found = self.search();
        // a match as long as the tracked maximum may hide a longer one
        while matches!(self.mode, EmMode::Identity)
            && found.map_or(false, |(l, _)| l == self.tracked)
            && self.tracked < MAX_MATCH.min(m.saturating_sub(1))
        {
            self.grow();
            found = self.search();
        }
        let (digit, match_len, match_end) = match found {
            Some((l, e)) => (1 - self.history.get(e + 1), l, e),
            None => {
                let d = if m == 0 { 0 } else { 1 - self.history.get(m - 1) };
                (d, 0, 0)
            }
        };
        if m >= 1 {
            self.index_windows_ending(m - 1);
        }
        self.history.push(digit);
        self.recent = (self.recent << 1) | digit as u64;
        (digit, match_len, match_end)
    }

    /// Emit the next digit.
    pub fn next_bit(&mut self) -> u8 {
        self.step().0
    }

    /// Emit the next digit together with its trace.
    pub fn next_with_trace(&mut self) -> (u8, StepTrace) {
        let before = self.history.len();
        let (digit, match_len, _end) = self.step();
        let trace = StepTrace {
            position: before - self.seed_len + 1,
            match_length: match_len,
            match_string: self.history.slice(before - match_len..before),
            emitted: digit,
        };
        (digit, trace)
    }
}

/// Batch form: exactly `count` digits of EM(Z) (or EM_n(Z)).
pub fn generate(seed: &BitString, count: usize, mode: EmMode) -> BitString {
    let mut st = EmState::new(seed.clone(), mode);
    let mut out = BitString::with_capacity(count);
    for _ in 0..count {
        out.push(st.next_bit());
    }
    out
}

/// Result of the seeded De Bruijn construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeededDeBruijn {
    /// The order-(n+1) De Bruijn string: the n zeros terminating the
    /// effective seed followed by the 2^(n+1) generated digits.
    pub debruijn: BitString,
    /// The effective seed after all front-splices.
    pub final_seed: BitString,
}

/// Generate an order-(n+1) De Bruijn string from an arbitrary seed by
/// running EM_n on it. The seed is first made to end in n zeros (by
/// appending them if absent); thereafter, whenever the current n-string
/// tail does not appear in the effective seed, that tail is spliced onto
/// the seed's front and generation continues with the longer seed.
pub fn debruijn_from_seed(n: usize, seed: &BitString) -> Result<SeededDeBruijn> {
    if n < 1 || n > 20 {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: 20 });
    }
    let zeros = BitString::zeros(n);
    let eff = if seed.ends_with(&zeros) { seed.clone() } else { seed.concat(&zeros) };
    let mut st = EmState::new(eff, EmMode::Buffered(n));
    let target = 1usize << (n + 1);
    while st.emitted_len() < target {
        let h = st.history();
        let tail = h.window(h.len() - n, n)?;
        if !st.seed().contains_word(tail) {
            st.prepend_seed(&tail.to_bitstring());
        }
        st.next_bit();
    }
    let final_seed = st.seed();
    let mut debruijn = final_seed.slice(final_seed.len() - n..final_seed.len());
    debruijn.extend(&st.emitted());
    Ok(SeededDeBruijn { debruijn, final_seed })
}
