//! Empirical verifiers over generated sequences: match-length records and
//! their pigeonhole bound, cover times, record-head prefix checks,
//! periodicity detection for buffered generation, occurrence censuses, and
//! seed distinguishability.
//!
//! All reported positions are 1-based; `preperiod` is a 0-based count of
//! digits before the periodic part. Reports serialize to JSON with stable
//! key order.

use std::collections::{BTreeMap, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitstr::{BitString, Word};
use crate::debruijn::is_debruijn_string;
use crate::emgen::{generate, EmMode, EmState};
use crate::{Error, Result};

/// Seed together with m0, the length of the longest string occurring at
/// least twice in it (0 when every substring is unique, e.g. length <= 1).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SeedStats {
    pub seed: BitString,
    pub m0: usize,
}

pub fn seed_stats(seed: &BitString) -> SeedStats {
    let len = seed.len();
    let mut m0 = 0;
    for width in (1..len).rev() {
        let mut seen = HashSet::new();
        let mut repeated = false;
        for i in 0..=len - width {
            if !seen.insert(seed.slice(i..i + width)) {
                repeated = true;
                break;
            }
        }
        if repeated {
            m0 = width;
            break;
        }
    }
    SeedStats { seed: seed.clone(), m0 }
}

/// Match-length record times. `record_times[n]` is T_n, the number of
/// digits emitted before the step whose match length first reached n.
/// `bound_ok[n]` (kept for n > m0 only) asserts T_n <= 2^n + n - |Z|.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RecordReport {
    pub seed: BitString,
    pub m0: usize,
    pub record_times: BTreeMap<usize, usize>,
    pub bound_ok: BTreeMap<usize, bool>,
}

pub fn record_times(seed: &BitString, horizon: usize) -> RecordReport {
    let m0 = seed_stats(seed).m0;
    let mut st = EmState::new(seed.clone(), EmMode::Identity);
    let mut record_times = BTreeMap::new();
    let mut best = 0usize;
    for _ in 0..horizon {
        let (_, trace) = st.next_with_trace();
        if trace.match_length > best {
            for n in best + 1..=trace.match_length {
                record_times.insert(n, trace.position - 1);
            }
            best = trace.match_length;
        }
    }
    let bound_ok = record_times
        .iter()
        .filter(|(&n, _)| n > m0)
        .map(|(&n, &t)| {
            let rhs = (1i128 << n) + n as i128 - seed.len() as i128;
            (n, t as i128 <= rhs)
        })
        .collect();
    RecordReport { seed: seed.clone(), m0, record_times, bound_ok }
}

/// Cover times over the emitted digits: `cover_times[n]` is the smallest k
/// such that every n-string is a window of the first k emitted digits.
/// Widths not fully covered within the horizon are absent.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CoverReport {
    pub seed: BitString,
    pub horizon: usize,
    pub cover_times: BTreeMap<usize, usize>,
}

pub fn cover_times(seed: &BitString, horizon: usize) -> CoverReport {
    let emitted = generate(seed, horizon, EmMode::Identity);
    let mut cover_times = BTreeMap::new();
    for n in 1..=horizon.min(24) {
        let total = 1usize << n;
        if total > horizon {
            break;
        }
        let mut seen = vec![false; total];
        let mut remaining = total;
        let mut cover = None;
        for (i, w) in emitted.windows(n).enumerate() {
            if !seen[w.value() as usize] {
                seen[w.value() as usize] = true;
                remaining -= 1;
                if remaining == 0 {
                    cover = Some(i + n);
                    break;
                }
            }
        }
        match cover {
            Some(k) => {
                cover_times.insert(n, k);
            }
            // wider strings cannot be covered if this width is not
            None => break,
        }
    }
    CoverReport { seed: seed.clone(), horizon, cover_times }
}

/// A record match whose match string is not a prefix of seed + output.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct RecordHeadViolation {
    /// 1-based position of the emitted digit.
    pub position: usize,
    pub match_string: BitString,
}

fn is_head(history: &BitString, match_string: &BitString) -> bool {
    history.starts_with(match_string)
}

/// Check that every new record match longer than m0 has a match string
/// that is a head (prefix) of Z concatenated with the output. An empty
/// list verifies the property up to the horizon.
pub fn check_record_heads(seed: &BitString, horizon: usize) -> Vec<RecordHeadViolation> {
    let m0 = seed_stats(seed).m0;
    let mut st = EmState::new(seed.clone(), EmMode::Identity);
    let mut best = 0usize;
    let mut violations = vec![];
    for _ in 0..horizon {
        let (_, trace) = st.next_with_trace();
        if trace.match_length > best {
            if trace.match_length > m0 && !is_head(st.history(), &trace.match_string) {
                violations.push(RecordHeadViolation {
                    position: trace.position,
                    match_string: trace.match_string.clone(),
                });
            }
            best = trace.match_length;
        }
    }
    violations
}

/// Periodic regime of a buffered run. `preperiod` counts the emitted
/// digits before the repeating part begins; `unit` is one period.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PeriodReport {
    pub preperiod: usize,
    pub period: usize,
    pub unit: BitString,
    pub unit_is_debruijn: bool,
}

/// Detect the eventual period 2^(n+1) of buffer-n generation within `cap`
/// emitted digits. Returns `None` (not an error) when fewer than one full
/// verified repetition fits before the cap.
pub fn find_period(seed: &BitString, buffer: usize, cap: usize) -> Result<Option<PeriodReport>> {
    let period = 1usize
        .checked_shl(buffer as u32 + 1)
        .filter(|p| 2 * p <= usize::MAX / 2)
        .ok_or(Error::OrderOutOfRange { order: buffer, min: 1, max: 24 })?;
    if cap < 2 * period {
        return Err(Error::CapTooSmall { cap, min: 2 * period });
    }
    let x = generate(seed, cap, EmMode::Buffered(buffer));
    let mut start = cap - period;
    for j in (0..cap - period).rev() {
        if x.get(j) == x.get(j + period) {
            start = j;
        } else {
            break;
        }
    }
    if start > cap - 2 * period {
        return Ok(None);
    }
    let unit = x.slice(start..start + period);
    let window = x.slice(start..start + period + buffer);
    Ok(Some(PeriodReport {
        preperiod: start,
        period,
        unit,
        unit_is_debruijn: is_debruijn_string(&window, buffer + 1),
    }))
}

/// Occurrences of one word: total count and, per following digit, how
/// many occurrences it follows (the final occurrence may have none).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Occurrence {
    pub count: usize,
    pub followers: [usize; 2],
}

/// Count every width-n window of `s` with its follower digits.
pub fn occurrence_census(s: &BitString, n: usize) -> Result<BTreeMap<Word, Occurrence>> {
    if s.len() < n {
        return Err(Error::WindowOutOfRange { start: 0, width: n, len: s.len() });
    }
    let mut census: BTreeMap<Word, Occurrence> = BTreeMap::new();
    for (i, w) in s.windows(n).enumerate() {
        let entry = census.entry(w).or_default();
        entry.count += 1;
        if i + n < s.len() {
            entry.followers[s.get(i + n) as usize] += 1;
        }
    }
    Ok(census)
}

fn all_seeds(max_len: usize) -> Vec<BitString> {
    let mut seeds = vec![BitString::new()];
    for len in 1..=max_len {
        for v in 0u64..1 << len {
            seeds.push(BitString::from_bits((0..len).map(|i| ((v >> i) & 1) as u8)));
        }
    }
    seeds
}

fn colliding_pairs(
    seeds: &[BitString],
    horizon: usize,
) -> Vec<(BitString, BitString)> {
    let prefixes: Vec<BitString> = seeds
        .iter()
        .map(|z| generate(z, horizon, EmMode::Identity))
        .collect();
    let mut collisions = vec![];
    for i in 0..seeds.len() {
        for j in i + 1..seeds.len() {
            if prefixes[i] == prefixes[j] {
                collisions.push((seeds[i].clone(), seeds[j].clone()));
            }
        }
    }
    collisions
}

/// Exhaustively compare the length-`horizon` outputs of every pair of
/// distinct seeds up to `max_len` digits. Distinct seeds are expected to
/// diverge eventually; a returned pair is "undistinguished at this
/// horizon", not a refutation.
pub fn seed_distinguishability(
    max_len: usize,
    horizon: usize,
) -> Result<Vec<(BitString, BitString)>> {
    if max_len > 8 {
        return Err(Error::OrderOutOfRange { order: max_len, min: 0, max: 8 });
    }
    Ok(colliding_pairs(&all_seeds(max_len), horizon))
}

/// Randomized variant for seed lengths beyond the exhaustive range:
/// `pairs` sampled pairs of distinct seeds, deterministic in `rng_seed`.
pub fn seed_distinguishability_sampled(
    max_len: usize,
    horizon: usize,
    pairs: usize,
    rng_seed: u64,
) -> Vec<(BitString, BitString)> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let sample = |rng: &mut ChaCha8Rng| {
        let len = rng.gen_range(0..=max_len);
        BitString::from_bits((0..len).map(|_| rng.gen_range(0..2u8)))
    };
    let mut collisions = vec![];
    let mut done = 0;
    while done < pairs {
        let a = sample(&mut rng);
        let b = sample(&mut rng);
        if a == b {
            continue;
        }
        done += 1;
        if generate(&a, horizon, EmMode::Identity) == generate(&b, horizon, EmMode::Identity) {
            collisions.push((a, b));
        }
    }
    collisions
}

/// Random seed of length 0..=max_len, deterministic in the generator.
pub fn random_seed<R: Rng>(rng: &mut R, max_len: usize) -> BitString {
    let len = rng.gen_range(0..=max_len);
    BitString::from_bits((0..len).map(|_| rng.gen_range(0..2u8)))
}
