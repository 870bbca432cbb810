//! Shared test helpers, chiefly a deliberately naive reference generator
//! that rescans the whole history at every step. It exists to pin the
//! incremental generator's semantics, so keep it simple and obviously
//! correct rather than fast.

use emdb::bitstr::BitString;

/// Next digit by full rescan: find the longest suffix of `h` (capped at
/// `cap`) with an earlier occurrence (one ending before the last digit),
/// take the latest such occurrence, and emit the complement of the digit
/// that followed it. With no matching suffix, emit the complement of the
/// last digit (0 on an empty history).
fn naive_step(h: &[u8], cap: usize) -> u8 {
    let m = h.len();
    if m == 0 {
        return 0;
    }
    let mut best: Option<(usize, usize)> = None; // (length, start of latest occurrence)
    // walk candidate occurrence end positions from latest to earliest
    for end in (0..m - 1).rev() {
        let mut len = 0;
        while len < cap
            && len <= end
            && m >= 2 + len
            && h[end - len] == h[m - 1 - len]
        {
            len += 1;
        }
        if len > 0 && best.map_or(true, |(l, _)| len > l) {
            best = Some((len, end + 1 - len));
        }
    }
    match best {
        Some((len, start)) => 1 - h[start + len],
        None => 1 - h[m - 1],
    }
}

/// Reference generator: `count` digits after the seed, by rescan.
#[allow(dead_code)]
pub fn naive_generate(seed: &BitString, count: usize, cap: usize) -> BitString {
    let mut h: Vec<u8> = seed.iter().collect();
    let mut out = BitString::with_capacity(count);
    for _ in 0..count {
        let d = naive_step(&h, cap);
        h.push(d);
        out.push(d);
    }
    out
}
