//! Exhaustive enumeration of De Bruijn cycles at desk-scale orders, with
//! the closed-form counts alongside.
//!
//! A De Bruijn cycle of order n is a Hamiltonian circuit of B^n
//! (equivalently an Eulerian circuit of B^(n-1)); enumeration is
//! depth-first backtracking from the all-zero vertex with a visited
//! bitmask. Fixing the start vertex yields each cycle exactly once;
//! emission applies the canonical (numerically least) rotation.

use crate::bitstr::BitString;
use crate::debruijn::DeBruijnCycle;
use crate::graph::classify_helix;
use crate::{Error, Result};
use rayon::prelude::*;

/// Exhaustive enumeration cap without the long-running override. Order 6
/// has 2^26 cycles and is supported only as a streaming count behind the
/// override.
pub const MAX_ENUM_ORDER: usize = 5;
pub const MAX_ENUM_ORDER_OVERRIDE: usize = 6;

fn check_enum_order(n: usize, allow_large: bool) -> Result<()> {
    let cap = if allow_large { MAX_ENUM_ORDER_OVERRIDE } else { MAX_ENUM_ORDER };
    if n < 1 || n > cap {
        return Err(Error::EnumOrderCap { order: n, cap });
    }
    Ok(())
}

/// Closed-form number of De Bruijn cycles of order n: 2^(2^(n-1) - n).
pub fn cycle_count_formula(n: usize) -> u128 {
    assert!(n >= 1 && n <= 7);
    1u128 << ((1usize << (n - 1)) - n)
}

/// Closed-form number of De Bruijn strings of order n: 2^(2^(n-1)).
pub fn string_count_formula(n: usize) -> u128 {
    assert!(n >= 1 && n <= 7);
    1u128 << (1usize << (n - 1))
}

struct Dfs<'a, F: FnMut(&[u32])> {
    mask: u32,
    size: usize,
    emit: &'a mut F,
}

impl<'a, F: FnMut(&[u32])> Dfs<'a, F> {
    fn run(&mut self, path: &mut Vec<u32>, visited: u64) {
        let v = *path.last().unwrap();
        if path.len() == self.size {
            // close the circuit back to the all-zero start vertex
            let shifted = (v << 1) & self.mask;
            if shifted == 0 {
                (self.emit)(path);
            }
            return;
        }
        let shifted = (v << 1) & self.mask;
        for next in [shifted, shifted | 1] {
            if visited >> next & 1 == 0 {
                path.push(next);
                self.run(path, visited | (1u64 << next));
                path.pop();
            }
        }
    }
}

/// Digits of the cycle whose vertex sequence is `path`: the leading digit
/// of each successive vertex.
fn path_to_digits(path: &[u32], n: usize) -> BitString {
    BitString::from_bits(path.iter().map(|&v| ((v >> (n - 1)) & 1) as u8))
}

fn canonical_packed(digits: &BitString) -> u64 {
    let len = digits.len();
    let mut packed: u64 = 0;
    for b in digits.iter() {
        packed = (packed << 1) | b as u64;
    }
    let mut best = packed;
    let mut cur = packed;
    let top = len - 1;
    let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
    for _ in 1..len {
        cur = ((cur << 1) & mask) | (cur >> top);
        if cur < best {
            best = cur;
        }
    }
    best
}

fn packed_to_cycle(packed: u64, n: usize) -> DeBruijnCycle {
    let len = 1usize << n;
    let digits = BitString::from_bits((0..len).map(|i| ((packed >> (len - 1 - i)) & 1) as u8));
    DeBruijnCycle::from_digits(digits, n).expect("enumerated cycle must validate")
}

/// Visit every De Bruijn cycle of order n exactly once, in canonical
/// rotation. Emission order is the DFS order of the search tree.
pub fn for_each_debruijn_cycle<F: FnMut(DeBruijnCycle)>(
    n: usize,
    allow_large: bool,
    mut f: F,
) -> Result<()> {
    check_enum_order(n, allow_large)?;
    let size = 1usize << n;
    let mask = (size - 1) as u32;
    let mut emit = |path: &[u32]| {
        let digits = path_to_digits(path, n);
        f(packed_to_cycle(canonical_packed(&digits), n));
    };
    let mut dfs = Dfs { mask, size, emit: &mut emit };
    dfs.run(&mut vec![0u32], 1);
    Ok(())
}

/// All De Bruijn cycles of order n, canonical rotations, sorted by packed
/// value (deterministic regardless of search strategy).
pub fn all_debruijn_cycles(n: usize) -> Result<Vec<DeBruijnCycle>> {
    let mut packed = vec![];
    for_each_debruijn_cycle(n, false, |c| packed.push(c.packed()))?;
    packed.sort_unstable();
    packed.dedup();
    Ok(packed.into_iter().map(|p| packed_to_cycle(p, n)).collect())
}

/// Exhaustive count next to the closed form; the two must agree in the
/// exhaustive regime.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub struct CountReport {
    pub order: usize,
    pub exhaustive: Option<u64>,
    pub formula: u128,
}

pub fn count_debruijn_cycles(n: usize) -> Result<CountReport> {
    let formula = if n <= 7 {
        cycle_count_formula(n)
    } else {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: 7 });
    };
    let exhaustive = if n <= MAX_ENUM_ORDER {
        let mut count = 0u64;
        for_each_debruijn_cycle(n, false, |_| count += 1)?;
        Some(count)
    } else {
        None
    };
    if let Some(c) = exhaustive {
        assert_eq!(c as u128, formula, "exhaustive count disagrees with closed form");
    }
    Ok(CountReport { order: n, exhaustive, formula })
}

pub fn count_debruijn_strings(n: usize) -> Result<CountReport> {
    let cycles = count_debruijn_cycles(n)?;
    Ok(CountReport {
        order: n,
        exhaustive: cycles.exhaustive.map(|c| c * (1u64 << n)),
        formula: string_count_formula(n),
    })
}

/// Number of order-n cycles whose rotation-extensions classify as double
/// helices. Helix-ness is rotation-invariant, so one rotation per cycle
/// is classified.
pub fn count_double_helices(n: usize, allow_large: bool) -> Result<u64> {
    let mut count = 0u64;
    for_each_debruijn_cycle(n, allow_large, |c| {
        let s = c.to_string_form();
        if classify_helix(&s, n).map(|r| r.is_double_helix).unwrap_or(false) {
            count += 1;
        }
    })?;
    Ok(count)
}

/// Frontier-split parallel count of De Bruijn cycles; must agree with the
/// sequential count. `filter_helices` restricts to double helices.
pub fn count_cycles_parallel(n: usize, filter_helices: bool, allow_large: bool) -> Result<u64> {
    check_enum_order(n, allow_large)?;
    let size = 1usize << n;
    let mask = (size - 1) as u32;
    // expand the search tree to a fixed shallow depth, then farm out
    let split_depth = (size / 2).clamp(1, 12);
    let mut frontier: Vec<(Vec<u32>, u64)> = vec![(vec![0u32], 1u64)];
    for _ in 0..split_depth {
        let mut next_frontier = vec![];
        for (path, visited) in frontier {
            if path.len() == size {
                next_frontier.push((path, visited));
                continue;
            }
            let v = *path.last().unwrap();
            let shifted = (v << 1) & mask;
            for next in [shifted, shifted | 1] {
                if visited >> next & 1 == 0 {
                    let mut p = path.clone();
                    p.push(next);
                    next_frontier.push((p, visited | (1u64 << next)));
                }
            }
        }
        frontier = next_frontier;
    }
    let total = frontier
        .into_par_iter()
        .map(|(path, visited)| {
            let mut count = 0u64;
            let mut emit = |path: &[u32]| {
                if filter_helices {
                    let digits = path_to_digits(path, n);
                    let cycle = packed_to_cycle(canonical_packed(&digits), n);
                    let s = cycle.to_string_form();
                    if classify_helix(&s, n).map(|r| r.is_double_helix).unwrap_or(false) {
                        count += 1;
                    }
                } else {
                    count += 1;
                }
            };
            let mut dfs = Dfs { mask, size, emit: &mut emit };
            let mut p = path;
            if p.len() == size {
                let v = *p.last().unwrap();
                if (v << 1) & mask == 0 {
                    emit(&p);
                }
            } else {
                dfs.run(&mut p, visited);
            }
            count
        })
        .sum();
    Ok(total)
}
