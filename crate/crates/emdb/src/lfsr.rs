//! GF(2) linear recurrences and their characteristic polynomials: PN
//! (maximal-period) sequence detection, the affine companion recurrence,
//! and the linear De Bruijn cycle construction (insert a zero into the
//! unique run of n-1 zeros of a PN period).

use crate::bitstr::BitString;
use crate::debruijn::DeBruijnCycle;
use crate::{Error, Result};
use std::fmt;

/// Largest recurrence order the scanners accept. 2^16 - 1 periods and
/// degree-16 polynomial arithmetic stay instant; nothing here needs more.
pub const MAX_RECURRENCE_ORDER: usize = 16;

/// A polynomial over GF(2), bit i holding the coefficient of x^i.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    bits: u64,
}

impl Gf2Poly {
    pub fn from_coeff_bits(bits: u64) -> Self {
        Gf2Poly { bits }
    }

    pub fn zero() -> Self {
        Gf2Poly { bits: 0 }
    }

    pub fn one() -> Self {
        Gf2Poly { bits: 1 }
    }

    pub fn x() -> Self {
        Gf2Poly { bits: 2 }
    }

    /// 1 + x^p (equal to x^p - 1 over GF(2)).
    pub fn one_plus_x_to(p: u32) -> Self {
        assert!(p < 64);
        Gf2Poly { bits: 1 | (1u64 << p) }
    }

    /// Parse coefficient bit-text, degree 0 first: "1101" is 1 + x + x^3.
    pub fn parse(text: &str) -> Result<Self> {
        let s = BitString::parse(text)?;
        if s.len() > 64 {
            return Err(Error::OrderOutOfRange { order: s.len(), min: 1, max: 64 });
        }
        let mut bits = 0u64;
        for (i, b) in s.iter().enumerate() {
            bits |= (b as u64) << i;
        }
        Ok(Gf2Poly { bits })
    }

    pub fn coeff_bits(&self) -> u64 {
        self.bits
    }

    pub fn coeff(&self, degree: usize) -> u8 {
        if degree >= 64 {
            0
        } else {
            ((self.bits >> degree) & 1) as u8
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(63 - self.bits.leading_zeros() as usize)
        }
    }

    pub fn mul(self, other: Gf2Poly) -> Gf2Poly {
        let mut acc: u128 = 0;
        let a = self.bits as u128;
        for i in 0..64 {
            if (other.bits >> i) & 1 == 1 {
                acc ^= a << i;
            }
        }
        assert!(acc >> 64 == 0, "product overflows 64 coefficient bits");
        Gf2Poly { bits: acc as u64 }
    }

    /// Remainder of self divided by `divisor` (shift-xor schoolbook).
    pub fn rem(self, divisor: Gf2Poly) -> Gf2Poly {
        let d = divisor.degree().expect("division by zero polynomial");
        let mut r = self.bits;
        while let Some(rd) = (Gf2Poly { bits: r }).degree() {
            if rd < d {
                break;
            }
            r ^= divisor.bits << (rd - d);
        }
        Gf2Poly { bits: r }
    }

    pub fn divides(self, other: Gf2Poly) -> bool {
        other.rem(self).is_zero()
    }

    /// Trial division by every polynomial of degree 1..=deg/2.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        if d == 1 {
            return true;
        }
        // divisibility by x, i.e. zero constant term
        if self.coeff(0) == 0 {
            return false;
        }
        for deg in 1..=d / 2 {
            for low in 0..(1u64 << deg) {
                let candidate = Gf2Poly { bits: low | (1u64 << deg) };
                if candidate.divides(*self) {
                    return false;
                }
            }
        }
        true
    }

    fn mul_mod(self, other: Gf2Poly, modulus: Gf2Poly) -> Gf2Poly {
        let d = modulus.degree().expect("zero modulus");
        let mut acc: u128 = 0;
        let a = self.bits as u128;
        for i in 0..64 {
            if (other.bits >> i) & 1 == 1 {
                acc ^= a << i;
            }
        }
        // reduce the up-to-127-degree product
        let m = modulus.bits as u128;
        for i in (d..128).rev() {
            if (acc >> i) & 1 == 1 {
                acc ^= m << (i - d);
            }
        }
        Gf2Poly { bits: acc as u64 }
    }

    /// x^e modulo self, by repeated squaring.
    pub fn pow_x_mod(&self, mut e: u64) -> Gf2Poly {
        let mut result = Gf2Poly::one().rem(*self);
        let mut base = Gf2Poly::x().rem(*self);
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_mod(base, *self);
            }
            base = base.mul_mod(base, *self);
            e >>= 1;
        }
        result
    }

    /// The smallest p >= 1 such that self divides 1 + x^p. Defined for
    /// irreducible polynomials other than x; for degree n with nonzero
    /// constant term the result divides 2^n - 1.
    pub fn order(&self) -> Result<u64> {
        let Some(d) = self.degree() else {
            return Err(Error::OrderUndefined("the zero polynomial".into()));
        };
        if !self.is_irreducible() {
            return Err(Error::Reducible);
        }
        if self.coeff(0) == 0 {
            // the only irreducible with zero constant term is x itself
            return Err(Error::OrderUndefined("x".into()));
        }
        if d == 0 {
            return Err(Error::OrderUndefined("a constant".into()));
        }
        let group = (1u64 << d) - 1;
        let one = Gf2Poly::one();
        debug_assert!(self.pow_x_mod(group) == one);
        let mut ord = group;
        for p in prime_factors(group) {
            while ord % p == 0 && self.pow_x_mod(ord / p) == one {
                ord /= p;
            }
        }
        Ok(ord)
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for d in (0..=self.degree().unwrap()).rev() {
            if self.coeff(d) == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match d {
                0 => f.write_str("1")?,
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A GF(2) recurrence a_k = c_1 a_(k-1) + ... + c_n a_(k-n), optionally
/// affine (a trailing +1 on every step).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recurrence {
    taps: Vec<u8>,
    affine: bool,
}

impl Recurrence {
    /// `taps` are c_1..c_n in that order.
    pub fn new(taps: Vec<u8>, affine: bool) -> Result<Self> {
        let n = taps.len();
        if n < 1 || n > MAX_RECURRENCE_ORDER {
            return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_RECURRENCE_ORDER });
        }
        assert!(taps.iter().all(|&c| c <= 1));
        Ok(Recurrence { taps, affine })
    }

    pub fn order(&self) -> usize {
        self.taps.len()
    }

    pub fn taps(&self) -> &[u8] {
        &self.taps
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    /// Characteristic polynomial f(x) = c_0 + c_1 x + ... + c_n x^n with
    /// c_0 = 1.
    pub fn characteristic(&self) -> Gf2Poly {
        let mut bits = 1u64;
        for (i, &c) in self.taps.iter().enumerate() {
            bits |= (c as u64) << (i + 1);
        }
        Gf2Poly::from_coeff_bits(bits)
    }

    /// Recover the tap vector from a characteristic polynomial (c_0 must
    /// be 1); the polynomial's degree sets the order.
    pub fn from_characteristic(f: Gf2Poly, affine: bool) -> Result<Self> {
        let Some(n) = f.degree() else {
            return Err(Error::OrderUndefined("the zero polynomial".into()));
        };
        if f.coeff(0) != 1 {
            return Err(Error::OrderUndefined("c_0 must be 1".into()));
        }
        let taps: Vec<u8> = (1..=n).map(|i| f.coeff(i)).collect();
        Recurrence::new(taps, affine)
    }

    /// Run the recurrence for `count` steps. `init` gives the n most
    /// recent digits chronologically: init[0] = a_(-n), ..,
    /// init[n-1] = a_(-1).
    pub fn run(&self, init: &BitString, count: usize) -> Result<BitString> {
        let n = self.order();
        if init.len() != n {
            return Err(Error::BadInitLength { expected: n, got: init.len() });
        }
        let mut state: Vec<u8> = init.iter().collect();
        let mut out = BitString::with_capacity(count);
        for _ in 0..count {
            let mut acc = self.affine as u8;
            for i in 0..n {
                // c_i multiplies a_(k-i); state[n-i] is a_(k-i)
                acc ^= self.taps[i] & state[n - 1 - i];
            }
            out.push(acc);
            state.rotate_left(1);
            state[n - 1] = acc;
        }
        Ok(out)
    }

    /// True iff the non-affine sequence from any nonzero initial state has
    /// period exactly 2^n - 1; equivalently the characteristic polynomial
    /// is irreducible with order 2^n - 1. Affine recurrences and tap
    /// vectors with c_n = 0 are never PN.
    pub fn is_pn(&self) -> bool {
        if self.affine {
            return false;
        }
        let n = self.order();
        if self.taps[n - 1] == 0 {
            return false;
        }
        let f = self.characteristic();
        f.is_irreducible() && f.order() == Ok((1u64 << n) - 1)
    }
}

/// Conventional initial condition for the affine companion sequence:
/// b_(-1) = 1, b_(-2) = ... = b_(-n) = 0, chronological order.
pub fn companion_initial_state(n: usize) -> BitString {
    let mut s = BitString::zeros(n.saturating_sub(1));
    s.push(1);
    s
}

/// One full PN period with a zero inserted at the unique run of n-1
/// zeros, yielding a De Bruijn cycle of order n.
pub fn linear_debruijn_cycle(r: &Recurrence) -> Result<DeBruijnCycle> {
    if !r.is_pn() {
        return Err(Error::NotPn);
    }
    let n = r.order();
    if n == 1 {
        // the PN period is the single digit 1; the run of zero zeros is
        // positionless, so the cycle is just 01
        return DeBruijnCycle::from_digits(BitString::parse("01").unwrap(), 1);
    }
    let period = (1usize << n) - 1;
    let seq = r.run(&companion_initial_state(n), period)?;
    let digits: Vec<u8> = seq.iter().collect();
    // locate the unique cyclic maximal run of exactly n-1 zeros
    let mut starts = vec![];
    for start in 0..period {
        let inside = (0..n - 1).all(|j| digits[(start + j) % period] == 0);
        let before = digits[(start + period - 1) % period];
        let after = digits[(start + n - 1) % period];
        if inside && before == 1 && after == 1 {
            starts.push(start);
        }
    }
    assert_eq!(starts.len(), 1, "PN period must contain exactly one run of n-1 zeros");
    let at = starts[0];
    let mut out = BitString::with_capacity(period + 1);
    out.push(0);
    for i in 0..period {
        out.push(digits[(at + i) % period]);
    }
    DeBruijnCycle::from_digits(out, n)
}

/// Every order-n tap vector whose characteristic polynomial is irreducible
/// with order 2^n - 1; nonempty for all n in range.
pub fn primitive_recurrences(n: usize) -> Result<Vec<Recurrence>> {
    if n < 1 || n > MAX_RECURRENCE_ORDER {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_RECURRENCE_ORDER });
    }
    let mut out = vec![];
    // c_n = 1 is necessary; scan c_1..c_(n-1)
    for low in 0..(1u64 << (n - 1)) {
        let mut taps: Vec<u8> = (0..n - 1).map(|i| ((low >> i) & 1) as u8).collect();
        taps.push(1);
        let r = Recurrence::new(taps, false)?;
        if r.is_pn() {
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(text: &str) -> BitString {
        BitString::parse(text).unwrap()
    }

    fn poly(text: &str) -> Gf2Poly {
        Gf2Poly::parse(text).unwrap()
    }

    /// Smallest period of `s` treated as a purely periodic sequence
    /// prefix; brute-force scan.
    fn brute_period(s: &BitString) -> usize {
        'outer: for p in 1..=s.len() {
            for i in 0..s.len() {
                if s.get(i) != s.get(i % p) {
                    continue 'outer;
                }
            }
            return p;
        }
        unreachable!()
    }

    #[test]
    fn run_period_seven() {
        let r = Recurrence::new(vec![0, 1, 1], false).unwrap();
        let out = r.run(&bs("001"), 14).unwrap();
        assert_eq!(out.len(), 14);
        assert_eq!(brute_period(&out), 7);
        assert_eq!(out.slice(0..7), out.slice(7..14));
    }

    #[test]
    fn all_zero_init_stays_zero() {
        let r = Recurrence::new(vec![0, 1, 1], false).unwrap();
        assert_eq!(r.run(&bs("000"), 10).unwrap(), BitString::zeros(10));
        assert!(r.run(&bs("01"), 5).is_err());
    }

    #[test]
    fn affine_companion_has_pn_period() {
        // Eq-4.2 style companion of an irreducible characteristic
        let r = Recurrence::new(vec![0, 1, 1], true).unwrap();
        let out = r.run(&companion_initial_state(3), 21).unwrap();
        assert_eq!(brute_period(&out), 7);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!poly("001").is_irreducible()); // x^2 = x * x
        assert!(poly("111").is_irreducible()); // x^2 + x + 1
        assert!(poly("11111").is_irreducible()); // x^4 + x^3 + x^2 + x + 1
        assert!(!poly("11011").is_irreducible()); // (x^2+x+1)^2
        assert!(poly("11").is_irreducible()); // x + 1
        assert!(poly("01").is_irreducible()); // x
    }

    #[test]
    fn poly_order_examples() {
        assert_eq!(poly("111").order(), Ok(3));
        assert_eq!(poly("1101").order(), Ok(7)); // x^3 + x + 1
        assert_eq!(poly("11111").order(), Ok(5)); // irreducible, not maximal
        assert_eq!(poly("11011").order(), Err(Error::Reducible));
        assert!(poly("01").order().is_err()); // x
    }

    #[test]
    fn poly_order_agrees_with_linear_scan() {
        // cross-check the repeated-squaring route against direct
        // divisibility scans at small degree
        for bits in 2u64..64 {
            let f = Gf2Poly::from_coeff_bits(bits);
            if !f.is_irreducible() || f.coeff(0) == 0 || f.degree() == Some(0) {
                continue;
            }
            let fast = f.order().unwrap();
            let slow = (1..=63)
                .find(|&p| f.divides(Gf2Poly::one_plus_x_to(p)))
                .unwrap() as u64;
            assert_eq!(fast, slow, "f = {f}");
        }
    }

    #[test]
    fn pn_examples() {
        assert!(Recurrence::new(vec![0, 1, 1], false).unwrap().is_pn());
        // x^4 + x^3 + x^2 + x + 1: taps c1..c4 = 1,1,1,1 -> order 5, not 15
        assert!(!Recurrence::new(vec![1, 1, 1, 1], false).unwrap().is_pn());
        assert!(!Recurrence::new(vec![1, 0], false).unwrap().is_pn()); // c_n = 0
        assert!(!Recurrence::new(vec![0, 1, 1], true).unwrap().is_pn());
    }

    #[test]
    fn characteristic_round_trip() {
        let r = Recurrence::new(vec![0, 1, 1], false).unwrap();
        let f = r.characteristic();
        assert_eq!(f, poly("1011")); // 1 + x^2 + x^3
        assert_eq!(Recurrence::from_characteristic(f, false).unwrap(), r);
    }

    #[test]
    fn linear_cycle_is_debruijn() {
        let r = Recurrence::new(vec![0, 1, 1], false).unwrap();
        let c = linear_debruijn_cycle(&r).unwrap();
        assert_eq!(c.len(), 8);
        assert_eq!(c.order(), 3);
        let bad = Recurrence::new(vec![1, 1, 1, 1], false).unwrap();
        assert_eq!(linear_debruijn_cycle(&bad), Err(Error::NotPn));
    }

    #[test]
    fn linear_cycle_order_one() {
        let r = Recurrence::new(vec![1], false).unwrap();
        assert!(r.is_pn());
        let c = linear_debruijn_cycle(&r).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn primitive_scan_order_three() {
        let recs = primitive_recurrences(3).unwrap();
        assert_eq!(recs.len(), 2);
        let polys: Vec<String> = recs.iter().map(|r| r.characteristic().to_string()).collect();
        assert!(polys.contains(&"x^3 + x + 1".to_string()));
        assert!(polys.contains(&"x^3 + x^2 + 1".to_string()));
        for r in &recs {
            assert!(r.is_pn());
        }
    }

    #[test]
    fn primitive_scan_nonempty_for_all_orders() {
        for n in 1..=10 {
            assert!(!primitive_recurrences(n).unwrap().is_empty(), "n={n}");
        }
    }
}
