//! Randomized properties: value-type algebra, generator prefix stability,
//! and agreement between the incremental generator and the rescan
//! reference across modes.

mod common;

use proptest::prelude::*;

use emdb::bitstr::BitString;
use emdb::emgen::{generate, EmMode};

fn bits(max_len: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(BitString::from_bits)
}

proptest! {
    #[test]
    fn parse_format_roundtrip(s in bits(64)) {
        let text = s.to_string();
        prop_assert_eq!(BitString::parse(&text).unwrap(), s);
    }

    #[test]
    fn head_and_tail_commute(s in bits(64)) {
        prop_assume!(s.len() >= 2);
        let a = s.head().unwrap().tail().unwrap();
        let b = s.tail().unwrap().head().unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn complement_is_an_involution(s in bits(64)) {
        prop_assert_eq!(s.complement().complement(), s.clone());
        for (a, b) in s.iter().zip(s.complement().iter()) {
            prop_assert_eq!(a, 1 - b);
        }
    }

    #[test]
    fn window_count(s in bits(64), n in 1usize..8) {
        prop_assume!(n <= s.len());
        prop_assert_eq!(s.windows(n).count(), s.len() - n + 1);
        for (i, w) in s.windows(n).enumerate() {
            prop_assert_eq!(w, s.window(i, n).unwrap());
        }
    }

    #[test]
    fn concat_then_slice_recovers_parts(a in bits(40), b in bits(40)) {
        let joined = a.concat(&b);
        prop_assert_eq!(joined.slice(0..a.len()), a.clone());
        prop_assert_eq!(joined.slice(a.len()..joined.len()), b.clone());
        prop_assert!(joined.starts_with(&a));
        prop_assert!(joined.ends_with(&b));
    }

    #[test]
    fn output_prefixes_are_stable(seed in bits(8), k in 0usize..150, extra in 1usize..80) {
        for mode in [EmMode::Identity, EmMode::Buffered(2), EmMode::Buffered(3)] {
            let short = generate(&seed, k, mode);
            let long = generate(&seed, k + extra, mode);
            prop_assert_eq!(long.slice(0..k), short.clone());
        }
    }

    #[test]
    fn incremental_generator_matches_rescan(seed in bits(6), buffer in 1usize..5) {
        let count = 300;
        let fast_id = generate(&seed, count, EmMode::Identity);
        prop_assert_eq!(fast_id, common::naive_generate(&seed, count, usize::MAX));
        let fast_buf = generate(&seed, count, EmMode::Buffered(buffer));
        prop_assert_eq!(fast_buf, common::naive_generate(&seed, count, buffer));
    }
}
