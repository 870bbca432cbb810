//! Structural invariants that cut across modules: walk/edge coverage of
//! the recurrence constructions, rotation stability, and duality between
//! string paths and graph circuits.

use std::collections::HashSet;

use emdb::bitstr::BitString;
use emdb::debruijn::prefer_one;
use emdb::graph::{classify_helix, induced_path, DeBruijnGraph};
use emdb::lfsr::{companion_initial_state, linear_debruijn_cycle, primitive_recurrences, Gf2Poly, Recurrence};

/// Closed-walk edge set of a sequence with the given period: the period
/// plus n further digits closes the walk on B^n.
fn walk_edges(r: &Recurrence, init: &BitString, period: usize, n: usize) -> HashSet<(u32, u32)> {
    let seq = r.run(init, period + n).unwrap();
    let path = induced_path(&seq, n).unwrap();
    assert_eq!(path[0], path[period], "walk must close");
    let mut edges = HashSet::new();
    for pair in path.windows(2) {
        assert!(edges.insert((pair[0].value(), pair[1].value())), "edge reused");
    }
    edges
}

#[test]
fn recurrence_walks_partition_the_non_loop_edges() {
    // the direct and companion walks leave every shared vertex by
    // opposite edges; together they use every edge except the two
    // self-loops, which neither walk can reach
    for n in 2..=6usize {
        let period = (1 << n) - 1;
        for r in primitive_recurrences(n).unwrap() {
            let direct = walk_edges(&r, &companion_initial_state(n), period, n);
            let companion = Recurrence::new(r.taps().to_vec(), true).unwrap();
            let comp = walk_edges(&companion, &companion_initial_state(n), period, n);
            assert!(direct.is_disjoint(&comp), "n={n}");
            let union: HashSet<_> = direct.union(&comp).copied().collect();
            assert_eq!(union.len(), (1 << (n + 1)) - 2, "n={n}");
            let zero = (0u32, 0u32);
            let ones = (((1u32 << n) - 1), ((1u32 << n) - 1));
            assert!(!union.contains(&zero) && !union.contains(&ones), "n={n}");
        }
    }
}

#[test]
fn companion_avoids_the_all_one_state() {
    for n in 2..=8usize {
        let period = (1 << n) - 1;
        for r in primitive_recurrences(n).unwrap() {
            let companion = Recurrence::new(r.taps().to_vec(), true).unwrap();
            let seq = companion.run(&companion_initial_state(n), period + n).unwrap();
            for w in seq.windows(n) {
                assert!(!w.all_one(), "n={n}");
            }
        }
    }
}

#[test]
fn irreducible_orders_divide_the_group_order() {
    for n in 2..=10usize {
        for low in 0..(1u64 << (n - 1)) {
            let bits = 1 | (low << 1) | (1 << n);
            let f = Gf2Poly::from_coeff_bits(bits);
            if !f.is_irreducible() {
                continue;
            }
            let order = f.order().unwrap();
            let group = (1u64 << n) - 1;
            assert_eq!(group % order, 0, "f={f} order={order}");
        }
    }
}

#[test]
fn linear_cycles_are_helices_in_every_rotation() {
    for n in 2..=8usize {
        for r in primitive_recurrences(n).unwrap() {
            let cycle = linear_debruijn_cycle(&r).unwrap();
            for rot in 0..cycle.len() {
                let s = cycle.rotate(rot).to_string_form();
                assert!(
                    classify_helix(&s, n).unwrap().is_double_helix,
                    "n={n} rot={rot}"
                );
            }
        }
    }
}

#[test]
fn string_paths_are_eulerian_on_the_lower_order_graph() {
    // order-n De Bruijn string = Eulerian circuit of B^(n-1)
    for n in 2..=6usize {
        let s = prefer_one(n).unwrap();
        let path = induced_path(&s, n - 1).unwrap();
        let g = DeBruijnGraph::new(n - 1).unwrap();
        let mut edges = HashSet::new();
        for pair in path.windows(2) {
            assert!(g.has_edge(pair[0], pair[1]), "n={n}");
            assert!(edges.insert((pair[0].value(), pair[1].value())), "n={n}");
        }
        assert_eq!(edges.len(), g.edge_count(), "n={n}");
        assert_eq!(path[0], path[path.len() - 1], "n={n}");
    }
}
