mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use permsum::bounds::{self, Claim};
use permsum::family::*;
use permsum::harness::{enumerate, rank, GraphClass, Harness};
use permsum::{canonical_graph, encode_graph6, fib, ps_permanent, ps_sachs, Error, Graph};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn set(graphs: Vec<Graph>) -> BTreeSet<Graph> {
    graphs.into_iter().collect()
}

fn canon6(g: &Graph) -> String {
    encode_graph6(&canonical_graph(g))
}

#[test]
fn structured_generators_match_naive() {
    for n in 1..=8 {
        let naive_trees = set(enumerate::naive(n, Some(n - 1), true).unwrap());
        assert_eq!(set(enumerate::trees(n).unwrap()), naive_trees, "trees n = {n}");
        let all = enumerate::naive(n, None, false).unwrap();
        let naive_forests = set(all.into_iter().filter(|g| g.is_forest()).collect());
        assert_eq!(set(enumerate::forests(n).unwrap()), naive_forests, "forests n = {n}");
    }
    for n in 3..=8 {
        let naive = set(enumerate::naive(n, Some(n), true).unwrap());
        assert_eq!(set(enumerate::unicyclic(n).unwrap()), naive, "unicyclic n = {n}");
    }
    for n in 4..=8 {
        let naive = set(enumerate::naive(n, Some(n + 1), true).unwrap());
        assert_eq!(set(enumerate::bicyclic(n).unwrap()), naive, "bicyclic n = {n}");
    }
}

#[test]
fn bicyclic_counts_and_classes() {
    let h = Harness::new();
    let counts: Vec<usize> = (4..=9).map(|n| h.bicyclic(n).unwrap().len()).collect();
    let naive: Vec<usize> = (4..=9).map(|n| enumerate::naive(n, Some(n + 1), true).unwrap().len()).collect();
    assert_eq!(counts, naive);
    for n in 4..=10 {
        let recs = h.bicyclic(n).unwrap();
        let by_class = |c| recs.iter().filter(|r| r.class == c).count();
        let total =
            by_class(GraphClass::TypeB1) + by_class(GraphClass::TypeB2) + by_class(GraphClass::TypeB3);
        assert_eq!(total, recs.len(), "n = {n}");
        let distinct: BTreeSet<_> = recs.iter().map(|r| r.graph6.clone()).collect();
        assert_eq!(distinct.len(), recs.len());
    }
}

#[test]
fn n5_bicyclic_census() {
    let recs = Harness::new().bicyclic(5).unwrap().to_vec();
    let names: BTreeSet<String> = recs.iter().map(|r| r.graph6.clone()).collect();
    let expected: BTreeSet<String> = [
        make_b1(3, 3).unwrap(),
        make_b3(1, 1, 1).unwrap(),
        make_b3(2, 1, 0).unwrap(),
        make_b3p(1).unwrap(),
        make_b3h(1).unwrap(),
    ]
    .iter()
    .map(canon6)
    .collect();
    assert_eq!(names, expected);
    let top = rank(&recs, 1);
    let best = recs.iter().map(|r| r.ps.clone()).max().unwrap();
    assert_eq!(top[0].ps, best);
}

#[test]
fn ranks_follow_ps() {
    let recs = Harness::new().unicyclic(7).unwrap();
    for w in recs.windows(2) {
        assert!(w[0].ps > w[1].ps || (w[0].ps == w[1].ps && w[0].graph6 < w[1].graph6));
        assert_eq!(w[1].rank, w[0].rank + 1);
    }
    assert_eq!(recs[0].rank, 1);
}

#[test]
fn report_values_pass_an_audit() {
    let h = Harness::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in [9, 10] {
        let recs = h.bicyclic(n).unwrap();
        let sample: Vec<_> = recs.choose_multiple(&mut rng, recs.len() / 20 + 1).collect();
        for r in sample {
            let g = r.graph();
            assert_eq!(ps_sachs(&g).unwrap(), r.ps);
            assert_eq!(ps_permanent(&g).unwrap(), r.ps);
        }
    }
}

#[test]
fn trees_are_bounded_by_paths() {
    for n in 1..=10 {
        for g in enumerate::trees(n).unwrap() {
            let ps = permsum::ps_recursive(&g).0;
            assert!(ps <= fib(n + 1));
            assert_eq!(ps == fib(n + 1), g.is_path());
        }
    }
}

#[test]
fn unicyclic_pairs_stay_below_bound() {
    let h = Harness::new();
    for n in 10..=12 {
        let bound = bounds::uni_union_bound(n).unwrap();
        for m in 5..=n - 5 {
            for a in h.unicyclic(m).unwrap().iter() {
                for b in h.unicyclic(n - m).unwrap().iter() {
                    assert!(a.ps.0.clone() * b.ps.0.clone() < bound, "n = {n}");
                }
            }
        }
        assert!(h.verify(Claim::Lem4_2, n).unwrap().pass);
    }
}

#[test]
fn remaining_claims_pass() {
    let h = Harness::new();
    for n in 1..=10 {
        let r = h.verify(Claim::Lem2_7, n).unwrap();
        assert!(r.pass, "{r:?}");
    }
    for n in 7..=12 {
        let r = h.verify(Claim::Lem4_5, n).unwrap();
        assert!(r.pass, "{r:?}");
    }
    let r = h.verify(Claim::Lem4_3, 4).unwrap();
    assert!(r.pass && r.expected == "9");
    assert_eq!(r.extremal_observed, [canon6(&make_cycle(4).unwrap())]);
    for n in 5..=9 {
        assert!(h.verify(Claim::Lem5_1, n).unwrap().pass);
    }
    for n in 9..=40 {
        assert!(h.verify(Claim::Lem4_6, n).unwrap().pass);
    }
}

#[test]
fn strict_d_family_decrease_fails_from_ten() {
    let h = Harness::new();
    for n in [10, 11] {
        let r = h.verify(Claim::Lem5_1, n).unwrap();
        assert!(!r.pass);
        // D(3, n-3) is still the maximum
        assert_eq!(r.extremal_observed, [canon6(&make_d(3, n - 3).unwrap())]);
    }
}

#[test]
fn second_type_b2_maximum_below_eleven() {
    let h = Harness::new();
    for n in 8..=10 {
        let (value, graphs) = h.observe_second_max_b2(n).unwrap();
        assert!(value < bounds::b2_max(n).unwrap());
        assert!(!graphs.is_empty());
    }
    let (value, graphs) = h.observe_second_max_b2(11).unwrap();
    assert_eq!(value, BigUint::from(408u32));
    assert_eq!(graphs, [canon6(&make_b2p(4).unwrap())]);
}

#[test]
fn out_of_range_claims_are_unverifiable() {
    let h = Harness::new();
    for (claim, n) in [
        (Claim::Thm1_2, 10),
        (Claim::Thm1_1, 6),
        (Claim::Thm1_1, 13),
        (Claim::Lem2_8, 11),
        (Claim::Lem4_6, 8),
        (Claim::Lem4_3, 5),
    ] {
        assert!(matches!(h.verify(claim, n), Err(Error::Unverifiable { .. })), "{claim} {n}");
    }
}

#[test]
fn naive_rejects_large_orders() {
    assert!(matches!(enumerate::naive(10, Some(11), true), Err(Error::OrderLimit { .. })));
    assert!(enumerate::bicyclic(13).is_err());
    assert!(enumerate::forests(11).is_err());
}
