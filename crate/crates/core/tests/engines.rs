mod common;

use std::sync::Arc;

use num_bigint::BigInt;
use permsum::family::*;
use permsum::harness::enumerate;
use permsum::recursive::{EdgeChoice, PsCache, RecursiveEngine};
use permsum::ryser::{permanent, IntMatrix};
use permsum::{
    coefficients_permanent, coefficients_sachs, encode_graph6, ps_permanent, ps_recursive, ps_sachs, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn order9_classes() -> Vec<Graph> {
    let mut out = enumerate::trees(9).unwrap();
    out.extend(enumerate::unicyclic(9).unwrap());
    out.extend(enumerate::bicyclic(9).unwrap());
    out
}

#[test]
fn permanent_matches_sachs_on_corpus() {
    let mut corpus = common::connected_corpus(8);
    corpus.extend(order9_classes());
    for g in &corpus {
        assert_eq!(ps_permanent(g).unwrap(), ps_sachs(g).unwrap(), "{}", encode_graph6(g));
        assert_eq!(
            coefficients_permanent(g).unwrap(),
            coefficients_sachs(g).unwrap(),
            "{}",
            encode_graph6(g)
        );
    }
}

#[test]
fn permanent_matches_sachs_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(10..=12);
        let extra = rng.gen_range(0..=5);
        let g = common::random_connected(&mut rng, n, extra);
        assert_eq!(ps_permanent(&g).unwrap(), ps_sachs(&g).unwrap(), "{}", encode_graph6(&g));
    }
}

#[test]
fn permanent_spot_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 1..=7 {
        let mut perm: Vec<usize> = (0..d).collect();
        for i in (1..d).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let mut m = IntMatrix::zeros(d);
        for (i, &j) in perm.iter().enumerate() {
            m.set(i, j, 1);
        }
        assert_eq!(permanent(&m).unwrap(), BigInt::from(1));

        let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..d).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let mut m = IntMatrix::from_rows(&rows).unwrap();
        let before = permanent(&m).unwrap();
        let (a, b) = (rng.gen_range(0..d), rng.gen_range(0..d));
        m.swap_rows(a, b);
        assert_eq!(permanent(&m).unwrap(), before);
        m.swap_columns(b, a);
        assert_eq!(permanent(&m).unwrap(), before);
    }
}

/// Permanent by expansion over all permutations.
fn permanent_by_permutations(rows: &[Vec<i64>]) -> BigInt {
    fn go(rows: &[Vec<i64>], i: usize, used: &mut Vec<bool>) -> BigInt {
        if i == rows.len() {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for j in 0..rows.len() {
            if !used[j] && rows[i][j] != 0 {
                used[j] = true;
                total += go(rows, i + 1, used) * rows[i][j];
                used[j] = false;
            }
        }
        total
    }
    go(rows, 0, &mut vec![false; rows.len()])
}

#[test]
fn ryser_matches_permutation_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let d = rng.gen_range(0..=7);
        let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..d).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        assert_eq!(permanent(&m).unwrap(), permanent_by_permutations(&rows));
    }
}

#[test]
fn recursive_agrees_under_any_edge_choice() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..300 {
        let n = rng.gen_range(3..=10);
        let extra = rng.gen_range(0..=6);
        let g = common::random_connected(&mut rng, n, extra);
        let want = ps_sachs(&g).unwrap();
        let seed = rng.gen();
        let seeded = RecursiveEngine::without_cache().edge_choice(EdgeChoice::Seeded(seed));
        assert_eq!(seeded.ps(&g), want, "{}", encode_graph6(&g));
        assert_eq!(ps_recursive(&g), want);
    }
}

#[test]
fn cache_entries_match_sachs() {
    let cache = Arc::new(PsCache::new());
    let engine = RecursiveEngine::with_cache(cache.clone());
    for g in enumerate::bicyclic(8).unwrap() {
        engine.ps(&g);
    }
    assert!(!cache.is_empty());
    for (cert, value) in cache.entries().iter().step_by(7) {
        assert_eq!(ps_sachs(&cert.graph()).unwrap().0, *value);
    }
    let plain = RecursiveEngine::without_cache();
    for g in enumerate::unicyclic(8).unwrap() {
        assert_eq!(engine.ps(&g), plain.ps(&g));
    }
}

#[test]
fn limits_are_reported() {
    assert!(ps_sachs(&make_path(17).unwrap()).is_err());
    assert!(ps_permanent(&make_path(25).unwrap()).is_err());
    assert!(coefficients_permanent(&make_path(17).unwrap()).is_err());
    // the recursive engine handles long paths and cycles directly
    assert_eq!(ps_recursive(&make_path(60).unwrap()).0, permsum::fib(61));
    let c40 = ps_recursive(&make_cycle(40).unwrap());
    assert_eq!(c40.0, permsum::fib(41) + permsum::fib(39) + 2u32);
}
