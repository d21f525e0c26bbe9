use std::collections::BTreeSet;

use negacensus_core::arith::{factorize, gcd, ratio_order};
use negacensus_core::goodint::{classify, enumerate_set, GoodParams, GoodSet};
use negacensus_core::oracle::brute_good;

const PAIRS: [(i64, i64); 5] = [(3, 1), (5, 1), (7, 1), (9, 5), (11, 3)];
const LIMIT: u64 = 500;

type Set = BTreeSet<u64>;

fn set(a: i64, b: i64, beta: u32, which: GoodSet) -> Set {
    let params = GoodParams::new(a, b, beta).unwrap();
    enumerate_set(&params, which, LIMIT)
        .unwrap()
        .into_iter()
        .collect()
}

fn gamma_of(a: i64, b: i64) -> u32 {
    GoodParams::new(a, b, 0).unwrap().gamma()
}

/// 2-adic valuations of `ord_p(a/b)` over the primes of odd `d`, or `None`
/// if `d` shares a prime with `ab`.
fn order_valuations(a: i64, b: i64, d: u64) -> Option<Vec<u32>> {
    if gcd(d, (a * b).unsigned_abs()) != 1 {
        return None;
    }
    Some(
        factorize(d)
            .unwrap()
            .primes()
            .map(|p| ratio_order(a, b, p).unwrap().trailing_zeros())
            .collect(),
    )
}

/// `1` together with the odd `d` whose valuations all equal some `s` allowed by `pred`.
fn odd_uniform(a: i64, b: i64, pred: impl Fn(u32) -> bool) -> Set {
    (1..=LIMIT)
        .step_by(2)
        .filter(|&d| {
            d == 1
                || order_valuations(a, b, d)
                    .is_some_and(|v| v.iter().all(|&s| s == v[0] && pred(s)))
        })
        .collect()
}

fn scaled(s: &Set, factor: u64) -> Set {
    s.iter()
        .map(|d| d * factor)
        .filter(|&d| d <= LIMIT)
        .collect()
}

#[test]
fn classify_agrees_with_search_on_small_pairs() {
    for a in [-7i64, -3, 1, 3, 5, 9] {
        for b in [1i64, 5, 7] {
            let Ok(params) = GoodParams::new(a, b, 0) else {
                continue;
            };
            for beta in 0..=4 {
                let params = params.with_beta(beta);
                for d in 1..=120 {
                    let fast = classify(&params, d).unwrap();
                    let slow = brute_good(a, b, beta, d).unwrap();
                    assert!(fast.same_membership(&slow), "({a},{b}) beta={beta} d={d}");
                }
            }
        }
    }
}

#[test]
fn chain_of_good_sets() {
    for (a, b) in PAIRS {
        let gamma = gamma_of(a, b);
        for beta in 0..=gamma {
            let outer = set(a, b, beta, GoodSet::Good);
            let inner = set(a, b, beta + 1, GoodSet::Good);
            assert!(inner.is_subset(&outer));
            if beta < gamma {
                let w = 1u64 << (gamma - beta);
                assert!(
                    outer.contains(&w) && !inner.contains(&w),
                    "({a},{b}) beta={beta}"
                );
            }
        }
        assert!(set(a, b, gamma, GoodSet::Good).contains(&1));
        assert!(set(a, b, gamma + 1, GoodSet::Good).is_empty());
    }
}

#[test]
fn partition_and_evenly_good_emptiness() {
    for (a, b) in PAIRS {
        for beta in 0..=6 {
            let params = GoodParams::new(a, b, beta).unwrap();
            for d in 1..=LIMIT {
                let v = classify(&params, d).unwrap();
                assert_eq!(v.is_good, v.is_oddly_good || v.is_evenly_good);
                if (d << beta) > 2 {
                    assert!(
                        !(v.is_oddly_good && v.is_evenly_good),
                        "({a},{b}) beta={beta} d={d}"
                    );
                }
                if beta >= 2 {
                    assert!(!v.is_evenly_good);
                }
            }
        }
    }
}

#[test]
fn product_law() {
    for (a, b) in PAIRS {
        for beta in 0..=4 {
            let params = GoodParams::new(a, b, beta).unwrap();
            let good = |d: u64| classify(&params, d).unwrap().is_good;
            for c in (1..=45u64).step_by(2) {
                for d in (1..=45u64).step_by(2) {
                    if gcd(c * d, (a * b).unsigned_abs()) != 1 {
                        continue;
                    }
                    if good(c * d) {
                        assert!(good(c) && good(d));
                    }
                    if beta >= 2 {
                        assert_eq!(
                            good(c * d),
                            good(c) && good(d),
                            "({a},{b}) beta={beta} {c}*{d}"
                        );
                    }
                }
            }
        }
    }
    for beta in 0..=1 {
        let params = GoodParams::new(3, 1, beta).unwrap();
        assert!(classify(&params, 5).unwrap().is_good);
        assert!(classify(&params, 7).unwrap().is_good);
        assert!(!classify(&params, 35).unwrap().is_good);
    }
}

#[test]
fn divisor_closure_and_parity() {
    for (a, b) in PAIRS {
        let gamma = gamma_of(a, b);
        for beta in 0..=gamma {
            let members = set(a, b, beta, GoodSet::Good);
            for &d in &members {
                for c in factorize(d).unwrap().divisors() {
                    assert!(members.contains(&c), "({a},{b}) beta={beta}: {c} | {d}");
                }
            }
        }
        assert!(set(a, b, gamma, GoodSet::Good).iter().all(|d| d % 2 == 1));
    }
}

#[test]
fn good_set_unions() {
    for (a, b) in PAIRS {
        let gamma = gamma_of(a, b);
        let g = |beta| set(a, b, beta, GoodSet::Good);

        for beta in gamma + 1..=gamma + 3 {
            assert!(g(beta).is_empty());
        }
        let top = odd_uniform(a, b, |s| s == 1);
        if gamma >= 2 {
            assert_eq!(g(gamma), top, "({a},{b})");
            for beta in 2..gamma {
                let mut union = Set::new();
                for i in 0..=gamma - beta {
                    union.extend(scaled(&g(gamma), 1 << i));
                }
                assert_eq!(g(beta), union);
                let mut step = g(beta + 1);
                step.extend(scaled(&g(gamma), 1 << (gamma - beta)));
                assert_eq!(g(beta), step);
            }
        }
        let mut one = scaled(&g(2), 2);
        one.extend(odd_uniform(a, b, |s| s >= 1));
        assert_eq!(g(1), one, "({a},{b})");
        let mut zero = g(1);
        zero.extend(scaled(&g(1), 2));
        assert_eq!(g(0), zero, "({a},{b})");
    }
}

#[test]
fn oddly_and_evenly_good_unions() {
    for (a, b) in PAIRS {
        let gamma = gamma_of(a, b);
        let og = |beta| set(a, b, beta, GoodSet::OddlyGood);
        let eg = |beta| set(a, b, beta, GoodSet::EvenlyGood);
        if gamma >= 2 {
            assert_eq!(og(gamma), odd_uniform(a, b, |s| s == 1));
            let mut union = Set::new();
            for i in 0..gamma {
                union.extend(scaled(&og(gamma), 1 << i));
            }
            assert_eq!(og(1), union, "({a},{b})");
        }
        assert_eq!(eg(1), odd_uniform(a, b, |s| s >= 2), "({a},{b})");
        let mut zero = og(1);
        zero.extend(scaled(&og(1), 2));
        assert_eq!(og(0), zero);
        let mut zero = eg(1);
        zero.extend(scaled(&eg(1), 2));
        assert_eq!(eg(0), zero);
        for beta in 2..=6 {
            assert!(eg(beta).is_empty());
            assert_eq!(og(beta), set(a, b, beta, GoodSet::Good));
        }
    }
}
