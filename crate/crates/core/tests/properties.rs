use std::collections::BTreeSet;

use arndt::bijection::{arndt_to_reduced_ap, reduced_ap_to_arndt};
use arndt::catalog::{gf_antipalindromic, gf_k_arndt, gf_k_arndt_total, gf_reduced_ap, CatalogGf};
use arndt::closed_forms::{
    a_recurrence_triangle, a_sum_alternating, a_sum_positive, b_at_least, b_at_most, b_closed,
    fib, wz_residual,
};
use arndt::composition::{flip_class, is_arndt, is_k_arndt, is_k_block_arndt};
use arndt::enumerate::{compositions_of, family_members, BruteForce};
use arndt::series::{round_trip_holds, BivariatePolynomial, RationalGF};
use arndt::{Composition, Family};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

fn parts() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=9, 0..=10)
}

/// An Arndt composition built pair by pair.
fn arndt_parts() -> impl Strategy<Value = Vec<u64>> {
    (
        prop::collection::vec((2u64..=9, 1u64..=8), 0..=4),
        prop::option::of(1u64..=9),
    )
        .prop_map(|(pairs, tail)| {
            let mut v = Vec::new();
            for (a, b) in pairs {
                let b = b.min(a - 1);
                v.extend([a, b]);
            }
            v.extend(tail);
            v
        })
}

fn poly() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec((-5i64..=5, 0u32..=4, 0u32..=4), 0..=8)
        .prop_map(|t| BivariatePolynomial::from_terms(&t))
}

fn unit_poly() -> impl Strategy<Value = BivariatePolynomial> {
    poly().prop_map(|p| {
        let c = p.constant_term();
        &(&p - &BivariatePolynomial::monomial(c, 0, 0)) + &BivariatePolynomial::one()
    })
}

proptest! {
    #[test]
    fn arndt_is_zero_arndt_and_two_block(p in parts()) {
        prop_assert_eq!(is_arndt(&p), is_k_arndt(&p, 0));
        prop_assert_eq!(is_arndt(&p), is_k_block_arndt(&p, 2).unwrap());
        prop_assert!(is_k_block_arndt(&p, 1).unwrap());
    }

    #[test]
    fn k_arndt_is_monotone_in_k(p in parts(), k in -6i64..=6) {
        if is_k_arndt(&p, k + 1) {
            prop_assert!(is_k_arndt(&p, k));
        }
    }

    #[test]
    fn block_condition_weakens_with_smaller_blocks(p in parts(), k in 2usize..=5) {
        // every k-block sits inside one decreasing 2k-block
        if is_k_block_arndt(&p, 2 * k).unwrap() {
            prop_assert!(is_k_block_arndt(&p, k).unwrap());
        }
    }

    #[test]
    fn bijection_round_trips(p in arndt_parts()) {
        let tau = Composition::new(p).unwrap();
        prop_assert!(tau.is_arndt());
        let sigma = arndt_to_reduced_ap(&tau).unwrap();
        prop_assert!(sigma.is_reduced_ap_representative());
        prop_assert_eq!(sigma.weight(), tau.weight());
        prop_assert_eq!(sigma.num_parts(), tau.num_parts());
        prop_assert_eq!(reduced_ap_to_arndt(&sigma).unwrap(), tau);
    }

    #[test]
    fn flip_classes_partition_the_family(p in parts()) {
        let c = Composition::new(p).unwrap();
        match flip_class(&c) {
            Ok(class) => {
                prop_assert!(c.is_antipalindromic());
                prop_assert_eq!(class.len(), 1usize << (c.num_parts() / 2));
                prop_assert!(class.contains(&c));
                for other in &class {
                    prop_assert_eq!(&flip_class(other).unwrap(), &class);
                }
            }
            Err(_) => prop_assert!(!c.is_antipalindromic()),
        }
    }

    #[test]
    fn polynomial_ring_laws(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn expansion_is_linear_and_round_trips(
        a in poly(), b in unit_poly(), c in poly(), d in unit_poly()
    ) {
        let f = RationalGF::new(a, b).unwrap();
        let g = RationalGF::new(c, d).unwrap();
        let sum = f.add(&g);
        prop_assert_eq!(sum.expand(12).to_polynomial(), f.expand(12).add(&g.expand(12)).to_polynomial());
        prop_assert!(round_trip_holds(&f, &f.expand(12)));
        let q = f.div(&g.add(&RationalGF::one()).add(&RationalGF::one()));
        if let Ok(q) = q {
            prop_assert!(round_trip_holds(&q, &q.expand(10)));
        }
    }

    #[test]
    fn sums_agree(n in 0usize..=40, m in 0usize..=40) {
        prop_assert_eq!(a_sum_alternating(n, m), a_sum_positive(n, m));
    }

    #[test]
    fn cumulative_counts_split_the_total(n in 1usize..=40, k in 1usize..=40) {
        let k = k.min(n);
        // at most k-1 and at least k partition the compositions
        let below = if k == 1 { BigUint::default() } else { b_at_most(n, k - 1) };
        prop_assert_eq!(below + b_at_least(n, k), fib(n));
    }

    #[test]
    fn k_arndt_total_specialisation(k in -5i64..=5) {
        let f = gf_k_arndt(k).eval_y1().unwrap();
        prop_assert!(f.equivalent(&gf_k_arndt_total(k)));
    }
}

#[test]
fn wz_residual_vanishes() {
    let tri = a_recurrence_triangle(42);
    for n in 0..=40 {
        for m in 0..=n + 2 {
            assert_eq!(wz_residual(n, m, &tri).unwrap(), BigInt::from(0), "n={n} m={m}");
        }
    }
}

#[test]
fn last_part_rows_sum_to_fibonacci() {
    for n in 1..=40 {
        let s: BigUint = (0..=n).map(|m| b_closed(n, m)).sum();
        assert_eq!(s, fib(n), "n={n}");
    }
}

#[test]
fn anti_palindromic_series_doubles_per_pair() {
    let ap = gf_antipalindromic().expand(20);
    let bp = gf_reduced_ap().expand(20);
    for n in 0..=20 {
        for m in 0..=n {
            let scale = BigRational::from_integer(BigInt::from(1u64 << (m / 2)));
            assert_eq!(ap.coeff(n, m), bp.coeff(n, m) * scale, "n={n} m={m}");
        }
    }
}

#[test]
fn streams_agree_with_filtering() {
    for family in [Family::Arndt, Family::KArndt(-2), Family::KArndt(2), Family::k_block(3).unwrap()] {
        for n in 0..=12 {
            let pruned: Vec<_> = family_members(n, family).collect();
            let filtered: Vec<_> = compositions_of(n).filter(|c| family.contains(c.parts())).collect();
            assert_eq!(pruned, filtered, "{family} n={n}");
        }
    }
}

#[test]
fn catalog_rows_match_enumeration() {
    let brute = BruteForce::default();
    for k in -3i64..=3 {
        let s = CatalogGf::KArndt(k).build().expand(12).to_count_triangle().unwrap();
        for n in 0..=12 {
            let want = brute.count_by_parts(n, Family::KArndt(k)).unwrap();
            assert_eq!(s.row(n).cloned().unwrap_or_default(), want, "k={k} n={n}");
        }
    }
}

#[test]
fn bijection_image_is_all_arndt_compositions() {
    for n in 0..=14 {
        let image: BTreeSet<_> = arndt::enumerate::enumerate_reduced_ap(n)
            .map(|s| reduced_ap_to_arndt(&s).unwrap())
            .collect();
        let arndt: BTreeSet<_> = family_members(n, Family::Arndt).collect();
        assert_eq!(image, arndt, "n={n}");
    }
}
