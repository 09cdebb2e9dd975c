//! Randomized laws: the library against the naive model, ring axioms,
//! capacity semantics, evaluation invariances, and closed-form identities.

mod support;

use cuplen::closed_forms::{gap_closed, zcl_diff_predicted, zcl_value, DiffPrediction};
use cuplen::combinatorics::{gap_p2n, gap_vanishing_k_threshold};
use cuplen::ring::{class_add, class_mul, monomial_mul, normalize, CohClass, Monomial, RingContext};
use cuplen::tensor::{
    zd_product, EvalOptions, EvalStats, ExponentAssignment, TensorContext,
};
use proptest::prelude::*;
use support::RawPoly;

type RawTerm = (Vec<u32>, u32);

fn raw_term(g: u32) -> impl Strategy<Value = RawTerm> {
    (prop::collection::vec(0u32..=5, g as usize), 0u32..=2)
}

fn raw_class(g: u32) -> impl Strategy<Value = Vec<RawTerm>> {
    prop::collection::vec(raw_term(g), 0..=3)
}

fn lib_class(raws: &[RawTerm], ctx: &RingContext) -> CohClass {
    let mut out = CohClass::zero();
    for (e, s) in raws {
        let mut folded = e.clone();
        folded[0] += 2 * s;
        if let Some(m) = normalize(&folded, ctx).unwrap() {
            out.toggle(m);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_match_the_naive_model(
        (n, g, factors) in (1u32..=4, 1u32..=4).prop_flat_map(|(n, g)| {
            (Just(n), Just(g), prop::collection::vec(raw_class(g), 1..=3))
        })
    ) {
        let ctx = RingContext::new(n, g).unwrap();
        let mut lib = CohClass::one();
        let mut naive = RawPoly::one(n, g);
        for raws in &factors {
            lib = class_mul(&lib, &lib_class(raws, &ctx), &ctx);
            naive = naive.mul(&RawPoly::from_raw_terms(n, g, raws));
        }
        prop_assert_eq!(naive.to_class(&ctx), lib);
    }

    #[test]
    fn ring_laws_hold(
        (n, g, a, b, c) in (1u32..=4, 1u32..=4).prop_flat_map(|(n, g)| {
            (Just(n), Just(g), raw_class(g), raw_class(g), raw_class(g))
        })
    ) {
        let ctx = RingContext::new(n, g).unwrap();
        let a = lib_class(&a, &ctx);
        let b = lib_class(&b, &ctx);
        let c = lib_class(&c, &ctx);
        prop_assert_eq!(class_mul(&a, &b, &ctx), class_mul(&b, &a, &ctx));
        prop_assert_eq!(
            class_mul(&class_mul(&a, &b, &ctx), &c, &ctx),
            class_mul(&a, &class_mul(&b, &c, &ctx), &ctx)
        );
        prop_assert_eq!(
            class_mul(&a, &class_add(&b, &c), &ctx),
            class_add(&class_mul(&a, &b, &ctx), &class_mul(&a, &c, &ctx))
        );
        prop_assert!(class_add(&a, &a).is_zero());
    }

    #[test]
    fn capacity_counts_absorbable_fresh_generators(
        (n, cap, pad, raw, j) in (1u32..=5, 1u32..=4, 1u32..=4).prop_flat_map(|(n, cap, pad)| {
            (Just(n), Just(cap), Just(pad), raw_term(cap), 1u32..=pad)
        })
    ) {
        let ctx = RingContext::new(n, cap + pad).unwrap();
        let mut folded = raw.0.clone();
        folded[0] += 2 * raw.1;
        folded.resize((cap + pad) as usize, 0);
        prop_assume!(normalize(&folded, &ctx).unwrap().is_some());
        let mon = normalize(&folded, &ctx).unwrap().unwrap();
        let mut m = Some(mon);
        for t in 0..j {
            let fresh = Monomial::generator(cap + 1 + t, &ctx).unwrap();
            m = m.and_then(|cur| monomial_mul(cur, fresh, &ctx));
        }
        prop_assert_eq!(m.is_some(), j <= mon.capacity(&ctx));
    }

    #[test]
    fn slot_swap_leaves_products_equivalent(
        (n, g, rows) in (1u32..=2, 1u32..=3).prop_flat_map(|(n, g)| {
            (Just(n), Just(g), prop::collection::vec(prop::collection::vec(0u32..=3, g as usize), 2))
        })
    ) {
        let ring = RingContext::new(n, g).unwrap();
        let tctx = TensorContext::new(ring, 3).unwrap();
        let mut fwd = ExponentAssignment::zeros(3, g).unwrap();
        let mut swapped = ExponentAssignment::zeros(3, g).unwrap();
        for (off, row) in rows.iter().enumerate() {
            for (i0, &a) in row.iter().enumerate() {
                fwd.set(off as u32 + 2, i0 as u32 + 1, a);
                swapped.set(3 - off as u32, i0 as u32 + 1, a);
            }
        }
        let stats = EvalStats::new();
        let p = zd_product(&fwd, &tctx, &EvalOptions::default(), &stats, None).unwrap();
        let q = zd_product(&swapped, &tctx, &EvalOptions::default(), &stats, None).unwrap();
        prop_assert_eq!(p.is_zero(), q.is_zero());
        prop_assert_eq!(p.term_count(), q.term_count());
    }

    #[test]
    fn pruning_never_changes_a_product(
        (n, g, k, rows) in (1u32..=2, 1u32..=3, 2u32..=3).prop_flat_map(|(n, g, k)| {
            (
                Just(n),
                Just(g),
                Just(k),
                prop::collection::vec(prop::collection::vec(0u32..=3, g as usize), (k - 1) as usize),
            )
        })
    ) {
        let ring = RingContext::new(n, g).unwrap();
        let tctx = TensorContext::new(ring, k).unwrap();
        let mut assign = ExponentAssignment::zeros(k, g).unwrap();
        for (off, row) in rows.iter().enumerate() {
            for (i0, &a) in row.iter().enumerate() {
                assign.set(off as u32 + 2, i0 as u32 + 1, a);
            }
        }
        let stats = EvalStats::new();
        let pruned = zd_product(&assign, &tctx, &EvalOptions { prune: true }, &stats, None).unwrap();
        let full = zd_product(&assign, &tctx, &EvalOptions { prune: false }, &stats, None).unwrap();
        prop_assert_eq!(pruned, full);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closed_forms_satisfy_their_laws(
        n in 1u64..=100_000,
        g in 1u64..=300,
        k in 2u32..=12,
    ) {
        let zcl = zcl_value(n, g, k).unwrap();
        let gap = gap_closed(n, g, k).unwrap();
        prop_assert_eq!(zcl + gap, 2 * n * k as u64);
        prop_assert!(2 * n * (k as u64 - 1) <= zcl);
        prop_assert!(zcl_value(n, g + 1, k).unwrap() >= zcl);
        prop_assert!(zcl_value(n, g, k + 1).unwrap() >= zcl);
        let diff = zcl_value(n, g + 1, k).unwrap() - zcl;
        match zcl_diff_predicted(n, g, k).unwrap().prediction {
            DiffPrediction::Exact(v) => prop_assert_eq!(diff, v),
            DiffPrediction::AtMost(v) => prop_assert!(diff <= v),
        }
    }

    #[test]
    fn projective_gap_is_monotone_and_vanishes_past_the_threshold(
        n in 1u64..=4096,
        k in 3u32..=20,
    ) {
        let gap = gap_p2n(n, k).unwrap();
        prop_assert!(gap_p2n(n, k + 1).unwrap() <= gap);
        if k as u64 >= gap_vanishing_k_threshold(n).unwrap() {
            prop_assert_eq!(gap, 0);
        }
    }
}
