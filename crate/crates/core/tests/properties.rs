//! Invariants checked on generated inputs.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;

use valuate::algebraic::{
    elem_from_intpoly, from_irreducible, is_irreducible, minimal_pair, RootChoice,
};
use valuate::cli::{parse_input, parse_poly};
use valuate::factorization::{enumerate, is_arith_progression};
use valuate::poly::IntPoly;
use valuate::realroots::{count_positive_roots, isolate_positive_roots, squarefree_decomposition};
use valuate::valuation::{SearchCaps, ValuationMonoid, Verdict};

fn poly(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_degree + 1).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonneg(max_degree: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(0..=bound, 1..=max_degree + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("nonzero", |x| !x.is_zero())
}

/// Primitive irreducible polynomials of degree 1..=3 with a positive root.
fn min_poly() -> impl Strategy<Value = IntPoly> {
    (poly(2, 5), 1i64..=3)
        .prop_map(|(low, lead)| {
            &low + &IntPoly::monomial(BigInt::from(lead), low.degree().unwrap_or(0) + 1)
        })
        .prop_filter("irreducible with a positive root", |f| {
            f.content() == BigInt::from(1)
                && f.coeff(0) != BigInt::from(0)
                && is_irreducible(f).unwrap_or(false)
                && count_positive_roots(f).unwrap_or(0) >= 1
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back(f in poly(8, 50)) {
        let back = parse_poly(&f.to_string()).unwrap().to_int().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn ring_identities(f in poly(5, 20), g in poly(5, 20)) {
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &g, &g * &f);
        if !g.is_zero() {
            prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f.clone());
        }
        let x = num_rational::BigRational::new(3.into(), 7.into());
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(f in poly(4, 6), g in poly(2, 4)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let h = &(&f * &g) * &g;
        let parts = squarefree_decomposition(&h).unwrap();
        let product = parts.iter().fold(IntPoly::one(), |acc, (k, q)| &acc * &q.pow(*k as u32));
        // equal up to a rational constant: compare primitive parts, ignoring sign
        let (a, b) = (product.primitive_part(), h.primitive_part());
        prop_assert!(a == b || a == &IntPoly::zero() - &b || (h.degree() == Some(0) && parts.is_empty()));
    }

    #[test]
    fn sturm_counts_distinct_roots(roots in prop::collection::btree_set(1i64..=12, 0..5), extra in 1i64..=5) {
        let f = roots.iter().fold(IntPoly::from_i64(&[extra, 0, 1]), |acc, r| &acc * &IntPoly::from_i64(&[-r, 1]));
        prop_assert_eq!(count_positive_roots(&f).unwrap(), roots.len());
        let ivs = isolate_positive_roots(&f).unwrap();
        prop_assert_eq!(ivs.len(), roots.len());
        for (iv, r) in ivs.iter().zip(&roots) {
            prop_assert!(iv.contains(&num_rational::BigRational::from_integer((*r).into())));
        }
    }

    #[test]
    fn minimal_pair_splits(f in min_poly()) {
        let mp = minimal_pair(&f);
        prop_assert!(mp.p.is_nonnegative() && mp.q.is_nonnegative());
        prop_assert!(mp.p.support().is_disjoint(&mp.q.support()));
        prop_assert_eq!(mp.primitive(), f);
    }

    #[test]
    fn field_signs_match_floats(f in min_poly(), a in poly(3, 6), b in poly(3, 6)) {
        let alpha = Arc::new(from_irreducible(f, RootChoice::Largest).unwrap());
        let x = alpha.approx();
        let (ea, eb) = (elem_from_intpoly(&alpha, &a), elem_from_intpoly(&alpha, &b));
        prop_assert_eq!(ea.mul(&eb).unwrap(), eb.mul(&ea).unwrap());
        prop_assert_eq!(ea.add(&eb).unwrap().sub(&eb).unwrap(), ea.clone());
        let ca: Vec<f64> = a.coeffs().iter().map(|c| c.to_string().parse().unwrap()).collect();
        let value: f64 = ca.iter().enumerate().map(|(i, c)| c * x.powi(i as i32)).sum();
        if value.abs() > 1e-6 {
            prop_assert_eq!(ea.sign(), if value > 0.0 { 1 } else { -1 });
        }
    }

    #[test]
    fn factorizations_evaluate_to_the_element(x in nonneg(4, 3), which in 0usize..3) {
        let input = ["x^2-x-1", "rational:3/2", "x^3-2x^2+2x-2"][which];
        let m = ValuationMonoid::from_poly(&parse_input(input).unwrap(), SearchCaps::default()).unwrap();
        let s = enumerate(&m, &x, 24).unwrap();
        prop_assert!(s.complete);
        prop_assert!(!s.items.is_empty());
        for f in &s.items {
            prop_assert!(f.z.is_nonnegative());
            prop_assert_eq!(m.elem(&f.z), m.elem(&x));
        }
        let zs: BTreeSet<_> = s.items.iter().map(|f| f.z.clone()).collect();
        prop_assert_eq!(zs.len(), s.items.len());
    }

    #[test]
    fn progressions_are_recognized(start in 0u64..50, step in 1u64..10, len in 2usize..8) {
        let set: BTreeSet<u64> = (0..len as u64).map(|i| start + i * step).collect();
        prop_assert_eq!(is_arith_progression(&set).unwrap(), (true, Some(step)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn verdicts_survive_json_and_replay(f in min_poly()) {
        let m = ValuationMonoid::from_poly(&f.to_rat(), SearchCaps::default()).unwrap();
        let v = m.classify().unwrap();
        let back: Verdict = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert!(back.replay(m.alpha()).is_ok());
    }
}
