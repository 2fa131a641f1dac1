mod common;

use std::collections::BTreeSet;

use common::{int_poly, rooted_poly, small_rational};
use localh::exact_poly::integer;
use localh::real_roots::{
    certify_real_rooted, count_roots_in, isolate_real_roots, root_multiplicity, ExtendedBound,
};
use localh::{ExactPoly, ExactRational};
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn products_of_linear_factors_are_real_rooted((p, roots) in rooted_poly(8)) {
        let cert = certify_real_rooted(&p);
        prop_assert!(cert.is_real_rooted);
        let distinct: BTreeSet<_> = roots.iter().cloned().collect();
        prop_assert_eq!(cert.distinct_real_roots, distinct.len());
        prop_assert_eq!(cert.total_with_multiplicity, roots.len());
        let ivs = cert.isolating_intervals.unwrap();
        for (iv, r) in ivs.iter().zip(distinct.iter()) {
            prop_assert!(iv.interval.contains(r));
            prop_assert_eq!(iv.multiplicity, root_multiplicity(&p, r));
        }
    }

    #[test]
    fn negative_discriminant_factor_breaks_real_rootedness(
        (p, _) in rooted_poly(6), a in 1i64..50, b in -20i64..20
    ) {
        // x^2 + b x + c with b^2 < 4c
        let c = b * b / 4 + a;
        let q = &p * &ExactPoly::from_ints(&[c, b, 1]);
        prop_assert!(!certify_real_rooted(&q).is_real_rooted);
    }

    #[test]
    fn counts_are_additive(p in int_poly(9), cut in small_rational()) {
        prop_assume!(!p.is_zero() && !p.eval(&cut).is_zero());
        let neg = ExtendedBound::NegInfinity;
        let pos = ExtendedBound::PosInfinity;
        let mid = ExtendedBound::Finite(cut);
        let whole = count_roots_in(&p, &neg, &pos).unwrap();
        prop_assert_eq!(whole, certify_real_rooted(&p).distinct_real_roots);
        prop_assert_eq!(
            count_roots_in(&p, &neg, &mid).unwrap() + count_roots_in(&p, &mid, &pos).unwrap(),
            whole
        );
    }

    #[test]
    fn isolating_intervals_bracket_sign_changes(p in int_poly(9), bits in 1u32..20) {
        prop_assume!(!p.is_zero());
        let width = ExactRational::new(1.into(), num_bigint::BigInt::from(1u64 << bits));
        let ivs = isolate_real_roots(&p, &width).unwrap();
        let sq = localh::exact_poly::squarefree_part(&p).unwrap();
        prop_assert_eq!(ivs.len(), certify_real_rooted(&p).distinct_real_roots);
        for w in ivs.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
        for iv in &ivs {
            prop_assert!(iv.width() <= width);
            if iv.is_exact() {
                prop_assert_eq!(sq.eval(&iv.lo), integer(0));
            } else {
                let (a, b) = (sq.eval(&iv.lo), sq.eval(&iv.hi));
                prop_assert!(&a * &b < integer(0));
            }
        }
    }
}
