mod common;

use common::int_poly;
use localh::exact_poly::{gcd, squarefree_part};
use localh::{ExactPoly, ExactRational};
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Plain Euclid over Q on ascending coefficient vectors, returning a monic gcd.
fn euclid_gcd(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
    fn trim(mut v: Vec<ExactRational>) -> Vec<ExactRational> {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        v
    }
    fn rem(a: &[ExactRational], b: &[ExactRational]) -> Vec<ExactRational> {
        let mut r = a.to_vec();
        let db = b.len() - 1;
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let q = r.last().unwrap() / b.last().unwrap();
            for (j, c) in b.iter().enumerate() {
                r[shift + j] -= &q * c;
            }
            r.pop();
            r = trim(r);
        }
        r
    }
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    let lc = a.last().unwrap().clone();
    a.iter().map(|c| c / &lc).collect()
}

fn monic(p: &ExactPoly) -> ExactPoly {
    p.scale(&(ExactRational::one() / p.leading_coeff().unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in int_poly(6), b in int_poly(6), c in int_poly(6)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &ExactPoly::one(), a.clone());
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn division_identity(a in int_poly(10), b in int_poly(6)) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_matches_rational_euclid(a in int_poly(5), b in int_poly(5), c in int_poly(4)) {
        let (pa, pb) = (&a * &c, &b * &c);
        prop_assume!(!(pa.is_zero() && pb.is_zero()));
        let g = gcd(&pa, &pb).unwrap();
        let oracle = ExactPoly::new(euclid_gcd(pa.coeffs(), pb.coeffs()));
        prop_assert_eq!(monic(&g), oracle);
        prop_assert!(g.is_integral());
        prop_assert!(pa.exact_div(&g).is_some() && pb.exact_div(&g).is_some());
    }

    #[test]
    fn gcd_invariant_under_swap_and_scale(a in int_poly(7), b in int_poly(7), k in 1i64..1000) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = gcd(&a, &b).unwrap();
        prop_assert_eq!(&gcd(&b, &a).unwrap(), &g);
        let scaled = a.scale(&localh::exact_poly::rational(-k, 7));
        prop_assert_eq!(gcd(&scaled, &b).unwrap().degree(), g.degree());
    }

    #[test]
    fn squarefree_part_divides(a in int_poly(4), b in int_poly(3)) {
        let p = &(&a * &a) * &b;
        prop_assume!(!p.is_zero());
        let s = squarefree_part(&p).unwrap();
        prop_assert!(p.exact_div(&s).is_some());
        if !s.is_constant() {
            prop_assert!(gcd(&s, &s.derivative()).unwrap().is_constant());
        }
    }
}
