#![allow(dead_code)]

use localh::exact_poly::{integer, rational};
use localh::{ExactPoly, ExactRational};
use proptest::prelude::*;

pub fn int_poly(max_len: usize) -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(any::<i16>(), 0..=max_len)
        .prop_map(|c| ExactPoly::from_ints(&c.into_iter().map(i64::from).collect::<Vec<_>>()))
}

pub fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(a, b)| rational(a, b))
}

/// Product of up to `max_factors` factors `(b x - a)` with rational roots `a/b`,
/// times a nonzero constant. Returns the roots as well.
pub fn rooted_poly(max_factors: usize) -> impl Strategy<Value = (ExactPoly, Vec<ExactRational>)> {
    (
        prop::collection::vec(small_rational(), 0..=max_factors),
        prop_oneof![(-5i64..=-1), (1i64..=5)],
    )
        .prop_map(|(roots, c)| {
            let mut p = ExactPoly::constant(integer(c));
            for r in &roots {
                p = &p * &ExactPoly::new(vec![-r.clone(), integer(1)]);
            }
            (p, roots)
        })
}
