//! Polynomial gcd by the subresultant PRS over Z, and squarefree parts.

use super::int_poly::{subresultant_prs, IntPoly};
use super::ExactPoly;
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to the primitive integer polynomial
/// with positive leading coefficient. Constant gcds come back as `1`.
///
/// Both inputs are scaled to integer polynomials before running the
/// subresultant remainder sequence.
pub fn gcd(p: &ExactPoly, q: &ExactPoly) -> Result<ExactPoly> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (false, true) => Ok(ExactPoly::from(&p.to_int_poly().primitive_part())),
        (true, false) => Ok(ExactPoly::from(&q.to_int_poly().primitive_part())),
        (false, false) => Ok(ExactPoly::from(&int_gcd(
            &p.to_int_poly(),
            &q.to_int_poly(),
        ))),
    }
}

/// Primitive gcd of two nonzero integer polynomials.
pub(crate) fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (a, b) = if a.degree() >= b.degree() {
        (a, b)
    } else {
        (b, a)
    };
    let (a, b) = (a.primitive_part(), b.primitive_part());
    if b.degree() == Some(0) {
        return IntPoly::new(vec![1.into()]);
    }
    let prs = subresultant_prs(&a, &b);
    let last = prs.polys.last().unwrap();
    if last.degree() == Some(0) {
        IntPoly::new(vec![1.into()])
    } else {
        last.primitive_part()
    }
}

/// `p / gcd(p, p')`: same distinct roots as `p`, each simple.
pub fn squarefree_part(p: &ExactPoly) -> Result<ExactPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(p.clone());
    }
    let g = gcd(p, &p.derivative())?;
    Ok(p.exact_div(&g).expect("gcd divides its argument"))
}
