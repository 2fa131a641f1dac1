//! Integer-coefficient polynomials: the working representation for
//! pseudo-remainder sequences and fast sign evaluation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::ExactRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    pub fn derivative(&self) -> Self {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, choosing the sign so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Divides out the (positive) content, keeping every sign.
    pub fn positive_primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_scalar_exact(&self.content())
    }

    pub fn div_scalar_exact(&self, d: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        }
    }

    pub fn negate(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed in Z[x].
    pub fn prem(&self, b: &IntPoly) -> IntPoly {
        let n = b.degree().expect("pseudo-division by zero polynomial");
        let Some(m) = self.degree().filter(|&m| m >= n) else {
            return self.clone();
        };
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut uses = m - n + 1;
        let mut top = m;
        loop {
            // r currently has degree <= top
            let lr = r[top].clone();
            for c in r.iter_mut().take(top) {
                *c *= lb;
            }
            if !lr.is_zero() {
                let shift = top - n;
                for (j, bc) in b.coeffs.iter().enumerate().take(n) {
                    r[shift + j] -= &lr * bc;
                }
            }
            r.truncate(top);
            uses -= 1;
            if top == n {
                break;
            }
            top -= 1;
        }
        debug_assert_eq!(uses, 0);
        IntPoly::new(r)
    }

    /// Sign of `p(t)`, evaluated homogeneously so no rational is ever reduced.
    pub fn sign_at(&self, t: &ExactRational) -> Ordering {
        let (a, b) = (t.numer(), t.denom());
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        if b.is_one() {
            let v = self
                .coeffs
                .iter()
                .rev()
                .fold(BigInt::zero(), |acc, c| acc * a + c);
            return v.sign_ordering();
        }
        // b^d p(a/b) = sum c_j a^j b^(d-j); Horner in a with running power of b.
        let mut acc = self.coeffs[d].clone();
        let mut bpow = BigInt::one();
        for j in (0..d).rev() {
            bpow *= b;
            acc = acc * a + &self.coeffs[j] * &bpow;
        }
        acc.sign_ordering()
    }

    /// Sign of `p` as `x -> +inf` (`positive = true`) or `x -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        let Some(d) = self.degree() else {
            return Ordering::Equal;
        };
        let s = self.lc().sign_ordering();
        if positive || d % 2 == 0 {
            s
        } else {
            s.reverse()
        }
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// One subresultant remainder sequence `r_0 = a, r_1 = b, r_(i+1) = prem(r_(i-1), r_i) / beta_i`,
/// ending at the last nonzero entry.
pub(crate) struct Prs {
    pub polys: Vec<IntPoly>,
    /// `betas[i]` divides the pseudo-remainder producing `polys[i + 2]`.
    pub betas: Vec<BigInt>,
}

/// Subresultant PRS with scaling `beta = g * h^delta`, where `g` is the
/// leading coefficient of the current divisor and `h` follows the
/// subresultant recurrence. Every division is exact over Z.
/// Requires `deg a >= deg b` and `b != 0`.
pub(crate) fn subresultant_prs(a: &IntPoly, b: &IntPoly) -> Prs {
    debug_assert!(!b.is_zero() && a.degree() >= b.degree());
    let mut polys = vec![a.clone(), b.clone()];
    let mut betas = Vec::new();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let n = polys.len();
        let (prev, cur) = (&polys[n - 2], &polys[n - 1]);
        let delta = prev.degree().unwrap() - cur.degree().unwrap();
        let r = prev.prem(cur);
        if r.is_zero() {
            break;
        }
        let beta = &g * Pow::pow(&h, delta);
        let next = r.div_scalar_exact(&beta);
        betas.push(beta);
        // Update for the next step, whose divisor is `next` and dividend `cur`.
        g = cur.lc().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => {
                let num = Pow::pow(&g, delta);
                let den = Pow::pow(&h, delta - 1);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                q
            }
        };
        let done = next.degree() == Some(0);
        polys.push(next);
        if done {
            break;
        }
    }
    Prs { polys, betas }
}
