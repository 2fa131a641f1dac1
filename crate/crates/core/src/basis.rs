//! The symmetric basis `x^i (1+x)^(n-2i)`, `0 <= i <= n/2`.
//!
//! A polynomial of degree at most `n` whose coefficients satisfy
//! `a_i = a_(n-i)` has a unique expansion in this basis. [`XiVector`] holds
//! the expansion coefficients together with the ambient `n`.

use num_traits::{One, Zero};

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::exact_poly::{integer, ExactPoly, ExactRational};
use crate::real_roots::{
    certify_real_rooted_with, count_roots_in, divide_out_root, CertifyOptions, ExtendedBound,
    RealRootCertificate,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiVector {
    n: usize,
    xi: Vec<ExactRational>,
}

impl XiVector {
    /// `xi` must have exactly `n/2 + 1` entries.
    pub fn new(n: usize, xi: Vec<ExactRational>) -> Result<Self> {
        let expected = n / 2 + 1;
        if xi.len() != expected {
            return Err(Error::XiLength {
                n,
                expected,
                got: xi.len(),
            });
        }
        Ok(XiVector { n, xi })
    }

    pub fn from_ints(n: usize, xi: &[i64]) -> Result<Self> {
        Self::new(n, xi.iter().map(|&v| integer(v)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        XiVector {
            n,
            xi: vec![ExactRational::zero(); n / 2 + 1],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn xi(&self) -> &[ExactRational] {
        &self.xi
    }

    pub fn is_zero(&self) -> bool {
        self.xi.iter().all(Zero::is_zero)
    }

    /// `xi(x) = sum xi_i x^i`.
    pub fn xi_poly(&self) -> ExactPoly {
        ExactPoly::new(self.xi.clone())
    }
}

/// `sum_i xi_i x^i (1+x)^(n-2i)`.
pub fn xi_to_poly(v: &XiVector) -> ExactPoly {
    let n = v.n;
    let mut coeffs = vec![ExactRational::zero(); n + 1];
    for (i, xi) in v.xi.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        let e = (n - 2 * i) as i64;
        for j in 0..=e {
            coeffs[i + j as usize] += xi * ExactRational::from_integer(binomial(e, j));
        }
    }
    ExactPoly::new(coeffs)
}

/// Inverse of [`xi_to_poly`] by forward substitution on the low coefficients,
/// followed by a full residual check.
pub fn poly_to_xi(p: &ExactPoly, n: usize) -> Result<XiVector> {
    if let Some(d) = p.degree().filter(|&d| d > n) {
        return Err(Error::DegreeTooLarge { degree: d, n });
    }
    let half = n / 2;
    let mut xi: Vec<ExactRational> = Vec::with_capacity(half + 1);
    for i in 0..=half {
        let mut v = p.coeff(i);
        for (j, xj) in xi.iter().enumerate() {
            v -= xj * ExactRational::from_integer(binomial((n - 2 * j) as i64, (i - j) as i64));
        }
        xi.push(v);
    }
    let v = XiVector { n, xi };
    if &xi_to_poly(&v) != p {
        return Err(Error::NotInBasisSpan { n });
    }
    Ok(v)
}

/// Where the zeros of a polynomial sit relative to `-1` and `0`.
/// Interval counts are distinct roots; `at_0` and `at_m1` are multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct LocationCounts {
    pub neg_inf_to_m1: usize,
    pub m1_to_0: usize,
    pub at_0: usize,
    pub at_m1: usize,
}

/// Divides out the roots at `0` and `-1`, then counts the rest of the
/// negative axis on either side of `-1`. `p` must be nonzero.
pub fn location_counts(p: &ExactPoly) -> Result<LocationCounts> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (q, at_0) = divide_out_root(p, &ExactRational::zero());
    let (q, at_m1) = divide_out_root(&q, &integer(-1));
    let (m1, zero) = (ExtendedBound::int(-1), ExtendedBound::int(0));
    Ok(LocationCounts {
        neg_inf_to_m1: count_roots_in(&q, &ExtendedBound::NegInfinity, &m1)?,
        m1_to_0: count_roots_in(&q, &m1, &zero)?,
        at_0,
        at_m1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocationCheck {
    pub observed: LocationCounts,
    /// `deg xi - 1` roots on each side of `-1`, a simple root at `0`, and
    /// `n - 2 deg xi` roots at `-1`.
    pub expected: LocationCounts,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub n: usize,
    /// Certificate for `xi(x) = sum xi_i x^i`.
    pub xi_certificate: RealRootCertificate,
    /// Certificate for the expanded polynomial.
    pub poly_certificate: RealRootCertificate,
    /// Both real-rooted or both not.
    pub agreement: bool,
    /// Present when `xi(x)/x` has only negative simple zeros.
    pub locations: Option<LocationCheck>,
}

fn only_negative_simple_zeros(q: &ExactPoly) -> bool {
    let cert = certify_real_rooted_with(q, &CertifyOptions::counts_only());
    let simple = cert.degree == Some(cert.distinct_real_roots);
    simple
        && cert.is_real_rooted
        && !q.coeff(0).is_zero()
        && count_roots_in(q, &ExtendedBound::int(0), &ExtendedBound::PosInfinity) == Ok(0)
}

/// Certifies both sides of the real-rootedness equivalence between `xi(x)`
/// and its expansion, and checks the predicted zero locations.
pub fn realrootedness_transfer_check(v: &XiVector) -> Result<TransferReport> {
    if !v.xi[0].is_zero() {
        return Err(Error::UnsupportedXiZero);
    }
    if v.is_zero() {
        return Err(Error::ZeroInput);
    }
    let opts = CertifyOptions::counts_only();
    let xi_poly = v.xi_poly();
    let ell = xi_to_poly(v);
    let xi_certificate = certify_real_rooted_with(&xi_poly, &opts);
    let poly_certificate = certify_real_rooted_with(&ell, &opts);
    let agreement = xi_certificate.is_real_rooted == poly_certificate.is_real_rooted;

    let reduced = xi_poly.shift_down(1);
    let locations = if only_negative_simple_zeros(&reduced) {
        let d = xi_poly.degree().expect("nonzero");
        let expected = LocationCounts {
            neg_inf_to_m1: d - 1,
            m1_to_0: d - 1,
            at_0: 1,
            at_m1: v.n - 2 * d,
        };
        let observed = location_counts(&ell)?;
        Some(LocationCheck {
            observed,
            expected,
            holds: observed == expected,
        })
    } else {
        None
    };
    Ok(TransferReport {
        n: v.n,
        xi_certificate,
        poly_certificate,
        agreement,
        locations,
    })
}

/// The unit vector selecting `x^i (1+x)^(n-2i)`.
pub fn basis_element(n: usize, i: usize) -> XiVector {
    let mut v = XiVector::zeros(n);
    v.xi[i] = ExactRational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(
            xi_to_poly(&XiVector::from_ints(4, &[0, 1, 2]).unwrap()),
            p(&[0, 1, 4, 1])
        );
        assert_eq!(
            xi_to_poly(&XiVector::from_ints(3, &[0, 8]).unwrap()),
            p(&[0, 8, 8])
        );
        assert!(xi_to_poly(&XiVector::zeros(7)).is_zero());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            poly_to_xi(&p(&[0, 1, 4, 1]), 4).unwrap(),
            XiVector::from_ints(4, &[0, 1, 2]).unwrap()
        );
        for n in 0..8 {
            let full = ExactPoly::linear_power(integer(1), integer(1), n);
            assert_eq!(poly_to_xi(&full, n).unwrap(), basis_element(n, 0));
        }
        assert_eq!(
            poly_to_xi(&p(&[1, 1, 1]), 2).unwrap(),
            XiVector::from_ints(2, &[1, -1]).unwrap()
        );
    }

    #[test]
    fn inverse_errors() {
        assert_eq!(
            poly_to_xi(&p(&[1, 2, 3]), 2),
            Err(Error::NotInBasisSpan { n: 2 })
        );
        assert_eq!(
            poly_to_xi(&p(&[1, 2, 3, 4]), 2),
            Err(Error::DegreeTooLarge { degree: 3, n: 2 })
        );
        // palindromic about the wrong center
        assert_eq!(
            poly_to_xi(&p(&[1, 2, 1]), 3),
            Err(Error::NotInBasisSpan { n: 3 })
        );
    }

    #[test]
    fn length_is_validated() {
        assert_eq!(
            XiVector::from_ints(4, &[0, 1]),
            Err(Error::XiLength {
                n: 4,
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn transfer_n4() {
        let r =
            realrootedness_transfer_check(&XiVector::from_ints(4, &[0, 1, 2]).unwrap()).unwrap();
        assert!(
            r.agreement && r.xi_certificate.is_real_rooted && r.poly_certificate.is_real_rooted
        );
        let loc = r.locations.unwrap();
        assert!(loc.holds);
        assert_eq!(
            loc.observed,
            LocationCounts {
                neg_inf_to_m1: 1,
                m1_to_0: 1,
                at_0: 1,
                at_m1: 0
            }
        );
    }

    #[test]
    fn transfer_n5_has_root_at_minus_one() {
        let v = XiVector::from_ints(5, &[0, 1, 2]).unwrap();
        let ell = xi_to_poly(&v);
        // x(1+x)((1+x)^2 + 2x)
        let expect = &(&p(&[0, 1]) * &p(&[1, 1])) * &p(&[1, 4, 1]);
        assert_eq!(ell, expect);
        let r = realrootedness_transfer_check(&v).unwrap();
        assert!(r.poly_certificate.is_real_rooted);
        let loc = r.locations.unwrap();
        assert!(loc.holds);
        assert_eq!(loc.observed.at_m1, 1);
    }

    #[test]
    fn transfer_degenerate_n2() {
        let r = realrootedness_transfer_check(&XiVector::from_ints(2, &[0, 1]).unwrap()).unwrap();
        assert!(r.agreement);
        let loc = r.locations.unwrap();
        assert_eq!(
            loc.observed,
            LocationCounts {
                neg_inf_to_m1: 0,
                m1_to_0: 0,
                at_0: 1,
                at_m1: 0
            }
        );
        assert!(loc.holds);
    }

    #[test]
    fn transfer_errors() {
        assert_eq!(
            realrootedness_transfer_check(&XiVector::from_ints(2, &[1, 1]).unwrap()),
            Err(Error::UnsupportedXiZero)
        );
        assert_eq!(
            realrootedness_transfer_check(&XiVector::zeros(6)),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn transfer_of_non_real_rooted_xi() {
        // xi(x) = x(1 + x + x^2) has complex zeros
        let r =
            realrootedness_transfer_check(&XiVector::from_ints(6, &[0, 1, 1, 1]).unwrap()).unwrap();
        assert!(!r.xi_certificate.is_real_rooted);
        assert!(!r.poly_certificate.is_real_rooted);
        assert!(r.agreement);
        assert!(r.locations.is_none());
    }
}
