//! Chebyshev polynomials of the second kind, the companion polynomial
//! `H_n(x) = sum_j C(n-j, j) x^j`, and a cross-check of its zeros against
//! the closed form `-sec^2(k pi / (n+1)) / 4`.

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::exact_poly::{integer, ExactPoly, ExactRational};
use crate::real_roots::{isolate_real_roots, RootInterval};

pub const DEFAULT_PRECISION_BITS: usize = 128;
pub const MAX_PRECISION_BITS: usize = 1024;

/// `U_n(y)` by the three-term recurrence `U_(k+1) = 2y U_k - U_(k-1)`.
pub fn u_poly(n: usize) -> ExactPoly {
    let two_y = ExactPoly::from_ints(&[0, 2]);
    let mut prev = ExactPoly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = two_y.clone();
    for _ in 1..n {
        let next = &(&two_y * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `U_n(y) = sum_k (-1)^k C(n-k, k) (2y)^(n-2k)`.
pub fn u_poly_closed(n: usize) -> ExactPoly {
    let mut coeffs = vec![ExactRational::zero(); n + 1];
    for k in 0..=n / 2 {
        let mut c = binomial((n - k) as i64, k as i64) << (n - 2 * k);
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[n - 2 * k] = ExactRational::from_integer(c);
    }
    ExactPoly::new(coeffs)
}

/// `H_n(x) = sum_(j=0)^(n/2) C(n-j, j) x^j`.
pub fn h_poly(n: usize) -> ExactPoly {
    ExactPoly::from_bigints((0..=n / 2).map(|j| binomial((n - j) as i64, j as i64)))
}

/// Checks `y^n U_n(1/(2y)) = sum_k C(n-k, k) (-y^2)^k`. The left side is
/// the coefficient sequence of [`u_poly`] reversed, with entry `j` divided
/// by `2^j`; the right side is expanded directly.
pub fn reciprocal_substitution_check(n: usize) -> bool {
    let u = u_poly(n);
    let lhs = ExactPoly::new(
        (0..=n)
            .map(|i| {
                let j = n - i;
                u.coeff(j) / ExactRational::from_integer(BigInt::one() << j)
            })
            .collect(),
    );
    let mut rhs = vec![ExactRational::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = ExactRational::from_integer(binomial((n - k) as i64, k as i64));
        rhs[2 * k] = if k % 2 == 0 { c } else { -c };
    }
    lhs == ExactPoly::new(rhs)
}

/// A binary float together with a rigorous rational enclosure `[lower, upper]`
/// of the quantity it approximates.
#[derive(Debug, Clone)]
pub struct HighPrecisionValue {
    pub value: BigFloat,
    pub precision_bits: usize,
    pub lower: ExactRational,
    pub upper: ExactRational,
}

impl HighPrecisionValue {
    pub fn to_f64(&self) -> f64 {
        ((&self.lower + &self.upper) / integer(2))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn enclosure_width(&self) -> ExactRational {
        &self.upper - &self.lower
    }
}

/// Ulps of slack allowed per call into the float layer.
const ULPS_PER_CALL: i64 = 2;

fn float_to_rational(f: &BigFloat) -> ExactRational {
    let Some((words, _, sign, exp, _)) = f.as_raw_parts() else {
        return ExactRational::zero();
    };
    let digits: Vec<u32> = words
        .iter()
        .flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32])
        .collect();
    let mant = BigInt::from(BigUint::new(digits));
    let mant = if sign == Sign::Neg { -mant } else { mant };
    let shift = exp as i64 - 64 * words.len() as i64;
    scale_pow2(ExactRational::from_integer(mant), shift)
}

fn scale_pow2(r: ExactRational, shift: i64) -> ExactRational {
    if shift >= 0 {
        r * ExactRational::from_integer(BigInt::one() << shift as usize)
    } else {
        r / ExactRational::from_integer(BigInt::one() << (-shift) as usize)
    }
}

/// One unit in the last place of `f` at precision `p`.
fn ulp(f: &BigFloat, p: usize) -> ExactRational {
    let exp = f.exponent().map_or(0, |e| e as i64);
    scale_pow2(ExactRational::one(), exp - p as i64)
}

/// An exactly representable float at or below (or above) the positive rational `r`.
fn rational_to_float(r: &ExactRational, p: usize, round_up: bool) -> BigFloat {
    debug_assert!(r.is_positive());
    let scaled = scale_pow2(r.clone(), p as i64 + 8);
    let m = if round_up {
        scaled.ceil()
    } else {
        scaled.floor()
    }
    .to_integer();
    let m = m.to_biguint().expect("positive");
    let digits = m.to_u64_digits();
    let words: Vec<Word> = digits.iter().map(|&d| d as Word).collect();
    let e = 64 * words.len() as i64 - (p as i64 + 8);
    BigFloat::from_words(&words, Sign::Pos, e as i32)
}

fn check_index(n: usize, k: usize) -> Result<()> {
    let max = n / 2;
    if n < 2 || k < 1 || k > max {
        return Err(Error::IndexOutOfRange { n, k, max });
    }
    Ok(())
}

/// `-sec^2(k pi / (n+1)) / 4` at the default precision.
pub fn h_root_oracle(n: usize, k: usize) -> Result<HighPrecisionValue> {
    h_root_oracle_with_precision(n, k, DEFAULT_PRECISION_BITS)
}

/// `-sec^2(k pi / (n+1)) / 4` for `n >= 2`, `1 <= k <= n/2`.
///
/// The float layer supplies `pi` and `cos`; each result is widened by two
/// ulps and every other step is exact rational arithmetic, so the returned
/// enclosure contains the true value.
pub fn h_root_oracle_with_precision(
    n: usize,
    k: usize,
    precision_bits: usize,
) -> Result<HighPrecisionValue> {
    check_index(n, k)?;
    if precision_bits < 64 {
        return Err(Error::PrecisionTooLow(precision_bits));
    }
    let p = precision_bits;
    let rm = RoundingMode::ToEven;
    let mut consts = Consts::new().expect("constant cache");
    let slack = |f: &BigFloat| ulp(f, p) * integer(ULPS_PER_CALL);

    let pi = consts.pi(p, rm);
    let pi_q = float_to_rational(&pi);
    let ratio = ExactRational::new(BigInt::from(k), BigInt::from(n + 1));
    let theta_lo = (&pi_q - slack(&pi)) * &ratio;
    let theta_hi = (&pi_q + slack(&pi)) * &ratio;

    // cos is decreasing on (0, pi/2), where every theta lies.
    let arg_lo = rational_to_float(&theta_lo, p, false);
    let arg_hi = rational_to_float(&theta_hi, p, true);
    let cos_at_lo = arg_lo.cos(p, rm, &mut consts);
    let cos_at_hi = arg_hi.cos(p, rm, &mut consts);
    let cos_upper = float_to_rational(&cos_at_lo) + slack(&cos_at_lo);
    let cos_lower = float_to_rational(&cos_at_hi) - slack(&cos_at_hi);
    if !cos_lower.is_positive() {
        return Err(Error::PrecisionExhausted(p));
    }
    let quarter_recip_sq = |c: &ExactRational| -(c * c * integer(4)).recip();
    let lower = quarter_recip_sq(&cos_lower);
    let upper = quarter_recip_sq(&cos_upper);

    let four = BigFloat::from_u8(4, p);
    let value = cos_at_lo
        .mul(&cos_at_lo, p, rm)
        .mul(&four, p, rm)
        .reciprocal(p, rm)
        .neg();
    Ok(HighPrecisionValue {
        value,
        precision_bits: p,
        lower,
        upper,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Placement {
    /// The enclosure lies inside the matching interval.
    Inside,
    /// The enclosure crosses an endpoint of the matching interval.
    Straddles,
    /// The enclosure misses the matching interval entirely.
    Outside,
}

fn placement(iv: &RootInterval, v: &HighPrecisionValue) -> Placement {
    if iv.is_exact() {
        return if v.lower <= iv.lo && iv.lo <= v.upper {
            Placement::Inside
        } else {
            Placement::Outside
        };
    }
    if v.upper < iv.lo || v.lower > iv.hi {
        Placement::Outside
    } else if iv.lo <= v.lower && v.upper <= iv.hi {
        Placement::Inside
    } else {
        Placement::Straddles
    }
}

#[derive(Debug, Clone)]
pub struct OracleAgreement {
    pub n: usize,
    pub precision_bits: usize,
    /// Sorted ascending; root `k` of the closed form matches entry `n/2 - k`.
    pub intervals: Vec<RootInterval>,
    pub oracle: Vec<HighPrecisionValue>,
    pub placements: Vec<Placement>,
    pub agrees: bool,
}

/// Isolates the zeros of `H_n` to width `max_width` and checks that each
/// closed-form value lands in its matching interval. Precision doubles from
/// `start_bits` whenever an enclosure straddles an endpoint, up to
/// [`MAX_PRECISION_BITS`].
pub fn oracle_agreement(
    n: usize,
    max_width: &ExactRational,
    start_bits: usize,
) -> Result<OracleAgreement> {
    if start_bits < 64 {
        return Err(Error::PrecisionTooLow(start_bits));
    }
    let h = h_poly(n);
    let intervals = isolate_real_roots(&h, max_width)?;
    let m = n / 2;
    let mut bits = start_bits;
    loop {
        let oracle: Vec<HighPrecisionValue> = (1..=m)
            .map(|k| h_root_oracle_with_precision(n, k, bits))
            .collect::<Result<_>>()?;
        let placements: Vec<Placement> = if intervals.len() == m {
            oracle
                .iter()
                .enumerate()
                .map(|(idx, v)| placement(&intervals[m - 1 - idx], v))
                .collect()
        } else {
            vec![Placement::Outside; m]
        };
        let straddles = placements.contains(&Placement::Straddles);
        if straddles && bits < MAX_PRECISION_BITS {
            bits = (bits * 2).min(MAX_PRECISION_BITS);
            continue;
        }
        if straddles {
            return Err(Error::PrecisionExhausted(bits));
        }
        let agrees = placements.iter().all(|p| *p == Placement::Inside);
        return Ok(OracleAgreement {
            n,
            precision_bits: bits,
            intervals,
            oracle,
            placements,
            agrees,
        });
    }
}

/// `2^-bits`.
pub fn dyadic_width(bits: u32) -> ExactRational {
    ExactRational::new(BigInt::one(), BigInt::one() << bits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational;
    use crate::real_roots::certify_real_rooted;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(u_poly(0), p(&[1]));
        assert_eq!(u_poly(1), p(&[0, 2]));
        assert_eq!(u_poly(2), p(&[-1, 0, 4]));
        assert_eq!(u_poly(3), p(&[0, -4, 0, 8]));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(u_poly_closed(2), p(&[-1, 0, 4]));
        assert_eq!(u_poly_closed(1), p(&[0, 2]));
        assert_eq!(u_poly_closed(4), p(&[1, 0, -12, 0, 16]));
        assert_eq!(u_poly_closed(0), p(&[1]));
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_poly(2), p(&[1, 1]));
        assert_eq!(h_poly(4), p(&[1, 3, 1]));
        assert_eq!(h_poly(5), p(&[1, 4, 3]));
        assert_eq!(h_poly(0), p(&[1]));
        assert_eq!(h_poly(1), p(&[1]));
    }

    #[test]
    fn reciprocal_examples() {
        assert!(reciprocal_substitution_check(0));
        assert!(reciprocal_substitution_check(2));
        assert!(reciprocal_substitution_check(5));
    }

    #[test]
    fn oracle_exact_values() {
        let v = h_root_oracle(2, 1).unwrap();
        assert!(v.lower <= integer(-1) && integer(-1) <= v.upper);
        assert!(v.enclosure_width() < dyadic_width(100));
        let v = h_root_oracle(3, 1).unwrap();
        assert!(v.lower <= rational(-1, 2) && rational(-1, 2) <= v.upper);
        let v = h_root_oracle(4, 1).unwrap();
        assert!((v.to_f64() - (-0.381_966_011_250_105_1)).abs() < 1e-15);
        assert!(v.upper.is_negative());
    }

    #[test]
    fn oracle_float_value_is_inside_its_enclosure() {
        let v = h_root_oracle(9, 3).unwrap();
        let f = float_to_rational(&v.value);
        // the float is computed from the upper cosine bound; allow its rounding
        let pad = (&v.upper - &v.lower) + dyadic_width(100);
        assert!(f >= &v.lower - &pad && f <= &v.upper + &pad);
    }

    #[test]
    fn oracle_index_errors() {
        assert!(matches!(
            h_root_oracle(1, 1),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            h_root_oracle(6, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            h_root_oracle(6, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert_eq!(
            h_root_oracle_with_precision(6, 1, 32).unwrap_err(),
            Error::PrecisionTooLow(32)
        );
    }

    #[test]
    fn float_rational_round_trip() {
        let r = rational(3, 7);
        let lo = rational_to_float(&r, 128, false);
        let hi = rational_to_float(&r, 128, true);
        assert!(float_to_rational(&lo) <= r && r <= float_to_rational(&hi));
        assert!(float_to_rational(&hi) - float_to_rational(&lo) <= dyadic_width(130));
    }

    #[test]
    fn agreement_small_n() {
        for n in 2..=12 {
            let a = oracle_agreement(n, &dyadic_width(53), DEFAULT_PRECISION_BITS).unwrap();
            assert!(a.agrees, "n = {n}: {:?}", a.placements);
            assert_eq!(a.intervals.len(), n / 2);
        }
    }

    #[test]
    fn h_is_real_rooted_small_n() {
        for n in 2..=16 {
            let c = certify_real_rooted(&h_poly(n));
            assert!(c.is_real_rooted);
            assert_eq!(c.distinct_real_roots, n / 2);
        }
    }
}
