//! Multiplier sequences `{gamma_k}` acting coefficientwise on polynomials,
//! and a finite-depth Pólya–Schur test.
//!
//! A sequence is a multiplier sequence when `sum gamma_k a_k x^k` is real-rooted
//! (or zero) for every real-rooted `sum a_k x^k`. The classical criterion asks
//! that every `J_n(x) = sum_k C(n,k) gamma_k x^k` have only real zeros of one
//! sign. [`polya_schur_report`] checks that for `n` up to a chosen depth only,
//! so a passing report is a partial certificate.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::chebyshev::h_poly;
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::exact_poly::{ExactPoly, ExactRational};
use crate::real_roots::{
    certify_real_rooted_with, count_roots_in, CertifyOptions, ExtendedBound, RealRootCertificate,
};

pub const DEFAULT_DEPTH: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MultiplierSeq {
    /// `1/k!`
    ReciprocalFactorial,
    /// `1/(n-k)!` for `k <= n`, zero beyond.
    ReciprocalShiftedFactorial(usize),
    /// `1/(k!(n-k)!)` for `k <= n`, zero beyond.
    BinomialReciprocal(usize),
    /// Finite list, zero-extended.
    Explicit(Vec<ExactRational>),
    /// Termwise product.
    Hadamard(Box<MultiplierSeq>, Box<MultiplierSeq>),
}

fn recip_factorial(k: usize) -> ExactRational {
    ExactRational::new(One::one(), factorial(k as u64))
}

impl MultiplierSeq {
    pub fn explicit_ints(values: &[i64]) -> Self {
        MultiplierSeq::Explicit(
            values
                .iter()
                .map(|&v| crate::exact_poly::integer(v))
                .collect(),
        )
    }

    /// The term `gamma_k`.
    pub fn gamma(&self, k: usize) -> ExactRational {
        match self {
            MultiplierSeq::ReciprocalFactorial => recip_factorial(k),
            MultiplierSeq::ReciprocalShiftedFactorial(n) => {
                if k <= *n {
                    recip_factorial(n - k)
                } else {
                    ExactRational::zero()
                }
            }
            MultiplierSeq::BinomialReciprocal(n) => {
                if k <= *n {
                    recip_factorial(k) * recip_factorial(n - k)
                } else {
                    ExactRational::zero()
                }
            }
            MultiplierSeq::Explicit(v) => v.get(k).cloned().unwrap_or_else(ExactRational::zero),
            MultiplierSeq::Hadamard(a, b) => {
                let ga = a.gamma(k);
                if ga.is_zero() {
                    ga
                } else {
                    ga * b.gamma(k)
                }
            }
        }
    }

    /// `1/(i!(n-i+1)!)`, built as a termwise product.
    pub fn type_a(n: usize) -> Self {
        hadamard(
            &MultiplierSeq::ReciprocalFactorial,
            &MultiplierSeq::ReciprocalShiftedFactorial(n + 1),
        )
    }

    /// `1/(i!(n-i)!)`.
    pub fn type_b(n: usize) -> Self {
        MultiplierSeq::BinomialReciprocal(n)
    }
}

impl fmt::Display for MultiplierSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierSeq::ReciprocalFactorial => write!(f, "reciprocal-factorial"),
            MultiplierSeq::ReciprocalShiftedFactorial(n) => {
                write!(f, "reciprocal-shifted-factorial:{n}")
            }
            MultiplierSeq::BinomialReciprocal(n) => write!(f, "binomial-reciprocal:{n}"),
            MultiplierSeq::Explicit(v) => {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "explicit:{}", parts.join(","))
            }
            MultiplierSeq::Hadamard(a, b) => write!(f, "({a})*({b})"),
        }
    }
}

/// Parses `reciprocal-factorial`, `reciprocal-shifted-factorial:N`,
/// `binomial-reciprocal:N` and `explicit:c0,c1,...` (rationals as `p/q`).
impl FromStr for MultiplierSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSequence(s.to_string());
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s.trim(), None),
        };
        let order = |arg: Option<&str>| -> Result<usize> {
            let raw: i64 = arg.ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
            usize::try_from(raw).map_err(|_| Error::NegativeOrder(raw))
        };
        match name.to_ascii_lowercase().as_str() {
            "reciprocal-factorial" if arg.is_none() => Ok(MultiplierSeq::ReciprocalFactorial),
            "reciprocal-shifted-factorial" => {
                Ok(MultiplierSeq::ReciprocalShiftedFactorial(order(arg)?))
            }
            "binomial-reciprocal" => Ok(MultiplierSeq::BinomialReciprocal(order(arg)?)),
            "explicit" => {
                let body = arg.ok_or_else(unknown)?;
                if body.is_empty() {
                    return Ok(MultiplierSeq::Explicit(Vec::new()));
                }
                body.split(',')
                    .map(|t| t.trim().parse::<ExactRational>().map_err(|_| unknown()))
                    .collect::<Result<Vec<_>>>()
                    .map(MultiplierSeq::Explicit)
            }
            _ => Err(unknown()),
        }
    }
}

/// `sum gamma_k a_k x^k`.
pub fn apply_sequence(s: &MultiplierSeq, p: &ExactPoly) -> ExactPoly {
    ExactPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                if a.is_zero() {
                    a.clone()
                } else {
                    s.gamma(k) * a
                }
            })
            .collect(),
    )
}

pub fn hadamard(s1: &MultiplierSeq, s2: &MultiplierSeq) -> MultiplierSeq {
    MultiplierSeq::Hadamard(Box::new(s1.clone()), Box::new(s2.clone()))
}

/// `J_n(x) = sum_{k<=n} C(n,k) gamma_k x^k`.
pub fn jensen_poly(s: &MultiplierSeq, n: usize) -> ExactPoly {
    ExactPoly::new(
        (0..=n)
            .map(|k| ExactRational::from_integer(binomial(n as i64, k as i64)) * s.gamma(k))
            .collect(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthVerdict {
    pub n: usize,
    pub identically_zero: bool,
    pub real_rooted: bool,
    /// No two nonzero roots of opposite sign. Roots at 0 are ignored.
    pub same_sign: bool,
    pub passed: bool,
    /// `None` when `J_n` is identically zero.
    pub certificate: Option<RealRootCertificate>,
}

/// Outcome of the finite-depth test. `passed` covers `1..=max_n` only and
/// says nothing about larger `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyaSchurReport {
    pub max_n: usize,
    pub verdicts: Vec<DepthVerdict>,
    pub passed: bool,
}

impl PolyaSchurReport {
    /// Always true: the test stops at `max_n`.
    pub fn is_partial(&self) -> bool {
        true
    }

    /// Smallest failing `n`, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.verdicts.iter().find(|v| !v.passed).map(|v| v.n)
    }
}

fn verdict(s: &MultiplierSeq, n: usize) -> DepthVerdict {
    let j = jensen_poly(s, n);
    if j.is_zero() {
        return DepthVerdict {
            n,
            identically_zero: true,
            real_rooted: true,
            same_sign: true,
            passed: true,
            certificate: None,
        };
    }
    let cert = certify_real_rooted_with(&j, &CertifyOptions::counts_only());
    let reduced = j.shift_down(j.low_order_zeros());
    let zero = ExtendedBound::int(0);
    let neg =
        count_roots_in(&reduced, &ExtendedBound::NegInfinity, &zero).expect("0 is not a root");
    let pos =
        count_roots_in(&reduced, &zero, &ExtendedBound::PosInfinity).expect("0 is not a root");
    let same_sign = neg == 0 || pos == 0;
    DepthVerdict {
        n,
        identically_zero: false,
        real_rooted: cert.is_real_rooted,
        same_sign,
        passed: cert.is_real_rooted && same_sign,
        certificate: Some(cert),
    }
}

/// Checks `J_1, ..., J_max_n` in parallel; verdicts are returned in order of `n`.
pub fn polya_schur_report(s: &MultiplierSeq, max_n: usize) -> Result<PolyaSchurReport> {
    if max_n < 1 {
        return Err(Error::InvalidDepth);
    }
    let verdicts: Vec<DepthVerdict> = (1..=max_n).into_par_iter().map(|n| verdict(s, n)).collect();
    let passed = verdicts.iter().all(|v| v.passed);
    Ok(PolyaSchurReport {
        max_n,
        verdicts,
        passed,
    })
}

/// `n! * apply(type_a(n), x H_(n-2)(x))`. Requires `n >= 2`.
pub fn type_a_pipeline(n: usize) -> ExactPoly {
    pipeline(&MultiplierSeq::type_a(n), n)
}

/// `n! * apply(type_b(n), x H_(n-2)(x))`. Requires `n >= 2`.
pub fn type_b_pipeline(n: usize) -> ExactPoly {
    pipeline(&MultiplierSeq::type_b(n), n)
}

fn pipeline(s: &MultiplierSeq, n: usize) -> ExactPoly {
    assert!(n >= 2, "pipeline needs n >= 2");
    let base = h_poly(n - 2).shift_up(1);
    apply_sequence(s, &base).scale(&ExactRational::from_integer(factorial(n as u64)))
}
