//! Sturm chains, exact real-root counting, root isolation and
//! real-rootedness certificates.
//!
//! Every count here is exact: chains are built from a subresultant
//! remainder sequence over Z with signs corrected so that each entry is a
//! positive multiple of the classical negated remainder, and signs are
//! evaluated at rational points without rounding.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_poly::int_poly::subresultant_prs;
use crate::exact_poly::{integer, ExactPoly, ExactRational, IntPoly};

/// An interval endpoint on the extended real line.
/// Variant order gives `NegInfinity < Finite(_) < PosInfinity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedBound {
    NegInfinity,
    Finite(ExactRational),
    PosInfinity,
}

impl ExtendedBound {
    pub fn finite(value: ExactRational) -> Self {
        ExtendedBound::Finite(value)
    }

    pub fn int(value: i64) -> Self {
        ExtendedBound::Finite(integer(value))
    }
}

impl From<ExactRational> for ExtendedBound {
    fn from(value: ExactRational) -> Self {
        ExtendedBound::Finite(value)
    }
}

impl fmt::Display for ExtendedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedBound::NegInfinity => f.write_str("-inf"),
            ExtendedBound::Finite(t) => write!(f, "{t}"),
            ExtendedBound::PosInfinity => f.write_str("+inf"),
        }
    }
}

/// Signed remainder chain of a squarefree polynomial, starting `p, p'`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

/// Runs the subresultant PRS on `(p, p')` and fixes signs so entry `i+1`
/// is a positive multiple of `-(entry_(i-1) mod entry_i)`. Entries are
/// reduced by their positive content, which leaves every sign unchanged.
fn signed_prs(p: &IntPoly) -> Vec<IntPoly> {
    let dp = p.derivative();
    if dp.is_zero() {
        return vec![p.positive_primitive_part()];
    }
    let prs = subresultant_prs(p, &dp);
    let mut signs: Vec<bool> = vec![true, true];
    for i in 1..prs.polys.len() - 1 {
        let prev = &prs.polys[i - 1];
        let cur = &prs.polys[i];
        let delta = prev.degree().unwrap() - cur.degree().unwrap();
        let beta = &prs.betas[i - 1];
        // r_(i+1) = lc(r_i)^(delta+1) (r_(i-1) mod r_i) / beta
        let lc_neg_odd = cur.lc().is_negative() && (delta + 1) % 2 == 1;
        let flip = beta.is_negative() ^ lc_neg_odd;
        // entry_(i+1) = -sign_(i-1) * sign(beta) * sign(lc)^(delta+1) * r_(i+1)
        signs.push(!(signs[i - 1] ^ flip));
    }
    prs.polys
        .iter()
        .zip(&signs)
        .map(|(q, &pos)| {
            let q = q.positive_primitive_part();
            if pos {
                q
            } else {
                q.negate()
            }
        })
        .collect()
}

impl SturmChain {
    /// Builds the chain of a squarefree polynomial.
    pub fn new(p: &ExactPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let polys = signed_prs(&p.to_int_poly().positive_primitive_part());
        if polys.last().unwrap().degree() != Some(0) {
            return Err(Error::NotSquarefree);
        }
        Ok(SturmChain { polys })
    }

    fn from_int(p: &IntPoly) -> Self {
        let polys = signed_prs(p);
        debug_assert_eq!(polys.last().unwrap().degree(), Some(0));
        SturmChain { polys }
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> Vec<ExactPoly> {
        self.polys.iter().map(ExactPoly::from).collect()
    }

    pub(crate) fn head(&self) -> &IntPoly {
        &self.polys[0]
    }

    /// Sign of the first chain entry (the polynomial itself) at `t`.
    pub fn sign_of_head(&self, t: &ExactRational) -> Ordering {
        self.polys[0].sign_at(t)
    }

    /// Number of sign changes along the chain at `at`, zeros skipped.
    pub fn variations_at(&self, at: &ExtendedBound) -> usize {
        let signs = self.polys.iter().map(|q| match at {
            ExtendedBound::NegInfinity => q.sign_at_infinity(false),
            ExtendedBound::PosInfinity => q.sign_at_infinity(true),
            ExtendedBound::Finite(t) => q.sign_at(t),
        });
        let mut last = Ordering::Equal;
        let mut changes = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                changes += 1;
            }
            last = s;
        }
        changes
    }

    /// Distinct roots strictly between `lo` and `hi`. Checks that finite
    /// endpoints are not roots and that the interval is nonempty.
    pub fn count_between(&self, lo: &ExtendedBound, hi: &ExtendedBound) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        for b in [lo, hi] {
            if let ExtendedBound::Finite(t) = b {
                if self.sign_of_head(t) == Ordering::Equal {
                    return Err(Error::EndpointIsRoot(t.clone()));
                }
            }
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }

    /// Distinct roots on the whole real line.
    pub fn count_all(&self) -> usize {
        self.variations_at(&ExtendedBound::NegInfinity)
            - self.variations_at(&ExtendedBound::PosInfinity)
    }
}

/// Chain for `p`, which must be squarefree.
pub fn sturm_chain(p: &ExactPoly) -> Result<SturmChain> {
    SturmChain::new(p)
}

/// Distinct real roots of `p` strictly inside `(lo, hi)`.
pub fn count_roots_in(p: &ExactPoly, lo: &ExtendedBound, hi: &ExtendedBound) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let tower = Tower::new(&p.to_int_poly());
    tower.chains[0].count_between(lo, hi)
}

/// A rational interval around one real root. `lo == hi` marks an exact
/// rational root; otherwise the root lies strictly inside and neither
/// endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: ExactRational,
    pub hi: ExactRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> ExactRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> ExactRational {
        (&self.lo + &self.hi) / integer(2)
    }

    /// Closed containment test.
    pub fn contains(&self, t: &ExactRational) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub interval: RootInterval,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootCertificate {
    /// `None` for the zero polynomial.
    pub degree: Option<usize>,
    pub distinct_real_roots: usize,
    pub total_with_multiplicity: usize,
    pub is_real_rooted: bool,
    /// Sign variations of the squarefree part's chain at -inf and +inf.
    pub variations: (usize, usize),
    /// Sorted left to right; `None` when isolation was not requested.
    pub isolating_intervals: Option<Vec<IsolatingInterval>>,
}

#[derive(Clone, Debug, Default)]
pub struct CertifyOptions {
    pub isolate: bool,
    pub max_width: Option<ExactRational>,
}

impl CertifyOptions {
    pub fn counts_only() -> Self {
        CertifyOptions {
            isolate: false,
            max_width: None,
        }
    }

    pub fn isolating(max_width: Option<ExactRational>) -> Self {
        CertifyOptions {
            isolate: true,
            max_width,
        }
    }
}

/// Squarefree parts of the gcd-derivative tower `p, gcd(p, p'), ...`.
/// Entry `j` vanishes exactly at the roots of multiplicity greater than `j`.
struct Tower {
    chains: Vec<SturmChain>,
}

impl Tower {
    fn new(p: &IntPoly) -> Self {
        let mut chains = Vec::new();
        let mut cur = p.positive_primitive_part();
        while cur.degree().is_some_and(|d| d > 0) {
            let attempt = signed_prs(&cur);
            let last = attempt.last().unwrap();
            if last.degree() == Some(0) {
                chains.push(SturmChain { polys: attempt });
                break;
            }
            let g = last.primitive_part();
            let sf = exact_int_div(&cur, &g);
            chains.push(SturmChain::from_int(&sf));
            cur = g;
        }
        if chains.is_empty() {
            // nonzero constant: a chain with no roots
            chains.push(SturmChain { polys: vec![cur] });
        }
        Tower { chains }
    }

    fn multiplicity_in(&self, iv: &RootInterval) -> usize {
        if iv.is_exact() {
            return self
                .chains
                .iter()
                .take_while(|c| c.sign_of_head(&iv.lo) == Ordering::Equal)
                .count();
        }
        let lo = ExtendedBound::Finite(iv.lo.clone());
        let hi = ExtendedBound::Finite(iv.hi.clone());
        self.chains
            .iter()
            .take_while(|c| c.variations_at(&lo) > c.variations_at(&hi))
            .count()
    }
}

fn exact_int_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    ExactPoly::from(a)
        .exact_div(&ExactPoly::from(b))
        .expect("gcd divides")
        .to_int_poly()
        .positive_primitive_part()
}

fn cauchy_bound(p: &IntPoly) -> ExactRational {
    let lc = ExactRational::from_integer(p.lc().abs());
    let max = p
        .coeffs()
        .iter()
        .map(|c| ExactRational::from_integer(c.abs()))
        .max()
        .unwrap_or_else(ExactRational::zero);
    ExactRational::one() + max / lc
}

struct Isolator<'a> {
    chain: &'a SturmChain,
    max_width: Option<&'a ExactRational>,
    out: Vec<RootInterval>,
}

impl Isolator<'_> {
    fn var(&self, t: &ExactRational) -> usize {
        self.chain.variations_at(&ExtendedBound::Finite(t.clone()))
    }

    fn wide(&self, a: &ExactRational, b: &ExactRational) -> bool {
        self.max_width.is_some_and(|w| &(b - a) > w)
    }

    /// Split point near the midpoint that is not a root.
    fn split_point(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        let mid = (a + b) / integer(2);
        if self.chain.sign_of_head(&mid) != Ordering::Equal {
            return mid;
        }
        let mut step = (b - a) / integer(4);
        loop {
            let t = &mid + &step;
            if self.chain.sign_of_head(&t) != Ordering::Equal {
                return t;
            }
            step /= integer(2);
        }
    }

    /// `(a, b)` with non-root endpoints; `va`, `vb` are the chain variations there.
    fn run(&mut self, a: ExactRational, b: ExactRational, va: usize, vb: usize) {
        match va - vb {
            0 => {}
            1 => self.refine(a, b),
            _ => {
                let m = self.split_point(&a, &b);
                let vm = self.var(&m);
                self.run(a, m.clone(), va, vm);
                self.run(m, b, vm, vb);
            }
        }
    }

    /// Bisects on sign changes of the squarefree head until narrow enough.
    fn refine(&mut self, mut a: ExactRational, mut b: ExactRational) {
        let sa = self.chain.sign_of_head(&a);
        while self.wide(&a, &b) {
            let m = (&a + &b) / integer(2);
            let sm = self.chain.sign_of_head(&m);
            if sm == Ordering::Equal {
                self.out.push(RootInterval {
                    lo: m.clone(),
                    hi: m,
                });
                return;
            }
            if sm == sa {
                a = m;
            } else {
                b = m;
            }
        }
        self.out.push(RootInterval { lo: a, hi: b });
    }
}

fn isolate_chain(chain: &SturmChain, max_width: Option<&ExactRational>) -> Vec<RootInterval> {
    let head = chain.head();
    if head.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let bound = cauchy_bound(head);
    let lo = -bound.clone();
    let (va, vb) = (
        chain.variations_at(&ExtendedBound::Finite(lo.clone())),
        chain.variations_at(&ExtendedBound::Finite(bound.clone())),
    );
    let mut iso = Isolator {
        chain,
        max_width,
        out: Vec::new(),
    };
    iso.run(lo, bound, va, vb);
    iso.out
}

/// One interval per distinct real root, each no wider than `max_width`,
/// found by Sturm bisection from the Cauchy bound.
pub fn isolate_real_roots(p: &ExactPoly, max_width: &ExactRational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !max_width.is_positive() {
        return Err(Error::NonPositiveWidth);
    }
    let tower = Tower::new(&p.to_int_poly());
    Ok(isolate_chain(&tower.chains[0], Some(max_width)))
}

pub fn certify_real_rooted(p: &ExactPoly) -> RealRootCertificate {
    certify_real_rooted_with(p, &CertifyOptions::isolating(None))
}

pub fn certify_real_rooted_with(p: &ExactPoly, opts: &CertifyOptions) -> RealRootCertificate {
    let Some(degree) = p.degree() else {
        return RealRootCertificate {
            degree: None,
            distinct_real_roots: 0,
            total_with_multiplicity: 0,
            is_real_rooted: true,
            variations: (0, 0),
            isolating_intervals: opts.isolate.then(Vec::new),
        };
    };
    let tower = Tower::new(&p.to_int_poly());
    let base = &tower.chains[0];
    let variations = (
        base.variations_at(&ExtendedBound::NegInfinity),
        base.variations_at(&ExtendedBound::PosInfinity),
    );
    let distinct = variations.0 - variations.1;
    let total: usize = tower.chains.iter().map(SturmChain::count_all).sum();
    let isolating_intervals = opts.isolate.then(|| {
        isolate_chain(base, opts.max_width.as_ref())
            .into_iter()
            .map(|interval| IsolatingInterval {
                multiplicity: tower.multiplicity_in(&interval),
                interval,
            })
            .collect()
    });
    RealRootCertificate {
        degree: Some(degree),
        distinct_real_roots: distinct,
        total_with_multiplicity: total,
        is_real_rooted: total == degree,
        variations,
        isolating_intervals,
    }
}

/// Root multiplicity of `t` in `p` (zero if `p(t) != 0`; `p` nonzero).
pub fn root_multiplicity(p: &ExactPoly, t: &ExactRational) -> usize {
    let lin = ExactPoly::new(vec![-t.clone(), ExactRational::one()]);
    let mut q = p.clone();
    let mut k = 0;
    while !q.is_zero() && q.eval(t).is_zero() {
        q = q.exact_div(&lin).expect("factor theorem");
        k += 1;
    }
    k
}

/// Divides out `(x - t)^k` where `k` is the multiplicity of `t`.
pub fn divide_out_root(p: &ExactPoly, t: &ExactRational) -> (ExactPoly, usize) {
    let k = root_multiplicity(p, t);
    let lin = ExactPoly::new(vec![-t.clone(), ExactRational::one()]);
    let mut q = p.clone();
    for _ in 0..k {
        q = q.exact_div(&lin).unwrap();
    }
    (q, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rational;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    const NEG: ExtendedBound = ExtendedBound::NegInfinity;
    const POS: ExtendedBound = ExtendedBound::PosInfinity;

    #[test]
    fn chain_examples() {
        let c = sturm_chain(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(c.polys(), vec![p(&[-1, 0, 1]), p(&[0, 1]), p(&[1])]);
        assert_eq!(c.count_all(), 2);

        let c = sturm_chain(&p(&[1, 0, 1])).unwrap();
        assert_eq!(c.polys(), vec![p(&[1, 0, 1]), p(&[0, 1]), p(&[-1])]);
        assert_eq!(c.count_all(), 0);

        let c = sturm_chain(&p(&[0, 1])).unwrap();
        assert_eq!(c.polys(), vec![p(&[0, 1]), p(&[1])]);
        assert_eq!(c.count_all(), 1);
    }

    #[test]
    fn chain_errors() {
        assert_eq!(
            sturm_chain(&ExactPoly::zero()).unwrap_err(),
            Error::ZeroPolynomial
        );
        assert_eq!(
            sturm_chain(&p(&[1, 2, 1])).unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn chain_entries_are_negated_remainders() {
        // x^3 - 3x + 1: compare against the classical rational remainder chain.
        let f = p(&[1, -3, 0, 1]);
        let c = sturm_chain(&f).unwrap().polys();
        let mut classic = vec![f.clone(), f.derivative()];
        while !classic.last().unwrap().is_constant() {
            let n = classic.len();
            let (_, r) = classic[n - 2].div_rem(&classic[n - 1]);
            classic.push(-r);
        }
        assert_eq!(c.len(), classic.len());
        for (a, b) in c.iter().zip(&classic) {
            let ratio = a.leading_coeff().unwrap() / b.leading_coeff().unwrap();
            assert!(ratio.is_positive());
            assert_eq!(&b.scale(&ratio), a);
        }
    }

    #[test]
    fn counts_in_intervals() {
        let h4 = p(&[1, 3, 1]);
        assert_eq!(
            count_roots_in(&h4, &NEG, &ExtendedBound::int(0)).unwrap(),
            2
        );
        assert_eq!(
            count_roots_in(&h4, &ExtendedBound::int(0), &POS).unwrap(),
            0
        );
        assert_eq!(count_roots_in(&p(&[1, 0, 1]), &NEG, &POS).unwrap(), 0);
        assert_eq!(
            count_roots_in(&h4, &ExtendedBound::int(-1), &ExtendedBound::int(0)).unwrap(),
            1
        );
    }

    #[test]
    fn count_errors() {
        let f = p(&[0, 1, 1]);
        assert_eq!(
            count_roots_in(&f, &ExtendedBound::int(-1), &POS),
            Err(Error::EndpointIsRoot(integer(-1)))
        );
        assert_eq!(count_roots_in(&f, &POS, &NEG), Err(Error::EmptyInterval));
        assert_eq!(
            count_roots_in(&ExactPoly::zero(), &NEG, &POS),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn count_uses_squarefree_part() {
        // (x+1)^2 (x-2): two distinct roots
        let f = &ExactPoly::linear_power(integer(1), integer(1), 2) * &p(&[-2, 1]);
        assert_eq!(count_roots_in(&f, &NEG, &POS).unwrap(), 2);
    }

    #[test]
    fn certificate_examples() {
        let c = certify_real_rooted(&p(&[0, 1, 4, 1]));
        assert!(c.is_real_rooted);
        assert_eq!(
            (c.degree, c.distinct_real_roots, c.total_with_multiplicity),
            (Some(3), 3, 3)
        );
        let ivs = c.isolating_intervals.unwrap();
        assert_eq!(ivs.len(), 3);
        assert!(ivs.iter().all(|iv| iv.multiplicity == 1));
        // -2-sqrt3, -2+sqrt3, 0 in ascending order
        assert!(ivs[0].interval.hi < integer(-1));
        assert!(ivs[1].interval.lo > integer(-1) && ivs[1].interval.hi < integer(0));
        assert!(ivs[2].interval.contains(&integer(0)));

        let c = certify_real_rooted(&p(&[1, 1, 1]));
        assert!(!c.is_real_rooted);
        assert_eq!(c.distinct_real_roots, 0);

        let c = certify_real_rooted(&ExactPoly::linear_power(integer(1), integer(1), 4));
        assert!(c.is_real_rooted);
        assert_eq!((c.distinct_real_roots, c.total_with_multiplicity), (1, 4));
        let ivs = c.isolating_intervals.unwrap();
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].multiplicity, 4);
        assert!(ivs[0].interval.contains(&integer(-1)));
    }

    fn mid_f64(iv: &RootInterval) -> f64 {
        use num_traits::ToPrimitive;
        iv.midpoint().to_f64().unwrap()
    }

    #[test]
    fn zero_and_constant_certificates() {
        let z = certify_real_rooted(&ExactPoly::zero());
        assert!(z.is_real_rooted);
        assert_eq!(z.degree, None);
        let c = certify_real_rooted(&p(&[7]));
        assert!(c.is_real_rooted);
        assert_eq!((c.degree, c.total_with_multiplicity), (Some(0), 0));
        assert_eq!(c.isolating_intervals, Some(vec![]));
    }

    #[test]
    fn isolation_examples() {
        let ivs = isolate_real_roots(&p(&[1, 1]), &rational(1, 8)).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&integer(-1)));
        assert!(ivs[0].width() <= rational(1, 8));

        let w = rational(1, 64);
        let ivs = isolate_real_roots(&p(&[1, 3, 1]), &w).unwrap();
        assert_eq!(ivs.len(), 2);
        let mids: Vec<f64> = ivs.iter().map(mid_f64).collect();
        assert!((mids[0] + 2.618034).abs() < 1.0 / 64.0);
        assert!((mids[1] + 0.381966).abs() < 1.0 / 64.0);
        assert!(ivs.iter().all(|iv| iv.width() <= w));

        assert!(isolate_real_roots(&p(&[1, 0, 1]), &w).unwrap().is_empty());
        assert_eq!(
            isolate_real_roots(&p(&[1, 1]), &integer(0)),
            Err(Error::NonPositiveWidth)
        );
        assert_eq!(
            isolate_real_roots(&ExactPoly::zero(), &w),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn isolation_handles_rational_roots_at_split_points() {
        // roots 0, 1/2, 1, -1: midpoints of the symmetric Cauchy interval are roots
        let f = &(&p(&[0, 1]) * &p(&[-1, 2])) * &p(&[-1, 0, 1]);
        let ivs = isolate_real_roots(&f, &rational(1, 1000)).unwrap();
        assert_eq!(ivs.len(), 4);
        for (iv, r) in ivs
            .iter()
            .zip([integer(-1), integer(0), rational(1, 2), integer(1)])
        {
            assert!(iv.contains(&r), "{iv:?} misses {r}");
        }
    }

    #[test]
    fn multiplicity_helpers() {
        let f = &ExactPoly::linear_power(integer(1), integer(1), 3) * &p(&[0, 0, 1]);
        assert_eq!(root_multiplicity(&f, &integer(-1)), 3);
        assert_eq!(root_multiplicity(&f, &integer(0)), 2);
        assert_eq!(root_multiplicity(&f, &integer(5)), 0);
        let (q, k) = divide_out_root(&f, &integer(0));
        assert_eq!(k, 2);
        assert_eq!(q, ExactPoly::linear_power(integer(1), integer(1), 3));
    }

    #[test]
    fn extended_bound_order() {
        assert!(NEG < ExtendedBound::int(-1000));
        assert!(ExtendedBound::int(1000) < POS);
        assert!(ExtendedBound::finite(rational(1, 3)) < ExtendedBound::finite(rational(1, 2)));
    }
}
