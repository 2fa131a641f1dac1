//! xi-vectors and local h-polynomials of cluster subdivisions for every
//! irreducible root system, and the Narayana identities used for type D.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::basis::{xi_to_poly, XiVector};
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::exact_poly::{integer, rational, ExactPoly, ExactRational};

/// An irreducible Cartan–Killing type with its rank (or dihedral parameter).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootSystem {
    A(usize),
    B(usize),
    D(usize),
    /// Dihedral type `I_2(m)`; `I_2(6)` is `G_2`.
    I2(usize),
    H3,
    H4,
    F4,
    E6,
    E7,
    E8,
}

impl RootSystem {
    /// Checks the parameter bounds: `A` needs `n >= 1`, `B` and `D` need
    /// `n >= 2`, `I2` needs `m >= 3`.
    pub fn validate(self) -> Result<Self> {
        let bad = match self {
            RootSystem::A(n) if n < 1 => Some(format!("type A requires rank >= 1, got {n}")),
            RootSystem::B(n) if n < 2 => Some(format!("type B requires rank >= 2, got {n}")),
            RootSystem::D(n) if n < 2 => Some(format!("type D requires rank >= 2, got {n}")),
            RootSystem::I2(m) if m < 3 => Some(format!("type I2 requires m >= 3, got {m}")),
            _ => None,
        };
        match bad {
            Some(msg) => Err(Error::InvalidRank(msg)),
            None => Ok(self),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            RootSystem::A(n) | RootSystem::B(n) | RootSystem::D(n) => n,
            RootSystem::I2(_) => 2,
            RootSystem::H3 => 3,
            RootSystem::H4 | RootSystem::F4 => 4,
            RootSystem::E6 => 6,
            RootSystem::E7 => 7,
            RootSystem::E8 => 8,
        }
    }

    /// Type letter without the rank, e.g. `"A"` or `"I2"`.
    pub fn family(self) -> &'static str {
        match self {
            RootSystem::A(_) => "A",
            RootSystem::B(_) => "B",
            RootSystem::D(_) => "D",
            RootSystem::I2(_) => "I2",
            RootSystem::H3 => "H3",
            RootSystem::H4 => "H4",
            RootSystem::F4 => "F4",
            RootSystem::E6 => "E6",
            RootSystem::E7 => "E7",
            RootSystem::E8 => "E8",
        }
    }

    /// The dihedral parameter `m` for `I2(m)`.
    pub fn param(self) -> Option<usize> {
        match self {
            RootSystem::I2(m) => Some(m),
            _ => None,
        }
    }

    pub fn exceptional() -> [RootSystem; 6] {
        use RootSystem::*;
        [H3, H4, F4, E6, E7, E8]
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystem::A(n) | RootSystem::B(n) | RootSystem::D(n) => {
                write!(f, "{}{n}", self.family())
            }
            RootSystem::I2(m) => write!(f, "I2({m})"),
            other => f.write_str(other.family()),
        }
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Accepts `A5`, `B12`, `D4`, `I2(7)`, `G2`, `H3`, `H4`, `F4`, `E6`, `E7`, `E8`
    /// (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        let bad = || Error::InvalidRank(format!("unrecognized root system `{s}`"));
        let fixed = match t.as_str() {
            "G2" => Some(RootSystem::I2(6)),
            "H3" => Some(RootSystem::H3),
            "H4" => Some(RootSystem::H4),
            "F4" => Some(RootSystem::F4),
            "E6" => Some(RootSystem::E6),
            "E7" => Some(RootSystem::E7),
            "E8" => Some(RootSystem::E8),
            _ => None,
        };
        if let Some(rs) = fixed {
            return Ok(rs);
        }
        if let Some(inner) = t.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m = inner.parse().map_err(|_| bad())?;
            return RootSystem::I2(m).validate();
        }
        let (head, rank) = t.split_at(1.min(t.len()));
        let n: usize = rank.parse().map_err(|_| bad())?;
        match head {
            "A" => RootSystem::A(n),
            "B" => RootSystem::B(n),
            "D" => RootSystem::D(n),
            _ => return Err(bad()),
        }
        .validate()
    }
}

fn binom_q(a: usize, b: i64) -> ExactRational {
    ExactRational::from_integer(binomial(a as i64, b))
}

fn binom_qi(a: i64, b: i64) -> ExactRational {
    ExactRational::from_integer(binomial(a, b))
}

fn formula_entry(rs: RootSystem, i: usize) -> ExactRational {
    let ii = i as i64;
    match rs {
        RootSystem::A(n) => {
            let n = n as i64;
            binom_qi(n, ii) * binom_qi(n - ii - 1, ii - 1) / integer(n - ii + 1)
        }
        RootSystem::B(n) => {
            let n = n as i64;
            binom_qi(n, ii) * binom_qi(n - ii - 1, ii - 1)
        }
        RootSystem::D(n) => {
            let n = n as i64;
            rational(n - 2, ii) * binom_qi(2 * ii - 2, ii - 1) * binom_qi(n - 2, 2 * ii - 2)
        }
        _ => unreachable!("tabulated type"),
    }
}

fn table(rs: RootSystem) -> Option<Vec<i64>> {
    Some(match rs {
        RootSystem::I2(m) => vec![0, m as i64 - 2],
        RootSystem::H3 => vec![0, 8],
        RootSystem::H4 => vec![0, 42, 40],
        RootSystem::F4 => vec![0, 10, 9],
        RootSystem::E6 => vec![0, 7, 35, 13],
        RootSystem::E7 => vec![0, 16, 124, 112],
        RootSystem::E8 => vec![0, 44, 484, 784, 120],
        _ => return None,
    })
}

/// The xi-vector of the local h-polynomial of the cluster subdivision.
/// Entries are computed as exact rationals and must come out integral.
pub fn xi_vector(rs: RootSystem) -> Result<XiVector> {
    let rs = rs.validate()?;
    let n = rs.rank();
    if let Some(t) = table(rs) {
        return XiVector::from_ints(n, &t);
    }
    let mut xi = vec![ExactRational::zero()];
    for i in 1..=n / 2 {
        let v = formula_entry(rs, i);
        if !v.is_integer() {
            return Err(Error::NonIntegralXi {
                system: rs.to_string(),
                index: i,
                value: v,
            });
        }
        xi.push(v);
    }
    XiVector::new(n, xi)
}

/// Local h-polynomial: the expansion of [`xi_vector`] in the symmetric basis.
pub fn local_h(rs: RootSystem) -> Result<ExactPoly> {
    Ok(xi_to_poly(&xi_vector(rs)?))
}

/// `sum_(i=0)^n C(n+1, i) C(n+1, i+1) / (n+1) x^i`.
pub fn narayana_poly(n: usize) -> ExactPoly {
    let m = n + 1;
    ExactPoly::new(
        (0..=n as i64)
            .map(|i| binom_q(m, i) * binom_q(m, i + 1) / integer(m as i64))
            .collect(),
    )
}

/// `sum_i C(2i, i) C(n, 2i) / (i+1) x^i (1+x)^(n-2i)`, the symmetric-basis
/// side of the Narayana identity.
pub fn narayana_xi_side(n: usize) -> ExactPoly {
    let xi = (0..=n / 2)
        .map(|i| {
            let i = i as i64;
            binom_qi(2 * i, i) * binom_q(n, 2 * i) / integer(i + 1)
        })
        .collect();
    xi_to_poly(&XiVector::new(n, xi).expect("length n/2 + 1"))
}

/// Checks that the type D local h-polynomial equals `(n-2) x N_(n-2)(x)`
/// and that the Narayana identity holds at order `n`, both exactly.
pub fn verify_d_identity(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::InvalidRank(format!(
            "type D identity requires n >= 2, got {n}"
        )));
    }
    let lhs = local_h(RootSystem::D(n))?;
    let rhs = narayana_poly(n - 2)
        .shift_up(1)
        .scale(&integer(n as i64 - 2));
    Ok(lhs == rhs && narayana_xi_side(n) == narayana_poly(n))
}
