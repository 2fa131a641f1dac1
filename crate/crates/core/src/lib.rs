//! Exact construction of local h-polynomials of cluster subdivisions and
//! machine-checked certificates that they have only real zeros.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact_poly`]: dense polynomials over arbitrary-precision rationals,
//!   subresultant gcd and squarefree parts.
//! - [`real_roots`]: Sturm chains, root counting on intervals, isolation and
//!   real-rootedness certificates.
//! - [`basis`]: the symmetric basis `x^i (1+x)^(n-2i)` and the transfer of
//!   real-rootedness between a polynomial and its coefficient vector.
//! - [`cluster`]: xi-vectors and local h-polynomials for every irreducible
//!   root system, plus the Narayana identities behind type D.
//! - [`chebyshev`]: Chebyshev polynomials of the second kind, `H_n`, and a
//!   high-precision oracle for the zeros of `H_n`.
//! - [`multiplier`]: multiplier sequences, Hadamard products and finite
//!   Pólya–Schur reports.

pub mod basis;
pub mod chebyshev;
pub mod cluster;
pub mod combinat;
mod error;
pub mod exact_poly;
pub mod multiplier;
pub mod real_roots;

pub use error::{Error, Result};
pub use exact_poly::{ExactPoly, ExactRational};
