//! Exact-arithmetic toolkit for the Erdős–Straus equation
//! `4/n = 1/n1 + 1/n2 + 1/n3`.
//!
//! For primes of the form `n = 24m + 1` the crate searches *tame*
//! solutions: decompositions where `n1 = 6m + k` for some `1 <= k <= 12m`
//! and the other two denominators are `n1 * n / I1` and `n1 * n / I2`
//! for a pair of divisors `I1, I2` of `n1` summing to `4k - 1`.  Primes
//! with no such decomposition are *wild*; they are rare (five among the
//! 591 primes with `m <= 2000`, nine among the 7185 with `m <= 30000`).
//!
//! The crate is organised as:
//!
//! - [`arith`] — sieve, deterministic 64-bit primality, divisor
//!   enumeration, and the exact cross-multiplied identity check that is
//!   the ground truth for everything else;
//! - [`tame`] — tame-certificate search, classification, wild-prime
//!   certification, and the lcm-shift that maps one certificate to an
//!   infinite arithmetic progression of solvable `n`;
//! - [`family`] — a 53-row catalog of closed-form congruence-class
//!   solution families covering the tame primes, with instantiation,
//!   enumeration, reverse matching, and a reconciliation audit;
//! - [`solver`] — a complete solver for arbitrary `n >= 3` via residue
//!   reductions, the tame path, and an exhaustive fallback;
//! - [`survey`] — parallel batch classification and census/coverage
//!   reports with machine-readable output.
//!
//! Every triple produced anywhere in the crate is re-verified with exact
//! arithmetic before it is returned.

pub mod arith;
pub mod error;
pub mod family;
pub mod solver;
pub mod survey;
pub mod tame;

pub use arith::{divisors_of, is_prime, verify_decomposition, SolutionTriple, SpfTable};
pub use error::Error;
pub use tame::{ClassificationRecord, TameCertificate, Verdict};
