//! Exact sparse linear algebra over the rationals.
//!
//! Everything downstream reduces to three primitives:
//!
//! * [`SparseMatrix`] — rational matrices with no stored zeros,
//! * [`rank_kernel`] — deterministic fraction-free elimination producing the
//!   exact rank and a canonical reduced-echelon kernel basis,
//! * [`certify`] — hybrid exact/modular certification of rank claims
//!   (kernel-span, injectivity, surjectivity, exact rank).
//!
//! Modular ranks are always lower bounds for the rational rank, so a modular
//! rank that meets an a-priori upper bound (row count, column count, or an
//! exactly verified kernel) proves the claim without full rational
//! elimination.

mod certify;
mod elim;
mod matrix;
mod modular;

pub use certify::{
    certified_kernel_dim, certify, certify_exact, CertStatus, Certificate, RankClaim,
};
pub use elim::{rank_kernel, Rref};
pub use matrix::{scalar_int, SparseMatrix};
pub use modular::{admissible_primes, is_prime, modular_rank, sample_primes, BadPrime};

/// Exact rational scalar: arbitrary-precision, always in lowest terms with a
/// positive denominator (maintained by `num_rational`'s constructors).
pub type Scalar = num_rational::BigRational;
