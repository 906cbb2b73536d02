#![forbid(unsafe_code)]

//! Exact-arithmetic verification toolkit for the linear-algebra facts behind
//! rank/degree bookkeeping of sheaves on quartic surfaces in P^3.
//!
//! The library reconstructs, as explicit finite-dimensional linear maps over
//! the rationals, a family of coordinate computations (multiplication maps on
//! graded quotient rings, their duals, tensor constructions, and induced maps
//! on kernels/cokernels), and certifies kernel, injectivity, and surjectivity
//! claims about them exactly. A registry of named checks plus a small CLI
//! turn those certificates into machine-readable reports.

pub mod constructions;
pub mod linalg;
pub mod mukai;
pub mod report;
pub mod spaces;
pub mod verify;
