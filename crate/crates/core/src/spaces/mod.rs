//! Graded rings, finite-dimensional ℚ-vector spaces with labeled bases, and
//! the calculus of exact linear maps between them.
//!
//! The layering:
//! * [`ring`] — monomials, quartic forms, graded pieces of ℚ[x0..x3] and its
//!   quotients, with exact reduction to canonical representatives;
//! * [`space`] — structured vector spaces (graded pieces, duals, tensor
//!   products, alternating squares, class spaces) with basis labels;
//! * [`map`] — linear maps between spaces: composition, duals, tensor
//!   products, adjunction, and reassociation;
//! * [`subquotient`] — kernels and cokernels with canonical bases, and
//!   exactly-verified induced maps.
//!
//! Everything is exact: scalars are arbitrary-precision rationals and no
//! operation rounds.

pub mod map;
pub mod ring;
pub mod space;
pub mod subquotient;

pub use map::{
    adjoint_left, adjoint_right, assoc_left, assoc_right, identity_tensor, tensor_map,
    wedge_dual_projection, LinearMap,
};
pub use ring::{graded_piece, monomials, GradedPiece, Monomial, QuarticForm, RingSpec};
pub use space::{tensor, wedge2, wedge2_pairs, Space, SpaceTag};
pub use subquotient::{cokernel_sq, induce, kernel_sq, Presentation, Subquotient};

use num_traits::Zero;

use crate::linalg::{Rref, SparseMatrix};

/// Errors from constructing rings, spaces, or maps.
#[derive(Debug, thiserror::Error)]
pub enum SpaceError {
    /// A ring presentation was rejected (zero form, dependent pair, ...).
    #[error("invalid ring presentation: {0}")]
    InvalidRing(String),
    /// A textual form failed to parse.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// The two quartics do not cut out a complete intersection: the graded
    /// piece in this degree is larger than the generic count.
    #[error("the pair of forms is not regular: excess dimension in degree {degree}")]
    NotRegularPair { degree: i64 },
    /// Domains/codomains do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A restriction between incompatible rings was requested.
    #[error("incompatible rings: {0}")]
    IncompatibleRings(String),
    /// An induced map failed its exact well-definedness check.
    #[error("map is not well defined on classes: {0}")]
    NotWellDefined(String),
    /// A construction degenerated for this input (e.g. an expected kernel
    /// dimension failed), so dependent quantities are meaningless.
    #[error("degenerate presentation: {0}")]
    PresentationDegenerate(String),
}

/// The multiplication map `R_a ⊗ R_b -> R_{a+b}` of a graded ring, on the
/// canonical monomial bases, with products reduced to canonical
/// representatives in the target piece.
pub fn mult_map(ring: &RingSpec, a: i64, b: i64) -> Result<LinearMap, SpaceError> {
    let pa = graded_piece(ring, a)?;
    let pb = graded_piece(ring, b)?;
    let pab = graded_piece(ring, a + b)?;
    let dom = tensor(&Space::graded(&pa), &Space::graded(&pb));
    let cod = Space::graded(&pab);
    let mut m = SparseMatrix::new(cod.dim(), dom.dim());
    for (i, ma) in pa.basis().iter().enumerate() {
        for (j, mb) in pb.basis().iter().enumerate() {
            let col = i * pb.dim() + j;
            for (row, v) in pab.reduce_monomial(&ma.mul(mb)).into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(row, col, v);
                }
            }
        }
    }
    Ok(LinearMap::new(dom, cod, m))
}

/// The degree-`d` piece of the quotient map between two rings: `P3 -> S/(f)`,
/// `P3 -> S/(f1,f2)`, or `S/(f) -> S/(f1,f2)` when `f` lies in the span of
/// `(f1, f2)`. Each basis monomial of the source is reduced in the target.
pub fn restriction_map(from: &RingSpec, to: &RingSpec, d: i64) -> Result<LinearMap, SpaceError> {
    check_restriction_compatible(from, to)?;
    let pf = graded_piece(from, d)?;
    let pt = graded_piece(to, d)?;
    let dom = Space::graded(&pf);
    let cod = Space::graded(&pt);
    let mut m = SparseMatrix::new(cod.dim(), dom.dim());
    for (col, mono) in pf.basis().iter().enumerate() {
        for (row, v) in pt.reduce_monomial(mono).into_iter().enumerate() {
            if !v.is_zero() {
                m.set(row, col, v);
            }
        }
    }
    Ok(LinearMap::new(dom, cod, m))
}

fn check_restriction_compatible(from: &RingSpec, to: &RingSpec) -> Result<(), SpaceError> {
    match (from, to) {
        (RingSpec::P3, RingSpec::Surface(_)) | (RingSpec::P3, RingSpec::Curve(..)) => Ok(()),
        (RingSpec::Surface(f), RingSpec::Curve(f1, f2)) => {
            // need f ∈ span{f1, f2} so that the quotient map exists
            let n = monomials(4).len();
            let mut span = SparseMatrix::new(2, n);
            for (r, g) in [f1, f2].into_iter().enumerate() {
                for (c, v) in g.coeff_vector().into_iter().enumerate() {
                    if !v.is_zero() {
                        span.set(r, c, v);
                    }
                }
            }
            if Rref::of_matrix(&span).contains(&f.coeff_vector()) {
                Ok(())
            } else {
                Err(SpaceError::IncompatibleRings(
                    "the surface form is not in the span of the curve pair".into(),
                ))
            }
        }
        _ => Err(SpaceError::IncompatibleRings(
            "no quotient map between these rings".into(),
        )),
    }
}
