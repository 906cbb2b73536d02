//! The quartic-independent maps: everything here is built from the degree-1
//! and degree-2 pieces of the P³ coordinate ring alone. (Restriction to any
//! surface is an isomorphism in degrees ≤ 3, so these maps do not change if
//! rebuilt there — a property the tests pin by matrix equality.)

use crate::linalg::{Scalar, SparseMatrix};
use crate::spaces::{
    adjoint_left, adjoint_right, assoc_left, assoc_right, cokernel_sq, identity_tensor, mult_map,
    tensor, tensor_map, wedge_dual_projection, LinearMap, RingSpec, Space, SpaceError,
};

use super::piece_space;

/// `δ₁ = Σᵢ xᵢ* ⊗ xᵢ` in `V₁* ⊗ V₁`, the coordinates of the identity map.
pub fn delta1() -> (Space, Vec<Scalar>) {
    identity_tensor(&piece_space(&RingSpec::P3, 1).expect("degree-1 piece"))
}

/// `Σⱼ yⱼ* ⊗ yⱼ` in `V₂* ⊗ V₂` over the degree-2 monomial basis.
pub fn identity_v2() -> (Space, Vec<Scalar>) {
    identity_tensor(&piece_space(&RingSpec::P3, 2).expect("degree-2 piece"))
}

/// `g : V₁* ⊗ V₁ → (∧²V₁)* ⊗ V₂` on the standard P³ pieces. See
/// [`build_g_on`] for the construction.
pub fn build_g() -> LinearMap {
    build_g_on(&RingSpec::P3).expect("P³ pieces always exist")
}

/// `g` rebuilt over any ring whose degree ≤ 2 pieces match P³'s: the
/// composition `(id ⊗ m) ∘ assoc ∘ (g₁ ⊗ id)` where `g₁ : V₁* → (∧²V₁)* ⊗ V₁`
/// is the right adjoint of the projection `V₁* ⊗ V₁* → (∧²V₁)*` and `m` is
/// degree-1-by-degree-1 multiplication.
pub fn build_g_on(ring: &RingSpec) -> Result<LinearMap, SpaceError> {
    let v1 = piece_space(ring, 1)?;
    let wedge_proj = wedge_dual_projection(&v1);
    let g1 = adjoint_right(&wedge_proj)?;
    let m = mult_map(ring, 1, 1)?;
    let dual_wedge = g1
        .codomain()
        .tensor_factors()
        .expect("g₁ lands in a tensor")
        .0
        .clone();
    let step1 = tensor_map(&g1, &LinearMap::identity(&v1));
    let bridge = assoc_right(&dual_wedge, &v1, &v1);
    let step2 = tensor_map(&LinearMap::identity(&dual_wedge), &m);
    step2.compose(&bridge)?.compose(&step1)
}

/// Which composition order `build_r` uses for the two dual factors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RVariant {
    /// The displayed composition verbatim: `id ⊗ e₂` followed by flattening,
    /// where `e₂ : V₁ → V₁* ⊗ V₂` is the left adjoint of multiplication.
    Literal,
    /// The literal composition followed by antisymmetrization of the two
    /// dual factors.
    Antisymmetrized,
}

impl std::fmt::Display for RVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            RVariant::Literal => "literal",
            RVariant::Antisymmetrized => "antisymmetrized",
        })
    }
}

/// The projection `(A ⊗ A) ⊗ C → (A ⊗ A) ⊗ C` antisymmetrizing the first two
/// factors: `(α ⊗ β) ⊗ c ↦ ½(α ⊗ β − β ⊗ α) ⊗ c`.
pub fn antisymmetrize_first_two(a: &Space, c: &Space) -> LinearMap {
    let (da, dc) = (a.dim(), c.dim());
    let space = tensor(&tensor(a, a), c);
    let half = Scalar::new(1.into(), 2.into());
    let mut m = SparseMatrix::new(da * da * dc, da * da * dc);
    for i in 0..da {
        for j in 0..da {
            for k in 0..dc {
                let col = (i * da + j) * dc + k;
                m.add_to((i * da + j) * dc + k, col, half.clone());
                m.add_to((j * da + i) * dc + k, col, -half.clone());
            }
        }
    }
    LinearMap::new(space.clone(), space, m)
}

/// `r : V₁* ⊗ V₁ → (V₁* ⊗ V₁*) ⊗ V₂` in the requested variant. Both variants
/// share the 160-dimensional codomain; they differ by the antisymmetrization
/// projection.
pub fn build_r(variant: RVariant) -> LinearMap {
    let ring = RingSpec::P3;
    let v1 = piece_space(&ring, 1).expect("degree-1 piece");
    let dual_v1 = v1.dual();
    let e2 = adjoint_left(&mult_map(&ring, 1, 1).expect("multiplication")).expect("tensor domain");
    let nested = tensor_map(&LinearMap::identity(&dual_v1), &e2);
    let v2 = piece_space(&ring, 2).expect("degree-2 piece");
    let flat = assoc_left(&dual_v1, &dual_v1, &v2)
        .compose(&nested)
        .expect("flattening");
    match variant {
        RVariant::Literal => flat,
        RVariant::Antisymmetrized => antisymmetrize_first_two(&dual_v1, &v2)
            .compose(&flat)
            .expect("antisymmetrization"),
    }
}

/// `h₁ : V₁ → V₁* ⊗ V₂`, the left adjoint of multiplication
/// `V₁ ⊗ V₁ → V₂`: `x ↦ Σⱼ xⱼ* ⊗ (xⱼ·x)`.
pub fn build_h1() -> LinearMap {
    adjoint_left(&mult_map(&RingSpec::P3, 1, 1).expect("multiplication")).expect("tensor domain")
}

/// `h : V₂* ⊗ V₂ → V₁* ⊗ coker(h₁)`: dualized multiplication on the first
/// factor, then the cokernel projection on the second:
/// `(id ⊗ p₁) ∘ assoc ∘ (m* ⊗ id)`.
pub fn build_h() -> Result<LinearMap, SpaceError> {
    let ring = RingSpec::P3;
    let v1 = piece_space(&ring, 1)?;
    let v2 = piece_space(&ring, 2)?;
    let dual_v1 = v1.dual();
    let m_star = mult_map(&ring, 1, 1)?.dual_map();
    let step1 = tensor_map(&m_star, &LinearMap::identity(&v2));
    let bridge = assoc_right(&dual_v1, &dual_v1, &v2);
    let p1 = cokernel_sq(&build_h1()).projection();
    let step2 = tensor_map(&LinearMap::identity(&dual_v1), &p1);
    step2.compose(&bridge)?.compose(&step1)
}
