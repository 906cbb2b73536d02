//! Quartic-dependent builders: section spaces of twists of the rank-3 bundle
//! `M` (the restricted twisted tangent bundle) presented through the Euler
//! sequence, the `K₁`/`h₂` pair, the surjection `v`, and the
//! constant-dimension Hom computation on the degree-5 twist.
//!
//! All ring pieces here are taken on `Surface(f)` so that every tensor factor
//! carries the same ring tag; in degrees ≤ 3 these pieces coincide with P³'s.

use num_traits::Zero;

use crate::linalg::{Rref, Scalar, SparseMatrix};
use crate::spaces::{
    adjoint_left, cokernel_sq, graded_piece, induce, kernel_sq, monomials, mult_map, tensor,
    tensor_map, LinearMap, QuarticForm, RingSpec, Space, SpaceError, Subquotient,
};

use super::piece_space;

fn exact_rank(m: &SparseMatrix) -> usize {
    Rref::of_matrix(m).rank()
}

/// `K₁`: the cokernel of the comultiplication
/// `V_{X,5}* → V_{X,4}* ⊗ V₁*` (the dual of degree-4-by-degree-1
/// multiplication on the surface `f = 0`).
///
/// Errors with [`SpaceError::PresentationDegenerate`] if the comultiplication
/// is not injective (equivalently, the multiplication not surjective), since
/// the quotient would then not have the intended dimension.
pub fn build_k1(f: &QuarticForm) -> Result<Subquotient, SpaceError> {
    let ring = RingSpec::Surface(f.clone());
    let comult = mult_map(&ring, 4, 1)?.dual_map();
    let rank = exact_rank(comult.matrix());
    if rank != comult.matrix().cols() {
        return Err(SpaceError::PresentationDegenerate(format!(
            "comultiplication has rank {rank}, expected full column rank {}",
            comult.matrix().cols()
        )));
    }
    Ok(cokernel_sq(&comult))
}

/// `h₂ : V_{X,4}* ⊗ V₁ → K₁ ⊗ V₂`: apply `e₂` (the left adjoint of
/// degree-1 multiplication) on the second factor, reassociate, and project
/// the first two factors onto `K₁`.
pub fn build_h2(f: &QuarticForm) -> Result<LinearMap, SpaceError> {
    let ring = RingSpec::Surface(f.clone());
    let k1 = build_k1(f)?;
    let v1 = piece_space(&ring, 1)?;
    let v2 = piece_space(&ring, 2)?;
    let dual_v4 = piece_space(&ring, 4)?.dual();
    let e2 = adjoint_left(&mult_map(&ring, 1, 1)?)?;
    let nested = tensor_map(&LinearMap::identity(&dual_v4), &e2);
    let flat = crate::spaces::assoc_left(&dual_v4, &v1.dual(), &v2).compose(&nested)?;
    tensor_map(&k1.projection(), &LinearMap::identity(&v2)).compose(&flat)
}

/// `H⁰` of the `k`-th twist of `M` on the surface `f = 0`, presented as the
/// cokernel of the embedding `ι_k : V_{X,k−1} → V₁* ⊗ V_{X,k}`,
/// `g ↦ Σᵢ xᵢ* ⊗ (xᵢ·g)` (the left adjoint of multiplication).
///
/// Errors with [`SpaceError::PresentationDegenerate`] if the embedding is not
/// injective.
pub fn euler_sections(f: &QuarticForm, k: i64) -> Result<Subquotient, SpaceError> {
    assert!(k >= 0, "twist must be non-negative");
    let ring = RingSpec::Surface(f.clone());
    let iota = adjoint_left(&mult_map(&ring, 1, k - 1)?)?;
    let rank = exact_rank(iota.matrix());
    if rank != iota.matrix().cols() {
        return Err(SpaceError::PresentationDegenerate(format!(
            "twist-{k} embedding has rank {rank}, expected full column rank {}",
            iota.matrix().cols()
        )));
    }
    Ok(cokernel_sq(&iota))
}

/// The tower of presentations used by [`hom_m_m4`] and [`build_v`]: the
/// twist-4 and twist-5 section spaces, the 4-fold sum of the twist-4 one, and
/// the coordinate-multiplication map between them with its kernel.
pub struct EulerTower {
    pub ring: RingSpec,
    /// Degree-1 piece of the surface ring (dimension 4).
    pub v1: Space,
    /// Twist-4 sections (dimension 116 on a smooth quartic).
    pub e4: Subquotient,
    /// Twist-5 sections (dimension 174).
    pub e5: Subquotient,
    /// `V₁ ⊗ (twist-4 sections)` presented as a cokernel (dimension 464).
    pub sections4: Subquotient,
    /// The induced map `V₁ ⊗ H⁰(M(4)) → H⁰(M(5))`, a 174×464 matrix.
    pub induced: LinearMap,
    /// Its kernel: the Hom space between the twists (dimension 290).
    pub hom: Subquotient,
}

/// Build the whole tower over `Surface(f)`, verifying well-definedness of the
/// induced map exactly.
pub fn euler_tower(f: &QuarticForm) -> Result<EulerTower, SpaceError> {
    let ring = RingSpec::Surface(f.clone());
    let v1 = piece_space(&ring, 1)?;
    let e4 = euler_sections(f, 4)?;
    let e5 = euler_sections(f, 5)?;
    let p4 = graded_piece(&ring, 4)?;
    let p5 = graded_piece(&ring, 5)?;

    // sections4 = coker(id ⊗ ι₄) inside V₁ ⊗ (V₁* ⊗ V_{X,4})
    let id_iota4 = tensor_map(&LinearMap::identity(&v1), e4.presenting_map());
    let sections4 = cokernel_sq(&id_iota4);

    // Φ : V₁ ⊗ (V₁* ⊗ V_{X,4}) → V₁* ⊗ V_{X,5},
    //     x_v ⊗ (x_i* ⊗ m) ↦ x_i* ⊗ (x_v · m)
    let dom = tensor(&v1, e4.ambient());
    let cod = e5.ambient().clone();
    let deg1 = monomials(1);
    let (n1, d4, d5) = (v1.dim(), p4.dim(), p5.dim());
    let mut phi = SparseMatrix::new(cod.dim(), dom.dim());
    for (v, xv) in deg1.iter().enumerate() {
        for i in 0..n1 {
            for (mu, m) in p4.basis().iter().enumerate() {
                let col = v * (n1 * d4) + i * d4 + mu;
                for (sigma, val) in p5.reduce_monomial(&xv.mul(m)).into_iter().enumerate() {
                    if !val.is_zero() {
                        phi.set(i * d5 + sigma, col, val);
                    }
                }
            }
        }
    }
    let phi = LinearMap::new(dom, cod, phi);

    let induced = induce(&phi, &sections4, &e5)?;
    let hom = kernel_sq(&induced);
    Ok(EulerTower {
        ring,
        v1,
        e4,
        e5,
        sections4,
        induced,
        hom,
    })
}

/// The Hom space between the twist-0 and twist-4 copies of `M` on the surface
/// `f = 0`, presented as the kernel of the induced coordinate-multiplication
/// map of the tower.
pub fn hom_m_m4(f: &QuarticForm) -> Result<Subquotient, SpaceError> {
    Ok(euler_tower(f)?.hom)
}

/// `v : Hom ⊗ V₂* → H⁰(M(4)) ⊗ V₁*` assembled from an existing tower:
/// evaluation against the comultiplication of degree-2 monomials.
///
/// A kernel class `κ` lifts canonically to `V₁ ⊗ (V₁* ⊗ V_{X,4})` and slices
/// into blocks `S_v` indexed by the outer coordinate `x_v`; the image of
/// `κ ⊗ y_c*` has `(ε, b)`-entry `Σ_v [x_v·x_b = y_c] · (S_v projected to
/// H⁰(M(4)))_ε`.
pub fn build_v_from(t: &EulerTower) -> Result<LinearMap, SpaceError> {
    let v2 = piece_space(&t.ring, 2)?;
    let dom = tensor(t.hom.space(), &v2.dual());
    let cod = tensor(t.e4.space(), &t.v1.dual());
    let deg1 = monomials(1);
    let deg2 = monomials(2);
    let n1 = t.v1.dim();
    let n2 = v2.dim();
    let block = t.e4.ambient().dim();
    let mut m = SparseMatrix::new(cod.dim(), dom.dim());
    for (kdx, kappa) in t.hom.basis().iter().enumerate() {
        let lifted = t.sections4.lift(kappa);
        let projected: Vec<Vec<Scalar>> = (0..n1)
            .map(|v| t.e4.project(&lifted[v * block..(v + 1) * block]))
            .collect();
        for (c, yc) in deg2.iter().enumerate() {
            let col = kdx * n2 + c;
            for (v, xv) in deg1.iter().enumerate() {
                for (b, xb) in deg1.iter().enumerate() {
                    if xv.mul(xb) == *yc {
                        for (eps, val) in projected[v].iter().enumerate() {
                            if !val.is_zero() {
                                m.add_to(eps * n1 + b, col, val.clone());
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(LinearMap::new(dom, cod, m))
}

/// Convenience wrapper building the tower first. Prefer [`build_v_from`] when
/// the tower is already at hand.
pub fn build_v(f: &QuarticForm) -> Result<LinearMap, SpaceError> {
    build_v_from(&euler_tower(f)?)
}

/// The matrix whose kernel dimension [`hom_f_o5`] reports, together with the
/// presentation of the twist-5 sections of the dual bundle it is built from.
pub struct HomFO5 {
    /// `N₅ = ker(V₁ ⊗ V_{X,5} → V_{X,6})`, the twist-5 sections of the dual
    /// bundle (dimension 134 on a smooth quartic).
    pub n5: Subquotient,
    /// `Ψ : V₂* ⊗ N₅ → V₁* ⊗ V_{X,5}`, a 208×1340 matrix.
    pub psi: LinearMap,
}

/// Build `N₅` and `Ψ` over `Surface(f)`. A basis element `y_c* ⊗ τ` maps to
/// `Σ_{a,j,σ} [x_a·x_j = y_c] · τ_{(a,σ)} · x_j* ⊗ m_σ`.
pub fn hom_f_o5_map(f: &QuarticForm) -> Result<HomFO5, SpaceError> {
    let ring = RingSpec::Surface(f.clone());
    let m15 = mult_map(&ring, 1, 5)?;
    let rank = exact_rank(m15.matrix());
    if rank != m15.matrix().rows() {
        return Err(SpaceError::PresentationDegenerate(format!(
            "degree-(1,5) multiplication has rank {rank}, expected full row rank {}",
            m15.matrix().rows()
        )));
    }
    let n5 = kernel_sq(&m15);
    let v1 = piece_space(&ring, 1)?;
    let v2 = piece_space(&ring, 2)?;
    let p5 = graded_piece(&ring, 5)?;
    let d5 = p5.dim();
    let n1 = v1.dim();
    let deg1 = monomials(1);
    let deg2 = monomials(2);
    let dom = tensor(&v2.dual(), n5.space());
    let cod = tensor(&v1.dual(), &Space::graded(&p5));
    let mut m = SparseMatrix::new(cod.dim(), dom.dim());
    for (c, yc) in deg2.iter().enumerate() {
        for (mu, tau) in n5.basis().iter().enumerate() {
            let col = c * n5.dim() + mu;
            for (idx, val) in tau.iter().enumerate() {
                if val.is_zero() {
                    continue;
                }
                let (a, sigma) = (idx / d5, idx % d5);
                for (j, xj) in deg1.iter().enumerate().take(n1) {
                    if deg1[a].mul(xj) == *yc {
                        m.add_to(j * d5 + sigma, col, val.clone());
                    }
                }
            }
        }
    }
    Ok(HomFO5 {
        n5,
        psi: LinearMap::new(dom, cod, m),
    })
}

/// The exact dimension of `ker(Ψ)`. Computed by full-row-rank certification
/// when possible (a modular rank equal to the row count pins the rational
/// rank exactly), falling back to rational elimination otherwise.
pub fn hom_f_o5(f: &QuarticForm) -> Result<usize, SpaceError> {
    let h = hom_f_o5_map(f)?;
    Ok(crate::linalg::certified_kernel_dim(h.psi.matrix()))
}

/// The same dimension by unconditional rational elimination.
pub fn hom_f_o5_exact(f: &QuarticForm) -> Result<usize, SpaceError> {
    let h = hom_f_o5_map(f)?;
    let m = h.psi.matrix();
    Ok(m.cols() - exact_rank(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{admissible_primes, modular_rank, rank_kernel};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k1_and_h2_have_the_pinned_shapes_on_fermat() {
        let f = QuarticForm::fermat();
        let k1 = build_k1(&f).unwrap();
        assert_eq!(k1.ambient().dim(), 136);
        assert_eq!(k1.dim(), 84);
        let h2 = build_h2(&f).unwrap();
        assert_eq!(h2.matrix().rows(), 840);
        assert_eq!(h2.matrix().cols(), 136);
        let (rank, ker) = rank_kernel(h2.matrix());
        assert_eq!((rank, ker.len()), (136, 0), "h₂ must be injective");
    }

    #[test]
    fn euler_sections_dimensions_on_fermat() {
        let f = QuarticForm::fermat();
        assert_eq!(euler_sections(&f, 0).unwrap().dim(), 4);
        assert_eq!(euler_sections(&f, 4).unwrap().dim(), 116);
        assert_eq!(euler_sections(&f, 5).unwrap().dim(), 174);
    }

    #[test]
    fn tower_and_hom_dimension_on_fermat() {
        let t = euler_tower(&QuarticForm::fermat()).unwrap();
        assert_eq!(t.sections4.dim(), 464);
        assert_eq!(t.induced.matrix().rows(), 174);
        assert_eq!(t.induced.matrix().cols(), 464);
        assert_eq!(t.hom.dim(), 290);
        // rank–nullity on the induced map
        let (rank, ker) = rank_kernel(t.induced.matrix());
        assert_eq!(rank + ker.len(), 464);
        assert_eq!(ker.len(), t.hom.dim());
    }

    #[test]
    fn v_is_surjective_on_fermat() {
        let t = euler_tower(&QuarticForm::fermat()).unwrap();
        let v = build_v_from(&t).unwrap();
        assert_eq!(v.matrix().rows(), 464);
        assert_eq!(v.matrix().cols(), 2900);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let primes = admissible_primes(&mut rng, 2, &[v.matrix()]);
        for p in primes {
            assert_eq!(modular_rank(v.matrix(), p).unwrap(), 464, "p = {p}");
        }
    }

    #[test]
    fn hom_f_o5_is_1132_on_fermat() {
        let f = QuarticForm::fermat();
        let h = hom_f_o5_map(&f).unwrap();
        assert_eq!(h.n5.dim(), 134);
        assert_eq!(h.psi.matrix().rows(), 208);
        assert_eq!(h.psi.matrix().cols(), 1340);
        assert_eq!(hom_f_o5(&f).unwrap(), 1132);
    }

    #[test]
    fn section_dimensions_do_not_depend_on_the_quartic() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let f = QuarticForm::random(&mut rng);
        assert_eq!(euler_sections(&f, 0).unwrap().dim(), 4);
        assert_eq!(euler_sections(&f, 4).unwrap().dim(), 116);
        assert_eq!(build_k1(&f).unwrap().dim(), 84);
    }
}
