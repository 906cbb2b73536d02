//! Linear maps between labeled spaces, and the small calculus the
//! constructions are assembled from: composition, duals, tensor products,
//! associativity bridges, and the adjoint reshapes
//! `Hom(A ⊗ B, C) = Hom(B, A* ⊗ C) = Hom(A, C ⊗ B*)`.

use num_traits::Zero;

use crate::linalg::{scalar_int, Scalar, SparseMatrix};

use super::space::{tensor, wedge2_pairs, Space};
use super::SpaceError;

/// A matrix together with its (tagged) domain and codomain.
#[derive(Clone, Debug)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    matrix: SparseMatrix,
}

impl LinearMap {
    pub fn new(domain: Space, codomain: Space, matrix: SparseMatrix) -> LinearMap {
        assert_eq!(
            matrix.rows(),
            codomain.dim(),
            "row count must match codomain"
        );
        assert_eq!(
            matrix.cols(),
            domain.dim(),
            "column count must match domain"
        );
        LinearMap {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(space: &Space) -> LinearMap {
        LinearMap::new(
            space.clone(),
            space.clone(),
            SparseMatrix::identity(space.dim()),
        )
    }

    pub fn zero(domain: &Space, codomain: &Space) -> LinearMap {
        LinearMap::new(
            domain.clone(),
            codomain.clone(),
            SparseMatrix::new(codomain.dim(), domain.dim()),
        )
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ rhs`; the domains must agree structurally.
    pub fn compose(&self, rhs: &LinearMap) -> Result<LinearMap, SpaceError> {
        if self.domain != rhs.codomain {
            return Err(SpaceError::ShapeMismatch(format!(
                "cannot compose: inner spaces differ ({:?} vs {:?})",
                self.domain.tag(),
                rhs.codomain.tag()
            )));
        }
        Ok(LinearMap::new(
            rhs.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&rhs.matrix),
        ))
    }

    /// The transpose, between the dual spaces.
    pub fn dual_map(&self) -> LinearMap {
        LinearMap::new(
            self.codomain.dual(),
            self.domain.dual(),
            self.matrix.transpose(),
        )
    }
}

/// `f ⊗ g` on the tensor products, Kronecker matrix (left factor major).
pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> LinearMap {
    LinearMap::new(
        tensor(f.domain(), g.domain()),
        tensor(f.codomain(), g.codomain()),
        f.matrix().kronecker(g.matrix()),
    )
}

/// Identity-matrix bridge `(A ⊗ B) ⊗ C -> A ⊗ (B ⊗ C)`. The flattened basis
/// order is the same on both sides, only the tags differ.
pub fn assoc_right(a: &Space, b: &Space, c: &Space) -> LinearMap {
    LinearMap::new(
        tensor(&tensor(a, b), c),
        tensor(a, &tensor(b, c)),
        SparseMatrix::identity(a.dim() * b.dim() * c.dim()),
    )
}

/// Identity-matrix bridge `A ⊗ (B ⊗ C) -> (A ⊗ B) ⊗ C`.
pub fn assoc_left(a: &Space, b: &Space, c: &Space) -> LinearMap {
    LinearMap::new(
        tensor(a, &tensor(b, c)),
        tensor(&tensor(a, b), c),
        SparseMatrix::identity(a.dim() * b.dim() * c.dim()),
    )
}

fn tensor_factors(s: &Space, what: &str) -> Result<(Space, Space), SpaceError> {
    s.tensor_factors()
        .map(|(a, b)| (a.clone(), b.clone()))
        .ok_or_else(|| SpaceError::ShapeMismatch(format!("{what} requires a tensor domain")))
}

/// Reshape `m : A ⊗ B -> C` into `B -> A* ⊗ C`, i.e. `b -> Σ_a a* ⊗ m(a ⊗ b)`.
pub fn adjoint_left(m: &LinearMap) -> Result<LinearMap, SpaceError> {
    let (a, b) = tensor_factors(m.domain(), "adjoint_left")?;
    let c = m.codomain().clone();
    let (da, db, dc) = (a.dim(), b.dim(), c.dim());
    let mut out = SparseMatrix::new(da * dc, db);
    for (row, col, v) in m.matrix().iter() {
        let (ai, bi) = (col / db, col % db);
        out.set(ai * dc + row, bi, v.clone());
    }
    Ok(LinearMap::new(b, tensor(&a.dual(), &c), out))
}

/// Reshape `m : A ⊗ B -> C` into `A -> C ⊗ B*`, i.e. `a -> Σ_b m(a ⊗ b) ⊗ b*`.
pub fn adjoint_right(m: &LinearMap) -> Result<LinearMap, SpaceError> {
    let (a, b) = tensor_factors(m.domain(), "adjoint_right")?;
    let c = m.codomain().clone();
    let db = b.dim();
    let mut out = SparseMatrix::new(c.dim() * db, a.dim());
    for (row, col, v) in m.matrix().iter() {
        let (ai, bi) = (col / db, col % db);
        out.set(row * db + bi, ai, v.clone());
    }
    Ok(LinearMap::new(a, tensor(&c, &b.dual()), out))
}

/// The canonical projection `S* ⊗ S* -> (∧²S)*`: `α ⊗ β -> α ∧ β`, under the
/// pairing `<(s_i ∧ s_j)*, s_k ∧ s_l> = δ_ik δ_jl` for `i < j`, `k < l`. So
/// `s_a* ⊗ s_b*` maps to `+(s_a ∧ s_b)*` when `a < b`, to `-(s_b ∧ s_a)*`
/// when `a > b`, and to zero on the diagonal.
pub fn wedge_dual_projection(s: &Space) -> LinearMap {
    let n = s.dim();
    let dual = s.dual();
    let pairs = wedge2_pairs(n);
    let pair_index =
        |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("i<j pair");
    let mut m = SparseMatrix::new(pairs.len(), n * n);
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let (row, sign) = if a < b {
                (pair_index(a, b), 1)
            } else {
                (pair_index(b, a), -1)
            };
            m.set(row, a * n + b, scalar_int(sign));
        }
    }
    LinearMap::new(
        tensor(&dual, &dual),
        crate::spaces::space::wedge2(s).dual(),
        m,
    )
}

/// A distinguished element of `Dual(S) ⊗ S`: the identity tensor
/// `Σ_i s_i* ⊗ s_i` (vanishes under any pairing of a symmetric with an
/// antisymmetric structure, which is what several kernel claims pin down).
pub fn identity_tensor(s: &Space) -> (Space, Vec<Scalar>) {
    let space = tensor(&s.dual(), s);
    let n = s.dim();
    let mut v = vec![Scalar::zero(); n * n];
    for i in 0..n {
        v[i * n + i] = scalar_int(1);
    }
    (space, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::ring::{graded_piece, RingSpec};
    use crate::spaces::space::wedge2;

    fn v(d: i64) -> Space {
        Space::graded(&graded_piece(&RingSpec::P3, d).unwrap())
    }

    #[test]
    fn compose_requires_matching_inner_space() {
        let a = v(1);
        let b = v(2);
        let f = LinearMap::zero(&a, &b);
        let g = LinearMap::zero(&b, &a);
        assert!(f.compose(&g).is_ok());
        assert!(f.compose(&f).is_err());
    }

    #[test]
    fn dual_map_is_an_involution() {
        let mut m = SparseMatrix::new(10, 4);
        m.set(3, 1, scalar_int(7));
        m.set(0, 2, scalar_int(-2));
        let f = LinearMap::new(v(1), v(2), m);
        let dd = f.dual_map().dual_map();
        assert_eq!(dd.domain(), f.domain());
        assert_eq!(dd.codomain(), f.codomain());
        assert_eq!(dd.matrix(), f.matrix());
    }

    #[test]
    fn adjoint_left_reshapes_evaluation_correctly() {
        // m : V1 ⊗ V1 -> V2 multiplication; adjoint_left(m)(x_b) = Σ_j x_j* ⊗ x_j x_b.
        let v1 = v(1);
        let v2 = v(2);
        let p2 = graded_piece(&RingSpec::P3, 2).unwrap();
        let mut mm = SparseMatrix::new(10, 16);
        let m1 = graded_piece(&RingSpec::P3, 1).unwrap();
        for (i, a) in m1.basis().iter().enumerate() {
            for (j, b) in m1.basis().iter().enumerate() {
                for (r, c) in p2.reduce_monomial(&a.mul(b)).into_iter().enumerate() {
                    if !c.is_zero() {
                        mm.set(r, i * 4 + j, c);
                    }
                }
            }
        }
        let mul = LinearMap::new(tensor(&v1, &v1), v2.clone(), mm);
        let adj = adjoint_left(&mul).unwrap();
        assert_eq!(adj.domain(), &v1);
        assert_eq!(adj.codomain(), &tensor(&v1.dual(), &v2));
        // column for x1: entries at (x_j*, x_j*x1)
        let col: Vec<Scalar> = (0..40).map(|r| adj.matrix().get(r, 1)).collect();
        let p2b = p2.basis();
        for j in 0..4 {
            let prod = m1.basis()[j].mul(&m1.basis()[1]);
            let at = p2b.iter().position(|m| *m == prod).unwrap();
            assert_eq!(col[j * 10 + at], scalar_int(1));
        }
        assert_eq!(col.iter().filter(|x| !x.is_zero()).count(), 4);
    }

    #[test]
    fn wedge_projection_kills_symmetric_tensors() {
        let v1 = v(1);
        let proj = wedge_dual_projection(&v1);
        assert_eq!(proj.codomain(), &wedge2(&v1).dual());
        // symmetric: x0*⊗x1* + x1*⊗x0* dies; antisymmetric survives with sign
        let mut t = vec![Scalar::zero(); 16];
        t[1] = scalar_int(1);
        t[4] = scalar_int(1);
        assert!(proj.apply(&t).iter().all(Scalar::is_zero));
        let mut anti = vec![Scalar::zero(); 16];
        anti[1] = scalar_int(1);
        anti[4] = scalar_int(-1);
        let img = proj.apply(&anti);
        assert_eq!(img[0], scalar_int(2));
    }

    #[test]
    fn assoc_bridges_are_mutually_inverse() {
        let a = v(1);
        let b = wedge2(&a);
        let c = v(2);
        let right = assoc_right(&a, &b, &c);
        let left = assoc_left(&a, &b, &c);
        let round = left.compose(&right).unwrap();
        assert_eq!(
            round.matrix(),
            &SparseMatrix::identity(a.dim() * b.dim() * c.dim())
        );
    }
}
