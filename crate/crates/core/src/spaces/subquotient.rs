//! Subquotients: kernels and cokernels of linear maps, presented with
//! canonical bases so that induced maps are computable and *checkable*.
//!
//! A kernel's canonical basis is the reduced-echelon nullspace basis of the
//! presenting map; its vectors live in the ambient space. A cokernel's
//! canonical basis is the set of non-pivot coordinates of the echelonized
//! image; reduction against that echelon form sends every ambient vector to a
//! canonical representative supported on those coordinates.
//!
//! [`induce`] pushes an ambient-level map down to class spaces and verifies
//! well-definedness exactly: relations must map into relations, and images
//! must land in the target subspace. Failures carry a witness.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::linalg::{Rref, Scalar, SparseMatrix};

use super::map::LinearMap;
use super::space::Space;
use super::SpaceError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Presentation {
    /// Classes are the kernel vectors of the presenting map.
    Kernel,
    /// Classes are ambient vectors modulo the image of the presenting map.
    Cokernel,
}

/// A subspace or quotient of an ambient [`Space`], with a canonical basis.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: Space,
    kind: Presentation,
    presenting: LinearMap,
    /// Canonical basis in ambient coordinates (kernel vectors, or the
    /// standard vectors at non-pivot coordinates for a cokernel).
    basis: Vec<Vec<Scalar>>,
    /// Cokernel: echelonized image (the relations). Kernel: unused.
    relations: Rref,
    /// Kernel: free columns of the presenting matrix. Cokernel: non-pivot
    /// ambient coordinates. Either way, one per basis class, ascending.
    coords: Vec<usize>,
    space: Space,
}

fn fingerprint(kind: Presentation, m: &SparseMatrix) -> u64 {
    let mut h = DefaultHasher::new();
    (matches!(kind, Presentation::Kernel), m.rows(), m.cols()).hash(&mut h);
    for (r, c, v) in m.iter() {
        (r, c, v.numer(), v.denom()).hash(&mut h);
    }
    h.finish()
}

/// The kernel of `f`, inside its domain.
pub fn kernel_sq(f: &LinearMap) -> Subquotient {
    let rref = Rref::of_matrix(f.matrix());
    let basis = rref.kernel_basis();
    let coords = rref.non_pivot_cols();
    let ambient = f.domain().clone();
    let fp = fingerprint(Presentation::Kernel, f.matrix());
    let labels = (0..basis.len()).map(|i| format!("k{i}")).collect();
    let space = Space::classes(&ambient, true, fp, labels);
    Subquotient {
        ambient,
        kind: Presentation::Kernel,
        presenting: f.clone(),
        basis,
        relations: rref,
        coords,
        space,
    }
}

/// The cokernel of `f`, a quotient of its codomain.
pub fn cokernel_sq(f: &LinearMap) -> Subquotient {
    let relations = Rref::of_image(f.matrix());
    let ambient = f.codomain().clone();
    let coords = relations.non_pivot_cols();
    let basis: Vec<Vec<Scalar>> = coords
        .iter()
        .map(|&c| {
            let mut v = vec![Scalar::zero(); ambient.dim()];
            v[c] = crate::linalg::scalar_int(1);
            v
        })
        .collect();
    let fp = fingerprint(Presentation::Cokernel, f.matrix());
    let labels = coords
        .iter()
        .map(|&c| format!("[{}]", ambient.label(c)))
        .collect();
    let space = Space::classes(&ambient, false, fp, labels);
    Subquotient {
        ambient,
        kind: Presentation::Cokernel,
        presenting: f.clone(),
        basis,
        relations,
        coords,
        space,
    }
}

impl Subquotient {
    /// The whole of `space`, presented as the kernel of the zero map to the
    /// zero-dimensional tensor-free space... more plainly: a trivial kernel
    /// presentation whose classes are exactly the ambient basis vectors.
    pub fn full(space: &Space) -> Subquotient {
        kernel_sq(&LinearMap::new(
            space.clone(),
            space.clone(),
            SparseMatrix::new(space.dim(), space.dim()),
        ))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    pub fn presentation(&self) -> Presentation {
        self.kind
    }

    pub fn presenting_map(&self) -> &LinearMap {
        &self.presenting
    }

    /// The class space (usable as a domain/codomain of further maps).
    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Canonical basis in ambient coordinates.
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Class coordinates of an ambient vector, for a cokernel: reduce against
    /// the relations and read off the non-pivot coordinates.
    pub fn project(&self, ambient_vec: &[Scalar]) -> Vec<Scalar> {
        assert!(
            matches!(self.kind, Presentation::Cokernel),
            "project needs a cokernel"
        );
        let reduced = self.relations.reduce(ambient_vec);
        self.coords.iter().map(|&c| reduced[c].clone()).collect()
    }

    /// Canonical ambient representative of a class-coordinate vector.
    pub fn lift(&self, class_vec: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(class_vec.len(), self.dim(), "class vector length mismatch");
        let mut out = vec![Scalar::zero(); self.ambient.dim()];
        match self.kind {
            Presentation::Cokernel => {
                for (i, &c) in self.coords.iter().enumerate() {
                    out[c] = class_vec[i].clone();
                }
            }
            Presentation::Kernel => {
                for (i, v) in self.basis.iter().enumerate() {
                    if class_vec[i].is_zero() {
                        continue;
                    }
                    for (o, x) in out.iter_mut().zip(v) {
                        *o += &class_vec[i] * x;
                    }
                }
            }
        }
        out
    }

    /// For a kernel: the coordinates of `v` in the canonical basis, or `None`
    /// if `v` does not lie in the kernel. Exact: the read-off coefficients
    /// are verified by reconstructing `v`.
    pub fn coords_in(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert!(
            matches!(self.kind, Presentation::Kernel),
            "coords_in needs a kernel"
        );
        assert_eq!(
            v.len(),
            self.ambient.dim(),
            "ambient vector length mismatch"
        );
        let coeffs: Vec<Scalar> = self.coords.iter().map(|&c| v[c].clone()).collect();
        let rebuilt = self.lift(&coeffs);
        if rebuilt == v {
            Some(coeffs)
        } else {
            None
        }
    }

    /// Ambient -> classes projection map (cokernel only).
    pub fn projection(&self) -> LinearMap {
        assert!(
            matches!(self.kind, Presentation::Cokernel),
            "projection needs a cokernel"
        );
        let mut m = SparseMatrix::new(self.dim(), self.ambient.dim());
        for i in 0..self.ambient.dim() {
            let mut e = vec![Scalar::zero(); self.ambient.dim()];
            e[i] = crate::linalg::scalar_int(1);
            for (r, v) in self.project(&e).into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(r, i, v);
                }
            }
        }
        LinearMap::new(self.ambient.clone(), self.space.clone(), m)
    }

    /// Classes -> ambient inclusion map (kernel only).
    pub fn inclusion(&self) -> LinearMap {
        assert!(
            matches!(self.kind, Presentation::Kernel),
            "inclusion needs a kernel"
        );
        LinearMap::new(
            self.space.clone(),
            self.ambient.clone(),
            SparseMatrix::from_columns(self.ambient.dim(), &self.basis),
        )
    }

    /// Generators of the relations this subquotient imposes on maps *out* of
    /// it: the image generators of the presenting map for a cokernel, nothing
    /// for a kernel.
    fn relation_generators(&self) -> Vec<Vec<Scalar>> {
        match self.kind {
            Presentation::Kernel => Vec::new(),
            Presentation::Cokernel => (0..self.presenting.domain().dim())
                .map(|j| self.presenting.matrix().column(j))
                .collect(),
        }
    }
}

fn witness_string(space: &Space, v: &[Scalar]) -> String {
    let mut parts = Vec::new();
    for (i, x) in v.iter().enumerate() {
        if !x.is_zero() {
            parts.push(format!("{x}·{}", space.label(i)));
            if parts.len() == 4 {
                parts.push("…".into());
                break;
            }
        }
    }
    parts.join(" + ")
}

/// Push the ambient-level map `f` down to a map `dom -> cod` on classes.
///
/// Well-definedness is verified exactly:
/// * every relation generator of `dom` must map to zero in `cod` (to zero
///   *classes* if `cod` is a cokernel, to the zero *vector* if `cod` is a
///   kernel, since a kernel sits inside its ambient space);
/// * the image of every basis class of `dom` must lie in `cod` (automatic
///   for a cokernel; membership is checked exactly for a kernel).
///
/// Violations return [`SpaceError::NotWellDefined`] with a witness.
pub fn induce(
    f: &LinearMap,
    dom: &Subquotient,
    cod: &Subquotient,
) -> Result<LinearMap, SpaceError> {
    if f.domain() != dom.ambient() {
        return Err(SpaceError::ShapeMismatch(
            "map domain is not dom's ambient space".into(),
        ));
    }
    if f.codomain() != cod.ambient() {
        return Err(SpaceError::ShapeMismatch(
            "map codomain is not cod's ambient space".into(),
        ));
    }
    for gen in dom.relation_generators() {
        let img = f.apply(&gen);
        let ok = match cod.kind {
            Presentation::Cokernel => cod.project(&img).iter().all(Scalar::is_zero),
            Presentation::Kernel => img.iter().all(Scalar::is_zero),
        };
        if !ok {
            return Err(SpaceError::NotWellDefined(format!(
                "a relation of the domain maps to {} in the codomain ambient",
                witness_string(cod.ambient(), &img)
            )));
        }
    }
    let mut columns = Vec::with_capacity(dom.dim());
    for rep in dom.basis() {
        let img = f.apply(rep);
        let class = match cod.kind {
            Presentation::Cokernel => cod.project(&img),
            Presentation::Kernel => cod.coords_in(&img).ok_or_else(|| {
                SpaceError::NotWellDefined(format!(
                    "image {} is not in the codomain kernel",
                    witness_string(cod.ambient(), &img)
                ))
            })?,
        };
        columns.push(class);
    }
    Ok(LinearMap::new(
        dom.space().clone(),
        cod.space().clone(),
        SparseMatrix::from_columns(cod.dim(), &columns),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar_int;
    use crate::spaces::ring::{graded_piece, RingSpec};

    fn v(d: i64) -> Space {
        Space::graded(&graded_piece(&RingSpec::P3, d).unwrap())
    }

    fn map(dom: &Space, cod: &Space, entries: &[(usize, usize, i64)]) -> LinearMap {
        let mut m = SparseMatrix::new(cod.dim(), dom.dim());
        for &(r, c, x) in entries {
            m.set(r, c, scalar_int(x));
        }
        LinearMap::new(dom.clone(), cod.clone(), m)
    }

    #[test]
    fn kernel_basis_is_canonical_and_included() {
        let dom = v(1);
        let cod = v(1);
        // f = projection onto first two coordinates
        let f = map(&dom, &cod, &[(0, 0, 1), (1, 1, 1)]);
        let k = kernel_sq(&f);
        assert_eq!(k.dim(), 2);
        assert_eq!(k.basis()[0][2], scalar_int(1));
        assert_eq!(k.basis()[1][3], scalar_int(1));
        let inc = k.inclusion();
        assert_eq!(inc.codomain(), &dom);
        assert!(k.coords_in(&k.basis()[1]).is_some());
        assert!(k
            .coords_in(&[scalar_int(1), scalar_int(0), scalar_int(0), scalar_int(0)])
            .is_none());
    }

    #[test]
    fn cokernel_projects_relations_to_zero() {
        let dom = v(1);
        let cod = v(1);
        let f = map(&dom, &cod, &[(0, 0, 1), (1, 0, 2)]); // image = span(e0 + 2e1)
        let q = cokernel_sq(&f);
        assert_eq!(q.dim(), 3);
        let rel = f.matrix().column(0);
        assert!(q.project(&rel).iter().all(Scalar::is_zero));
        // lift of classes is supported away from the pivot coordinate
        let l = q.lift(&[scalar_int(1), scalar_int(0), scalar_int(0)]);
        assert!(q.project(&l) == vec![scalar_int(1), scalar_int(0), scalar_int(0)]);
    }

    #[test]
    fn full_space_projection_through_induce() {
        let s = v(1);
        let f = map(&s, &s, &[(0, 0, 1)]); // image = e0
        let q = cokernel_sq(&f);
        let ind = induce(&LinearMap::identity(&s), &Subquotient::full(&s), &q).unwrap();
        assert_eq!(ind.matrix().rows(), 3);
        assert_eq!(ind.matrix().cols(), 4);
        // surjective with kernel dim 1
        let (rank, ker) = crate::linalg::rank_kernel(ind.matrix());
        assert_eq!(rank, 3);
        assert_eq!(ker.len(), 1);
    }

    #[test]
    fn induce_rejects_ill_defined_maps_with_witness() {
        let s = v(1);
        let f = map(&s, &s, &[(0, 0, 1)]); // image = e0
        let q = cokernel_sq(&f);
        // g does not preserve the relation e0 -> e1
        let g = map(&s, &s, &[(1, 0, 1)]);
        match induce(&g, &q, &q) {
            Err(SpaceError::NotWellDefined(msg)) => assert!(msg.contains("x1")),
            other => panic!("expected NotWellDefined, got {other:?}"),
        }
    }

    #[test]
    fn induce_into_kernel_checks_membership() {
        let s = v(1);
        // cod kernel: kernel of projection onto e0 = span(e1,e2,e3)
        let proj = map(&s, &s, &[(0, 0, 1)]);
        let k = kernel_sq(&proj);
        // f maps everything to e1: lands in kernel
        let f = map(&s, &s, &[(1, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1)]);
        let ind = induce(&f, &Subquotient::full(&s), &k).unwrap();
        assert_eq!(ind.matrix().rows(), 3);
        // g maps e0 to e0: not in kernel
        let g = map(&s, &s, &[(0, 0, 1)]);
        assert!(matches!(
            induce(&g, &Subquotient::full(&s), &k),
            Err(SpaceError::NotWellDefined(_))
        ));
    }
}
