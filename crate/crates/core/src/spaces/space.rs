//! Labeled finite-dimensional vector spaces.
//!
//! A [`Space`] is an ordered basis with a structural tag saying where it came
//! from: a graded piece, a dual, a binary tensor, an exterior square, or the
//! class space of a subquotient. Tags are what make map composition safe —
//! two maps compose only when the tags agree — while the labels exist for
//! reports and debugging.
//!
//! Structural conventions, fixed once:
//! * tensor bases flatten left factor major: index `(i, j) = i * dim2 + j`;
//! * `dual` collapses double duals (`S** = S`) and distributes over tensors
//!   (`(A ⊗ B)* = A* ⊗ B*`, same factor order), so adjoint-style reshapes
//!   land in the spaces the constructions expect;
//! * exterior squares enumerate pairs `(i, j)`, `i < j`, lexicographically.

use std::sync::Arc;

use super::ring::{GradedPiece, RingSpec};

/// Structural identity of a space.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum SpaceTag {
    Graded(RingSpec, i64),
    Dual(Box<SpaceTag>),
    Tensor(Box<SpaceTag>, Box<SpaceTag>),
    Wedge2(Box<SpaceTag>),
    /// Class space of a subquotient: identified by its ambient tag, the
    /// presentation kind, and a fingerprint of the presenting matrix.
    Classes {
        ambient: Box<SpaceTag>,
        kernel: bool,
        fingerprint: u64,
    },
}

struct SpaceData {
    tag: SpaceTag,
    labels: Vec<String>,
    children: Vec<Space>,
}

/// An ordered, labeled basis with structural identity. Cheap to clone.
#[derive(Clone)]
pub struct Space(Arc<SpaceData>);

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.0.tag == other.0.tag
    }
}
impl Eq for Space {}

impl std::fmt::Debug for Space {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Space(dim={}, {:?})", self.dim(), self.0.tag)
    }
}

impl Space {
    fn build(tag: SpaceTag, labels: Vec<String>, children: Vec<Space>) -> Space {
        debug_assert!(
            {
                let mut sorted = labels.clone();
                sorted.sort();
                sorted.dedup();
                sorted.len() == labels.len()
            },
            "basis labels must be pairwise distinct"
        );
        Space(Arc::new(SpaceData {
            tag,
            labels,
            children,
        }))
    }

    /// The space spanned by a graded piece's canonical basis.
    pub fn graded(piece: &GradedPiece) -> Space {
        let class = !matches!(piece.ring(), RingSpec::P3);
        let labels = piece
            .basis()
            .iter()
            .map(|m| {
                if class {
                    format!("[{m}]")
                } else {
                    m.to_string()
                }
            })
            .collect();
        Space::build(
            SpaceTag::Graded(piece.ring().clone(), piece.degree()),
            labels,
            Vec::new(),
        )
    }

    /// Class space of a subquotient presentation (labels supplied by the
    /// subquotient, which knows whether classes are cosets or kernel vectors).
    pub(super) fn classes(
        ambient: &Space,
        kernel: bool,
        fingerprint: u64,
        labels: Vec<String>,
    ) -> Space {
        Space::build(
            SpaceTag::Classes {
                ambient: Box::new(ambient.tag().clone()),
                kernel,
                fingerprint,
            },
            labels,
            Vec::new(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn tag(&self) -> &SpaceTag {
        &self.0.tag
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    /// The dual space. Double duals collapse and tensors distribute, so this
    /// is an involution on the spaces built here.
    pub fn dual(&self) -> Space {
        match &self.0.tag {
            SpaceTag::Dual(_) => self.0.children[0].clone(),
            SpaceTag::Tensor(..) => tensor(&self.0.children[0].dual(), &self.0.children[1].dual()),
            _ => {
                let labels = self.0.labels.iter().map(|l| format!("({l})*")).collect();
                Space::build(
                    SpaceTag::Dual(Box::new(self.0.tag.clone())),
                    labels,
                    vec![self.clone()],
                )
            }
        }
    }

    /// For a tensor space, its two factors.
    pub fn tensor_factors(&self) -> Option<(&Space, &Space)> {
        match &self.0.tag {
            SpaceTag::Tensor(..) => Some((&self.0.children[0], &self.0.children[1])),
            _ => None,
        }
    }
}

/// Binary tensor product; basis order is left factor major.
pub fn tensor(a: &Space, b: &Space) -> Space {
    let mut labels = Vec::with_capacity(a.dim() * b.dim());
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(format!("({la})⊗({lb})"));
        }
    }
    Space::build(
        SpaceTag::Tensor(Box::new(a.tag().clone()), Box::new(b.tag().clone())),
        labels,
        vec![a.clone(), b.clone()],
    )
}

/// Exterior square: basis `(i, j)` with `i < j` in lexicographic order.
pub fn wedge2(s: &Space) -> Space {
    let mut labels = Vec::new();
    for i in 0..s.dim() {
        for j in (i + 1)..s.dim() {
            labels.push(format!("({})∧({})", s.label(i), s.label(j)));
        }
    }
    Space::build(
        SpaceTag::Wedge2(Box::new(s.tag().clone())),
        labels,
        vec![s.clone()],
    )
}

/// Enumerate the `(i, j)`, `i < j` index pairs of [`wedge2`] in basis order.
pub fn wedge2_pairs(dim: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(dim * (dim - 1) / 2);
    for i in 0..dim {
        for j in (i + 1)..dim {
            out.push((i, j));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::ring::{graded_piece, QuarticForm};

    fn v1() -> Space {
        Space::graded(&graded_piece(&RingSpec::P3, 1).unwrap())
    }

    #[test]
    fn double_dual_collapses() {
        let s = v1();
        assert_eq!(s.dual().dual(), s);
        assert_ne!(s.dual(), s);
    }

    #[test]
    fn dual_distributes_over_tensor() {
        let s = v1();
        let t = tensor(&s, &s.dual());
        let td = t.dual();
        assert_eq!(td, tensor(&s.dual(), &s));
    }

    #[test]
    fn tensor_flattens_left_major() {
        let s = v1();
        let t = tensor(&s, &s);
        assert_eq!(t.dim(), 16);
        assert_eq!(t.label(1), "(x0)⊗(x1)");
        assert_eq!(t.label(4), "(x1)⊗(x0)");
    }

    #[test]
    fn wedge_has_binomial_dimension_and_lex_pairs() {
        let s = v1();
        let w = wedge2(&s);
        assert_eq!(w.dim(), 6);
        assert_eq!(
            wedge2_pairs(4),
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(w.label(0), "(x0)∧(x1)");
    }

    #[test]
    fn same_quotient_built_twice_is_the_same_space() {
        let ring = RingSpec::Surface(QuarticForm::fermat());
        let a = Space::graded(&graded_piece(&ring, 4).unwrap());
        let b = Space::graded(&graded_piece(&ring, 4).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.label(0), "[x0^3*x1]");
    }
}
