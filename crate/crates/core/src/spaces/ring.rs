//! Graded rings: the polynomial ring in `x0..x3` and its quotients by one
//! quartic (a surface) or a pair of quartics (a curve).
//!
//! A graded piece of a quotient carries a canonical monomial basis: echelonize
//! the degree-`d` piece of the ideal over the full monomial basis and keep the
//! non-pivot monomials. Reduction against that echelon form gives every
//! element a canonical representative supported on the basis monomials, which
//! is what makes all downstream matrices well defined.

use std::fmt;

use num_traits::Zero;
use rand::Rng;

use crate::linalg::{scalar_int, Rref, Scalar};

use super::SpaceError;

/// A monomial in `x0..x3`, stored as its exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub [u8; 4]);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + other.0[i]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == [0; 4] {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All degree-`d` monomials in graded-lex order with `x0 > x1 > x2 > x3`
/// (descending: `x0^d` first). Empty for negative `d`.
pub fn monomials(d: i64) -> Vec<Monomial> {
    if d < 0 {
        return Vec::new();
    }
    let d = d as u8;
    let mut out = Vec::new();
    for e0 in (0..=d).rev() {
        for e1 in (0..=d - e0).rev() {
            for e2 in (0..=d - e0 - e1).rev() {
                out.push(Monomial([e0, e1, e2, d - e0 - e1 - e2]));
            }
        }
    }
    out
}

/// Number of degree-`d` monomials: the binomial `C(d+3, 3)`.
pub fn dim_polynomials(d: i64) -> usize {
    if d < 0 {
        0
    } else {
        let d = d as usize;
        (d + 1) * (d + 2) * (d + 3) / 6
    }
}

/// A nonzero homogeneous quartic form with rational coefficients, normalized:
/// terms sorted by monomial (graded-lex descending), no zero coefficients, no
/// repeated monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuarticForm {
    terms: Vec<(Scalar, Monomial)>,
}

impl QuarticForm {
    pub fn new(raw: Vec<(Scalar, Monomial)>) -> Result<QuarticForm, SpaceError> {
        let mut merged: std::collections::BTreeMap<Monomial, Scalar> = Default::default();
        for (c, m) in raw {
            if m.degree() != 4 {
                return Err(SpaceError::InvalidRing(format!(
                    "term {m} has degree {}, expected 4",
                    m.degree()
                )));
            }
            let e = merged.entry(m).or_insert_with(Scalar::zero);
            *e += c;
            if e.is_zero() {
                merged.remove(&m);
            }
        }
        if merged.is_empty() {
            return Err(SpaceError::InvalidRing(
                "the zero form is not allowed".into(),
            ));
        }
        let mut terms: Vec<(Scalar, Monomial)> = merged.into_iter().map(|(m, c)| (c, m)).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.1)); // descending graded-lex
        Ok(QuarticForm { terms })
    }

    /// `x0^4 + x1^4 + x2^4 + x3^4` — the smooth default.
    pub fn fermat() -> QuarticForm {
        let terms = (0..4)
            .map(|i| {
                let mut e = [0u8; 4];
                e[i] = 4;
                (scalar_int(1), Monomial(e))
            })
            .collect();
        QuarticForm::new(terms).expect("fermat is a valid form")
    }

    /// A dense random quartic: every degree-4 monomial gets an integer
    /// coefficient uniform in `[-9, 9]`; the all-zero draw is resampled.
    pub fn random(rng: &mut impl Rng) -> QuarticForm {
        loop {
            let terms: Vec<(Scalar, Monomial)> = monomials(4)
                .into_iter()
                .map(|m| (scalar_int(rng.gen_range(-9..=9)), m))
                .filter(|(c, _)| !c.is_zero())
                .collect();
            if let Ok(f) = QuarticForm::new(terms) {
                return f;
            }
        }
    }

    /// Parse the one-term-per-line format: `<coeff> <e0> <e1> <e2> <e3>` with
    /// integer fields, `#` starting a comment, blank lines ignored.
    pub fn parse(text: &str) -> Result<QuarticForm, SpaceError> {
        let mut terms = Vec::new();
        for (idx, raw_line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(SpaceError::Parse {
                    line: line_no,
                    msg: format!(
                        "expected 5 fields `coeff e0 e1 e2 e3`, got {}",
                        fields.len()
                    ),
                });
            }
            let coeff: i64 = fields[0].parse().map_err(|_| SpaceError::Parse {
                line: line_no,
                msg: format!("coefficient `{}` is not an integer", fields[0]),
            })?;
            let mut e = [0u8; 4];
            for (k, field) in fields[1..].iter().enumerate() {
                let v: u8 = field.parse().map_err(|_| SpaceError::Parse {
                    line: line_no,
                    msg: format!("exponent `{field}` is not a small nonnegative integer"),
                })?;
                e[k] = v;
            }
            let m = Monomial(e);
            if m.degree() != 4 {
                return Err(SpaceError::Parse {
                    line: line_no,
                    msg: format!("exponents sum to {}, expected 4", m.degree()),
                });
            }
            terms.push((scalar_int(coeff), m));
        }
        QuarticForm::new(terms).map_err(|e| match e {
            SpaceError::InvalidRing(msg) => SpaceError::Parse { line: 0, msg },
            other => other,
        })
    }

    pub fn terms(&self) -> &[(Scalar, Monomial)] {
        &self.terms
    }

    /// Coefficient vector over the degree-4 monomial basis.
    pub fn coeff_vector(&self) -> Vec<Scalar> {
        let monos = monomials(4);
        let mut v = vec![Scalar::zero(); monos.len()];
        for (c, m) in &self.terms {
            let i = monos
                .binary_search_by(|probe| m.cmp(probe))
                .expect("degree-4 monomial");
            v[i] = c.clone();
        }
        v
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c == &scalar_int(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// The graded rings in play.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RingSpec {
    /// The full polynomial ring in `x0..x3`.
    P3,
    /// Quotient by one nonzero quartic.
    Surface(QuarticForm),
    /// Quotient by a pair of quartics, required to be linearly independent.
    Curve(QuarticForm, QuarticForm),
}

impl RingSpec {
    pub fn validate(&self) -> Result<(), SpaceError> {
        match self {
            RingSpec::P3 | RingSpec::Surface(_) => Ok(()),
            RingSpec::Curve(f1, f2) => {
                let rows = vec![
                    sparse_row(&f1.coeff_vector()),
                    sparse_row(&f2.coeff_vector()),
                ];
                if Rref::of_rows(rows, dim_polynomials(4)).rank() != 2 {
                    return Err(SpaceError::InvalidRing(
                        "curve forms are linearly dependent".into(),
                    ));
                }
                Ok(())
            }
        }
    }

    fn ideal_generators(&self) -> Vec<&QuarticForm> {
        match self {
            RingSpec::P3 => Vec::new(),
            RingSpec::Surface(f) => vec![f],
            RingSpec::Curve(f1, f2) => vec![f1, f2],
        }
    }

    /// Expected dimension of the degree-`d` piece: for the curve this is the
    /// Koszul count `S_d - 2 S_{d-4} + S_{d-8}` that a regular pair must hit.
    pub fn expected_dim(&self, d: i64) -> usize {
        match self {
            RingSpec::P3 => dim_polynomials(d),
            RingSpec::Surface(_) => dim_polynomials(d) - dim_polynomials(d - 4),
            RingSpec::Curve(..) => {
                dim_polynomials(d) + dim_polynomials(d - 8) - 2 * dim_polynomials(d - 4)
            }
        }
    }
}

fn sparse_row(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

/// The degree-`d` piece of a graded ring, with its canonical basis and
/// reduction data. Negative degrees give the zero space.
pub struct GradedPiece {
    ring: RingSpec,
    degree: i64,
    monos: Vec<Monomial>,
    ideal: Rref,
    basis: Vec<Monomial>,
    basis_cols: Vec<usize>,
}

impl GradedPiece {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Canonical basis: the non-pivot monomials of the ideal piece's echelon
    /// form (all monomials for the polynomial ring itself).
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Canonical coordinates of (the class of) a degree-`d` monomial.
    pub fn reduce_monomial(&self, m: &Monomial) -> Vec<Scalar> {
        assert_eq!(m.degree(), self.degree, "monomial degree mismatch");
        let idx = self
            .monos
            .binary_search_by(|probe| m.cmp(probe))
            .expect("monomial of the right degree");
        let mut v = vec![Scalar::zero(); self.monos.len()];
        v[idx] = scalar_int(1);
        self.reduce_full(&v)
    }

    /// Canonical coordinates of a vector given over the *full* monomial basis.
    pub fn reduce_full(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.ideal.reduce(v);
        self.basis_cols
            .iter()
            .map(|&c| reduced[c].clone())
            .collect()
    }

    /// Is the full-monomial-basis vector `v` in the ideal piece?
    pub fn in_ideal(&self, v: &[Scalar]) -> bool {
        self.ideal.contains(v)
    }
}

/// Build the degree-`d` piece of `ring`, certifying the expected dimension.
///
/// For a curve the Koszul count is an a-priori upper bound for the quotient
/// dimension (the pair's syzygies always inject into the row relations), so a
/// deviation means the pair is not regular in this degree and is reported as
/// [`SpaceError::NotRegularPair`].
pub fn graded_piece(ring: &RingSpec, d: i64) -> Result<GradedPiece, SpaceError> {
    ring.validate()?;
    let monos = monomials(d);
    let index = |m: &Monomial| -> usize {
        monos
            .binary_search_by(|probe| m.cmp(probe))
            .expect("indexed monomial")
    };
    let mut gen_rows = Vec::new();
    for f in ring.ideal_generators() {
        for m in monomials(d - 4) {
            let mut row = vec![Scalar::zero(); monos.len()];
            for (c, fm) in f.terms() {
                row[index(&fm.mul(&m))] += c;
            }
            gen_rows.push(sparse_row(&row));
        }
    }
    let ideal = Rref::of_rows(gen_rows, monos.len());
    let basis_cols = ideal.non_pivot_cols();
    let basis: Vec<Monomial> = basis_cols.iter().map(|&c| monos[c]).collect();
    let piece = GradedPiece {
        ring: ring.clone(),
        degree: d,
        monos,
        ideal,
        basis,
        basis_cols,
    };
    if piece.dim() != ring.expected_dim(d) {
        match ring {
            RingSpec::Curve(..) => return Err(SpaceError::NotRegularPair { degree: d }),
            // Multiplication by a nonzero form is injective on a polynomial
            // ring over a field, so these counts cannot deviate.
            _ => unreachable!("dimension of a principal quotient piece deviated"),
        }
    }
    Ok(piece)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn monomial_order_is_graded_lex_descending() {
        let m2 = monomials(2);
        assert_eq!(m2.len(), 10);
        assert_eq!(m2[0], Monomial([2, 0, 0, 0]));
        assert_eq!(m2[1], Monomial([1, 1, 0, 0]));
        assert_eq!(m2[9], Monomial([0, 0, 0, 2]));
        let mut sorted = m2.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(m2, sorted);
    }

    #[test]
    fn polynomial_dims_are_binomials() {
        for (d, n) in [(0, 1), (1, 4), (2, 10), (3, 20), (4, 35), (5, 56), (6, 84)] {
            assert_eq!(dim_polynomials(d), n);
            assert_eq!(monomials(d).len(), n);
        }
        assert_eq!(dim_polynomials(-1), 0);
    }

    #[test]
    fn surface_piece_dims_follow_the_quadric_count() {
        let ring = RingSpec::Surface(QuarticForm::fermat());
        for d in 1..=10 {
            let piece = graded_piece(&ring, d).unwrap();
            assert_eq!(piece.dim() as i64, 2 * d * d + 2, "degree {d}");
        }
        assert_eq!(graded_piece(&ring, -2).unwrap().dim(), 0);
    }

    #[test]
    fn surface_reduction_kills_the_form() {
        let f = QuarticForm::fermat();
        let ring = RingSpec::Surface(f.clone());
        let piece = graded_piece(&ring, 4).unwrap();
        assert!(piece.in_ideal(&f.coeff_vector()));
        let reduced = piece.reduce_full(&f.coeff_vector());
        assert!(reduced.iter().all(Scalar::is_zero));
    }

    #[test]
    fn random_quartic_is_dense_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let f = QuarticForm::random(&mut rng);
        assert!(f.terms().len() > 20, "a dense draw has most of 35 terms");
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        assert_eq!(f, QuarticForm::random(&mut rng2));
    }

    #[test]
    fn dependent_curve_pair_is_rejected() {
        let f = QuarticForm::fermat();
        let ring = RingSpec::Curve(f.clone(), f);
        assert!(matches!(ring.validate(), Err(SpaceError::InvalidRing(_))));
        assert!(graded_piece(&ring, 4).is_err());
    }

    #[test]
    fn parse_accepts_comments_and_rejects_bad_lines() {
        let good = "# fermat\n1 4 0 0 0\n1 0 4 0 0\n1 0 0 4 0\n1 0 0 0 4\n";
        assert_eq!(QuarticForm::parse(good).unwrap(), QuarticForm::fermat());
        let bad_degree = "1 3 0 0 0\n";
        match QuarticForm::parse(bad_degree) {
            Err(SpaceError::Parse { line: 1, .. }) => {}
            other => panic!("expected parse error, got {other:?}"),
        }
        let bad_fields = "1 4 0 0\n";
        assert!(matches!(
            QuarticForm::parse(bad_fields),
            Err(SpaceError::Parse { line: 1, .. })
        ));
        let cancels = "1 4 0 0 0\n-1 4 0 0 0\n";
        assert!(QuarticForm::parse(cancels).is_err());
    }
}
