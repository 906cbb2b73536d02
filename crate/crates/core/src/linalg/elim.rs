//! Deterministic fraction-free elimination.
//!
//! Rows are cleared to primitive integer vectors up front; elimination steps
//! are integer cross-multiplications followed by division by the row content,
//! so no rational arithmetic happens until the final normalization into
//! reduced echelon form. The pivot rule is fixed: columns are processed in
//! ascending order and, among the rows whose leading column is the current
//! one, the sparsest row wins (ties broken by first occurrence). The output
//! is therefore a deterministic function of the input matrix alone.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Scalar, SparseMatrix};

/// Sorted sparse integer row: `(column, coefficient)` with nonzero entries.
type IRow = Vec<(usize, BigInt)>;

/// Clear denominators and divide by the content, making the leading
/// coefficient positive.
fn primitive(mut row: Vec<(usize, Scalar)>) -> IRow {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return Vec::new();
    }
    let mut lcm = BigInt::from(1);
    for (_, v) in &row {
        lcm = lcm.lcm(v.denom());
    }
    let mut out: IRow = row
        .into_iter()
        .map(|(c, v)| (c, v.numer() * (&lcm / v.denom())))
        .collect();
    reduce_content(&mut out);
    out
}

fn reduce_content(row: &mut IRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// `dst = a*dst - b*src`, merged by column, primitive-reduced.
fn cross_eliminate(dst: &IRow, src: &IRow, a: &BigInt, b: &BigInt) -> IRow {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut i, mut j) = (0, 0);
    while i < dst.len() || j < src.len() {
        let next = match (dst.get(i), src.get(j)) {
            (Some((cd, vd)), Some((cs, vs))) => {
                if cd < cs {
                    i += 1;
                    (*cd, a * vd)
                } else if cs < cd {
                    j += 1;
                    (*cs, -(b * vs))
                } else {
                    let v = a * vd - b * vs;
                    i += 1;
                    j += 1;
                    (*cd, v)
                }
            }
            (Some((cd, vd)), None) => {
                i += 1;
                (*cd, a * vd)
            }
            (None, Some((cs, vs))) => {
                j += 1;
                (*cs, -(b * vs))
            }
            (None, None) => unreachable!(),
        };
        if !next.1.is_zero() {
            out.push(next);
        }
    }
    reduce_content(&mut out);
    out
}

/// Reduced row echelon form of the row space of a matrix.
///
/// `rows[i]` is the pivot row for `pivot_cols[i]`: its pivot entry is 1 and it
/// vanishes at every other pivot column. Reduction against an `Rref` is how
/// quotient spaces compute canonical representatives, so this type is reused
/// throughout the graded-ring layer.
#[derive(Clone, Debug)]
pub struct Rref {
    cols: usize,
    pivot_cols: Vec<usize>,
    rows: Vec<Vec<(usize, Scalar)>>,
}

impl Rref {
    /// Echelonize the rows of `m`.
    pub fn of_matrix(m: &SparseMatrix) -> Rref {
        Rref::of_rows(m.row_lists(), m.cols())
    }

    /// Echelonize sparse rows (each sorted by column) over `cols` columns.
    pub fn of_rows(rows: Vec<Vec<(usize, Scalar)>>, cols: usize) -> Rref {
        // Bucket rows by leading column.
        let mut buckets: BTreeMap<usize, Vec<IRow>> = BTreeMap::new();
        for row in rows {
            let irow = primitive(row);
            if let Some(&(lead, _)) = irow.first() {
                buckets.entry(lead).or_default().push(irow);
            }
        }
        let mut pivots: Vec<(usize, IRow)> = Vec::new();
        while let Some((&col, _)) = buckets.iter().next() {
            let mut rows_here = buckets.remove(&col).expect("bucket exists");
            let mut best = 0;
            for i in 1..rows_here.len() {
                if rows_here[i].len() < rows_here[best].len() {
                    best = i;
                }
            }
            let piv = rows_here.swap_remove(best);
            let a = piv[0].1.clone();
            for row in rows_here {
                let b = row[0].1.clone();
                let reduced = cross_eliminate(&row, &piv, &a, &b);
                if let Some(&(lead, _)) = reduced.first() {
                    buckets.entry(lead).or_default().push(reduced);
                }
            }
            pivots.push((col, piv));
        }

        // Back-substitution into reduced form, with rational normalization.
        let mut rat_rows: Vec<Vec<(usize, Scalar)>> = pivots
            .iter()
            .map(|(_, row)| {
                let inv = Scalar::from_integer(row[0].1.clone());
                row.iter()
                    .map(|(c, v)| (*c, Scalar::from_integer(v.clone()) / &inv))
                    .collect()
            })
            .collect();
        for i in (0..rat_rows.len()).rev() {
            let (col, _) = pivots[i];
            for j in 0..i {
                let coeff = rat_rows[j]
                    .iter()
                    .find(|(c, _)| *c == col)
                    .map(|(_, v)| v.clone());
                if let Some(coeff) = coeff {
                    let lower = rat_rows[i].clone();
                    let upper = &mut rat_rows[j];
                    let mut merged: BTreeMap<usize, Scalar> = upper.drain(..).collect();
                    for (c, v) in lower {
                        let e = merged.entry(c).or_insert_with(Scalar::zero);
                        *e -= &coeff * &v;
                        if e.is_zero() {
                            merged.remove(&c);
                        }
                    }
                    *upper = merged.into_iter().collect();
                }
            }
        }
        Rref {
            cols,
            pivot_cols: pivots.into_iter().map(|(c, _)| c).collect(),
            rows: rat_rows,
        }
    }

    /// Echelonize the *columns* of `m` (i.e. the image of the map it
    /// represents, expressed inside the codomain's coordinates).
    pub fn of_image(m: &SparseMatrix) -> Rref {
        Rref::of_matrix(&m.transpose())
    }

    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    pub fn non_pivot_cols(&self) -> Vec<usize> {
        let mut piv = self.pivot_cols.iter().copied().peekable();
        let mut out = Vec::with_capacity(self.cols - self.pivot_cols.len());
        for c in 0..self.cols {
            if piv.peek() == Some(&c) {
                piv.next();
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Canonical representative of `v` modulo the row space: pivot
    /// coordinates are eliminated, leaving support on non-pivot columns only.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = v.to_vec();
        for (i, &col) in self.pivot_cols.iter().enumerate() {
            if out[col].is_zero() {
                continue;
            }
            let coeff = std::mem::replace(&mut out[col], Scalar::zero());
            for (c, rv) in &self.rows[i] {
                if *c == col {
                    continue;
                }
                out[*c] -= &coeff * rv;
            }
        }
        out
    }

    /// Does `v` lie in the row space?
    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// The canonical kernel basis of the matrix whose rows were echelonized:
    /// one vector per non-pivot (free) column `j`, with entry 1 at `j`, zero
    /// at every other free column, and `-rref[i][j]` at pivot column `i`.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let free = self.non_pivot_cols();
        let mut by_free: Vec<Vec<Scalar>> = free
            .iter()
            .map(|&j| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[j] = scalar_one();
                v
            })
            .collect();
        let free_pos: BTreeMap<usize, usize> =
            free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        for (i, &pcol) in self.pivot_cols.iter().enumerate() {
            for (c, v) in &self.rows[i] {
                if let Some(&k) = free_pos.get(c) {
                    by_free[k][pcol] = -v.clone();
                }
            }
        }
        by_free
    }
}

fn scalar_one() -> Scalar {
    Scalar::from_integer(BigInt::from(1))
}

/// Exact rank and canonical kernel basis of `m`.
///
/// The kernel basis is the reduced-echelon nullspace basis: deterministic,
/// one vector per free column in ascending column order.
pub fn rank_kernel(m: &SparseMatrix) -> (usize, Vec<Vec<Scalar>>) {
    let r = Rref::of_matrix(m);
    (r.rank(), r.kernel_basis())
}
