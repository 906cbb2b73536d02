use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::Scalar;

/// Shorthand for an integer-valued [`Scalar`].
pub fn scalar_int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// A sparse rational matrix.
///
/// Entries are keyed by `(row, col)` in a `BTreeMap`, so iteration order is
/// deterministic and zero entries are never stored: `set` removes the key when
/// handed a zero, and `add_to` drops the key when an accumulation cancels.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, scalar_int(1));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Set entry `(r, c)`; a zero value erases the entry.
    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), v);
        }
    }

    /// Add `v` into entry `(r, c)`, erasing the entry if the sum cancels.
    pub fn add_to(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((r, c)).or_insert_with(Scalar::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Rows as sorted `(col, value)` lists; empty rows are empty vectors.
    pub fn row_lists(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut out = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            out[r].push((c, v.clone()));
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::new(self.cols, self.rows);
        for (&(r, c), v) in &self.entries {
            t.entries.insert((c, r), v.clone());
        }
        t
    }

    /// Matrix–vector product; `v` must have length `cols`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (&(r, c), a) in &self.entries {
            if !v[c].is_zero() {
                out[r] += a * &v[c];
            }
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let rhs_rows = rhs.row_lists();
        let mut out = SparseMatrix::new(self.rows, rhs.cols);
        for (&(r, k), a) in &self.entries {
            for (c, b) in &rhs_rows[k] {
                out.add_to(r, *c, a * b);
            }
        }
        out
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i,j] * rhs`,
    /// i.e. row/column indices flatten left factor major.
    pub fn kronecker(&self, rhs: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::new(self.rows * rhs.rows, self.cols * rhs.cols);
        for (&(r, c), a) in &self.entries {
            for (&(rr, cc), b) in &rhs.entries {
                out.entries
                    .insert((r * rhs.rows + rr, c * rhs.cols + cc), a * b);
            }
        }
        out
    }

    /// The column `c` as a dense vector.
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.rows];
        for (&(r, cc), v) in self.entries.range((0, c)..(self.rows, self.cols)) {
            if cc == c {
                out[r] = v.clone();
            }
        }
        out
    }

    /// Build from dense columns (each of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> SparseMatrix {
        let mut m = SparseMatrix::new(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.entries.insert((r, c), v.clone());
                }
            }
        }
        m
    }
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseMatrix({}x{}, nnz={})",
            self.rows,
            self.cols,
            self.nnz()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn no_zero_entries_survive() {
        let mut m = SparseMatrix::new(2, 2);
        m.set(0, 0, scalar_int(3));
        m.set(0, 0, scalar_int(0));
        m.add_to(1, 1, scalar_int(5));
        m.add_to(1, 1, scalar_int(-5));
        assert_eq!(m.nnz(), 0);
    }

    #[test]
    fn mul_matches_mul_vec() {
        let mut a = SparseMatrix::new(2, 3);
        a.set(0, 0, scalar_int(1));
        a.set(0, 2, scalar_int(2));
        a.set(1, 1, scalar_int(-1));
        let mut b = SparseMatrix::new(3, 2);
        b.set(0, 1, scalar_int(4));
        b.set(2, 0, scalar_int(1));
        b.set(1, 0, scalar_int(7));
        let ab = a.mul(&b);
        for c in 0..2 {
            assert_eq!(ab.column(c), a.mul_vec(&b.column(c)));
        }
    }

    #[test]
    fn kronecker_orders_left_factor_major() {
        let mut a = SparseMatrix::new(1, 2);
        a.set(0, 0, scalar_int(2));
        a.set(0, 1, scalar_int(3));
        let b = SparseMatrix::identity(2);
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(k.cols(), 4);
        assert_eq!(k.get(0, 0), scalar_int(2));
        assert_eq!(k.get(1, 1), scalar_int(2));
        assert_eq!(k.get(0, 2), scalar_int(3));
        assert_eq!(k.get(1, 3), scalar_int(3));
    }
}
