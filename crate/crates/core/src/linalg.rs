//! Dense exact linear algebra over GF(q).
//!
//! Every subspace is canonically represented by the non-zero rows of its
//! reduced row echelon form, so subspace equality is matrix equality.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::Field;

/// Row-major matrix of field element encodings.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} {}x{} ", self.field, self.rows, self.cols)?;
        f.debug_list().entries(self.row_iter()).finish()
    }
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    /// Reduced row echelon form, same shape as the input (zero rows last).
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { expected: rows * cols, found: data.len() });
        }
        for &v in &data {
            field.check(v)?;
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows of length `cols`, validating every entry.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, cols: usize, rows: &[R]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub(crate) fn from_rows_unchecked(field: &Field, cols: usize, rows: Vec<Vec<u32>>) -> Self {
        let n = rows.len();
        let data: Vec<u32> = rows.into_iter().flatten().collect();
        debug_assert_eq!(data.len(), n * cols);
        Matrix { field: field.clone(), rows: n, cols, data }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(<[u32]>::to_vec).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    /// The columns listed in `cols`, in that order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: rows.len(), cols: self.cols, data }
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for (k, &a) in self.row(r).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, c)));
                }
            }
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v` of length `rows`.
    pub fn combine_rows(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                axpy(f, &mut out, a, self.row(r));
            }
        }
        out
    }

    fn compatible(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::LengthMismatch { expected: self.cols, found: other.cols });
        }
        Ok(())
    }

    /// Gauss-Jordan elimination to the unique reduced row echelon form.
    pub fn rref(&self) -> Echelon {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for c in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(pr) = (rank..m.rows).find(|&r| m.get(r, c) != 0) else {
                continue;
            };
            m.swap_rows(rank, pr);
            let inv = f.inv(m.get(rank, c)).expect("pivot is non-zero");
            m.scale_row(rank, inv);
            let pivot_row = m.row(rank).to_vec();
            for r in 0..m.rows {
                if r != rank {
                    let factor = m.get(r, c);
                    if factor != 0 {
                        let neg = f.neg(factor);
                        let cols = m.cols;
                        axpy(f, &mut m.data[r * cols..(r + 1) * cols], neg, &pivot_row);
                    }
                }
            }
            pivots.push(c);
            rank += 1;
        }
        Echelon { matrix: m, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// RREF with zero rows removed: the canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let e = self.rref();
        let rows: Vec<usize> = (0..e.rank).collect();
        e.matrix.select_rows(&rows)
    }

    /// Canonical basis of `{x : self * x^T = 0}`.
    pub fn kernel(&self) -> Matrix {
        let f = &self.field;
        let e = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &e.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.cols - e.rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0; self.cols];
            v[free] = 1;
            for (i, &p) in e.pivots.iter().enumerate() {
                v[p] = f.neg(e.matrix.get(i, free));
            }
            rows.push(v);
        }
        Matrix::from_rows_unchecked(f, self.cols, rows).row_basis()
    }

    /// Canonical basis of the intersection of the two row spaces, using the
    /// Zassenhaus block matrix `[A A; B 0]`.
    pub fn row_space_intersect(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let n = self.cols;
        let mut rows = Vec::with_capacity(self.rows + other.rows);
        for r in self.row_iter() {
            let mut v = r.to_vec();
            v.extend_from_slice(r);
            rows.push(v);
        }
        for r in other.row_iter() {
            let mut v = r.to_vec();
            v.extend(std::iter::repeat_n(0, n));
            rows.push(v);
        }
        let e = Matrix::from_rows_unchecked(&self.field, 2 * n, rows).rref();
        let inter: Vec<Vec<u32>> = (0..e.rank)
            .filter(|&i| e.pivots[i] >= n)
            .map(|i| e.matrix.row(i)[n..].to_vec())
            .collect();
        Ok(Matrix::from_rows_unchecked(&self.field, n, inter).row_basis())
    }

    /// A solution `x` of `self * x^T = b^T` with free variables set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::LengthMismatch { expected: self.rows, found: b.len() });
        }
        for &v in b {
            self.field.check(v)?;
        }
        let mut rows = Vec::with_capacity(self.rows);
        for (r, &bv) in b.iter().enumerate() {
            let mut v = self.row(r).to_vec();
            v.push(bv);
            rows.push(v);
        }
        let e = Matrix::from_rows_unchecked(&self.field, self.cols + 1, rows).rref();
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0; self.cols];
        for (i, &p) in e.pivots.iter().enumerate() {
            x[p] = e.matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, s: u32) {
        let f = self.field.clone();
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = f.mul(*v, s);
        }
    }
}

/// `y += a * x`, entrywise.
#[inline]
pub fn axpy(f: &Field, y: &mut [u32], a: u32, x: &[u32]) {
    if a == 1 {
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = f.add(*yi, xi);
        }
    } else {
        for (yi, &xi) in y.iter_mut().zip(x) {
            if xi != 0 {
                *yi = f.add(*yi, f.mul(a, xi));
            }
        }
    }
}

/// Reduces `v` against a basis in RREF (given with its pivots); the result
/// is zero exactly when `v` lies in the row space.
pub fn reduce(basis: &Matrix, pivots: &[usize], v: &mut [u32]) {
    let f = basis.field();
    for (i, &p) in pivots.iter().enumerate() {
        let c = v[p];
        if c != 0 {
            axpy(f, v, f.neg(c), basis.row(i));
        }
    }
}

/// A subspace grown one vector at a time, kept fully reduced so membership
/// is a single reduction pass.
#[derive(Debug, Clone)]
pub struct Span {
    field: Field,
    n: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(field: &Field, n: usize) -> Self {
        Span { field: field.clone(), n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduced(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = w[p];
            if c != 0 {
                axpy(f, &mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduced(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        debug_assert_eq!(v.len(), self.n);
        let f = self.field.clone();
        let mut w = self.reduced(v);
        let Some(p) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[p]).expect("non-zero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in &mut self.rows {
            let c = row[p];
            if c != 0 {
                axpy(&f, row, f.neg(c), &w);
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    /// The canonical RREF basis.
    pub fn into_matrix(self) -> Matrix {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let mut rows = self.rows;
        let sorted = order.into_iter().map(|i| std::mem::take(&mut rows[i])).collect();
        Matrix::from_rows_unchecked(&self.field, self.n, sorted)
    }
}

/// Coefficient vectors of length `s` whose first non-zero entry is 1, one
/// per projective point, in a fixed order.
pub fn projective_coefficients(field: &Field, s: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
    let q = field.q() as u64;
    (0..s).flat_map(move |lead| {
        let free = (s - lead - 1) as u32;
        (0..q.pow(free)).map(move |mut idx| {
            let mut c = vec![0; s];
            c[lead] = 1;
            for x in c[lead + 1..].iter_mut() {
                *x = (idx % q) as u32;
                idx /= q;
            }
            c
        })
    })
}

/// Leading column of each row of a matrix already in RREF without zero rows.
pub fn pivots_of(basis: &Matrix) -> Vec<usize> {
    basis
        .row_iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("basis rows are non-zero"))
        .collect()
}
