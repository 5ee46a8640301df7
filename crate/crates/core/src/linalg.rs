//! Dense linear algebra over a [`Field`].
//!
//! All elimination uses one pivot rule: columns are scanned left to right and
//! the pivot is the first row (top-down, among rows not yet used) holding a
//! nonzero entry. Kernels, images, particular solutions, sections and
//! quotient coordinates are therefore reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.data[r * self.cols..(r + 1) * self.cols]
                .iter()
                .map(|x| format!("{x:?}"))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {}x{} matrix",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_negligible)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length does not match columns");
        (0..self.rows)
            .map(|r| dot(self.row(r), v))
            .collect()
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: sub(&self.data, &other.data),
        }
    }

    /// Entrywise equality under [`Field::is_negligible`].
    pub fn approx_eq(&self, other: &Matrix<T>) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.sub(other).is_zero()
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }
}

pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn add<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale<T: Field>(s: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| s.clone() * x.clone()).collect()
}

/// `acc += s * v`
pub fn axpy<T: Field>(acc: &mut [T], s: &T, v: &[T]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + s.clone() * x.clone();
        }
    }
}

pub fn is_zero_vec<T: Field>(v: &[T]) -> bool {
    v.iter().all(Field::is_negligible)
}

pub fn unit<T: Field>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

/// Reduced row echelon form and the pivot columns, in increasing order.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_negligible()) else {
            continue;
        };
        if p != row {
            for c in 0..a.cols {
                a.data.swap(p * a.cols + c, row * a.cols + c);
            }
        }
        let inv = T::one() / a.get(row, col).clone();
        for c in 0..a.cols {
            let v = a.get(row, c).clone() * inv.clone();
            a.set(row, c, v);
        }
        a.set(row, col, T::one());
        let pivot_row: Vec<T> = a.row(row).to_vec();
        for r in 0..a.rows {
            if r == row {
                continue;
            }
            let f = a.get(r, col).clone();
            if f.is_zero() {
                continue;
            }
            for (c, p) in pivot_row.iter().enumerate() {
                let v = a.get(r, c).clone() - f.clone() * p.clone();
                a.set(r, c, v);
            }
            a.set(r, col, T::zero());
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// A list of linearly independent vectors in a fixed ambient space.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T> {
    ambient_dim: usize,
    vectors: Vec<Vec<T>>,
}

impl<T: Field> Subspace<T> {
    /// Fails with [`Error::BadBasis`] when the vectors are dependent.
    pub fn new(ambient_dim: usize, vectors: Vec<Vec<T>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: v.len(),
            });
        }
        let s = Self {
            ambient_dim,
            vectors,
        };
        if s.as_matrix().rank() != s.vectors.len() {
            return Err(Error::BadBasis);
        }
        Ok(s)
    }

    /// The span of arbitrary vectors, keeping the first independent ones.
    pub fn span(ambient_dim: usize, vectors: &[Vec<T>]) -> Result<Self> {
        let m = Matrix::from_columns(ambient_dim, vectors)?;
        let (_, pivots) = rref(&m);
        Ok(Self {
            ambient_dim,
            vectors: pivots.iter().map(|&p| vectors[p].clone()).collect(),
        })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn whole(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: (0..ambient_dim).map(|i| unit(ambient_dim, i)).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// Basis vectors as columns of an `ambient_dim x dim` matrix.
    pub fn as_matrix(&self) -> Matrix<T> {
        Matrix::from_columns(self.ambient_dim, &self.vectors).expect("lengths checked")
    }

    /// Coordinates of `v` in this basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        solve_particular(&self.as_matrix(), v).ok().flatten()
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Equality as subspaces (not as bases).
    pub fn same_span(&self, other: &Subspace<T>) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.vectors.iter().all(|v| self.contains(v))
    }
}

#[derive(Debug, Clone)]
pub struct KernelImage<T> {
    pub rank: usize,
    pub kernel: Subspace<T>,
    pub image: Subspace<T>,
}

pub fn rank_kernel_image<T: Field>(m: &Matrix<T>) -> KernelImage<T> {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![T::zero(); m.cols()];
            v[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            v
        })
        .collect();
    let image = pivots.iter().map(|&p| m.column(p)).collect();
    KernelImage {
        rank: pivots.len(),
        kernel: Subspace {
            ambient_dim: m.cols(),
            vectors: kernel,
        },
        image: Subspace {
            ambient_dim: m.rows(),
            vectors: image,
        },
    }
}

/// A solution of `m x = b` with every free variable set to zero, or `None`
/// when `b` is outside the column space.
pub fn solve_particular<T: Field>(m: &Matrix<T>, b: &[T]) -> Result<Option<Vec<T>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    let mut aug = Matrix::zeros(m.rows(), m.cols() + 1);
    for (r, br) in b.iter().enumerate() {
        for c in 0..m.cols() {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, m.cols(), br.clone());
    }
    let (red, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = vec![T::zero(); m.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red.get(row, m.cols()).clone();
    }
    Ok(Some(x))
}

/// A matrix `s` with `m s m = m`.
///
/// With `P` the pivot columns of `m` and `R` the first independent rows of
/// `m[:, P]`, `s` is the inverse of the square block `m[R, P]` placed at
/// rows `P`, columns `R`, and zero elsewhere.
pub fn right_inverse_on_image<T: Field>(m: &Matrix<T>) -> Matrix<T> {
    let (_, col_pivots) = rref(m);
    let r = col_pivots.len();
    let mut s = Matrix::zeros(m.cols(), m.rows());
    if r == 0 {
        return s;
    }
    let selected = Matrix::from_columns(
        m.rows(),
        &col_pivots.iter().map(|&c| m.column(c)).collect::<Vec<_>>(),
    )
    .expect("column lengths agree");
    let (_, row_pivots) = rref(&selected.transpose());
    let mut block = Matrix::zeros(r, r);
    for (i, &row) in row_pivots.iter().enumerate() {
        for (j, &col) in col_pivots.iter().enumerate() {
            block.set(i, j, m.get(row, col).clone());
        }
    }
    let inv = invert(&block).expect("pivot block is invertible");
    for (i, &col) in col_pivots.iter().enumerate() {
        for (j, &row) in row_pivots.iter().enumerate() {
            s.set(col, row, inv.get(i, j).clone());
        }
    }
    s
}

pub fn invert<T: Field>(m: &Matrix<T>) -> Option<Matrix<T>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let mut aug = Matrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.get(r, c).clone());
        }
        aug.set(r, n + r, T::one());
    }
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    let mut inv = Matrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            inv.set(r, c, red.get(r, n + c).clone());
        }
    }
    Some(inv)
}

/// Coordinates on a fixed complement of a subspace.
///
/// The complement is spanned by the standard basis vectors of the non-pivot
/// coordinates of the subspace's echelon form.
#[derive(Debug, Clone)]
pub struct Complement<T> {
    ambient_dim: usize,
    reduced: Matrix<T>,
    pivots: Vec<usize>,
    free: Vec<usize>,
}

impl<T: Field> Complement<T> {
    pub fn new(sub: &Subspace<T>) -> Result<Self> {
        let rows = if sub.dim() == 0 {
            Matrix::zeros(0, sub.ambient_dim())
        } else {
            Matrix::from_rows(sub.vectors())?
        };
        let (reduced, pivots) = rref(&rows);
        if pivots.len() != sub.dim() {
            return Err(Error::BadBasis);
        }
        let free = (0..sub.ambient_dim())
            .filter(|c| !pivots.contains(c))
            .collect();
        Ok(Self {
            ambient_dim: sub.ambient_dim(),
            reduced,
            pivots,
            free,
        })
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The ambient coordinates spanning the complement.
    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }

    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.ambient_dim, "vector length");
        let mut w = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let f = w[p].clone();
            if !f.is_zero() {
                axpy(&mut w, &-f, self.reduced.row(row));
            }
        }
        self.free.iter().map(|&c| w[c].clone()).collect()
    }

    pub fn lift(&self, coords: &[T]) -> Vec<T> {
        assert_eq!(coords.len(), self.free.len(), "complement coordinates");
        let mut v = vec![T::zero(); self.ambient_dim];
        for (c, &f) in coords.iter().zip(&self.free) {
            v[f] = c.clone();
        }
        v
    }
}

/// Coordinates of `v` modulo `sub`, on the complement described by [`Complement`].
pub fn quotient_reduce<T: Field>(
    ambient_dim: usize,
    sub: &Subspace<T>,
    v: &[T],
) -> Result<Vec<T>> {
    if sub.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: sub.ambient_dim(),
        });
    }
    if v.len() != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: v.len(),
        });
    }
    Ok(Complement::new(sub)?.reduce(v))
}
