use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::subspace::Subspace;

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
    zero: E,
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: Scalar> Matrix<E> {
    pub fn zeros_like(zero: &E, rows: usize, cols: usize) -> Self {
        let zero = zero.zero_like();
        Matrix {
            rows,
            cols,
            data: vec![zero.clone(); rows * cols],
            zero,
        }
    }

    pub fn zeros<K: Field<Elem = E>>(k: &K, rows: usize, cols: usize) -> Self {
        Self::zeros_like(&k.zero(), rows, cols)
    }

    pub fn identity<K: Field<Elem = E>>(k: &K, n: usize) -> Self {
        let mut m = Self::zeros(k, n, n);
        for i in 0..n {
            m[(i, i)] = k.one();
        }
        m
    }

    pub fn identity_like(zero: &E, n: usize) -> Self {
        let mut m = Self::zeros_like(zero, n, n);
        for i in 0..n {
            m[(i, i)] = zero.one_like();
        }
        m
    }

    pub fn from_fn(zero: &E, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            data,
            zero: zero.zero_like(),
        }
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(zero: &E, rows: &[Vec<E>], cols: usize) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
            zero: zero.zero_like(),
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(zero: &E, cols: &[Vec<E>], rows: usize) -> Result<Self> {
        Ok(Self::from_rows(zero, cols, rows)?.transpose())
    }

    /// Small integer matrices, mainly for tests and fixed models.
    pub fn from_i64<K: Field<Elem = E>>(k: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(&k.zero(), rows.len(), cols, |i, j| k.from_i64(rows[i][j]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn zero_elem(&self) -> &E {
        &self.zero
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// The matrix read as one long vector, row by row.
    pub fn flatten(&self) -> Vec<E> {
        self.data.clone()
    }

    pub fn unflatten(zero: &E, rows: usize, cols: usize, v: &[E]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Matrix {
            rows,
            cols,
            data: v.to_vec(),
            zero: zero.zero_like(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)` triples.
    pub fn nonzeros(&self) -> Vec<(usize, usize, E)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = &self[(i, j)];
                if !x.is_zero() {
                    out.push((i, j, x.clone()));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.zero, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    fn check_same_shape(&self, o: &Self) {
        assert!(
            self.rows == o.rows && self.cols == o.cols,
            "shape mismatch: {}x{} vs {}x{}",
            self.rows,
            self.cols,
            o.rows,
            o.cols
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_same_shape(o);
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_same_shape(o);
        let data = self
            .data
            .iter()
            .zip(&o.data)
            .map(|(a, b)| a.clone() - b)
            .collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        let data = self.data.iter().map(|a| a.clone() * c).collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| -a.clone()).collect();
        Matrix {
            data,
            ..self.clone_shape()
        }
    }

    /// `self += c · o`.
    pub fn add_scaled(&mut self, c: &E, o: &Self) {
        self.check_same_shape(o);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                let t = c.clone() * b;
                *a += &t;
            }
        }
    }

    fn clone_shape(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: Vec::new(),
            zero: self.zero.clone(),
        }
    }

    /// Product skipping zero entries, so sparse factors are cheap.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "inner dimensions differ");
        let mut out = Self::zeros_like(&self.zero, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a.clone() * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.zero.clone();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a.clone() * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `vᵀ · self`.
    pub fn vec_mul(&self, v: &[E]) -> Vec<E> {
        assert_eq!(self.rows, v.len(), "vector length differs from row count");
        let mut out = vec![self.zero.clone(); self.cols];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += &(c.clone() * a);
                }
            }
        }
        out
    }

    /// `uᵀ · self · v`.
    pub fn bilinear(&self, u: &[E], v: &[E]) -> E {
        super::dot(&self.vec_mul(u), v)
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn trace(&self) -> E {
        assert!(self.is_square());
        let mut acc = self.zero.clone();
        for i in 0..self.rows {
            acc += &self[(i, i)];
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity_like(&self.zero, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reduced row echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Vec<Vec<E>>, Vec<usize>) {
        let mut rows = self.to_rows();
        let piv = E::rref_rows(&mut rows, self.cols);
        (rows, piv)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right kernel `{x : self·x = 0}` with its canonical basis.
    pub fn kernel(&self) -> Subspace<E> {
        let (rows, piv) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &piv {
            is_pivot[p] = true;
        }
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![self.zero.clone(); self.cols];
            v[f] = self.zero.one_like();
            for (r, &p) in piv.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            basis.push(v);
        }
        Subspace::from_vectors(&self.zero, self.cols, &basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace<E> {
        Subspace::from_vectors(&self.zero, self.rows, &self.transpose().to_rows())
    }

    /// Some solution of `self · x = b`.
    pub fn solve(&self, b: &[E]) -> Result<Vec<E>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let mut rows: Vec<Vec<E>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let piv = E::rref_rows(&mut rows, self.cols + 1);
        if piv.last() == Some(&self.cols) {
            return Err(Error::InconsistentSystem);
        }
        let mut x = vec![self.zero.clone(); self.cols];
        for (r, &p) in piv.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<E>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.zero.one_like()
                    } else {
                        self.zero.clone()
                    }
                }));
                r
            })
            .collect();
        let piv = E::rref_rows(&mut rows, 2 * n);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::DivisionByNonInvertible);
        }
        let inv: Vec<Vec<E>> = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Self::from_rows(&self.zero, &inv, n)
    }

    /// Restriction of an operator to an invariant subspace, in the subspace's basis.
    pub fn restrict(&self, sub: &Subspace<E>) -> Result<Self> {
        let d = sub.dim();
        let mut out = Self::zeros_like(&self.zero, d, d);
        for (j, b) in sub.basis().iter().enumerate() {
            let img = self.mul_vec(b);
            let c = sub
                .coords(&img)
                .ok_or_else(|| Error::Invariant("subspace is not invariant".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        Ok(out)
    }

    pub fn map<F: Scalar>(&self, zero: &F, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            zero: zero.zero_like(),
        }
    }
}
