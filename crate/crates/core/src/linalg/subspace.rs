use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::echelon::EchelonBasis;
use crate::linalg::matrix::Matrix;

/// A linear subspace of `kⁿ`, stored by its canonical reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
    zero: E,
}

impl<E: Scalar> Subspace<E> {
    pub fn from_vectors(zero: &E, ambient: usize, vecs: &[Vec<E>]) -> Self {
        let mut rows: Vec<Vec<E>> = vecs.to_vec();
        for r in &rows {
            assert_eq!(r.len(), ambient, "vector outside the ambient space");
        }
        let pivots = E::rref_rows(&mut rows, ambient);
        Subspace {
            ambient,
            basis: rows,
            pivots,
            zero: zero.zero_like(),
        }
    }

    pub fn from_echelon(zero: &E, e: EchelonBasis<E>) -> Self {
        let ambient = e.ncols();
        let (basis, pivots) = e.into_rows();
        Subspace {
            ambient,
            basis,
            pivots,
            zero: zero.zero_like(),
        }
    }

    pub fn zero_space(zero: &E, ambient: usize) -> Self {
        Self::from_vectors(zero, ambient, &[])
    }

    pub fn whole(zero: &E, ambient: usize) -> Self {
        let m = Matrix::identity_like(zero, ambient);
        Self::from_vectors(zero, ambient, &m.to_rows())
    }

    pub fn span_of(v: &[E]) -> Self {
        Self::from_vectors(&v[0], v.len(), &[v.to_vec()])
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[E]) -> Option<Vec<E>> {
        let c: Vec<E> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.combine(&c);
        if back.as_slice() == v {
            Some(c)
        } else {
            None
        }
    }

    /// `Σ cᵢ bᵢ` over the canonical basis.
    pub fn combine(&self, c: &[E]) -> Vec<E> {
        let mut out = vec![self.zero.clone(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            super::axpy(&mut out, ci, b);
        }
        out
    }

    pub fn contains(&self, v: &[E]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, other: &Self) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Self::from_vectors(&self.zero, self.ambient, &all)
    }

    /// Euclidean annihilator `{x : ⟨b, x⟩ = 0 for all basis vectors b}`.
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::whole(&self.zero, self.ambient);
        }
        Matrix::from_rows(&self.zero, &self.basis, self.ambient)
            .expect("basis rows have ambient length")
            .kernel()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Extends to a basis of the ambient space; returns the added standard vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }
}

/// Coordinates with respect to a fixed, linearly independent list of vectors.
#[derive(Clone, Debug)]
pub struct SpanCoordinates<E> {
    ambient: usize,
    vectors: Vec<Vec<E>>,
    pivots: Vec<usize>,
    /// Row `r` holds the combination of the input vectors giving echelon row `r`.
    transform: Vec<Vec<E>>,
}

impl<E: Scalar> SpanCoordinates<E> {
    pub fn new(zero: &E, ambient: usize, vectors: &[Vec<E>]) -> Result<Self> {
        let d = vectors.len();
        let mut rows: Vec<Vec<E>> = vectors
            .iter()
            .enumerate()
            .map(|(i, v)| {
                assert_eq!(v.len(), ambient);
                let mut r = v.clone();
                r.extend((0..d).map(|j| {
                    if i == j {
                        zero.one_like()
                    } else {
                        zero.zero_like()
                    }
                }));
                r
            })
            .collect();
        let pivots = E::rref_rows(&mut rows, ambient + d);
        if pivots.len() < d || pivots.iter().any(|&p| p >= ambient) {
            return Err(Error::Invariant("spanning vectors are dependent".into()));
        }
        let transform = rows.iter().map(|r| r[ambient..].to_vec()).collect();
        Ok(SpanCoordinates {
            ambient,
            vectors: vectors.to_vec(),
            pivots,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates assuming `v` lies in the span; only pivot entries are read.
    pub fn coords_unchecked(&self, v: &[E]) -> Vec<E> {
        let zero = v[0].zero_like();
        let mut c = vec![zero; self.dim()];
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            super::axpy(&mut c, &v[p], &self.transform[r]);
        }
        c
    }

    /// Coordinates of `v`, verified by recombination.
    pub fn coords(&self, v: &[E]) -> Option<Vec<E>> {
        let c = self.coords_unchecked(v);
        let mut back = vec![v[0].zero_like(); self.ambient];
        for (ci, b) in c.iter().zip(&self.vectors) {
            super::axpy(&mut back, ci, b);
        }
        if back.as_slice() == v {
            Some(c)
        } else {
            None
        }
    }

    /// Pivot positions: the entries read by [`SpanCoordinates::coords_unchecked`].
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}
