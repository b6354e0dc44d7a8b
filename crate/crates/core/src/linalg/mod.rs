//! Exact dense linear algebra: matrices, subspaces, symplectic forms and
//! minimal polynomials.

pub mod echelon;
mod matrix;
mod subspace;

pub use echelon::EchelonBasis;
pub use matrix::Matrix;
pub use subspace::{SpanCoordinates, Subspace};

use crate::error::{Error, Result};
use crate::field::Scalar;

pub fn dot<E: Scalar>(u: &[E], v: &[E]) -> E {
    assert_eq!(u.len(), v.len());
    let mut acc = u[0].zero_like();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a.clone() * b);
        }
    }
    acc
}

/// `y += c · x`.
pub fn axpy<E: Scalar>(y: &mut [E], c: &E, x: &[E]) {
    assert_eq!(y.len(), x.len());
    if c.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c.clone() * b);
        }
    }
}

pub fn vadd<E: Scalar>(u: &[E], v: &[E]) -> Vec<E> {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.clone() + b).collect()
}

pub fn vsub<E: Scalar>(u: &[E], v: &[E]) -> Vec<E> {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a.clone() - b).collect()
}

pub fn vscale<E: Scalar>(c: &E, v: &[E]) -> Vec<E> {
    v.iter().map(|a| c.clone() * a).collect()
}

pub fn vneg<E: Scalar>(v: &[E]) -> Vec<E> {
    v.iter().map(|a| -a.clone()).collect()
}

pub fn is_zero_vec<E: Scalar>(v: &[E]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit<E: Scalar>(zero: &E, n: usize, i: usize) -> Vec<E> {
    let mut v = vec![zero.zero_like(); n];
    v[i] = zero.one_like();
    v
}

/// A nondegenerate antisymmetric bilinear form `ω(u, v) = uᵀ G v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm<E> {
    gram: Matrix<E>,
}

impl<E: Scalar> SymplecticForm<E> {
    pub fn new(gram: Matrix<E>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
        }
        if gram.add(&gram.transpose()).is_zero() {
            if gram.rank() < gram.rows() {
                return Err(Error::DegenerateForm);
            }
            Ok(SymplecticForm { gram })
        } else {
            Err(Error::NotAntisymmetric)
        }
    }

    pub fn gram(&self) -> &Matrix<E> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, u: &[E], v: &[E]) -> E {
        self.gram.bilinear(u, v)
    }

    /// The row vector `ω(u, ·)`.
    pub fn contract(&self, u: &[E]) -> Vec<E> {
        self.gram.vec_mul(u)
    }

    /// `W^⊥ = {v : ω(w, v) = 0 for all w ∈ W}`.
    pub fn perp(&self, w: &Subspace<E>) -> Subspace<E> {
        let zero = self.gram.zero_elem();
        if w.dim() == 0 {
            return Subspace::whole(zero, self.dim());
        }
        let rows: Vec<Vec<E>> = w.basis().iter().map(|b| self.contract(b)).collect();
        Matrix::from_rows(zero, &rows, self.dim())
            .expect("rows have ambient length")
            .kernel()
    }

    /// The operator `v ↦ ω(u, v)·u`.
    pub fn tau(&self, u: &[E]) -> Matrix<E> {
        let row = self.contract(u);
        Matrix::from_fn(self.gram.zero_elem(), u.len(), u.len(), |i, j| {
            u[i].clone() * &row[j]
        })
    }

    /// Whether `X` preserves the form: `Xᵀ G + G X = 0`.
    pub fn is_infinitesimal_isometry(&self, x: &Matrix<E>) -> bool {
        x.transpose().mul(&self.gram).add(&self.gram.mul(x)).is_zero()
    }

    pub fn is_isotropic(&self, w: &Subspace<E>) -> bool {
        self.perp(w).contains_space(w)
    }

    pub fn is_coisotropic(&self, w: &Subspace<E>) -> bool {
        w.contains_space(&self.perp(w))
    }

    pub fn is_lagrangian(&self, w: &Subspace<E>) -> bool {
        2 * w.dim() == self.dim() && self.is_isotropic(w)
    }
}

/// Polynomial with coefficients listed from the constant term upward.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly<E> {
    pub coeffs: Vec<E>,
}

impl<E: Scalar> Poly<E> {
    pub fn new(mut coeffs: Vec<E>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a.clone() * b);
            }
        }
        Poly::new(out)
    }

    pub fn eval_matrix(&self, m: &Matrix<E>) -> Matrix<E> {
        let mut acc = Matrix::zeros_like(m.zero_elem(), m.rows(), m.cols());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..m.rows() {
                acc[(i, i)] += c;
            }
        }
        acc
    }
}

/// Monic minimal polynomial, found as the first linear relation among `I, M, M², …`.
pub fn minimal_polynomial<E: Scalar>(m: &Matrix<E>) -> Poly<E> {
    assert!(m.is_square());
    let zero = m.zero_elem().clone();
    let n = m.rows();
    let mut powers = vec![Matrix::identity_like(&zero, n).flatten()];
    let mut current = Matrix::identity_like(&zero, n);
    for _ in 0..=n {
        current = current.mul(m);
        let cols: Vec<Vec<E>> = powers
            .iter()
            .cloned()
            .chain(std::iter::once(current.flatten()))
            .collect();
        let sys = Matrix::from_cols(&zero, &cols, n * n).expect("consistent lengths");
        let ker = sys.kernel();
        if let Some(v) = ker.basis().first() {
            let lead = v.last().expect("nonempty").inv().expect("new power is dependent");
            return Poly::new(v.iter().map(|c| c.clone() * &lead).collect());
        }
        powers.push(current.flatten());
    }
    unreachable!("Cayley–Hamilton bounds the degree")
}
