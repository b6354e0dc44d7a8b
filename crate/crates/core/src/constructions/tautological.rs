//! The defining representation of `sp(2n)` with `B = B_τ`.

use rand::RngCore;
use serde_json::json;

use super::{common, Model};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SpanCoordinates, SymplecticForm};
use crate::ssr::SsrData;

pub const ID: &str = "Tautological";

/// Standard form on `k^{2n}`: `ω(eᵢ, e_{n+i}) = 1`.
pub fn standard_form<K: Field>(k: &K, n: usize) -> Matrix<K::Elem> {
    let mut g = Matrix::zeros(k, 2 * n, 2 * n);
    for i in 0..n {
        g[(i, n + i)] = k.one();
        g[(n + i, i)] = -k.one();
    }
    g
}

/// Basis `G⁻¹S` of `sp(ω)` with `S` running over elementary symmetric matrices.
pub fn symplectic_algebra_basis<K: Field>(k: &K, omega: &Matrix<K::Elem>) -> Result<Vec<Matrix<K::Elem>>> {
    let n = omega.rows();
    let ginv = omega.inverse()?;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut s = Matrix::zeros(k, n, n);
            s[(i, j)] = k.one();
            s[(j, i)] = k.one();
            out.push(ginv.mul(&s));
        }
    }
    Ok(out)
}

/// Matrix of `C ↦ B_τ(u, v)·C = ½(ω(u, C)v + ω(v, C)u)`.
pub fn btau_matrix<K: Field>(k: &K, form: &SymplecticForm<K::Elem>, u: &[K::Elem], v: &[K::Elem]) -> Matrix<K::Elem> {
    let n = u.len();
    let (cu, cv) = (form.contract(u), form.contract(v));
    let half = k.ratio(1, 2);
    Matrix::from_fn(&k.zero(), n, n, |i, j| {
        (v[i].clone() * &cu[j] + &(u[i].clone() * &cv[j])) * &half
    })
}

pub fn tautological<K: Field>(k: &K, n: usize) -> Result<SsrData<K>> {
    if n == 0 {
        return Err(Error::DimensionMismatch("n must be positive".into()));
    }
    let omega = standard_form(k, n);
    let form = SymplecticForm::new(omega.clone())?;
    let basis = symplectic_algebra_basis(k, &omega)?;
    let dim = 2 * n;
    let flat: Vec<_> = basis.iter().map(Matrix::flatten).collect();
    let coords = SpanCoordinates::new(&k.zero(), dim * dim, &flat)?;
    let mut bmu = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let ei = crate::linalg::unit(&k.zero(), dim, i);
            let ej = crate::linalg::unit(&k.zero(), dim, j);
            let m = btau_matrix(k, &form, &ei, &ej);
            bmu.push(
                coords
                    .coords(m.data())
                    .ok_or_else(|| Error::Invariant("B_τ leaves sp(V)".into()))?,
            );
        }
    }
    Ok(common::calibrate(k, omega, basis, bmu)?.with_tag(ID, json!({"n": n})))
}

pub struct Tautological<K: Field> {
    ssr: SsrData<K>,
}

impl<K: Field> Tautological<K> {
    pub fn new(k: &K, n: usize) -> Result<Self> {
        Ok(Tautological {
            ssr: tautological(k, n)?,
        })
    }
}

impl<K: Field> Model<K> for Tautological<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    /// `μ(v) = τ(v)` vanishes only at `v = 0`.
    fn zero_set_oracle(&self, _v: &[K::Elem]) -> bool {
        false
    }

    fn sample_zero_set(&self, _rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        None
    }
}
