//! The commutant of an `ω`-skew `J` with `J² = λ` inside `sp(2n)`.

use rand::RngCore;
use serde_json::json;

use super::{common, tautological, Model};
use crate::error::{Error, Result};
use crate::field::{BaseField, Field, Scalar};
use crate::linalg::{self, Matrix, SpanCoordinates, Subspace, SymplecticForm};
use crate::ssr::SsrData;

pub const ID: &str = "JCommutant";

/// `J eᵢ = e_{n+i}`, `J e_{n+i} = λ eᵢ`; skew for the standard form for every `λ`.
pub fn default_j<K: Field>(k: &K, n: usize, lambda: &K::Elem) -> Matrix<K::Elem> {
    let mut j = Matrix::zeros(k, 2 * n, 2 * n);
    for i in 0..n {
        j[(n + i, i)] = k.one();
        j[(i, n + i)] = lambda.clone();
    }
    j
}

/// `μ(v) = τ(v) − (1/λ)τ(Jv) + (1/2λ)ω(v, Jv)J` on `k^{2n}` with the standard form.
pub fn j_commutant<K: Field>(
    k: &K,
    n: usize,
    lambda: &K::Elem,
    j: Option<Matrix<K::Elem>>,
) -> Result<SsrData<K>> {
    if n == 0 {
        return Err(Error::DimensionMismatch("n must be positive".into()));
    }
    let lambda_inv = lambda
        .inv()
        .ok_or_else(|| Error::InvalidJ("λ must be nonzero".into()))?;
    let dim = 2 * n;
    let omega = tautological::standard_form(k, n);
    let form = SymplecticForm::new(omega.clone())?;
    let j = j.unwrap_or_else(|| default_j(k, n, lambda));
    if j.rows() != dim || j.cols() != dim {
        return Err(Error::InvalidJ(format!("J must be {dim}x{dim}")));
    }
    if j.mul(&j) != Matrix::identity(k, dim).scale(lambda) {
        return Err(Error::InvalidJ("J² ≠ λ·Id".into()));
    }
    if !form.is_infinitesimal_isometry(&j) {
        return Err(Error::InvalidJ("J is not ω-skew".into()));
    }

    // Basis of {X : XᵀG + GX = 0, XJ = JX} from the kernel of the stacked conditions.
    let var = |r: usize, c: usize| r * dim + c;
    let mut eqs = Vec::new();
    for p in 0..dim {
        for q in 0..dim {
            let mut sym = vec![k.zero(); dim * dim];
            let mut com = vec![k.zero(); dim * dim];
            for l in 0..dim {
                sym[var(l, p)] += &omega[(l, q)];
                sym[var(l, q)] += &omega[(p, l)];
                com[var(p, l)] += &j[(l, q)];
                com[var(l, q)] -= &j[(p, l)];
            }
            eqs.push(sym);
            eqs.push(com);
        }
    }
    let ker = Matrix::from_rows(&k.zero(), &eqs, dim * dim)?.kernel();
    let basis: Vec<Matrix<K::Elem>> = ker
        .basis()
        .iter()
        .map(|v| Matrix::unflatten(&k.zero(), dim, dim, v))
        .collect();
    let coords = SpanCoordinates::new(&k.zero(), dim * dim, ker.basis())?;

    let quarter = k.ratio(1, 4) * &lambda_inv;
    let mut bmu = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let u = linalg::unit(&k.zero(), dim, a);
            let v = linalg::unit(&k.zero(), dim, b);
            let (ju, jv) = (j.mul_vec(&u), j.mul_vec(&v));
            let mut m = tautological::btau_matrix(k, &form, &u, &v);
            m.add_scaled(&-lambda_inv.clone(), &tautological::btau_matrix(k, &form, &ju, &jv));
            let s = (form.eval(&u, &jv) + form.eval(&v, &ju)) * &quarter;
            m.add_scaled(&s, &j);
            bmu.push(
                coords
                    .coords(m.data())
                    .ok_or_else(|| Error::Invariant("μ leaves the commutant of J".into()))?,
            );
        }
    }
    let params = json!({"n": n, "lambda_j": k.encode(lambda), "J": crate::ssr::data::encode_matrix(k, &j)});
    Ok(common::calibrate(k, omega, basis, bmu)?.with_tag(ID, params))
}

pub struct JCommutant<K: BaseField> {
    ssr: SsrData<K>,
    j: Matrix<K::Elem>,
    root: Option<K::Elem>,
}

impl<K: BaseField> JCommutant<K> {
    pub fn new(k: &K, n: usize, lambda: &K::Elem, j: Option<Matrix<K::Elem>>) -> Result<Self> {
        let ssr = j_commutant(k, n, lambda, j.clone())?;
        let j = j.unwrap_or_else(|| default_j(k, n, lambda));
        Ok(JCommutant {
            ssr,
            j,
            root: k.sqrt(lambda),
        })
    }

    pub fn j(&self) -> &Matrix<K::Elem> {
        &self.j
    }

    fn eigenspace(&self, r: &K::Elem) -> Subspace<K::Elem> {
        let k = self.ssr.field();
        let n = self.j.rows();
        self.j.sub(&Matrix::identity(k, n).scale(r)).kernel()
    }
}

impl<K: BaseField> Model<K> for JCommutant<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    /// Nonzero `v` lies in the zero set exactly when it is an eigenvector of `J`.
    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        let k = self.ssr.field();
        let pair = Matrix::from_cols(&k.zero(), &[v.to_vec(), self.j.mul_vec(v)], v.len())
            .expect("consistent lengths");
        !linalg::is_zero_vec(v) && pair.rank() == 1
    }

    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        let k = self.ssr.field();
        let r = self.root.clone()?;
        let r = if rng.next_u32().is_multiple_of(2) { r } else { -r };
        let space = self.eigenspace(&r);
        loop {
            let c: Vec<K::Elem> = (0..space.dim()).map(|_| k.random(rng)).collect();
            let v = space.combine(&c);
            if !linalg::is_zero_vec(&v) {
                return Some(v);
            }
        }
    }
}
