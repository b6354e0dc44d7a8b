//! `Hom(E, F)` for a symplectic plane `E` and a quadratic space `(F, g)`,
//! under `sl(E) ⊕ so(F, g)`.

use rand::{Rng, RngCore};
use serde_json::json;

use super::{common, Model};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix, SpanCoordinates};
use crate::ssr::SsrData;

pub const ID: &str = "HomEF";

/// Vectors are `(a₁, a₂) = (A e₁, A e₂)` stacked; `ω(A, B) = g(a₁, b₂) − g(a₂, b₁)`.
/// `sl(E)` acts by `A ↦ −A s` and `so(F, g)` by `A ↦ s A`; `μ(A) = (−A*A, 2AA*)`
/// with `Ω(w, A*v) = g(Aw, v)`.
pub fn hom_ef<K: Field>(k: &K, m: usize, g: Option<Matrix<K::Elem>>) -> Result<SsrData<K>> {
    if m == 0 {
        return Err(Error::DimensionMismatch("m must be positive".into()));
    }
    let g = g.unwrap_or_else(|| Matrix::identity(k, m));
    if g.rows() != m || g.cols() != m {
        return Err(Error::DimensionMismatch(format!("g must be {m}x{m}")));
    }
    if g != g.transpose() {
        return Err(Error::Invariant("g must be symmetric".into()));
    }
    if g.rank() < m {
        return Err(Error::DegenerateForm);
    }
    let dim = 2 * m;
    let mut omega = Matrix::zeros(k, dim, dim);
    for i in 0..m {
        for j in 0..m {
            omega[(i, m + j)] = g[(i, j)].clone();
            omega[(m + i, j)] = -g[(i, j)].clone();
        }
    }

    let sl2 = [
        Matrix::from_i64(k, &[&[1, 0], &[0, -1]]),
        Matrix::from_i64(k, &[&[0, 1], &[0, 0]]),
        Matrix::from_i64(k, &[&[0, 0], &[1, 0]]),
    ];
    let mut basis = Vec::new();
    for s in &sl2 {
        let mut x = Matrix::zeros(k, dim, dim);
        for i in 0..m {
            x[(i, i)] = -s[(0, 0)].clone();
            x[(i, m + i)] = -s[(1, 0)].clone();
            x[(m + i, i)] = -s[(0, 1)].clone();
            x[(m + i, m + i)] = -s[(1, 1)].clone();
        }
        basis.push(x);
    }
    // so(F, g) = {s : sᵀg + gs = 0}
    let var = |r: usize, c: usize| r * m + c;
    let mut eqs = Vec::new();
    for p in 0..m {
        for q in p..m {
            let mut row = vec![k.zero(); m * m];
            for l in 0..m {
                row[var(l, p)] += &g[(l, q)];
                row[var(l, q)] += &g[(p, l)];
            }
            eqs.push(row);
        }
    }
    let so = Matrix::from_rows(&k.zero(), &eqs, m * m)?.kernel();
    let so_coords = if so.dim() > 0 {
        Some(SpanCoordinates::new(&k.zero(), m * m, so.basis())?)
    } else {
        None
    };
    for v in so.basis() {
        let s = Matrix::unflatten(&k.zero(), m, m, v);
        let mut x = Matrix::zeros(k, dim, dim);
        for i in 0..m {
            for j in 0..m {
                x[(i, j)] = s[(i, j)].clone();
                x[(m + i, m + j)] = s[(i, j)].clone();
            }
        }
        basis.push(x);
    }

    let d = basis.len();
    let half = k.ratio(1, 2);
    let gdot = |u: &[K::Elem], v: &[K::Elem]| g.bilinear(u, v);
    let split = |v: &[K::Elem]| (v[..m].to_vec(), v[m..].to_vec());
    let mut bmu = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let (a1, a2) = split(&linalg::unit(&k.zero(), dim, i));
            let (b1, b2) = split(&linalg::unit(&k.zero(), dim, j));
            // A*B + B*A as a 2x2 matrix
            let m11 = -(gdot(&a2, &b1) + gdot(&b2, &a1));
            let m12 = -(gdot(&a2, &b2) + gdot(&b2, &a2));
            let m21 = gdot(&a1, &b1) + gdot(&b1, &a1);
            let mut c = vec![k.zero(); d];
            c[0] = -(m11 * &half);
            c[1] = -(m12 * &half);
            c[2] = -(m21 * &half);
            // AB* + BA* = −a₁b₂ᵀg + a₂b₁ᵀg − b₁a₂ᵀg + b₂a₁ᵀg
            let (ga1, ga2, gb1, gb2) = (g.vec_mul(&a1), g.vec_mul(&a2), g.vec_mul(&b1), g.vec_mul(&b2));
            let s = Matrix::from_fn(&k.zero(), m, m, |r, col| {
                -(a1[r].clone() * &gb2[col]) + &(a2[r].clone() * &gb1[col])
                    - &(b1[r].clone() * &ga2[col])
                    + &(b2[r].clone() * &ga1[col])
            });
            if let Some(sc) = &so_coords {
                let sc = sc
                    .coords(s.data())
                    .ok_or_else(|| Error::Invariant("AA* leaves so(F, g)".into()))?;
                for (t, x) in sc.into_iter().enumerate() {
                    c[3 + t] = x;
                }
            } else if !s.is_zero() {
                return Err(Error::Invariant("AA* leaves so(F, g)".into()));
            }
            bmu.push(c);
        }
    }
    let params = json!({"m": m, "g": crate::ssr::data::encode_matrix(k, &g)});
    Ok(common::calibrate(k, omega, basis, bmu)?.with_tag(ID, params))
}

pub struct HomEF<K: Field> {
    ssr: SsrData<K>,
    g: Matrix<K::Elem>,
    isotropic: Vec<Vec<K::Elem>>,
}

impl<K: Field> HomEF<K> {
    pub fn new(k: &K, m: usize, g: Option<Matrix<K::Elem>>) -> Result<Self> {
        let ssr = hom_ef(k, m, g.clone())?;
        let g = g.unwrap_or_else(|| Matrix::identity(k, m));
        let isotropic = isotropic_vectors(k, &g);
        Ok(HomEF { ssr, g, isotropic })
    }
}

/// Nonzero isotropic vectors: all of them over small prime fields, a box search otherwise.
fn isotropic_vectors<K: Field>(k: &K, g: &Matrix<K::Elem>) -> Vec<Vec<K::Elem>> {
    let m = g.rows();
    let values: Vec<K::Elem> = match k.elements() {
        Some(all) if all.len().pow(m as u32) <= 50_000 => all,
        _ => (-2..=2).map(|i| k.from_i64(i)).collect(),
    };
    let mut out = Vec::new();
    let total = values.len().pow(m as u32);
    for mut idx in 1..total {
        let mut v = Vec::with_capacity(m);
        for _ in 0..m {
            v.push(values[idx % values.len()].clone());
            idx /= values.len();
        }
        if !linalg::is_zero_vec(&v) && g.bilinear(&v, &v).is_zero() {
            out.push(v);
        }
    }
    out
}

impl<K: Field> Model<K> for HomEF<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    /// `A ≠ 0` has rank one with isotropic image.
    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        let k = self.ssr.field();
        let m = self.g.rows();
        let (a1, a2) = (&v[..m], &v[m..]);
        let cols = Matrix::from_cols(&k.zero(), &[a1.to_vec(), a2.to_vec()], m).expect("shape");
        cols.rank() == 1
            && self.g.bilinear(a1, a1).is_zero()
            && self.g.bilinear(a1, a2).is_zero()
            && self.g.bilinear(a2, a2).is_zero()
    }

    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        if self.isotropic.is_empty() {
            return None;
        }
        let k = self.ssr.field();
        let a = &self.isotropic[rng.gen_range(0..self.isotropic.len())];
        let (x1, x2) = loop {
            let (x1, x2) = (k.random(rng), k.random(rng));
            if !(x1.is_zero() && x2.is_zero()) {
                break (x1, x2);
            }
        };
        let mut v = linalg::vscale(&x1, a);
        v.extend(linalg::vscale(&x2, a));
        Some(v)
    }
}
