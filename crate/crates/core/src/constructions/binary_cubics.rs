//! Binary cubic forms `P = a x³ + 3b x²y + 3c xy² + d y³` under `sl₂`.

use rand::RngCore;
use serde_json::json;

use super::{common, Model};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::ssr::SsrData;

pub const ID: &str = "BinaryCubics";

/// Basis of `sl₂` is `H = diag(1, −1)`, `E = e₁₂`, `F = e₂₁`, acting on forms
/// contragrediently: `H·P = −x∂ₓP + y∂ᵧP`, `E·P = −y∂ₓP`, `F·P = −x∂ᵧP`.
pub fn binary_cubics<K: Field>(k: &K) -> Result<SsrData<K>> {
    let omega = Matrix::from_i64(
        k,
        &[&[0, 0, 0, 1], &[0, 0, -3, 0], &[0, 3, 0, 0], &[-1, 0, 0, 0]],
    );
    let h = Matrix::from_i64(k, &[&[-3, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 3]]);
    let e = Matrix::from_i64(k, &[&[0, 0, 0, 0], &[-1, 0, 0, 0], &[0, -2, 0, 0], &[0, 0, -3, 0]]);
    let f = Matrix::from_i64(k, &[&[0, -3, 0, 0], &[0, 0, -2, 0], &[0, 0, 0, -1], &[0, 0, 0, 0]]);
    // μ(P) = [[ad − bc, 2(bd − c²)], [2(b² − ac), −(ad − bc)]], polarized.
    let n = 4;
    let mut bmu = vec![vec![k.zero(); 3]; n * n];
    let half = k.ratio(1, 2);
    let mut add = |i: usize, j: usize, slot: usize, c: K::Elem| {
        bmu[i * n + j][slot] += &(c.clone() * &half);
        bmu[j * n + i][slot] += &(c * &half);
    };
    add(0, 3, 0, k.from_i64(1));
    add(1, 2, 0, k.from_i64(-1));
    add(1, 3, 1, k.from_i64(2));
    add(2, 2, 1, k.from_i64(-2));
    add(1, 1, 2, k.from_i64(2));
    add(0, 2, 2, k.from_i64(-2));
    Ok(common::calibrate(k, omega, vec![h, e, f], bmu)?.with_tag(ID, json!({})))
}

/// `P` is a nonzero multiple of a cube exactly when the Hankel matrix
/// `[[a, b, c], [b, c, d]]` has rank one.
pub fn is_cube<K: Field>(k: &K, p: &[K::Elem]) -> bool {
    let hankel = Matrix::from_rows(
        &k.zero(),
        &[
            vec![p[0].clone(), p[1].clone(), p[2].clone()],
            vec![p[1].clone(), p[2].clone(), p[3].clone()],
        ],
        3,
    )
    .expect("fixed shape");
    hankel.rank() == 1
}

pub struct BinaryCubics<K: Field> {
    ssr: SsrData<K>,
}

impl<K: Field> BinaryCubics<K> {
    pub fn new(k: &K) -> Result<Self> {
        Ok(BinaryCubics {
            ssr: binary_cubics(k)?,
        })
    }
}

impl<K: Field> Model<K> for BinaryCubics<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        is_cube(self.ssr.field(), v)
    }

    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        let k = self.ssr.field();
        loop {
            let (u, w) = (k.random(rng), k.random(rng));
            let t = k.random_nonzero(rng);
            if crate::field::Scalar::is_zero(&u) && crate::field::Scalar::is_zero(&w) {
                continue;
            }
            // t (u x + w y)³ = t u³ x³ + 3 t u² w x²y + 3 t u w² xy² + t w³ y³
            return Some(vec![
                t.clone() * &u * &u * &u,
                t.clone() * &u * &u * &w,
                t.clone() * &u * &w * &w,
                t * &w * &w * &w,
            ]);
        }
    }
}
