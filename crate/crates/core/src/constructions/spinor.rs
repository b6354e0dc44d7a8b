//! The 32-dimensional half-spin representation of `so₁₂`, realized on even
//! forms `Λ^even(k⁶)` with `so₁₂` spanned by quadratic Clifford elements.

use rand::{Rng, RngCore};
use serde_json::json;

use super::{common, Model};
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix};
use crate::ssr::SsrData;

pub const ID: &str = "HalfSpinor12";

const N: u32 = 6;

#[derive(Clone, Copy, Debug)]
enum Op {
    Create(u32),
    Annihilate(u32),
}

fn below(s: u32, i: u32) -> bool {
    (s & ((1 << i) - 1)).count_ones() % 2 == 1
}

/// `ε_i` or `ι_i` on a monomial; `true` in the result means a minus sign.
fn apply(op: Op, s: u32) -> Option<(bool, u32)> {
    match op {
        Op::Create(i) if s >> i & 1 == 0 => Some((below(s, i), s | 1 << i)),
        Op::Annihilate(i) if s >> i & 1 == 1 => Some((below(s, i), s & !(1 << i))),
        _ => None,
    }
}

/// `a ∘ b` on a monomial.
fn apply2(a: Op, b: Op, s: u32) -> Option<(bool, u32)> {
    let (s1, t) = apply(b, s)?;
    let (s2, u) = apply(a, t)?;
    Some((s1 ^ s2, u))
}

/// Even masks ordered by size, then lexicographically.
pub fn even_masks() -> Vec<u32> {
    (0..=N)
        .step_by(2)
        .flat_map(|k| super::exterior::subsets(N, k))
        .collect()
}

/// The `so₁₂` basis as labelled pairs of Clifford generators, with `None` for
/// the correction `−½` on `ε_iι_i`.
fn quadratic_basis() -> Vec<(Op, Op)> {
    let mut out = Vec::new();
    for i in 0..N {
        for j in (i + 1)..N {
            out.push((Op::Create(i), Op::Create(j)));
        }
    }
    for i in 0..N {
        for j in (i + 1)..N {
            out.push((Op::Annihilate(i), Op::Annihilate(j)));
        }
    }
    for i in 0..N {
        for j in 0..N {
            if i != j {
                out.push((Op::Create(i), Op::Annihilate(j)));
            }
        }
    }
    for i in 0..N {
        out.push((Op::Create(i), Op::Annihilate(i)));
    }
    out
}

pub struct HalfSpinor<K: Field> {
    ssr: SsrData<K>,
    masks: Vec<u32>,
    position: Vec<Option<usize>>,
}

impl<K: Field> HalfSpinor<K> {
    pub fn new(k: &K) -> Result<Self> {
        let masks = even_masks();
        let mut position = vec![None; 1 << N];
        for (i, &m) in masks.iter().enumerate() {
            position[m as usize] = Some(i);
        }
        let dim = masks.len();
        let half = k.ratio(1, 2);
        let m_basis: Vec<Matrix<K::Elem>> = quadratic_basis()
            .into_iter()
            .map(|(a, b)| {
                let mut x = Matrix::zeros(k, dim, dim);
                for (col, &s) in masks.iter().enumerate() {
                    if let Some((neg, t)) = apply2(a, b, s) {
                        let row = position[t as usize].expect("parity is preserved");
                        x[(row, col)] = if neg { -k.one() } else { k.one() };
                    }
                }
                if let (Op::Create(i), Op::Annihilate(j)) = (a, b) {
                    if i == j {
                        for d in 0..dim {
                            x[(d, d)] -= &half;
                        }
                    }
                }
                x
            })
            .collect();
        let omega = common::invariant_symplectic_form(k, &m_basis)?;
        let bmu = common::trace_form_moment(k, &omega, &m_basis)?;
        let ssr = common::calibrate(k, omega, m_basis, bmu)?.with_tag(ID, json!({}));
        Ok(HalfSpinor {
            ssr,
            masks,
            position,
        })
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// Dimension of `{w ∈ k¹² : w·ψ = 0}` under Clifford multiplication on all forms.
    pub fn annihilator_dim(&self, v: &[K::Elem]) -> usize {
        let k = self.ssr.field();
        let full = 1usize << N;
        let mut psi = vec![k.zero(); full];
        for (x, &m) in v.iter().zip(&self.masks) {
            psi[m as usize] = x.clone();
        }
        let mut cols = Vec::with_capacity(2 * N as usize);
        for i in 0..N {
            for op in [Op::Annihilate(i), Op::Create(i)] {
                let mut img = vec![k.zero(); full];
                for (s, x) in psi.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    if let Some((neg, t)) = apply(op, s as u32) {
                        img[t as usize] = if neg { -x.clone() } else { x.clone() };
                    }
                }
                cols.push(img);
            }
        }
        let m = Matrix::from_cols(&k.zero(), &cols, full).expect("shape");
        2 * N as usize - m.rank()
    }

    /// Pure spinors: nonzero with a six-dimensional annihilator.
    pub fn is_pure(&self, v: &[K::Elem]) -> bool {
        !linalg::is_zero_vec(v) && self.annihilator_dim(v) == N as usize
    }

    fn square_zero_step(&self, v: &[K::Elem], op: (Op, Op), t: &K::Elem) -> Vec<K::Elem> {
        let mut out = v.to_vec();
        for (col, &s) in self.masks.iter().enumerate() {
            if v[col].is_zero() {
                continue;
            }
            if let Some((neg, u)) = apply2(op.0, op.1, s) {
                let row = self.position[u as usize].expect("parity is preserved");
                let term = t.clone() * &v[col];
                if neg {
                    out[row] -= &term;
                } else {
                    out[row] += &term;
                }
            }
        }
        out
    }
}

impl<K: Field> Model<K> for HalfSpinor<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        self.is_pure(v)
    }

    /// The vacuum moved by random `exp(tε_iε_j)` and `exp(tι_iι_j)`; both square to zero.
    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        let k = self.ssr.field();
        let mut v = self.ssr.zero_vec();
        v[0] = k.one();
        for _ in 0..10 {
            let i = rng.gen_range(0..N);
            let mut j = rng.gen_range(0..N - 1);
            if j >= i {
                j += 1;
            }
            let op = if rng.gen_bool(0.6) {
                (Op::Create(i), Op::Create(j))
            } else {
                (Op::Annihilate(i), Op::Annihilate(j))
            };
            let t = k.random(rng);
            v = self.square_zero_step(&v, op, &t);
        }
        Some(v)
    }
}
