//! Splitting a vector into two `μ`-null summands, the fibers of `μ`, and the
//! eigenspaces of `μ(A)`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{BaseField, Field, QuadExt, Scalar};
use crate::linalg::{self, Matrix, Subspace};
use crate::ssr::data::encode_vector;
use crate::ssr::SsrData;

/// `A = B + C` with `μ(B) = μ(C) = 0`, `q = −3ω(B, C)` and `q² = Q(A)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition<E> {
    pub b: Vec<E>,
    pub c: Vec<E>,
    pub q: E,
    pub omega_bc: E,
    /// Representative of the square class of `Q(A)`.
    pub square_class: E,
}

impl<E: Scalar> Decomposition<E> {
    pub fn to_json<K: Field<Elem = E>>(&self, k: &K) -> Value {
        json!({
            "B": encode_vector(k, &self.b),
            "C": encode_vector(k, &self.c),
            "q": k.encode(&self.q),
            "omega_BC": k.encode(&self.omega_bc),
            "square_class": k.encode(&self.square_class),
        })
    }
}

fn nonzero_quartic<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<(Vec<K::Elem>, K::Elem)> {
    ssr.check_vector(a)?;
    let psi = ssr.psi(a);
    let q = ssr.field().ratio(3, 2) * &ssr.omega_eval(a, &psi);
    if q.is_zero() {
        return Err(Error::ZeroQuartic);
    }
    Ok((psi, q))
}

/// `B = ½(A + Ψ/q)`, `C = ½(A − Ψ/q)` and the checks every split must pass.
fn split_with<K: Field>(ssr: &SsrData<K>, a: &[K::Elem], psi: &[K::Elem], q: &K::Elem, big_q: &K::Elem) -> Result<(Vec<K::Elem>, Vec<K::Elem>, K::Elem)> {
    let k = ssr.field();
    let half = k.ratio(1, 2);
    let s = linalg::vscale(&q.inv().ok_or(Error::NonInvertibleScalar)?, psi);
    let b = linalg::vscale(&half, &linalg::vadd(a, &s));
    let c = linalg::vscale(&half, &linalg::vsub(a, &s));
    if !linalg::is_zero_vec(&ssr.mu(&b)) || !linalg::is_zero_vec(&ssr.mu(&c)) {
        return Err(Error::Invariant("a summand has μ ≠ 0".into()));
    }
    let w = ssr.omega_eval(&b, &c);
    if w.is_zero() || k.from_i64(-3) * &w != *q {
        return Err(Error::Invariant("ω(B, C) ≠ −q/3".into()));
    }
    if (k.from_i64(3) * &w).square() != *big_q {
        return Err(Error::Invariant("(3ω(B, C))² ≠ Q(A)".into()));
    }
    Ok((b, c, w))
}

/// The decomposition for `Q(A)` a nonzero square. The root is fixed by
/// `ω(B, C) = √(Q/9)` with the field's canonical square root, so `q = −3√(Q/9)`.
pub fn lagrangian_decompose<K: BaseField>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<Decomposition<K::Elem>> {
    let k = ssr.field();
    let (psi, big_q) = nonzero_quartic(ssr, a)?;
    let w = k
        .sqrt(&(big_q.clone() * &k.ratio(1, 9)))
        .ok_or(Error::NotASquare)?;
    let q = k.from_i64(-3) * &w;
    let (b, c, omega_bc) = split_with(ssr, a, &psi, &q, &big_q)?;
    // the other root swaps the summands
    let (b2, c2, _) = split_with(ssr, a, &psi, &-q.clone(), &big_q)?;
    if b2 != c || c2 != b {
        return Err(Error::Invariant("the opposite root does not swap the summands".into()));
    }
    Ok(Decomposition {
        b,
        c,
        q,
        omega_bc,
        square_class: k.one(),
    })
}

/// The decomposition over `K[√λ]` when `Q(A) ∈ λ·(K*)²`: `B = ½(A + Ψ/q)` with
/// `q = z√λ`, `z = √(Q/λ)` canonical, and `C` the conjugate of `B`.
pub fn quad_ext_decompose<K: BaseField>(
    ssr: &SsrData<K>,
    a: &[K::Elem],
    lambda: &K::Elem,
) -> Result<(QuadExt<K>, Decomposition<<QuadExt<K> as Field>::Elem>)> {
    let k = ssr.field();
    let (_, big_q) = nonzero_quartic(ssr, a)?;
    let ext = QuadExt::new(k.clone(), lambda.clone())?;
    let z = k
        .sqrt(&big_q.div(lambda)?)
        .ok_or(Error::WrongSquareClass)?;
    let ssr2 = ssr.base_extend(&ext);
    let a2: Vec<_> = a.iter().map(|x| ext.embed(x)).collect();
    let psi2 = ssr2.psi(&a2);
    let q = ext.sqrt_lambda() * &ext.embed(&z);
    let big_q2 = ext.embed(&big_q);
    let (b, c, omega_bc) = split_with(&ssr2, &a2, &psi2, &q, &big_q2)?;
    let conj: Vec<_> = b.iter().map(|x| x.conj()).collect();
    if conj != c {
        return Err(Error::Invariant("C is not the conjugate of B".into()));
    }
    if linalg::vadd(&b, &conj) != a2 {
        return Err(Error::Invariant("B + conj(B) ≠ A".into()));
    }
    let class = ext.embed(&k.square_class_rep(lambda)?);
    Ok((
        ext,
        Decomposition {
            b,
            c,
            q,
            omega_bc,
            square_class: class,
        },
    ))
}

/// `{xA + yΨ(A) : x² − Q(A)y² = 1}`, the fiber of `μ` through `A` when `Q(A) ≠ 0`.
#[derive(Clone, Debug)]
pub struct MuFiber<K: Field> {
    a: Vec<K::Elem>,
    psi: Vec<K::Elem>,
    q: K::Elem,
    mu: Vec<K::Elem>,
}

impl<K: Field> MuFiber<K> {
    pub fn new(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<Self> {
        let (psi, q) = nonzero_quartic(ssr, a)?;
        Ok(MuFiber {
            a: a.to_vec(),
            psi,
            q,
            mu: ssr.mu(a),
        })
    }

    pub fn quartic(&self) -> &K::Elem {
        &self.q
    }

    pub fn point(&self, x: &K::Elem, y: &K::Elem) -> Vec<K::Elem> {
        linalg::vadd(&linalg::vscale(x, &self.a), &linalg::vscale(y, &self.psi))
    }

    /// Coordinates `(x, y)` of `v` in the plane `⟨A, Ψ(A)⟩`, if it lies there.
    pub fn plane_coords(&self, ssr: &SsrData<K>, v: &[K::Elem]) -> Option<(K::Elem, K::Elem)> {
        let m = Matrix::from_cols(&ssr.zero(), &[self.a.clone(), self.psi.clone()], self.a.len()).ok()?;
        let sol = m.solve(v).ok()?;
        Some((sol[0].clone(), sol[1].clone()))
    }

    /// Whether `v` lies on the conic in the plane.
    pub fn contains(&self, ssr: &SsrData<K>, v: &[K::Elem]) -> bool {
        match self.plane_coords(ssr, v) {
            Some((x, y)) => (x.square() - self.q.clone() * &y.square()).is_one(),
            None => false,
        }
    }

    /// Same test through `μ` directly.
    pub fn same_moment(&self, ssr: &SsrData<K>, v: &[K::Elem]) -> bool {
        ssr.mu(v) == self.mu
    }

    /// Points of the conic: all of them over a finite field, otherwise those of the
    /// parametrization `((1 + Qt²)/(1 − Qt²), 2t/(1 − Qt²))` for `t = 1..=samples`.
    pub fn sample(&self, k: &K, samples: usize) -> Vec<(K::Elem, K::Elem)> {
        if let Some(all) = k.elements() {
            let mut out = Vec::new();
            for x in &all {
                for y in &all {
                    if (x.square() - self.q.clone() * &y.square()).is_one() {
                        out.push((x.clone(), y.clone()));
                    }
                }
            }
            return out;
        }
        let mut out = Vec::with_capacity(samples);
        for t in 1..=samples as i64 {
            let t = k.from_i64(t);
            let qt2 = self.q.clone() * &t.square();
            let den = k.one() - &qt2;
            if let Some(inv) = den.inv() {
                out.push(((k.one() + &qt2) * &inv, k.from_i64(2) * &t * &inv));
            }
        }
        out
    }
}

pub fn mu_fiber<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<MuFiber<K>> {
    MuFiber::new(ssr, a)
}

/// One eigenspace of `μ(A)` with its eigenvalue.
#[derive(Clone, Debug)]
pub struct EigenBlock<E> {
    pub space: Subspace<E>,
    pub eigenvalue: E,
}

/// `V = ⟨B⟩ ⊕ (C^⊥ ∩ Ker dμ_B) ⊕ (B^⊥ ∩ Ker dμ_C) ⊕ ⟨C⟩` with eigenvalues
/// `−3w, −w, w, 3w` where `w = ω(B, C)`.
#[derive(Clone, Debug)]
pub struct MuEigenDecomposition<E> {
    pub decomposition: Decomposition<E>,
    pub blocks: [EigenBlock<E>; 4],
}

impl<E: Scalar> MuEigenDecomposition<E> {
    pub fn dims(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.blocks[i].space.dim())
    }

    pub fn to_json<K: Field<Elem = E>>(&self, k: &K) -> Value {
        json!({
            "decomposition": self.decomposition.to_json(k),
            "blocks": self.blocks.iter().map(|b| json!({
                "eigenvalue": k.encode(&b.eigenvalue),
                "dim": b.space.dim(),
                "basis": b.space.basis().iter().map(|v| encode_vector(k, v)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn mu_eigendecomposition<K: BaseField>(
    ssr: &SsrData<K>,
    a: &[K::Elem],
) -> Result<MuEigenDecomposition<K::Elem>> {
    let k = ssr.field();
    let d = lagrangian_decompose(ssr, a)?;
    let n = ssr.dim();
    let om = ssr.omega();
    let w = d.omega_bc.clone();
    let line = |v: &[K::Elem]| Subspace::span_of(v);
    let b_block = line(&d.b);
    let c_block = line(&d.c);
    let mid1 = om.perp(&line(&d.c)).intersection(&ssr.ker_dmu(&d.b));
    let mid2 = om.perp(&line(&d.b)).intersection(&ssr.ker_dmu(&d.c));
    let scalars = [k.from_i64(-3) * &w, -w.clone(), w.clone(), k.from_i64(3) * &w];
    let spaces = [b_block, mid1, mid2, c_block];
    let mu = ssr.mu_matrix(a);
    let half = n / 2;
    let expected = [1, half - 1, half - 1, 1];
    let mut total = Subspace::zero_space(&k.zero(), n);
    for ((s, c), e) in spaces.iter().zip(&scalars).zip(expected) {
        if s.dim() != e {
            return Err(Error::Invariant(format!("block of dimension {} where {e} was expected", s.dim())));
        }
        let eig = mu.sub(&Matrix::identity(k, n).scale(c)).kernel();
        if &eig != s {
            return Err(Error::Invariant("block is not the full eigenspace".into()));
        }
        total = total.sum(s);
    }
    if total.dim() != n {
        return Err(Error::Invariant("blocks do not span V".into()));
    }
    let psi = ssr.psi(a);
    let plane = Subspace::from_vectors(&k.zero(), n, &[a.to_vec(), psi]);
    if spaces[0].sum(&spaces[3]) != plane {
        return Err(Error::Invariant("outer blocks do not span ⟨A, Ψ(A)⟩".into()));
    }
    if spaces[1].sum(&spaces[2]) != om.perp(&plane) {
        return Err(Error::Invariant("inner blocks do not span ⟨A, Ψ(A)⟩^⊥".into()));
    }
    let [s0, s1, s2, s3] = spaces;
    let [c0, c1, c2, c3] = scalars;
    Ok(MuEigenDecomposition {
        decomposition: d,
        blocks: [
            EigenBlock { space: s0, eigenvalue: c0 },
            EigenBlock { space: s1, eigenvalue: c1 },
            EigenBlock { space: s2, eigenvalue: c2 },
            EigenBlock { space: s3, eigenvalue: c3 },
        ],
    })
}
