//! The double cover `Ô_λ = {(P, z) : Q(P) = λz² ≠ 0}`, the null vectors
//! `Z_λ` of `V ⊗ A_λ` with `h ≠ 0`, and the mutually inverse charts between them.
//!
//! `A_λ = k[√λ]` is built on the square-class representative of the given `λ`,
//! so `z` is always measured against that representative.

use rand::Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{BaseField, QuadElem, QuadExt, Scalar};
use crate::linalg::{self, Matrix};
use crate::ssr::SsrData;

/// A point `(P, z)` of the double cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HatPoint<E> {
    pub p: Vec<E>,
    pub z: E,
}

impl<E: Scalar> HatPoint<E> {
    /// The covering involution `(P, z) ↦ (P, −z)`.
    pub fn flip(&self) -> Self {
        HatPoint {
            p: self.p.clone(),
            z: -self.z.clone(),
        }
    }

    /// The weighted action `a·(P, z) = (aP, a²z)`.
    pub fn scale(&self, a: &E) -> Self {
        HatPoint {
            p: linalg::vscale(a, &self.p),
            z: a.square() * &self.z,
        }
    }
}

/// A vector `v = re + im·√λ` of `V ⊗ A_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZPoint<E> {
    pub v: Vec<QuadElem<E>>,
}

impl<E: Scalar> ZPoint<E> {
    pub fn conj(&self) -> Self {
        ZPoint {
            v: self.v.iter().map(|x| x.conj()).collect(),
        }
    }

    pub fn re(&self) -> Vec<E> {
        self.v.iter().map(|x| x.re.clone()).collect()
    }

    pub fn im(&self) -> Vec<E> {
        self.v.iter().map(|x| x.im.clone()).collect()
    }
}

/// Charts for one representation and one square class.
#[derive(Clone, Debug)]
pub struct Charts<K: BaseField> {
    ssr: SsrData<K>,
    ext: QuadExt<K>,
    ext_ssr: SsrData<QuadExt<K>>,
}

impl<K: BaseField> Charts<K> {
    pub fn new(ssr: &SsrData<K>, lambda: &K::Elem) -> Result<Self> {
        let k = ssr.field();
        if lambda.is_zero() {
            return Err(Error::NonInvertibleScalar);
        }
        let ext = QuadExt::new(k.clone(), k.square_class_rep(lambda)?)?;
        Ok(Charts {
            ssr: ssr.clone(),
            ext_ssr: ssr.base_extend(&ext),
            ext,
        })
    }

    pub fn lambda(&self) -> &K::Elem {
        self.ext.lambda()
    }

    pub fn algebra(&self) -> &QuadExt<K> {
        &self.ext
    }

    pub fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    fn k(&self) -> &K {
        self.ssr.field()
    }

    pub fn point(&self, p: Vec<K::Elem>, z: K::Elem) -> Result<HatPoint<K::Elem>> {
        let pt = HatPoint { p, z };
        self.check_hat(&pt)?;
        Ok(pt)
    }

    pub fn check_hat(&self, pt: &HatPoint<K::Elem>) -> Result<()> {
        self.ssr.check_vector(&pt.p)?;
        let q = self.ssr.quartic(&pt.p);
        if q.is_zero() {
            return Err(Error::InvalidPoint("Q(P) = 0".into()));
        }
        if q != self.lambda().clone() * &pt.z.square() {
            return Err(Error::InvalidPoint("Q(P) ≠ λz²".into()));
        }
        Ok(())
    }

    /// `h(v) = ω_λ(v̄, v)/√λ`, which lies in the base field.
    pub fn h(&self, v: &ZPoint<K::Elem>) -> Result<K::Elem> {
        let w = self.ext_ssr.omega_eval(&v.conj().v, &v.v);
        if !w.re.is_zero() {
            return Err(Error::Invariant("ω_λ(v̄, v) is not a multiple of √λ".into()));
        }
        Ok(w.im)
    }

    pub fn check_z(&self, v: &ZPoint<K::Elem>) -> Result<()> {
        if v.v.len() != self.ssr.dim() {
            return Err(Error::DimensionMismatch(format!("expected {} entries", self.ssr.dim())));
        }
        if v.v.iter().any(|x| x.lambda != *self.lambda()) {
            return Err(Error::InvalidPoint("coordinates use a different λ".into()));
        }
        if !linalg::is_zero_vec(&self.ext_ssr.mu(&v.v)) {
            return Err(Error::InvalidPoint("μ_λ(v) ≠ 0".into()));
        }
        if self.h(v)?.is_zero() {
            return Err(Error::InvalidPoint("h(v) = 0".into()));
        }
        Ok(())
    }

    fn alpha_raw(&self, pt: &HatPoint<K::Elem>) -> Result<ZPoint<K::Elem>> {
        let k = self.k();
        let half = k.ratio(1, 2);
        // 1/(z√λ) = √λ/(zλ)
        let c = half.clone().div(&(pt.z.clone() * self.lambda()))?;
        let psi = self.ssr.psi(&pt.p);
        Ok(ZPoint {
            v: pt
                .p
                .iter()
                .zip(&psi)
                .map(|(p, s)| self.ext.elem(half.clone() * p, c.clone() * s))
                .collect(),
        })
    }

    /// `α(P, z) = ½(P + Ψ(P)/(z√λ))`.
    pub fn alpha(&self, pt: &HatPoint<K::Elem>) -> Result<ZPoint<K::Elem>> {
        self.check_hat(pt)?;
        let v = self.alpha_raw(pt)?;
        self.check_z(&v)
            .map_err(|e| Error::Invariant(format!("α(P, z) is not in Z_λ: {e}")))?;
        if self.h(&v)? != pt.z.clone() * &self.k().ratio(1, 3) {
            return Err(Error::Invariant("h(α(P, z)) ≠ z/3".into()));
        }
        if self.alpha_raw(&pt.flip())? != v.conj() {
            return Err(Error::Invariant("α(P, −z) ≠ conj α(P, z)".into()));
        }
        let two = self.k().from_i64(2);
        let scaled = self.alpha_raw(&pt.scale(&two))?;
        let want: Vec<_> = v.v.iter().map(|x| x.clone() * &self.ext.embed(&two)).collect();
        if scaled.v != want {
            return Err(Error::Invariant("α(a·p) ≠ a·α(p)".into()));
        }
        Ok(v)
    }

    fn beta_raw(&self, v: &ZPoint<K::Elem>) -> Result<HatPoint<K::Elem>> {
        let two = self.k().from_i64(2);
        Ok(HatPoint {
            p: linalg::vscale(&two, &v.re()),
            z: self.k().from_i64(3) * &self.h(v)?,
        })
    }

    /// `β(v) = (v + v̄, 3h(v))`.
    pub fn beta(&self, v: &ZPoint<K::Elem>) -> Result<HatPoint<K::Elem>> {
        self.check_z(v)?;
        let pt = self.beta_raw(v)?;
        self.check_hat(&pt)
            .map_err(|e| Error::Invariant(format!("β(v) is not in Ô_λ: {e}")))?;
        if self.alpha_raw(&pt)? != *v {
            return Err(Error::Invariant("α(β(v)) ≠ v".into()));
        }
        Ok(pt)
    }

    /// `(a + b√λ)·(P, z) = (aP + (b/z)Ψ(P), (a² − b²λ)z)`, checked against
    /// `β((a + b√λ)·α(P, z))`.
    pub fn torus_act(&self, a: &K::Elem, b: &K::Elem, pt: &HatPoint<K::Elem>) -> Result<HatPoint<K::Elem>> {
        self.check_hat(pt)?;
        let u = self.ext.elem(a.clone(), b.clone());
        let norm = u.norm();
        if norm.is_zero() {
            return Err(Error::NonInvertibleScalar);
        }
        let psi = self.ssr.psi(&pt.p);
        let out = HatPoint {
            p: linalg::vadd(&linalg::vscale(a, &pt.p), &linalg::vscale(&b.div(&pt.z)?, &psi)),
            z: norm * &pt.z,
        };
        self.check_hat(&out)
            .map_err(|e| Error::Invariant(format!("torus action left Ô_λ: {e}")))?;
        let v = self.alpha_raw(pt)?;
        let moved = ZPoint {
            v: v.v.iter().map(|x| u.clone() * x).collect(),
        };
        if self.beta_raw(&moved)? != out {
            return Err(Error::Invariant("action formula disagrees with β(u·α(p))".into()));
        }
        Ok(out)
    }

    /// `μ̂(P, z) = (μ(P), z)`.
    pub fn mu_hat(&self, pt: &HatPoint<K::Elem>) -> (Vec<K::Elem>, K::Elem) {
        (self.ssr.mu(&pt.p), pt.z.clone())
    }

    /// A norm-one `u` with `u·p = p1`, when `μ̂(p) = μ̂(p1)`. Writes
    /// `P₁ = xP + yΨ(P)` and takes `u = x + yz√λ`.
    pub fn orbit_unit(&self, pt: &HatPoint<K::Elem>, other: &HatPoint<K::Elem>) -> Result<Option<QuadElem<K::Elem>>> {
        self.check_hat(pt)?;
        self.check_hat(other)?;
        if self.mu_hat(pt) != self.mu_hat(other) {
            return Ok(None);
        }
        let n = self.ssr.dim();
        let psi = self.ssr.psi(&pt.p);
        let m = Matrix::from_cols(&self.k().zero(), &[pt.p.clone(), psi], n)?;
        let xy = m
            .solve(&other.p)
            .map_err(|_| Error::Invariant("equal μ̂ but P₁ is not in ⟨P, Ψ(P)⟩".into()))?;
        let u = self.ext.elem(xy[0].clone(), xy[1].clone() * &pt.z);
        if !u.norm().is_one() {
            return Err(Error::Invariant("orbit unit does not have norm one".into()));
        }
        if self.torus_act(&u.re, &u.im, pt)? != *other {
            return Err(Error::Invariant("orbit unit does not move p to p₁".into()));
        }
        Ok(Some(u))
    }

    /// The pullback identity `η(α(P, z)) = ½(η(P) + η(Ψ(P)/√λ)/z)` for the
    /// `k`-linear functional `η(x + y√λ) = ⟨e_re, x⟩ + ⟨e_im, y⟩`.
    pub fn pullback_holds(&self, pt: &HatPoint<K::Elem>, eta_re: &[K::Elem], eta_im: &[K::Elem]) -> Result<bool> {
        let eta = |v: &ZPoint<K::Elem>| linalg::dot(eta_re, &v.re()) + &linalg::dot(eta_im, &v.im());
        let lhs = eta(&self.alpha(pt)?);
        let lam = self.ext.embed(self.lambda());
        let inv_sqrt = self.ext.sqrt_lambda().div(&lam)?;
        let psi = self.ssr.psi(&pt.p);
        let on_p = ZPoint {
            v: pt.p.iter().map(|x| self.ext.embed(x)).collect(),
        };
        let on_psi = ZPoint {
            v: psi.iter().map(|x| self.ext.embed(x) * &inv_sqrt).collect(),
        };
        let rhs = self.k().ratio(1, 2) * &(eta(&on_p) + &eta(&on_psi).div(&pt.z)?);
        Ok(lhs == rhs && self.h(&self.alpha(pt)?)? * &self.k().from_i64(3) == pt.z)
    }

    /// A random point: random vectors until `Q(P)/λ` is a nonzero square, with a random sign of `z`.
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R, tries: usize) -> Option<HatPoint<K::Elem>> {
        let k = self.k();
        for _ in 0..tries {
            let p = self.ssr.random_vector(rng);
            let q = self.ssr.quartic(&p);
            if q.is_zero() {
                continue;
            }
            if let Some(z) = q.div(self.lambda()).ok().and_then(|r| k.sqrt(&r)) {
                let z = if rng.gen_bool(0.5) { -z } else { z };
                return Some(HatPoint { p, z });
            }
        }
        None
    }

    pub fn encode_hat(&self, pt: &HatPoint<K::Elem>) -> Value {
        json!({"P": self.ssr.encode_vector(&pt.p), "z": self.k().encode(&pt.z)})
    }

    pub fn decode_hat(&self, v: &Value) -> Result<HatPoint<K::Elem>> {
        let p = self.ssr.decode_vector(v.get("P").ok_or_else(|| Error::Parse("missing P".into()))?)?;
        let z = self.k().decode(v.get("z").ok_or_else(|| Error::Parse("missing z".into()))?)?;
        self.point(p, z)
    }

    pub fn encode_z(&self, v: &ZPoint<K::Elem>) -> Value {
        json!({
            "lambda": self.k().encode(self.lambda()),
            "re": self.ssr.encode_vector(&v.re()),
            "im": self.ssr.encode_vector(&v.im()),
        })
    }

    pub fn decode_z(&self, v: &Value) -> Result<ZPoint<K::Elem>> {
        if let Some(l) = v.get("lambda") {
            if self.k().decode(l)? != *self.lambda() {
                return Err(Error::InvalidPoint("λ does not match the chart".into()));
            }
        }
        let get = |key: &str| -> Result<Vec<K::Elem>> {
            self.ssr
                .decode_vector(v.get(key).ok_or_else(|| Error::Parse(format!("missing {key}")))?)
        };
        let (re, im) = (get("re")?, get("im")?);
        let pt = ZPoint {
            v: re.into_iter().zip(im).map(|(a, b)| self.ext.elem(a, b)).collect(),
        };
        self.check_z(&pt)?;
        Ok(pt)
    }
}
