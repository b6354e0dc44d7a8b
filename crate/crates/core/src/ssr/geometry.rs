//! Covariants at a point and the geometry of the orbit through it.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix, Subspace};
use crate::ssr::SsrData;

/// The covariants of one vector.
#[derive(Clone, Debug)]
pub struct CovariantReport<E> {
    pub a: Vec<E>,
    /// Coordinates of `μ(A)` in the Lie algebra basis.
    pub mu: Vec<E>,
    pub mu_matrix: Matrix<E>,
    pub psi: Vec<E>,
    pub q: E,
    pub ker_dmu_dim: usize,
    pub tangent_dim: usize,
}

impl<E: Scalar> CovariantReport<E> {
    pub fn to_json<K: Field<Elem = E>>(&self, k: &K) -> Value {
        json!({
            "A": crate::ssr::data::encode_vector(k, &self.a),
            "mu": crate::ssr::data::encode_vector(k, &self.mu),
            "mu_matrix": crate::ssr::data::encode_matrix(k, &self.mu_matrix),
            "psi": crate::ssr::data::encode_vector(k, &self.psi),
            "Q": k.encode(&self.q),
            "ker_dmu_dim": self.ker_dmu_dim,
            "tangent_dim": self.tangent_dim,
        })
    }
}

pub fn covariant_report<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<CovariantReport<K::Elem>> {
    ssr.check_vector(a)?;
    let mu = ssr.mu(a);
    let mu_matrix = ssr.m_matrix(&mu);
    let psi = mu_matrix.mul_vec(a);
    let q = ssr.field().ratio(3, 2) * &ssr.omega_eval(a, &psi);
    Ok(CovariantReport {
        a: a.to_vec(),
        ker_dmu_dim: ssr.ker_dmu(a).dim(),
        tangent_dim: ssr.tangent(a).dim(),
        mu,
        mu_matrix,
        psi,
        q,
    })
}

/// Linear coefficient of the quartic `t ↦ Q(A + tB)` by the five-point stencil,
/// which is exact for polynomials of degree at most four.
pub fn quartic_derivative<K: Field>(ssr: &SsrData<K>, a: &[K::Elem], b: &[K::Elem]) -> K::Elem {
    let k = ssr.field();
    let at = |t: i64| ssr.quartic(&linalg::vadd(a, &linalg::vscale(&k.from_i64(t), b)));
    let num = k.from_i64(8) * &(at(1) - at(-1)) - (at(2) - at(-2));
    num * &k.ratio(1, 12)
}

/// Checks the polarization identities and the derivative formulas at a point.
pub fn check_polarizations<K: Field>(
    ssr: &SsrData<K>,
    a: &[K::Elem],
    b: &[K::Elem],
    c: &[K::Elem],
    d: &[K::Elem],
) -> Result<()> {
    let k = ssr.field();
    let lhs = linalg::vsub(&ssr.bmu_apply(a, b, c), &ssr.btau_apply(a, b, c));
    if lhs != ssr.b_psi(a, b, c) {
        return Err(Error::Invariant("B(A,B)C − B_τ(A,B)C ≠ B_Ψ(A,B,C)".into()));
    }
    if ssr.omega_eval(d, &ssr.b_psi(a, b, c)) != k.ratio(2, 3) * &ssr.b_q(a, b, c, d) {
        return Err(Error::Invariant("ω(D, B_Ψ(A,B,C)) ≠ (2/3)·B_Q(A,B,C,D)".into()));
    }
    if ssr.b_psi(a, a, a) != ssr.psi(a) || ssr.b_q(a, a, a, a) != ssr.quartic(a) {
        return Err(Error::Invariant("polar forms do not restrict to the covariants".into()));
    }
    let two_b = linalg::vscale(&k.from_i64(2), &ssr.bmu(a, b));
    let diff = linalg::vsub(&linalg::vsub(&ssr.mu(&linalg::vadd(a, b)), &ssr.mu(a)), &ssr.mu(b));
    if diff != two_b {
        return Err(Error::Invariant("dμ_A(B) ≠ 2B(A,B)".into()));
    }
    if quartic_derivative(ssr, a, b) != k.from_i64(4) * &ssr.b_q(b, a, a, a) {
        return Err(Error::Invariant("dQ_A(B) ≠ 4·B_Q(B,A,A,A)".into()));
    }
    Ok(())
}

/// The moment map `μ̃(v)(m) = ω(m·v, v)`, one value per Lie algebra basis element.
pub fn moment_tilde<K: Field>(ssr: &SsrData<K>, v: &[K::Elem]) -> Vec<K::Elem> {
    ssr.m_basis()
        .iter()
        .map(|x| ssr.omega_eval(&x.mul_vec(v), v))
        .collect()
}

/// Kernel of the differential of [`moment_tilde`] at `v`, from the stencil of
/// `μ̃` along each basis direction.
pub fn moment_tilde_kernel<K: Field>(ssr: &SsrData<K>, v: &[K::Elem]) -> Subspace<K::Elem> {
    let k = ssr.field();
    let n = ssr.dim();
    let cols: Vec<Vec<K::Elem>> = (0..n)
        .map(|j| {
            let e = ssr.unit(j);
            let plus = moment_tilde(ssr, &linalg::vadd(v, &e));
            let minus = moment_tilde(ssr, &linalg::vsub(v, &e));
            linalg::vscale(&k.ratio(1, 2), &linalg::vsub(&plus, &minus))
        })
        .collect();
    Matrix::from_cols(&k.zero(), &cols, ssr.m_dim())
        .expect("consistent lengths")
        .kernel()
}

/// Result of testing whether `𝔪·A` is coisotropic.
#[derive(Clone, Debug)]
pub struct CoisotropyResult<E> {
    pub holds: bool,
    pub tangent_dim: usize,
    pub perp_dim: usize,
    /// A vector of `(𝔪·A)^⊥` outside `𝔪·A` when the check fails.
    pub witness: Option<Vec<E>>,
}

pub fn coisotropy_check<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<CoisotropyResult<K::Elem>> {
    ssr.check_vector(a)?;
    if linalg::is_zero_vec(a) {
        return Err(Error::ZeroVector);
    }
    let t = ssr.tangent(a);
    let perp = ssr.omega().perp(&t);
    let witness = perp.basis().iter().find(|b| !t.contains(b)).cloned();
    Ok(CoisotropyResult {
        holds: witness.is_none(),
        tangent_dim: t.dim(),
        perp_dim: perp.dim(),
        witness,
    })
}

/// `Q(A) = 0` if and only if `A ∈ 𝔪·A`; both sides are computed and must agree.
pub fn q_vanishing_test<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<bool> {
    ssr.check_vector(a)?;
    if linalg::is_zero_vec(a) {
        return Err(Error::ZeroVector);
    }
    let q_zero = ssr.quartic(a).is_zero();
    let in_orbit = ssr.tangent(a).contains(a);
    if q_zero != in_orbit {
        return Err(Error::Disagreement(format!(
            "Q(A) = 0 is {q_zero} but A ∈ 𝔪·A is {in_orbit}"
        )));
    }
    Ok(q_zero)
}

/// Tangent-space facts at a nonzero point, each recomputed from scratch.
#[derive(Clone, Debug)]
pub struct OrbitGeometry {
    pub q_zero: bool,
    pub mu_zero: bool,
    pub tangent_dim: usize,
    pub ker_dmu_dim: usize,
    pub lagrangian: bool,
}

/// Checks `Ker dμ_A = (𝔪_μ·A)^⊥`, `Ker dμ̃_A = (𝔪·A)^⊥`, the structure at points
/// with `Q ≠ 0`, and (for `dim V > 2`) that `𝔪·A` is Lagrangian exactly when `μ(A) = 0`.
pub fn orbit_geometry<K: Field>(ssr: &SsrData<K>, a: &[K::Elem]) -> Result<OrbitGeometry> {
    ssr.check_vector(a)?;
    if linalg::is_zero_vec(a) {
        return Err(Error::ZeroVector);
    }
    let om = ssr.omega();
    let ker = ssr.ker_dmu(a);
    let t = ssr.tangent(a);
    let m_mu = ssr.m_mu();
    let m_mu_a: Vec<Vec<K::Elem>> = m_mu.basis().iter().map(|c| ssr.act(c, a)).collect();
    let m_mu_a = Subspace::from_vectors(&ssr.zero(), ssr.dim(), &m_mu_a);
    if ker != om.perp(&m_mu_a) {
        return Err(Error::Invariant("Ker dμ_A ≠ (𝔪_μ·A)^⊥".into()));
    }
    if moment_tilde_kernel(ssr, a) != om.perp(&t) {
        return Err(Error::Invariant("Ker dμ̃_A ≠ (𝔪·A)^⊥".into()));
    }
    let mu = ssr.mu(a);
    let mu_zero = linalg::is_zero_vec(&mu);
    let psi = ssr.act(&mu, a);
    let q = ssr.field().ratio(3, 2) * &om.eval(a, &psi);
    if !q.is_zero() {
        if ker != Subspace::span_of(&psi) {
            return Err(Error::Invariant("Ker dμ_A ≠ ⟨Ψ(A)⟩".into()));
        }
        if t.contains(a) || t.dim() + 1 != ssr.dim() {
            return Err(Error::Invariant("V ≠ 𝔪·A ⊕ ⟨A⟩".into()));
        }
        if om.perp(&Subspace::span_of(&psi)) != t {
            return Err(Error::Invariant("Ker dQ_A ≠ 𝔪·A".into()));
        }
    }
    let lagrangian = om.is_lagrangian(&t);
    if ssr.dim() > 2 && lagrangian != mu_zero {
        return Err(Error::Disagreement(format!(
            "𝔪·A Lagrangian is {lagrangian} but μ(A) = 0 is {mu_zero}"
        )));
    }
    Ok(OrbitGeometry {
        q_zero: q.is_zero(),
        mu_zero,
        tangent_dim: t.dim(),
        ker_dmu_dim: ker.dim(),
        lagrangian,
    })
}
