//! Polynomial identities among the covariants.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, minimal_polynomial, Matrix, Poly};
use crate::ssr::SsrData;

/// Named identity checks for one vector.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub results: Vec<(&'static str, bool)>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.results
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.results
                .iter()
                .map(|(n, ok)| (n.to_string(), Value::Bool(*ok)))
                .collect(),
        )
    }
}

/// Checks the covariant identities at `A` for the combinations `aA + bΨ` and
/// `a'A + b'Ψ` with `a' = a + b`, `b' = a − b`.
pub fn covariant_identities<K: Field>(
    ssr: &SsrData<K>,
    a_vec: &[K::Elem],
    a: &K::Elem,
    b: &K::Elem,
) -> Result<IdentityReport> {
    ssr.check_vector(a_vec)?;
    let mu = ssr.mu(a_vec);
    let psi = ssr.act(&mu, a_vec);
    let q = ssr.field().ratio(3, 2) * &ssr.omega_eval(a_vec, &psi);
    let q2 = q.square();
    let mut results = Vec::new();

    results.push(("mu_of_psi", ssr.mu(&psi) == linalg::vscale(&-q.clone(), &mu)));
    results.push((
        "psi_of_psi",
        ssr.psi(&psi) == linalg::vscale(&-q2.clone(), a_vec),
    ));
    results.push(("q_of_psi", ssr.quartic(&psi) == q2.clone() * &q));

    let comb = |x: &K::Elem, y: &K::Elem| {
        linalg::vadd(&linalg::vscale(x, a_vec), &linalg::vscale(y, &psi))
    };
    let a2 = a.clone() + b;
    let b2 = a.clone() - b;
    let v1 = comb(a, b);
    let v2 = comb(&a2, &b2);

    let coef = a.clone() * &a2 - q.clone() * b * &b2;
    results.push(("bilinear_on_plane", ssr.bmu(&v1, &v2) == linalg::vscale(&coef, &mu)));

    let norm = a.square() - q.clone() * &b.square();
    let expected_psi = linalg::vscale(&norm, &comb(&(q.clone() * b), a));
    results.push(("psi_on_plane", ssr.psi(&v1) == expected_psi));
    results.push(("q_on_plane", ssr.quartic(&v1) == norm.square() * &q));

    results.push((
        "mu_action_on_plane",
        ssr.act(&mu, &v1) == comb(&(q.clone() * b), a),
    ));

    let mu2_a = ssr.act(&mu, &ssr.act(&mu, a_vec));
    let mu2_psi = ssr.act(&mu, &ssr.act(&mu, &psi));
    results.push((
        "mu_squared_on_plane",
        mu2_a == linalg::vscale(&q, a_vec) && mu2_psi == linalg::vscale(&q, &psi),
    ));

    Ok(IdentityReport { results })
}

/// Minimal polynomial of `μ(A)` with the expected shape.
#[derive(Clone, Debug)]
pub struct MinPolyResult<E> {
    pub minimal_polynomial: Poly<E>,
    /// `(x² − Q)(x² − Q/9)` when `Q ≠ 0`; `x⁴` otherwise.
    pub expected: Poly<E>,
    pub holds: bool,
    pub mu_cubed_zero: bool,
    pub psi_zero: bool,
}

/// For `Q(A) ≠ 0` the minimal polynomial is `(x² − Q)(x² − Q/9)`; for `Q(A) = 0`
/// the operator satisfies `μ⁴ = 0`, and `μ³ = 0` exactly when `Ψ(A) = 0`.
pub fn minimal_polynomial_mu<K: Field>(
    ssr: &SsrData<K>,
    a: &[K::Elem],
) -> Result<MinPolyResult<K::Elem>> {
    ssr.check_vector(a)?;
    if ssr.dim() <= 2 {
        return Err(Error::DimensionMismatch(
            "minimal polynomial shape needs dim V > 2".into(),
        ));
    }
    let k = ssr.field();
    let mu = ssr.mu_matrix(a);
    let psi = mu.mul_vec(a);
    let q = k.ratio(3, 2) * &ssr.omega_eval(a, &psi);
    let minp = minimal_polynomial(&mu);
    let mu3 = mu.pow(3);
    let mu_cubed_zero = mu3.is_zero();
    let psi_zero = linalg::is_zero_vec(&psi);
    let (expected, holds) = if q.is_zero() {
        let x4 = Poly::new(vec![k.zero(), k.zero(), k.zero(), k.zero(), k.one()]);
        let holds = mu3.mul(&mu).is_zero() && mu_cubed_zero == psi_zero;
        (x4, holds)
    } else {
        let f1 = Poly::new(vec![-q.clone(), k.zero(), k.one()]);
        let f2 = Poly::new(vec![-(q.clone() * &k.ratio(1, 9)), k.zero(), k.one()]);
        let e = f1.mul(&f2);
        let holds = minp == e;
        (e, holds)
    };
    Ok(MinPolyResult {
        minimal_polynomial: minp,
        expected,
        holds,
        mu_cubed_zero,
        psi_zero,
    })
}

/// Both sides of `τ(Ψ(P)) − Q(P)τ(P) = −(3/4)μ(P)³ + (1/12)Q(P)μ(P)`.
#[derive(Clone, Debug)]
pub struct SyzygyResult<E> {
    pub lhs: Matrix<E>,
    pub rhs: Matrix<E>,
    pub holds: bool,
}

pub fn eisenstein_syzygy<K: Field>(ssr: &SsrData<K>, p: &[K::Elem]) -> Result<SyzygyResult<K::Elem>> {
    ssr.check_vector(p)?;
    let k = ssr.field();
    let om = ssr.omega();
    let mu = ssr.mu_matrix(p);
    let psi = mu.mul_vec(p);
    let q = k.ratio(3, 2) * &om.eval(p, &psi);
    let lhs = om.tau(&psi).sub(&om.tau(p).scale(&q));
    let rhs = mu
        .pow(3)
        .scale(&k.ratio(-3, 4))
        .add(&mu.scale(&(q * &k.ratio(1, 12))));
    let holds = lhs == rhs;
    Ok(SyzygyResult { lhs, rhs, holds })
}

/// The classical binary-cubic syzygy `x² − Δy² = 4z³` evaluated at a point `v` of the plane.
#[derive(Clone, Debug)]
pub struct ClassicalSyzygy<E> {
    pub x: E,
    pub y: E,
    pub z: E,
    pub delta: E,
    pub holds: bool,
}

impl<E: Scalar> ClassicalSyzygy<E> {
    pub fn to_json<K: Field<Elem = E>>(&self, k: &K) -> Value {
        json!({
            "x": k.encode(&self.x),
            "y": k.encode(&self.y),
            "z": k.encode(&self.z),
            "delta": k.encode(&self.delta),
            "holds": self.holds,
        })
    }
}

pub const BINARY_CUBICS_ID: &str = "BinaryCubics";

/// Values of a cubic `P = a x³ + 3b x²y + 3c xy² + d y³` at `v`.
pub fn eval_cubic<E: Scalar>(p: &[E], v: &[E]) -> E {
    let (s, t) = (&v[0], &v[1]);
    let three = s.from_i64_like(3);
    p[0].clone() * s * s * s
        + three.clone() * &p[1] * s * s * t
        + three * &p[2] * s * t * t
        + p[3].clone() * t * t * t
}

/// `y = P(v)`, `x = Ψ(P)(v)/3`, `z = −½ μ(P)(ṽ)(v)` and `Δ = Q/9`, where `ṽ = Ω(v, ·)`
/// and `μ(P)` acts on linear forms contragrediently.
pub fn classical_eisenstein<K: Field>(
    ssr: &SsrData<K>,
    p: &[K::Elem],
    v: &[K::Elem],
) -> Result<ClassicalSyzygy<K::Elem>> {
    if ssr.tag().map(|t| t.id.as_str()) != Some(BINARY_CUBICS_ID) {
        return Err(Error::WrongConstruction(BINARY_CUBICS_ID.into()));
    }
    ssr.check_vector(p)?;
    if v.len() != 2 {
        return Err(Error::DimensionMismatch("point of the plane must have 2 coordinates".into()));
    }
    let k = ssr.field();
    let mu = ssr.mu(p);
    let psi = ssr.act(&mu, p);
    let q = k.ratio(3, 2) * &ssr.omega_eval(p, &psi);
    // μ in the basis (H, E, F) of sl₂ is [[α, β], [γ, −α]].
    let (alpha, beta, gamma) = (&mu[0], &mu[1], &mu[2]);
    let mv0 = alpha.clone() * &v[0] + &(beta.clone() * &v[1]);
    let mv1 = gamma.clone() * &v[0] - &(alpha.clone() * &v[1]);
    let omega_v_mv = v[0].clone() * &mv1 - &(v[1].clone() * &mv0);
    // (μ·ṽ)(v) = −ṽ(μ v) = −Ω(v, μ v)
    let w = -omega_v_mv;
    let x = eval_cubic(&psi, v) * &k.ratio(1, 3);
    let y = eval_cubic(p, v);
    let z = w * &k.ratio(-1, 2);
    let delta = q * &k.ratio(1, 9);
    let holds = x.square() - delta.clone() * &y.square() == k.from_i64(4) * &z.pow(3);
    Ok(ClassicalSyzygy { x, y, z, delta, holds })
}
