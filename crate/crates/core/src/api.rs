//! JSON in, JSON out: the operations behind the command line and the C interface.
//!
//! Every entry point returns an [`Outcome`]; `Err` means the request itself was
//! unusable, `Ok` with `passed = false` means a mathematical check failed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::charts::Charts;
use crate::constructions::{construct, ConstructionId};
use crate::decomposition::{lagrangian_decompose, mu_eigendecomposition, mu_fiber, quad_ext_decompose};
use crate::error::{Error, Result};
use crate::faulkner::{build_lie_algebra, recover_ssr, round_trip, simplicity_check};
use crate::field::{BaseField, Field, FieldDescriptor, PrimeField, Rationals};
use crate::linalg;
use crate::selftest::run_selftest;
use crate::ssr::{
    classical_eisenstein, coisotropy_check, covariant_identities, covariant_report, eisenstein_syzygy,
    minimal_polynomial_mu, q_vanishing_test, verify_ssr, SsrData,
};

/// A report and whether every check in it held.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, passed: true }
    }

    fn checked(report: Value, passed: bool) -> Self {
        Outcome { report, passed }
    }
}

/// The base fields a request can name.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyField {
    Q(Rationals),
    Fp(PrimeField),
}

impl AnyField {
    pub fn parse(desc: &str) -> Result<Self> {
        match FieldDescriptor::parse(desc)? {
            FieldDescriptor::Rationals => Ok(AnyField::Q(Rationals)),
            FieldDescriptor::Prime(p) => Ok(AnyField::Fp(PrimeField::new(p)?)),
            FieldDescriptor::Quadratic { .. } => Err(Error::InvalidField(desc.into())),
        }
    }

    /// The field named by `explicit` or, failing that, by the payload's `field` entry.
    /// Both present and different is an error.
    pub fn resolve(explicit: Option<&str>, payload: &Value) -> Result<Self> {
        let stored = payload.get("field").and_then(Value::as_str).map(Self::parse).transpose()?;
        match (explicit.map(Self::parse).transpose()?, stored) {
            (Some(a), Some(b)) if a != b => Err(Error::InvalidField(format!(
                "requested {} but the data is over {}",
                a.describe(),
                b.describe()
            ))),
            (Some(a), _) | (None, Some(a)) => Ok(a),
            (None, None) => Ok(AnyField::Q(Rationals)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AnyField::Q(k) => k.descriptor().to_string(),
            AnyField::Fp(k) => k.descriptor().to_string(),
        }
    }
}

macro_rules! with_field {
    ($f:expr, $k:ident => $body:expr) => {
        match $f {
            AnyField::Q($k) => $body,
            AnyField::Fp($k) => $body,
        }
    };
}

fn load<K: BaseField>(k: &K, ssr: &Value) -> Result<SsrData<K>> {
    SsrData::from_json(k.clone(), ssr)
}

fn scalar<K: Field>(k: &K, v: &Value) -> Result<K::Elem> {
    k.decode(v)
}

/// `construct`: the representation as JSON, re-read and re-verified before it is returned.
pub fn construct_json(id: &str, params: &Value, field: &str) -> Result<Outcome> {
    let id = ConstructionId::from_name(id, params)?;
    with_field!(AnyField::parse(field)?, k => {
        let s = construct(&id, &k)?;
        let out = s.to_json();
        let again = load(&k, &out)?;
        let rep = verify_ssr(&again, false);
        if rep.passed() {
            Ok(Outcome::ok(out))
        } else {
            Ok(Outcome::checked(json!({"construction": id.to_string(), "verification": rep.to_json()}), false))
        }
    })
}

/// `verify`: every axiom on basis vectors.
pub fn verify_json(ssr: &Value, field: Option<&str>, normalizer: bool) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let rep = verify_ssr(&s, normalizer);
        Ok(Outcome::checked(rep.to_json(), rep.passed()))
    })
}

/// `covariants`: μ, Ψ, Q at a vector with the identities, orbit facts and coisotropy there.
pub fn covariants_json(ssr: &Value, field: Option<&str>, vector: &Value, seed: u64) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let a = s.decode_vector(vector)?;
        let mut out = covariant_report(&s, &a)?.to_json(&k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (k.random(&mut rng), k.random(&mut rng));
        let ids = covariant_identities(&s, &a, &x, &y)?;
        let mut passed = ids.all_hold();
        out["identities"] = ids.to_json();
        out["seed"] = json!(seed);
        if !linalg::is_zero_vec(&a) {
            let c = coisotropy_check(&s, &a)?;
            passed &= c.holds;
            out["coisotropic"] = json!(c.holds);
            out["q_vanishes"] = json!(q_vanishing_test(&s, &a)?);
        }
        if s.dim() > 2 {
            let m = minimal_polynomial_mu(&s, &a)?;
            passed &= m.holds;
            out["minimal_polynomial"] = json!({
                "coeffs": s.encode_vector(&m.minimal_polynomial.coeffs),
                "matches_expected": m.holds,
            });
        }
        Ok(Outcome::checked(out, passed))
    })
}

/// `decompose`: the split `A = B + C`, over the field or over `k[√λ]`.
pub fn decompose_json(ssr: &Value, field: Option<&str>, vector: &Value, lambda: Option<&Value>) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let a = s.decode_vector(vector)?;
        match lambda {
            None => {
                let mut out = lagrangian_decompose(&s, &a)?.to_json(&k);
                if s.dim() > 2 {
                    let e = mu_eigendecomposition(&s, &a)?;
                    out["eigen_dims"] = json!(e.dims());
                }
                Ok(Outcome::ok(out))
            }
            Some(l) => {
                let (ext, d) = quad_ext_decompose(&s, &a, &scalar(&k, l)?)?;
                Ok(Outcome::ok(d.to_json(&ext)))
            }
        }
    })
}

/// `fiber`: points `xA + yΨ(A)` with `x² − Q y² = 1`, each with `μ` re-checked.
pub fn fiber_json(ssr: &Value, field: Option<&str>, vector: &Value, samples: usize) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let a = s.decode_vector(vector)?;
        let f = mu_fiber(&s, &a)?;
        let mut passed = true;
        let points: Vec<Value> = f
            .sample(&k, samples)
            .iter()
            .map(|(x, y)| {
                let p = f.point(x, y);
                let same = f.same_moment(&s, &p);
                passed &= same;
                json!({"x": k.encode(x), "y": k.encode(y), "point": s.encode_vector(&p), "same_mu": same})
            })
            .collect();
        Ok(Outcome::checked(json!({"Q": k.encode(f.quartic()), "points": points}), passed))
    })
}

/// `syzygy`: the matrix identity at `P`, and the classical one at `v` for binary cubics.
pub fn syzygy_json(ssr: &Value, field: Option<&str>, vector: &Value, point: Option<&Value>) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let p = s.decode_vector(vector)?;
        let r = eisenstein_syzygy(&s, &p)?;
        let mut passed = r.holds;
        let mut out = json!({"holds": r.holds});
        if let Some(v) = point {
            let v = v
                .as_array()
                .ok_or_else(|| Error::Parse("point must be an array".into()))?
                .iter()
                .map(|x| k.decode(x))
                .collect::<Result<Vec<_>>>()?;
            let c = classical_eisenstein(&s, &p, &v)?;
            passed &= c.holds;
            out["classical"] = c.to_json(&k);
        }
        Ok(Outcome::checked(out, passed))
    })
}

/// `lie-build`: the graded algebra, Jacobi, simplicity and the round trip.
pub fn lie_build_json(ssr: &Value, field: Option<&str>, constants: bool, seed: u64) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let g = build_lie_algebra(&s)?;
        let exhaustive = k.elements().is_some() || g.dim() <= 52;
        let jac = if exhaustive {
            g.jacobi_exhaustive()
        } else {
            g.jacobi_random(10_000, &mut ChaCha8Rng::seed_from_u64(seed))
        };
        let simple = simplicity_check(&g, &s)?;
        let rt = round_trip(&s, &recover_ssr(&g)?);
        let mut out = g.to_json(constants);
        out["simple"] = json!(simple);
        out["jacobi"] = json!({
            "mode": if exhaustive { "exhaustive" } else { "random" },
            "triples": jac.triples,
            "failures": jac.failures,
            "first_failure": jac.first_failure,
        });
        if !exhaustive {
            out["seed"] = json!(seed);
        }
        out["round_trip"] = json!({
            "omega_factor": rt.omega_factor.as_ref().map(|x| k.encode(x)),
            "bmu_factor": rt.bmu_factor.as_ref().map(|x| k.encode(x)),
            "matches": rt.matches(),
        });
        Ok(Outcome::checked(out, jac.holds() && rt.matches()))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChartOp {
    Alpha,
    Beta,
    Act,
    MuHat,
}

impl std::str::FromStr for ChartOp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(ChartOp::Alpha),
            "beta" => Ok(ChartOp::Beta),
            "act" => Ok(ChartOp::Act),
            "mu-hat" | "mu_hat" => Ok(ChartOp::MuHat),
            _ => Err(Error::Parse(format!("unknown chart operation {s}"))),
        }
    }
}

/// `chart`: `α` and `μ̂` take `{"P", "z"}`, `β` takes `{"re", "im"}`, `act` takes
/// `{"P", "z"}` and `scalar = [a, b]` for `a + b√λ`.
pub fn chart_json(
    op: ChartOp,
    ssr: &Value,
    field: Option<&str>,
    lambda: &Value,
    point: &Value,
    scalar_ab: Option<&Value>,
) -> Result<Outcome> {
    with_field!(AnyField::resolve(field, ssr)?, k => {
        let s = load(&k, ssr)?;
        let c = Charts::new(&s, &scalar(&k, lambda)?)?;
        let lam = k.encode(c.lambda());
        let out = match op {
            ChartOp::Alpha => {
                let p = c.decode_hat(point)?;
                let v = c.alpha(&p)?;
                json!({"lambda": lam, "alpha": c.encode_z(&v), "h": k.encode(&c.h(&v)?)})
            }
            ChartOp::Beta => {
                let v = c.decode_z(point)?;
                json!({"lambda": lam, "beta": c.encode_hat(&c.beta(&v)?)})
            }
            ChartOp::Act => {
                let p = c.decode_hat(point)?;
                let ab = scalar_ab
                    .and_then(Value::as_array)
                    .filter(|v| v.len() == 2)
                    .ok_or_else(|| Error::Parse("act needs a scalar [a, b]".into()))?;
                let (a, b) = (scalar(&k, &ab[0])?, scalar(&k, &ab[1])?);
                json!({"lambda": lam, "point": c.encode_hat(&c.torus_act(&a, &b, &p)?)})
            }
            ChartOp::MuHat => {
                let p = c.decode_hat(point)?;
                let (mu, z) = c.mu_hat(&p);
                json!({"lambda": lam, "mu": s.encode_vector(&mu), "z": k.encode(&z)})
            }
        };
        Ok(Outcome::ok(out))
    })
}

/// `selftest`: every module's invariants on every construction.
pub fn selftest_json(field: &str, seed: u64, samples: usize) -> Result<Outcome> {
    with_field!(AnyField::parse(field)?, k => {
        let rep = run_selftest(&k, seed, samples)?;
        Ok(Outcome::checked(rep.to_json(), rep.passed()))
    })
}
