//! Seeded invariant sweep over every construction for one field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::charts::Charts;
use crate::constructions::{build, ConstructionId};
use crate::decomposition::{lagrangian_decompose, mu_eigendecomposition, mu_fiber};
use crate::error::Result;
use crate::faulkner::{build_lie_algebra, recover_ssr, round_trip, simplicity_check, ternary_from_ssr, verify_ternary_axioms};
use crate::field::{BaseField, Field, Scalar};
use crate::linalg;
use crate::ssr::{
    classical_eisenstein, coisotropy_check, covariant_identities, eisenstein_syzygy, minimal_polynomial_mu,
    orbit_geometry, q_vanishing_test, verify_ssr, SsrData,
};

/// One named check: how many cases ran and the first failing input, if any.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub counterexample: Option<Value>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({"name": self.name, "passed": self.passed(), "cases": self.cases});
        if let Some(c) = &self.counterexample {
            out["counterexample"] = c.clone();
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct SelftestReport {
    pub field: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "seed": self.seed,
            "samples": self.samples,
            "passed": self.passed(),
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
        })
    }
}

struct Check {
    name: String,
    cases: usize,
    counterexample: Option<Value>,
}

impl Check {
    fn new(name: String) -> Self {
        Check {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; `ok = Err` carries the failure payload.
    fn case(&mut self, ok: std::result::Result<(), Value>) {
        self.cases += 1;
        if let Err(v) = ok {
            self.counterexample.get_or_insert(v);
        }
    }

    fn done(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn fail<K: Field>(ssr: &SsrData<K>, a: &[K::Elem], why: impl ToString) -> Value {
    json!({"A": ssr.encode_vector(a), "reason": why.to_string()})
}

fn nonzero<K: Field>(ssr: &SsrData<K>, rng: &mut ChaCha8Rng) -> Vec<K::Elem> {
    ssr.random_nonzero_vector(rng)
}

fn per_construction<K: BaseField + 'static>(
    k: &K,
    id: &ConstructionId,
    samples: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<CheckResult>,
) -> Result<()> {
    let model = build(id, k)?;
    let s = model.ssr();
    let name = |check: &str| format!("{check}/{id}");

    let mut c = Check::new(name("verify_ssr"));
    let rep = verify_ssr(s, false);
    c.case(if rep.passed() { Ok(()) } else { Err(rep.to_json()) });
    out.push(c.done());

    let mut cois = Check::new(name("coisotropy"));
    let mut qv = Check::new(name("q_vanishing"));
    let mut ids = Check::new(name("covariant_identities"));
    let mut geo = Check::new(name("orbit_geometry"));
    let mut syz = Check::new(name("eisenstein_syzygy"));
    let mut minp = Check::new(name("minimal_polynomial"));
    let mut oracle = Check::new(name("zero_set_oracle"));
    for _ in 0..samples {
        let a = nonzero(s, rng);
        cois.case(match coisotropy_check(s, &a) {
            Ok(r) if r.holds => Ok(()),
            Ok(_) => Err(fail(s, &a, "(𝔪·A)^⊥ ⊄ 𝔪·A")),
            Err(e) => Err(fail(s, &a, e)),
        });
        qv.case(q_vanishing_test(s, &a).map(|_| ()).map_err(|e| fail(s, &a, e)));
        let (x, y) = (k.random(rng), k.random(rng));
        ids.case(match covariant_identities(s, &a, &x, &y) {
            Ok(r) if r.all_hold() => Ok(()),
            Ok(r) => Err(fail(s, &a, format!("{:?}", r.failures()))),
            Err(e) => Err(fail(s, &a, e)),
        });
        geo.case(orbit_geometry(s, &a).map(|_| ()).map_err(|e| fail(s, &a, e)));
        syz.case(match eisenstein_syzygy(s, &a) {
            Ok(r) if r.holds => Ok(()),
            Ok(_) => Err(fail(s, &a, "syzygy sides differ")),
            Err(e) => Err(fail(s, &a, e)),
        });
        if s.dim() > 2 {
            minp.case(match minimal_polynomial_mu(s, &a) {
                Ok(r) if r.holds => Ok(()),
                Ok(_) => Err(fail(s, &a, "unexpected minimal polynomial")),
                Err(e) => Err(fail(s, &a, e)),
            });
        }
        let v = s.random_vector(rng);
        let direct = !linalg::is_zero_vec(&v) && linalg::is_zero_vec(&s.mu(&v));
        oracle.case(if model.zero_set_oracle(&v) == direct {
            Ok(())
        } else {
            Err(fail(s, &v, "oracle disagrees with μ"))
        });
        if let Some(z) = model.sample_zero_set(rng) {
            oracle.case(if model.zero_set_oracle(&z) && linalg::is_zero_vec(&s.mu(&z)) {
                Ok(())
            } else {
                Err(fail(s, &z, "sampled zero-set member rejected"))
            });
        }
    }
    for c in [cois, qv, ids, geo, syz, minp, oracle] {
        out.push(c.done());
    }

    // Decomposition of sums of null vectors, eigenstructure and fibers
    let mut dec = Check::new(name("decomposition"));
    let mut eig = Check::new(name("eigenstructure"));
    let mut fib = Check::new(name("fiber"));
    for _ in 0..samples {
        let (Some(b), Some(cc)) = (model.sample_zero_set(rng), model.sample_zero_set(rng)) else {
            break;
        };
        if s.omega_eval(&b, &cc).is_zero() {
            continue;
        }
        let a = linalg::vadd(&b, &cc);
        dec.case(match lagrangian_decompose(s, &a) {
            Ok(d) if (d.b == b && d.c == cc) || (d.b == cc && d.c == b) => Ok(()),
            Ok(_) => Err(fail(s, &a, "summands not recovered")),
            Err(e) => Err(fail(s, &a, e)),
        });
        eig.case(mu_eigendecomposition(s, &a).map(|_| ()).map_err(|e| fail(s, &a, e)));
        fib.case(match mu_fiber(s, &a) {
            Ok(f) => {
                let pts = f.sample(k, 3);
                match pts.iter().find(|(x, y)| !f.same_moment(s, &f.point(x, y))) {
                    None => Ok(()),
                    Some((x, y)) => Err(fail(s, &f.point(x, y), "fiber point with a different μ")),
                }
            }
            Err(e) => Err(fail(s, &a, e)),
        });
    }
    for c in [dec, eig, fib] {
        out.push(c.done());
    }

    // Charts, on whichever square classes the samples reach
    let mut ch = Check::new(name("charts"));
    let nonsquare = [-1, 2, 3, 5]
        .iter()
        .map(|&l| k.from_i64(l))
        .find(|l| !l.is_zero() && !k.is_square(l));
    for lambda in std::iter::once(k.one()).chain(nonsquare) {
        let charts = Charts::new(s, &lambda)?;
        for _ in 0..samples.div_ceil(2) {
            let Some(p) = charts.sample_point(rng, 50) else { break };
            let res = (|| -> Result<bool> {
                let v = charts.alpha(&p)?;
                let back = charts.beta(&v)?;
                let t = k.random(rng);
                let den = k.one() - &(charts.lambda().clone() * &t.square());
                let unit_ok = match den.inv() {
                    Some(inv) => {
                        let a = (k.one() + &(charts.lambda().clone() * &t.square())) * &inv;
                        let b = k.from_i64(2) * &t * &inv;
                        let moved = charts.torus_act(&a, &b, &p)?;
                        let u = charts.orbit_unit(&p, &moved)?;
                        u.map(|u| u.re == a && u.im == b).unwrap_or(false)
                    }
                    None => true,
                };
                Ok(back == p && unit_ok)
            })();
            ch.case(match res {
                Ok(true) => Ok(()),
                Ok(false) => Err(charts.encode_hat(&p)),
                Err(e) => Err(json!({"point": charts.encode_hat(&p), "reason": e.to_string()})),
            });
        }
    }
    out.push(ch.done());

    // Ternary product and Lie algebra
    let mut tern = Check::new(name("ternary_axioms"));
    let rep = verify_ternary_axioms(&ternary_from_ssr(s));
    tern.case(if rep.all_hold() && rep.equivalence_confirmed() { Ok(()) } else { Err(rep.to_json()) });
    out.push(tern.done());

    let mut lie = Check::new(name("lie_algebra"));
    let res = (|| -> Result<std::result::Result<(), Value>> {
        let g = build_lie_algebra(s)?;
        let jac = if k.elements().is_some() || g.dim() <= 52 {
            g.jacobi_exhaustive()
        } else {
            g.jacobi_random(10_000, rng)
        };
        if !jac.holds() {
            return Ok(Err(json!({"jacobi_failure": jac.first_failure})));
        }
        if g.dim() != s.m_dim() + 3 + 2 * s.dim() || !simplicity_check(&g, s)? {
            return Ok(Err(json!({"dim": g.dim(), "reason": "not simple"})));
        }
        if !round_trip(s, &recover_ssr(&g)?).matches() {
            return Ok(Err(json!({"reason": "recovered data differs"})));
        }
        Ok(Ok(()))
    })();
    lie.case(res.unwrap_or_else(|e| Err(json!({"reason": e.to_string()}))));
    out.push(lie.done());

    if *id == ConstructionId::BinaryCubics {
        let mut cl = Check::new("classical_syzygy".into());
        for _ in 0..samples {
            let p = s.random_vector(rng);
            let v = vec![k.random(rng), k.random(rng)];
            cl.case(match classical_eisenstein(s, &p, &v) {
                Ok(r) if r.holds => Ok(()),
                Ok(r) => Err(r.to_json(k)),
                Err(e) => Err(fail(s, &p, e)),
            });
        }
        out.push(cl.done());
    }
    Ok(())
}

/// Runs every check on every default construction with `samples` random inputs each.
pub fn run_selftest<K: BaseField + 'static>(k: &K, seed: u64, samples: usize) -> Result<SelftestReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for id in ConstructionId::all_default() {
        // each construction gets its own stream so results do not depend on order
        let mut sub = ChaCha8Rng::seed_from_u64(rng.gen());
        per_construction(k, &id, samples, &mut sub, &mut checks)?;
    }
    Ok(SelftestReport {
        field: k.descriptor().to_string(),
        seed,
        samples,
        checks,
    })
}
