use serde_json::{json, Value};

use crate::field::{Field, Scalar};
use crate::linalg::{self, EchelonBasis};
use crate::ssr::SsrData;

/// Outcome of checking every axiom on basis vectors.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub dim: usize,
    pub m_dim: usize,
    /// Every basis operator preserves `ω`.
    pub invariance: bool,
    /// The basis operators are linearly independent.
    pub faithful: bool,
    /// The span of the basis operators is closed under commutators.
    pub bracket_closed: bool,
    /// `2B(A,B)C − 2B(A,C)B = 2ω(B,C)A − ω(A,B)C + ω(A,C)B` on all basis triples.
    pub defining_identity: bool,
    /// `[X, B(u,v)] = B(Xu, v) + B(u, Xv)` on all basis data.
    pub equivariance: bool,
    /// Dimension of the span of the image of `B`.
    pub m_mu_dim: usize,
    /// Dimension of the largest subalgebra of `sp(V)` for which `B` is equivariant.
    pub normalizer_dim: Option<usize>,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.invariance
            && self.faithful
            && self.bracket_closed
            && self.defining_identity
            && self.equivariance
    }

    pub fn m_mu_is_m(&self) -> bool {
        self.m_mu_dim == self.m_dim
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "dim": self.dim,
            "m_dim": self.m_dim,
            "invariance": self.invariance,
            "faithful": self.faithful,
            "bracket_closed": self.bracket_closed,
            "defining_identity": self.defining_identity,
            "equivariance": self.equivariance,
            "m_mu_dim": self.m_mu_dim,
            "normalizer_dim": self.normalizer_dim,
            "failures": self.failures,
        })
    }
}

const MAX_FAILURES: usize = 8;

fn note(failures: &mut Vec<String>, msg: impl FnOnce() -> String) {
    if failures.len() < MAX_FAILURES {
        failures.push(msg());
    }
}

/// Structure constants of `𝔪`: entry `[a][b]` lists the nonzero coordinates of
/// `[X_a, X_b]`. `None` if some commutator leaves the span.
pub fn m_structure_constants<K: Field>(ssr: &SsrData<K>) -> Option<Vec<Vec<Vec<(usize, K::Elem)>>>> {
    let d = ssr.m_dim();
    let basis = ssr.m_basis();
    let mut out = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in (a + 1)..d {
            let c = ssr.m_coords(&basis[a].commutator(&basis[b]))?;
            let sp: Vec<(usize, K::Elem)> = c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect();
            out[b][a] = sp.iter().map(|(i, x)| (*i, -x.clone())).collect();
            out[a][b] = sp;
        }
    }
    Some(out)
}

/// Checks the axioms exhaustively on basis vectors. The normalizer dimension is
/// computed only when requested.
pub fn verify_ssr<K: Field>(ssr: &SsrData<K>, with_normalizer: bool) -> VerificationReport {
    let k = ssr.field();
    let n = ssr.dim();
    let d = ssr.m_dim();
    let mut failures = Vec::new();

    let mut invariance = true;
    for (a, x) in ssr.m_basis().iter().enumerate() {
        if !ssr.omega().is_infinitesimal_isometry(x) {
            invariance = false;
            note(&mut failures, || format!("basis operator {a} does not preserve the form"));
        }
    }

    let faithful = ssr.is_faithful();
    if !faithful {
        note(&mut failures, || "basis operators are linearly dependent".into());
    }

    let structure = m_structure_constants(ssr);
    let bracket_closed = structure.is_some();
    if !bracket_closed {
        note(&mut failures, || "commutator of basis operators leaves the span".into());
    }

    let two = k.from_i64(2);
    let mut defining_identity = true;
    let units: Vec<Vec<K::Elem>> = (0..n).map(|i| ssr.unit(i)).collect();
    let om = |i: usize, j: usize| ssr.omega().gram()[(i, j)].clone();
    for i in 0..n {
        for j in 0..n {
            let bij = ssr.bmu_basis(i, j);
            for l in (j + 1)..n {
                let bil = ssr.bmu_basis(i, l);
                let mut lhs = linalg::vscale(&two, &ssr.act(bij, &units[l]));
                lhs = linalg::vsub(&lhs, &linalg::vscale(&two, &ssr.act(bil, &units[j])));
                let mut rhs = ssr.zero_vec();
                rhs[i] += &(two.clone() * &om(j, l));
                rhs[l] -= &om(i, j);
                rhs[j] += &om(i, l);
                if lhs != rhs {
                    defining_identity = false;
                    note(&mut failures, || {
                        format!("defining identity fails on (e{i}, e{j}, e{l})")
                    });
                }
            }
        }
    }

    let mut equivariance = bracket_closed;
    if let Some(f) = &structure {
        'outer: for a in 0..d {
            for i in 0..n {
                let xi = ssr.act_basis(a, i);
                for j in i..n {
                    let xj = ssr.act_basis(a, j);
                    let mut lhs = vec![k.zero(); d];
                    for (b, cb) in ssr.bmu_basis(i, j).iter().enumerate() {
                        if cb.is_zero() {
                            continue;
                        }
                        for (c, x) in &f[a][b] {
                            lhs[*c] += &(cb.clone() * x);
                        }
                    }
                    let rhs = linalg::vadd(&ssr.bmu(&xi, &units[j]), &ssr.bmu(&units[i], &xj));
                    if lhs != rhs {
                        equivariance = false;
                        note(&mut failures, || {
                            format!("equivariance fails for operator {a} on (e{i}, e{j})")
                        });
                        if failures.len() >= MAX_FAILURES {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    let m_mu_dim = ssr.m_mu().dim();
    let normalizer_dim = with_normalizer.then(|| normalizer_dim(ssr));

    VerificationReport {
        dim: n,
        m_dim: d,
        invariance,
        faithful,
        bracket_closed,
        defining_identity,
        equivariance,
        m_mu_dim,
        normalizer_dim,
        failures,
    }
}

/// Dimension of `{X ∈ sp(V) : [X, B(u,v)] = B(Xu, v) + B(u, Xv)}`, solved over all of `gl(V)`.
pub fn normalizer_dim<K: Field>(ssr: &SsrData<K>) -> usize {
    let k = ssr.field();
    let n = ssr.dim();
    let g = ssr.omega().gram();
    let var = |r: usize, c: usize| r * n + c;
    let mut eqs = EchelonBasis::new(n * n);
    for p in 0..n {
        for q in (p + 1)..n {
            let mut row = vec![k.zero(); n * n];
            for l in 0..n {
                row[var(l, p)] += &g[(l, q)];
                row[var(l, q)] += &g[(p, l)];
            }
            eqs.insert(&row);
        }
    }
    let mats: Vec<_> = (0..n * n)
        .map(|ij| ssr.m_matrix(ssr.bmu_basis(ij / n, ij % n)))
        .collect();
    let m = |i: usize, j: usize| &mats[i * n + j];
    for i in 0..n {
        for j in i..n {
            let mij = m(i, j);
            for p in 0..n {
                for q in 0..n {
                    let mut row = vec![k.zero(); n * n];
                    for l in 0..n {
                        row[var(p, l)] += &mij[(l, q)];
                        row[var(l, q)] -= &mij[(p, l)];
                        row[var(l, i)] -= &m(l, j)[(p, q)];
                        row[var(l, j)] -= &m(i, l)[(p, q)];
                    }
                    eqs.insert(&row);
                }
            }
        }
    }
    n * n - eqs.dim()
}
