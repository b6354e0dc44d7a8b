//! The graded Lie algebra `𝔪 ⊕ sl₂ ⊕ V⊗k²` of a representation.
//!
//! Basis order: the basis of `𝔪`, then `H, E, F`, then `eᵢ⊗e₁`, then `eᵢ⊗e₂`.
//! `sl₂` acts on `k²` by `H = diag(1, −1)`, `E e₂ = e₁`, `F e₁ = e₂`, so `V⊗e₁`
//! has degree 1 and `V⊗e₂` degree −1. Odd brackets are
//! `[u⊗a, v⊗b] = c_m ω₂(a, b) B(u, v) + c_s ω(u, v) σ(a, b)` with
//! `σ(e₁, e₁) = 2E`, `σ(e₂, e₂) = −2F`, `σ(e₁, e₂) = −H`.

use rand::{Rng, RngCore};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, EchelonBasis, Matrix, SpanCoordinates, Subspace};
use crate::ssr::{m_structure_constants, SsrData};

type Sparse<E> = Vec<(usize, E)>;

#[derive(Clone, Debug)]
pub struct GradedLieAlgebra<K: Field> {
    field: K,
    m_dim: usize,
    v_dim: usize,
    /// `table[i * dim + j]` holds `[b_i, b_j]`.
    table: Vec<Sparse<K::Elem>>,
    grading: Vec<i32>,
    /// `(c_m, c_s)`.
    calibration: (K::Elem, K::Elem),
}

/// Counts from a Jacobi run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples: u64,
    pub failures: u64,
    pub first_failure: Option<(usize, usize, usize)>,
}

impl JacobiReport {
    pub fn holds(&self) -> bool {
        self.failures == 0
    }
}

fn add_into<E: Scalar>(acc: &mut Vec<(usize, E)>, i: usize, c: E) {
    if c.is_zero() {
        return;
    }
    match acc.iter_mut().find(|(j, _)| *j == i) {
        Some((_, x)) => *x += &c,
        None => acc.push((i, c)),
    }
}

fn clean<E: Scalar>(mut v: Sparse<E>) -> Sparse<E> {
    v.retain(|(_, x)| !x.is_zero());
    v.sort_by_key(|(i, _)| *i);
    v
}

/// The odd brackets split as `c_m · P + c_s · R`.
struct OddParts<E> {
    p: Sparse<E>,
    r: Sparse<E>,
}

impl<K: Field> GradedLieAlgebra<K> {
    pub fn dim(&self) -> usize {
        self.m_dim + 3 + 2 * self.v_dim
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn v_dim(&self) -> usize {
        self.v_dim
    }

    pub fn h(&self) -> usize {
        self.m_dim
    }

    pub fn e(&self) -> usize {
        self.m_dim + 1
    }

    pub fn f(&self) -> usize {
        self.m_dim + 2
    }

    /// Index of `eᵢ⊗e₁` (`side = 0`) or `eᵢ⊗e₂` (`side = 1`).
    pub fn odd(&self, i: usize, side: usize) -> usize {
        self.m_dim + 3 + side * self.v_dim + i
    }

    pub fn calibration(&self) -> &(K::Elem, K::Elem) {
        &self.calibration
    }

    pub fn grading(&self) -> &[i32] {
        &self.grading
    }

    /// Dimensions of the degree −2, …, 2 pieces.
    pub fn graded_dims(&self) -> [usize; 5] {
        let mut out = [0; 5];
        for g in &self.grading {
            out[(g + 2) as usize] += 1;
        }
        out
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &Sparse<K::Elem> {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let d = self.dim();
        let mut out = vec![self.field.zero(); d];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.clone() * b;
                for (l, c) in &self.table[i * d + j] {
                    out[*l] += &(ab.clone() * c);
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec<K::Elem> {
        linalg::unit(&self.field.zero(), self.dim(), i)
    }

    /// Matrix of `ad x`.
    pub fn ad(&self, x: &[K::Elem]) -> Matrix<K::Elem> {
        let d = self.dim();
        let cols: Vec<Vec<K::Elem>> = (0..d).map(|j| self.bracket(x, &self.unit(j))).collect();
        Matrix::from_cols(&self.field.zero(), &cols, d).expect("square")
    }

    fn jacobi_at(&self, i: usize, j: usize, k: usize, acc: &mut [K::Elem], touched: &mut Vec<usize>) -> bool {
        let d = self.dim();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for (l, x) in &self.table[b * d + c] {
                for (r, y) in &self.table[a * d + l] {
                    if acc[*r].is_zero() {
                        touched.push(*r);
                    }
                    acc[*r] += &(x.clone() * y);
                }
            }
        }
        let mut ok = true;
        for r in touched.drain(..) {
            if !acc[r].is_zero() {
                ok = false;
                acc[r] = self.field.zero();
            }
        }
        ok
    }

    /// Jacobi on every triple `i < j < k` of basis vectors.
    pub fn jacobi_exhaustive(&self) -> JacobiReport {
        let d = self.dim();
        let mut acc = vec![self.field.zero(); d];
        let mut touched = Vec::new();
        let mut rep = JacobiReport {
            triples: 0,
            failures: 0,
            first_failure: None,
        };
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    rep.triples += 1;
                    if !self.jacobi_at(i, j, k, &mut acc, &mut touched) {
                        rep.failures += 1;
                        rep.first_failure.get_or_insert((i, j, k));
                    }
                }
            }
        }
        rep
    }

    /// Jacobi on `count` random basis triples.
    pub fn jacobi_random(&self, count: u64, rng: &mut dyn RngCore) -> JacobiReport {
        let d = self.dim();
        let mut acc = vec![self.field.zero(); d];
        let mut touched = Vec::new();
        let mut rep = JacobiReport {
            triples: 0,
            failures: 0,
            first_failure: None,
        };
        for _ in 0..count {
            let (i, j, k) = (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d));
            rep.triples += 1;
            if !self.jacobi_at(i, j, k, &mut acc, &mut touched) {
                rep.failures += 1;
                rep.first_failure.get_or_insert((i, j, k));
            }
        }
        rep
    }

    /// `ad H` is diagonal on the basis with the recorded degrees, the degree ±2
    /// pieces are lines, and `H, E, F` form a standard triple.
    pub fn check_grading(&self) -> Result<()> {
        let d = self.dim();
        let k = &self.field;
        for i in 0..d {
            let img = self.basis_bracket(self.h(), i);
            let expect: Sparse<K::Elem> = if self.grading[i] == 0 {
                vec![]
            } else {
                vec![(i, k.from_i64(self.grading[i] as i64))]
            };
            if *img != expect {
                return Err(Error::NotHeisenbergGraded(format!("ad H is not diagonal at basis vector {i}")));
            }
            if self.grading[i].abs() > 2 {
                return Err(Error::NotHeisenbergGraded("degree outside −2..2".into()));
            }
        }
        let dims = self.graded_dims();
        if dims[0] != 1 || dims[4] != 1 {
            return Err(Error::NotHeisenbergGraded("degree ±2 pieces are not lines".into()));
        }
        let two = k.from_i64(2);
        let checks = [
            (self.h(), self.e(), vec![(self.e(), two.clone())]),
            (self.h(), self.f(), vec![(self.f(), -two)]),
            (self.e(), self.f(), vec![(self.h(), k.one())]),
        ];
        for (a, b, want) in checks {
            if *self.basis_bracket(a, b) != want {
                return Err(Error::NotHeisenbergGraded("H, E, F is not a standard triple".into()));
            }
        }
        Ok(())
    }

    /// Smallest ad-invariant subspace containing `seed`, stopping early once `stop` holds.
    pub fn ideal_closure(&self, seed: &[K::Elem], stop: impl Fn(&EchelonBasis<K::Elem>) -> bool) -> EchelonBasis<K::Elem> {
        let d = self.dim();
        let mut span = EchelonBasis::new(d);
        let mut queue = Vec::new();
        if span.insert(seed) {
            queue.push(seed.to_vec());
        }
        while let Some(v) = queue.pop() {
            if stop(&span) || span.dim() == d {
                break;
            }
            for i in 0..d {
                let w = self.bracket(&self.unit(i), &v);
                if !linalg::is_zero_vec(&w) && span.insert(&w) {
                    queue.push(w);
                }
            }
        }
        span
    }

    /// Whether every basis vector generates the whole algebra as an ideal. The
    /// ideal of `E` is computed once; any other ideal containing `E` is everything.
    pub fn ideals_are_trivial(&self) -> bool {
        let d = self.dim();
        let e = self.unit(self.e());
        if self.ideal_closure(&e, |_| false).dim() != d {
            return false;
        }
        (0..d).all(|i| {
            let span = self.ideal_closure(&self.unit(i), |s| s.contains(&e));
            span.contains(&e)
        })
    }

    /// `{dim, graded_dims, calibration}` and, on request, the nonzero structure constants.
    pub fn to_json(&self, with_constants: bool) -> Value {
        let k = &self.field;
        let mut out = json!({
            "dim": self.dim(),
            "m_dim": self.m_dim,
            "v_dim": self.v_dim,
            "graded_dims": self.graded_dims(),
            "calibration": [k.encode(&self.calibration.0), k.encode(&self.calibration.1)],
            "basis": {"m": [0, self.m_dim], "H": self.h(), "E": self.e(), "F": self.f(),
                      "V_e1": [self.odd(0, 0), self.odd(0, 0) + self.v_dim],
                      "V_e2": [self.odd(0, 1), self.odd(0, 1) + self.v_dim]},
        });
        if with_constants {
            let d = self.dim();
            let mut entries = Vec::new();
            for i in 0..d {
                for j in (i + 1)..d {
                    for (l, c) in self.basis_bracket(i, j) {
                        entries.push(json!([i, j, l, k.encode(c)]));
                    }
                }
            }
            out["structure_constants"] = Value::Array(entries);
        }
        out
    }
}

/// Odd brackets of `eᵤ⊗a, eᵥ⊗b` split into the `𝔪` part `P` and the `sl₂` part `R`.
fn odd_parts<K: Field>(ssr: &SsrData<K>, m_dim: usize, u: usize, a: usize, v: usize, b: usize) -> OddParts<K::Elem> {
    let k = ssr.field();
    let (h, e, f) = (m_dim, m_dim + 1, m_dim + 2);
    // ω₂(e₁, e₂) = 1
    let w2 = match (a, b) {
        (0, 1) => k.one(),
        (1, 0) => -k.one(),
        _ => k.zero(),
    };
    let mut p = Vec::new();
    if !w2.is_zero() {
        for (c, x) in ssr.bmu_basis(u, v).iter().enumerate() {
            add_into(&mut p, c, w2.clone() * x);
        }
    }
    let w = ssr.omega().gram()[(u, v)].clone();
    let mut r = Vec::new();
    if !w.is_zero() {
        match (a, b) {
            (0, 0) => add_into(&mut r, e, k.from_i64(2) * &w),
            (1, 1) => add_into(&mut r, f, k.from_i64(-2) * &w),
            _ => add_into(&mut r, h, -w),
        }
    }
    OddParts { p: clean(p), r: clean(r) }
}

struct Builder<K: Field> {
    alg: GradedLieAlgebra<K>,
    odd: Vec<OddParts<K::Elem>>,
}

impl<K: Field> Builder<K> {
    fn new(ssr: &SsrData<K>) -> Result<Self> {
        let k = ssr.field().clone();
        let dm = ssr.m_dim();
        let n = ssr.dim();
        let d = dm + 3 + 2 * n;
        let structure = m_structure_constants(ssr)
            .ok_or_else(|| Error::Invariant("𝔪 is not closed under commutators".into()))?;
        let mut table: Vec<Sparse<K::Elem>> = vec![Vec::new(); d * d];
        let mut set = |i: usize, j: usize, v: Sparse<K::Elem>| {
            let v = clean(v);
            table[j * d + i] = v.iter().map(|(l, c)| (*l, -c.clone())).collect();
            table[i * d + j] = v;
        };
        for a in 0..dm {
            for b in (a + 1)..dm {
                set(a, b, structure[a][b].clone());
            }
        }
        let (h, e, f) = (dm, dm + 1, dm + 2);
        set(h, e, vec![(e, k.from_i64(2))]);
        set(h, f, vec![(f, k.from_i64(-2))]);
        set(e, f, vec![(h, k.one())]);
        let odd = |i: usize, side: usize| dm + 3 + side * n + i;
        for a in 0..dm {
            for i in 0..n {
                let col = ssr.act_basis(a, i);
                for side in 0..2 {
                    let img: Sparse<K::Elem> = col
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(r, x)| (odd(r, side), x.clone()))
                        .collect();
                    set(a, odd(i, side), img);
                }
            }
        }
        for i in 0..n {
            set(h, odd(i, 0), vec![(odd(i, 0), k.one())]);
            set(h, odd(i, 1), vec![(odd(i, 1), -k.one())]);
            set(e, odd(i, 1), vec![(odd(i, 0), k.one())]);
            set(f, odd(i, 0), vec![(odd(i, 1), k.one())]);
        }
        let mut odd_table = Vec::with_capacity(4 * n * n);
        for s in 0..2 {
            for u in 0..n {
                for t in 0..2 {
                    for v in 0..n {
                        odd_table.push(odd_parts(ssr, dm, u, s, v, t));
                    }
                }
            }
        }
        let mut grading = vec![0; d];
        grading[e] = 2;
        grading[f] = -2;
        for i in 0..n {
            grading[odd(i, 0)] = 1;
            grading[odd(i, 1)] = -1;
        }
        Ok(Builder {
            alg: GradedLieAlgebra {
                field: k.clone(),
                m_dim: dm,
                v_dim: n,
                table,
                grading,
                calibration: (k.zero(), k.zero()),
            },
            odd: odd_table,
        })
    }

    fn odd_index(&self, idx: usize) -> (usize, usize) {
        let n = self.alg.v_dim;
        let r = idx - self.alg.m_dim - 3;
        (r % n, r / n)
    }

    fn parts(&self, x: usize, y: usize) -> &OddParts<K::Elem> {
        let n = self.alg.v_dim;
        let (u, s) = self.odd_index(x);
        let (v, t) = self.odd_index(y);
        &self.odd[((s * n + u) * 2 + t) * n + v]
    }

    /// Jacobi on three odd basis vectors as `c_m · P + c_s · R`; the even table is complete.
    fn odd_jacobi(&self, i: usize, j: usize, k: usize) -> (Vec<K::Elem>, Vec<K::Elem>) {
        let d = self.alg.dim();
        let zero = self.alg.field.zero();
        let mut p = vec![zero.clone(); d];
        let mut r = vec![zero; d];
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let parts = self.parts(b, c);
            for (acc, part) in [(&mut p, &parts.p), (&mut r, &parts.r)] {
                for (l, x) in part {
                    // [b_a, b_l] = −[b_l, b_a]
                    for (t, y) in &self.alg.table[*l * d + a] {
                        acc[*t] -= &(x.clone() * y);
                    }
                }
            }
        }
        (p, r)
    }

    /// Solves `c_m P + c_s R = 0` over odd triples and normalizes `c_s = ½`.
    fn calibrate(&self) -> Result<(K::Elem, K::Elem)> {
        let k = &self.alg.field;
        let n = self.alg.v_dim;
        let mut eqs = EchelonBasis::new(2);
        let mut seen = 0;
        'scan: for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let triples = [
                        (self.alg.odd(u, 0), self.alg.odd(v, 0), self.alg.odd(w, 1)),
                        (self.alg.odd(u, 0), self.alg.odd(v, 1), self.alg.odd(w, 1)),
                    ];
                    for (a, b, c) in triples {
                        let (p, r) = self.odd_jacobi(a, b, c);
                        for (x, y) in p.into_iter().zip(r) {
                            if !(x.is_zero() && y.is_zero()) {
                                eqs.insert(&[x, y]);
                                seen += 1;
                            }
                        }
                        if eqs.dim() == 2 {
                            break 'scan;
                        }
                    }
                    if eqs.dim() == 1 && seen >= 4 * n {
                        break 'scan;
                    }
                }
            }
        }
        if eqs.dim() != 1 {
            return Err(Error::CalibrationFailure(format!(
                "odd Jacobi constraints have rank {}",
                eqs.dim()
            )));
        }
        let row = &eqs.rows()[0];
        // row · (c_m, c_s) = 0 with row in echelon form (1, t) or (0, 1)
        if row[0].is_zero() {
            return Err(Error::CalibrationFailure("Jacobi forces c_s = 0".into()));
        }
        let t = row[1].div(&row[0])?;
        let cs = k.ratio(1, 2);
        let cm = -(t * &cs);
        if cm.is_zero() {
            return Err(Error::CalibrationFailure("Jacobi forces c_m = 0".into()));
        }
        Ok((cm, cs))
    }

    fn finish(mut self, cm: K::Elem, cs: K::Elem) -> GradedLieAlgebra<K> {
        let d = self.alg.dim();
        let n = self.alg.v_dim;
        for s in 0..2 {
            for u in 0..n {
                for t in 0..2 {
                    for v in 0..n {
                        let (x, y) = (self.alg.odd(u, s), self.alg.odd(v, t));
                        let parts = &self.odd[((s * n + u) * 2 + t) * n + v];
                        let mut out = Vec::new();
                        for (l, c) in &parts.p {
                            add_into(&mut out, *l, cm.clone() * c);
                        }
                        for (l, c) in &parts.r {
                            add_into(&mut out, *l, cs.clone() * c);
                        }
                        self.alg.table[x * d + y] = clean(out);
                    }
                }
            }
        }
        self.alg.calibration = (cm, cs);
        self.alg
    }
}

/// Builds the algebra with calibrated odd brackets and checks the grading. Jacobi
/// is left to [`GradedLieAlgebra::jacobi_exhaustive`] or [`GradedLieAlgebra::jacobi_random`].
pub fn build_lie_algebra<K: Field>(ssr: &SsrData<K>) -> Result<GradedLieAlgebra<K>> {
    let b = Builder::new(ssr)?;
    let (cm, cs) = b.calibrate()?;
    let alg = b.finish(cm, cs);
    alg.check_grading()?;
    Ok(alg)
}

/// Agreement of two independent simplicity tests.
#[derive(Clone, Debug)]
pub struct SimplicityReport {
    pub m_mu_is_m: bool,
    pub ideals_trivial: bool,
}

/// Simple exactly when `𝔪_μ = 𝔪`; cross-checked by ideal closure.
pub fn simplicity_check<K: Field>(g: &GradedLieAlgebra<K>, ssr: &SsrData<K>) -> Result<bool> {
    let r = SimplicityReport {
        m_mu_is_m: ssr.m_mu().dim() == ssr.m_dim(),
        ideals_trivial: g.ideals_are_trivial(),
    };
    if r.m_mu_is_m != r.ideals_trivial {
        return Err(Error::Disagreement(format!(
            "𝔪_μ = 𝔪 is {} but the ideal search says {}",
            r.m_mu_is_m, r.ideals_trivial
        )));
    }
    Ok(r.m_mu_is_m)
}

/// Comparison of recovered data with the original.
#[derive(Clone, Debug)]
pub struct RoundTrip<E> {
    /// `ω_recovered = omega_factor · ω`.
    pub omega_factor: Option<E>,
    /// `B_recovered = bmu_factor · B`.
    pub bmu_factor: Option<E>,
    pub same_operators: bool,
}

impl<E: Scalar> RoundTrip<E> {
    pub fn matches(&self) -> bool {
        self.omega_factor.is_some() && self.bmu_factor.is_some() && self.same_operators
    }
}

/// Reads `(𝔪, V, ω, B)` back off the grading: `𝔪` = commutant of `H, E, F`,
/// `V` = degree 1, `[v₁, v₂] = ω(v₁, v₂)E` and
/// `B(v₁, v₂) = −½[v₁, [v₂, F]] − ½[v₂, [v₁, F]]`.
pub fn recover_ssr<K: Field>(g: &GradedLieAlgebra<K>) -> Result<SsrData<K>> {
    g.check_grading()?;
    let k = g.field();
    let d = g.dim();
    let zero = k.zero();
    let ad_h = g.ad(&g.unit(g.h()));
    let degree = |c: i64| ad_h.sub(&Matrix::identity(k, d).scale(&k.from_i64(c))).kernel();
    let g1 = degree(1);
    let g2 = degree(2);
    if g2.dim() != 1 || !g2.contains(&g.unit(g.e())) {
        return Err(Error::NotHeisenbergGraded("degree 2 is not spanned by E".into()));
    }
    let mut rows = Vec::new();
    for x in [g.h(), g.e(), g.f()] {
        rows.extend(g.ad(&g.unit(x)).to_rows());
    }
    let m = Matrix::from_rows(&zero, &rows, d)?.kernel();
    let n = g1.dim();
    if n == 0 || m.dim() == 0 {
        return Err(Error::NotHeisenbergGraded("empty degree 1 or commutant".into()));
    }
    let v = g1.basis();
    let e_idx = g.e();
    let mut omega = Matrix::zeros(k, n, n);
    for i in 0..n {
        for j in 0..n {
            let br = g.bracket(&v[i], &v[j]);
            let w = br[e_idx].clone();
            let mut rest = br;
            rest[e_idx] = zero.clone();
            if !linalg::is_zero_vec(&rest) {
                return Err(Error::NotHeisenbergGraded("[g₁, g₁] leaves ⟨E⟩".into()));
            }
            omega[(i, j)] = w;
        }
    }
    let m_basis = m
        .basis()
        .iter()
        .map(|x| {
            let cols = v
                .iter()
                .map(|vj| g1.coords(&g.bracket(x, vj)).ok_or_else(|| Error::NotHeisenbergGraded("𝔪 does not preserve g₁".into())))
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_cols(&zero, &cols, n)
        })
        .collect::<Result<Vec<_>>>()?;
    let m_coords = SpanCoordinates::new(&zero, d, m.basis())?;
    let f = g.unit(g.f());
    let half = k.ratio(-1, 2);
    let vf: Vec<Vec<K::Elem>> = v.iter().map(|x| g.bracket(x, &f)).collect();
    let mut bmu = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in i..n {
            let t = linalg::vadd(&g.bracket(&v[i], &vf[j]), &g.bracket(&v[j], &vf[i]));
            let b = linalg::vscale(&half, &t);
            let c = m_coords
                .coords(&b)
                .ok_or_else(|| Error::NotHeisenbergGraded("B leaves the commutant".into()))?;
            bmu[j * n + i] = c.clone();
            bmu[i * n + j] = c;
        }
    }
    SsrData::new(k.clone(), omega, m_basis, bmu)
}

fn proportional<E: Scalar>(a: &[E], b: &[E]) -> Option<E> {
    let i = b.iter().position(|x| !x.is_zero())?;
    let f = a[i].div(&b[i]).ok()?;
    (linalg::vscale(&f, b) == a).then_some(f)
}

/// Compares recovered data with the original in the same bases.
pub fn round_trip<K: Field>(orig: &SsrData<K>, rec: &SsrData<K>) -> RoundTrip<K::Elem> {
    if orig.dim() != rec.dim() || orig.m_dim() != rec.m_dim() {
        return RoundTrip {
            omega_factor: None,
            bmu_factor: None,
            same_operators: false,
        };
    }
    let n = orig.dim();
    let omega_factor = proportional(rec.omega().gram().data(), orig.omega().gram().data());
    let flat = |s: &SsrData<K>| -> Vec<K::Elem> {
        (0..n * n).flat_map(|t| s.bmu_basis(t / n, t % n).to_vec()).collect()
    };
    let bmu_factor = proportional(&flat(rec), &flat(orig));
    RoundTrip {
        omega_factor,
        bmu_factor,
        same_operators: orig.m_basis() == rec.m_basis(),
    }
}

/// The degree `c` piece of the grading as a subspace.
pub fn graded_piece<K: Field>(g: &GradedLieAlgebra<K>, c: i32) -> Subspace<K::Elem> {
    let vecs: Vec<Vec<K::Elem>> = (0..g.dim())
        .filter(|i| g.grading()[*i] == c)
        .map(|i| g.unit(i))
        .collect();
    Subspace::from_vectors(&g.field().zero(), g.dim(), &vecs)
}
