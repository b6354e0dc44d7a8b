//! Three-forms on `k⁶` under `sl₆`, and the primitive three-forms of a
//! symplectic `k⁶` under `sp₆`.

use rand::RngCore;
use serde_json::json;

use super::exterior::{self, subsets};
use super::{common, Model};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, Matrix, SpanCoordinates, Subspace};
use crate::ssr::SsrData;

pub const ID: &str = "ThreeForms6";
pub const PRIMITIVE_ID: &str = "PrimitiveThreeForms6";

const N: u32 = 6;
const VOL: usize = 63;

/// Shared model of `Λ³(k⁶)*` with the `gl₆` action and the moment map into `gl₆`.
pub struct ThreeForms<K: Field> {
    ssr: SsrData<K>,
    masks: Vec<u32>,
    /// `elementary[a * 6 + b]`: action of `E_ab` on three-forms.
    elementary: Vec<Matrix<K::Elem>>,
    /// The `sl₆` basis as 6x6 matrices, in the order of the Lie algebra basis.
    sl_basis: Vec<Matrix<K::Elem>>,
}

/// `E_ab` for `a ≠ b` in lexicographic order, then `E_aa − E_{a+1,a+1}`.
pub fn sl6_basis<K: Field>(k: &K) -> Vec<Matrix<K::Elem>> {
    let n = N as usize;
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                let mut m = Matrix::zeros(k, n, n);
                m[(a, b)] = k.one();
                out.push(m);
            }
        }
    }
    for a in 0..n - 1 {
        let mut m = Matrix::zeros(k, n, n);
        m[(a, a)] = k.one();
        m[(a + 1, a + 1)] = -k.one();
        out.push(m);
    }
    out
}

/// Coordinates of a traceless matrix in [`sl6_basis`].
pub fn sl6_coords<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Result<Vec<K::Elem>> {
    let n = N as usize;
    if !m.trace().is_zero() {
        return Err(Error::Invariant("moment map is not traceless".into()));
    }
    let mut out = Vec::with_capacity(35);
    for a in 0..n {
        for b in 0..n {
            if a != b {
                out.push(m[(a, b)].clone());
            }
        }
    }
    let mut acc = k.zero();
    for a in 0..n - 1 {
        acc += &m[(a, a)];
        out.push(acc.clone());
    }
    Ok(out)
}

fn one_form<K: Field>(k: &K, i: usize) -> Vec<K::Elem> {
    let mut v = vec![k.zero(); 1 << N];
    v[1 << i] = k.one();
    v
}

/// Action of a `gl₆` matrix `X` on forms, contragredient and by derivations:
/// `X·eʲ = −Σ_k X_{jk} eᵏ`.
fn act_on_monomial<K: Field>(k: &K, x: &Matrix<K::Elem>, mask: u32) -> Vec<K::Elem> {
    let idx: Vec<usize> = (0..N as usize).filter(|i| mask >> i & 1 == 1).collect();
    let mut total = vec![k.zero(); 1 << N];
    for s in 0..idx.len() {
        let mut img = vec![k.zero(); 1 << N];
        for c in 0..N as usize {
            if !x[(idx[s], c)].is_zero() {
                img[1 << c] = -x[(idx[s], c)].clone();
            }
        }
        let mut acc = {
            let mut one = vec![k.zero(); 1 << N];
            one[0] = k.one();
            one
        };
        for (t, &i) in idx.iter().enumerate() {
            let f = if t == s { img.clone() } else { one_form(k, i) };
            acc = exterior::wedge(&acc, &f);
        }
        total = linalg::vadd(&total, &acc);
    }
    total
}

impl<K: Field> ThreeForms<K> {
    pub fn new(k: &K) -> Result<Self> {
        let n = N as usize;
        let masks = subsets(N, 3);
        let dim = masks.len();
        let mut elementary = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut e = Matrix::zeros(k, n, n);
                e[(a, b)] = k.one();
                let mut op = Matrix::zeros(k, dim, dim);
                for (col, &m) in masks.iter().enumerate() {
                    let img = act_on_monomial(k, &e, m);
                    for (row, &r) in masks.iter().enumerate() {
                        op[(row, col)] = img[r as usize].clone();
                    }
                }
                elementary.push(op);
            }
        }
        let sl_basis = sl6_basis(k);
        let mut omega = Matrix::zeros(k, dim, dim);
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                if let Some(neg) = exterior::wedge_sign(a, b) {
                    omega[(i, j)] = if neg { -k.one() } else { k.one() };
                }
            }
        }
        let mut model = ThreeForms {
            ssr: SsrData::new(k.clone(), omega.clone(), vec![Matrix::identity(k, dim)], vec![vec![k.zero()]; dim * dim])?,
            masks,
            elementary,
            sl_basis,
        };
        let m_basis: Vec<_> = model.sl_basis.iter().map(|x| model.gl_action(x)).collect();
        let mut bmu = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let m = model.moment_gl(&model.unit_form(i), &model.unit_form(j));
                bmu.push(sl6_coords(k, &m)?);
            }
        }
        model.ssr = common::calibrate(k, omega, m_basis, bmu)?.with_tag(ID, json!({}));
        Ok(model)
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    fn unit_form(&self, i: usize) -> Vec<K::Elem> {
        let k = self.ssr.field();
        let mut v = vec![k.zero(); 1 << N];
        v[self.masks[i] as usize] = k.one();
        v
    }

    /// Coordinates in the monomial basis as a dense form.
    pub fn to_form(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        exterior::from_coords(N, &self.masks, v)
    }

    /// The operator on three-forms induced by a `gl₆` matrix.
    pub fn gl_action(&self, x: &Matrix<K::Elem>) -> Matrix<K::Elem> {
        let k = self.ssr.field();
        let dim = self.masks.len();
        let mut out = Matrix::zeros(k, dim, dim);
        for (t, e) in self.elementary.iter().enumerate() {
            out.add_scaled(&x[(t / 6, t % 6)], e);
        }
        out
    }

    /// The uncalibrated polarized moment `X` with `½(α∧ι_eβ + β∧ι_eα) = ι_{Xe} vol`.
    fn moment_gl(&self, alpha: &[K::Elem], beta: &[K::Elem]) -> Matrix<K::Elem> {
        let k = self.ssr.field();
        let n = N as usize;
        let half = k.ratio(1, 2);
        let mut m = Matrix::zeros(k, n, n);
        for c in 0..n {
            let f = linalg::vadd(
                &exterior::wedge(alpha, &exterior::contract(beta, c as u32)),
                &exterior::wedge(beta, &exterior::contract(alpha, c as u32)),
            );
            for j in 0..n {
                let coef = f[VOL & !(1 << j)].clone() * &half;
                m[(j, c)] = if j % 2 == 1 { -coef } else { coef };
            }
        }
        m
    }

    /// Calibrated `B(α, β)` as a `gl₆` matrix.
    pub fn bmu_gl(&self, alpha: &[K::Elem], beta: &[K::Elem]) -> Matrix<K::Elem> {
        let c = self.ssr.calibration().cloned().unwrap_or_else(|| self.ssr.field().one());
        self.moment_gl(&self.to_form(alpha), &self.to_form(beta)).scale(&c)
    }

    /// The span of the two-fold contractions `ι_b ι_a α`.
    fn contraction_span(&self, v: &[K::Elem]) -> Subspace<K::Elem> {
        let k = self.ssr.field();
        let form = self.to_form(v);
        let mut vecs = Vec::new();
        for a in 0..N {
            for b in (a + 1)..N {
                let c = exterior::contract(&exterior::contract(&form, a), b);
                vecs.push((0..N).map(|i| c[1 << i].clone()).collect());
            }
        }
        Subspace::from_vectors(&k.zero(), N as usize, &vecs)
    }

    /// A nonzero three-form is decomposable when its support is three-dimensional.
    pub fn is_decomposable(&self, v: &[K::Elem]) -> bool {
        !linalg::is_zero_vec(v) && self.contraction_span(v).dim() == 3
    }

    /// `{e : ι_e α = 0}`.
    pub fn annihilator(&self, v: &[K::Elem]) -> Subspace<K::Elem> {
        let k = self.ssr.field();
        let form = self.to_form(v);
        let cols: Vec<Vec<K::Elem>> = (0..N)
            .map(|i| exterior::contract(&form, i))
            .collect();
        Matrix::from_cols(&k.zero(), &cols, 1 << N)
            .expect("shape")
            .kernel()
    }

    /// Wedge of three one-forms, in coordinates.
    pub fn wedge3(&self, t: &[Vec<K::Elem>; 3]) -> Vec<K::Elem> {
        let k = self.ssr.field();
        let lift = |v: &Vec<K::Elem>| {
            let mut f = vec![k.zero(); 1 << N];
            for (i, x) in v.iter().enumerate() {
                f[1 << i] = x.clone();
            }
            f
        };
        let f = exterior::wedge(&exterior::wedge(&lift(&t[0]), &lift(&t[1])), &lift(&t[2]));
        exterior::to_coords(&f, &self.masks)
    }
}

impl<K: Field> Model<K> for ThreeForms<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        self.is_decomposable(v)
    }

    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        let k = self.ssr.field();
        loop {
            let t: [Vec<K::Elem>; 3] =
                std::array::from_fn(|_| (0..N).map(|_| k.random(rng)).collect());
            let v = self.wedge3(&t);
            if !linalg::is_zero_vec(&v) {
                return Some(v);
            }
        }
    }
}

/// `Ω = e¹∧e⁴ + e²∧e⁵ + e³∧e⁶` as a matrix.
pub fn standard_omega6<K: Field>(k: &K) -> Matrix<K::Elem> {
    crate::constructions::tautological::standard_form(k, 3)
}

pub struct PrimitiveThreeForms<K: Field> {
    ssr: SsrData<K>,
    forms: ThreeForms<K>,
    omega6: Matrix<K::Elem>,
    /// Primitive forms inside all three-forms.
    space: Subspace<K::Elem>,
    sp_basis: Vec<Matrix<K::Elem>>,
}

impl<K: Field> PrimitiveThreeForms<K> {
    pub fn new(k: &K, omega6: Option<Matrix<K::Elem>>) -> Result<Self> {
        let forms = ThreeForms::new(k)?;
        let omega6 = omega6.unwrap_or_else(|| standard_omega6(k));
        let form6 = crate::linalg::SymplecticForm::new(omega6.clone())?;
        if form6.dim() != 6 {
            return Err(Error::DimensionMismatch("Ω must be 6x6".into()));
        }
        let pi = omega6.inverse()?;
        let big = forms.masks.len();
        // contraction with the bivector Σ_{a<b} π_ab e_a ∧ e_b
        let mut contraction = Matrix::zeros(k, N as usize, big);
        for (col, &m) in forms.masks.iter().enumerate() {
            let mut f = vec![k.zero(); 1 << N];
            f[m as usize] = k.one();
            for a in 0..N {
                for b in (a + 1)..N {
                    let p = &pi[(a as usize, b as usize)];
                    if p.is_zero() {
                        continue;
                    }
                    let c = exterior::contract(&exterior::contract(&f, a), b);
                    for i in 0..N as usize {
                        contraction[(i, col)] += &(p.clone() * &c[1 << i]);
                    }
                }
            }
        }
        let space = contraction.kernel();
        let d = space.dim();

        let var = |r: usize, c: usize| r * 6 + c;
        let mut eqs = Vec::new();
        for p in 0..6 {
            for q in p..6 {
                let mut row = vec![k.zero(); 36];
                for l in 0..6 {
                    row[var(l, p)] += &omega6[(l, q)];
                    row[var(l, q)] += &omega6[(p, l)];
                }
                eqs.push(row);
            }
        }
        let sp = Matrix::from_rows(&k.zero(), &eqs, 36)?.kernel();
        let sp_basis: Vec<Matrix<K::Elem>> = sp
            .basis()
            .iter()
            .map(|v| Matrix::unflatten(&k.zero(), 6, 6, v))
            .collect();
        let sp_coords = SpanCoordinates::new(&k.zero(), 36, sp.basis())?;

        let m_basis = sp_basis
            .iter()
            .map(|x| forms.gl_action(x).restrict(&space))
            .collect::<Result<Vec<_>>>()?;
        let big_omega = forms.ssr.omega().gram();
        let omega = Matrix::from_fn(&k.zero(), d, d, |i, j| {
            big_omega.bilinear(&space.basis()[i], &space.basis()[j])
        });
        let mut bmu = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let m = forms.bmu_gl(&space.basis()[i], &space.basis()[j]);
                bmu.push(
                    sp_coords
                        .coords(m.data())
                        .ok_or_else(|| Error::Invariant("B on primitive forms leaves sp₆".into()))?,
                );
            }
        }
        let mut ssr = SsrData::new(k.clone(), omega, m_basis, bmu)?
            .with_tag(PRIMITIVE_ID, json!({"omega": crate::ssr::data::encode_matrix(k, &omega6)}));
        if let Some(c) = forms.ssr.calibration() {
            ssr = ssr.with_calibration(c.clone());
        }
        Ok(PrimitiveThreeForms {
            ssr,
            forms,
            omega6,
            space,
            sp_basis,
        })
    }

    /// The ambient three-form of a vector in primitive coordinates.
    pub fn embed(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        self.space.combine(v)
    }

    /// Primitive coordinates of a three-form, if it is primitive.
    pub fn restrict(&self, form: &[K::Elem]) -> Option<Vec<K::Elem>> {
        self.space.coords(form)
    }

    pub fn ambient(&self) -> &ThreeForms<K> {
        &self.forms
    }

    pub fn sp_basis(&self) -> &[Matrix<K::Elem>] {
        &self.sp_basis
    }

    /// Symplectic transvection `x ↦ x + t·Ω(u, x)·u`.
    fn transvection(&self, u: &[K::Elem], t: &K::Elem) -> Matrix<K::Elem> {
        let k = self.ssr.field();
        let row = self.omega6.vec_mul(u);
        let mut m = Matrix::identity(k, 6);
        for i in 0..6 {
            for j in 0..6 {
                m[(i, j)] += &(t.clone() * &u[i] * &row[j]);
            }
        }
        m
    }
}

impl<K: Field> Model<K> for PrimitiveThreeForms<K> {
    fn ssr(&self) -> &SsrData<K> {
        &self.ssr
    }

    /// Decomposable with a Lagrangian annihilator.
    fn zero_set_oracle(&self, v: &[K::Elem]) -> bool {
        let form = self.embed(v);
        if !self.forms.is_decomposable(&form) {
            return false;
        }
        let ann = self.forms.annihilator(&form);
        let w = crate::linalg::SymplecticForm::new(self.omega6.clone()).expect("validated");
        w.is_lagrangian(&ann)
    }

    /// `e¹²³` moved by a random product of transvections: its annihilator
    /// `⟨e₄, e₅, e₆⟩` stays Lagrangian.
    fn sample_zero_set(&self, rng: &mut dyn RngCore) -> Option<Vec<K::Elem>> {
        let k = self.ssr.field();
        let seed_ann = Subspace::from_vectors(
            &k.zero(),
            6,
            &[3, 4, 5].map(|i| linalg::unit(&k.zero(), 6, i)),
        );
        let w = crate::linalg::SymplecticForm::new(self.omega6.clone()).expect("validated");
        if !w.is_lagrangian(&seed_ann) {
            return None;
        }
        let mut g = Matrix::identity(k, 6);
        for _ in 0..6 {
            let u: Vec<K::Elem> = (0..6).map(|_| k.random(rng)).collect();
            let t = k.random(rng);
            g = self.transvection(&u, &t).mul(&g);
        }
        // α ∘ g⁻¹ = θ¹∧θ²∧θ³ with θⁱ the rows of g⁻¹
        let ginv = g.inverse().ok()?;
        let t: [Vec<K::Elem>; 3] = std::array::from_fn(|i| ginv.row(i).to_vec());
        let form = self.forms.wedge3(&t);
        self.restrict(&form)
    }
}
