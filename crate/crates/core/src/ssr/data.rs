use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{BaseField, Field, QuadExt, Scalar};
use crate::linalg::{self, Matrix, SpanCoordinates, Subspace, SymplecticForm};

/// Version of the JSON layout written by [`SsrData::to_json`].
pub const SCHEMA_VERSION: u64 = 1;

/// Which named model produced the data, with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionTag {
    pub id: String,
    pub params: Value,
}

type Sparse<E> = Vec<(usize, E)>;

/// A symplectic space `(V, ω)`, a Lie algebra `𝔪` of operators on it given by a
/// basis, and a symmetric bilinear map `B: V × V → 𝔪` stored in coordinates.
#[derive(Clone, Debug)]
pub struct SsrData<K: Field> {
    field: K,
    omega: SymplecticForm<K::Elem>,
    m_basis: Vec<Matrix<K::Elem>>,
    bmu: Vec<Vec<K::Elem>>,
    tag: Option<ConstructionTag>,
    calibration: Option<K::Elem>,
    bmu_sparse: Vec<Sparse<K::Elem>>,
    /// `m_cols[a][k]`: nonzero entries of column `k` of basis operator `a`.
    m_cols: Vec<Vec<Sparse<K::Elem>>>,
    m_coords: OnceLock<SpanCoordinates<K::Elem>>,
}

impl<K: Field> SsrData<K> {
    /// Checks shapes, antisymmetry and nondegeneracy of `ω`, and symmetry of `B`.
    /// `bmu[i * n + j]` holds the coordinates of `B(eᵢ, eⱼ)` in `m_basis`.
    pub fn new(
        field: K,
        omega: Matrix<K::Elem>,
        m_basis: Vec<Matrix<K::Elem>>,
        bmu: Vec<Vec<K::Elem>>,
    ) -> Result<Self> {
        let omega = SymplecticForm::new(omega)?;
        let n = omega.dim();
        if n == 0 || n % 2 == 1 {
            return Err(Error::DimensionMismatch(format!(
                "symplectic space of dimension {n}"
            )));
        }
        let d = m_basis.len();
        if d == 0 {
            return Err(Error::DimensionMismatch("empty Lie algebra basis".into()));
        }
        for x in &m_basis {
            if x.rows() != n || x.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "operator of shape {}x{} on a space of dimension {n}",
                    x.rows(),
                    x.cols()
                )));
            }
        }
        if bmu.len() != n * n || bmu.iter().any(|c| c.len() != d) {
            return Err(Error::DimensionMismatch(format!(
                "bilinear map tensor must be {n}x{n}x{d}"
            )));
        }
        for i in 0..n {
            for j in 0..i {
                if bmu[i * n + j] != bmu[j * n + i] {
                    return Err(Error::Invariant(format!(
                        "B(e{i}, e{j}) differs from B(e{j}, e{i})"
                    )));
                }
            }
        }
        let bmu_sparse = bmu.iter().map(|c| sparse(c)).collect();
        let m_cols = m_basis
            .iter()
            .map(|x| {
                (0..n)
                    .map(|k| {
                        (0..n)
                            .filter(|&r| !x[(r, k)].is_zero())
                            .map(|r| (r, x[(r, k)].clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(SsrData {
            field,
            omega,
            m_basis,
            bmu,
            tag: None,
            calibration: None,
            bmu_sparse,
            m_cols,
            m_coords: OnceLock::new(),
        })
    }

    pub fn with_tag(mut self, id: &str, params: Value) -> Self {
        self.tag = Some(ConstructionTag {
            id: id.to_string(),
            params,
        });
        self
    }

    pub fn with_calibration(mut self, c: K::Elem) -> Self {
        self.calibration = Some(c);
        self
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn tag(&self) -> Option<&ConstructionTag> {
        self.tag.as_ref()
    }

    pub fn calibration(&self) -> Option<&K::Elem> {
        self.calibration.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.omega.dim()
    }

    pub fn m_dim(&self) -> usize {
        self.m_basis.len()
    }

    pub fn omega(&self) -> &SymplecticForm<K::Elem> {
        &self.omega
    }

    pub fn m_basis(&self) -> &[Matrix<K::Elem>] {
        &self.m_basis
    }

    /// Coordinates of `B(eᵢ, eⱼ)`.
    pub fn bmu_basis(&self, i: usize, j: usize) -> &[K::Elem] {
        &self.bmu[i * self.dim() + j]
    }

    pub fn zero(&self) -> K::Elem {
        self.field.zero()
    }

    pub fn zero_vec(&self) -> Vec<K::Elem> {
        vec![self.zero(); self.dim()]
    }

    pub fn unit(&self, i: usize) -> Vec<K::Elem> {
        linalg::unit(&self.zero(), self.dim(), i)
    }

    pub fn check_vector(&self, v: &[K::Elem]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a space of dimension {}",
                v.len(),
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn omega_eval(&self, u: &[K::Elem], v: &[K::Elem]) -> K::Elem {
        self.omega.eval(u, v)
    }

    /// Action of the element with coordinates `c` on `v`.
    pub fn act(&self, c: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
        let mut out = self.zero_vec();
        for (ca, cols) in c.iter().zip(&self.m_cols) {
            if ca.is_zero() {
                continue;
            }
            for (k, vk) in v.iter().enumerate() {
                if vk.is_zero() {
                    continue;
                }
                let f = ca.clone() * vk;
                for (r, x) in &cols[k] {
                    out[*r] += &(f.clone() * x);
                }
            }
        }
        out
    }

    /// Action of the basis element `a` on the standard vector `e_k`.
    pub fn act_basis(&self, a: usize, k: usize) -> Vec<K::Elem> {
        let mut out = self.zero_vec();
        for (r, x) in &self.m_cols[a][k] {
            out[*r] = x.clone();
        }
        out
    }

    /// Operator matrix of the element with coordinates `c`.
    pub fn m_matrix(&self, c: &[K::Elem]) -> Matrix<K::Elem> {
        let n = self.dim();
        let mut out = Matrix::zeros(&self.field, n, n);
        for (ca, cols) in c.iter().zip(&self.m_cols) {
            if ca.is_zero() {
                continue;
            }
            for (k, col) in cols.iter().enumerate() {
                for (r, x) in col {
                    out[(*r, k)] += &(ca.clone() * x);
                }
            }
        }
        out
    }

    fn span_coords(&self) -> &SpanCoordinates<K::Elem> {
        self.m_coords.get_or_init(|| {
            let n = self.dim();
            let flat: Vec<Vec<K::Elem>> = self.m_basis.iter().map(Matrix::flatten).collect();
            SpanCoordinates::new(&self.zero(), n * n, &flat)
                .expect("Lie algebra basis is linearly independent")
        })
    }

    /// Coordinates of an operator in `m_basis`, or `None` if it lies outside `𝔪`.
    pub fn m_coords(&self, x: &Matrix<K::Elem>) -> Option<Vec<K::Elem>> {
        let c = self.span_coords().coords_unchecked(x.data());
        if &self.m_matrix(&c) == x {
            Some(c)
        } else {
            None
        }
    }

    /// Whether the basis operators are linearly independent.
    pub fn is_faithful(&self) -> bool {
        let n = self.dim();
        let mut e = linalg::EchelonBasis::new(n * n);
        self.m_basis.iter().all(|x| e.insert(x.data()))
    }

    /// `B(u, v)` in coordinates.
    pub fn bmu(&self, u: &[K::Elem], v: &[K::Elem]) -> Vec<K::Elem> {
        let n = self.dim();
        let mut out = vec![self.zero(); self.m_dim()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let f = ui.clone() * vj;
                for (a, x) in &self.bmu_sparse[i * n + j] {
                    out[*a] += &(f.clone() * x);
                }
            }
        }
        out
    }

    /// `B(u, v)·w`.
    pub fn bmu_apply(&self, u: &[K::Elem], v: &[K::Elem], w: &[K::Elem]) -> Vec<K::Elem> {
        self.act(&self.bmu(u, v), w)
    }

    /// The quadratic moment map `μ(A) = B(A, A)`.
    pub fn mu(&self, a: &[K::Elem]) -> Vec<K::Elem> {
        self.bmu(a, a)
    }

    pub fn mu_matrix(&self, a: &[K::Elem]) -> Matrix<K::Elem> {
        self.m_matrix(&self.mu(a))
    }

    /// The cubic covariant `Ψ(A) = μ(A)·A`.
    pub fn psi(&self, a: &[K::Elem]) -> Vec<K::Elem> {
        self.act(&self.mu(a), a)
    }

    /// The quartic invariant `Q(A) = (3/2)·ω(A, Ψ(A))`.
    pub fn quartic(&self, a: &[K::Elem]) -> K::Elem {
        self.field.ratio(3, 2) * &self.omega_eval(a, &self.psi(a))
    }

    /// `B_τ(a, b)·c = ½(ω(a, c)·b + ω(b, c)·a)`.
    pub fn btau_apply(&self, a: &[K::Elem], b: &[K::Elem], c: &[K::Elem]) -> Vec<K::Elem> {
        let half = self.field.ratio(1, 2);
        let mut out = linalg::vscale(&(half.clone() * &self.omega_eval(a, c)), b);
        linalg::axpy(&mut out, &(half * &self.omega_eval(b, c)), a);
        out
    }

    /// Symmetric trilinear polarization of `Ψ`.
    pub fn b_psi(&self, a: &[K::Elem], b: &[K::Elem], c: &[K::Elem]) -> Vec<K::Elem> {
        let mut out = self.bmu_apply(a, b, c);
        out = linalg::vadd(&out, &self.bmu_apply(b, c, a));
        out = linalg::vadd(&out, &self.bmu_apply(c, a, b));
        linalg::vscale(&self.field.ratio(1, 3), &out)
    }

    /// Symmetric quadrilinear polarization of `Q`.
    pub fn b_q(&self, a: &[K::Elem], b: &[K::Elem], c: &[K::Elem], d: &[K::Elem]) -> K::Elem {
        let s = self.omega_eval(a, &self.b_psi(b, c, d))
            + self.omega_eval(b, &self.b_psi(c, d, a))
            + self.omega_eval(c, &self.b_psi(d, a, b))
            + self.omega_eval(d, &self.b_psi(a, b, c));
        self.field.ratio(3, 8) * &s
    }

    /// Matrix of `dμ_A = 2B(A, ·)` as a map `V → 𝔪`.
    pub fn dmu_matrix(&self, a: &[K::Elem]) -> Matrix<K::Elem> {
        let cols: Vec<Vec<K::Elem>> = (0..self.dim())
            .map(|j| {
                let two = self.field.from_i64(2);
                linalg::vscale(&two, &self.bmu(a, &self.unit(j)))
            })
            .collect();
        Matrix::from_cols(&self.zero(), &cols, self.m_dim()).expect("consistent lengths")
    }

    pub fn ker_dmu(&self, a: &[K::Elem]) -> Subspace<K::Elem> {
        self.dmu_matrix(a).kernel()
    }

    /// `𝔪·A`.
    pub fn tangent(&self, a: &[K::Elem]) -> Subspace<K::Elem> {
        let vecs: Vec<Vec<K::Elem>> = (0..self.m_dim())
            .map(|i| self.m_basis[i].mul_vec(a))
            .collect();
        Subspace::from_vectors(&self.zero(), self.dim(), &vecs)
    }

    /// `𝔪_μ`: the span of the image of `B`, in coordinates.
    pub fn m_mu(&self) -> Subspace<K::Elem> {
        let d = self.m_dim();
        let mut e = linalg::EchelonBasis::new(d);
        for c in &self.bmu {
            if e.dim() == d {
                break;
            }
            e.insert(c);
        }
        Subspace::from_echelon(&self.zero(), e)
    }

    /// A random vector.
    pub fn random_vector<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<K::Elem> {
        (0..self.dim()).map(|_| self.field.random(rng)).collect()
    }

    pub fn random_nonzero_vector<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<K::Elem> {
        loop {
            let v = self.random_vector(rng);
            if !linalg::is_zero_vec(&v) {
                return v;
            }
        }
    }

    pub fn decode_vector(&self, v: &Value) -> Result<Vec<K::Elem>> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("vector must be a JSON array".into()))?;
        let out = arr
            .iter()
            .map(|x| self.field.decode(x))
            .collect::<Result<Vec<_>>>()?;
        self.check_vector(&out)?;
        Ok(out)
    }

    pub fn encode_vector(&self, v: &[K::Elem]) -> Value {
        encode_vector(&self.field, v)
    }

    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let bmu: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| encode_vector(&self.field, self.bmu_basis(i, j)))
                        .collect(),
                )
            })
            .collect();
        let mut out = json!({
            "schema_version": SCHEMA_VERSION,
            "field": self.field.descriptor().to_string(),
            "omega": encode_matrix(&self.field, self.omega.gram()),
            "m_basis": self.m_basis.iter().map(|m| encode_matrix(&self.field, m)).collect::<Vec<_>>(),
            "bmu": bmu,
        });
        if let Some(t) = &self.tag {
            out["construction"] = json!({"id": t.id, "params": t.params});
        }
        if let Some(c) = &self.calibration {
            out["calibration"] = self.field.encode(c);
        }
        out
    }

    /// Parses the layout written by [`SsrData::to_json`]; structural checks only.
    pub fn from_json(field: K, v: &Value) -> Result<Self> {
        if let Some(ver) = v.get("schema_version") {
            if ver.as_u64() != Some(SCHEMA_VERSION) {
                return Err(Error::Parse(format!("unsupported schema version {ver}")));
            }
        }
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("missing field {k:?}")))
        };
        let omega = decode_matrix(&field, get("omega")?)?;
        let m_basis = get("m_basis")?
            .as_array()
            .ok_or_else(|| Error::Parse("m_basis must be an array".into()))?
            .iter()
            .map(|m| decode_matrix(&field, m))
            .collect::<Result<Vec<_>>>()?;
        let mut bmu = Vec::new();
        for row in get("bmu")?
            .as_array()
            .ok_or_else(|| Error::Parse("bmu must be an array".into()))?
        {
            for c in row
                .as_array()
                .ok_or_else(|| Error::Parse("bmu rows must be arrays".into()))?
            {
                let coords = c
                    .as_array()
                    .ok_or_else(|| Error::Parse("bmu entries must be arrays".into()))?
                    .iter()
                    .map(|x| field.decode(x))
                    .collect::<Result<Vec<_>>>()?;
                bmu.push(coords);
            }
        }
        let calibration = v.get("calibration").map(|c| field.decode(c)).transpose()?;
        let tag = v.get("construction").and_then(|c| {
            Some(ConstructionTag {
                id: c.get("id")?.as_str()?.to_string(),
                params: c.get("params").cloned().unwrap_or(Value::Null),
            })
        });
        let mut out = SsrData::new(field, omega, m_basis, bmu)?;
        out.tag = tag;
        out.calibration = calibration;
        Ok(out)
    }
}

impl<K: BaseField> SsrData<K> {
    /// The same data over `K[x]/(x² − λ)`.
    pub fn base_extend(&self, ext: &QuadExt<K>) -> SsrData<QuadExt<K>> {
        let z = ext.zero();
        let lift = |x: &K::Elem| ext.embed(x);
        let omega = self.omega.gram().map(&z, lift);
        let m_basis = self.m_basis.iter().map(|m| m.map(&z, lift)).collect();
        let bmu = self
            .bmu
            .iter()
            .map(|c| c.iter().map(lift).collect())
            .collect();
        let mut out = SsrData::new(ext.clone(), omega, m_basis, bmu)
            .expect("base extension preserves validity");
        out.tag = self.tag.clone();
        out.calibration = self.calibration.as_ref().map(lift);
        out
    }
}

fn sparse<E: Scalar>(v: &[E]) -> Sparse<E> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn encode_vector<K: Field>(k: &K, v: &[K::Elem]) -> Value {
    Value::Array(v.iter().map(|x| k.encode(x)).collect())
}

pub fn encode_matrix<K: Field>(k: &K, m: &Matrix<K::Elem>) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.data().iter().map(|x| k.encode(x)).collect::<Vec<_>>(),
    })
}

pub fn decode_matrix<K: Field>(k: &K, v: &Value) -> Result<Matrix<K::Elem>> {
    let rows = v.get("rows").and_then(Value::as_u64);
    let cols = v.get("cols").and_then(Value::as_u64);
    let entries = v.get("entries").and_then(Value::as_array);
    let (Some(rows), Some(cols), Some(entries)) = (rows, cols, entries) else {
        return Err(Error::Parse("matrix needs rows, cols and entries".into()));
    };
    let (rows, cols) = (rows as usize, cols as usize);
    if entries.len() != rows * cols {
        return Err(Error::DimensionMismatch(format!(
            "{} entries for a {rows}x{cols} matrix",
            entries.len()
        )));
    }
    let data = entries
        .iter()
        .map(|x| k.decode(x))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::unflatten(&k.zero(), rows, cols, &data))
}
