//! Shared steps: fixing the scale of `B`, solving for invariant forms, and
//! moment maps through the trace form.

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{self, EchelonBasis, Matrix};
use crate::ssr::SsrData;

/// Rescales `B` so the defining identity holds, and returns the data with the
/// scale recorded. The scale is read off from the first basis triple on which
/// both sides are nonzero.
pub fn calibrate<K: Field>(
    k: &K,
    omega: Matrix<K::Elem>,
    m_basis: Vec<Matrix<K::Elem>>,
    bmu: Vec<Vec<K::Elem>>,
) -> Result<SsrData<K>> {
    let raw = SsrData::new(k.clone(), omega.clone(), m_basis.clone(), bmu.clone())?;
    let n = raw.dim();
    let two = k.from_i64(2);
    let units: Vec<_> = (0..n).map(|i| raw.unit(i)).collect();
    let mut scale = None;
    'search: for i in 0..n {
        for j in 0..n {
            for l in (j + 1)..n {
                let lhs = linalg::vsub(
                    &linalg::vscale(&two, &raw.act(raw.bmu_basis(i, j), &units[l])),
                    &linalg::vscale(&two, &raw.act(raw.bmu_basis(i, l), &units[j])),
                );
                let mut rhs = raw.zero_vec();
                rhs[i] += &(two.clone() * &omega[(j, l)]);
                rhs[l] -= &omega[(i, j)];
                rhs[j] += &omega[(i, l)];
                for (x, y) in lhs.iter().zip(&rhs) {
                    if !x.is_zero() && !y.is_zero() {
                        scale = Some(y.div(x)?);
                        break 'search;
                    }
                }
            }
        }
    }
    let c = scale.ok_or_else(|| {
        Error::CalibrationFailure("no basis triple determines the scale".into())
    })?;
    let scaled = bmu
        .into_iter()
        .map(|v| linalg::vscale(&c, &v))
        .collect();
    Ok(SsrData::new(k.clone(), omega, m_basis, scaled)?.with_calibration(c))
}

/// The antisymmetric form preserved by all operators, unique up to scale and
/// normalized so its first nonzero entry above the diagonal is 1. Diagonal
/// operators cut the unknowns down to weight-zero pairs first.
pub fn invariant_symplectic_form<K: Field>(k: &K, ops: &[Matrix<K::Elem>]) -> Result<Matrix<K::Elem>> {
    let n = ops[0].rows();
    let diagonal: Vec<&Matrix<K::Elem>> = ops
        .iter()
        .filter(|x| (0..n).all(|i| (0..n).all(|j| i == j || x[(i, j)].is_zero())))
        .collect();
    let mut unknowns = Vec::new();
    for p in 0..n {
        for q in (p + 1)..n {
            if diagonal
                .iter()
                .all(|x| (x[(p, p)].clone() + &x[(q, q)]).is_zero())
            {
                unknowns.push((p, q));
            }
        }
    }
    let u = unknowns.len();
    let mut index = vec![None; n * n];
    for (t, &(p, q)) in unknowns.iter().enumerate() {
        index[p * n + q] = Some((t, false));
        index[q * n + p] = Some((t, true));
    }
    let mut eqs = EchelonBasis::new(u);
    // (XᵀG + GX)_{rc} = Σ_l X_{lr} G_{lc} + G_{rl} X_{lc}
    for x in ops {
        let nz = x.nonzeros();
        let mut rows: std::collections::HashMap<(usize, usize), Vec<K::Elem>> =
            std::collections::HashMap::new();
        for (l, r, v) in &nz {
            for c in 0..n {
                if let Some((t, neg)) = index[l * n + c] {
                    let row = rows.entry((*r, c)).or_insert_with(|| vec![k.zero(); u]);
                    if neg {
                        row[t] -= v;
                    } else {
                        row[t] += v;
                    }
                }
            }
        }
        for (l, c, v) in &nz {
            for r in 0..n {
                if let Some((t, neg)) = index[r * n + l] {
                    let row = rows.entry((r, *c)).or_insert_with(|| vec![k.zero(); u]);
                    if neg {
                        row[t] -= v;
                    } else {
                        row[t] += v;
                    }
                }
            }
        }
        for row in rows.values() {
            eqs.insert(row);
        }
    }
    let sys = Matrix::from_rows(&k.zero(), eqs.rows(), u)?;
    let ker = if eqs.dim() == 0 {
        crate::linalg::Subspace::whole(&k.zero(), u)
    } else {
        sys.kernel()
    };
    if ker.dim() != 1 {
        return Err(Error::CalibrationFailure(format!(
            "invariant antisymmetric forms span dimension {}",
            ker.dim()
        )));
    }
    let sol = &ker.basis()[0];
    let mut g = Matrix::zeros(k, n, n);
    for (t, &(p, q)) in unknowns.iter().enumerate() {
        g[(p, q)] = sol[t].clone();
        g[(q, p)] = -sol[t].clone();
    }
    Ok(g)
}

/// `B(eᵢ, eⱼ)` solved from `tr(B(u,v)·X_a) = ω(X_a u, v)` with the trace form of the
/// representation; symmetric and equivariant by construction, correct up to one scale.
pub fn trace_form_moment<K: Field>(
    k: &K,
    omega: &Matrix<K::Elem>,
    m_basis: &[Matrix<K::Elem>],
) -> Result<Vec<Vec<K::Elem>>> {
    let n = omega.rows();
    let d = m_basis.len();
    let sparse: Vec<Vec<(usize, usize, K::Elem)>> = m_basis.iter().map(Matrix::nonzeros).collect();
    let mut trace = Matrix::zeros(k, d, d);
    for a in 0..d {
        for b in a..d {
            let mut acc = k.zero();
            for (i, j, x) in &sparse[a] {
                let y = &m_basis[b][(*j, *i)];
                if !y.is_zero() {
                    acc += &(x.clone() * y);
                }
            }
            trace[(a, b)] = acc.clone();
            trace[(b, a)] = acc;
        }
    }
    let inv = trace
        .inverse()
        .map_err(|_| Error::CalibrationFailure("trace form is degenerate".into()))?;
    // ω(X_a eᵢ, eⱼ) = Σ_r (X_a)_{ri} ω_{rj}
    let mut out = vec![vec![k.zero(); d]; n * n];
    for i in 0..n {
        for j in i..n {
            let mut rhs = vec![k.zero(); d];
            for (a, sp) in sparse.iter().enumerate() {
                for (r, c, x) in sp {
                    if *c == i && !omega[(*r, j)].is_zero() {
                        rhs[a] += &(x.clone() * &omega[(*r, j)]);
                    }
                }
            }
            let coords = inv.mul_vec(&rhs);
            out[j * n + i] = coords.clone();
            out[i * n + j] = coords;
        }
    }
    Ok(out)
}

/// `exp(tX)` for a nilpotent `X` whose nilpotency index is below the characteristic.
pub fn unipotent<K: Field>(k: &K, x: &Matrix<K::Elem>, t: &K::Elem) -> Option<Matrix<K::Elem>> {
    let n = x.rows();
    let mut out = Matrix::identity(k, n);
    let mut term = Matrix::identity(k, n);
    for j in 1..=n {
        term = term.mul(x);
        if term.is_zero() {
            return Some(out);
        }
        let p = k.characteristic();
        if p != 0 && j as u64 >= p {
            return None;
        }
        term = term.scale(&(t.clone() * &k.ratio(1, j as i64)));
        out = out.add(&term);
    }
    None
}
