//! Faulkner ternary products `⟨z, x, y⟩ = ½ω(x, y)z − B(x, y)·z` and their axioms.

use serde_json::{json, Value};

use crate::field::{Field, Scalar};
use crate::linalg::{self, EchelonBasis, Matrix};
use crate::ssr::SsrData;

type Sparse<E> = Vec<(usize, E)>;

/// The form `⟨x, y⟩` and the trilinear map `⟨x, y, z⟩` on basis triples.
#[derive(Clone, Debug)]
pub struct TernaryProduct<E> {
    n: usize,
    form: Matrix<E>,
    /// `tensor[(x * n + y) * n + z]` holds `⟨e_x, e_y, e_z⟩`.
    tensor: Vec<Sparse<E>>,
    zero: E,
}

fn sparse<E: Scalar>(v: &[E]) -> Sparse<E> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

impl<E: Scalar> TernaryProduct<E> {
    pub fn new(form: Matrix<E>, tensor: Vec<Vec<E>>) -> Self {
        let n = form.rows();
        assert_eq!(tensor.len(), n * n * n, "one value per basis triple");
        TernaryProduct {
            n,
            zero: form.zero_elem().clone(),
            tensor: tensor.iter().map(|v| sparse(v)).collect(),
            form,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn form(&self) -> &Matrix<E> {
        &self.form
    }

    fn idx(&self, x: usize, y: usize, z: usize) -> usize {
        (x * self.n + y) * self.n + z
    }

    pub fn basis_value(&self, x: usize, y: usize, z: usize) -> Vec<E> {
        let mut out = vec![self.zero.clone(); self.n];
        for (i, c) in &self.tensor[self.idx(x, y, z)] {
            out[*i] = c.clone();
        }
        out
    }

    /// Replaces one basis value; used to build counterexamples.
    pub fn set_basis_value(&mut self, x: usize, y: usize, z: usize, v: &[E]) {
        let i = self.idx(x, y, z);
        self.tensor[i] = sparse(v);
    }

    /// `⟨x, y, z⟩` for arbitrary vectors.
    pub fn eval(&self, x: &[E], y: &[E], z: &[E]) -> Vec<E> {
        let mut out = vec![self.zero.clone(); self.n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a.clone() * b;
                for (k, c) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let abc = ab.clone() * c;
                    for (r, t) in &self.tensor[self.idx(i, j, k)] {
                        out[*r] += &(abc.clone() * t);
                    }
                }
            }
        }
        out
    }

    /// Adds `coef · ⟨e_x, e_y, v⟩` style terms: `⟨·,·,·⟩` with one slot a sparse vector.
    fn add_slot(&self, acc: &mut [E], coef: &E, slot: usize, fixed: [usize; 2], v: &Sparse<E>) {
        for (l, c) in v {
            let (x, y, z) = match slot {
                0 => (*l, fixed[0], fixed[1]),
                1 => (fixed[0], *l, fixed[1]),
                _ => (fixed[0], fixed[1], *l),
            };
            let f = coef.clone() * c;
            for (r, t) in &self.tensor[self.idx(x, y, z)] {
                acc[*r] += &(f.clone() * t);
            }
        }
    }
}

/// `⟨z, x, y⟩ := ½ω(x, y)z − B(x, y)·z` on basis triples.
pub fn ternary_from_ssr<K: Field>(ssr: &SsrData<K>) -> TernaryProduct<K::Elem> {
    let k = ssr.field();
    let n = ssr.dim();
    let half = k.ratio(1, 2);
    let g = ssr.omega().gram();
    let mut tensor = Vec::with_capacity(n * n * n);
    for z in 0..n {
        for x in 0..n {
            for y in 0..n {
                let bxy = ssr.bmu_basis(x, y);
                let mut v = linalg::vneg(&ssr.act(bxy, &ssr.unit(z)));
                v[z] += &(half.clone() * &g[(x, y)]);
                tensor.push(v);
            }
        }
    }
    TernaryProduct::new(g.clone(), tensor)
}

/// Outcome per axiom, each checked on all basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryReport {
    pub results: Vec<(&'static str, bool)>,
}

impl TernaryReport {
    pub fn get(&self, name: &str) -> bool {
        self.results.iter().any(|(n, ok)| *n == name && *ok)
    }

    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|(_, ok)| *ok)
    }

    /// The T-axioms hold exactly when the B-axioms do.
    pub fn equivalence_confirmed(&self) -> bool {
        let t = ["T1", "T2", "T3", "T4"].iter().all(|a| self.get(a));
        let b = ["B1", "B2", "B3", "B4"].iter().all(|a| self.get(a));
        t == b
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        for (n, ok) in &self.results {
            m.insert(n.to_string(), Value::Bool(*ok));
        }
        json!({"axioms": m, "equivalence_confirmed": self.equivalence_confirmed()})
    }
}

/// Checks T1–T4 on the product and B1–B4 on the operator-valued map
/// `B(x, y)·z = ½⟨x, y⟩z − ⟨z, x, y⟩` it defines.
pub fn verify_ternary_axioms<E: Scalar>(t: &TernaryProduct<E>) -> TernaryReport {
    let n = t.n;
    let g = &t.form;
    let zero = t.zero.clone();
    let half = inverse_two(&zero);
    let val = |x: usize, y: usize, z: usize| t.basis_value(x, y, z);

    // T1: ⟨x,y,z⟩ = ⟨y,x,z⟩ + ⟨x,y⟩z ; T2: ⟨x,y,z⟩ = ⟨x,z,y⟩ + ⟨y,z⟩x
    let mut t1 = true;
    let mut t2 = true;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = val(x, y, z);
                let mut r1 = val(y, x, z);
                r1[z] += &g[(x, y)];
                t1 &= lhs == r1;
                let mut r2 = val(x, z, y);
                r2[x] += &g[(y, z)];
                t2 &= lhs == r2;
            }
        }
    }

    // T3: ⟨⟨x,y,z⟩,w⟩ = ⟨⟨x,y,w⟩,z⟩ + ⟨x,y⟩⟨z,w⟩, using the rows ⟨⟨x,y,z⟩, ·⟩
    let mut t3 = true;
    let rows: Vec<Vec<E>> = (0..n * n * n)
        .map(|i| {
            let mut r = vec![zero.clone(); n];
            for (l, c) in &t.tensor[i] {
                for w in 0..n {
                    let gw = &g[(*l, w)];
                    if !gw.is_zero() {
                        r[w] += &(c.clone() * gw);
                    }
                }
            }
            r
        })
        .collect();
    'outer3: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let lhs = &rows[t.idx(x, y, z)][w];
                    let rhs = rows[t.idx(x, y, w)][z].clone() + &(g[(x, y)].clone() * &g[(z, w)]);
                    if *lhs != rhs {
                        t3 = false;
                        break 'outer3;
                    }
                }
            }
        }
    }

    // T4: ⟨⟨x,y,z⟩,v,w⟩ = ⟨⟨x,v,w⟩,y,z⟩ + ⟨x,⟨y,v,w⟩,z⟩ + ⟨x,y,⟨z,w,v⟩⟩
    let mut t4 = true;
    let one = zero.one_like();
    'outer4: for v in 0..n {
        for w in 0..n {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        let mut lhs = vec![zero.clone(); n];
                        t.add_slot(&mut lhs, &one, 0, [v, w], &t.tensor[t.idx(x, y, z)]);
                        let mut rhs = vec![zero.clone(); n];
                        t.add_slot(&mut rhs, &one, 0, [y, z], &t.tensor[t.idx(x, v, w)]);
                        t.add_slot(&mut rhs, &one, 1, [x, z], &t.tensor[t.idx(y, v, w)]);
                        t.add_slot(&mut rhs, &one, 2, [x, y], &t.tensor[t.idx(z, w, v)]);
                        if lhs != rhs {
                            t4 = false;
                            break 'outer4;
                        }
                    }
                }
            }
        }
    }

    // B(x,y) as an operator: column z is ½⟨x,y⟩e_z − ⟨z,x,y⟩
    let op = |x: usize, y: usize| -> Matrix<E> {
        let mut m = Matrix::from_fn(&zero, n, n, |_, _| zero.clone());
        for z in 0..n {
            for (r, c) in &t.tensor[t.idx(z, x, y)] {
                m[(*r, z)] -= c;
            }
            m[(z, z)] += &(half.clone() * &g[(x, y)]);
        }
        m
    };
    let ops: Vec<Matrix<E>> = (0..n * n).map(|i| op(i / n, i % n)).collect();
    let b = |x: usize, y: usize| &ops[x * n + y];

    // B1: B(x,y)z = B(x,z)y + ⟨y,z⟩x − ½⟨z,x⟩y + ½⟨y,x⟩z ; B2: symmetry
    let mut b1 = true;
    let mut b2 = true;
    for x in 0..n {
        for y in 0..n {
            b2 &= b(x, y) == b(y, x);
            for z in 0..n {
                let lhs = b(x, y).col(z);
                let mut rhs = b(x, z).col(y);
                rhs[x] += &g[(y, z)];
                rhs[y] -= &(half.clone() * &g[(z, x)]);
                rhs[z] += &(half.clone() * &g[(y, x)]);
                b1 &= lhs == rhs;
            }
        }
    }

    // B3: every B(x,y) preserves ⟨,⟩
    let b3 = ops.iter().all(|x| x.transpose().mul(g).add(&g.mul(x)).is_zero());

    // B4 is linear in the operator B(x,y): it holds for all x, y exactly when every
    // element of a basis of their span acts as a derivation of B.
    let mut span = EchelonBasis::new(n * n);
    let mut basis = Vec::new();
    for x in &ops {
        if span.insert(x.data()) {
            basis.push(x.clone());
        }
    }
    let mut b4 = true;
    'outer_b4: for x in &basis {
        for u in 0..n {
            for v in u..n {
                let lhs = x.commutator(b(u, v));
                let xu = x.col(u);
                let xv = x.col(v);
                let mut rhs = Matrix::from_fn(&zero, n, n, |_, _| zero.clone());
                for (l, c) in xu.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    rhs.add_scaled(c, b(l, v));
                }
                for (l, c) in xv.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    rhs.add_scaled(c, b(u, l));
                }
                if lhs != rhs {
                    b4 = false;
                    break 'outer_b4;
                }
            }
        }
    }

    TernaryReport {
        results: vec![
            ("T1", t1),
            ("T2", t2),
            ("T3", t3),
            ("T4", t4),
            ("B1", b1),
            ("B2", b2),
            ("B3", b3),
            ("B4", b4),
        ],
    }
}

fn inverse_two<E: Scalar>(zero: &E) -> E {
    zero.from_i64_like(2).inv().expect("characteristic is not 2")
}
