//! Exterior algebra of `kⁿ` in the monomial basis, indexed by bitmasks.

use crate::field::Scalar;

/// Sign of moving the indices of `b` past those of `a` in `e^a ∧ e^b`.
pub fn wedge_sign(a: u32, b: u32) -> Option<bool> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    for j in 0..32 {
        if b >> j & 1 == 1 {
            swaps += (a >> (j + 1)).count_ones();
        }
    }
    Some(swaps % 2 == 1)
}

/// Sign of `ι_i e^S = ±e^{S∖i}`: the parity of indices of `S` below `i`.
pub fn contraction_sign(s: u32, i: u32) -> bool {
    (s & ((1 << i) - 1)).count_ones() % 2 == 1
}

/// Masks of size `k` in lexicographic order of their index tuples.
pub fn subsets(n: u32, k: u32) -> Vec<u32> {
    fn rec(start: u32, n: u32, k: u32, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            rec(i + 1, n, k - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

/// Dense forms on `kⁿ`: one coefficient per mask.
pub fn wedge<E: Scalar>(a: &[E], b: &[E]) -> Vec<E> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            if let Some(neg) = wedge_sign(i as u32, j as u32) {
                let t = x.clone() * y;
                if neg {
                    out[i | j] -= &t;
                } else {
                    out[i | j] += &t;
                }
            }
        }
    }
    out
}

/// Interior product with the `i`-th basis vector.
pub fn contract<E: Scalar>(a: &[E], i: u32) -> Vec<E> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len()];
    for (s, x) in a.iter().enumerate() {
        let s = s as u32;
        if x.is_zero() || s >> i & 1 == 0 {
            continue;
        }
        let t = s & !(1 << i);
        if contraction_sign(s, i) {
            out[t as usize] -= x;
        } else {
            out[t as usize] += x;
        }
    }
    out
}

/// Dense form from coordinates on a list of masks.
pub fn from_coords<E: Scalar>(n: u32, masks: &[u32], c: &[E]) -> Vec<E> {
    let mut out = vec![c[0].zero_like(); 1 << n];
    for (m, x) in masks.iter().zip(c) {
        out[*m as usize] = x.clone();
    }
    out
}

pub fn to_coords<E: Scalar>(form: &[E], masks: &[u32]) -> Vec<E> {
    masks.iter().map(|m| form[*m as usize].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Rationals};

    #[test]
    fn wedge_is_graded_commutative() {
        let q = Rationals;
        let mut a = vec![q.zero(); 16];
        let mut b = vec![q.zero(); 16];
        a[0b0011] = q.from_i64(2);
        a[0b0001] = q.from_i64(1);
        b[0b0100] = q.from_i64(3);
        b[0b1000] = q.from_i64(-1);
        let ab = wedge(&a, &b);
        let ba = wedge(&b, &a);
        // degree 2 part commutes with degree 1, degree 1 parts anticommute
        assert_eq!(ab[0b0111], ba[0b0111]);
        assert_eq!(ab[0b0101], -ba[0b0101].clone());
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
    }

    #[test]
    fn contraction_is_a_derivation() {
        let q = Rationals;
        let mut a = vec![q.zero(); 16];
        let mut b = vec![q.zero(); 16];
        a[0b0011] = q.from_i64(1);
        b[0b0100] = q.from_i64(1);
        b[0b1001] = q.from_i64(2);
        for i in 0..4 {
            let lhs = contract(&wedge(&a, &b), i);
            let rhs = crate::linalg::vadd(&wedge(&contract(&a, i), &b), &wedge(&a, &contract(&b, i)));
            assert_eq!(lhs, rhs);
        }
    }
}
