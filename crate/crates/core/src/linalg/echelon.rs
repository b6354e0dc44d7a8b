//! Row reduction and incremental echelon bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::field::Scalar;

/// Plain Gauss–Jordan elimination to reduced row echelon form.
/// Zero rows are dropped from the end; returns the pivot columns.
pub fn gauss_jordan<E: Scalar>(rows: &mut Vec<Vec<E>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot is invertible");
        if !inv.is_one() {
            for x in rows[r][col..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for j in col..ncols {
                if !pivot_row[j].is_zero() {
                    let t = f.clone() * &pivot_row[j];
                    row[j] -= &t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Fraction-free Gauss–Jordan over the integers after clearing denominators.
/// Every intermediate entry is a minor of the scaled input, so the divisions are exact.
pub fn fraction_free_rref(rows: &mut Vec<Vec<BigRational>>, ncols: usize) -> Vec<usize> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][col].clone();
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[col].clone();
            if f.is_zero() && prev.is_one() && piv.is_one() {
                continue;
            }
            for j in 0..ncols {
                let v = &piv * &row[j] - &f * &pivot_row[j];
                row[j] = if prev.is_one() {
                    v
                } else {
                    let (q, rem) = v.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "fraction-free division must be exact");
                    q
                };
            }
        }
        prev = piv;
        pivots.push(col);
        r += 1;
    }
    a.truncate(r);
    *rows = a
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::new(x, prev.clone()))
                .collect()
        })
        .collect();
    pivots
}

/// A reduced echelon basis that grows one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis<E> {
    ncols: usize,
    rows: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Scalar> EchelonBasis<E> {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<E>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[E]) -> Vec<E> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (j, x) in row.iter().enumerate().skip(p) {
                if !x.is_zero() {
                    let t = f.clone() * x;
                    v[j] -= &t;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[E]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Adds `v`; returns whether the span grew.
    pub fn insert(&mut self, v: &[E]) -> bool {
        let mut w = self.reduce(v);
        let Some(q) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[q].inv().expect("nonzero pivot is invertible");
        for x in w.iter_mut().skip(q) {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[q].is_zero() {
                continue;
            }
            let f = row[q].clone();
            for (j, x) in w.iter().enumerate().skip(q) {
                if !x.is_zero() {
                    let t = f.clone() * x;
                    row[j] -= &t;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < q);
        self.pivots.insert(at, q);
        self.rows.insert(at, w);
        true
    }

    pub fn into_rows(self) -> (Vec<Vec<E>>, Vec<usize>) {
        (self.rows, self.pivots)
    }
}
