//! Sparse exact linear algebra over the cyclotomic scalars: rank and kernel
//! via Gauss–Jordan elimination with exact division.

use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// A sparse matrix over Q(zeta_N), stored row-major.
#[derive(Clone)]
pub struct SparseMatrix {
    order: u32,
    ncols: usize,
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl SparseMatrix {
    pub fn new(order: u32, nrows: usize, ncols: usize) -> Self {
        SparseMatrix { order, ncols, rows: vec![BTreeMap::new(); nrows] }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(j < self.ncols, "column out of range");
        assert_eq!(v.order(), self.order, "mixed scalar orders");
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.rows[i].get(&j).cloned().unwrap_or_else(|| Scalar::zero(self.order))
    }

    /// Appends a row given as (column, value) pairs.
    pub fn push_row(&mut self, entries: impl IntoIterator<Item = (usize, Scalar)>) {
        let mut row = BTreeMap::new();
        for (j, v) in entries {
            assert!(j < self.ncols, "column out of range");
            if !v.is_zero() {
                row.insert(j, v);
            }
        }
        self.rows.push(row);
    }

    /// Multiplies the matrix with a dense vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols);
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Scalar::zero(self.order);
                for (j, a) in row {
                    acc = acc.add(&a.mul(&v[*j]));
                }
                acc
            })
            .collect()
    }

    /// Row-reduces a copy of the matrix and returns `(rank, kernel_basis)`.
    /// The kernel basis vectors are dense columns of length `ncols`, one per
    /// free column, in ascending free-column order.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let mut rows: Vec<BTreeMap<usize, Scalar>> =
            self.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        // pivots: (column, row-index-in-echelon-list), built in elimination order
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut echelon: Vec<BTreeMap<usize, Scalar>> = Vec::new();
        while let Some(best) = rows
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_empty())
            .min_by_key(|(_, r)| *r.keys().next().unwrap())
            .map(|(i, _)| i)
        {
            let mut pivot_row = rows.swap_remove(best);
            let (col, lead) = {
                let (c, l) = pivot_row.iter().next().unwrap();
                (*c, l.clone())
            };
            // normalize the pivot row
            let inv = lead.inverse().expect("leading entry is nonzero");
            for v in pivot_row.values_mut() {
                *v = v.mul(&inv);
            }
            // eliminate the pivot column from the remaining rows
            for row in rows.iter_mut() {
                if let Some(c) = row.get(&col).cloned() {
                    let mut out = BTreeMap::new();
                    for (j, v) in row.iter() {
                        let delta = pivot_row.get(j).map(|p| c.mul(p));
                        let next = match delta {
                            Some(d) => v.sub(&d),
                            None => v.clone(),
                        };
                        if !next.is_zero() {
                            out.insert(*j, next);
                        }
                    }
                    for (j, p) in pivot_row.iter() {
                        if !row.contains_key(j) {
                            let d = c.mul(p).neg();
                            if !d.is_zero() {
                                out.insert(*j, d);
                            }
                        }
                    }
                    *row = out;
                }
            }
            pivots.push((col, echelon.len()));
            echelon.push(pivot_row);
        }
        // back-substitute to reduced echelon form
        pivots.sort();
        for idx in 0..pivots.len() {
            let (col, row_i) = pivots[idx];
            for &(_, upper) in &pivots[..idx] {
                if let Some(c) = echelon[upper].get(&col).cloned() {
                    let pivot_row = echelon[row_i].clone();
                    let target = &mut echelon[upper];
                    for (j, p) in pivot_row.iter() {
                        let cur = target.remove(j).unwrap_or_else(|| Scalar::zero(self.order));
                        let next = cur.sub(&c.mul(p));
                        if !next.is_zero() {
                            target.insert(*j, next);
                        }
                    }
                }
            }
        }
        let rank = pivots.len();
        let pivot_cols: Vec<usize> = pivots.iter().map(|(c, _)| *c).collect();
        let mut kernel = Vec::new();
        for free in 0..self.ncols {
            if pivot_cols.binary_search(&free).is_ok() {
                continue;
            }
            let mut v = vec![Scalar::zero(self.order); self.ncols];
            v[free] = Scalar::one(self.order);
            for &(col, row_i) in &pivots {
                if let Some(c) = echelon[row_i].get(&free) {
                    v[col] = c.neg();
                }
            }
            kernel.push(v);
        }
        (rank, kernel)
    }
}
