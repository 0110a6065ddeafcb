use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse integer matrix, stored column by column with rows ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    /// Builds from `(row, col, value)` triplets; repeated positions are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, entries: &[(usize, usize, i64)]) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for &(r, c, v) in entries {
            m.add_to(r, c, v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(nrows, ncols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.cols[c].push((r, v));
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c]
            .binary_search_by_key(&r, |e| e.0)
            .map(|i| self.cols[c][i].1)
            .unwrap_or(0)
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: i64) {
        assert!(r < self.nrows && c < self.ncols, "index out of bounds");
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&r, |e| e.0) {
            Ok(i) => {
                col[i].1 += v;
                if col[i].1 == 0 {
                    col.remove(i);
                }
            }
            Err(i) if v != 0 => col.insert(i, (r, v)),
            Err(_) => {}
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.ncols]; self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out[r][c] = v;
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.ncols, self.nrows);
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                t.cols[r].push((c, v));
            }
        }
        t
    }

    /// Exact product `self * rhs`, accumulated in arbitrary precision.
    pub fn mul_exact(&self, rhs: &IntMatrix) -> Vec<Vec<BigInt>> {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let mut out = vec![vec![BigInt::zero(); rhs.ncols]; self.nrows];
        for (j, rcol) in rhs.cols.iter().enumerate() {
            for &(k, b) in rcol {
                for &(i, a) in &self.cols[k] {
                    out[i][j] += BigInt::from(a) * BigInt::from(b);
                }
            }
        }
        out
    }

    /// True when `self * rhs` vanishes.
    pub fn product_is_zero(&self, rhs: &IntMatrix) -> bool {
        assert_eq!(self.ncols, rhs.nrows, "dimension mismatch");
        let mut acc: HashMap<usize, BigInt> = HashMap::new();
        for rcol in &rhs.cols {
            acc.clear();
            for &(k, b) in rcol {
                for &(i, a) in &self.cols[k] {
                    *acc.entry(i).or_insert_with(BigInt::zero) += BigInt::from(a) * BigInt::from(b);
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return false;
            }
        }
        true
    }
}
