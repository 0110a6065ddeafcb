//! Exact fields (rationals and `F_p`) and the dense elimination the cocycle
//! and product code needs.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::smith::mod_inverse;
use super::Coefficients;

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `a` must be nonzero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn coefficients(&self) -> Coefficients;
    /// Printable form: integers stay integers, fractions become `"p/q"`.
    fn render(&self, a: &Self::Elem) -> serde_json::Value;

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.sub(&self.zero(), a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn coefficients(&self) -> Coefficients {
        Coefficients::Rat
    }
    fn render(&self, a: &BigRational) -> serde_json::Value {
        if a.is_integer() {
            if let Ok(v) = i64::try_from(a.to_integer()) {
                return v.into();
            }
        }
        a.to_string().into()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `p` must be prime; see [`Coefficients::prime`] for the checked path.
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 31)).contains(&p), "modulus out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        debug_assert!(*a != 0);
        mod_inverse(*a, self.p)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn coefficients(&self) -> Coefficients {
        Coefficients::Prime(self.p)
    }
    fn render(&self, a: &u64) -> serde_json::Value {
        (*a).into()
    }
}

/// Incrementally maintained row-echelon span that remembers how each stored
/// vector was built from the inserted generators.
#[derive(Clone, Debug)]
pub struct EchelonSpan<F: Field> {
    field: F,
    len: usize,
    /// Reduced vectors, each with its pivot position (a unit entry).
    rows: Vec<(usize, Vec<F::Elem>)>,
    /// `combos[i]` expresses `rows[i]` in terms of generators `0..generators`.
    combos: Vec<Vec<F::Elem>>,
    generators: usize,
}

impl<F: Field> EchelonSpan<F> {
    pub fn new(field: F, len: usize) -> Self {
        EchelonSpan { field, len, rows: Vec::new(), combos: Vec::new(), generators: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Reduces `v` against the stored rows; returns the residual and the
    /// combination of generators that was subtracted.
    fn reduce(&self, v: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let f = &self.field;
        let mut residual = v.to_vec();
        let mut used = vec![f.zero(); self.generators];
        for ((pivot, row), combo) in self.rows.iter().zip(&self.combos) {
            let c = residual[*pivot].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(row) {
                if !f.is_zero(x) {
                    *r = f.sub(r, &f.mul(&c, x));
                }
            }
            for (u, x) in used.iter_mut().zip(combo) {
                if !f.is_zero(x) {
                    *u = f.add(u, &f.mul(&c, x));
                }
            }
        }
        (residual, used)
    }

    /// Adds `v` as the next generator. Returns false (and stores nothing)
    /// when `v` is already in the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let f = self.field.clone();
        let (mut residual, used) = self.reduce(v);
        let Some(pivot) = residual.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let scale = f.inv(&residual[pivot]);
        for x in residual.iter_mut() {
            *x = f.mul(x, &scale);
        }
        // residual = v - Σ used_i g_i, scaled
        let mut combo: Vec<F::Elem> = used.iter().map(|u| f.neg(&f.mul(u, &scale))).collect();
        combo.push(scale);
        for c in self.combos.iter_mut() {
            c.push(f.zero());
        }
        // keep earlier rows reduced at the new pivot
        for (row, c) in self.rows.iter_mut().zip(self.combos.iter_mut()) {
            let k = row.1[pivot].clone();
            if f.is_zero(&k) {
                continue;
            }
            for (x, y) in row.1.iter_mut().zip(&residual) {
                *x = f.sub(x, &f.mul(&k, y));
            }
            for (x, y) in c.iter_mut().zip(&combo) {
                *x = f.sub(x, &f.mul(&k, y));
            }
        }
        self.rows.push((pivot, residual));
        self.combos.push(combo);
        self.generators += 1;
        true
    }

    /// Coordinates of `v` over the inserted generators, if `v` is in the span.
    pub fn express(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let (residual, used) = self.reduce(v);
        residual.iter().all(|x| self.field.is_zero(x)).then_some(used)
    }
}

/// Basis of `{x | A x = 0}` for `A` given as rows, from the reduced row
/// echelon form; one vector per free column, in column order.
pub fn nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let f = field;
    let mut a: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !f.is_zero(&a[i][c])) else { continue };
        a.swap(r, p);
        let s = f.inv(&a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(x, &s);
        }
        for i in 0..a.len() {
            if i == r || f.is_zero(&a[i][c]) {
                continue;
            }
            let k = a[i][c].clone();
            for j in 0..ncols {
                let sub = f.mul(&k, &a[r][j]);
                a[i][j] = f.sub(&a[i][j], &sub);
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&a[row][free]);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.mul(&f.inv(&3), &3), 1);
        assert_eq!(f.neg(&2), 5);
    }

    #[test]
    fn echelon_span_expresses_combinations() {
        let q = Rationals;
        let g1: Vec<_> = [1, 2, 0].iter().map(|&x| q.from_i64(x)).collect();
        let g2: Vec<_> = [0, 1, 1].iter().map(|&x| q.from_i64(x)).collect();
        let dep: Vec<_> = [2, 5, 1].iter().map(|&x| q.from_i64(x)).collect();
        let mut span = EchelonSpan::new(q, 3);
        assert!(span.insert(&g1));
        assert!(span.insert(&g2));
        assert!(!span.insert(&dep));
        assert_eq!(span.express(&dep), Some(vec![q.from_i64(2), q.from_i64(1)]));
        let out: Vec<_> = [0, 0, 1].iter().map(|&x| q.from_i64(x)).collect();
        assert_eq!(span.express(&out), None);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = PrimeField::new(5);
        let basis = nullspace(&f, &[vec![1, 1, 1]], 3);
        assert_eq!(basis, vec![vec![4, 1, 0], vec![4, 0, 1]]);
    }
}
