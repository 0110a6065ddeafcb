//! Smith normal form over the integers and ranks over prime fields.
//!
//! Boundary matrices are sparse with unit entries, so elimination first pivots
//! on `±1` entries (Markowitz order) and only the leftover block goes through
//! the general dense algorithm. Arithmetic runs in checked `i64` and restarts
//! in `BigInt` on overflow.

use std::collections::BTreeSet;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;

/// Integer arithmetic that may refuse (overflow).
pub(crate) trait Ring: Clone + Debug + Ord {
    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    /// Truncating quotient and remainder.
    fn div_rem(&self, o: &Self) -> Option<(Self, Self)>;
    fn to_bigint(&self) -> BigInt;

    fn abs(&self) -> Option<Self> {
        if *self < Self::zero() {
            self.neg()
        } else {
            Some(self.clone())
        }
    }
}

impl Ring for i64 {
    fn zero() -> Self {
        0
    }
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn div_rem(&self, o: &Self) -> Option<(Self, Self)> {
        Some((self.checked_div(*o)?, self.checked_rem(*o)?))
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        Signed::abs(self).is_one()
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn div_rem(&self, o: &Self) -> Option<(Self, Self)> {
        Some(Integer::div_rem(self, o))
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Entry arithmetic for the sparse unit-pivot phase.
trait PivotArith {
    type T: Clone + Debug;
    fn from_i64(&self, v: i64) -> Self::T;
    fn is_zero(&self, a: &Self::T) -> bool;
    fn is_unit(&self, a: &Self::T) -> bool;
    /// `a / pivot` for a unit pivot.
    fn factor(&self, a: &Self::T, pivot: &Self::T) -> Option<Self::T>;
    /// `a - f * b`.
    fn sub_mul(&self, a: &Self::T, f: &Self::T, b: &Self::T) -> Option<Self::T>;
}

struct IntArith<T>(std::marker::PhantomData<T>);

impl<T: Ring> PivotArith for IntArith<T> {
    type T = T;
    fn from_i64(&self, v: i64) -> T {
        T::from_i64(v)
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &T) -> bool {
        a.is_unit()
    }
    fn factor(&self, a: &T, pivot: &T) -> Option<T> {
        // a unit is its own inverse over Z
        a.mul(pivot)
    }
    fn sub_mul(&self, a: &T, f: &T, b: &T) -> Option<T> {
        a.sub(&f.mul(b)?)
    }
}

struct ModArith {
    p: u64,
}

impl PivotArith for ModArith {
    type T = u64;
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn factor(&self, a: &u64, pivot: &u64) -> Option<u64> {
        Some(a * mod_inverse(*pivot, self.p) % self.p)
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> Option<u64> {
        Some((a + self.p - f * b % self.p) % self.p)
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Eliminates unit pivots. Returns the pivot count and the leftover rows, or
/// `None` on overflow.
fn unit_elimination<A: PivotArith>(
    arith: &A,
    m: &IntMatrix,
) -> Option<(usize, Vec<Vec<(usize, A::T)>>)> {
    let mut rows: Vec<Vec<(usize, A::T)>> = vec![Vec::new(); m.nrows()];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m.ncols()];
    for c in 0..m.ncols() {
        for &(r, v) in m.column(c) {
            let v = arith.from_i64(v);
            if !arith.is_zero(&v) {
                rows[r].push((c, v));
                col_rows[c].insert(r);
            }
        }
    }
    let mut pivots = 0usize;
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        'scan: for (r, row) in rows.iter().enumerate() {
            for (c, v) in row {
                if !arith.is_unit(v) {
                    continue;
                }
                let cost = (row.len() - 1) * (col_rows[*c].len() - 1);
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, r, *c));
                    if cost == 0 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = std::mem::take(&mut rows[pr]);
        let pivot = pivot_row.iter().find(|e| e.0 == pc).map(|e| e.1.clone())?;
        for &(c, _) in &pivot_row {
            col_rows[c].remove(&pr);
        }
        let others: Vec<usize> = col_rows[pc].iter().copied().collect();
        for o in others {
            let old = std::mem::take(&mut rows[o]);
            let a = old.iter().find(|e| e.0 == pc).map(|e| e.1.clone())?;
            let f = arith.factor(&a, &pivot)?;
            let mut merged = Vec::with_capacity(old.len() + pivot_row.len());
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < pivot_row.len() {
                let ci = old.get(i).map_or(usize::MAX, |e| e.0);
                let cj = pivot_row.get(j).map_or(usize::MAX, |e| e.0);
                if ci < cj {
                    merged.push(old[i].clone());
                    i += 1;
                } else {
                    let base = if ci == cj { old[i].1.clone() } else { arith.from_i64(0) };
                    let v = arith.sub_mul(&base, &f, &pivot_row[j].1)?;
                    if arith.is_zero(&v) {
                        col_rows[cj].remove(&o);
                    } else {
                        col_rows[cj].insert(o);
                        merged.push((cj, v));
                    }
                    if ci == cj {
                        i += 1;
                    }
                    j += 1;
                }
            }
            rows[o] = merged;
        }
        pivots += 1;
    }
    Some((pivots, rows.into_iter().filter(|r| !r.is_empty()).collect()))
}

/// Dense Smith normal form. Row and column operations are mirrored into
/// `left` and `right` when provided, so `left * a_in * right = diag`.
/// Returns the nonzero diagonal (positive, each dividing the next).
fn dense_snf<T: Ring>(
    a: &mut [Vec<T>],
    mut left: Option<&mut Vec<Vec<T>>>,
    mut right: Option<&mut Vec<Vec<T>>>,
) -> Option<Vec<T>> {
    let nr = a.len();
    let nc = a.first().map_or(0, |r| r.len());
    let mut diag = Vec::new();
    for t in 0..nr.min(nc) {
        loop {
            let mut best: Option<(T, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, v) in row.iter().enumerate().skip(t) {
                    if !v.is_zero() {
                        let mag = v.abs()?;
                        if best.as_ref().is_none_or(|b| mag < b.0) {
                            best = Some((mag, i, j));
                        }
                    }
                }
            }
            let Some((_, bi, bj)) = best else {
                return Some(diag);
            };
            a.swap(t, bi);
            if let Some(l) = left.as_deref_mut() {
                l.swap(t, bi);
            }
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(t, bj);
                }
                if let Some(r) = right.as_deref_mut() {
                    for row in r.iter_mut() {
                        row.swap(t, bj);
                    }
                }
            }
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let (q, _) = a[i][t].div_rem(&a[t][t])?;
                row_sub(a, i, t, &q)?;
                if let Some(l) = left.as_deref_mut() {
                    row_sub(l, i, t, &q)?;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let (q, _) = a[t][j].div_rem(&a[t][t])?;
                col_sub(a, j, t, &q)?;
                if let Some(r) = right.as_deref_mut() {
                    col_sub(r, j, t, &q)?;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = a[t][t].clone();
            let bad_row = (t + 1..nr).find(|&i| {
                a[i][t + 1..]
                    .iter()
                    .any(|v| !v.div_rem(&pivot).is_some_and(|(_, r)| r.is_zero()))
            });
            match bad_row {
                Some(i) => {
                    row_add(a, t, i)?;
                    if let Some(l) = left.as_deref_mut() {
                        row_add(l, t, i)?;
                    }
                }
                None => break,
            }
        }
        if a[t][t] < T::zero() {
            negate_row(a, t)?;
            if let Some(l) = left.as_deref_mut() {
                negate_row(l, t)?;
            }
        }
        diag.push(a[t][t].clone());
    }
    Some(diag)
}

fn row_sub<T: Ring>(a: &mut [Vec<T>], target: usize, src: usize, q: &T) -> Option<()> {
    for j in 0..a[target].len() {
        let delta = q.mul(&a[src][j])?;
        a[target][j] = a[target][j].sub(&delta)?;
    }
    Some(())
}

fn row_add<T: Ring>(a: &mut [Vec<T>], target: usize, src: usize) -> Option<()> {
    for j in 0..a[target].len() {
        a[target][j] = a[target][j].add(&a[src][j])?;
    }
    Some(())
}

fn col_sub<T: Ring>(a: &mut [Vec<T>], target: usize, src: usize, q: &T) -> Option<()> {
    for row in a.iter_mut() {
        let delta = q.mul(&row[src])?;
        row[target] = row[target].sub(&delta)?;
    }
    Some(())
}

fn negate_row<T: Ring>(a: &mut [Vec<T>], t: usize) -> Option<()> {
    for v in a[t].iter_mut() {
        *v = v.neg()?;
    }
    Some(())
}

fn invariant_factors_in<T: Ring>(m: &IntMatrix) -> Option<Vec<BigInt>> {
    let arith = IntArith::<T>(std::marker::PhantomData);
    let (units, rest) = unit_elimination(&arith, m)?;
    let mut cols: Vec<usize> = rest.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    cols.sort_unstable();
    cols.dedup();
    let mut dense: Vec<Vec<T>> = rest
        .iter()
        .map(|row| {
            let mut out = vec![T::zero(); cols.len()];
            for (c, v) in row {
                out[cols.binary_search(c).expect("column present")] = v.clone();
            }
            out
        })
        .collect();
    let tail = dense_snf(&mut dense, None, None)?;
    let mut factors = vec![<BigInt as One>::one(); units];
    factors.extend(tail.iter().map(Ring::to_bigint));
    Some(factors)
}

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    invariant_factors_in::<i64>(m)
        .or_else(|| invariant_factors_in::<BigInt>(m))
        .expect("arbitrary precision elimination cannot overflow")
}

/// Rank over the integers (equivalently over the rationals).
pub fn integer_rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).len()
}

/// Rank over the prime field `F_p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rank, rest) = unit_elimination(&ModArith { p }, m).expect("modular arithmetic is total");
    debug_assert!(rest.is_empty());
    rank
}

/// `left * A * right = diag(diagonal, 0, ...)` with unimodular `left`, `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub diagonal: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

/// Dense Smith normal form with transforms, in arbitrary precision.
pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let mut a: Vec<Vec<BigInt>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let mut left = identity(m.nrows());
    let mut right = identity(m.ncols());
    let diagonal = dense_snf(&mut a, Some(&mut left), Some(&mut right))
        .expect("arbitrary precision elimination cannot overflow");
    SmithDecomposition { diagonal, left, right }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { <BigInt as One>::one() } else { <BigInt as Zero>::zero() }).collect())
        .collect()
}

/// Splits a positive integer into prime powers, ascending by prime.
pub fn prime_power_factors(n: &BigInt) -> Option<Vec<u64>> {
    let mut n = Signed::abs(n).to_u64()?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut q = 1u64;
            while n % p == 0 {
                n /= p;
                q *= p;
            }
            out.push(q);
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    Some(out)
}
