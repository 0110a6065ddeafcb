//! Cohomology ring of `Z_K` computed in the dga
//! `Λ[u_1..u_m] ⊗ k[K] / (v_i², u_i v_i)`, `d u_i = v_i`, over `F_p`.
//! Monomials `u_ω v_σ` (`σ ∈ K`, `ω ∩ σ = ∅`) sit in degree `2|σ| + |ω|`.
//! Linear algebra is local to this file.

use std::collections::{HashMap, HashSet};

use zkring_core::{SimplicialComplex, VertexSubset};

type Vector = Vec<u64>;

struct Echelon {
    p: u64,
    rows: Vec<(usize, Vector)>,
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    fn reduce(&self, v: &[u64]) -> Vector {
        let p = self.p;
        let mut v = v.to_vec();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        v
    }

    fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let s = inv(v[piv], self.p);
        for x in v.iter_mut() {
            *x = *x * s % self.p;
        }
        let p = self.p;
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        self.rows.push((piv, v));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Kernel of the linear map with the given images of basis vectors.
fn kernel(images: &[Vector], p: u64) -> Vec<Vector> {
    let n = images.len();
    let width = images.first().map_or(0, Vec::len);
    // augment each image with the identity and eliminate
    let mut rows: Vec<(Vector, Vector)> = images
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (v.clone(), e)
        })
        .collect();
    let mut out = Vec::new();
    let mut pivots: Vec<(usize, Vector, Vector)> = Vec::new();
    for (mut v, mut e) in rows.drain(..) {
        for (piv, pv, pe) in &pivots {
            let c = v[*piv];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(pv) {
                    *a = (*a + p - c * b % p) % p;
                }
                for (a, b) in e.iter_mut().zip(pe) {
                    *a = (*a + p - c * b % p) % p;
                }
            }
        }
        match (0..width).find(|&i| v[i] != 0) {
            None => out.push(e),
            Some(piv) => {
                let s = inv(v[piv], p);
                v.iter_mut().for_each(|x| *x = *x * s % p);
                e.iter_mut().for_each(|x| *x = *x * s % p);
                pivots.push((piv, v, e));
            }
        }
    }
    out
}

pub struct RingOracle {
    pub p: u64,
    cells: Vec<Vec<(VertexSubset, VertexSubset)>>,
    index: Vec<HashMap<(VertexSubset, VertexSubset), usize>>,
    faces: HashSet<VertexSubset>,
    /// Cocycles representing a basis of `H^n`, per degree.
    pub reps: Vec<Vec<Vector>>,
    coboundaries: Vec<Echelon>,
}

fn odd(n: usize) -> bool {
    n % 2 == 1
}

impl RingOracle {
    pub fn new(k: &SimplicialComplex, p: u64) -> Self {
        let m = k.m();
        let faces: HashSet<VertexSubset> = k.faces().into_iter().collect();
        let top = 2 * m + 1;
        let mut cells = vec![Vec::new(); top + 2];
        for &sigma in &faces {
            for omega in VertexSubset::full(m).difference(sigma).subsets() {
                cells[2 * sigma.len() + omega.len()].push((sigma, omega));
            }
        }
        for c in cells.iter_mut() {
            c.sort();
        }
        let index: Vec<HashMap<_, _>> =
            cells.iter().map(|c| c.iter().enumerate().map(|(i, x)| (*x, i)).collect()).collect();
        let mut oracle = RingOracle { p, cells, index, faces, reps: Vec::new(), coboundaries: Vec::new() };

        let n_deg = oracle.cells.len() - 1;
        let delta_images: Vec<Vec<Vector>> = (0..n_deg)
            .map(|n| oracle.cells[n].iter().map(|&(s, w)| oracle.delta_of(n, s, w)).collect())
            .collect();
        for n in 0..n_deg {
            let mut b = Echelon::new(p);
            if n > 0 {
                for v in &delta_images[n - 1] {
                    b.insert(v);
                }
            }
            let z = kernel(&delta_images[n], p);
            let mut span = Echelon::new(p);
            for v in &b.rows {
                span.insert(&v.1);
            }
            let reps: Vec<Vector> = z
                .into_iter()
                .filter(|v| span.insert(v))
                .collect();
            oracle.reps.push(reps);
            oracle.coboundaries.push(b);
        }
        oracle
    }

    /// `δ(u_ω v_σ) = Σ_{j∈ω, σ∪j ∈ K} (-1)^{#{i∈ω : i<j}} u_{ω∖j} v_{σ∪j}`.
    fn delta_of(&self, n: usize, sigma: VertexSubset, omega: VertexSubset) -> Vector {
        let p = self.p;
        let mut out = vec![0; self.cells[n + 1].len()];
        for j in omega.iter() {
            let s2 = sigma.with(j);
            if !self.faces.contains(&s2) {
                continue;
            }
            let i = self.index[n + 1][&(s2, omega.without(j))];
            let before = omega.iter().filter(|&x| x < j).count();
            out[i] = (out[i] + if odd(before) { p - 1 } else { 1 }) % p;
        }
        out
    }

    /// Product of cochains of degrees `a` and `b`.
    pub fn multiply(&self, a: usize, x: &[u64], b: usize, y: &[u64]) -> Vector {
        let p = self.p;
        let n = a + b;
        let mut out = vec![0; self.cells.get(n).map_or(0, Vec::len)];
        for (ix, cx) in x.iter().enumerate() {
            if *cx == 0 {
                continue;
            }
            let (s1, w1) = self.cells[a][ix];
            for (iy, cy) in y.iter().enumerate() {
                if *cy == 0 {
                    continue;
                }
                let (s2, w2) = self.cells[b][iy];
                let all = [s1, w1, s2, w2];
                let total: usize = all.iter().map(|s| s.len()).sum();
                let union = all.iter().fold(VertexSubset::EMPTY, |u, s| u.union(*s));
                if union.len() != total || !self.faces.contains(&s1.union(s2)) {
                    continue;
                }
                let inversions: usize = w2.iter().map(|j| w1.iter().filter(|&i| i > j).count()).sum();
                let i = self.index[n][&(s1.union(s2), w1.union(w2))];
                let v = cx * cy % p;
                out[i] = (out[i] + if odd(inversions) { p - v } else { v }) % p;
            }
        }
        out
    }

    pub fn betti(&self) -> Vec<usize> {
        let mut b: Vec<usize> = self.reps.iter().map(Vec::len).collect();
        while b.len() > 1 && b.last() == Some(&0) {
            b.pop();
        }
        b
    }

    /// `dim (H^+ · H^+)_n` for every degree `n`.
    pub fn decomposables(&self) -> Vec<usize> {
        (0..self.reps.len())
            .map(|n| {
                let mut span = Echelon::new(self.p);
                for v in &self.coboundaries[n].rows {
                    span.insert(&v.1);
                }
                let base = span.rank();
                for a in 1..n {
                    let b = n - a;
                    for x in &self.reps[a] {
                        for y in &self.reps[b] {
                            span.insert(&self.multiply(a, x, b, y));
                        }
                    }
                }
                span.rank() - base
            })
            .collect()
    }
}

/// `dim (H^+ · H^+)_n` from a product table's coordinates.
pub fn table_decomposables(degree_sizes: &[usize], products: &[(usize, Vec<u64>)], p: u64) -> Vec<usize> {
    let mut spans: Vec<Echelon> = degree_sizes.iter().map(|_| Echelon::new(p)).collect();
    for (deg, coords) in products {
        spans[*deg].insert(coords);
    }
    spans.iter().map(Echelon::rank).collect()
}
