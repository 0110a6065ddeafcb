//! Cellular chain models of the moment-angle complex `Z_K` (pairs `(D², S¹)`)
//! and the real moment-angle complex `R_K` (pairs `(D¹, S⁰)`).
//!
//! Both are products of the standard cell structures on the disk factors,
//! with the Koszul sign `(-1)^{degree of the preceding factors}`. They share no
//! code with the Hochster computation and serve as its oracle.

use std::collections::HashMap;
use std::hash::Hash;

use crate::complex::{SimplicialComplex, VertexSubset};
use crate::error::{Error, Result};
use crate::linalg::chain::ChainComplex;
use crate::linalg::homology::HomologyProfile;
use crate::linalg::matrix::IntMatrix;
use crate::linalg::Coefficients;

pub const ZK_MAX_VERTICES: usize = 14;
pub const RK_MAX_VERTICES: usize = 20;

/// The cell `∏_{i∈σ} e²_i × ∏_{i∈ω} e¹_i` (base point in the other factors).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZkCell {
    pub sigma: VertexSubset,
    pub omega: VertexSubset,
}

impl ZkCell {
    pub fn dimension(&self) -> usize {
        2 * self.sigma.len() + self.omega.len()
    }
}

/// The cell `∏_{i∈σ} e¹_i × ∏_{i∉σ} {ε_i}` with `ε_i = +1` exactly on `plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RkCell {
    pub sigma: VertexSubset,
    pub plus: VertexSubset,
}

impl RkCell {
    pub fn dimension(&self) -> usize {
        self.sigma.len()
    }

    /// Sign of coordinate `i ∉ σ`.
    pub fn sign(&self, i: usize) -> Option<i8> {
        if self.sigma.contains(i) {
            None
        } else if self.plus.contains(i) {
            Some(1)
        } else {
            Some(-1)
        }
    }
}

/// Cells grouped by dimension, and the integral cellular chain complex on them.
#[derive(Clone, Debug)]
pub struct CellularModel<C> {
    pub cells: Vec<Vec<C>>,
    pub chain: ChainComplex,
}

impl<C> CellularModel<C> {
    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn betti(&self, coeffs: Coefficients) -> Result<HomologyProfile> {
        betti(&self.chain, coeffs)
    }
}

fn assemble<C: Copy + Eq + Hash>(
    cells: Vec<Vec<C>>,
    boundary: impl Fn(&C, &mut dyn FnMut(C, i64)),
) -> CellularModel<C> {
    let index: Vec<HashMap<C, usize>> = cells
        .iter()
        .map(|cs| cs.iter().enumerate().map(|(i, c)| (*c, i)).collect())
        .collect();
    let mut boundaries = Vec::with_capacity(cells.len());
    for (d, cs) in cells.iter().enumerate() {
        if d == 0 {
            boundaries.push(IntMatrix::zeros(0, cs.len()));
            continue;
        }
        let mut triplets = Vec::new();
        for (col, c) in cs.iter().enumerate() {
            boundary(c, &mut |target, coef| triplets.push((index[d - 1][&target], col, coef)));
        }
        boundaries.push(IntMatrix::from_triplets(cells[d - 1].len(), cs.len(), &triplets));
    }
    CellularModel { cells, chain: ChainComplex::new(0, boundaries) }
}

fn check_cap(m: usize, cap: usize) -> Result<()> {
    if m > cap {
        return Err(Error::TooManyVertices { m, cap });
    }
    Ok(())
}

fn sign(n: usize) -> i64 {
    if n.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn zk_chain_complex(k: &SimplicialComplex) -> Result<CellularModel<ZkCell>> {
    zk_chain_complex_capped(k, ZK_MAX_VERTICES)
}

/// `d(σ, ω) = Σ_{j∈σ} (-1)^{#{i∈ω : i<j}} (σ∖j, ω∪j)`.
pub fn zk_chain_complex_capped(k: &SimplicialComplex, cap: usize) -> Result<CellularModel<ZkCell>> {
    check_cap(k.m(), cap)?;
    let full = VertexSubset::full(k.m());
    let top = (2 * (k.dim() + 1)).max(0) as usize + k.m();
    let mut cells: Vec<Vec<ZkCell>> = vec![Vec::new(); top + 1];
    for sigma in k.faces() {
        for omega in full.difference(sigma).subsets() {
            let c = ZkCell { sigma, omega };
            cells[c.dimension()].push(c);
        }
    }
    trim_top(&mut cells);
    Ok(assemble(cells, |c, emit| {
        for j in c.sigma.iter() {
            let coef = sign(c.omega.rank_of(j));
            emit(ZkCell { sigma: c.sigma.without(j), omega: c.omega.with(j) }, coef);
        }
    }))
}

pub fn rk_chain_complex(k: &SimplicialComplex) -> Result<CellularModel<RkCell>> {
    rk_chain_complex_capped(k, RK_MAX_VERTICES)
}

/// `d(σ, ε) = Σ_{j∈σ} (-1)^{#{i∈σ : i<j}} [(σ∖j, ε ∪ {j↦+}) − (σ∖j, ε ∪ {j↦−})]`.
pub fn rk_chain_complex_capped(k: &SimplicialComplex, cap: usize) -> Result<CellularModel<RkCell>> {
    check_cap(k.m(), cap)?;
    let full = VertexSubset::full(k.m());
    let mut cells: Vec<Vec<RkCell>> = vec![Vec::new(); (k.dim() + 2).max(1) as usize];
    for sigma in k.faces() {
        for plus in full.difference(sigma).subsets() {
            cells[sigma.len()].push(RkCell { sigma, plus });
        }
    }
    trim_top(&mut cells);
    Ok(assemble(cells, |c, emit| {
        for j in c.sigma.iter() {
            let coef = sign(c.sigma.rank_of(j));
            let sigma = c.sigma.without(j);
            emit(RkCell { sigma, plus: c.plus.with(j) }, coef);
            emit(RkCell { sigma, plus: c.plus }, -coef);
        }
    }))
}

fn trim_top<C>(cells: &mut Vec<Vec<C>>) {
    while cells.len() > 1 && cells.last().is_some_and(Vec::is_empty) {
        cells.pop();
    }
}

/// Unreduced homology of a cellular model.
pub fn betti(chain: &ChainComplex, coeffs: Coefficients) -> Result<HomologyProfile> {
    chain.homology(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::generate::{cone, disjoint_points, polygon, simplex, stacked_sphere};
    use crate::hochster::hochster_table;

    fn zk_betti(k: &SimplicialComplex) -> Vec<usize> {
        zk_chain_complex(k).unwrap().betti(Coefficients::Rat).unwrap().ranks
    }

    fn rk_betti(k: &SimplicialComplex) -> Vec<usize> {
        rk_chain_complex(k).unwrap().betti(Coefficients::Rat).unwrap().ranks
    }

    #[test]
    fn differentials_square_to_zero() {
        for k in [polygon(5).unwrap(), stacked_sphere(2, 2).unwrap(), cone(&polygon(4).unwrap()).unwrap()] {
            assert!(zk_chain_complex(&k).unwrap().chain.is_complex());
            assert!(rk_chain_complex(&k).unwrap().chain.is_complex());
        }
    }

    #[test]
    fn small_cases() {
        assert_eq!(zk_betti(&simplex(0).unwrap()), vec![1]);
        assert_eq!(zk_betti(&simplex(2).unwrap()), vec![1]);
        assert_eq!(zk_betti(&disjoint_points(2).unwrap()), vec![1, 0, 0, 1]);
        assert_eq!(zk_betti(&polygon(4).unwrap()), vec![1, 0, 0, 2, 0, 0, 1]);
        assert_eq!(rk_betti(&simplex(0).unwrap()), vec![1]);
        assert_eq!(rk_betti(&disjoint_points(2).unwrap()), vec![1, 1]);
        assert_eq!(zk_betti(&SimplicialComplex::void_simplex()), vec![1]);
    }

    #[test]
    fn polygon_genus() {
        for m in 4..=7usize {
            let g = 1 + (m - 4) * (1 << (m - 3));
            assert_eq!(rk_betti(&polygon(m).unwrap()), vec![1, 2 * g, 1], "m = {m}");
        }
    }

    #[test]
    fn zk_matches_hochster() {
        for k in [polygon(5).unwrap(), stacked_sphere(2, 1).unwrap(), disjoint_points(3).unwrap()] {
            for c in [Coefficients::Rat, Coefficients::Prime(2)] {
                let h = hochster_table(&k, c).unwrap().betti();
                assert_eq!(zk_chain_complex(&k).unwrap().betti(c).unwrap().ranks, h);
            }
        }
    }

    #[test]
    fn rk_cone_invariance() {
        let k = polygon(5).unwrap();
        assert_eq!(rk_betti(&cone(&k).unwrap()), rk_betti(&k));
    }

    #[test]
    fn caps() {
        let k = disjoint_points(15).unwrap();
        assert!(matches!(zk_chain_complex(&k), Err(Error::TooManyVertices { m: 15, cap: 14 })));
        assert!(rk_chain_complex(&k).is_ok());
    }

    #[test]
    fn cell_counts() {
        let k = polygon(4).unwrap();
        let zk = zk_chain_complex(&k).unwrap();
        let direct: usize = k.faces().iter().map(|s| 1usize << (4 - s.len())).sum();
        assert_eq!(zk.cell_count(), direct);
        let rk = rk_chain_complex(&k).unwrap();
        assert_eq!(rk.cell_count(), direct);
    }
}
